from __future__ import annotations

from typing import Annotated

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from domain.symplectic import CanonicalParams, GaussianState
from domain.tmst import TmstSpec, tmst_params

SYMMETRY_TOL = 1e-9

Row = Annotated[list[float], Field(min_length=4, max_length=4)]


class CanonicalInput(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)
    a: float = Field(gt=0, description="Local variance of mode A")
    b: float = Field(gt=0, description="Local variance of mode B")
    c1: float = Field(description="x-quadrature correlation")
    c2: float = Field(description="p-quadrature correlation")


class TmstInput(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)
    na: float = Field(ge=0, description="Mean thermal photons of mode A")
    nb: float = Field(ge=0, description="Mean thermal photons of mode B")
    r: float = Field(ge=0, description="Two-mode squeezing parameter")


class StateFile(BaseModel):
    """Two-mode Gaussian state given in exactly one of three forms.

    Either a full covariance matrix ``cm`` (with an optional ``mean``), the
    ``canonical`` parameters (a, b, c1, c2) or a ``tmst`` (na, nb, r).
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)
    cm: Annotated[list[Row], Field(min_length=4, max_length=4)] | None = Field(
        default=None, description="4x4 row-major covariance matrix, ordering (x1, p1, x2, p2)"
    )
    mean: Row | None = Field(default=None, description="Optional mean vector, only allowed with cm")
    canonical: CanonicalInput | None = Field(default=None, description="Canonical-form parameters")
    tmst: TmstInput | None = Field(default=None, description="Two-mode squeezed thermal state parameters")

    @model_validator(mode="after")
    def _exactly_one_form(self) -> Self:
        present = [name for name in ("cm", "canonical", "tmst") if getattr(self, name) is not None]
        if len(present) != 1:
            raise ValueError(f"exactly one of cm, canonical, tmst is required, got {present or 'none'}")
        if self.mean is not None and self.cm is None:
            raise ValueError("mean is only allowed together with cm")
        if self.cm is not None:
            cm = np.array(self.cm)
            if not np.allclose(cm, cm.T, rtol=0.0, atol=SYMMETRY_TOL):
                raise ValueError("cm must be symmetric within 1e-9")
        return self

    def to_state(self) -> GaussianState:
        if self.canonical is not None:
            c = self.canonical
            return CanonicalParams(a=c.a, b=c.b, c1=c.c1, c2=c.c2).to_state()
        if self.tmst is not None:
            t = self.tmst
            return tmst_params(TmstSpec(n_a=t.na, n_b=t.nb, r=t.r)).to_state()
        return GaussianState.from_cm(self.cm, self.mean)
