from __future__ import annotations

import json
import math
from typing import Any

from pydantic import BaseModel, Field

from settings import VERSION


def round_significant(value: Any, digits: int) -> Any:
    """Round every float in a JSON-like structure to ``digits`` significant digits."""
    match value:
        case bool() | int() | str() | None:
            return value
        case float():
            return float(f"{value:.{digits}g}") if math.isfinite(value) else value
        case dict():
            return {key: round_significant(item, digits) for key, item in value.items()}
        case list() | tuple():
            return [round_significant(item, digits) for item in value]
    return value


class ReportModel(BaseModel):
    version: str = Field(default=VERSION, description="Tool version that produced the document")

    def to_json(self, digits: int) -> str:
        """Serialize with floats rounded to ``digits`` significant digits, keys in declaration order."""
        return json.dumps(round_significant(self.model_dump(mode="json"), digits), indent=2)


class Physicality(BaseModel):
    physical: bool = Field(description="Symmetric and satisfying the uncertainty relation")
    symmetric: bool = Field(description="CM symmetric within tolerance")
    ur_satisfied: bool = Field(description="Least eigenvalue of cm + (i/2)Ω above -tol")
    min_ur_eigenvalue: float = Field(description="Least eigenvalue of cm + (i/2)Ω")


class Canonical(BaseModel):
    a: float
    b: float
    c1: float
    c2: float


class Invariants(BaseModel):
    I1: float = Field(description="det A")  # noqa: N815
    I2: float = Field(description="det B")  # noqa: N815
    I3: float = Field(description="det C")  # noqa: N815
    I4: float = Field(description="det of the full CM")  # noqa: N815


class Flags(BaseModel):
    wns: bool = Field(description="Weak nonclassical steering B -> A")
    sns: bool = Field(description="Strong nonclassical steering B -> A")
    epr_b_to_a: bool = Field(description="Gaussian EPR steering B -> A")
    epr_a_to_b: bool = Field(description="Gaussian EPR steering A -> B")
    entangled: bool = Field(description="PPT criterion violated")
    marginal: bool = Field(description="Within tolerance of a classification threshold")


class SymplecticSpectrum(BaseModel):
    nu_minus: float = Field(description="Least symplectic eigenvalue")
    nu_plus: float = Field(description="Largest symplectic eigenvalue")
    ppt_nu_minus: float = Field(description="Least symplectic eigenvalue of the partial transpose")


class Report(ReportModel):
    input: dict[str, Any] = Field(description="Echo of the state file")
    physicality: Physicality
    canonical: Canonical
    invariants: Invariants
    lambda_wns: float = Field(description="a - c^2/b, least conditional variance over all measurements")
    lambda_sns: float = Field(description="a - c'^2/b, variance of the weaker quadrature")
    epr_product: float = Field(description="Product of the two conditional quadrature variances")
    symplectic_spectrum: SymplecticSpectrum
    flags: Flags


class TmstReport(ReportModel):
    na: float
    nb: float
    r: float
    verdict: str = Field(description="'steerable' or 'not steerable'")
    steerable: bool
    vertex_lambda: float = Field(description="Least eigenvalue of the conditional state at the homodyne vertex")
    squeezing_threshold: float = Field(description="Least squeezing r* making the state steerable")
    triangoloid: str | None = Field(default=None, description="Path of the emitted CSV")
    rows: int | None = Field(default=None, description="Number of CSV data rows")


class MeasurementOut(BaseModel):
    mu: float
    mu_s: float
    phi: float


class ScanReport(ReportModel):
    best_lambda: float
    best_measurement: MeasurementOut
    grid: tuple[int, int, int] = Field(description="(n_mu, n_mus, n_phi)")
    mus_min: float
    monotone_in_mus: bool
    lambda_wns: float = Field(description="Analytic quadrature limit")
    gap: float = Field(description="best_lambda - lambda_wns")


class AuditReport(ReportModel):
    seed: int
    count: int
    hierarchy_violations: int
    invariant_mismatches: int
    violations: int = Field(description="Total number of failed checks")


class OffendingState(BaseModel):
    index: int
    cm: list[list[float]]
    violations: list[str]


class ConditionReport(ReportModel):
    input: dict[str, Any]
    measurement: dict[str, Any]
    cm: list[list[float]] = Field(description="Conditional covariance matrix of mode A")
    mu_c: float
    mu_sc: float
    phi_c: float
    lambda_minus: float
    depth: float = Field(description="Nonclassical depth max(0, 1/2 - lambda_minus)")
    nonclassical: bool
