"""Weak/strong nonclassical steering, Gaussian EPR steerability and entanglement.

All λ quantities refer to the conditional variances of mode A after a
quadrature measurement on mode B (the Reid variances): WNS asks one of them to
beat the vacuum, SNS asks both, EPR steering asks their product to beat 1/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from domain.errors import InconsistentInvariantsError, InternalConsistencyError, InvalidInputError, UnphysicalStateError
from domain.symplectic import (
    OMEGA_1,
    VACUUM_VARIANCE,
    CanonicalParams,
    GaussianState,
    SymplecticInvariants,
    canonical_params,
    check_physical,
    symplectic_form,
    symplectic_invariants,
)
from infra.enumerators.steering import Direction
from settings import cfg, resolve_tol

EPR_THRESHOLD = VACUUM_VARIANCE**2
_PARTIAL_TRANSPOSE = np.diag([1.0, 1.0, 1.0, -1.0])


@dataclass(frozen=True, slots=True)
class SteeringReport:
    """Classification of a two-mode state; λ fields are for the B → A direction."""

    lambda_wns: float
    lambda_sns: float
    epr_product: float
    wns: bool
    sns: bool
    epr_b_to_a: bool
    epr_a_to_b: bool
    entangled: bool
    marginal: bool
    direction: Direction = Direction.B_TO_A


def _check_b(canon: CanonicalParams) -> None:
    if canon.b <= 0:
        raise InvalidInputError("b must be positive")


def classify_wns(canon: CanonicalParams) -> tuple[float, bool]:
    """Weak nonclassical steering: a − c²/b < 1/2 with c = max(|c1|, |c2|)."""
    _check_b(canon)
    lam = canon.a - canon.c**2 / canon.b
    return lam, lam < VACUUM_VARIANCE


def classify_sns(canon: CanonicalParams) -> tuple[float, bool]:
    """Strong nonclassical steering: a − c′²/b < 1/2 with c′ = min(|c1|, |c2|)."""
    _check_b(canon)
    lam = canon.a - canon.c_prime**2 / canon.b
    return lam, lam < VACUUM_VARIANCE


def classify_from_invariants(inv: SymplecticInvariants, tol: float | None = None) -> tuple[float, float]:
    """Evaluate the WNS (minus branch) and SNS (plus branch) λ directly from the invariants."""
    tol = resolve_tol(tol)
    if inv.I1 <= 0 or inv.I2 <= 0:
        raise InconsistentInvariantsError("I1 and I2 must be positive")
    s = inv.I1 * inv.I2 - inv.I3**2 + inv.I4
    radicand = s * s - 4.0 * inv.I1 * inv.I2 * inv.I4
    if radicand < 0:
        if radicand < -tol * max(1.0, s * s):
            raise InconsistentInvariantsError(f"negative radicand {radicand:.3e} for invariants {inv.as_tuple()}")
        radicand = 0.0
    root = math.sqrt(radicand)
    denom = 2.0 * inv.I2 * math.sqrt(inv.I1)
    return (s - root) / denom, (s + root) / denom


def epr_product(canon: CanonicalParams, direction: Direction = Direction.B_TO_A) -> float:
    """Product of the two Reid variances; EPR steering iff it is below 1/4."""
    a, b = (canon.a, canon.b) if Direction(direction) is Direction.B_TO_A else (canon.b, canon.a)
    if b <= 0:
        raise InvalidInputError("steering mode parameter must be positive")
    return (a - canon.c1**2 / b) * (a - canon.c2**2 / b)


def _epr_min_eigenvalue(state: GaussianState, direction: Direction) -> float:
    zero = np.zeros((2, 2))
    if direction is Direction.B_TO_A:
        omega = np.block([[OMEGA_1, zero], [zero, zero]])
    else:
        omega = np.block([[zero, zero], [zero, OMEGA_1]])
    return float(np.linalg.eigvalsh(state.cm + 0.5j * omega)[0])


def epr_steerable(
    state: GaussianState,
    direction: Direction = Direction.B_TO_A,
    tol: float | None = None,
    *,
    cross_check: bool | None = None,
) -> bool:
    """Gaussian EPR steerability in the given direction.

    Decided on the canonical form, (a − c1²/b)(a − c2²/b) < 1/4, and optionally
    confirmed by the violation of σ + (i/2)(ω_A ⊕ 0_B) ≥ 0.
    """
    tol = resolve_tol(tol)
    direction = Direction(direction)
    canon = canonical_params(symplectic_invariants(state), tol)
    steerable = epr_product(canon, direction) < EPR_THRESHOLD
    if cfg.CROSS_CHECK if cross_check is None else cross_check:
        eig = _epr_min_eigenvalue(state, direction)
        if abs(eig) > tol and (eig < 0) != steerable:
            raise InternalConsistencyError(
                f"EPR criteria disagree ({direction.value}): product test {steerable}, least eigenvalue {eig:.3e}"
            )
    return steerable


def is_entangled(state: GaussianState, tol: float | None = None) -> bool:
    """PPT test, ΛσΛ + (i/2)Ω has a negative eigenvalue; exact for two-mode Gaussian states."""
    tol = resolve_tol(tol)
    if state.n_modes != 2:
        raise InvalidInputError("entanglement test requires a two-mode state")
    transposed = _PARTIAL_TRANSPOSE @ state.cm @ _PARTIAL_TRANSPOSE
    return float(np.linalg.eigvalsh(transposed + 0.5j * symplectic_form(2))[0]) < -tol


def assess(state: GaussianState, tol: float | None = None, *, cross_check: bool | None = None) -> SteeringReport:
    """Run every classifier on a physical state without checking the hierarchy."""
    tol = resolve_tol(tol)
    canon = canonical_params(symplectic_invariants(state), tol)
    lambda_wns, wns = classify_wns(canon)
    lambda_sns, sns = classify_sns(canon)
    product = epr_product(canon)
    marginal = (
        abs(lambda_wns - VACUUM_VARIANCE) < tol
        or abs(lambda_sns - VACUUM_VARIANCE) < tol
        or abs(product - EPR_THRESHOLD) < tol
    )
    return SteeringReport(
        lambda_wns=lambda_wns,
        lambda_sns=lambda_sns,
        epr_product=product,
        wns=wns,
        sns=sns,
        epr_b_to_a=epr_steerable(state, Direction.B_TO_A, tol, cross_check=cross_check),
        epr_a_to_b=epr_steerable(state, Direction.A_TO_B, tol, cross_check=cross_check),
        entangled=is_entangled(state, tol),
        marginal=marginal,
    )


def hierarchy_violations(report: SteeringReport) -> list[str]:
    """Names of the broken implications among SNS ⇒ WNS, SNS ⇒ EPR(B→A) and EPR(B→A) ⇒ entangled."""
    violations = []
    if report.sns and not report.wns:
        violations.append("SNS => WNS")
    if report.sns and not report.epr_b_to_a:
        violations.append("SNS => EPR(B->A)")
    if report.epr_b_to_a and not report.entangled:
        violations.append("EPR(B->A) => entangled")
    return violations


def hierarchy_report(
    state: GaussianState, tol: float | None = None, *, cross_check: bool | None = None
) -> SteeringReport:
    """Aggregate all classifiers and enforce the steering hierarchy.

    Marginal states, within ``tol`` of a threshold, are reported without the
    hierarchy check.
    """
    physicality = check_physical(state, tol)
    if not physicality.physical:
        raise UnphysicalStateError(physicality)
    report = assess(state, tol, cross_check=cross_check)
    violations = hierarchy_violations(report)
    if violations:
        if report.marginal:
            logger.debug(f"Marginal state, ignoring hierarchy violations {violations}")
        else:
            raise InternalConsistencyError(f"steering hierarchy violated: {', '.join(violations)}")
    return report
