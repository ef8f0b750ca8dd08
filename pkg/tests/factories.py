import math

from domain.symplectic import CanonicalParams, GaussianState
from domain.tmst import TmstSpec, tmst_params

FIXTURE = CanonicalParams(a=13.9, b=13.9, c1=4.6, c2=-13.7)
FIXTURE_LAMBDA_WNS = 13.9 - 13.7**2 / 13.9
FIXTURE_LAMBDA_SNS = 13.9 - 4.6**2 / 13.9


def tmst_state(n_a: float, n_b: float, r: float) -> GaussianState:
    return tmst_params(TmstSpec(n_a=n_a, n_b=n_b, r=r)).to_state()


def tmsv(r: float) -> GaussianState:
    return tmst_state(0.0, 0.0, r)


def low_discord(n: int) -> CanonicalParams:
    return CanonicalParams(
        a=(n + 2) / (2 * n + 1),
        b=float(n),
        c1=(2 * n) ** -0.5,
        c2=-math.sqrt(2 * n / (2 * n + 1)),
    )
