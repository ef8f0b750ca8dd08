from enum import Enum


class Direction(str, Enum):
    """Steering direction: which mode is measured and which one is steered.

    B_TO_A measures mode B and inspects the conditional state of mode A.
    """

    B_TO_A = "b-to-a"
    A_TO_B = "a-to-b"


class QuadratureBranch(str, Enum):
    """Ideal quadrature measurement on mode B of a canonical-form state.

    The branch names the correlation coefficient the measurement exploits,
    USES_C1 leaves diag(a − c1²/b, a) and USES_C2 leaves diag(a, a − c2²/b).
    """

    USES_C1 = "uses-c1"
    USES_C2 = "uses-c2"
