"""Double-angle and addition formulas for sleaf_3 / cleaf_3.

The n = 3 addition formulas come in squared form.  With
s_i = sleaf_3(l_i), c_i = cleaf_3(l_i) and the radicals

    d_i = sqrt(1 - s_i^6),    e_i = sqrt(1 - c_i^6),

    sleaf_3(l1 + l2)^2 = ((s1 d2 +- s2 d1)^2 + (s1^3 s2 - s1 s2^3)^2)
                         / (1 + 4 s1^4 s2^2 + 4 s1^2 s2^4)

    cleaf_3(l1 + l2)^2 = ((c1 d2 -+ s2 e1)^2 + (c1^3 s2 - c1 s2^3)^2)
                         / (1 + 4 s2^4 c1^2 + 4 s2^2 c1^4)

The sign inside the first numerator is picked by which monotone branch
each argument lies on (see :func:`leafkernel.core.classify`).

The second cleaf numerator term is c1^3 s2 - c1 s2^3.  Two other spellings
circulate, s1^3 c2 - s1 c2^3 and s1^3 c2 - s2 c1^3; both disagree with
direct evaluation (see ``CLEAF_SECOND_TERM_VARIANTS`` and the tests), the
form used here follows from cleaf_3(l) = sleaf_3(pi_3/2 - l).

The n = 1 and n = 2 reference formulas (sine addition, lemniscate sl
double angle and addition) run on the same branch machinery and serve as
cross-checks against classical results.
"""

import math
from dataclasses import dataclass, field

from .core import BranchCase, Case, classify, cleaf, sign_sleaf_prime, sleaf

__all__ = [
    "AdditionInput",
    "CLEAF_SECOND_TERM_VARIANTS",
    "sleaf3_double",
    "cleaf3_double",
    "sleaf3_add_squared",
    "sleaf3_add",
    "cleaf3_add_squared",
    "cleaf3_add_squared_variant",
    "addition_g",
    "sin_add",
    "sl_double",
    "sl_add",
]


def _radical(x, n=3):
    """sqrt(1 - x^(2n)) with x clamped to [-1, 1]."""
    x = min(1.0, max(-1.0, x))
    return math.sqrt(max(0.0, 1.0 - x ** (2 * n)))


@dataclass(frozen=True)
class AdditionInput:
    """An argument pair together with the branch case it falls in."""

    l1: float
    l2: float
    case: BranchCase = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "case", classify(self.l1, self.l2, 3))


def sleaf3_double(l: float) -> float:
    """sleaf_3(2l) from sleaf_3(l), sign from the branch containing l."""
    s = sleaf(3, l).r
    value = 2.0 * s * _radical(s) / math.sqrt(1.0 + 8.0 * s**6)
    return value if sign_sleaf_prime(l, 3) > 0 else -value


def cleaf3_double(l: float) -> float:
    """cleaf_3(2l) from cleaf_3(l); valid on every branch."""
    c = cleaf(3, l).r
    c2 = c * c
    return (2.0 * c2 + 2.0 * c2 * c2 - 1.0) / math.sqrt(
        1.0 + 8.0 * c2 + 8.0 * c2**3 - 8.0 * c2**4
    )


def _sleaf_sum_squared(s1, s2, d1, d2, case):
    cross = s1 * d2 + s2 * d1 if case is Case.I else s1 * d2 - s2 * d1
    skew = s1**3 * s2 - s1 * s2**3
    return (cross * cross + skew * skew) / (1.0 + 4.0 * s1**4 * s2**2 + 4.0 * s1**2 * s2**4)


def sleaf3_add_squared(l1: float, l2: float) -> float:
    """sleaf_3(l1 + l2)^2 from the values at l1 and l2."""
    args = AdditionInput(l1, l2)
    s1 = sleaf(3, l1).r
    s2 = sleaf(3, l2).r
    return _sleaf_sum_squared(s1, s2, _radical(s1), _radical(s2), args.case.sleaf_case)


def sleaf3_add(l1: float, l2: float) -> float:
    """Signed sleaf_3(l1 + l2).

    The squared formula fixes only the magnitude; the sign is read off a
    direct evaluation at l1 + l2.
    """
    magnitude = math.sqrt(max(0.0, sleaf3_add_squared(l1, l2)))
    return magnitude if sleaf(3, l1 + l2).r >= 0 else -magnitude


# candidate forms of the second cleaf numerator term, keyed by name;
# arguments are (s1, s2, c1, c2)
CLEAF_SECOND_TERM_VARIANTS = {
    "derived": lambda s1, s2, c1, c2: c1**3 * s2 - c1 * s2**3,
    "general": lambda s1, s2, c1, c2: s1**3 * c2 - s1 * c2**3,
    "summary": lambda s1, s2, c1, c2: s1**3 * c2 - s2 * c1**3,
}


def cleaf3_add_squared_variant(l1: float, l2: float, variant: str) -> float:
    """cleaf_3(l1 + l2)^2 using one of ``CLEAF_SECOND_TERM_VARIANTS``.

    Only ``"derived"`` reproduces direct evaluation; the others are kept so
    the comparison stays reproducible.
    """
    second = CLEAF_SECOND_TERM_VARIANTS[variant]
    case = classify(l1, l2, 3).cleaf_case
    s1 = sleaf(3, l1).r
    s2 = sleaf(3, l2).r
    c1 = cleaf(3, l1).r
    c2 = cleaf(3, l2).r
    d2 = _radical(s2)
    e1 = _radical(c1)
    cross = c1 * d2 - s2 * e1 if case is Case.I else c1 * d2 + s2 * e1
    skew = second(s1, s2, c1, c2)
    return (cross * cross + skew * skew) / (1.0 + 4.0 * s2**4 * c1**2 + 4.0 * s2**2 * c1**4)


def cleaf3_add_squared(l1: float, l2: float) -> float:
    """cleaf_3(l1 + l2)^2 from sleaf_3 and cleaf_3 at l1 and l2."""
    return cleaf3_add_squared_variant(l1, l2, "derived")


def addition_g(l1: float, l2: float) -> float:
    """The non-negative root g of the general sleaf_3 addition relation.

    Uses the signed derivatives directly, so no case split is needed;
    g(l1, l2) = |sleaf_3(l1 + l2)|.
    """
    v1 = sleaf(3, l1)
    v2 = sleaf(3, l2)
    s1, s2 = v1.r, v2.r
    cross = s1 * v2.dr + s2 * v1.dr
    skew = s1**3 * s2 - s1 * s2**3
    g2 = (cross * cross + skew * skew) / (1.0 + 4.0 * s1**4 * s2**2 + 4.0 * s1**2 * s2**4)
    return math.sqrt(g2)


def sin_add(l1: float, l2: float) -> float:
    """sin(l1 + l2) from the n = 1 leaf functions."""
    return sleaf(1, l1).r * cleaf(1, l2).r + sleaf(1, l2).r * cleaf(1, l1).r


def _signed_sl_radical(l):
    return sign_sleaf_prime(l, 2) * _radical(sleaf(2, l).r, 2)


def sl_double(l: float) -> float:
    """Lemniscate sine sl(2l) from sl(l)."""
    s = sleaf(2, l).r
    return 2.0 * s * _signed_sl_radical(l) / (1.0 + s**4)


def sl_add(l1: float, l2: float) -> float:
    """Lemniscate sine sl(l1 + l2) from sl(l1), sl(l2)."""
    s1 = sleaf(2, l1).r
    s2 = sleaf(2, l2).r
    return (s1 * _signed_sl_radical(l2) + s2 * _signed_sl_radical(l1)) / (1.0 + s1 * s1 * s2 * s2)
