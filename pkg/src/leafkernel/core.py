"""Forward and inverse leaf functions on the whole real line.

sleaf_n is evaluated by inverting the arc leaf integral on the principal
quarter-branch [0, pi_n/2] and extending with

    sleaf(-l) = -sleaf(l),   sleaf(pi_n - l) = sleaf(l),   period 2*pi_n.

cleaf_n is the solution of the same ODE with r(0) = 1, r'(0) = 0, which by
uniqueness is sleaf_n(pi_n/2 - l).  For n = 3 this agrees with

    s^2 + c^2 + 2 s^2 c^2 = 1

and for n = 2 with the lemniscate relation s^2 + c^2 + s^2 c^2 = 1.
"""

import functools
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ArgumentRangeError, DomainError
from .numerics import (
    invert_increasing,
    leaf_integral,
    leaf_tail_integral,
    period_constants,
)

__all__ = [
    "REDUCTION_LIMIT",
    "LeafArg",
    "LeafValue",
    "Case",
    "BranchCase",
    "reduce_arg",
    "sleaf",
    "cleaf",
    "arcsleaf",
    "sign_sleaf_prime",
    "sign_cleaf_prime",
    "classify",
]

REDUCTION_LIMIT = 1e6
# root tolerance relative to the bracket width; keeps tiny arguments exact
_ROOT_RTOL = 1e-16


@dataclass(frozen=True)
class LeafArg:
    """Canonical form of an argument l.

    ``l == (-1 if negated else 1) * (residue + branch_m * 2 * pi_n)`` with
    ``residue`` in [-pi_n/2, 3*pi_n/2).
    """

    l: float
    n: int
    residue: float
    branch_m: int
    negated: bool

    def reconstruct(self) -> float:
        value = self.residue + self.branch_m * period_constants(self.n).period
        return -value if self.negated else value


@dataclass(frozen=True)
class LeafValue:
    """A function value ``r`` with its derivative ``dr`` = dr/dl."""

    r: float
    dr: float
    n: int

    def energy_residual(self) -> float:
        """dr^2 + r^(2n) - 1, zero up to rounding."""
        return self.dr * self.dr + self.r ** (2 * self.n) - 1.0


class Case(str, Enum):
    """Which sign case of an addition formula applies."""

    I = "i"  # noqa: E741
    II = "ii"


@dataclass(frozen=True)
class BranchCase:
    """Derivative signs at (l1, l2) and the addition-formula cases they select.

    ``sleaf_case`` is (i) when sleaf' has the same sign at l1 and l2;
    ``cleaf_case`` is (i) when cleaf'(l1) and sleaf'(l2) have opposite signs.
    """

    s_sign_l1: int
    s_sign_l2: int
    c_sign_l1: int
    sleaf_case: Case
    cleaf_case: Case


def _check_order(n):
    if int(n) != n or n < 1:
        raise DomainError(f"leaf order n must be an integer >= 1, got {n}")
    return int(n)


def reduce_arg(n: int, l: float) -> LeafArg:
    """Reduce ``l`` to a residue in [-pi_n/2, 3*pi_n/2) and a period count."""
    n = _check_order(n)
    if not math.isfinite(l) or abs(l) > REDUCTION_LIMIT:
        raise ArgumentRangeError(
            f"|l| must be finite and <= {REDUCTION_LIMIT:g} for accurate reduction, got {l}"
        )
    consts = period_constants(n)
    negated = l < 0
    a = -l if negated else l
    m = math.floor((a + consts.half_pi_n) / consts.period)
    residue = a - m * consts.period
    # rounding can leave the residue a hair outside the window
    if residue >= 3 * consts.half_pi_n:
        residue -= consts.period
        m += 1
    elif residue < -consts.half_pi_n:
        residue += consts.period
        m -= 1
    return LeafArg(l=l, n=n, residue=residue, branch_m=m, negated=negated)


@functools.lru_cache(maxsize=4096)
def _principal(n, a):
    """sleaf_n and its derivative for a in [0, pi_n/2]."""
    half = period_constants(n).half_pi_n
    if a <= 0.0:
        return 0.0, 1.0
    if a <= 0.5 * half:
        # arcsleaf(r) >= r, so r <= a; doubled to stay clear of rounding
        r_hi = min(2.0 * a, 1.0)
        r = invert_increasing(lambda x: leaf_integral(n, x), a, 0.0, r_hi, max(_ROOT_RTOL * r_hi, 1e-300))
        return r, math.sqrt(1.0 - r ** (2 * n))
    # upper half: solve for q = 1 - r through the tail integral, so that
    # 1 - r and the derivative keep full relative precision near the crest
    delta = max(half - a, 0.0)
    if delta == 0.0:
        return 1.0, 0.0
    # tail(q) >= sqrt(2q/n), so the root lies below n*delta^2/2; doubled
    q_hi = min(1.0, n * delta * delta)
    q = invert_increasing(
        lambda x: leaf_tail_integral(n, x), delta, 0.0, q_hi, max(_ROOT_RTOL * q_hi, 1e-300)
    )
    dr = math.sqrt(-math.expm1(2 * n * math.log1p(-q)))
    return 1.0 - q, dr


def _sleaf_reduced(arg):
    half = period_constants(arg.n).half_pi_n
    x = arg.residue
    if x <= half:
        r, dr = _principal(arg.n, abs(x))
        if x < 0:
            r = -r
    else:
        # reflection about the crest: sleaf(x) = sleaf(pi_n - x)
        y = 2.0 * half - x
        r, dr = _principal(arg.n, abs(y))
        if y < 0:
            r = -r
        dr = -dr
    if arg.negated:
        r = -r
    return LeafValue(r=r, dr=dr + 0.0, n=arg.n)


def sleaf(n: int, l: float) -> LeafValue:
    """Evaluate sleaf_n(l) and its derivative."""
    return _sleaf_reduced(reduce_arg(n, l))


def cleaf(n: int, l: float) -> LeafValue:
    """Evaluate cleaf_n(l) = sleaf_n(pi_n/2 - l) and its derivative."""
    n = _check_order(n)
    if not math.isfinite(l) or abs(l) > REDUCTION_LIMIT:
        raise ArgumentRangeError(
            f"|l| must be finite and <= {REDUCTION_LIMIT:g} for accurate reduction, got {l}"
        )
    # cleaf is even: fold first so that cleaf(-l) == cleaf(l) bit for bit
    shifted = sleaf(n, period_constants(n).half_pi_n - abs(l))
    dr = -shifted.dr if l >= 0 else shifted.dr
    return LeafValue(r=shifted.r, dr=dr + 0.0, n=n)


def arcsleaf(n: int, r: float) -> float:
    """Principal value of the inverse of sleaf_n, in [-pi_n/2, pi_n/2]."""
    if not -1.0 <= r <= 1.0:
        raise DomainError(f"arcsleaf needs -1 <= r <= 1, got {r}")
    value = leaf_integral(n, abs(r))
    return -value if r < 0 else value


def sign_sleaf_prime(l: float, n: int = 3) -> int:
    """Sign of d/dl sleaf_n(l).

    +1 on [(2m - 1/2) pi_n, (2m + 1/2) pi_n), -1 on the remaining
    half-open intervals.
    """
    pi_n = period_constants(n).pi_n
    reduce_arg(n, l)  # range check only
    return 1 if math.floor(l / pi_n + 0.5) % 2 == 0 else -1


def sign_cleaf_prime(l: float, n: int = 3) -> int:
    """Sign of d/dl cleaf_n(l).

    -1 on [2k pi_n, (2k + 1) pi_n), +1 on [(2k + 1) pi_n, (2k + 2) pi_n).
    """
    pi_n = period_constants(n).pi_n
    reduce_arg(n, l)
    return -1 if math.floor(l / pi_n) % 2 == 0 else 1


def classify(l1: float, l2: float, n: int = 3) -> BranchCase:
    """Select the addition-formula cases for the pair (l1, l2)."""
    s1 = sign_sleaf_prime(l1, n)
    s2 = sign_sleaf_prime(l2, n)
    c1 = sign_cleaf_prime(l1, n)
    return BranchCase(
        s_sign_l1=s1,
        s_sign_l2=s2,
        c_sign_l1=c1,
        sleaf_case=Case.I if s1 == s2 else Case.II,
        cleaf_case=Case.I if c1 != s2 else Case.II,
    )
