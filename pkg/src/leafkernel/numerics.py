"""Low-level kernels: endpoint-singular quadrature, period constants, inversion.

The arc leaf integral

    arcsleaf_n(r) = int_0^r dt / sqrt(1 - t^(2n))

has an inverse-square-root singularity at t = 1.  A tanh-sinh
(double-exponential) rule clusters its nodes doubly exponentially toward
both endpoints, so the singular case r = 1 needs no special substitution.
To keep the integrand accurate next to the singular endpoint, the rule hands
the integrand the *distance* to each endpoint rather than the node itself.
"""

import math
import threading
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy import optimize

from .errors import BracketError, ConvergenceError, DomainError

__all__ = [
    "QuadratureSpec",
    "PeriodConstants",
    "tanh_sinh",
    "leaf_integral",
    "leaf_tail_integral",
    "period_constants",
    "invert_increasing",
]

ROOT_MAXITER = 200

# Nodes beyond |t| = 4.5 sit within ~1e-61 of an endpoint; for an
# inverse-square-root singularity their contribution is below 1e-29.
_T_MAX = 4.5
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances for :func:`tanh_sinh`.

    ``max_refinements`` is the number of step-halvings allowed after the
    initial unit-step level.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 1e-13
    max_refinements: int = 8

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if int(self.max_refinements) != self.max_refinements or self.max_refinements < 1:
            raise ValueError(
                f"max_refinements must be an integer >= 1, got {self.max_refinements}"
            )


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class PeriodConstants:
    """Half-period constant pi_n / 2 and the derived period 2 * pi_n."""

    n: int
    half_pi_n: float
    pi_n: float
    period: float


class _NodeCache:
    """Tanh-sinh abscissae and weights per refinement level.

    Level 0 holds the nodes t = 0, +-1, ..., level k >= 1 the odd multiples
    of 2**-k.  For each positive node we store the weight and the
    complement 1 - tanh(pi/2 sinh t), computed without cancellation.
    """

    def __init__(self):
        self._levels = []
        self._lock = threading.Lock()

    @staticmethod
    def _build(level):
        if level == 0:
            t = np.arange(1.0, math.floor(_T_MAX) + 1.0)
        else:
            h = 2.0 ** -level
            t = np.arange(h, _T_MAX, 2 * h)
        s = _HALF_PI * np.sinh(t)
        e = np.exp(-2.0 * s)
        complement = 2.0 * e / (1.0 + e)
        weight = _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
        return complement, weight

    def get(self, level):
        if level < len(self._levels):
            return self._levels[level]
        with self._lock:
            while len(self._levels) <= level:
                self._levels.append(self._build(len(self._levels)))
        return self._levels[level]


_nodes = _NodeCache()


def tanh_sinh(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> tuple[float, float]:
    """Integrate over [a, b] with the tanh-sinh rule.

    ``f`` is vectorised and called as ``f(u, v)`` where ``u = t - a`` and
    ``v = b - t`` are the distances of the nodes to the two endpoints.
    Both are accurate to full relative precision close to their endpoint,
    which is what makes singular endpoints tractable.

    Returns:
        ``(value, error_estimate)``.

    Raises:
        ConvergenceError: if the tolerance is not reached within
            ``spec.max_refinements`` halvings.
    """
    width = b - a
    if width == 0.0:
        return 0.0, 0.0
    half = 0.5 * width

    def level_sum(level):
        complement, weight = _nodes.get(level)
        near = half * complement
        far = width - near
        # first block hugs the upper endpoint (v small), second the lower
        values = f(np.concatenate((far, near)), np.concatenate((near, far)))
        k = len(weight)
        total = np.dot(weight, values[:k]) + np.dot(weight, values[k:])
        if level == 0:
            centre = np.asarray([half])
            total += _HALF_PI * f(centre, centre)[0]
        return total

    running = level_sum(0)
    previous = half * running
    error = math.inf
    for level in range(1, spec.max_refinements + 1):
        running += level_sum(level)
        current = half * running * 2.0 ** -level
        error = abs(current - previous)
        if error <= max(spec.abs_tol, spec.rel_tol * abs(current)):
            return float(current), float(error)
        previous = current
    raise ConvergenceError(
        f"tanh-sinh quadrature did not converge in {spec.max_refinements} refinements",
        estimate=float(previous),
        error_bound=float(error),
    )


def _check_order(n):
    if int(n) != n or n < 1:
        raise DomainError(f"leaf order n must be an integer >= 1, got {n}")
    return int(n)


def _scaled(spec, width):
    # both leaf integrands are >= 1, so the result is at least `width`;
    # tightening abs_tol keeps short intervals at full relative accuracy
    if width >= 1.0:
        return spec
    return replace(spec, abs_tol=max(spec.abs_tol * width, 1e-300))


def leaf_integral(n: int, r: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Return int_0^r dt / sqrt(1 - t^(2n)) for 0 <= r <= 1."""
    n = _check_order(n)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"leaf_integral needs 0 <= r <= 1, got {r}")
    if r == 0.0:
        return 0.0
    log_r = math.log(r)

    def integrand(u, v):
        # 1 - t^(2n) with t = r - v; exact as v -> 0 when r == 1
        upper = v < 0.5 * r
        t_log = np.empty_like(u)
        t_log[upper] = log_r + np.log1p(-v[upper] / r)
        with np.errstate(divide="ignore"):  # u underflows to 0 only for subnormal r
            t_log[~upper] = np.log(u[~upper])
        return 1.0 / np.sqrt(-np.expm1(2 * n * t_log))

    return tanh_sinh(integrand, 0.0, r, _scaled(spec, r))[0]


def leaf_tail_integral(n: int, q: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Return int_{1-q}^1 dt / sqrt(1 - t^(2n)) for 0 <= q <= 1.

    This is ``pi_n/2 - leaf_integral(n, 1 - q)`` evaluated without the
    cancellation that form suffers from when q is small.
    """
    n = _check_order(n)
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"leaf_tail_integral needs 0 <= q <= 1, got {q}")
    if q == 0.0:
        return 0.0

    base = 1.0 - q

    def integrand(u, v):
        # t = 1 - u, taken from the far end when u is not small
        lower = u < 0.5
        t_log = np.empty_like(u)
        t_log[lower] = np.log1p(-u[lower])
        t_log[~lower] = np.log(base + v[~lower])
        return 1.0 / np.sqrt(-np.expm1(2 * n * t_log))

    return tanh_sinh(integrand, 0.0, q, _scaled(spec, q))[0]


_period_cache: dict[int, PeriodConstants] = {}
_period_lock = threading.Lock()


def period_constants(n: int) -> PeriodConstants:
    """Return pi_n / 2, pi_n and the period 2 * pi_n of sleaf_n / cleaf_n.

    Values are computed once per ``n`` and shared by all threads.
    """
    n = _check_order(n)
    cached = _period_cache.get(n)
    if cached is not None:
        return cached
    with _period_lock:
        cached = _period_cache.get(n)
        if cached is None:
            half = leaf_integral(n, 1.0)
            cached = PeriodConstants(n=n, half_pi_n=half, pi_n=2.0 * half, period=4.0 * half)
            _period_cache[n] = cached
    return cached


def invert_increasing(
    f: Callable[[float], float],
    target: float,
    a: float,
    b: float,
    tol: float = 1e-15,
) -> float:
    """Solve f(x) = target for x in [a, b], f continuous and increasing.

    Brent's method (bisection-safeguarded secant / inverse quadratic
    interpolation); the bracket is kept at every step.

    Raises:
        BracketError: if target is not within [f(a), f(b)].
        ConvergenceError: if the iteration cap is hit.
    """
    fa = f(a) - target
    fb = f(b) - target
    if fa > 0 or fb < 0:
        raise BracketError(
            f"target {target} outside [f(a), f(b)] = [{fa + target}, {fb + target}]"
        )
    if fa == 0:
        return a
    if fb == 0:
        return b
    try:
        root, info = optimize.brentq(
            lambda x: f(x) - target,
            a,
            b,
            xtol=tol,
            maxiter=ROOT_MAXITER,
            full_output=True,
            disp=False,
        )
    except RuntimeError as exc:  # pragma: no cover - brentq with disp=False does not raise
        raise ConvergenceError(str(exc)) from exc
    if not info.converged:
        raise ConvergenceError(
            f"root finding did not converge in {ROOT_MAXITER} iterations: {info.flag}",
            estimate=root,
        )
    return root
