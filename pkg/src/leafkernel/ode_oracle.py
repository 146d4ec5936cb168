"""Independent check: integrate r'' = -n r^(2n-1) directly.

Nothing here touches the quadrature/inversion path of :mod:`leafkernel.core`;
the two routes only meet in the tests.  The integrator is the embedded
Dormand-Prince 5(4) pair from :func:`scipy.integrate.solve_ivp`.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import PeriodDetectionError, StiffnessError

__all__ = [
    "OdeState",
    "Trajectory",
    "SLEAF_START",
    "CLEAF_START",
    "integrate_leaf_ode",
    "measure_period",
    "crest_amplitudes",
]

TOL_RANGE = (1e-13, 1e-6)


@dataclass(frozen=True)
class OdeState:
    l: float
    r: float
    v: float

    def energy(self, n: int) -> float:
        return self.v * self.v + self.r ** (2 * n)


SLEAF_START = OdeState(0.0, 0.0, 1.0)
CLEAF_START = OdeState(0.0, 1.0, 0.0)


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution; arrays share one index."""

    n: int
    l: np.ndarray
    r: np.ndarray
    v: np.ndarray

    def energy(self) -> np.ndarray:
        return self.v**2 + self.r ** (2 * self.n)

    def state(self, i: int) -> OdeState:
        return OdeState(float(self.l[i]), float(self.r[i]), float(self.v[i]))

    def __len__(self):
        return len(self.l)


def _rhs(n):
    power = 2 * n - 1

    def rhs(_, y):
        return [y[1], -n * y[0] ** power]

    return rhs


def _check_tol(tol):
    lo, hi = TOL_RANGE
    if not lo <= tol <= hi:
        raise ValueError(f"tol must lie in [{lo:g}, {hi:g}], got {tol}")


def integrate_leaf_ode(
    n: int,
    init: OdeState,
    l_end: float,
    tol: float = 1e-12,
    sample_at=None,
) -> Trajectory:
    """Integrate from ``init`` to ``l_end``.

    With ``sample_at`` the trajectory holds exactly those abscissae (taken
    from the dense output); otherwise the accepted steps.
    """
    _check_tol(tol)
    t_eval = None if sample_at is None else np.asarray(sample_at, dtype=float)
    sol = solve_ivp(
        _rhs(n),
        (init.l, l_end),
        [init.r, init.v],
        method="RK45",
        rtol=tol,
        atol=tol,
        t_eval=t_eval,
    )
    if sol.status != 0:
        raise StiffnessError(f"integration of the n={n} leaf ODE failed: {sol.message}")
    return Trajectory(n=n, l=sol.t, r=sol.y[0], v=sol.y[1])


def measure_period(n: int, tol: float = 1e-12, expected: float = None) -> float:
    """Period of the unit-amplitude oscillation, measured on the ODE.

    Starts from r = 0, v = 1 and locates successive maxima of r (v crossing
    zero downward with r > 0); the spacing of the first two is the period.
    ``expected`` bounds the search horizon to 3 * expected and defaults to
    2 * pi, an upper bound for every n >= 1.
    """
    _check_tol(tol)
    horizon = 3.0 * (expected if expected is not None else 2.0 * np.pi)

    def crest(_, y):
        return y[1]

    crest.direction = -1.0
    crest.terminal = 2

    sol = solve_ivp(
        _rhs(n),
        (0.0, horizon),
        [SLEAF_START.r, SLEAF_START.v],
        method="RK45",
        rtol=tol,
        atol=tol,
        events=crest,
    )
    if sol.status == -1:
        raise StiffnessError(f"integration of the n={n} leaf ODE failed: {sol.message}")
    hits = [t for t, y in zip(sol.t_events[0], sol.y_events[0]) if y[0] > 0]
    if len(hits) < 2:
        raise PeriodDetectionError(
            f"found {len(hits)} crest(s) of the n={n} oscillation within l <= {horizon:g}"
        )
    return float(hits[1] - hits[0])


def crest_amplitudes(n: int, l_end: float, tol: float = 1e-12) -> np.ndarray:
    """|r| at every turning point (v = 0) of the sleaf trajectory on [0, l_end]."""
    _check_tol(tol)

    def turning(_, y):
        return y[1]

    sol = solve_ivp(
        _rhs(n),
        (0.0, l_end),
        [SLEAF_START.r, SLEAF_START.v],
        method="RK45",
        rtol=tol,
        atol=tol,
        events=turning,
    )
    if sol.status == -1:
        raise StiffnessError(f"integration of the n={n} leaf ODE failed: {sol.message}")
    return np.abs(sol.y_events[0][:, 0]) if len(sol.t_events[0]) else np.empty(0)
