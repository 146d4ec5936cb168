"""Numeric and symbolic check suites behind ``leafkernel verify``.

Every check reports its worst residual next to the tolerance it is held to.
Sample sets are fixed grids, so reports are reproducible byte for byte.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import identities as ids
from . import ode_oracle, symbolic
from .core import cleaf, sleaf
from .numerics import period_constants
from .reference import ADDITION_EXAMPLE, SLEAF3_CLEAF3_TABLE, TABLE_TOLERANCE

__all__ = ["CheckResult", "SUITES", "run_suite", "identity_checks", "symbolic_checks", "oracle_checks"]

# printed period digits: period(n) must start with these
PERIOD_DIGITS = {1: 6.28, 2: 5.24, 3: 4.85}


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    passed: bool
    unit: str = ""
    detail: tuple = ()

    def line(self) -> str:
        """One report line, plus the indented ``detail`` lines of a failed check."""
        status = "PASS" if self.passed else "FAIL"
        if self.unit == "flag":
            head = f"[{status}] {self.name}"
        elif self.unit == "terms":
            head = f"[{status}] {self.name}: residual {int(self.residual)} terms"
        else:
            head = f"[{status}] {self.name}: max residual {self.residual:.3e} (tol {self.tolerance:.1e})"
        if self.passed or not self.detail:
            return head
        return "\n".join([head, *("    " + d for d in self.detail)])


def _check(name, residual, tolerance):
    residual = float(residual)
    return CheckResult(name, residual, tolerance, residual <= tolerance)


def _pi3():
    return period_constants(3).pi_n


def identity_checks():
    ex = ADDITION_EXAMPLE
    l1, l2 = ex["l1"], ex["l2"]
    squared = ids.sleaf3_add_squared(l1, l2)
    signed = ids.sleaf3_add(l1, l2)
    results = [
        _check(
            f"sleaf3_add_squared({l1},{l2}) = {squared:.7f}",
            abs(squared - ex["squared"]),
            ex["squared_tol"],
        ),
        _check(f"sleaf3_add({l1},{l2}) = {signed:.5f}", abs(signed - ex["signed"]), ex["signed_tol"]),
    ]

    results.append(table_check())

    samples = np.linspace(-10.0, 10.0, 1000)
    pyth = energy = 0.0
    for l in samples:
        s, c = sleaf(3, l), cleaf(3, l)
        pyth = max(pyth, abs(s.r**2 + c.r**2 + 2 * s.r**2 * c.r**2 - 1.0))
        energy = max(energy, abs(s.energy_residual()), abs(c.energy_residual()))
    results.append(_check("s^2 + c^2 + 2 s^2 c^2 = 1, 1000 samples", pyth, 1e-11))
    results.append(_check("energy dr^2 + r^6 = 1, 1000 samples", energy, 1e-10))

    pi3 = _pi3()
    halves = np.linspace(-2 * pi3, 2 * pi3, 400)
    results.append(
        _check(
            "sleaf3_double vs direct, 400 samples",
            max(abs(ids.sleaf3_double(l) - sleaf(3, 2 * l).r) for l in halves),
            1e-10,
        )
    )
    results.append(
        _check(
            "cleaf3_double vs direct, 400 samples",
            max(abs(ids.cleaf3_double(l) - cleaf(3, 2 * l).r) for l in halves),
            1e-10,
        )
    )

    grid = addition_grid()
    results.append(
        _check(
            f"sleaf3_add_squared vs direct, {len(grid)}x{len(grid)} grid",
            max(abs(ids.sleaf3_add_squared(a, b) - sleaf(3, a + b).r ** 2) for a in grid for b in grid),
            1e-9,
        )
    )
    results.append(
        _check(
            f"cleaf3_add_squared vs direct, {len(grid)}x{len(grid)} grid",
            max(abs(ids.cleaf3_add_squared(a, b) - cleaf(3, a + b).r ** 2) for a in grid for b in grid),
            1e-9,
        )
    )
    results.append(
        _check(
            "sleaf3_add_squared(l, l) = sleaf3_double(l)^2",
            max(abs(ids.sleaf3_add_squared(l, l) - ids.sleaf3_double(l) ** 2) for l in halves),
            1e-10,
        )
    )

    wide = np.linspace(-10.0, 10.0, 401)
    results.append(
        _check(
            "n=1 against sin/cos",
            max(max(abs(sleaf(1, l).r - math.sin(l)), abs(cleaf(1, l).r - math.cos(l))) for l in wide),
            1e-12,
        )
    )
    half2 = 0.5 * period_constants(2).half_pi_n
    principal = np.linspace(0.0, half2, 15)
    results.append(
        _check(
            "lemniscate addition vs direct (principal branch)",
            max(abs(ids.sl_add(a, b) - sleaf(2, a + b).r) for a in principal for b in principal),
            1e-10,
        )
    )

    fd, shift = symmetry_residuals()
    results.append(_check("dg/dl1 - dg/dl2 (central differences, h=1e-5)", fd, 1e-6))
    results.append(_check("g(l1, l2) - g(l1 + l2, 0), 100 pairs", shift, 1e-9))
    return results


def table_check(rows=SLEAF3_CLEAF3_TABLE, tolerance=TABLE_TOLERANCE):
    """Reference table against direct evaluation; a failure lists the offending rows side by side."""
    worst = 0.0
    diff = []
    for l, s_ref, c_ref in rows:
        s, c = sleaf(3, l).r, cleaf(3, l).r
        err = max(abs(s - s_ref), abs(c - c_ref))
        worst = max(worst, err)
        if err > tolerance:
            diff.append(f"l={l:.1f}  table {s_ref:+.6f} {c_ref:+.6f}  computed {s:+.6f} {c:+.6f}")
    return CheckResult(
        f"reference table, {2 * len(rows)} values",
        worst,
        tolerance,
        worst <= tolerance,
        detail=tuple(diff),
    )


def addition_grid(size=40):
    """Grid reaching two periods left and right, so m, k != 0 and every sign pattern occur."""
    pi3 = _pi3()
    return np.linspace(-2.2 * pi3, 2.9 * pi3, size)


def symmetry_pairs(count=100, seed=20240601):
    """Pairs (l1, l2) whose sum stays away from zeros of sleaf_3 (g has kinks there)."""
    rng = np.random.default_rng(seed)
    pi3 = _pi3()
    pairs = []
    while len(pairs) < count:
        l1, l2 = rng.uniform(-2 * pi3, 2 * pi3, size=2)
        frac = (l1 + l2) / pi3
        if abs(frac - round(frac)) > 0.05:
            pairs.append((float(l1), float(l2)))
    return pairs


def symmetry_residuals(h=1e-5):
    fd = shift = 0.0
    for l1, l2 in symmetry_pairs():
        g1 = (ids.addition_g(l1 + h, l2) - ids.addition_g(l1 - h, l2)) / (2 * h)
        g2 = (ids.addition_g(l1, l2 + h) - ids.addition_g(l1, l2 - h)) / (2 * h)
        fd = max(fd, abs(g1 - g2))
        shift = max(shift, abs(ids.addition_g(l1, l2) - ids.addition_g(l1 + l2, 0.0)))
    return fd, shift


def symbolic_checks():
    results = []
    for report in symbolic.verify_all():
        for check in report.checks:
            results.append(
                CheckResult(check.label, float(len(check.difference)), 0.0, check.ok, unit="terms")
            )
    return results


def oracle_checks():
    results = []
    for n, digits in PERIOD_DIGITS.items():
        quad = period_constants(n).period
        ode = ode_oracle.measure_period(n, expected=quad)
        results.append(_check(f"period({n}): quadrature {quad:.9f} vs ODE {ode:.9f}", abs(quad - ode), 1e-9))
        in_band = digits <= quad < digits + 0.01
        results.append(
            CheckResult(
                f"period({n}) = {quad:.6f} starts with {digits:.2f}",
                0.0 if in_band else 1.0,
                0.0,
                in_band,
                unit="flag",
            )
        )

    samples = np.linspace(0.0, 10.0, 200)
    s_traj = ode_oracle.integrate_leaf_ode(3, ode_oracle.SLEAF_START, 10.0, sample_at=samples)
    c_traj = ode_oracle.integrate_leaf_ode(3, ode_oracle.CLEAF_START, 10.0, sample_at=samples)
    results.append(
        _check("sleaf_3 inversion vs ODE, 200 samples", max(abs(s_traj.r - [sleaf(3, l).r for l in samples])), 1e-8)
    )
    results.append(
        _check("cleaf_3 inversion vs ODE, 200 samples", max(abs(c_traj.r - [cleaf(3, l).r for l in samples])), 1e-8)
    )
    long_run = ode_oracle.integrate_leaf_ode(3, ode_oracle.SLEAF_START, 100.0, tol=1e-12)
    results.append(_check("energy drift on [0, 100]", max(abs(long_run.energy() - 1.0)), 1e-9))
    crests = ode_oracle.crest_amplitudes(3, 20.0)
    results.append(_check("crest amplitude |r| = 1", max(abs(crests - 1.0)), 1e-9))
    return results


SUITES = {
    "identities": identity_checks,
    "symbolic": symbolic_checks,
    "oracle": oracle_checks,
}


def run_suite(name):
    """Run ``name`` (or every suite for ``"all"``); returns ``{suite: [CheckResult]}``."""
    names = list(SUITES) if name == "all" else [name]
    return {suite: SUITES[suite]() for suite in names}
