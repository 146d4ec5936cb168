"""End-to-end acceptance criteria, one test each.

Every test records a single PASS/FAIL line (shown in the terminal summary
and on stdout) before asserting, so a failing criterion still reports its
measured residual.
"""

import csv
import io
import math
import time

import numpy as np

from leafkernel import core, ode_oracle, symbolic
from leafkernel import identities as ids
from leafkernel.cli import main
from leafkernel.core import cleaf, sleaf
from leafkernel.numerics import period_constants
from leafkernel.reference import SLEAF3_CLEAF3_TABLE, TABLE_TOLERANCE
from leafkernel.verification import addition_grid, symmetry_pairs

from conftest import ACCEPTANCE_LINES

PI3 = period_constants(3).pi_n


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_1_table_reproduction(capsys):
    core._principal.cache_clear()
    start = time.perf_counter()
    status = main(["table", "--format", "csv"])
    elapsed = time.perf_counter() - start
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    worst = 0.0
    for row, (l, s, c) in zip(rows, SLEAF3_CLEAF3_TABLE):
        assert float(row["l"]) == l
        worst = max(worst, abs(float(row["sleaf"]) - s), abs(float(row["cleaf"]) - c))
    ok = status == 0 and len(rows) == 42 and worst <= TABLE_TOLERANCE and elapsed < 5.0
    record(
        1,
        "table reproduction",
        ok,
        f"{2 * len(rows)} values, max |diff| {worst:.2e} (tol {TABLE_TOLERANCE:.0e}), {elapsed:.2f} s (limit 5 s)",
    )


def test_2_worked_example():
    squared = ids.sleaf3_add_squared(0.2, 0.3)
    signed = ids.sleaf3_add(0.2, 0.3)
    e1, e2 = abs(squared - 0.2494431), abs(signed - 0.49944)
    record(
        2,
        "worked addition example",
        e1 <= 1e-6 and e2 <= 1e-5,
        f"squared {squared:.9f} (|diff| {e1:.1e} <= 1e-6), signed {signed:.7f} (|diff| {e2:.1e} <= 1e-5)",
    )


def test_3_periods():
    bands = {1: 6.28, 2: 5.24, 3: 4.85}
    parts, ok = [], True
    for n, lo in bands.items():
        quad = period_constants(n).period
        ode = ode_oracle.measure_period(n, expected=quad)
        ok &= lo <= quad < lo + 0.01 and abs(quad - ode) <= 1e-9
        parts.append(f"period({n}) {quad:.9f} vs ODE |diff| {abs(quad - ode):.1e}")
    record(3, "periods", ok, "; ".join(parts))


def test_4_identity_suites():
    samples = np.linspace(-10.0, 10.0, 1000)
    pyth = energy = 0.0
    for l in samples:
        s, c = sleaf(3, l), cleaf(3, l)
        pyth = max(pyth, abs(s.r**2 + c.r**2 + 2 * s.r**2 * c.r**2 - 1.0))
        energy = max(energy, abs(s.energy_residual()), abs(c.energy_residual()))
    halves = np.linspace(-2 * PI3, 2 * PI3, 400)
    double = max(
        max(abs(ids.sleaf3_double(l) - sleaf(3, 2 * l).r), abs(ids.cleaf3_double(l) - cleaf(3, 2 * l).r))
        for l in halves
    )
    grid = addition_grid()
    addition = max(
        max(
            abs(ids.sleaf3_add_squared(a, b) - sleaf(3, a + b).r ** 2),
            abs(ids.cleaf3_add_squared(a, b) - cleaf(3, a + b).r ** 2),
        )
        for a in grid
        for b in grid
    )
    ok = pyth <= 1e-11 and double <= 1e-10 and addition <= 1e-9 and energy <= 1e-10
    record(
        4,
        "identity suites",
        ok,
        f"quartic {pyth:.1e} <= 1e-11, double {double:.1e} <= 1e-10, "
        f"addition {addition:.1e} <= 1e-9, energy {energy:.1e} <= 1e-10",
    )


def test_5_symbolic_certification():
    start = time.perf_counter()
    reports = symbolic.verify_all()
    elapsed = time.perf_counter() - start
    checks = [c for r in reports for c in r.checks]
    surviving = sum(len(c.difference) for c in checks)
    ok = all(r.ok for r in reports) and elapsed < 1.0
    record(
        5,
        "symbolic certification",
        ok,
        f"{len(checks)} identities, {surviving} surviving terms, {elapsed * 1000:.0f} ms (limit 1 s)",
    )


def test_6_degeneration():
    wide = np.linspace(-10.0, 10.0, 2001)
    trig = max(max(abs(sleaf(1, l).r - math.sin(l)), abs(cleaf(1, l).r - math.cos(l))) for l in wide)
    half = 0.5 * period_constants(2).half_pi_n
    principal = np.linspace(0.0, half, 25)
    lemn = max(abs(ids.sl_add(a, b) - sleaf(2, a + b).r) for a in principal for b in principal)
    record(
        6,
        "degeneration",
        trig <= 1e-12 and lemn <= 1e-10,
        f"n=1 vs sin/cos {trig:.1e} <= 1e-12, lemniscate addition {lemn:.1e} <= 1e-10",
    )


def test_7_addition_symmetry():
    h = 1e-5
    fd = shift = 0.0
    pairs = symmetry_pairs()
    for l1, l2 in pairs:
        g1 = (ids.addition_g(l1 + h, l2) - ids.addition_g(l1 - h, l2)) / (2 * h)
        g2 = (ids.addition_g(l1, l2 + h) - ids.addition_g(l1, l2 - h)) / (2 * h)
        fd = max(fd, abs(g1 - g2))
        shift = max(shift, abs(ids.addition_g(l1, l2) - ids.addition_g(l1 + l2, 0.0)))
    record(
        7,
        "addition symmetry",
        len(pairs) == 100 and fd <= 1e-6 and shift <= 1e-9,
        f"{len(pairs)} pairs, dg/dl1 - dg/dl2 {fd:.1e} <= 1e-6, g shift {shift:.1e} <= 1e-9",
    )


def test_8_oracle_cross_check():
    samples = np.linspace(0.0, 10.0, 200)
    s = ode_oracle.integrate_leaf_ode(3, ode_oracle.SLEAF_START, 10.0, sample_at=samples)
    c = ode_oracle.integrate_leaf_ode(3, ode_oracle.CLEAF_START, 10.0, sample_at=samples)
    es = float(np.max(np.abs(s.r - [sleaf(3, l).r for l in samples])))
    ec = float(np.max(np.abs(c.r - [cleaf(3, l).r for l in samples])))
    record(
        8,
        "inversion vs ODE",
        es <= 1e-8 and ec <= 1e-8,
        f"200 samples, sleaf {es:.1e}, cleaf {ec:.1e} (tol 1e-8)",
    )
