"""Self-contained acceptance checks, shared by the CLI and the test suite.

Each check returns a CheckResult instead of asserting, so the CLI can print
a report and the tests can both print and assert.  The checks are the
load-bearing validation of the package: closed forms against an independent
root solver, independently coded formula variants against each other,
quadrature routes against each other (escalating to high-precision
arithmetic where double precision provably cannot resolve the comparison),
and structural contracts of the command-line artifacts.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass, replace

import numpy as np

from . import thermo
from .errors import DomainError
from .nu import solve_bound_state
from .potential import (
    PhysicalConstants,
    PotentialParams,
    SpectralCoefficients,
    spectral_coefficients,
)
from .recovery import fit_couplings
from .spectrum import (
    compact_energy,
    energy,
    energy_long_form,
    energy_manning_rosen,
    energy_yukawa,
    spectrum_table,
)
from .wavefunction import build_wave, count_nodes, default_node_grid, ode_residual

_SEED = 20260814
_DEFAULT_POTENTIAL = PotentialParams(a1=0.0, a2=0.0, a3=1.0, alpha=0.5)
_CONSTS = PhysicalConstants()

# Deep-well companion to the default potential: four strictly valid levels
# at l = 0, used wherever a check needs several bound states.
_DEEP_POTENTIAL = PotentialParams(a1=0.0, a2=0.0, a3=5.0, alpha=0.5)

# Deeper still: valid levels at every l <= 3, for cross-l comparisons of
# genuine bound states.
_DEEPER_POTENTIAL = PotentialParams(a1=0.0, a2=0.0, a3=20.0, alpha=0.5)

# Shallow-well set with Q3 > 0 and sqrt(Q3) < delta at every l <= 3, so the
# raw closed-form values fall monotonically with n in every channel.
_TREND_POTENTIAL = PotentialParams(a1=0.0, a2=0.025, a3=0.01, alpha=0.5)

# Positive l = 0 entries make this six-row fixture unreachable by any
# couplings (the l = 0 bound is E <= 0); its second differences are exactly
# -0.0625 under hbar = mu = 1, alpha = 0.5.
_TABLE_FIXTURE = (0.109375, 0.046875, -0.078125, -0.265625, -0.515625, -0.828125)

_IDENTITY_BETAS = tuple(np.geomspace(0.1, 100.0, 20))
_IDENTITY_LAMBDAS = (1.0, 5.0, 20.0, 100.0, 700.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float


def _result(name, t0, passed, detail) -> CheckResult:
    return CheckResult(
        name=name, passed=passed, detail=detail, elapsed=time.perf_counter() - t0
    )


def _random_params(rng) -> PotentialParams:
    """Couplings inside the real-delta domain for every l.

    x1 and x2 are drawn small (radicand stays >= 0.6 at l = 0 and grows
    with l); a3 is drawn large enough that low-l levels often bind.
    """
    alpha = rng.uniform(0.1, 1.0)
    h2a2 = alpha * alpha
    x1 = rng.uniform(-0.05, 0.05)
    x2 = rng.uniform(-0.05, 0.05)
    a3 = rng.uniform(0.5, 5.0)
    return PotentialParams(
        a1=x1 * h2a2 / 2.0, a2=x2 * h2a2 / 2.0, a3=a3, alpha=alpha
    )


def check_oracle_equivalence(count: int = 100) -> CheckResult:
    """Closed-form energies against independent numerical quantization roots."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(_SEED)
    worst = 0.0
    accepted = 0
    attempts = 0
    while accepted < count:
        attempts += 1
        if attempts > 200 * count:
            return _result(
                "oracle-equivalence", t0, False,
                f"could not sample {count} valid levels in {attempts} attempts",
            )
        params = _random_params(rng)
        n = int(rng.integers(0, 6))
        l = int(rng.integers(0, 4))
        level = energy(params, _CONSTS, n, l)
        if not level.valid_bound_state:
            continue
        e_oracle = solve_bound_state(params, _CONSTS, n, l)
        rel = abs(level.energy - e_oracle) / abs(e_oracle)
        worst = max(worst, rel)
        accepted += 1
    elapsed = time.perf_counter() - t0
    passed = worst <= 1e-9 and elapsed < 10.0
    return _result(
        "oracle-equivalence", t0, passed,
        f"{accepted} valid levels, worst relative gap {worst:.2e} "
        f"(limit 1e-9), {elapsed:.1f}s (limit 10s)",
    )


def check_form_equivalence(count: int = 1000) -> CheckResult:
    """Compact and long-form level expressions on random points."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(_SEED + 1)
    worst = 0.0
    for _ in range(count):
        params = _random_params(rng)
        n = int(rng.integers(0, 6))
        l = int(rng.integers(0, 4))
        e_compact = energy(params, _CONSTS, n, l).energy
        e_long = energy_long_form(params, _CONSTS, n, l)
        rel = abs(e_compact - e_long) / max(1.0, abs(e_compact))
        worst = max(worst, rel)
    return _result(
        "form-equivalence", t0, worst <= 1e-12,
        f"{count} points, worst relative gap {worst:.2e} (limit 1e-12)",
    )


def check_special_cases(count: int = 100) -> CheckResult:
    """Reductions onto the two single-family closed forms."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(_SEED + 2)
    worst_mr = 0.0
    worst_yuk = 0.0
    for _ in range(count):
        params = _random_params(rng)
        n = int(rng.integers(0, 6))
        l = int(rng.integers(0, 4))

        mr_params = replace(params, a3=0.0)
        e_general = energy(mr_params, _CONSTS, n, l).energy
        e_mr = energy_manning_rosen(mr_params, _CONSTS, n, l)
        worst_mr = max(worst_mr, abs(e_general - e_mr) / max(1.0, abs(e_general)))

        yuk_params = replace(params, a1=0.0, a2=0.0)
        e_general = energy(yuk_params, _CONSTS, n, l).energy
        e_yuk = energy_yukawa(yuk_params, _CONSTS, n, l)
        worst_yuk = max(worst_yuk, abs(e_general - e_yuk) / max(1.0, abs(e_general)))
    passed = worst_mr <= 1e-12 and worst_yuk <= 1e-12
    return _result(
        "special-case-reductions", t0, passed,
        f"{count} points each; worst gaps {worst_mr:.2e} (Manning-Rosen), "
        f"{worst_yuk:.2e} (Yukawa); limit 1e-12",
    )


def check_coulomb_limit() -> CheckResult:
    """Screening -> 0 approaches the hydrogenic spectrum linearly in alpha."""
    t0 = time.perf_counter()
    worst_margin = -math.inf
    details = []
    passed = True
    for alpha in (1e-3, 1e-4):
        params = PotentialParams(a1=0.0, a2=0.0, a3=1.0, alpha=alpha)
        for n in (0, 1, 2):
            e = energy(params, _CONSTS, n, 0).energy
            gap = abs(e - (-1.0 / (2.0 * (n + 1) ** 2)))
            if gap > 5.0 * alpha:
                passed = False
            worst_margin = max(worst_margin, gap / (5.0 * alpha))
            details.append(f"n={n} alpha={alpha:g}: gap {gap:.2e}")
    return _result(
        "coulomb-limit", t0, passed,
        f"worst gap / (5 alpha) = {worst_margin:.3f} (limit 1); "
        + "; ".join(details[:2]) + "; ...",
    )


def check_anchor() -> CheckResult:
    """Hand-evaluated ground level of the default potential."""
    t0 = time.perf_counter()
    e = energy(_DEFAULT_POTENTIAL, _CONSTS, 0, 0).energy
    gap = abs(e - (-0.28125))
    return _result(
        "hand-anchor", t0, gap <= 1e-12,
        f"E(0,0) = {e!r}, gap {gap:.2e} (limit 1e-12)",
    )


def check_table_diagnostics() -> CheckResult:
    """The published-style table values cannot come from the closed form.

    Three parts: the coupling-independent bound E <= Q1(l) (zero at l = 0)
    contradicts the positive fixture entries and the fit reports them
    infeasible with an irreducible residual; the fixture's second
    differences equal -2 Q2 = -0.0625; and the closed form reproduces that
    second-difference constant exactly for any Q3 = 0 configuration.
    """
    t0 = time.perf_counter()
    problems = []

    # E <= Q1 on random configurations (with slack for rounding)
    rng = np.random.default_rng(_SEED + 3)
    for _ in range(200):
        params = _random_params(rng)
        for l in range(4):
            coeffs = spectral_coefficients(params, _CONSTS, l)
            for n in range(6):
                e = compact_energy(coeffs, float(n))
                if e > coeffs.q1 + 1e-12 * max(1.0, abs(e)):
                    problems.append(f"E above Q1 at l={l}, n={n}")

    report = fit_couplings(
        [(n, 0, e) for n, e in enumerate(_TABLE_FIXTURE)], alpha=0.5, consts=_CONSTS
    )
    if report.feasible:
        problems.append("fixture with positive l=0 entries labeled feasible")
    if report.rms < 0.01:
        problems.append(f"fixture rms {report.rms:.2e} unexpectedly small")

    fixture_diff2 = {
        _TABLE_FIXTURE[i + 2] - 2.0 * _TABLE_FIXTURE[i + 1] + _TABLE_FIXTURE[i]
        for i in range(len(_TABLE_FIXTURE) - 2)
    }
    if fixture_diff2 != {-0.0625}:
        problems.append(f"fixture second differences {sorted(fixture_diff2)}")

    # Q3 = 0: x2 = x3 at l = 0, so E = Q1 - Q2 (n + delta)^2 and the
    # second difference is -2 Q2 for every n.
    q3zero = PotentialParams(a1=0.0, a2=0.01, a3=0.02, alpha=0.5)
    coeffs = spectral_coefficients(q3zero, _CONSTS, 0)
    if abs(coeffs.q3) > 1e-15:
        problems.append(f"Q3 = {coeffs.q3!r} not zero for the constructed set")
    levels = [compact_energy(coeffs, float(n)) for n in range(6)]
    for i in range(4):
        diff2 = levels[i + 2] - 2.0 * levels[i + 1] + levels[i]
        if abs(diff2 - (-2.0 * coeffs.q2)) > 1e-12:
            problems.append(f"second difference {diff2!r} != -2 Q2 at n={i}")

    detail = (
        f"bound holds on 4800 random levels; fixture verdict "
        f"'{'feasible' if report.feasible else 'infeasible'}' with rms "
        f"{report.rms:.2e}; second differences -0.0625 reproduced"
    )
    if problems:
        detail = "; ".join(problems)
    return _result("table-diagnostics", t0, not problems, detail)


def _identity_grid():
    coeffs = spectral_coefficients(_DEFAULT_POTENTIAL, _CONSTS, 0)
    for lam in _IDENTITY_LAMBDAS:
        for beta in _IDENTITY_BETAS:
            yield coeffs, lam, float(beta)


def check_thermo_identities() -> CheckResult:
    """F = U - TS, analytic C against finite differences, C >= 0, Z(0) = lambda."""
    t0 = time.perf_counter()
    worst_f = 0.0
    worst_c = 0.0
    min_c = math.inf
    problems = []
    for coeffs, lam, beta in _identity_grid():
        inp = thermo.ThermoInput(coeffs=coeffs, lam=lam, beta=beta)
        u = thermo.mean_energy(inp)
        s = thermo.entropy(inp)
        f = thermo.free_energy(inp)
        c = thermo.heat_capacity(inp)
        rel_f = abs(f - (u - s / beta)) / max(1.0, abs(f))
        worst_f = max(worst_f, rel_f)
        c_fd = thermo.heat_capacity_fd(coeffs, lam, beta, rel_step=5e-3, order=5)
        rel_c = abs(c - c_fd) / max(abs(c), 1e-300)
        worst_c = max(worst_c, rel_c)
        min_c = min(min_c, c)
    coeffs = spectral_coefficients(_DEFAULT_POTENTIAL, _CONSTS, 0)
    for lam in _IDENTITY_LAMBDAS:
        z0 = thermo.partition_integral(
            thermo.ThermoInput(coeffs=coeffs, lam=lam, beta=0.0)
        )
        if abs(z0 - lam) > 1e-6 * lam:
            problems.append(f"Z(beta=0) = {z0!r} at lambda={lam:g}")
    elapsed = time.perf_counter() - t0
    if worst_f > 1e-9:
        problems.append(f"F identity off by {worst_f:.2e}")
    if worst_c > 1e-6:
        problems.append(f"C vs finite difference off by {worst_c:.2e}")
    if min_c < 0.0:
        problems.append(f"negative heat capacity {min_c:.2e}")
    if elapsed >= 60.0:
        problems.append(f"runtime {elapsed:.1f}s over the 60s budget")
    detail = (
        f"100-point grid: F identity {worst_f:.2e} (limit 1e-9), C gap "
        f"{worst_c:.2e} (limit 1e-6), min C {min_c:.2e}, Z(0) = lambda, "
        f"{elapsed:.1f}s (limit 60s)"
    )
    if problems:
        detail = "; ".join(problems)
    return _result("thermo-identities", t0, not problems, detail)


def _mp_route_gap(coeffs, lam, beta, dps=40):
    """(ln Z gap between routes, reference ln Z) in high precision."""
    from mpmath import exp, log, mp, mpf

    with mp.workdps(dps):
        q1, q2, q3 = mpf(coeffs.q1), mpf(coeffs.q2), mpf(coeffs.q3)
        delta = mpf(coeffs.delta)
        b = mpf(beta)
        pts = [mpf(p) for p in thermo._split_points(coeffs, lam, beta)]

        def level(n):
            rho = n + delta
            return q1 - q2 * (rho + q3 / rho) ** 2

        ln_direct = log(mp.quad(lambda n: exp(-b * level(n)), pts))
        pre = b * (2 * q2 * q3 - q1)
        ln_square = pre + log(
            mp.quad(
                lambda rho: exp(b * q2 * (rho * rho + q3 * q3 / (rho * rho))),
                [p + delta for p in pts],
            )
        )
        return float(ln_square - ln_direct), ln_square


def check_quadrature_routes() -> CheckResult:
    """Completed-square and direct partition integrals agree on the grid.

    Where double precision cannot resolve 1e-10 on Z (eps |ln Z| exceeds the
    target), the comparison escalates: both routes are recomputed in 40-digit
    arithmetic and must agree there, and each double-precision route must sit
    within its round-off floor of the high-precision value.
    """
    from mpmath import mp, mpf

    t0 = time.perf_counter()
    eps = np.finfo(float).eps
    worst_double = 0.0
    escalated = 0
    problems = []
    for coeffs, lam, beta in _identity_grid():
        inp = thermo.ThermoInput(coeffs=coeffs, lam=lam, beta=beta)
        ln24 = thermo.log_partition_integral(inp)
        ln23 = thermo.log_partition_direct(inp)
        gap = abs(math.expm1(ln24 - ln23)) if abs(ln24 - ln23) < 1.0 else math.inf
        floor = 4.0 * eps * max(1.0, abs(ln23))
        if floor <= 1e-10:
            worst_double = max(worst_double, gap)
            if gap > 1e-10:
                problems.append(f"route gap {gap:.2e} at lambda={lam:g} beta={beta:g}")
        else:
            escalated += 1
            mp_gap, mp_ref = _mp_route_gap(coeffs, lam, beta)
            if abs(mp_gap) > 1e-10:
                problems.append(
                    f"high-precision route gap {mp_gap:.2e} at "
                    f"lambda={lam:g} beta={beta:g}"
                )
            with mp.workdps(40):
                for value in (ln24, ln23):
                    drift = abs(float(mpf(value) - mp_ref))
                    if drift > 2.0 * floor:
                        problems.append(
                            f"double route {drift:.2e} from reference at "
                            f"lambda={lam:g} beta={beta:g} (floor {floor:.2e})"
                        )

    # constant spectrum: q2 = 0 collapses the closed forms
    const_coeffs = SpectralCoefficients(
        q1=0.7, q2=0.0, q3=-4.0, delta=1.0, radicand=1.0
    )
    for lam, beta in ((3.0, 0.8), (10.0, 2.5)):
        inp = thermo.ThermoInput(coeffs=const_coeffs, lam=lam, beta=beta)
        z = thermo.partition_integral(inp)
        s = thermo.entropy(inp)
        c = thermo.heat_capacity(inp)
        z_exact = lam * math.exp(-beta * 0.7)
        if abs(z - z_exact) > 1e-10 * z_exact:
            problems.append(f"constant-spectrum Z {z!r} != {z_exact!r}")
        if abs(s - math.log(lam)) > 1e-10 * max(1.0, abs(math.log(lam))):
            problems.append(f"constant-spectrum S {s!r} != ln lambda")
        if abs(c) > 1e-10:
            problems.append(f"constant-spectrum C {c!r} != 0")

    detail = (
        f"worst double-precision route gap {worst_double:.2e} (limit 1e-10); "
        f"{escalated} corner points verified in 40-digit arithmetic; "
        f"constant-spectrum closed forms reproduced"
    )
    if problems:
        detail = "; ".join(problems[:4])
    return _result("quadrature-routes", t0, not problems, detail)


def _recheck_norm(wave) -> float:
    """Normalization integral on an independent fixed Simpson grid."""
    from scipy.integrate import simpson

    r_hi = 1.5 * wave.r_tail
    grid = np.linspace(r_hi / 400000, r_hi, 400001)
    psi = wave.psi(grid)
    return float(simpson(psi * psi, x=grid))


def check_wavefunctions() -> CheckResult:
    """Normalization, node counts, ODE residual, exponent identity."""
    t0 = time.perf_counter()
    problems = []
    cases = [(_DEFAULT_POTENTIAL, (0,)), (_DEEP_POTENTIAL, (0, 1, 2, 3))]
    checked = 0
    for params, ns in cases:
        coeffs = spectral_coefficients(params, _CONSTS, 0)
        for n in ns:
            level = energy(params, _CONSTS, n, 0)
            if not level.valid_bound_state:
                problems.append(f"level n={n} of a3={params.a3:g} not valid")
                continue
            wave = build_wave(params, _CONSTS, level)
            checked += 1
            norm = _recheck_norm(wave)
            if abs(norm - 1.0) > 1e-8:
                problems.append(f"norm {norm!r} at n={n}, a3={params.a3:g}")
            nodes = count_nodes(wave, default_node_grid(wave))
            if nodes != n:
                problems.append(f"{nodes} nodes at n={n}, a3={params.a3:g}")
            residual = ode_residual(wave)
            if residual >= 1e-6:
                problems.append(f"ODE residual {residual:.2e} at n={n}")
            if abs(wave.zeta_exp - coeffs.delta) > 1e-12:
                problems.append(
                    f"zeta {wave.zeta_exp!r} != delta {coeffs.delta!r} at n={n}"
                )
    detail = (
        f"{checked} states: norms within 1e-8, node counts equal n, "
        f"ODE residuals < 1e-6, zeta = delta to 1e-12"
    )
    if problems:
        detail = "; ".join(problems[:4])
    return _result("wavefunction-suite", t0, not problems, detail)


def _read_csv_columns(path):
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, {
        name: np.array([float(row[i]) for row in rows])
        for i, name in enumerate(header)
    }


def check_figures() -> CheckResult:
    """The figures command end-to-end, plus provable monotonicity of Z."""
    t0 = time.perf_counter()
    problems = []
    expected = [f"fig{i:02d}_{q}_vs_beta.csv" for i, q in
                enumerate(("z", "u", "s", "c", "f"), start=1)]
    expected += [f"fig{i:02d}_{q}_vs_lambda.csv" for i, q in
                 enumerate(("z", "u", "s", "c", "f"), start=6)]
    with tempfile.TemporaryDirectory() as tmp:
        proc = subprocess.run(
            [sys.executable, "-m", "mrey", "figures", "--output-dir", tmp,
             "--lambda-fixed", "0.9"],
            capture_output=True, text=True,
        )
        if proc.returncode != 0:
            return _result(
                "figure-generation", t0, False,
                f"figures exited {proc.returncode}: {proc.stderr.strip()[:200]}",
            )
        for name in expected + ["figures_config.json"]:
            if not os.path.exists(os.path.join(tmp, name)):
                problems.append(f"missing {name}")
        if not problems:
            header, cols = _read_csv_columns(os.path.join(tmp, expected[0]))
            if header != ["beta", "lambda", "Z", "U", "S", "F", "C"]:
                problems.append(f"header {header}")
            if not np.all(np.diff(cols["beta"]) > 0.0):
                problems.append("beta grid not strictly increasing")
            # all levels on [0, 0.9] sit below zero, so Z must rise with beta
            if not np.all(np.diff(cols["Z"]) > 0.0):
                problems.append("Z not strictly increasing in beta")
            header, cols = _read_csv_columns(os.path.join(tmp, expected[5]))
            if not np.all(np.diff(cols["lambda"]) > 0.0):
                problems.append("lambda grid not strictly increasing")
            if not np.all(np.diff(cols["Z"]) > 0.0):
                problems.append("Z not strictly increasing in lambda")
            if np.any(cols["C"] < 0.0):
                problems.append("negative C on the lambda sweep")
    detail = (
        "ten curve files plus config sidecar written; Z strictly increasing "
        "in lambda, and in beta on an all-negative-spectrum window"
    )
    if problems:
        detail = "; ".join(problems[:4])
    return _result("figure-generation", t0, not problems, detail)


def check_trends() -> CheckResult:
    """Level trends matching the published tables, where each is provable.

    The falling-with-n column pattern is a theorem of the closed form for
    raw values whenever Q3 > 0 and sqrt(Q3) < delta, and shows up as
    strictly falling binding strength |E| on the valid window of a deep
    well.  The rising-with-l row pattern is a theorem for genuine bound
    states of a deep well, and holds for the default potential on its one
    valid row.  No single reading makes both patterns hold simultaneously
    on one set of signed valid levels; the diagnostics check documents why.
    """
    t0 = time.perf_counter()
    problems = []

    # shallow Q3 > 0 set: raw values fall with n in every channel
    table = spectrum_table(_TREND_POTENTIAL, _CONSTS, 5, 3)
    if table.errors:
        problems.append(f"trend set failed: {sorted(table.errors.items())[0]}")
    else:
        grid = {(row.n, row.l): row.energy for row in table.rows}
        for l in range(4):
            for n in range(5):
                if not grid[(n, l)] > grid[(n + 1, l)]:
                    problems.append(f"E not falling with n at l={l}, n={n}")

    # deep well: >= 3 valid levels per low-l channel; among valid levels,
    # signed E rises with l at fixed n and |E| falls with n at fixed l
    deep_table = spectrum_table(_DEEPER_POTENTIAL, _CONSTS, 5, 3)
    valid_grid = {
        (row.n, row.l): row.energy
        for row in deep_table.rows
        if row.valid_bound_state
    }
    per_l = {l: sorted(n for n, ll in valid_grid if ll == l) for l in range(4)}
    if len(per_l[0]) < 3 or len(per_l[1]) < 3:
        problems.append(f"deep set valid counts {[len(per_l[l]) for l in range(4)]}")
    for (n, l), e in valid_grid.items():
        if (n, l + 1) in valid_grid and not e < valid_grid[(n, l + 1)]:
            problems.append(f"valid E not rising with l at n={n}, l={l}")
    for l, ns in per_l.items():
        depths = [abs(valid_grid[(n, l)]) for n in ns]
        if not all(a > b for a, b in zip(depths, depths[1:])):
            problems.append(f"binding strength not falling at l={l}")

    # default potential: raw values fall once past the spectrum peak, and
    # its single valid row (n = 0) rises with l
    coeffs = spectral_coefficients(_DEFAULT_POTENTIAL, _CONSTS, 0)
    post_peak = [compact_energy(coeffs, float(n)) for n in range(1, 6)]
    if not all(a > b for a, b in zip(post_peak, post_peak[1:])):
        problems.append("default set not falling past the peak")
    ground_row = [
        energy(_DEFAULT_POTENTIAL, _CONSTS, 0, l).energy for l in range(4)
    ]
    if not all(a < b for a, b in zip(ground_row, ground_row[1:])):
        problems.append("default ground row not rising with l")

    n_valid = len(valid_grid)
    detail = (
        f"raw values fall with n on the Q3 > 0 set (24 levels); deep set: "
        f"{n_valid} valid levels, E rises with l and |E| falls with n "
        f"throughout; default set falls past the peak and rises with l on "
        f"its valid row"
    )
    if problems:
        detail = "; ".join(problems[:4])
    return _result("trend-pattern", t0, not problems, detail)


_ALL_CHECKS = (
    check_oracle_equivalence,
    check_form_equivalence,
    check_special_cases,
    check_coulomb_limit,
    check_anchor,
    check_table_diagnostics,
    check_thermo_identities,
    check_quadrature_routes,
    check_wavefunctions,
    check_figures,
    check_trends,
)


def run_all() -> list:
    return [check() for check in _ALL_CHECKS]
