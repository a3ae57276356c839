"""Verification suites backing the `verify` command and the acceptance tests.

Each suite checks one family of invariants at fixed tolerances and returns a
SuiteResult with pass/fail, the worst observed deviation, timing and report
lines.  Tolerances are pinned here and nowhere else.

The two table-reproduction suites pin the published table's conventions
empirically: for each row group they must find exactly one energy scale
(per-part vs pair-sum) and exactly one screening convention (mu = 0 vs
mu = lambda) under which the published column is reproduced at tolerance.
The published numbers are consistent with mu = 0 (pure exponential
screening); the mu = lambda deviations are reported alongside.
"""

import contextlib
import io
import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import hierarchy, oracle, reference, variational
from .potentials import NON_PT, PT, RadialGrid, ScreeningParams


@dataclass
class SuiteResult:
    name: str
    passed: bool
    worst: float
    elapsed: float
    lines: list = field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: worst deviation {self.worst:.3e} ({self.elapsed:.2f} s)"


# published direct-numerical column: (state, l, lambda, value, tolerance)
ORACLE_PINNED = (
    ("1s", 0, 0.02, -0.480300, 2e-4),
    ("1s", 0, 0.05, -0.451800, 2e-4),
    ("1s", 0, 0.10, -0.407100, 2e-4),
    ("2p", 1, 0.02, -0.211900, 1e-3),
    ("2p", 1, 0.10, -0.093070, 1e-3),
    ("3d", 2, 0.02, -0.075030, 1e-3),
    ("3d", 2, 0.05, -0.033830, 1e-3),
)

# published SUSY-variational column, the scale-consistent entries only
VARIATIONAL_PINNED = (
    ("1s", 0, 0.02, -0.480290, 5e-4),
    ("1s", 0, 0.05, -0.451810, 5e-4),
    ("1s", 0, 0.08, -0.424560, 5e-4),
    ("1s", 0, 0.10, -0.407070, 5e-4),
    ("2p", 1, 0.02, -0.211800, 2e-3),
    ("3d", 2, 0.02, -0.075020, 2e-3),
)


def part_oracle_energy(lam: float, mu: float, l: int, strength: float = 1.0) -> float:
    """Ground energy of one conjugate part, -strength e^{-lam r} cos(mu r)/r."""

    def pot(r):
        return -strength * np.exp(-lam * r) * np.cos(mu * r) / r

    k = strength / (l + 1) - lam / 2
    prob = oracle.RadialProblem(potential=pot, l=l, kappa_est=k if k > 0 else None)
    return oracle.solve_level(prob, 0, grid_check=False).energy


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        name, passed, worst, lines = fn(*args, **kwargs)
        return SuiteResult(name, passed, worst, time.perf_counter() - t0, lines)

    return wrapper


@_timed
def suite_algebraic_identity(seed: int = 0):
    """Pair formula at mu = 0 must equal the Yukawa formula identically."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        q = rng.uniform(0.0, 4.0) or 4.0  # (0, 4]
        lam = rng.uniform(0.0, 1.0)
        l = int(rng.integers(0, 6))
        e1 = hierarchy.closed_form_energy(q, lam, 0.0, l)
        e2 = hierarchy.yukawa_energy(q, lam, l)
        worst = max(worst, abs(e1 - e2) / max(1.0, abs(e1)))
    lines = [f"1000 random draws, worst relative |closed-form - yukawa| = {worst:.3e}"]
    return "algebraic-identity", worst <= 1e-12, worst, lines


@_timed
def suite_coulomb_limits():
    """lambda = mu = 0 must collapse to hydrogen in all three routes."""
    lines, worst, passed = [], 0.0, True
    for l in range(4):
        exact_pair = -1.0 / (l + 1) ** 2
        closed = hierarchy.closed_form_energy(2.0, 0.0, 0.0, l)
        ok = closed == exact_pair
        passed &= ok
        lines.append(f"closed-form l={l}: {closed!r} == {exact_pair!r}: {ok}")
    for l in range(4):
        prob = oracle.RadialProblem(potential=lambda r: -1.0 / r, l=l, kappa_est=1.0 / (l + 1))
        res = oracle.solve_level(prob, 0, grid_check=False)
        err = abs(res.energy - (-0.5 / (l + 1) ** 2))
        worst = max(worst, err)
        passed &= err <= 1e-6
        lines.append(f"oracle l={l}: {res.energy:.9f} err={err:.2e} (tol 1e-6)")
    for l in range(4):
        rep = variational.minimize(ScreeningParams(q=2.0, lam=0.0, mu=0.0), l)
        err = abs(rep.energy - (-0.5 / (l + 1) ** 2))
        worst = max(worst, err)
        passed &= err <= 1e-5
        lines.append(f"variational l={l}: {rep.energy:.9f} err={err:.2e} flag={rep.flag!r} (tol 1e-5)")
    return "coulomb-limits", passed, worst, lines


@_timed
def suite_hulthen_loop():
    """Oracle on the analytic effective potential must return -(1/(l+1) - a/2)^2/2."""
    lines, worst = [], 0.0
    for a in (0.05, 0.1, 0.2):
        for l in range(4):
            s = hierarchy.SuperpotentialSpec(a=a, l=l, g=1.0)
            e0 = hierarchy.part_ground_energy(s).real

            def veff(r, s=s, e0=e0):
                return np.real(hierarchy.effective_potential(r, s, e0))

            prob = oracle.RadialProblem(potential=veff, l=0, kappa_est=s.asymptote.real)
            res = oracle.solve_level(prob, 0, grid_check=False)
            err = abs(res.energy - e0)
            worst = max(worst, err)
            lines.append(f"a={a} l={l}: oracle={res.energy:.9f} closed={e0:.9f} err={err:.2e}")
    return "hulthen-loop", worst <= 1e-6, worst, lines


@_timed
def suite_susy_degeneracy():
    """Partner spectrum equals the original minus its ground level."""
    s = hierarchy.SuperpotentialSpec(a=0.1, l=0, g=1.0)
    e0 = hierarchy.part_ground_energy(s).real

    def v_minus(r):
        return np.real(hierarchy.effective_potential(r, s, e0))

    def v_plus(r):
        return np.real(hierarchy.partner_potential(r, s, e0))

    base = oracle.spectrum(oracle.RadialProblem(potential=v_minus, l=0, kappa_est=0.95), 3)
    partner = oracle.spectrum(oracle.RadialProblem(potential=v_plus, l=0, kappa_est=0.95), 2)
    lines, worst = [], 0.0
    passed = len(base) == 3 and len(partner) == 2
    if passed:
        for i in range(2):
            diff = abs(base[i + 1].energy - partner[i].energy)
            worst = max(worst, diff)
            lines.append(
                f"level {i + 1} of original {base[i + 1].energy:.9f} vs "
                f"level {i} of partner {partner[i].energy:.9f}: diff={diff:.2e}"
            )
        passed = worst <= 1e-5
    else:
        lines.append("expected 3 + 2 bound levels, got "
                     f"{len(base)} + {len(partner)}")
        worst = np.inf
    return "susy-degeneracy", passed, worst, lines


def _convention_match(rows, values, label):
    """Which (scale per group, overall) assignments reproduce the published rows.

    rows: iterable of (state, l, lam, ref, tol); values: {(state, lam): per-part}.
    Returns (ok, worst, lines): ok means every row group matched under exactly
    one scale and that scale agrees with the documented row scale.
    """
    lines = []
    worst = 0.0
    ok = True
    groups = sorted({state for state, *_ in rows}, key=lambda s: s[0])
    for state in groups:
        group_rows = [row for row in rows if row[0] == state]
        matching_scales = []
        for scale, factor in (("per-part", 1.0), ("pair-sum", 2.0)):
            devs = [abs(factor * values[(r[0], r[2])] - r[3]) for r in group_rows]
            if all(d <= r[4] for d, r in zip(devs, group_rows)):
                matching_scales.append(scale)
            if scale == reference.ROW_SCALE[state]:
                worst = max(worst, max(devs))
                for r, d in zip(group_rows, devs):
                    lines.append(
                        f"{label} {state} lam={r[2]:g}: ours={factor * values[(r[0], r[2])]:.7f} "
                        f"published={r[3]:.6f} |dev|={d:.2e} (tol {r[4]:g}, {scale})"
                    )
        unique = matching_scales == [reference.ROW_SCALE[state]]
        if not unique:
            ok = False
            lines.append(f"{label} {state}: scale assignment not unique: {matching_scales}")
    return ok, worst, lines


def _table_suite(name, pinned, compute):
    """Shared machinery of the two table-reproduction suites."""
    lines = []
    results = {}
    for mu_mode in ("zero", "lambda"):
        values = {}
        for state, l, lam, _ref, _tol in pinned:
            key = (state, lam)
            if key not in values:
                mu = 0.0 if mu_mode == "zero" else lam
                values[key] = compute(lam, mu, l)
        ok, worst, mode_lines = _convention_match(pinned, values, f"mu={mu_mode}")
        results[mu_mode] = (ok, worst, values)
        lines.extend(mode_lines)
    modes_passing = [m for m, (ok, _, _) in results.items() if ok]
    unique_mode = modes_passing == ["zero"]
    lines.append(
        "screening convention pinned empirically: "
        f"passing modes = {modes_passing} (published column is consistent with mu=0; "
        f"mu=lambda worst deviation {results['lambda'][1]:.2e})"
    )
    passed = unique_mode
    worst = results["zero"][1]
    return name, passed, worst, lines


@_timed
def suite_table_oracle():
    """Published direct-numerical column reproduced by the grid oracle."""
    return _table_suite(
        "table-oracle",
        ORACLE_PINNED,
        lambda lam, mu, l: part_oracle_energy(lam, mu, l),
    )


@_timed
def suite_table_variational():
    """Published SUSY-variational column reproduced by minimize()."""

    def compute(lam, mu, l):
        return variational.minimize(ScreeningParams(q=2.0, lam=lam, mu=mu), l).energy

    name, passed, worst, lines = _table_suite("table-variational", VARIATIONAL_PINNED, compute)

    # the three anomalous published entries: justified by a monotonicity break
    # in the published column itself and by the deviation on the row scale
    lines.append("anomalous published entries (excluded from reproduction):")
    for (state, lam), why in sorted(reference.ANOMALOUS.items()):
        l = dict(reference.STATES)[state]
        published = reference.PUBLISHED[(state, lam)]["susyqm"]
        column = [reference.PUBLISHED[(state, x)]["susyqm"] for x in reference.LAMBDAS]
        idx = reference.LAMBDAS.index(lam)
        breaks_trend = (idx > 0 and published < column[idx - 1]) or (
            idx + 1 < len(column) and column[idx + 1] is not None and column[idx + 1] < published
        )
        scale = 1.0 if reference.ROW_SCALE[state] == "per-part" else 2.0
        try:
            ours = scale * variational.minimize(ScreeningParams(q=2.0, lam=lam, mu=0.0), l).energy
            dev = abs(ours - published)
            inconsistent = dev > 2e-3
            detail = f"ours ({reference.ROW_SCALE[state]}) {ours:.6f}, deviation {dev:.3f}"
        except (hierarchy.NoBoundStateError, ValueError) as err:
            inconsistent = True
            detail = f"no variational bound state ({err})"
        passed &= breaks_trend and inconsistent
        lines.append(
            f"  {state} lam={lam:g} published {published}: {why}; "
            f"monotone trend broken: {breaks_trend}; {detail}"
        )
    return name, passed, worst, lines


@_timed
def suite_variational_bound():
    """Variational energies bound the oracle from above (Yukawa, all channels)."""
    lines = []
    margin = np.inf
    passed = True
    for lam in (0.02, 0.05, 0.10):
        for l in range(4):
            try:
                e_oracle = part_oracle_energy(lam, 0.0, l)
            except oracle.UnboundLevelError:
                lines.append(f"lam={lam} l={l}: unbound, skipped")
                continue
            e_var = variational.minimize(ScreeningParams(q=2.0, lam=lam, mu=0.0), l).energy
            gap = e_var - e_oracle
            margin = min(margin, gap)
            ok = gap >= -1e-9
            passed &= ok
            lines.append(f"lam={lam} l={l}: var={e_var:.8f} oracle={e_oracle:.8f} gap={gap:.2e} ok={ok}")
    worst = 0.0 if margin >= 0 else -margin
    lines.append(f"smallest variational gap above oracle: {margin:.3e}")
    return "variational-bound", passed, worst, lines


@_timed
def suite_variant_invariance():
    """Non-PT energies equal the hermitian pair formula; PT recorded generically."""
    lines = []
    worst = 0.0
    passed = True
    for lam in (0.0, 0.02, 0.05, 0.1):
        for mu in (0.0, 0.02, 0.05, 0.1):
            for l in range(4):
                ref = hierarchy.closed_form_energy(2.0, lam, mu, l)
                e_nonpt = hierarchy.pair_energy(ScreeningParams(q=2.0, lam=lam, mu=mu, variant=NON_PT), l).energy
                dev = abs(e_nonpt - ref)
                worst = max(worst, dev)
                passed &= dev <= 1e-12

                e_pt = hierarchy.pair_energy(ScreeningParams(q=2.0, lam=lam, mu=mu, variant=PT), l).energy
                n = l + 1
                swapped = -(1.0 / n**2 + (lam**2 + mu**2) / 4 - mu / n)
                dev_pt = abs(e_pt - swapped)
                worst = max(worst, dev_pt)
                passed &= dev_pt <= 1e-12
                if lam != mu and l == 0:
                    lines.append(
                        f"pt lam={lam:g} mu={mu:g} l=0: pair={e_pt:.6f}, hermitian formula "
                        f"{ref:.6f} (discrepancy {abs(e_pt - ref):.3e}: screening roles exchange)"
                    )
    lines.insert(0, f"non-pt pair energies equal the hermitian formula to {worst:.2e} over the grid")
    return "variant-invariance", passed, worst, lines


@_timed
def suite_riccati(fault: float = 0.0):
    """Factorization identity across independent arithmetic paths."""
    grid = RadialGrid(r_min=0.1, r_max=50.0, n=1000)
    specs = [
        hierarchy.SuperpotentialSpec(a=0.1, l=0),
        hierarchy.SuperpotentialSpec(a=0.1, l=2),
        hierarchy.SuperpotentialSpec(a=0.02 - 0.02j, l=0),
        hierarchy.SuperpotentialSpec(a=0.02 - 0.02j, l=1),
    ]
    lines, worst, passed = [], 0.0, True
    for s in specs:
        e0 = hierarchy.part_ground_energy(s)
        res = hierarchy.riccati_residual(s, e0, grid, w_offset=fault)
        worst = max(worst, res)
        passed &= res <= 1e-12
        lines.append(f"a={s.a} l={s.l}: residual={res:.3e} (tol 1e-12)")
    # fault injection must be detected
    s = specs[0]
    injected = hierarchy.riccati_residual(s, hierarchy.part_ground_energy(s), grid, w_offset=1e-6)
    detected = injected >= 1e-7
    passed &= detected
    lines.append(f"injected 1e-6 offset: residual={injected:.3e} (must be >= 1e-7: {detected})")
    return "riccati-residual", passed, worst, lines


@_timed
def suite_determinism(seed: int = 0):
    """Byte-identical table and sweep output across runs and parallelism levels."""
    from . import cli

    def run(argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            rc = cli.main(argv)
        return rc, buf.getvalue()

    lines, passed = [], True
    table_args = ["table1", "--format", "csv", "--seed", str(seed)]
    outputs = [run(table_args + ["--jobs", str(j)]) for j in (1, 8, 8)]
    ok = all(rc == 0 for rc, _ in outputs) and len({text for _, text in outputs}) == 1
    passed &= ok
    lines.append(f"table1 csv identical across jobs 1/8/8: {ok} ({len(outputs[0][1])} bytes)")

    sweep_args = [
        "sweep", "--lambda", "0,0.05,0.1", "--l", "0,1,2", "--method", "closed-form",
        "--format", "json", "--seed", str(seed),
    ]
    outputs = [run(sweep_args + ["--jobs", str(j)]) for j in (1, 8, 8)]
    ok = all(rc == 0 for rc, _ in outputs) and len({text for _, text in outputs}) == 1
    passed &= ok
    lines.append(f"sweep json identical across jobs 1/8/8: {ok} ({len(outputs[0][1])} bytes)")
    return "determinism", passed, 0.0 if passed else 1.0, lines


ALL_SUITES = (
    ("algebraic-identity", suite_algebraic_identity),
    ("coulomb-limits", suite_coulomb_limits),
    ("hulthen-loop", suite_hulthen_loop),
    ("susy-degeneracy", suite_susy_degeneracy),
    ("table-oracle", suite_table_oracle),
    ("table-variational", suite_table_variational),
    ("variational-bound", suite_variational_bound),
    ("variant-invariance", suite_variant_invariance),
    ("riccati-residual", suite_riccati),
    ("determinism", suite_determinism),
)


def run_all(seed: int = 0, riccati_fault: float = 0.0, names=None):
    """Run the verification suites, returning a list of SuiteResult."""
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for name, fn in ALL_SUITES:
            if names is not None and name not in names:
                continue
            if name == "algebraic-identity":
                results.append(fn(seed))
            elif name == "riccati-residual":
                results.append(fn(riccati_fault))
            elif name == "determinism":
                results.append(fn(seed))
            else:
                results.append(fn())
    return results
