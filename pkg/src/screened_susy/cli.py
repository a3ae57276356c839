"""Command-line interface: energy points, sweeps, table reproduction, verification.

    screened-susy energy --lambda 0.02 --l 0 --method all
    screened-susy sweep --lambda 0,0.05,0.1 --l 0,1 --method closed-form --format csv
    screened-susy table1 --format csv
    screened-susy verify --seed 0

Exit codes: 0 success, 1 usage error, 2 computation error (unbound state or
no convergence), 3 verification failure.

Energies are computed in internal units (hbar = m = 1, Hartree-like); pass
`--units rydberg` to double them on output.  CSV records carry the columns
state,l,lambda,mu,method,convention,energy,units,v_star,residual,flag with
empty fields for missing values; JSON output is one array of record objects
with the same keys and numbers rounded to 9 significant digits.

The `energy` and `sweep` commands default the cosine frequency to mu = lambda
(the conventional parametrization of this potential family); `table1` defaults
to mu = 0, the convention the published reference columns are numerically
consistent with (see `--mu-convention`).
"""

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import hierarchy, oracle, reference, variational
from .potentials import HERMITIAN, NON_PT, PT, ScreeningParams

CSV_COLUMNS = ("state", "l", "lambda", "mu", "method", "convention", "energy",
               "units", "v_star", "residual", "flag")

POTENTIALS = {
    "ecsc": HERMITIAN,
    "yukawa": HERMITIAN,
    "coulomb": HERMITIAN,
    "ecsc-nonpt": NON_PT,
    "ecsc-pt": PT,
}

DEFAULTS = {
    "potential": "ecsc",
    "lam": "0.0",
    "mu": None,
    "q": 2.0,
    "l": "0",
    "method": "all",
    "units": "internal",
    "fmt": "table",
    "jobs": 1,
    "seed": 0,
    "mu_convention": "zero",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def state_label(l: int) -> str:
    letters = "spdfgh"
    return f"{l + 1}{letters[l]}" if l < len(letters) else f"n{l + 1}l{l}"


def _fmt(x) -> str:
    return "" if x is None else f"{x:.9g}"


def _round9(x):
    return None if x is None else float(f"{x:.9g}")


def build_parser() -> _Parser:
    parser = _Parser(prog="screened-susy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--potential", choices=sorted(POTENTIALS))
        p.add_argument("--lambda", dest="lam", help="screening rate (comma list allowed in sweep)")
        p.add_argument("--mu", type=float, help="cosine frequency (default: lambda; 0 for table1)")
        p.add_argument("--q", type=float, help="coupling strength (default 2)")
        p.add_argument("--l", help="angular momentum (comma list allowed in sweep)")
        p.add_argument("--method", choices=["closed-form", "variational", "oracle", "all"])
        p.add_argument("--units", choices=["internal", "rydberg"])
        p.add_argument("--format", dest="fmt", choices=["table", "csv", "json"])
        p.add_argument("--config", help="flat key = value file; flags override it")
        p.add_argument("--jobs", type=int, help="parallel workers for sweeps")
        p.add_argument("--seed", type=int, help="seed for randomized checks")

    add_common(sub.add_parser("energy", help="energies at a single parameter point"))
    add_common(sub.add_parser("sweep", help="energy records over a (lambda, l) grid"))
    p_table = sub.add_parser("table1", help="reproduce the published reference table")
    add_common(p_table)
    p_table.add_argument("--mu-convention", dest="mu_convention", choices=["zero", "lambda"],
                         help="cosine frequency used for the table (default zero)")
    p_verify = sub.add_parser("verify", help="run the verification suites")
    add_common(p_verify)
    p_verify.add_argument("--inject-riccati-fault", action="store_true",
                          help="test hook: perturb the superpotential so the riccati suite fails")
    return parser


def load_config(path: str) -> dict:
    values = {}
    keymap = {"lambda": "lam", "format": "fmt", "mu-convention": "mu_convention"}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {raw.rstrip()}")
            key, value = (part.strip() for part in line.split("=", 1))
            values[keymap.get(key, key.replace("-", "_"))] = value
    return values


def resolve_options(args) -> dict:
    """Merge CLI flags, config file and defaults (in that priority)."""
    config = load_config(args.config) if getattr(args, "config", None) else {}
    opts = {}
    casts = {"q": float, "mu": float, "jobs": int, "seed": int}
    for key, default in DEFAULTS.items():
        value = getattr(args, key, None)
        if value is None and key in config:
            value = casts.get(key, str)(config[key])
        if value is None:
            value = default
        opts[key] = value
    if opts["jobs"] < 1:
        raise UsageError("--jobs must be at least 1")
    return opts


def _parse_list(text, cast, what):
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    try:
        return [cast(tok) for tok in text.split(",")]
    except ValueError as err:
        raise UsageError(f"bad {what} list {text!r}: {err}") from None


def _resolve_point(opts, lam, l):
    variant = POTENTIALS[opts["potential"]]
    if opts["potential"] == "coulomb":
        lam, mu = 0.0, 0.0
    elif opts["potential"] == "yukawa":
        mu = 0.0
    else:
        mu = opts["mu"] if opts["mu"] is not None else lam
    q = opts["q"]
    return ScreeningParams(q=q, lam=lam, mu=mu, variant=variant), l


def _record(state, l, lam, mu, method, convention, energy, units, v_star=None,
            residual=None, flag=""):
    scale = 2.0 if units == "rydberg" else 1.0
    return {
        "state": state,
        "l": l,
        "lambda": lam,
        "mu": mu,
        "method": method,
        "convention": convention,
        "energy": None if energy is None else scale * energy,
        "units": units,
        "v_star": v_star,
        "residual": residual,
        "flag": flag,
    }


def point_records(p: ScreeningParams, l: int, methods, units: str):
    """Per-part and pair-sum records for one parameter point and method set."""
    records = []
    state = state_label(l)

    def emit(method, per_part, pair_sum, v_star=None, residual=None, flag=""):
        records.append(_record(state, l, p.lam, p.mu, method, "per-part", per_part,
                               units, v_star, residual, flag))
        records.append(_record(state, l, p.lam, p.mu, method, "pair-sum", pair_sum,
                               units, v_star, residual, flag))

    if "closed-form" in methods:
        pair = (p.q / 2) * hierarchy.pair_energy(ScreeningParams(q=2.0, lam=p.lam, mu=p.mu, variant=p.variant), l).energy
        emit("closed-form", pair / 2, pair)
    if "variational" in methods:
        rep = variational.minimize(p, l, g=p.q / 2)
        flag = rep.flag
        if rep.energy >= 0:
            flag = (flag + " no-binding").strip()
        emit("variational", rep.energy, 2 * rep.energy, rep.v_star, rep.residual, flag)
    if "oracle" in methods:
        if p.variant != HERMITIAN:
            emit("oracle", None, None, flag="not-applicable")
        else:
            strength = p.q / 2

            def pot(r):
                return -strength * np.exp(-p.lam * r) * np.cos(p.mu * r) / r

            k = strength / (l + 1) - p.lam / 2
            prob = oracle.RadialProblem(potential=pot, l=l, kappa_est=k if k > 0 else None)
            try:
                res = oracle.solve_level(prob, 0, grid_check=False)
                emit("oracle", res.energy, 2 * res.energy, residual=res.matching_residual)
            except oracle.UnboundLevelError:
                emit("oracle", None, None, flag="unbound")
    return records


def render_csv(records) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        row = []
        for col in CSV_COLUMNS:
            val = rec[col]
            if val is None:
                row.append("")
            elif col in ("lambda", "mu"):
                row.append(f"{val:g}")
            elif col in ("energy", "v_star"):
                row.append(_fmt(val))
            elif col == "residual":
                row.append("" if val is None else f"{val:.3e}")
            else:
                row.append(str(val))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def render_json(records) -> str:
    out = []
    for rec in records:
        item = dict(rec)
        for key in ("energy", "v_star", "residual"):
            item[key] = _round9(item[key])
        item["lambda"] = _round9(item["lambda"])
        item["mu"] = _round9(item["mu"])
        out.append(item)
    return json.dumps(out, indent=2) + "\n"


def render_table(records) -> str:
    header = f"{'state':>5} {'l':>2} {'lambda':>8} {'mu':>8} {'method':>12} " \
             f"{'convention':>10} {'energy':>15} {'units':>8} {'v*':>10} {'residual':>10} flag"
    lines = [header, "-" * len(header)]
    for rec in records:
        energy = "---" if rec["energy"] is None else f"{rec['energy']:+.9f}"
        v_star = "" if rec["v_star"] is None else f"{rec['v_star']:.6f}"
        residual = "" if rec["residual"] is None else f"{rec['residual']:.2e}"
        lines.append(
            f"{rec['state']:>5} {rec['l']:>2} {rec['lambda']:>8g} {rec['mu']:>8g} "
            f"{rec['method']:>12} {rec['convention']:>10} {energy:>15} "
            f"{rec['units']:>8} {v_star:>10} {residual:>10} {rec['flag']}"
        )
    return "\n".join(lines) + "\n"


def _render(records, fmt) -> str:
    if fmt == "csv":
        return render_csv(records)
    if fmt == "json":
        return render_json(records)
    return render_table(records)


def cmd_energy(opts) -> int:
    lam = _parse_list(opts["lam"], float, "lambda")
    ls = _parse_list(opts["l"], int, "l")
    if len(lam) != 1 or len(ls) != 1:
        raise UsageError("energy takes a single --lambda and a single --l")
    p, l = _resolve_point(opts, lam[0], ls[0])
    methods = ["closed-form", "variational", "oracle"] if opts["method"] == "all" else [opts["method"]]
    records = point_records(p, l, methods, opts["units"])
    sys.stdout.write(_render(records, opts["fmt"]))
    return 0


def cmd_sweep(opts) -> int:
    lams = _parse_list(opts["lam"], float, "lambda")
    ls = _parse_list(opts["l"], int, "l")
    methods = ["closed-form", "variational", "oracle"] if opts["method"] == "all" else [opts["method"]]
    points = [(lam, l) for lam in lams for l in ls]

    def work(point):
        lam, l = point
        try:
            p, l = _resolve_point(opts, lam, l)
            return point_records(p, l, methods, opts["units"])
        except (hierarchy.NoBoundStateError, oracle.UnboundLevelError,
                variational.QuadratureConvergenceError, ValueError) as err:
            mu = opts["mu"] if opts["mu"] is not None else lam
            return [_record(state_label(l), l, lam, mu, method, "pair-sum", None,
                            opts["units"], flag=f"error: {err}") for method in methods]

    if opts["jobs"] > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=opts["jobs"]) as pool:
            chunks = list(pool.map(work, points))
    else:
        chunks = [work(point) for point in points]
    records = [rec for chunk in chunks for rec in chunk]
    sys.stdout.write(_render(records, opts["fmt"]))
    return 0


def cmd_table1(opts) -> int:
    """Published reference table alongside our three methods, with deviations."""
    units = opts["units"]
    cells = [(state, l, lam) for state, l in reference.STATES for lam in reference.LAMBDAS]

    def work(cell):
        state, l, lam = cell
        if opts["mu"] is not None:
            mu = opts["mu"]
        else:
            mu = 0.0 if opts["mu_convention"] == "zero" else lam
        p = ScreeningParams(q=opts["q"], lam=lam, mu=mu, variant=HERMITIAN)
        recs = []
        try:
            recs += point_records(p, l, ["closed-form"], units)
        except hierarchy.NoBoundStateError as err:
            recs += [_record(state, l, lam, mu, "closed-form", "pair-sum", None, units,
                             flag=f"error: {err}")]
        recs += point_records(p, l, ["variational", "oracle"], units)

        scale_key = reference.ROW_SCALE[state]
        published = reference.PUBLISHED[(state, lam)]
        anomaly = "ANOMALOUS" if (state, lam) in reference.ANOMALOUS else ""
        for column, method in (("susyqm", "reference-susyqm"), ("exact", "reference-exact")):
            value = published[column]
            compare_method = "variational" if column == "susyqm" else "oracle"
            deviation = None
            if value is not None:
                ours = next((r["energy"] for r in recs
                             if r["method"] == compare_method and r["convention"] == scale_key), None)
                deviation = None if ours is None else abs(ours - (2.0 if units == "rydberg" else 1.0) * value)
            recs.append(_record(state, l, lam, mu, method, scale_key, value, units,
                                residual=deviation, flag=anomaly if column == "susyqm" else ""))
        return recs

    if opts["jobs"] > 1:
        with ThreadPoolExecutor(max_workers=opts["jobs"]) as pool:
            chunks = list(pool.map(work, cells))
    else:
        chunks = [work(cell) for cell in cells]
    records = [rec for chunk in chunks for rec in chunk]
    sys.stdout.write(_render(records, opts["fmt"]))
    return 0


def cmd_verify(opts, riccati_fault: bool) -> int:
    from . import verify

    results = verify.run_all(seed=opts["seed"], riccati_fault=1e-6 if riccati_fault else 0.0)
    # timings go to stderr so the report bytes are identical across runs
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        sys.stdout.write(f"[{status}] {res.name}: worst deviation {res.worst:.3e}\n")
        for line in res.lines:
            sys.stdout.write(f"    {line}\n")
        print(f"{res.name}: {res.elapsed:.2f} s", file=sys.stderr)
    failed = [res.name for res in results if not res.passed]
    if failed:
        sys.stdout.write(f"FAILED suites: {', '.join(failed)}\n")
        return 3
    sys.stdout.write(f"all {len(results)} suites passed\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help and friends
            return 0 if exc.code in (0, None) else 1
        opts = resolve_options(args)
        if args.command == "energy":
            return cmd_energy(opts)
        if args.command == "sweep":
            return cmd_sweep(opts)
        if args.command == "table1":
            return cmd_table1(opts)
        return cmd_verify(opts, getattr(args, "inject_riccati_fault", False))
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except (hierarchy.NoBoundStateError, oracle.UnboundLevelError,
            variational.QuadratureConvergenceError) as err:
        print(f"computation error: {err}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as err:
        print(f"computation error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
