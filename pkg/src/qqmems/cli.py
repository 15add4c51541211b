"""Command-line front end emitting deterministic CSV/JSON artifacts.

Subcommands map one-to-one onto the library's result families:

* curves   -- the three fixed-purity ceilings on a purity grid
* gap      -- triply-degenerate ceiling vs the literature comparison curve
* certify  -- numerical verification of the SDP optimality certificates
* tgx2     -- rank-2 TGX maximization vs the rank-2 X ceiling
* tgx3     -- rank-3 TGX maximization vs the rank-3 X ceiling
* acs      -- alternate-convex-search sweep summaries (optional round traces)
* prop1    -- brute-force fuzz of the optimal spectrum assignment
* state    -- one constructed state as a JSON record

Configuration precedence: command-line flags > QQMEMS_-prefixed environment
variables > built-in defaults; `--print-config` shows the resolved values.
Numbers are written with 17 significant digits, comma-separated, LF line
endings; undefined values become empty cells with a populated reason column.

Exit codes: 0 success, 1 usage error, 2 check failure, 3 I/O error.
"""

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, asdict

import numpy as np

from .acs import acs_run, acs_sweep
from .linalg import negativity, purity, random_density_fixed_purity
from .purity_mems import (
    THEOREMS,
    construct_deg,
    construct_rank2,
    construct_rank3,
    deg_spectrum,
    hedemann_negativity,
    n_x_p_deg,
    n_x_p_rank2,
    n_x_p_rank3,
    rank2_spectrum,
    rank3_spectrum,
    verify_certificate,
)
from .spectrum import (
    OPTIMAL_SEQUENCE,
    best_sequence_bruteforce,
    construct_spectrum_xmems,
    n_x_lambda,
    random_spectrum,
    s_value,
    validate_spectrum,
)
from .tgx import maximize_tgx2, maximize_tgx3, tgx2_matrix, tgx3_matrix

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK = 2
EXIT_IO = 3

ENV_PREFIX = "QQMEMS_"

# (field, type, default) triples; environment variables are the upper-cased
# field names with the QQMEMS_ prefix, e.g. QQMEMS_SEED.
_CONFIG_FIELDS = (
    ("p_min", float, None),
    ("p_max", float, None),
    ("p_steps", int, 50),
    ("seed", int, 0),
    ("restarts", int, 32),
    ("runs", int, 100),
    ("count", int, 10_000),
    ("tolerance", float, 1e-10),
    ("output", str, "-"),
    ("trace_output", str, None),
)


@dataclass
class RunConfig:
    command: str
    p_min: float = None
    p_max: float = None
    p_steps: int = 50
    seed: int = 0
    restarts: int = 32
    runs: int = 100
    count: int = 10_000
    tolerance: float = 1e-10
    output: str = "-"
    trace_output: str = None
    theorem: str = None
    family: str = None
    p: float = None
    spectrum: str = None


class UsageError(Exception):
    pass


class CheckError(Exception):
    pass


def _fmt(x):
    """One CSV cell: 17 significant digits, empty string for undefined."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def _env_default(name, typ, fallback):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return fallback
    try:
        return typ(raw)
    except ValueError as exc:
        raise UsageError(f"environment variable {ENV_PREFIX}{name.upper()}={raw!r}: {exc}")


def _grid(cfg, lo, hi_default=0.999, name="purity"):
    """Resolved [p_min, p_max] grid with p_steps points, domain-clipped."""
    p_min = cfg.p_min if cfg.p_min is not None else lo
    p_max = cfg.p_max if cfg.p_max is not None else hi_default
    if cfg.p_steps < 1:
        raise UsageError(f"p_steps must be >= 1, got {cfg.p_steps}")
    if cfg.p_steps > 1 and not (p_min < p_max):
        raise UsageError(f"{name} grid needs p_min < p_max, got [{p_min}, {p_max}]")
    if p_min > p_max:
        raise UsageError(f"{name} grid needs p_min <= p_max, got [{p_min}, {p_max}]")
    if p_max >= 1.0:
        raise UsageError(f"{name} grid upper end {p_max} must be < 1")
    if cfg.p_steps == 1:
        return np.array([p_min])
    return np.linspace(p_min, p_max, cfg.p_steps)


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    try:
        return open(path, "w", newline=""), True
    except OSError as exc:
        raise _IOFailure(str(exc))


class _IOFailure(Exception):
    pass


def _write_csv(path, header, rows):
    fh, close = _open_output(path)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])
    except OSError as exc:
        raise _IOFailure(str(exc))
    finally:
        if close:
            fh.close()


def _write_json(path, obj):
    fh, close = _open_output(path)
    try:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
    except OSError as exc:
        raise _IOFailure(str(exc))
    finally:
        if close:
            fh.close()


def _validated(value, state_matrix, tol, label):
    """Gate an emitted negativity against the generic trace-norm value."""
    oracle = negativity(state_matrix)
    if abs(value - oracle) > tol:
        raise CheckError(
            f"{label}: closed-form value {value!r} deviates from trace-norm "
            f"value {oracle!r} by {abs(value - oracle):.3e} (> {tol:g})"
        )
    return value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_curves(cfg):
    rows = []
    for P in _grid(cfg, 0.2 + 1e-9):
        n2 = _validated(n_x_p_rank2(P), construct_rank2(P).to_matrix(), cfg.tolerance, f"N2@{P}") if P >= 0.5 else None
        n3 = _validated(n_x_p_rank3(P), construct_rank3(P).to_matrix(), cfg.tolerance, f"N3@{P}") if P >= 1.0 / 3.0 else None
        nd = _validated(n_x_p_deg(P), construct_deg(P).to_matrix(), cfg.tolerance, f"Ndeg@{P}") if P > 0.2 else None
        rows.append((P, n2, n3, nd))
    _write_csv(cfg.output, ["P", "N2", "N3", "Ndeg"], rows)
    return EXIT_OK


def cmd_gap(cfg):
    rows = []
    for P in _grid(cfg, 0.2 + 1e-9):
        nd = _validated(n_x_p_deg(P), construct_deg(P).to_matrix(), cfg.tolerance, f"Ndeg@{P}")
        nh = hedemann_negativity(P)
        if nh is None:
            rows.append((P, nd, None, None, "negative radicand"))
        else:
            rows.append((P, nd, nh, nd - nh, ""))
    _write_csv(cfg.output, ["P", "Ndeg", "Nhed", "diff", "reason"], rows)
    return EXIT_OK


_CERT_DOMAINS = {"rank2": 0.5, "rank3": 1.0 / 3.0, "deg": 0.2 + 1e-9}


def cmd_certify(cfg):
    if cfg.theorem is not None and cfg.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {cfg.theorem!r}; expected one of {THEOREMS}")
    jobs = []
    if cfg.p is not None:
        if cfg.theorem is None:
            raise UsageError("--p requires --theorem")
        lo = _CERT_DOMAINS[cfg.theorem]
        if not (lo <= cfg.p < 1.0) and not (cfg.theorem == "deg" and 0.2 < cfg.p < 1.0):
            raise UsageError(f"purity {cfg.p} outside the {cfg.theorem} domain")
        jobs.append((cfg.theorem, cfg.p))
    else:
        theorems = (cfg.theorem,) if cfg.theorem else THEOREMS
        for th in theorems:
            for P in _grid(cfg, _CERT_DOMAINS[th]):
                jobs.append((th, float(P)))
    reports = [verify_certificate(th, P, tol=cfg.tolerance, strict=False) for th, P in jobs]
    ok = all(r.verified for r in reports)
    _write_json(
        cfg.output,
        {"all_verified": ok, "count": len(reports), "reports": [r.to_dict() for r in reports]},
    )
    if not ok:
        bad = [(r.theorem_id, r.P) for r in reports if not r.verified]
        raise CheckError(f"certificate verification failed at {bad}")
    return EXIT_OK


def _cmd_tgx(cfg, lo, maximizer, matrix_fn, reference):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    for P in _grid(cfg, lo):
        result = maximizer(P, restarts=cfg.restarts, rng=np.random.default_rng(rng.integers(2**63)))
        best = _validated(
            result.best_value, matrix_fn(result.best_params), cfg.tolerance, f"tgx@{P}"
        )
        ref = reference(P)
        rows.append((P, best, ref, best - ref))
    _write_csv(cfg.output, ["P", "tgx_max", "x_reference", "gap"], rows)
    return EXIT_OK


def cmd_tgx2(cfg):
    return _cmd_tgx(cfg, 0.5, maximize_tgx2, tgx2_matrix, n_x_p_rank2)


def cmd_tgx3(cfg):
    return _cmd_tgx(cfg, 1.0 / 3.0, maximize_tgx3, tgx3_matrix, n_x_p_rank3)


def cmd_acs(cfg):
    p_min = cfg.p_min if cfg.p_min is not None else 0.21
    p_max = cfg.p_max if cfg.p_max is not None else 0.99
    if not (0.2 < p_min < p_max < 1.0):
        raise UsageError(f"acs purity window [{p_min}, {p_max}] outside (1/5, 1)")
    if cfg.runs < 0:
        raise UsageError(f"runs must be >= 0, got {cfg.runs}")
    rng = np.random.default_rng(cfg.seed)
    purities = np.sort(rng.uniform(p_min, p_max, size=cfg.runs))
    summaries = acs_sweep(purities, 1, rng)
    rows = []
    for s in summaries:
        rows.append((s.P, s.seed, s.best_value, s.reference, s.deviation, s.rounds, s.converged))
    _write_csv(
        cfg.output,
        ["P", "seed", "best_value", "n_deg_reference", "deviation", "rounds", "converged"],
        rows,
    )
    if cfg.trace_output is not None:
        trace_rows = []
        for idx, s in enumerate(summaries[: min(4, len(summaries))]):
            rho0 = random_density_fixed_purity(s.P, np.random.default_rng(s.seed))
            trace = acs_run(s.P, rho0)
            for rnd, val in enumerate(trace.rounds):
                trace_rows.append((idx, s.P, rnd, val))
        _write_csv(cfg.trace_output, ["run_index", "P", "round", "value"], trace_rows)
    return EXIT_OK


def cmd_prop1(cfg):
    if cfg.count < 0:
        raise UsageError(f"count must be >= 0, got {cfg.count}")
    rng = np.random.default_rng(cfg.seed)
    violations = 0
    worst = 0.0
    for _ in range(cfg.count):
        lam = random_spectrum(rng)
        _, brute = best_sequence_bruteforce(lam)
        closed = s_value(lam, OPTIMAL_SEQUENCE)
        dev = abs(brute - closed)
        worst = max(worst, dev)
        if dev > 1e-12:
            violations += 1
    fh, close = _open_output(cfg.output)
    try:
        fh.write(f"spectra tested: {cfg.count}\n")
        fh.write(f"optimal assignment: {OPTIMAL_SEQUENCE}\n")
        fh.write(f"violations (|brute-force - closed form| > 1e-12): {violations}\n")
        fh.write(f"worst deviation: {_fmt(worst)}\n")
    except OSError as exc:
        raise _IOFailure(str(exc))
    finally:
        if close:
            fh.close()
    if violations:
        raise CheckError(f"{violations} spectra violated the optimal-assignment rule")
    return EXIT_OK


_FAMILIES = {
    "rank2": (rank2_spectrum, construct_rank2, n_x_p_rank2, 0.5),
    "rank3": (rank3_spectrum, construct_rank3, n_x_p_rank3, 1.0 / 3.0),
    "deg": (deg_spectrum, construct_deg, n_x_p_deg, 0.2),
}


def cmd_state(cfg):
    if cfg.family in _FAMILIES:
        if cfg.p is None:
            raise UsageError(f"--family {cfg.family} requires --p")
        spectrum_fn, construct, curve, lo = _FAMILIES[cfg.family]
        try:
            state = construct(cfg.p)
            lam = spectrum_fn(cfg.p)
            expected = max(0.0, curve(cfg.p))
        except ValueError as exc:
            raise UsageError(str(exc))
    elif cfg.family == "spectrum":
        if cfg.spectrum is None:
            raise UsageError("--family spectrum requires --spectrum l1,...,l6")
        try:
            lam = validate_spectrum([float(t) for t in cfg.spectrum.split(",")])
            state = construct_spectrum_xmems(lam)
            expected = max(0.0, n_x_lambda(lam))
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        raise UsageError(f"unknown family {cfg.family!r}; expected rank2|rank3|deg|spectrum")
    rho = state.to_matrix()
    value = _validated(expected, rho, cfg.tolerance, f"state {cfg.family}")
    _write_json(
        cfg.output,
        {
            "family": cfg.family,
            "P": cfg.p,
            "params": state.to_dict(),
            "matrix_real": np.real(rho).tolist(),
            "matrix_imag": np.imag(rho).tolist(),
            "spectrum": [float(x) for x in lam],
            "negativity": value,
            "purity": purity(rho),
        },
    )
    return EXIT_OK


_COMMANDS = {
    "curves": cmd_curves,
    "gap": cmd_gap,
    "certify": cmd_certify,
    "tgx2": cmd_tgx2,
    "tgx3": cmd_tgx3,
    "acs": cmd_acs,
    "prop1": cmd_prop1,
    "state": cmd_state,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="qqmems", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--p-min", type=float, default=None)
        p.add_argument("--p-max", type=float, default=None)
        p.add_argument("--p-steps", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--restarts", type=int, default=None)
        p.add_argument("--runs", type=int, default=None)
        p.add_argument("--count", type=int, default=None)
        p.add_argument("--tolerance", type=float, default=None)
        p.add_argument("--output", "-o", default=None)
        p.add_argument("--trace-output", default=None)
        p.add_argument("--print-config", action="store_true")
        if name == "certify":
            p.add_argument("--theorem", choices=THEOREMS, default=None)
            p.add_argument("--p", type=float, default=None)
        if name == "state":
            p.add_argument("--family", default=None)
            p.add_argument("--p", type=float, default=None)
            p.add_argument("--spectrum", default=None)
    return parser


def resolve_config(argv):
    """Parse argv into a RunConfig, applying flag > env > default precedence."""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required")
    cfg = RunConfig(command=args.command)
    for name, typ, default in _CONFIG_FIELDS:
        flag_value = getattr(args, name, None)
        value = flag_value if flag_value is not None else _env_default(name, typ, default)
        setattr(cfg, name, value)
    for extra in ("theorem", "family", "p", "spectrum"):
        if hasattr(args, extra):
            setattr(cfg, extra, getattr(args, extra))
    return cfg, args.print_config


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg, print_config = resolve_config(argv)
        if print_config:
            print(json.dumps(asdict(cfg), indent=2))
            return EXIT_OK
        return _COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        # Library-level domain rejections surface as usage errors.
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckError as exc:
        print(f"check failure: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except _IOFailure as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
