"""Command-line tables for the discrete Bessel and Mathieu functions.

Run ``python3 -m discrete_special <command> --help`` for the flags.  Every
command writes CSV (header plus rows) or JSON to ``--out`` or standard output.
Numbers are written with ``repr``, the shortest decimal that reads back to
the same double, so identical arguments give byte-identical files.

Exit codes: 0 success, 1 an identity check exceeded its tolerance,
2 invalid arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import bessel, mathieu_continuous as mc, mathieu_discrete as md
from .errors import InsufficientResolutionError, UnsupportedConfigurationError

EXIT_OK, EXIT_CONTRACT, EXIT_USAGE = 0, 1, 2

# keys of the identity-suite report, in output order
IDENTITY_KEYS = (
    "bessel_reality",
    "bessel_parity",
    "plane_wave",
    "linear_relation_even",
    "linear_relation_odd",
    "graf_addition",
    "angular_agreement",
    "coefficient_halving",
    "discrete_orthogonality",
    "se_even_match",
    "se_odd_mismatch",
    "separability",
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Grid:
    start: float
    stop: float
    step: float

    def values(self) -> list[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]

    @classmethod
    def parse(cls, text: str) -> "Grid":
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"grid must look like min:max:step, got {text!r}")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise UsageError(f"grid entries must be numbers, got {text!r}") from None
        if not all(math.isfinite(v) for v in (start, stop, step)):
            raise UsageError("grid entries must be finite")
        if step <= 0:
            raise UsageError(f"grid step must be positive, got {step!r}")
        if start > stop:
            raise UsageError(f"grid min {start!r} exceeds max {stop!r}")
        return cls(start, stop, step)


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_points: int
    q: float
    orders: tuple[int, ...]
    grid: Grid | None
    fmt: str
    out: str | None
    tolerance: float | None


@dataclass
class ComparisonReport:
    """Rows of (argument, discrete, continuous, difference) plus a summary."""

    columns: list[str]
    rows: list[list] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _num(x) -> float:
    return float(x)


def _summarise(rows, key_cols, arg_col, diff_col, tolerance):
    """Per-series maximum difference and the end of the leading in-tolerance run."""
    groups: dict = {}
    for row in rows:
        groups.setdefault(tuple(row[i] for i in key_cols), []).append(row)
    out = []
    for key, group in groups.items():
        diffs = [r[diff_col] for r in group]
        valid = None
        for r in group:
            if r[diff_col] < tolerance:
                valid = r[arg_col]
            else:
                break
        out.append({"series": list(key), "max_diff": max(diffs), "valid_up_to": valid})
    return out


# ---------------------------------------------------------------------------
# commands

def cmd_bessel_table(cfg: RunConfig) -> tuple[dict, int]:
    N = cfg.n_points
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-12
    grid = cfg.grid or Grid(0.0, 2.0 * N - 1.0, 0.5)
    rho = np.array(grid.values())
    report = ComparisonReport(["order", "rho", "discrete", "continuous", "abs_diff", "within_tolerance"])
    for n in cfg.orders:
        disc = np.atleast_1d(bessel.discrete_bessel(N, n, rho))
        cont = np.atleast_1d(bessel.continuous_bessel_j(n, rho))
        for r, a, b in zip(rho, disc, cont):
            d = abs(a - b)
            report.rows.append([n, _num(r), _num(a), _num(b), _num(d), bool(d < tol)])
    report.summary = {"tolerance": tol, "series": _summarise(report.rows, [0], 1, 4, tol)}
    return _pack(cfg, report), EXIT_OK


def cmd_mathieu_angular(cfg: RunConfig) -> tuple[dict, int]:
    N, q = cfg.n_points, cfg.q
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-12
    report = ComparisonReport(["kind", "order", "point", "psi", "discrete", "continuous",
                               "abs_diff", "within_tolerance"])
    for kind in ("ce", "se"):
        for n in cfg.orders:
            if kind == "se" and n == 0:
                continue
            d = md.discrete_angular(kind, n, q, N)
            cont = np.atleast_1d(mc.angular(d.solution, d.circle.angles))
            for psi, a, b in zip(d.circle.angles, d.samples, cont):
                diff = abs(a - b)
                report.rows.append([kind, n, "lattice", _num(psi), _num(a), _num(b),
                                    _num(diff), bool(diff < tol)])
            if cfg.grid is not None:
                psi = np.array(cfg.grid.values())
                disc = np.atleast_1d(md.continued_angular(d, psi))
                cont = np.atleast_1d(mc.angular(d.solution, psi))
                for p, a, b in zip(psi, disc, cont):
                    diff = abs(a - b)
                    report.rows.append([kind, n, "continued", _num(p), _num(a), _num(b),
                                        _num(diff), bool(diff < tol)])
    lattice = [r for r in report.rows if r[2] == "lattice"]
    report.summary = {
        "tolerance": tol,
        "lattice": [{"series": [k, n], "max_diff": m}
                    for (k, n), m in _max_by(lattice, (0, 1), 6).items()],
    }
    return _pack(cfg, report), EXIT_OK


def _max_by(rows, key_cols, value_col):
    out: dict = {}
    for r in rows:
        key = tuple(r[i] for i in key_cols)
        out[key] = max(out.get(key, 0.0), r[value_col])
    return out


def cmd_mathieu_radial(cfg: RunConfig) -> tuple[dict, int]:
    N, q = cfg.n_points, cfg.q
    if q <= 0:
        raise UsageError("mathieu-radial needs q > 0")
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-9
    grid = cfg.grid or Grid(0.0, 3.0, 0.05)
    rr = np.array(grid.values())
    report = ComparisonReport(["kind", "order", "varrho", "discrete", "continuous",
                               "abs_diff", "imag_residue", "within_tolerance"])
    for kind in ("ce", "se"):
        for n in cfg.orders:
            if kind == "se" and n == 0:
                continue
            z = np.atleast_1d(md.discrete_radial_complex(kind, n, q, N, rr))
            cont = np.atleast_1d(mc.radial(mc.solve_mathieu(kind, n, q), rr))
            for r, a, b in zip(rr, z, cont):
                diff = abs(a.real - b)
                report.rows.append([kind, n, _num(r), _num(a.real), _num(b), _num(diff),
                                    _num(abs(a.imag)), bool(diff < tol)])
    report.summary = {"tolerance": tol, "series": _summarise(report.rows, [0, 1], 2, 5, tol)}
    return _pack(cfg, report), EXIT_OK


def cmd_ellipse_lattice(cfg: RunConfig) -> tuple[dict, int]:
    grid = cfg.grid or Grid(0.5, 1.5, 0.5)
    lattice = md.elliptic_lattice(cfg.n_points, grid.values())
    report = ComparisonReport(["varrho", "m", "x", "y"])
    report.rows = [[r, m, x, y] for r, m, x, y in lattice.points()]
    report.summary = {"foci": [list(f) for f in lattice.foci]}
    return _pack(cfg, report), EXIT_OK


def identity_suite(N: int, q: float, orders=(0, 1)) -> dict:
    """Residual and tolerance of every identity check, keyed by :data:`IDENTITY_KEYS`.

    The angular Mathieu checks use ``ce`` and ``se`` of the given orders.  On a
    small lattice keep the orders low: even- and odd-frequency functions fold
    onto each other once their coefficients near ``N/2`` are no longer
    negligible, which spoils the discrete orthogonality first.
    """
    checks = {}
    j = (N - 1) // 2
    rhos = (0.5, 3.7, 0.4 * N)

    worst = 0.0
    for n in range(-N, N + 1):
        for r in rhos:
            worst = max(worst, abs(bessel.discrete_bessel_complex(N, n, r).imag))
    checks["bessel_reality"] = (worst, 1e-14)

    worst = 0.0
    for n in range(N):
        for r in rhos:
            b = bessel.discrete_bessel(N, n, r)
            sign = -1.0 if n % 2 else 1.0
            worst = max(worst, abs(bessel.discrete_bessel(N, -n, r) - sign * b),
                        abs(bessel.discrete_bessel(N, n, -r) - sign * b))
    checks["bessel_parity"] = (worst, 1e-14)

    circle = bessel.require_odd(N)
    worst = 0.0
    for r in rhos:
        for m in range(N):
            exact = complex(math.cos(r * circle.sin_table()[m]), math.sin(r * circle.sin_table()[m]))
            worst = max(worst, abs(bessel.plane_wave_expand(N, r, m) - exact))
    checks["plane_wave"] = (worst, 1e-12)

    even = odd = 0.0
    for r in rhos:
        e, o = bessel.linear_relation_residuals(N, r)
        even, odd = max(even, e), max(odd, o)
    checks["linear_relation_even"] = (even, 1e-13)
    checks["linear_relation_odd"] = (odd, 1e-13)

    worst = 0.0
    for n_prime in (0, 3, j):
        for r1, r2 in ((1.0, 2.0), (0.5, 0.5), (5.0, 7.0)):
            lhs = bessel.graf_sum(N, n_prime, r1, r2)
            worst = max(worst, abs(lhs - bessel.discrete_bessel(N, n_prime, r1 + r2)))
    checks["graf_addition"] = (worst, 1e-12)

    funcs = [md.discrete_angular(k, n, q, N) for k in ("ce", "se") for n in orders]
    live = [d for d in funcs if not d.is_zero]
    checks["angular_agreement"] = (
        max(float(np.max(np.abs(d.samples - mc.angular(d.solution, d.circle.angles)))) for d in live),
        1e-12)
    checks["coefficient_halving"] = (max(md.coefficient_halving_check(d) for d in funcs), 1e-12)
    worst = 0.0
    for a in funcs:
        for b in funcs:
            same = a.kind == b.kind and a.order == b.order and not a.is_zero
            worst = max(worst, abs(md.discrete_orthogonality(a, b) - (0.5 * N if same else 0.0)))
    checks["discrete_orthogonality"] = (worst, 1e-10)

    grid = np.linspace(0.05, 1.95, 39)
    report = md.imaginary_argument_checks(0, q, N, grid)
    checks["se_even_match"] = (report.se_even_match, 1e-9)
    checks["se_odd_mismatch"] = (report.se_odd_mismatch, 1e-3)

    checks["separability"] = (
        md.separability_check("ce", 0, q, N, (0.3, 0.6, 0.9), (1, 2, 3)), 1e-8)

    out = {}
    for key in IDENTITY_KEYS:
        value, tol = checks[key]
        if key == "se_odd_mismatch":
            out[key] = {"residual": value, "tolerance": tol, "expect": "above", "passed": value > tol}
        else:
            out[key] = {"residual": value, "tolerance": tol, "expect": "below", "passed": value < tol}
    return out


def cmd_identity_suite(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.tolerance is not None:
        raise UsageError("identity-suite uses a fixed tolerance per check; drop --tolerance")
    if cfg.q <= 0:
        raise UsageError("identity-suite needs q > 0")
    checks = identity_suite(cfg.n_points, cfg.q, cfg.orders)
    report = ComparisonReport(["check", "residual", "tolerance", "expect", "passed"])
    report.rows = [[k, v["residual"], v["tolerance"], v["expect"], v["passed"]] for k, v in checks.items()]
    passed = all(v["passed"] for v in checks.values())
    report.summary = {"all_passed": passed}
    payload = _pack(cfg, report)
    if cfg.fmt == "json":
        # a mapping keyed by check name reads better than positional rows
        del payload["columns"], payload["rows"]
        payload["checks"] = checks
    return payload, EXIT_OK if passed else EXIT_CONTRACT


COMMANDS = {
    "bessel-table": cmd_bessel_table,
    "mathieu-angular": cmd_mathieu_angular,
    "mathieu-radial": cmd_mathieu_radial,
    "identity-suite": cmd_identity_suite,
    "ellipse-lattice": cmd_ellipse_lattice,
}


# ---------------------------------------------------------------------------
# output

def _pack(cfg: RunConfig, report: ComparisonReport) -> dict:
    return {
        "command": cfg.command,
        "config": {
            "n_points": cfg.n_points,
            "q": cfg.q,
            "orders": list(cfg.orders),
            "grid": None if cfg.grid is None else [cfg.grid.start, cfg.grid.stop, cfg.grid.step],
        },
        "columns": report.columns,
        "rows": report.rows,
        "summary": report.summary,
    }


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(payload["columns"])
    for row in payload["rows"]:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# argument parsing

def _orders(text: str) -> tuple[int, ...]:
    try:
        out = []
        for part in text.split(","):
            if "-" in part.strip()[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be integers like 0,1,2 or 0-5, got {text!r}")
    if any(n < 0 for n in out):
        raise argparse.ArgumentTypeError("orders must be non-negative")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discrete-special",
        description="Discrete Bessel and Mathieu function tables and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "bessel-table": "discrete vs continuous Bessel functions over a rho grid",
        "mathieu-angular": "discrete vs continuous angular Mathieu functions on the lattice",
        "mathieu-radial": "discrete vs continuous radial Mathieu functions over a varrho grid",
        "identity-suite": "run every identity check and report residuals",
        "ellipse-lattice": "Cartesian lattice points on confocal ellipses",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--n-points", type=int, default=21, help="odd lattice size N (default 21)")
        p.add_argument("--q", type=float, default=2.0, help="Mathieu parameter q (default 2)")
        p.add_argument("--orders", type=_orders, default=(0, 1) if name == "identity-suite" else (0,),
                       help="orders, e.g. 0,1,2 or 0-5")
        p.add_argument("--grid", type=str, default=None, help="argument grid min:max:step (inclusive)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"),
                       default="json" if name == "identity-suite" else "csv")
        p.add_argument("--out", type=str, default=None, help="output file (default stdout)")
        p.add_argument("--tolerance", type=float, default=None, help="threshold for the within_tolerance column")
    return parser


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    if args.n_points < 3 or args.n_points % 2 == 0:
        raise UsageError(f"--n-points must be odd and at least 3, got {args.n_points}")
    if not math.isfinite(args.q):
        raise UsageError("--q must be finite")
    if args.tolerance is not None and not args.tolerance > 0:
        raise UsageError("--tolerance must be positive")
    grid = Grid.parse(args.grid) if args.grid is not None else None
    return RunConfig(args.command, args.n_points, args.q, args.orders, grid,
                     args.fmt, args.out, args.tolerance)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        cfg = parse_config(argv)
        payload, code = COMMANDS[cfg.command](cfg)
    except SystemExit as exc:  # argparse reports its own usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    except (UsageError, UnsupportedConfigurationError, InsufficientResolutionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(payload, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
