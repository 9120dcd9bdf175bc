"""Command line: ``artinperiods {orders,bounds,verify,density,sweep}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import warnings
from dataclasses import dataclass

from . import bound_engine, integer_oracle
from .estimators import CountingBounds, ratio_to_quarter_power
from .modular_core import order_records
from .reports import Report, write_report
from .verification import run_verification

log = logging.getLogger("artinperiods")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
DEFAULT_X = {"density": 100_000}


class UsageError(ValueError):
    pass


@dataclass
class SweepConfig:
    a: int = 2
    x: int = 200
    u: int = 20
    u_grid: tuple[int, ...] = ()
    delta: float = 0.1
    alpha: float = 0.1
    tolerance_scale: float = 1e-8
    threads: int = 1
    format: str = "csv"
    out: str | None = None
    oracle_cap_u: int = integer_oracle.DEFAULT_CAP_U
    oracle_cap_x: int = integer_oracle.DEFAULT_CAP_X

    def validate(self, uses_u: bool = True) -> "SweepConfig":
        if self.x < 2:
            raise UsageError("--x must be >= 2")
        if self.u < 1 or any(v < 1 for v in self.grid):
            raise UsageError("u must be >= 1")
        if uses_u and max(self.grid) > self.x:
            raise UsageError(f"u={max(self.grid)} exceeds x={self.x} (bounds hold for u <= x)")
        if list(self.grid) != sorted(set(self.grid)):
            raise UsageError("--u-grid must be strictly ascending")
        if not self.delta > 0:
            raise UsageError("--delta must be positive")
        if not 0 < self.alpha < 2 / 3:
            raise UsageError("--alpha must lie in (0, 2/3)")
        if self.threads < 1:
            raise UsageError("--threads must be >= 1")
        if self.a < 2:
            warnings.warn(f"base a={self.a} is below 2", stacklevel=2)
        elif int(self.a**0.5 + 0.5) ** 2 == self.a:
            warnings.warn(f"base a={self.a} is a perfect square", stacklevel=2)
        return self

    @property
    def grid(self) -> tuple[int, ...]:
        return self.u_grid or (self.u,)

    def echo(self) -> dict:
        # threads is left out so output is identical for every thread count
        return {"a": self.a, "x": self.x, "u": self.u, "delta": self.delta, "alpha": self.alpha,
                "tolerance_scale": self.tolerance_scale}


def parse_grid(text: str) -> tuple[int, ...]:
    """``"10,20,30"`` or ``"start:stop:step"`` (stop inclusive)."""
    try:
        if ":" in text:
            parts = [int(t) for t in text.split(":")]
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) > 2 else 1
            if step < 1 or start < 1:
                raise ValueError
            return tuple(range(start, stop + 1, step))
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad u grid {text!r}") from None


def cmd_orders(cfg: SweepConfig) -> tuple[Report, int]:
    rep = Report("orders", cfg.echo())
    rep.extend("orders", ({"p": r.p, "f_p": r.f_p, "e_p": r.e_p, "g": r.g}
                          for r in order_records(cfg.a, cfg.x)))
    return rep, EXIT_OK


def _fit(cfg: SweepConfig) -> CountingBounds:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return CountingBounds(a=cfg.a, x=cfg.x, delta=cfg.delta, alpha=cfg.alpha,
                              threads=cfg.threads).fit()


def cmd_bounds(cfg: SweepConfig) -> tuple[Report, int]:
    est = _fit(cfg)
    br = est.report(cfg.u)
    rep = Report("bounds", cfg.echo())
    rep.extend("rows", br.rows)
    mp = est.max_period_stats_
    rep.extend("max_period", (vars(r) for r in mp.rows))
    rep.add("agg", **br.aggregates, C_emp_max=mp.C_emp_max)
    return rep, EXIT_OK


def cmd_verify(cfg: SweepConfig) -> tuple[Report, int]:
    if cfg.a < 2:
        raise UsageError("verify needs a >= 2 (the oracle factors a**j - 1)")
    if cfg.u > cfg.oracle_cap_u or cfg.x > cfg.oracle_cap_x:
        raise UsageError(
            f"u={cfg.u}, x={cfg.x} outside the oracle perimeter "
            f"(u <= {cfg.oracle_cap_u}, x <= {cfg.oracle_cap_x}); raise --oracle-cap-u/--oracle-cap-x"
        )
    rows = _fit(cfg).rows_
    checks, ok = run_verification(cfg.a, cfg.u, cfg.x, cfg.tolerance_scale, rows=rows)
    rep = Report("verify", cfg.echo())
    rep.extend("checks", (c.as_dict() for c in checks))
    failed = sum(1 for c in checks if c.required and not c.passed)
    flagged = sum(1 for c in checks if not c.required and not c.passed)
    rep.add("agg", n_checks=len(checks), failed=failed, flagged=flagged, passed=ok)
    return rep, EXIT_OK if ok else EXIT_FAIL


def density_checkpoints(x: int) -> list[int]:
    pts, c = [], 100
    while c < x:
        pts.append(c)
        c *= 10
    return pts + [x]


def cmd_density(cfg: SweepConfig) -> tuple[Report, int]:
    if cfg.x < 3:
        raise UsageError("density needs x >= 3")
    rep = Report("density", cfg.echo())
    for xc in density_checkpoints(cfg.x):
        rep.add("density", **bound_engine.density_report(cfg.a, xc).as_dict())
    return rep, EXIT_OK


def cmd_sweep(cfg: SweepConfig) -> tuple[Report, int]:
    est = _fit(cfg)
    grid = list(cfg.grid)
    table = est.transform(grid)
    ratios = ratio_to_quarter_power(table)
    rep = Report("sweep", cfg.echo())
    b_lt_a_paper = b_lt_a_explicit = 0
    for u, row, ratio in zip(grid, table, ratios):
        vals = dict(zip(est.get_feature_names_out(), row.tolist()))
        vals["D_exact"] = int(vals["D_exact"])
        lt_p = vals["bound_B_paper"] < vals["bound_A_paper"]
        lt_e = vals["bound_B_explicit"] < vals["bound_A_explicit"]
        b_lt_a_paper += lt_p
        b_lt_a_explicit += lt_e
        rep.add("sweep", u=u, **vals,
                ratio_A_explicit=ratio[0], ratio_A_paper=ratio[1],
                ratio_B_explicit=ratio[2], ratio_B_paper=ratio[3],
                B_lt_A_paper=lt_p, B_lt_A_explicit=lt_e)
    rep.add("agg", n_points=len(grid), frac_B_lt_A_paper=b_lt_a_paper / len(grid),
            frac_B_lt_A_explicit=b_lt_a_explicit / len(grid))
    return rep, EXIT_OK


USES_U = {"bounds", "verify", "sweep"}
HELP = {
    "orders": "table of (p, f_p, e_p, g) for p <= x",
    "bounds": "D(u), its decomposition, bounds A/B and reference curves",
    "verify": "identity suite against the exact integer oracle",
    "density": "primitive-root and order-size densities at powers of ten",
    "sweep": "D(u) and bounds over a grid of u",
}
COMMANDS = {
    "orders": cmd_orders,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "density": cmd_density,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=int, default=2, help="base (default 2)")
    common.add_argument("--x", type=int, default=None,
                        help="prime cutoff (default 200; 100000 for density)")
    common.add_argument("--u", type=int, default=20, help="length of the j-range (default 20)")
    common.add_argument("--u-grid", type=parse_grid, default=(),
                        help="u values for sweep: 'a,b,c' or 'start:stop:step'")
    common.add_argument("--delta", type=float, default=0.1,
                        help="log exponent slack in the sqrt(x)/log(x)**(1+delta) curve")
    common.add_argument("--alpha", type=float, default=0.1,
                        help="large-order exponent: f_p > p**(1/3+alpha), 0 < alpha < 2/3")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads; output does not depend on it")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    common.add_argument("--out", default=None,
                        help="output path (csv: stem for <stem>_<kind>.csv); default stdout")
    common.add_argument("--tolerance-scale", type=float, default=1e-8,
                        help="identity checks pass when residual <= scale * p")
    common.add_argument("--oracle-cap-u", type=int, default=integer_oracle.DEFAULT_CAP_U,
                        help="largest u verify will check against the integer oracle")
    common.add_argument("--oracle-cap-x", type=int, default=integer_oracle.DEFAULT_CAP_X,
                        help="largest x verify will check against the integer oracle")

    parser = argparse.ArgumentParser(
        prog="artinperiods",
        description="Multiplicative orders, cyclotomic periods and explicit counting bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def config_from_args(args: argparse.Namespace) -> SweepConfig:
    x = args.x if args.x is not None else DEFAULT_X.get(args.command, 200)
    return SweepConfig(
        a=args.a, x=x, u=args.u, u_grid=tuple(args.u_grid), delta=args.delta, alpha=args.alpha,
        tolerance_scale=args.tolerance_scale, threads=args.threads, format=args.format,
        out=args.out, oracle_cap_u=args.oracle_cap_u, oracle_cap_x=args.oracle_cap_x,
    )


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args).validate(uses_u=args.command in USES_U)
        report, status = COMMANDS[args.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"artinperiods: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        for path in write_report(report, cfg.format, cfg.out):
            log.info("wrote %s", path)
    except OSError as exc:
        print(f"artinperiods: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
