"""Command-line front end.

    chromabound table  [--row DELTA:G ...]
    chromabound sweep  --mode by-delta --fixed 3 --start 3 --stop 20
    chromabound verify graph.txt
    chromabound selfcheck --level quick

Exit codes: 0 success, 1 verification failed, 2 input error, 3 size cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from chromabound import bounds, selfcheck
from chromabound.caps import SizeLimitError
from chromabound.graph import INFINITY, GraphError, read_graph
from chromabound.roots import RootFindingError, verify_zero_free

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3

DEFAULT_ROWS = (
    (3, 3), (4, 3), (5, 3), (6, 3), (20, 3),
    (3, 4), (3, 5), (3, 10), (3, 25), (3, 100),
)


class InputError(ValueError):
    pass


@dataclass
class CliConfig:
    command: str
    grid: int = bounds.DEFAULT_GRID
    tol: float = bounds.DEFAULT_TOL
    order: str = "input"
    seed: int = 0
    out: str | None = None
    fmt: str = "csv"
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.tol > 0:
            raise InputError("--tol must be positive")
        if self.grid < 33:
            raise InputError("--grid must be at least 33")


def fmt_num(x: float) -> str:
    if x == math.inf:
        return "inf"
    return format(float(x), ".9g")


def parse_girth(text: str):
    if text.strip().lower() == "inf":
        return INFINITY
    try:
        g = int(text)
    except ValueError:
        raise InputError(f"girth must be an integer >= 3 or 'inf', got {text!r}") from None
    if g < 3:
        raise InputError(f"girth must be >= 3, got {g}")
    return g


def parse_row(text: str) -> tuple[int, int | float]:
    try:
        d, g = text.split(":")
        delta = int(d)
    except ValueError:
        raise InputError(f"rows look like DELTA:G, got {text!r}") from None
    if delta < 1:
        raise InputError(f"delta must be >= 1, got {delta}")
    return delta, parse_girth(g)


def _render(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_table(cfg: CliConfig) -> tuple[str, int]:
    rows = [parse_row(r) for r in cfg.options.get("rows") or []] or list(DEFAULT_ROWS)
    header = ["delta", "g", "a_star", "b_star", "c_over_delta", "k_g"]
    out = []
    for delta, g in rows:
        res = bounds.c_delta_g(delta, g, grid=cfg.grid, tol=cfg.tol)
        kg = "" if g == INFINITY else fmt_num(bounds.k_g_jpr(g, grid=cfg.grid, tol=cfg.tol))
        out.append([str(delta), fmt_num(g), fmt_num(res.a_star), fmt_num(res.b_star), fmt_num(res.C_over_delta), kg])
    return _render(header, out, cfg.fmt), EXIT_OK


def cmd_sweep(cfg: CliConfig) -> tuple[str, int]:
    mode = cfg.options["mode"]
    start, stop = cfg.options["start"], cfg.options["stop"]
    if mode == "by-delta":
        g = parse_girth(cfg.options["fixed"])
        if start < 1:
            raise InputError("delta range must start at 1 or above")
        points = [(d, g) for d in range(start, stop + 1)]
        header = ["delta", "c_over_delta"]
    else:
        try:
            delta = int(cfg.options["fixed"])
        except ValueError:
            raise InputError("--fixed must be an integer delta in by-g mode") from None
        if delta < 1 or start < 3:
            raise InputError("need delta >= 1 and a girth range starting at 3 or above")
        points = [(delta, g) for g in range(start, stop + 1)]
        header = ["g", "c_over_delta"]
    out = []
    for d, g in points:
        res = bounds.c_delta_g(d, g, grid=cfg.grid, tol=cfg.tol)
        varied = d if mode == "by-delta" else g
        out.append([fmt_num(varied), fmt_num(res.C_over_delta)])
    return _render(header, out, cfg.fmt), EXIT_OK


def cmd_verify(cfg: CliConfig) -> tuple[str, int]:
    path = cfg.options["path"]
    try:
        G = read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    G = G.reordered(cfg.order, seed=cfg.seed)
    if G.m == 0:
        raise InputError("graph has no edges")
    report = verify_zero_free(G, graph_id=path, grid=cfg.grid, tol=cfg.tol, seed=cfg.seed)
    return report.to_json() + "\n", EXIT_OK if report.passed else EXIT_FAIL


def cmd_selfcheck(cfg: CliConfig) -> tuple[str, int]:
    lines = []
    results = selfcheck.run(cfg.options["level"], cfg.options.get("only"), echo=lambda s: print(s, file=sys.stderr))
    for res in results:
        lines.append(res.line())
    failed = [r.name for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)} passed, {len(failed)} failed" + (f": {', '.join(failed)}" if failed else ""))
    return "\n".join(lines) + "\n", EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"table": cmd_table, "sweep": cmd_sweep, "verify": cmd_verify, "selfcheck": cmd_selfcheck}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=bounds.DEFAULT_GRID, help="points in the coarse scan over a (>= 33)")
    common.add_argument("--tol", type=float, default=bounds.DEFAULT_TOL, help="golden-section tolerance on a")
    common.add_argument("--order", choices=["input", "lex", "random"], default="input", help="edge order policy")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")

    parser = argparse.ArgumentParser(prog="chromabound", description="Zero-free radii for chromatic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="a*, b*, C/delta and K_g for (delta, g) pairs")
    p.add_argument("--row", dest="rows", action="append", metavar="DELTA:G", help="repeatable; g may be 'inf'")

    p = sub.add_parser("sweep", parents=[common], help="C/delta along a range of delta or g")
    p.add_argument("--mode", choices=["by-delta", "by-g"], required=True)
    p.add_argument("--fixed", required=True, help="the girth (by-delta) or the degree (by-g) held fixed")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True, help="inclusive; stop < start gives an empty table")

    p = sub.add_parser("verify", parents=[common], help="check a graph's chromatic roots against C(delta, g)")
    p.add_argument("path", help="edge list, or DIMACS when the name ends in .col")

    p = sub.add_parser("selfcheck", parents=[common], help="run the invariant suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--only", action="append", choices=list(selfcheck.SUITES), help="run just these suites")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    opts = {k: v for k, v in vars(args).items() if k not in {"command", "grid", "tol", "order", "seed", "out", "fmt"}}
    try:
        cfg = CliConfig(args.command, args.grid, args.tol, args.order, args.seed, args.out, args.fmt, opts)
        text, code = COMMANDS[args.command](cfg)
    except (InputError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except RootFindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
