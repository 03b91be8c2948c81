"""Command-line front end.

Subcommands::

    cubediam analyze 2 quarter
    cubediam table1 --format json
    cubediam distance-array 3 square --out sq.csv
    cubediam check-graph foster_16.txt --eta one

Exit codes: 0 success, 1 bound-validation failure, 2 input error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .bounds import BoundsInput, bounds_report
from .cube import (
    SUPPORTED,
    UnsupportedMetric,
    apply_move,
    face_move,
    get_metric,
    group_order,
    solved_state,
)
from .gpg import ETA_MODES, GraphFormatError, read_graph, validate_lower_bound
from .graph import (
    CubeGraph,
    GraphTooLarge,
    UnsupportedGraph,
    bfs_distance_array,
    local_params,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CLI_BUDGET = 2**28

# Diameters that are known but far beyond desk-scale enumeration.
EXTERNAL_DIAMETERS = {
    (3, "quarter"): (26, "external: Rokicki, Kociemba, Davidson, Dethridge (cube20.org)"),
}

RECORD_KEYS = (
    "cube_size", "metric_name", "n", "n_rounded", "k", "g", "eta", "eta_used", "r_max",
    "d_actual", "d_actual_source", "d_min", "d_probab", "bv_lower", "bv_upper", "d_min_branch",
)


@dataclass(frozen=True)
class AnalysisRecord:
    cube_size: int
    metric_name: str
    n: int
    k: int
    g: int
    eta: int
    eta_used: int
    r_max: float
    d_actual: Optional[int]
    d_actual_source: Optional[str]  # "bfs", an "external: ..." marker, or None
    d_min: int
    d_probab: float
    bv_lower: int
    bv_upper: int
    d_min_branch: str

    @property
    def n_rounded(self) -> str:
        return f"{self.n:.2e}" if self.n >= 10**5 else str(self.n)

    def as_dict(self) -> dict:
        out = asdict(self)
        out["n_rounded"] = self.n_rounded
        if math.isinf(self.d_probab):
            out["d_probab"] = "inf"
        return {key: out[key] for key in RECORD_KEYS}


def parse_origin(cube_size: int, text: Optional[str]):
    """Origin state from a space-separated turn sequence such as ``"R U' F2"``."""
    state = solved_state(cube_size)
    if not text:
        return state
    for tok in text.split():
        face, suffix = tok[0], tok[1:]
        turns = {"": 1, "2": 2, "'": 3}.get(suffix)
        if face not in "URFDLB" or turns is None:
            raise ValueError(f"bad turn {tok!r}")
        move = face_move(face, cube_size)
        for _ in range(turns):
            state = apply_move(state, move)
    return state


def analyze(cube_size: int, metric_name: str, *, budget: int = CLI_BUDGET,
            skip_bfs: bool = False, epsilon: float = 0.0, eta_mode: str = "measured",
            origin=None) -> AnalysisRecord:
    metric = get_metric(cube_size, metric_name)
    graph = CubeGraph(metric)
    n = group_order(metric)
    lp = local_params(graph, origin, known_order=n)
    eta_used = lp.eta if eta_mode == "measured" else 1
    rep = bounds_report(BoundsInput(n, lp.k, lp.g, eta_used), epsilon=epsilon)
    d_actual = source = None
    if (cube_size, metric_name) in EXTERNAL_DIAMETERS:
        d_actual, source = EXTERNAL_DIAMETERS[cube_size, metric_name]
    elif not skip_bfs:
        da = bfs_distance_array(graph, origin, budget)
        if da.order != n:
            raise RuntimeError(f"BFS reached {da.order} states, expected {n}")
        d_actual, source = da.diameter, "bfs"
    return AnalysisRecord(
        cube_size=cube_size, metric_name=metric_name, n=n, k=lp.k, g=lp.g, eta=lp.eta,
        eta_used=eta_used, r_max=float(rep.r_max), d_actual=d_actual, d_actual_source=source,
        d_min=rep.d_min, d_probab=rep.d_probab, bv_lower=rep.bv_lower, bv_upper=rep.bv_upper,
        d_min_branch=rep.branch,
    )


def table1(**kwargs) -> list[AnalysisRecord]:
    return [analyze(size, name, **kwargs) for size, name in SUPPORTED]


# ---------------------------------------------------------------- render

def _fmt_probab(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.1f}"


def render_records(records: Sequence[AnalysisRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in records], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=RECORD_KEYS, lineterminator="\n")
        w.writeheader()
        for r in records:
            row = r.as_dict()
            row["d_probab"] = row["d_probab"] if row["d_probab"] == "inf" else repr(r.d_probab)
            w.writerow({k: "" if v is None else v for k, v in row.items()})
        return buf.getvalue()
    header = ("cube", "metric", "n", "n~", "k", "g", "eta", "r_max", "d", "d_min",
              "d_probab", "bv_lo", "bv_hi")
    rows = []
    for r in records:
        d = "-" if r.d_actual is None else str(r.d_actual) + ("" if r.d_actual_source == "bfs" else "*")
        rows.append((f"{r.cube_size}x{r.cube_size}x{r.cube_size}", r.metric_name, str(r.n),
                     r.n_rounded, str(r.k), str(r.g), str(r.eta_used), f"{r.r_max:.1f}", d,
                     str(r.d_min), _fmt_probab(r.d_probab), str(r.bv_lower), str(r.bv_upper)))
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(x.rjust(w) for x, w in zip(line, widths)) for line in [header, *rows]]
    notes = sorted({r.d_actual_source for r in records
                    if r.d_actual_source and r.d_actual_source != "bfs"})
    lines += [f"* {note}" for note in notes]
    return "\n".join(lines) + "\n"


def render_distance_array(cube_size, metric_name, counts, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"cube_size": cube_size, "metric_name": metric_name,
                           "counts": list(counts)}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["distance", "count"])
        w.writerows(enumerate(counts))
        return buf.getvalue()
    return "".join(f"{i:3d} {c:>10d}\n" for i, c in enumerate(counts))


# ------------------------------------------------------------- commands

def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    rec = analyze(args.cube_size, args.metric, budget=args.budget, skip_bfs=args.skip_bfs,
                  epsilon=args.epsilon, eta_mode=args.eta,
                  origin=parse_origin(args.cube_size, args.origin))
    _emit(render_records([rec], args.format), None)
    return EXIT_OK


def cmd_table1(args) -> int:
    recs = table1(budget=args.budget, skip_bfs=args.skip_bfs, epsilon=args.epsilon,
                  eta_mode=args.eta)
    _emit(render_records(recs, args.format), None)
    return EXIT_OK


def cmd_distance_array(args) -> int:
    graph = CubeGraph(get_metric(args.cube_size, args.metric))
    da = bfs_distance_array(graph, parse_origin(args.cube_size, args.origin), args.budget)
    fmt = "csv" if args.format == "text" and args.out else args.format
    _emit(render_distance_array(args.cube_size, args.metric, da.counts, fmt), args.out)
    return EXIT_OK


def cmd_check_graph(args) -> int:
    graph = read_graph(args.path)
    origin = int(args.origin) if args.origin else None
    if origin is not None and not 0 <= origin < graph.n:
        raise ValueError(f"origin {origin} out of range")
    rep = validate_lower_bound(graph, args.eta, origin=origin)
    row = {
        "n": rep.n, "k": rep.k, "g": rep.g, "eta": rep.eta, "eta_used": rep.eta_used,
        "diameter": rep.diameter, "d_min": "inf" if rep.d_min is None else rep.d_min,
        "pass": rep.passed,
    }
    if args.format == "json":
        text = json.dumps(row) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        text = buf.getvalue()
    else:
        text = " ".join(f"{k}={v}" for k, v in row.items()) + ("\n" if rep.passed else " FAIL\n")
    _emit(text, None)
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--eta", choices=ETA_MODES, default="measured",
                        help="girth-cycle count: measured, or the conservative value 1")
    common.add_argument("--epsilon", type=float, default=0.0,
                        help="epsilon of the random-regular upper bound (default 0)")
    common.add_argument("--budget", type=int, default=CLI_BUDGET,
                        help="max coordinate slots / states a BFS may use")
    common.add_argument("--skip-bfs", action="store_true",
                        help="do not enumerate; leave d_actual empty")
    common.add_argument("--origin", default=None,
                        help="origin vertex: turn sequence for cubes, index for check-graph")

    p = argparse.ArgumentParser(prog="cubediam", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    metrics = sorted({name for _, name in SUPPORTED})

    a = sub.add_parser("analyze", parents=[common], help="one cube group / metric")
    a.add_argument("cube_size", type=int, choices=(2, 3))
    a.add_argument("metric", choices=metrics)
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("table1", parents=[common], help="all five symmetric cube graphs")
    t.set_defaults(func=cmd_table1)

    d = sub.add_parser("distance-array", parents=[common], help="export a BFS distance array")
    d.add_argument("cube_size", type=int, choices=(2, 3))
    d.add_argument("metric", choices=metrics)
    d.add_argument("--out", default=None, help="write here instead of stdout (CSV)")
    d.set_defaults(func=cmd_distance_array)

    c = sub.add_parser("check-graph", parents=[common], help="validate the bound on an edge list")
    c.add_argument("path")
    c.set_defaults(func=cmd_check_graph)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UnsupportedMetric as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphFormatError, UnsupportedGraph, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
