"""End-to-end acceptance checks; each prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also repeated in the terminal summary of any pytest run.
"""

import csv
import math
import time

import pytest

from cubediam.bounds import r_max
from cubediam.cli import EXTERNAL_DIAMETERS, main, table1
from cubediam.cube import get_metric, group_order
from cubediam.gpg import generate_gpg, validate_lower_bound
from cubediam.graph import (
    CubeGraph,
    DistanceArray,
    GraphTooLarge,
    OddGirth,
    bfs_distance_array,
    branching_ratios,
    local_params,
    shell_counts,
    verify_identities,
)

ROWS = [(3, "square-slice"), (2, "square"), (2, "quarter"), (3, "square"), (3, "quarter")]
EXPECTED = {
    "n": [8, 24, 3_674_160, 663_552, 43_252_003_274_489_856_000],
    "k": [3, 3, 6, 6, 12],
    "g": [4, 6, 4, 4, 4],
    "eta": [3, 3, 3, 3, 18],
    "r_max": [1.0, 1.5, 4.5, 4.5, 9.5],
    "d_min": [3, 4, 10, 9, 20],
    "bv_lower": [0, 2, 10, 9, 19],
    "bv_upper": [8, 10, 14, 13, 23],
}
D_PROBAB = [math.inf, 10.0, 13.4, 11.9, 24.8]
ENUMERATED = {(3, "square-slice"): 3, (2, "square"): 4, (2, "quarter"): 14, (3, "square"): 15}


@pytest.fixture(scope="module")
def table():
    t0 = time.perf_counter()
    recs = table1()
    return recs, time.perf_counter() - t0


@pytest.fixture(scope="module")
def arrays():
    out, times = {}, {}
    for key in ENUMERATED:
        t0 = time.perf_counter()
        out[key] = bfs_distance_array(CubeGraph(get_metric(*key)), budget=2**28)
        times[key] = time.perf_counter() - t0
    return out, times


def test_criterion_1_table(table, criterion):
    recs, seconds = table
    bad = []
    assert [(r.cube_size, r.metric_name) for r in recs] == ROWS
    for field, want in EXPECTED.items():
        got = [getattr(r, field) for r in recs]
        if got != want:
            bad.append(f"{field}: {got} != {want}")
    for r, want in zip(recs, D_PROBAB):
        if math.isinf(want) != math.isinf(r.d_probab) or (
            not math.isinf(want) and abs(r.d_probab - want) > 0.05
        ):
            bad.append(f"d_probab {r.d_probab} vs {want}")
    ok = not bad and seconds < 600
    criterion("1 table reproduction", ok, "; ".join(bad) or f"{seconds:.1f} s")


def test_criterion_2_bfs_diameters(arrays, criterion):
    das, times = arrays
    got = {key: da.diameter for key, da in das.items()}
    ok = got == ENUMERATED and das[2, "quarter"].order == 3_674_160 and times[2, "quarter"] < 300
    criterion("2 BFS diameters", ok,
              f"{list(got.values())}, 2x2x2 quarter in {times[2, 'quarter']:.2f} s")


def test_criterion_3_distance_arrays(arrays, criterion, tmp_path, capsys):
    das, _ = arrays
    checks = [
        das[3, "square-slice"].counts == (1, 3, 3, 1),
        das[2, "square"].counts == (1, 3, 6, 9, 5),
    ]
    peaks = {}
    for key in [(2, "quarter"), (3, "square")]:
        path = tmp_path / f"{key[0]}-{key[1]}.csv"
        assert main(["distance-array", str(key[0]), key[1], "--out", str(path)]) == 0
        rows = list(csv.DictReader(path.open()))
        counts = [int(row["count"]) for row in rows]
        checks.append(sum(counts) == group_order(get_metric(*key)))
        checks.append(sum((-1) ** i * c for i, c in enumerate(counts)) == 0)
        peaks[key] = DistanceArray(tuple(counts)).peak()
    capsys.readouterr()
    checks.append(peaks[3, "square"] <= peaks[2, "quarter"])
    criterion("3 distance arrays and exported curves", all(checks),
              f"peaks 3x3x3 square {peaks[3, 'square']}, 2x2x2 quarter {peaks[2, 'quarter']}")


def test_criterion_4a_identities(arrays, criterion):
    das, _ = arrays
    bad = []
    for key, da in das.items():
        metric = get_metric(*key)
        rep = verify_identities(da, metric.degree, n=group_order(metric))
        if not rep.all_pass:
            bad.append(str(key))
    criterion("4a order, edge and alternating sums; edge recurrence ends at zero", not bad,
              ", ".join(bad))


def test_criterion_4b_ratios_nonincreasing(arrays, criterion):
    das, _ = arrays
    bad = []
    for key, da in das.items():
        br = branching_ratios(da)
        for i in br.increases():
            bad.append(f"{key[0]}-{key[1]} r{i + 1}={br.ratios[i]} > r{i}={br.ratios[i - 1]}")
    criterion("4b branching ratios nonincreasing", not bad, "; ".join(bad))


def test_criterion_4c_ratios_capped_by_rmax(arrays, criterion):
    das, _ = arrays
    ok = True
    for key, da in das.items():
        lp = local_params(CubeGraph(get_metric(*key)), known_order=da.order)
        br = branching_ratios(da)
        ok &= br.ratios[lp.g // 2 - 1] == r_max(lp.k, lp.g, lp.eta) and br.bounded_after(lp.g)
    criterion("4c ratios beyond g/2 never exceed r_max", ok)


class _Recorder:
    """Graph proxy remembering every vertex whose neighbors were asked for."""

    def __init__(self, graph):
        self.graph = graph
        self.queried = set()

    def neighbors(self, v):
        self.queried.add(v)
        return self.graph.neighbors(v)


def _ball(graph, origin, radius):
    seen, level = {origin}, [origin]
    for _ in range(radius):
        level = [y for x in level for y in graph.neighbors(x) if y not in seen and not seen.add(y)]
    return seen


def test_criterion_5_local_params(criterion):
    got, ok = [], True
    for key, want in zip(ROWS, zip(EXPECTED["k"], EXPECTED["g"], EXPECTED["eta"])):
        graph = CubeGraph(get_metric(*key))
        rec = _Recorder(graph)
        lp = local_params(rec, graph.default_origin, known_order=graph.order)
        inside = rec.queried <= _ball(graph, graph.default_origin, lp.g)
        ok &= (lp.k, lp.g, lp.eta) == want and inside
        got.append(f"{lp.k},{lp.g},{lp.eta}[{len(rec.queried)} queried]")
    criterion("5 local parameters from exploration within depth g", ok, " ".join(got))


def _gpg_sweep(mode):
    fails, graphs, odd = [], 0, 0
    for m in range(3, 65):
        for t in range(1, (m - 1) // 2 + 1):
            try:
                rep = validate_lower_bound(generate_gpg(m, t), mode)
            except OddGirth:
                odd += 1
                continue
            graphs += 1
            if not rep.passed:
                fails.append(f"G({m},{t}) eta={rep.eta_used} d_min={rep.d_min} d={rep.diameter}")
    return graphs, odd, fails


def test_criterion_6a_gpg_conservative_eta(criterion):
    graphs, odd, fails = _gpg_sweep("one")
    criterion("6a G(m,t) lower bound with eta=1", not fails,
              f"{graphs} even-girth graphs, {odd} odd skipped, {len(fails)} failures")


def test_criterion_6b_gpg_measured_eta(criterion):
    graphs, odd, fails = _gpg_sweep("measured")
    criterion("6b G(m,t) lower bound with measured eta", not fails,
              f"{graphs} graphs, {len(fails)} failures: " + "; ".join(fails))


def test_criterion_7_local_isomorphism(criterion):
    a, b = CubeGraph(get_metric(2, "quarter")), CubeGraph(get_metric(3, "square"))
    pa = local_params(a, known_order=a.order)
    pb = local_params(b, known_order=b.order)
    same = (pa.k, pa.g, pa.eta) == (pb.k, pb.g, pb.eta)
    depth = max(2, pa.g // 2)
    sa, sb = shell_counts(a, depth=depth), shell_counts(b, depth=depth)
    ok = same and sa == sb and sa[:3] == (1, 6, 27)
    criterion("7 local isomorphism of 2x2x2 quarter and 3x3x3 square", ok, f"shells {sa}")


def test_criterion_8_external_diameter(table, criterion):
    recs, _ = table
    rec = recs[-1]
    try:
        bfs_distance_array(CubeGraph(get_metric(3, "quarter")), budget=2**28)
        refused = False
    except GraphTooLarge:
        refused = True
    d, source = EXTERNAL_DIAMETERS[3, "quarter"]
    ok = (refused and rec.d_actual == d == 26 and rec.d_actual_source == source
          and source.startswith("external") and rec.d_min == 20 <= d)
    criterion("8 3x3x3 quarter diameter flagged external, d_min <= 26", ok,
              f"d_min={rec.d_min}, bfs refused={refused}")
