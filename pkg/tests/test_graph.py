from fractions import Fraction

import pytest

from cubediam import _pykernels
from cubediam.cube import get_metric, group_order, move_tables, pack_state, packed_move_tables, rank
from cubediam.bounds import r_max
from cubediam.gpg import AdjacencyGraph, generate_gpg
from cubediam.graph import (
    CubeGraph,
    DistanceArray,
    GirthNotFound,
    GraphTooLarge,
    NotSymmetricDistanceArray,
    OddGirth,
    UnsupportedGraph,
    bfs_distance_array,
    branching_ratios,
    count_cycles,
    eta_common_neighbors,
    girth_through,
    local_params,
    shell_counts,
    verify_identities,
)

from conftest import ENUMERABLE, random_state

TABLE_LOCAL = {
    (3, "square-slice"): (3, 4, 3),
    (2, "square"): (3, 6, 3),
    (2, "quarter"): (6, 4, 3),
    (3, "square"): (6, 4, 3),
    (3, "quarter"): (12, 4, 18),
}


def test_distance_array_small_metrics(distance_arrays):
    assert distance_arrays[3, "square-slice"].counts == (1, 3, 3, 1)
    assert distance_arrays[2, "square"].counts == (1, 3, 6, 9, 5)


def test_diameters(distance_arrays):
    assert distance_arrays[2, "quarter"].diameter == 14
    assert distance_arrays[3, "square"].diameter == 15


def test_2x2x2_quarter_distance_array(distance_arrays):
    # dense product-coordinate BFS, checked against the sorted-key BFS below
    assert distance_arrays[2, "quarter"].counts == (
        1, 6, 27, 120, 534, 2256, 8969, 33058, 114149, 360508, 930588, 1350852, 782536, 90280, 276,
    )


@pytest.mark.parametrize("key", [(2, "square"), (2, "quarter")])
def test_dense_and_sparse_bfs_agree(key, distance_arrays):
    metric = get_metric(*key)
    src, lut = packed_move_tables(metric)
    from cubediam.cube import solved_state

    sparse = _pykernels.bfs_packed(src, lut, pack_state(solved_state(2)), 10**7)
    assert tuple(sparse) == distance_arrays[key].counts


def test_bfs_from_other_origin(rng):
    metric = get_metric(2, "quarter")
    g = CubeGraph(metric)
    base = bfs_distance_array(g)
    s = random_state(metric, rng)
    assert rank(s) != 0
    assert bfs_distance_array(g, s).counts == base.counts


def test_budget_exceeded_is_an_error():
    with pytest.raises(GraphTooLarge):
        bfs_distance_array(CubeGraph(get_metric(3, "quarter")))
    with pytest.raises(GraphTooLarge):
        bfs_distance_array(CubeGraph(get_metric(2, "quarter")), budget=10**6)
    with pytest.raises(GraphTooLarge):
        bfs_distance_array(CubeGraph(get_metric(3, "square")), budget=1000)
    with pytest.raises(GraphTooLarge):
        bfs_distance_array(generate_gpg(10, 3), budget=10)


def test_branching_ratios():
    assert branching_ratios(DistanceArray((1, 3, 3, 1))).ratios == (3, 1, Fraction(1, 3))
    assert branching_ratios(DistanceArray((1, 3, 6, 9, 5))).ratios == (3, 2, Fraction(3, 2), Fraction(5, 9))
    assert branching_ratios(DistanceArray((1, 7))).ratios == (7,)


def test_branching_ratios_capped_by_rmax_on_cube_metrics(distance_arrays):
    for key, da in distance_arrays.items():
        br = branching_ratios(da)
        k, g, eta = TABLE_LOCAL[key]
        assert br.ratios[0] == k
        assert br.ratios[g // 2 - 1] == r_max(k, g, eta)
        assert br.bounded_after(g), key


def test_branching_ratios_not_strictly_monotone(distance_arrays):
    # measured arrays: the ratios stay below r_max but wobble upward twice
    assert branching_ratios(distance_arrays[3, "square-slice"]).is_nonincreasing()
    assert branching_ratios(distance_arrays[2, "square"]).is_nonincreasing()
    q = branching_ratios(distance_arrays[2, "quarter"])
    assert q.increases() == [3]
    assert q.ratios[2:4] == (Fraction(40, 9), Fraction(89, 20))
    s = branching_ratios(distance_arrays[3, "square"])
    assert s.increases() == [14]
    assert s.ratios[13:15] == (Fraction(1488, 16176), Fraction(144, 1488))


def test_identities_gpg41():
    rep = verify_identities(DistanceArray((1, 3, 3, 1)), 3, n=8)
    assert rep.all_pass
    assert rep.edges.counts == (3, 6, 3)
    assert sum(rep.edges.counts) == 8 * 3 // 2


def test_identities_nauru():
    rep = verify_identities(DistanceArray((1, 3, 6, 9, 5)), 3, n=24)
    assert rep.all_pass
    assert rep.alternating == 0


def test_identities_counterexample():
    rep = verify_identities(DistanceArray((1, 3, 3, 2)), 3)
    assert not rep.alternating_sum
    assert rep.alternating == -1
    assert not rep.all_pass


def test_identities_negative_edge_count():
    with pytest.raises(NotSymmetricDistanceArray):
        verify_identities(DistanceArray((1, 3, 1, 5)), 3)


def test_identities_on_enumerated_metrics(distance_arrays):
    for key, da in distance_arrays.items():
        metric = get_metric(*key)
        rep = verify_identities(da, metric.degree, n=group_order(metric))
        assert rep.all_pass, key
        assert all(e >= 0 for e in rep.edges.counts)


def test_distance_array_validation():
    with pytest.raises(ValueError):
        DistanceArray((2, 3))
    with pytest.raises(ValueError):
        DistanceArray((1, 3, 0))


@pytest.mark.parametrize("key", list(TABLE_LOCAL), ids=lambda k: f"{k[0]}-{k[1]}")
def test_local_params_table(key):
    metric = get_metric(*key)
    lp = local_params(CubeGraph(metric), known_order=group_order(metric))
    assert (lp.k, lp.g, lp.eta) == TABLE_LOCAL[key]
    assert lp.n == group_order(metric)


@pytest.mark.parametrize("key", list(TABLE_LOCAL), ids=lambda k: f"{k[0]}-{k[1]}")
def test_local_params_independent_of_origin(key, rng):
    metric = get_metric(*key)
    g = CubeGraph(metric)
    n = group_order(metric)
    origins = [random_state(metric, rng) for _ in range(10)]
    if key == (3, "quarter"):
        origins = origins[:3]  # 0.5 s each
    for s in origins:
        lp = local_params(g, s, known_order=n)
        assert (lp.k, lp.g, lp.eta) == TABLE_LOCAL[key]


@pytest.mark.parametrize("key", list(TABLE_LOCAL), ids=lambda k: f"{k[0]}-{k[1]}")
def test_eta_cross_check(key):
    g = CubeGraph(get_metric(*key))
    k, girth, eta = TABLE_LOCAL[key]
    assert count_cycles(g, None, girth)[0] == eta
    if girth == 4:
        assert eta_common_neighbors(g) == eta


def test_local_params_from_bfs_count():
    lp = local_params(generate_gpg(12, 5))
    assert (lp.n, lp.k, lp.g, lp.eta) == (24, 3, 6, 3)


def test_local_params_gpg41():
    lp = local_params(generate_gpg(4, 1))
    assert (lp.n, lp.k, lp.g, lp.eta) == (8, 3, 4, 3)


def test_odd_girth_rejected():
    with pytest.raises(OddGirth):
        local_params(generate_gpg(5, 2))  # Petersen graph, girth 5


def test_girth_not_found():
    # binary tree truncated: no cycles at all
    edges = [(i, c) for i in range(15) for c in (2 * i + 1, 2 * i + 2) if c < 31]
    tree = AdjacencyGraph.from_edges(31, edges)
    with pytest.raises(GirthNotFound):
        girth_through(tree, 0, max_depth=8)


def test_low_degree_rejected():
    with pytest.raises(UnsupportedGraph):
        local_params(AdjacencyGraph(1, ((),)))
    cycle = AdjacencyGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(UnsupportedGraph):
        local_params(cycle)


def test_girth_depth_budget():
    # G(24,5) has girth 8: found at depth 4, not at depth 3
    g = generate_gpg(24, 5)
    assert girth_through(g, 0)[0] == 8
    with pytest.raises(GirthNotFound):
        girth_through(g, 0, max_depth=3)


def test_local_exploration_is_bounded():
    for key in [(2, "quarter"), (3, "square"), (3, "quarter")]:
        metric = get_metric(*key)
        lp = local_params(CubeGraph(metric), known_order=group_order(metric))
        # neighborhood within distance g of the origin at most
        assert lp.explored <= sum(metric.degree * (metric.degree - 1) ** i for i in range(lp.g)) + 1
        assert lp.explored < 20_000


def test_local_isomorphism_shells():
    a = shell_counts(CubeGraph(get_metric(2, "quarter")), depth=2)
    b = shell_counts(CubeGraph(get_metric(3, "square")), depth=2)
    assert a == b == (1, 6, 27)


def test_peak_index(distance_arrays):
    assert distance_arrays[3, "square"].peak() <= distance_arrays[2, "quarter"].peak()
