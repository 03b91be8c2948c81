"""Distance arrays, branching ratios and local parameters of symmetric graphs.

Graphs are either implicit Cayley graphs (:class:`CubeGraph`, vertices are
:class:`~cubediam.cube.CubeState`) or explicit adjacency graphs (anything
with ``n``, ``neighbors(v)`` and ``csr()``, e.g.
:class:`~cubediam.gpg.AdjacencyGraph`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Hashable, Optional

import numpy as np

from . import kernels
from ._pykernels import UNSEEN
from .cube import (
    CubeState,
    Metric,
    apply_move,
    coordinate_space_size,
    group_order,
    move_tables,
    pack_state,
    packed_move_tables,
    rank,
    solved_state,
)

DEFAULT_BUDGET = 10**8
DEFAULT_GIRTH_DEPTH = 8


class GraphTooLarge(RuntimeError):
    """The requested enumeration exceeds the slot budget."""


class UnsupportedGraph(ValueError):
    """The graph violates a precondition of the symmetric-graph analysis."""


class OddGirth(UnsupportedGraph):
    pass


class GirthNotFound(UnsupportedGraph):
    pass


class NotSymmetricDistanceArray(ValueError):
    pass


class CubeGraph:
    """Cayley graph of a cube group: vertices are states, edges are turns."""

    def __init__(self, metric: Metric):
        self.metric = metric

    def __repr__(self):
        return f"CubeGraph({self.metric.key})"

    @property
    def default_origin(self) -> CubeState:
        return solved_state(self.metric.cube_size)

    @property
    def order(self) -> int:
        return group_order(self.metric)

    def neighbors(self, v: CubeState) -> list[CubeState]:
        return [apply_move(v, m) for m in self.metric.generators]


@dataclass(frozen=True)
class DistanceArray:
    counts: tuple[int, ...]
    origin: Any = None

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("a distance array starts with d_0 = 1")
        if any(c < 1 for c in self.counts):
            raise ValueError("every shell of a distance array is nonempty")

    @property
    def diameter(self) -> int:
        return len(self.counts) - 1

    @property
    def order(self) -> int:
        return sum(self.counts)

    def peak(self) -> int:
        """Distance index of the largest shell (first one on ties)."""
        return max(range(len(self.counts)), key=lambda i: (self.counts[i], -i))


@dataclass(frozen=True)
class BranchingRatios:
    ratios: tuple[Fraction, ...]

    def is_nonincreasing(self) -> bool:
        return all(b <= a for a, b in zip(self.ratios, self.ratios[1:]))

    def increases(self) -> list[int]:
        """1-based indices i with r_{i+1} > r_i."""
        return [i + 1 for i, (a, b) in enumerate(zip(self.ratios, self.ratios[1:])) if b > a]

    def bounded_after(self, g: int) -> bool:
        """True if every ratio from r_{g/2} on is at most r_{g/2}."""
        h = g // 2
        if len(self.ratios) < h:
            return True
        cap = self.ratios[h - 1]
        return all(r <= cap for r in self.ratios[h - 1:])


@dataclass(frozen=True)
class EdgePartition:
    counts: tuple[int, ...]


@dataclass(frozen=True)
class IdentityReport:
    order_sum: bool
    edge_sum: bool
    alternating_sum: bool
    terminates: bool
    edges: EdgePartition
    alternating: int

    @property
    def all_pass(self) -> bool:
        return self.order_sum and self.edge_sum and self.alternating_sum and self.terminates


@dataclass(frozen=True)
class LocalParams:
    n: int
    k: int
    g: int
    eta: int
    explored: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.k < 3:
            raise UnsupportedGraph(f"degree {self.k} < 3")
        if self.g < 4 or self.g % 2:
            raise UnsupportedGraph(f"girth {self.g} is not an even number >= 4")
        if self.eta < 1:
            raise UnsupportedGraph("no girth cycle through the origin")


# ------------------------------------------------------------------ BFS

def bfs_distance_array(graph, origin=None, budget: int = DEFAULT_BUDGET) -> DistanceArray:
    """Exact distance array from ``origin`` by breadth-first enumeration.

    Raises :class:`GraphTooLarge` instead of truncating when the graph
    needs more than ``budget`` slots.
    """
    if isinstance(graph, CubeGraph):
        return _cube_bfs(graph, origin, budget)
    if origin is None:
        origin = 0
    if graph.n > budget:
        raise GraphTooLarge(f"graph too large: order {graph.n}, budget {budget}")
    indptr, indices = graph.csr()
    dist = kernels.csr_bfs(indptr, indices, int(origin))
    if (dist < 0).any():
        raise UnsupportedGraph("graph is disconnected")
    return DistanceArray(tuple(int(c) for c in np.bincount(dist)), origin)


def _cube_bfs(graph: CubeGraph, origin: Optional[CubeState], budget: int) -> DistanceArray:
    metric = graph.metric
    if origin is None:
        origin = graph.default_origin
    if metric.cube_size == 2:
        slots = coordinate_space_size(2)
        if slots > budget:
            raise GraphTooLarge(
                f"graph too large: {metric.key} needs {slots} coordinate slots, budget {budget}"
            )
        ptab, ttab = move_tables(metric)
        dist = kernels.bfs_product(ptab, ttab, rank(origin))
        counts = np.bincount(dist[dist != UNSEEN])
        return DistanceArray(tuple(int(c) for c in counts), origin)
    # sparse subgroup of a huge coordinate space: sorted-key sets
    if group_order(metric) > budget:
        raise GraphTooLarge(
            f"graph too large: {metric.key} has order {group_order(metric)}, budget {budget}"
        )
    src, lut = packed_move_tables(metric)
    try:
        counts = kernels.bfs_packed(src, lut, pack_state(origin), max_states=budget)
    except OverflowError as exc:
        raise GraphTooLarge(f"graph too large: {exc}") from exc
    return DistanceArray(tuple(int(c) for c in counts), origin)


def shell_counts(graph, origin=None, depth: int = 2) -> tuple[int, ...]:
    """Sizes of the distance shells 0..depth, from a local exploration."""
    origin = _origin(graph, origin)
    seen = {origin}
    level = [origin]
    out = [1]
    for _ in range(depth):
        nxt = []
        for x in level:
            for y in graph.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        out.append(len(nxt))
        level = nxt
    return tuple(out)


def branching_ratios(da: DistanceArray) -> BranchingRatios:
    c = da.counts
    return BranchingRatios(tuple(Fraction(c[i], c[i - 1]) for i in range(1, len(c))))


def edge_partition(da: DistanceArray, k: int) -> tuple[list[int], int]:
    """Edges between consecutive shells from |E_i| + |E_{i+1}| = k |V_i|.

    Returns the counts |E_1|..|E_d| and the residual |E_{d+1}|, which is
    zero exactly when the array is consistent with a k-regular graph with
    no edges inside a shell.
    """
    edges = []
    prev = 0
    for i, d_i in enumerate(da.counts):
        nxt = k * d_i - prev
        if nxt < 0:
            raise NotSymmetricDistanceArray(
                f"negative edge count at shell {i + 1}: not a {k}-regular symmetric distance array"
            )
        edges.append(nxt)
        prev = nxt
    return edges[:-1], edges[-1]


def verify_identities(da: DistanceArray, k: int, n: Optional[int] = None) -> IdentityReport:
    """Check the shell-sum, edge-sum and alternating-sum identities.

    ``n`` is the independently known order; if omitted the order-sum check
    compares against ``sum(da.counts)`` and is vacuous.
    """
    order = da.order if n is None else n
    edges, residual = edge_partition(da, k)
    alt = sum((-1) ** i * c for i, c in enumerate(da.counts))
    return IdentityReport(
        order_sum=da.order == order,
        edge_sum=2 * sum(edges) == order * k,
        alternating_sum=alt == 0,
        terminates=residual == 0,
        edges=EdgePartition(tuple(edges)),
        alternating=alt,
    )


# ------------------------------------------------------ local parameters

def _origin(graph, origin):
    if origin is not None:
        return origin
    if isinstance(graph, CubeGraph):
        return graph.default_origin
    return 0


def girth_through(graph, origin=None, max_depth: int = DEFAULT_GIRTH_DEPTH) -> tuple[int, int]:
    """Length of the shortest cycle through ``origin`` and the vertices explored.

    Truncated BFS labelling every vertex with the origin's neighbor it
    descends from; an edge joining two different branches closes a cycle of
    length ``dist(x) + dist(y) + 1``.  Explores at most ``max_depth + 1``
    shells, so cycles up to length ``2 * max_depth`` are found.
    """
    origin = _origin(graph, origin)
    dist: dict[Hashable, int] = {origin: 0}
    branch: dict[Hashable, Hashable] = {origin: None}
    level = [origin]
    for depth in range(max_depth):
        best = None
        nxt = []
        for x in level:
            for y in graph.neighbors(x):
                if y not in dist:
                    dist[y] = depth + 1
                    branch[y] = y if depth == 0 else branch[x]
                    nxt.append(y)
                elif depth and y != origin and branch[y] != branch[x]:
                    cand = depth + dist[y] + 1
                    if best is None or cand < best:
                        best = cand
        if best is not None:
            return best, len(dist)
        if not nxt:
            break
        level = nxt
    raise GirthNotFound(f"no cycle through the origin within depth {max_depth}")


def count_cycles(graph, origin=None, length: int = 4) -> tuple[int, int]:
    """Number of simple cycles of ``length`` through ``origin``.

    Enumerates closed walks that never revisit a vertex, then halves the
    count since each cycle is walked in both directions.  Also returns the
    number of distinct vertices touched.
    """
    origin = _origin(graph, origin)
    touched = {origin}
    path = [origin]
    on_path = {origin}
    closed = 0

    def walk(v, steps):
        nonlocal closed
        for y in graph.neighbors(v):
            touched.add(y)
            if steps + 1 == length:
                if y == origin:
                    closed += 1
            elif y not in on_path:
                on_path.add(y)
                path.append(y)
                walk(y, steps + 1)
                path.pop()
                on_path.discard(y)

    walk(origin, 0)
    return closed // 2, len(touched)


def eta_common_neighbors(graph, origin=None) -> int:
    """4-cycles through ``origin`` counted as (pair of neighbors, shared second neighbor)."""
    origin = _origin(graph, origin)
    nbrs = list(dict.fromkeys(graph.neighbors(origin)))
    second = {a: set(graph.neighbors(a)) - {origin} for a in nbrs}
    return sum(len(second[a] & second[b]) for a, b in combinations(nbrs, 2))


def local_params(graph, origin=None, known_order: Optional[int] = None,
                 max_depth: int = DEFAULT_GIRTH_DEPTH,
                 budget: int = DEFAULT_BUDGET) -> LocalParams:
    """Degree, girth and girth-cycle count from a neighborhood of ``origin``.

    Only shells up to the girth are explored.  ``n`` is ``known_order``
    when given; otherwise the graph is enumerated to count it.
    """
    origin = _origin(graph, origin)
    k = len(set(graph.neighbors(origin)))
    if k < 3:
        raise UnsupportedGraph(f"degree {k} < 3")
    g, seen = girth_through(graph, origin, max_depth)
    if g % 2:
        raise OddGirth(f"odd-girth graph unsupported (girth {g})")
    eta, touched = count_cycles(graph, origin, g)
    n = known_order if known_order is not None else bfs_distance_array(graph, origin, budget).order
    return LocalParams(n=n, k=k, g=g, eta=eta, explored=max(seen, touched))
