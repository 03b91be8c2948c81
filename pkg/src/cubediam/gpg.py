"""Explicit graphs: generalized Petersen graphs and edge-list files.

Edge-list format (UTF-8)::

    # comment
    n 8
    0 1
    1 2
    ...

The first non-comment line declares the vertex count, every later line is
one undirected edge ``u v`` with 0-based indices, listed once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from . import kernels
from .bounds import BoundsError, d_min
from .graph import GirthNotFound, OddGirth, UnsupportedGraph, girth_through, local_params

ETA_MODES = ("measured", "one")


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class AdjacencyGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one neighbor list per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"duplicate edge at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {u} out of range")
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "AdjacencyGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees())
        indices = np.fromiter((u for a in self.adjacency for u in a), dtype=np.int32,
                              count=int(indptr[-1]))
        return indptr, indices

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self._csr

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


def generate_gpg(m: int, t: int) -> AdjacencyGraph:
    """Generalized Petersen graph G(m, t) on 2m vertices.

    Outer cycle ``0..m-1``, spokes ``i -- m+i``, inner edges
    ``m+i -- m+(i+t) mod m``.
    """
    if m < 3:
        raise ValueError(f"m={m} must be >= 3")
    if not 1 <= t or not 2 * t < m:
        raise ValueError(f"t={t} must satisfy 1 <= t < m/2")
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))
        edges.append((i, m + i))
        edges.append((m + i, m + (i + t) % m))
    return AdjacencyGraph.from_edges(2 * m, edges)


def load_graph(source: str) -> AdjacencyGraph:
    """Parse edge-list text, reporting the offending line on any error."""
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"expected 'n <vertex-count>', got {raw.strip()!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"vertex count is not an integer: {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"vertex indices must be integers: {raw.strip()!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"edge {u} {v} listed twice (list each undirected edge once)", lineno)
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <vertex-count>' header")
    return AdjacencyGraph.from_edges(n, edges)


def read_graph(path: Union[str, Path]) -> AdjacencyGraph:
    return load_graph(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class ValidationReport:
    n: int
    k: int
    g: int
    eta: int
    eta_used: int
    diameter: int
    origin_eccentricity: int
    d_min: Optional[int]  # None when no finite diameter fits the order

    @property
    def passed(self) -> bool:
        return self.d_min is not None and self.d_min <= self.diameter

    @property
    def eccentricity_agrees(self) -> bool:
        """Single-origin BFS gives the diameter (true on vertex-transitive graphs)."""
        return self.origin_eccentricity == self.diameter


def vertex_girths(graph: AdjacencyGraph, max_depth: int = 8) -> list[int]:
    """Shortest cycle through each vertex (0 where none is found within ``max_depth``)."""
    out = []
    for v in range(graph.n):
        try:
            out.append(girth_through(graph, v, max_depth)[0])
        except GirthNotFound:
            out.append(0)
    return out


def graph_girth(graph: AdjacencyGraph, max_depth: int = 8) -> int:
    found = [g for g in vertex_girths(graph, max_depth) if g]
    if not found:
        raise GirthNotFound("girth not found within depth budget")
    return min(found)


def validate_lower_bound(graph: AdjacencyGraph, eta_mode: str = "measured",
                         origin: Optional[int] = None) -> ValidationReport:
    """Compare the diameter lower bound against the exact all-origin diameter.

    Without an explicit ``origin`` the first vertex lying on a shortest
    cycle of the graph is used, so that a graph of even girth is never
    rejected because one of its vertices only sits on odd cycles.
    """
    if eta_mode not in ETA_MODES:
        raise ValueError(f"eta_mode must be one of {ETA_MODES}")
    if not graph.is_regular():
        raise UnsupportedGraph("graph is not regular")
    girths = vertex_girths(graph)
    if not any(girths):
        raise GirthNotFound("girth not found within depth budget")
    g_all = min(g for g in girths if g)
    if g_all % 2:
        raise OddGirth(f"odd-girth graph unsupported (girth {g_all})")
    if origin is None:
        origin = girths.index(g_all)
    indptr, indices = graph.csr()
    ecc = kernels.csr_eccentricities(indptr, indices)
    if (ecc < 0).any():
        raise UnsupportedGraph("graph is disconnected")
    lp = local_params(graph, origin, known_order=graph.n)
    eta_used = lp.eta if eta_mode == "measured" else 1
    try:
        bound = d_min(graph.n, lp.k, lp.g, eta_used)
    except BoundsError:
        # r_max < 1 caps the order below n at every finite distance
        bound = None
    return ValidationReport(
        n=graph.n, k=lp.k, g=lp.g, eta=lp.eta, eta_used=eta_used,
        diameter=int(ecc.max()),
        origin_eccentricity=int(ecc[origin]),
        d_min=bound,
    )
