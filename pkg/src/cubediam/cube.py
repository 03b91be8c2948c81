"""Cubie-level model of the 2x2x2 and 3x3x3 Cubes and their turn metrics.

Slot and cubie naming follows the usual Singmaster/Kociemba layout::

    corners: URF UFL ULB UBR DFR DLF DBL DRB
    edges:   UR UF UL UB DR DF DL DB FR FL BL BR

A state stores, for every slot, which cubie currently sits there and its
twist (corners, mod 3) or flip (edges, mod 2).  Moves use the "replaced by"
convention: after applying ``m`` the cubie in slot ``i`` is the one that was
in slot ``m.cp[i]`` and its twist grows by ``m.co[i]``.

The 2x2x2 Cube has no fixed centers, so the UFL corner is held fixed as the
orientation anchor and only R, D and B layers are turned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

import numpy as np

from .perm import orient_code, orient_decode, parity, perm_rank, perm_rank_array, perm_unrank

CORNER_NAMES = ("URF", "UFL", "ULB", "UBR", "DFR", "DLF", "DBL", "DRB")
EDGE_NAMES = ("UR", "UF", "UL", "UB", "DR", "DF", "DL", "DB", "FR", "FL", "BL", "BR")

ANCHOR_SLOT = 1  # UFL
ANCHOR_TAG = "ulf"
FREE_SLOTS = tuple(i for i in range(8) if i != ANCHOR_SLOT)

METRIC_NAMES = ("quarter", "square", "square-slice")
SUPPORTED = ((3, "square-slice"), (2, "square"), (2, "quarter"), (3, "square"), (3, "quarter"))


class ContractError(ValueError):
    """A move or state was used outside its cube size or invariants."""


class UnsupportedMetric(ValueError):
    pass


@dataclass(frozen=True)
class CornerState:
    permutation: tuple[int, ...]
    orientation: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.permutation) != list(range(8)):
            raise ContractError(f"corner permutation is not a bijection: {self.permutation}")
        if len(self.orientation) != 8 or any(not 0 <= o < 3 for o in self.orientation):
            raise ContractError(f"bad corner twists: {self.orientation}")
        if sum(self.orientation) % 3:
            raise ContractError("corner twist sum is not 0 mod 3")


@dataclass(frozen=True)
class EdgeState:
    permutation: tuple[int, ...]
    orientation: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.permutation) != list(range(12)):
            raise ContractError(f"edge permutation is not a bijection: {self.permutation}")
        if len(self.orientation) != 12 or any(o not in (0, 1) for o in self.orientation):
            raise ContractError(f"bad edge flips: {self.orientation}")
        if sum(self.orientation) % 2:
            raise ContractError("edge flip sum is odd")


@dataclass(frozen=True)
class CubeState:
    size: int
    corners: CornerState
    edges: Optional[EdgeState] = None
    anchor: Optional[str] = None

    def __post_init__(self):
        if self.size == 2:
            if self.edges is not None:
                raise ContractError("2x2x2 states carry no edges")
            if self.anchor != ANCHOR_TAG:
                raise ContractError("2x2x2 states must use the ulf anchor")
            c = self.corners
            if c.permutation[ANCHOR_SLOT] != ANCHOR_SLOT or c.orientation[ANCHOR_SLOT]:
                raise ContractError("anchor corner UFL has moved")
        elif self.size == 3:
            if self.edges is None:
                raise ContractError("3x3x3 states need edges")
            if parity(self.corners.permutation) != parity(self.edges.permutation):
                raise ContractError("corner and edge permutation parities differ")
        else:
            raise ContractError(f"unsupported cube size {self.size}")


@dataclass(frozen=True)
class Move:
    name: str
    size: int
    cp: tuple[int, ...]
    co: tuple[int, ...]
    ep: Optional[tuple[int, ...]] = None
    eo: Optional[tuple[int, ...]] = None

    def then(self, other: "Move", name: Optional[str] = None) -> "Move":
        """The move that performs ``self`` followed by ``other``."""
        cp = tuple(self.cp[other.cp[i]] for i in range(8))
        co = tuple((self.co[other.cp[i]] + other.co[i]) % 3 for i in range(8))
        ep = eo = None
        if self.ep is not None:
            ep = tuple(self.ep[other.ep[i]] for i in range(12))
            eo = tuple((self.eo[other.ep[i]] + other.eo[i]) % 2 for i in range(12))
        return Move(name or f"{self.name} {other.name}", self.size, cp, co, ep, eo)

    def power(self, n: int, name: Optional[str] = None) -> "Move":
        out = self
        for _ in range(n - 1):
            out = out.then(self)
        return Move(name or f"{self.name}{n}", self.size, out.cp, out.co, out.ep, out.eo)

    def is_identity(self) -> bool:
        ident = self.cp == tuple(range(8)) and not any(self.co)
        if self.ep is not None:
            ident = ident and self.ep == tuple(range(12)) and not any(self.eo)
        return ident

    def order(self) -> int:
        m, n = self, 1
        while not m.is_identity():
            m = m.then(self)
            n += 1
        return n

    def inverse(self) -> "Move":
        return self.power(self.order() - 1, name=_inverse_name(self.name))


def _inverse_name(name: str) -> str:
    if name.endswith("'"):
        return name[:-1]
    if name[-1].isalpha():
        return name + "'"
    return name


# Quarter turns of the six outer layers, clockwise seen from the face.
_FACE = {
    "U": ((3, 0, 1, 2, 4, 5, 6, 7), (0,) * 8,
          (3, 0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11), (0,) * 12),
    "R": ((4, 1, 2, 0, 7, 5, 6, 3), (2, 0, 0, 1, 1, 0, 0, 2),
          (8, 1, 2, 3, 11, 5, 6, 7, 4, 9, 10, 0), (0,) * 12),
    "F": ((1, 5, 2, 3, 0, 4, 6, 7), (1, 2, 0, 0, 2, 1, 0, 0),
          (0, 9, 2, 3, 4, 8, 6, 7, 1, 5, 10, 11), (0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0)),
    "D": ((0, 1, 2, 3, 5, 6, 7, 4), (0,) * 8,
          (0, 1, 2, 3, 5, 6, 7, 4, 8, 9, 10, 11), (0,) * 12),
    "L": ((0, 2, 6, 3, 4, 1, 5, 7), (0, 1, 2, 0, 0, 2, 1, 0),
          (0, 1, 10, 3, 4, 5, 9, 7, 8, 2, 6, 11), (0,) * 12),
    "B": ((0, 1, 3, 7, 4, 5, 2, 6), (0, 0, 1, 2, 0, 0, 2, 1),
          (0, 1, 2, 11, 4, 5, 6, 10, 8, 9, 3, 7), (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1)),
}


@lru_cache(maxsize=None)
def face_move(face: str, size: int = 3) -> Move:
    """Clockwise quarter turn of one outer layer."""
    cp, co, ep, eo = _FACE[face]
    if size == 2:
        if ANCHOR_SLOT in (i for i in range(8) if cp[i] != i):
            raise ContractError(f"{face} moves the 2x2x2 anchor corner")
        return Move(face, 2, cp, co)
    return Move(face, 3, cp, co, ep, eo)


@dataclass(frozen=True)
class Metric:
    cube_size: int
    name: str
    generators: tuple[Move, ...]

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def key(self) -> str:
        return f"{self.cube_size}-{self.name}"

    def inverse_index(self) -> list[int]:
        """Position of each generator's inverse within the generator list."""
        moves = [(g.cp, g.co, g.ep, g.eo) for g in self.generators]
        out = []
        for g in self.generators:
            inv = g.inverse()
            out.append(moves.index((inv.cp, inv.co, inv.ep, inv.eo)))
        return out


def _quarter(faces: str, size: int) -> tuple[Move, ...]:
    out = []
    for f in faces:
        m = face_move(f, size)
        out += [m, m.inverse()]
    return tuple(out)


@lru_cache(maxsize=None)
def get_metric(cube_size: int, name: str) -> Metric:
    if (cube_size, name) not in SUPPORTED:
        raise UnsupportedMetric(f"unsupported metric: {cube_size}x{cube_size}x{cube_size} {name}")
    if cube_size == 2:
        if name == "quarter":
            gens = _quarter("RDB", 2)
        else:
            gens = tuple(face_move(f, 2).power(2, f + "2") for f in "RDB")
    elif name == "quarter":
        gens = _quarter("RDBLUF", 3)
    elif name == "square":
        gens = tuple(face_move(f).power(2, f + "2") for f in "RDBLUF")
    else:
        gens = tuple(
            face_move(a).power(2).then(face_move(b).power(2), f"{a}2 {b}-2")
            for a, b in (("R", "L"), ("D", "U"), ("B", "F"))
        )
    return Metric(cube_size, name, gens)


def generators(metric: Metric) -> list[Move]:
    get_metric(metric.cube_size, metric.name)  # raises on unsupported pairs
    return list(metric.generators)


def solved_state(cube_size: int) -> CubeState:
    corners = CornerState(tuple(range(8)), (0,) * 8)
    if cube_size == 2:
        return CubeState(2, corners, None, ANCHOR_TAG)
    if cube_size == 3:
        return CubeState(3, corners, EdgeState(tuple(range(12)), (0,) * 12))
    raise ContractError(f"unsupported cube size {cube_size}")


def apply_move(s: CubeState, m: Move) -> CubeState:
    if s.size != m.size:
        raise ContractError(f"move {m.name} is for a {m.size}-cube, state is a {s.size}-cube")
    cperm, cori = s.corners.permutation, s.corners.orientation
    cp, co = m.cp, m.co
    corners = CornerState(
        tuple(cperm[cp[i]] for i in range(8)),
        tuple((cori[cp[i]] + co[i]) % 3 for i in range(8)),
    )
    edges = None
    if s.edges is not None:
        eperm, eori = s.edges.permutation, s.edges.orientation
        ep, eo = m.ep, m.eo
        edges = EdgeState(
            tuple(eperm[ep[i]] for i in range(12)),
            tuple((eori[ep[i]] + eo[i]) % 2 for i in range(12)),
        )
    return CubeState(s.size, corners, edges, s.anchor)


def apply_sequence(s: CubeState, moves: Sequence[Move]) -> CubeState:
    for m in moves:
        s = apply_move(s, m)
    return s


# ---------------------------------------------------------------- ranking

N_PERM7 = factorial(7)
N_TWIST7 = 3**6
N_CPERM = factorial(8)
N_CTWIST = 3**7
N_EPERM = factorial(12)
N_EFLIP = 2**11


def coordinate_space_size(cube_size: int) -> int:
    """Number of rank slots: the full mixed-radix space, reachable or not."""
    if cube_size == 2:
        return N_PERM7 * N_TWIST7
    if cube_size == 3:
        return N_CPERM * N_CTWIST * N_EPERM * N_EFLIP
    raise ContractError(f"unsupported cube size {cube_size}")


def _free_perm(perm: Sequence[int]) -> list[int]:
    relabel = {slot: i for i, slot in enumerate(FREE_SLOTS)}
    return [relabel[perm[slot]] for slot in FREE_SLOTS]


def corner_perm_coord(perm: Sequence[int]) -> int:
    """Rank of the 7 free corners of a 2x2x2 state."""
    return perm_rank(_free_perm(perm))


def corner_twist_coord(ori: Sequence[int]) -> int:
    return orient_code([ori[s] for s in FREE_SLOTS], 3)


def corner_perm_from_coord(c: int) -> tuple[int, ...]:
    free = perm_unrank(c, 7)
    perm = [ANCHOR_SLOT] * 8
    for slot, p in zip(FREE_SLOTS, free):
        perm[slot] = FREE_SLOTS[p]
    return tuple(perm)


def corner_twist_from_coord(c: int) -> tuple[int, ...]:
    ori = [0] * 8
    for slot, o in zip(FREE_SLOTS, orient_decode(c, 7, 3)):
        ori[slot] = o
    return tuple(ori)


def rank(s: CubeState, metric: Optional[Metric] = None) -> int:
    """Dense mixed-radix index of a state.

    2x2x2: ``perm7 * 3**6 + twist``.  3x3x3: corner perm, corner twist, edge
    perm and edge flip, most significant first.  The solved state is 0.
    """
    if metric is not None and metric.cube_size != s.size:
        raise ContractError("metric and state cube sizes differ")
    c = s.corners
    if s.size == 2:
        return corner_perm_coord(c.permutation) * N_TWIST7 + corner_twist_coord(c.orientation)
    e = s.edges
    idx = perm_rank(c.permutation)
    idx = idx * N_CTWIST + orient_code(c.orientation, 3)
    idx = idx * N_EPERM + perm_rank(e.permutation)
    return idx * N_EFLIP + orient_code(e.orientation, 2)


def unrank(index: int, cube_size: int) -> CubeState:
    if not 0 <= index < coordinate_space_size(cube_size):
        raise ValueError(f"index {index} out of range")
    if cube_size == 2:
        p, t = divmod(index, N_TWIST7)
        corners = CornerState(corner_perm_from_coord(p), corner_twist_from_coord(t))
        return CubeState(2, corners, None, ANCHOR_TAG)
    rest, eo = divmod(index, N_EFLIP)
    rest, ep = divmod(rest, N_EPERM)
    cp, co = divmod(rest, N_CTWIST)
    corners = CornerState(tuple(perm_unrank(cp, 8)), tuple(orient_decode(co, 8, 3)))
    edges = EdgeState(tuple(perm_unrank(ep, 12)), tuple(orient_decode(eo, 12, 2)))
    return CubeState(3, corners, edges)


def group_order(metric: Metric) -> int:
    """Exact order of the group generated by the metric's turns."""
    key = (metric.cube_size, metric.name)
    if key == (3, "square-slice"):
        return 2**3  # each slice pair independently at 0 or 180 degrees
    if key == (2, "square"):
        return factorial(4)  # one tetrad permuted freely, the rest forced
    if key == (2, "quarter"):
        return factorial(7) * 3**6
    if key == (3, "square"):
        # corner tetrads: 4!*4!/6; edge slices: 4!**3/2
        return (factorial(4) ** 2 // 6) * (factorial(4) ** 3 // 2)
    if key == (3, "quarter"):
        return factorial(8) * 3**7 * factorial(12) * 2**11 // 2
    raise UnsupportedMetric(f"unsupported metric: {key}")


# ------------------------------------------------------------ move tables

@lru_cache(maxsize=None)
def move_tables(metric: Metric) -> tuple[np.ndarray, np.ndarray]:
    """Per-generator transition tables for the two 2x2x2 coordinates.

    Returns ``(perm_table, twist_table)`` with shapes ``(7!, k)`` and
    ``(3**6, k)``; the corner permutation and corner twist of a product
    depend only on the corresponding factor, so the rank of a neighbor is
    ``perm_table[p, m] * 3**6 + twist_table[t, m]``.
    """
    if metric.cube_size != 2:
        raise ContractError("coordinate move tables exist only for the 2x2x2 Cube")
    k = metric.degree
    ptab = np.empty((N_PERM7, k), dtype=np.int32)
    ttab = np.empty((N_TWIST7, k), dtype=np.int32)
    for p in range(N_PERM7):
        perm = corner_perm_from_coord(p)
        for j, m in enumerate(metric.generators):
            ptab[p, j] = corner_perm_coord([perm[m.cp[i]] for i in range(8)])
    for t in range(N_TWIST7):
        ori = corner_twist_from_coord(t)
        for j, m in enumerate(metric.generators):
            ttab[t, j] = corner_twist_coord([(ori[m.cp[i]] + m.co[i]) % 3 for i in range(8)])
    ptab.flags.writeable = False
    ttab.flags.writeable = False
    return ptab, ttab


# ---------------------------------------------------------- packed states

def pack_state(s: CubeState) -> np.ndarray:
    """One byte per slot: ``cubie * 3 + twist`` then ``cubie * 2 + flip``."""
    c = s.corners
    out = [p * 3 + o for p, o in zip(c.permutation, c.orientation)]
    if s.edges is not None:
        out += [p * 2 + o for p, o in zip(s.edges.permutation, s.edges.orientation)]
    return np.array(out, dtype=np.uint8)


def rank_packed(rows: np.ndarray) -> np.ndarray:
    """Vectorized :func:`rank` for packed 2x2x2 rows of shape ``(N, 8)``."""
    rows = np.asarray(rows)
    if rows.ndim != 2 or rows.shape[1] != 8:
        raise ContractError("rank_packed expects packed 2x2x2 rows")
    free = rows[:, list(FREE_SLOTS)].astype(np.int64)
    cubie, twist = np.divmod(free, 3)
    relabel = np.array([FREE_SLOTS.index(c) if c in FREE_SLOTS else -1 for c in range(8)])
    prank = perm_rank_array(relabel[cubie])
    tcode = np.zeros(len(rows), dtype=np.int64)
    for j in range(6):
        tcode = tcode * 3 + twist[:, j]
    return prank * N_TWIST7 + tcode


def unpack_state(row: Sequence[int], cube_size: int) -> CubeState:
    row = [int(x) for x in row]
    corners = CornerState(tuple(x // 3 for x in row[:8]), tuple(x % 3 for x in row[:8]))
    if cube_size == 2:
        return CubeState(2, corners, None, ANCHOR_TAG)
    edges = EdgeState(tuple(x // 2 for x in row[8:20]), tuple(x % 2 for x in row[8:20]))
    return CubeState(3, corners, edges)


@lru_cache(maxsize=None)
def packed_move_tables(metric: Metric) -> tuple[np.ndarray, np.ndarray]:
    """Gather indices and per-slot lookup tables acting on packed rows.

    ``new = lut[m][arange(w), row[src[m]]]`` applies generator ``m`` to a
    packed row of width ``w``.
    """
    w = 8 if metric.cube_size == 2 else 20
    k = metric.degree
    src = np.empty((k, w), dtype=np.intp)
    lut = np.zeros((k, w, 24), dtype=np.uint8)
    for j, m in enumerate(metric.generators):
        src[j, :8] = m.cp
        for i in range(8):
            for code in range(24):
                lut[j, i, code] = (code // 3) * 3 + (code % 3 + m.co[i]) % 3
        if w == 20:
            src[j, 8:] = [8 + e for e in m.ep]
            for i in range(12):
                for code in range(24):
                    lut[j, 8 + i, code] = (code // 2) * 2 + (code % 2 + m.eo[i]) % 2
    return src, lut
