"""Numpy implementations of the BFS kernels.

Used when the compiled extension is unavailable (or disabled with
``CUBEDIAM_PURE_PYTHON=1``).  ``bfs_packed`` has no compiled twin: the
sparse enumerations it serves are small enough that sorting dominates.
"""

from __future__ import annotations

import numpy as np

UNSEEN = 255


def bfs_product(perm_table, twist_table, origin, max_level=254):
    n_twist = twist_table.shape[0]
    n = perm_table.shape[0] * n_twist
    if twist_table.shape[1] != perm_table.shape[1]:
        raise ValueError("move tables disagree on the number of generators")
    if not 0 <= origin < n:
        raise ValueError("origin out of range")
    if not 0 < max_level < UNSEEN:
        raise ValueError("max_level must be in 1..254")
    pt = np.asarray(perm_table, dtype=np.int64)
    tt = np.asarray(twist_table, dtype=np.int64)
    dist = np.full(n, UNSEEN, dtype=np.uint8)
    dist[origin] = 0
    level = 0
    while level < max_level:
        frontier = np.flatnonzero(dist == level)
        p, t = np.divmod(frontier, n_twist)
        nxt = (pt[p] * n_twist + tt[t]).ravel()
        nxt = nxt[dist[nxt] == UNSEEN]
        if nxt.size == 0:
            break
        dist[nxt] = level + 1
        level += 1
    return dist


def csr_bfs(indptr, indices, origin):
    n = len(indptr) - 1
    if not 0 <= origin < n:
        raise ValueError("origin out of range")
    dist = np.full(n, -1, dtype=np.int32)
    dist[origin] = 0
    frontier = np.array([origin])
    level = 0
    while frontier.size:
        starts, stops = indptr[frontier], indptr[frontier + 1]
        nbrs = np.concatenate([indices[a:b] for a, b in zip(starts, stops)])
        nbrs = np.unique(nbrs[dist[nbrs] < 0])
        level += 1
        dist[nbrs] = level
        frontier = nbrs
    return dist


def _padded_neighbors(indptr, indices):
    n = len(indptr) - 1
    deg = np.diff(indptr)
    width = int(deg.max()) if n else 0
    # column n is a sink that is never in any frontier
    nbr = np.full((n, width), n, dtype=np.int64)
    for v in range(n):
        nbr[v, : deg[v]] = indices[indptr[v] : indptr[v + 1]]
    return nbr


def csr_eccentricities(indptr, indices, chunk=256):
    """All-origin BFS, advancing every origin of a chunk at once."""
    n = len(indptr) - 1
    nbr = _padded_neighbors(indptr, indices)
    ecc = np.empty(n, dtype=np.int32)
    for lo in range(0, n, chunk):
        hi = min(n, lo + chunk)
        rows = np.arange(hi - lo)
        reached = np.zeros((hi - lo, n + 1), dtype=bool)
        reached[rows, np.arange(lo, hi)] = True
        frontier = reached.copy()
        level = np.zeros(hi - lo, dtype=np.int32)
        while True:
            nxt = frontier[:, nbr].any(axis=2)
            nxt &= ~reached[:, :n]
            grew = nxt.any(axis=1)
            if not grew.any():
                break
            level += grew
            reached[:, :n] |= nxt
            frontier[:, :n] = nxt
        level[~reached[:, :n].all(axis=1)] = -1
        ecc[lo:hi] = level
    return ecc


def _row_keys(rows):
    """Sortable fixed-width keys, one per packed state row."""
    w = rows.shape[1]
    if w <= 8:
        padded = np.zeros((rows.shape[0], 8), dtype=np.uint8)
        padded[:, :w] = rows
        return padded.view(np.uint64).ravel()
    return np.ascontiguousarray(rows).view(np.dtype((np.void, w))).ravel()


def keys_to_rows(keys, width):
    """Inverse of ``_row_keys``."""
    raw = np.ascontiguousarray(keys).view(np.uint8)
    return raw.reshape(len(keys), -1)[:, :width]


def bfs_packed(src, lut, origin_row, max_states, max_level=254, return_visited=False):
    """Queue-free BFS over packed state rows with sorted-key deduplication.

    ``src``/``lut`` come from ``cube.packed_move_tables``.  Returns the
    per-distance counts (and the sorted visited keys if ``return_visited``,
    decodable with ``keys_to_rows``).  Raises ``OverflowError`` once more than
    ``max_states`` distinct states have been seen.
    """
    w = src.shape[1]
    cols = np.arange(w)
    frontier = np.asarray(origin_row, dtype=np.uint8).reshape(1, w)
    visited = _row_keys(frontier)
    counts = [1]
    while len(counts) <= max_level:
        expanded = np.concatenate([lut[j][cols, frontier[:, src[j]]] for j in range(len(src))])
        keys = _row_keys(expanded)
        keys, first = np.unique(keys, return_index=True)
        pos = np.searchsorted(visited, keys)
        pos[pos == len(visited)] = 0
        fresh = visited[pos] != keys
        if not fresh.any():
            break
        frontier = expanded[first[fresh]]
        counts.append(len(frontier))
        visited = np.sort(np.concatenate([visited, keys[fresh]]))
        if len(visited) > max_states:
            raise OverflowError(f"more than {max_states} states reached")
    if return_visited:
        return counts, visited
    return counts
