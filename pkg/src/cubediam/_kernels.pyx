# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled BFS kernels.  Signatures mirror ``cubediam._pykernels``."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint8_t

DEF UNSEEN = 255


def bfs_product(const int32_t[:, ::1] perm_table, const int32_t[:, ::1] twist_table,
                long long origin, int max_level=254):
    """Level-synchronous scan-and-expand BFS over a product coordinate.

    Vertex ``p * n_twist + t`` has neighbors
    ``perm_table[p, m] * n_twist + twist_table[t, m]``.  Returns one byte of
    distance per slot; unreached slots hold 255.
    """
    cdef Py_ssize_t n_twist = twist_table.shape[0]
    cdef Py_ssize_t n = perm_table.shape[0] * n_twist
    cdef Py_ssize_t k = perm_table.shape[1]
    if twist_table.shape[1] != k:
        raise ValueError("move tables disagree on the number of generators")
    if not 0 <= origin < n:
        raise ValueError("origin out of range")
    if not 0 < max_level < UNSEEN:
        raise ValueError("max_level must be in 1..254")

    dist = np.full(n, UNSEEN, dtype=np.uint8)
    cdef uint8_t[::1] d = dist
    cdef Py_ssize_t idx, p, t, j, nxt
    cdef uint8_t level = 0
    cdef long long found = 1
    d[origin] = 0
    with nogil:
        while found and level < max_level:
            found = 0
            for idx in range(n):
                if d[idx] != level:
                    continue
                p = idx // n_twist
                t = idx - p * n_twist
                for j in range(k):
                    nxt = perm_table[p, j] * n_twist + twist_table[t, j]
                    if d[nxt] == UNSEEN:
                        d[nxt] = level + 1
                        found += 1
            level += 1
    return dist


def csr_bfs(const int64_t[::1] indptr, const int32_t[::1] indices, Py_ssize_t origin):
    """Distances from ``origin`` in a CSR adjacency structure, -1 if unreached."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    if not 0 <= origin < n:
        raise ValueError("origin out of range")
    dist = np.full(n, -1, dtype=np.int32)
    cdef int32_t[::1] d = dist
    queue = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] q = queue
    with nogil:
        _bfs(indptr, indices, origin, d, q)
    return dist


cdef int32_t _bfs(const int64_t[::1] indptr, const int32_t[::1] indices, Py_ssize_t origin,
                  int32_t[::1] d, int32_t[::1] q) noexcept nogil:
    """Fill ``d`` (preset to -1); return the number of reached vertices."""
    cdef Py_ssize_t head = 0, tail = 1, u, e, v
    d[origin] = 0
    q[0] = <int32_t>origin
    while head < tail:
        u = q[head]
        head += 1
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if d[v] < 0:
                d[v] = d[u] + 1
                q[tail] = <int32_t>v
                tail += 1
    return <int32_t>tail


def csr_eccentricities(const int64_t[::1] indptr, const int32_t[::1] indices):
    """Eccentricity of every vertex, or -1 where some vertex is unreachable."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    ecc = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] out = ecc
    cdef int32_t[::1] d = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] q = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t s, i
    cdef int32_t reached
    with nogil:
        for s in range(n):
            for i in range(n):
                d[i] = -1
            reached = _bfs(indptr, indices, s, d, q)
            if reached < n:
                out[s] = -1
            else:
                out[s] = d[q[n - 1]]
    return ecc
