"""Lehmer-code permutation ranking and mixed-radix orientation codes."""

from __future__ import annotations

from math import factorial
from typing import Sequence

import numpy as np


def perm_rank(p: Sequence[int]) -> int:
    """Lexicographic rank of a permutation of ``0..len(p)-1``.

    The identity ranks 0 and the reversed permutation ranks ``n! - 1``.
    """
    n = len(p)
    rank = 0
    for i in range(n):
        smaller = 0
        pi = p[i]
        for j in range(i + 1, n):
            if p[j] < pi:
                smaller += 1
        rank += smaller * factorial(n - 1 - i)
    return rank


def perm_unrank(rank: int, n: int) -> list[int]:
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    pool = list(range(n))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        q, rank = divmod(rank, f)
        out.append(pool.pop(q))
    return out


def parity(p: Sequence[int]) -> int:
    """0 for even permutations, 1 for odd ones (cycle counting)."""
    seen = [False] * len(p)
    transpositions = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        transpositions += length - 1
    return transpositions & 1


def orient_code(ori: Sequence[int], base: int) -> int:
    """Encode all but the last orientation in base ``base``.

    The last entry is implied by the sum constraint, so it is dropped.
    """
    code = 0
    for o in ori[:-1]:
        code = code * base + o
    return code


def orient_decode(code: int, n: int, base: int) -> list[int]:
    if not 0 <= code < base ** (n - 1):
        raise ValueError(f"orientation code {code} out of range")
    ori = [0] * n
    for i in range(n - 2, -1, -1):
        code, ori[i] = divmod(code, base)
    ori[n - 1] = (-sum(ori[:-1])) % base
    return ori


def perm_rank_array(perms) -> np.ndarray:
    """Vectorized :func:`perm_rank` over the rows of an ``(N, n)`` array."""
    perms = np.asarray(perms, dtype=np.int64)
    n = perms.shape[1]
    ranks = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller = (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1)
        ranks += smaller * factorial(n - 1 - i)
    return ranks
