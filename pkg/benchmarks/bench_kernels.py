"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from cubediam import _pykernels
from cubediam.cube import get_metric, move_tables
from cubediam.gpg import generate_gpg

try:
    from cubediam import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    perm, twist = move_tables(get_metric(2, "quarter"))
    graphs = [generate_gpg(m, t) for m in range(40, 65) for t in range(1, (m - 1) // 2 + 1)]
    csrs = [g.csr() for g in graphs]

    cases = {
        "bfs_product 2x2x2 quarter (3.67M states)":
            lambda mod: mod.bfs_product(perm, twist, 0),
        f"csr_eccentricities on {len(csrs)} G(m,t), 40 <= m <= 64":
            lambda mod: [mod.csr_eccentricities(*c) for c in csrs],
    }
    print(f"{'kernel':48s} {'numpy':>9s} {'cython':>9s} {'speedup':>8s}")
    for name, call in cases.items():
        t_py, ref = best_of(lambda: call(_pykernels), args.repeat)
        if _kernels is None:
            print(f"{name:48s} {t_py:8.3f}s {'n/a':>9s}")
            continue
        t_cy, got = best_of(lambda: call(_kernels), args.repeat)
        if not isinstance(ref, list):
            ref, got = [ref], [got]
        assert all(np.array_equal(a, b) for a, b in zip(ref, got)), f"{name}: backends disagree"
        print(f"{name:48s} {t_py:8.3f}s {t_cy:8.3f}s {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
