"""Weighted union-find: compiled kernel vs the interpreted numpy path.

Builds the H^2 constraint graph of a twist at a large window and times the
component solve with each backend.  Run: python3 benchmarks/bench_unionfind.py [R]
"""
import sys
import time

import numpy as np

from nctorus import _unionfind
from nctorus.complexes import TWISTS, h2_graph


def edges_for(label, R):
    g = h2_graph(TWISTS[label], R)
    return g, np.asarray(g.edges, dtype=np.int64).reshape(-1, 4)


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(R=30):
    for label in ("w", "i", "-w", "-1"):
        g, edges = edges_for(label, R)
        n = g.side * g.side
        t_py, a = timed(lambda: _unionfind.solve(n, edges, use_numba=False), repeat=1)
        if _unionfind.backend() == "numba":
            _unionfind.solve(n, edges, use_numba=True)  # compile
            t_nb, b = timed(lambda: _unionfind.solve(n, edges, use_numba=True))
            same = all(np.array_equal(x, y) for x, y in zip(a, b))
            print(f"{label:>3} R={R} nodes={n} edges={len(edges)}  numpy {t_py * 1e3:8.1f} ms  numba {t_nb * 1e3:7.2f} ms  "
                  f"x{t_py / t_nb:5.0f}  agree={same}")
        else:
            print(f"{label:>3} R={R} nodes={n} edges={len(edges)}  numpy {t_py * 1e3:8.1f} ms  (numba unavailable)")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 30)
