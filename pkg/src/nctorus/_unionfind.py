"""Weighted union-find over monomial weights z^k L^(e/DEN).

Edges (a, b, k, e) mean x_a = z^k L^(e/DEN) x_b.  A self-loop or a cycle whose
weights do not multiply to 1 kills the component (L is not a root of unity).

The kernel is compiled with numba when available.  Set NCTORUS_NO_NUMBA=1 to
force the interpreted numpy path.
"""
import os

import numpy as np

DEN = 12
ROOTS = 12

_FORCE_PY = os.environ.get("NCTORUS_NO_NUMBA", "") not in ("", "0")

try:
    if _FORCE_PY:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - depends on environment
    njit = None


def _find(parent, wk, we, x):
    # first pass: accumulate weight to root
    k = 0
    e = 0
    r = x
    while parent[r] != r:
        k += wk[r]
        e += we[r]
        r = parent[r]
    # second pass: point the path at the root, rewriting weights
    y = x
    k_rest = k
    e_rest = e
    while y != r and parent[y] != r:
        nxt = parent[y]
        nk = wk[y]
        ne = we[y]
        parent[y] = r
        wk[y] = k_rest % 12
        we[y] = e_rest
        k_rest -= nk
        e_rest -= ne
        y = nxt
    return r, k % 12, e


def _make_solver(_find):
    def _solve(n_nodes, ea, eb, ek, ee):
        parent = np.arange(n_nodes)
        wk = np.zeros(n_nodes, dtype=np.int64)
        we = np.zeros(n_nodes, dtype=np.int64)
        rank = np.zeros(n_nodes, dtype=np.int64)
        killed = np.zeros(n_nodes, dtype=np.bool_)
        clash = np.zeros(n_nodes, dtype=np.bool_)
        for i in range(ea.shape[0]):
            a = ea[i]
            b = eb[i]
            ra, ka, xa = _find(parent, wk, we, a)
            rb, kb, xb = _find(parent, wk, we, b)
            # v[a] = W_a v[ra], v[b] = W_b v[rb], v[a] = w v[b]
            # => v[ra] = w W_b / W_a v[rb]
            k = (ek[i] + kb - ka) % 12
            e = ee[i] + xb - xa
            if ra == rb:
                if k != 0 or e != 0:
                    killed[ra] = True
                    if a != b:
                        clash[ra] = True
                continue
            if rank[ra] < rank[rb]:
                parent[ra] = rb
                wk[ra] = k
                we[ra] = e
                killed[rb] = killed[rb] or killed[ra]
                clash[rb] = clash[rb] or clash[ra]
            else:
                parent[rb] = ra
                wk[rb] = (12 - k) % 12
                we[rb] = -e
                killed[ra] = killed[ra] or killed[rb]
                clash[ra] = clash[ra] or clash[rb]
                if rank[ra] == rank[rb]:
                    rank[ra] += 1
        roots = np.empty(n_nodes, dtype=np.int64)
        rk = np.empty(n_nodes, dtype=np.int64)
        re_ = np.empty(n_nodes, dtype=np.int64)
        for x in range(n_nodes):
            r, k, e = _find(parent, wk, we, x)
            roots[x] = r
            rk[x] = k
            re_[x] = e
        return roots, rk, re_, killed, clash
    return _solve


_solve_py = _make_solver(_find)
_solve_nb = None


def _compile():
    global _solve_nb
    if njit is None:
        return None
    if _solve_nb is None:
        _solve_nb = njit(_make_solver(njit(_find)))
    return _solve_nb


def backend() -> str:
    return "numba" if njit is not None else "numpy"


def solve(n_nodes, edges, use_numba=None):
    """Run the weighted union-find.

    edges: int64 array of shape (E, 4) with columns a, b, k, e.
    Returns (root, k_to_root, e_to_root, killed_by_root, clash_by_root).
    """
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 4)
    args = (n_nodes, edges[:, 0].copy(), edges[:, 1].copy(), edges[:, 2].copy(), edges[:, 3].copy())
    if use_numba is None:
        use_numba = njit is not None
    if use_numba:
        fn = _compile()
        if fn is None:
            raise RuntimeError("numba is not available")
        return fn(*args)
    return _solve_py(*args)
