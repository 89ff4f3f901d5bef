"""JIT-compiled queue BFS over CSR adjacency (numba backend)."""

import numpy as np
from numba import njit


@njit(cache=True)
def _bfs_fill(indptr, indices, source, dist, queue):
    """Run one BFS from ``source``, writing distances into ``dist``.

    Returns the number of reached vertices.  Unreached entries are -1.
    """
    n = dist.shape[0]
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for j in range(indptr[v], indptr[v + 1]):
            u = indices[j]
            if dist[u] < 0:
                dist[u] = dv
                queue[tail] = u
                tail += 1
    return tail


@njit(cache=True)
def all_pairs_stats(indptr, indices):
    n = indptr.shape[0] - 1
    ecc = np.zeros(n, np.int64)
    rowsum = np.zeros(n, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    all_reached = True
    for s in range(n):
        reached = _bfs_fill(indptr, indices, s, dist, queue)
        if reached != n:
            all_reached = False
        emax = 0
        acc = 0
        for v in range(n):
            dv = dist[v]
            if dv > 0:
                acc += dv
                if dv > emax:
                    emax = dv
        ecc[s] = emax
        rowsum[s] = acc
    return ecc, rowsum, all_reached


def sssp(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    _bfs_fill(indptr, indices, np.int64(source), dist, queue)
    return dist
