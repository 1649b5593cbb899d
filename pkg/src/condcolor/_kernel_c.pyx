# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for conditional (k,r)-coloring search.

Mirror of _kernel_py.run_search: same traversal order, same pruning, same
node accounting.  Any change here must be replayed there (and vice versa);
tests assert the two backends return identical results and node counts.
"""

from libc.stdlib cimport calloc, free
from time import monotonic

STATUS_DONE = 0
STATUS_TIMEOUT = 1

MODE_FIRST = 0
MODE_ENUM = 1


def run_search(int n, int[::1] indptr, int[::1] nbrs, int[::1] order,
               int[::1] mins, int k, int mode, int cap, double deadline):
    """See _kernel_py.run_search for the contract."""
    cdef int k1 = k + 1
    cdef int *deg = <int *> calloc(n, sizeof(int))
    cdef int *color = <int *> calloc(n, sizeof(int))
    cdef int *cnt = <int *> calloc(n * k1, sizeof(int))
    cdef int *distinct = <int *> calloc(n, sizeof(int))
    cdef int *colored = <int *> calloc(n, sizeof(int))
    cdef int *stack_color = <int *> calloc(n, sizeof(int))
    cdef int *stack_maxused = <int *> calloc(n, sizeof(int))
    if (deg == NULL or color == NULL or cnt == NULL or distinct == NULL
            or colored == NULL or stack_color == NULL or stack_maxused == NULL):
        free(deg); free(color); free(cnt); free(distinct)
        free(colored); free(stack_color); free(stack_maxused)
        raise MemoryError()

    cdef long long nodes = 0
    cdef int status = STATUS_DONE
    cdef int maxused = 0
    cdef int depth = 0
    cdef int next_c = 1
    cdef int v, c, cmax, placed, row_lo, row_hi, i, u, idx, pv, pc
    cdef bint ok
    solutions = []

    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]

    try:
        while True:
            v = order[depth]
            row_lo = indptr[v]
            row_hi = indptr[v + 1]
            cmax = maxused + 1
            if cmax > k:
                cmax = k
            placed = 0
            c = next_c
            while c <= cmax:
                if cnt[v * k1 + c] == 0:
                    nodes += 1
                    if deadline != 0.0 and (nodes & 2047) == 0 and monotonic() >= deadline:
                        status = STATUS_TIMEOUT
                        return status, solutions, nodes
                    color[v] = c
                    for i in range(row_lo, row_hi):
                        u = nbrs[i]
                        idx = u * k1 + c
                        cnt[idx] += 1
                        if cnt[idx] == 1:
                            distinct[u] += 1
                        colored[u] += 1
                    ok = True
                    for i in range(row_lo, row_hi):
                        u = nbrs[i]
                        if distinct[u] + deg[u] - colored[u] < mins[u]:
                            ok = False
                            break
                    if ok:
                        placed = c
                        break
                    for i in range(row_lo, row_hi):
                        u = nbrs[i]
                        idx = u * k1 + c
                        cnt[idx] -= 1
                        if cnt[idx] == 0:
                            distinct[u] -= 1
                        colored[u] -= 1
                    color[v] = 0
                c += 1
            if placed:
                stack_color[depth] = placed
                stack_maxused[depth] = maxused
                if placed > maxused:
                    maxused = placed
                if depth == n - 1:
                    if mode == MODE_FIRST:
                        solutions.append(tuple(color[i] for i in range(n)))
                        return status, solutions, nodes
                    if maxused == k:
                        solutions.append(tuple(color[i] for i in range(n)))
                        if cap and len(solutions) >= cap:
                            return status, solutions, nodes
                    maxused = stack_maxused[depth]
                    for i in range(row_lo, row_hi):
                        u = nbrs[i]
                        idx = u * k1 + placed
                        cnt[idx] -= 1
                        if cnt[idx] == 0:
                            distinct[u] -= 1
                        colored[u] -= 1
                    color[v] = 0
                    next_c = placed + 1
                    continue
                depth += 1
                next_c = 1
            else:
                if depth == 0:
                    return status, solutions, nodes
                depth -= 1
                pv = order[depth]
                pc = stack_color[depth]
                maxused = stack_maxused[depth]
                for i in range(indptr[pv], indptr[pv + 1]):
                    u = nbrs[i]
                    idx = u * k1 + pc
                    cnt[idx] -= 1
                    if cnt[idx] == 0:
                        distinct[u] -= 1
                    colored[u] -= 1
                color[pv] = 0
                next_c = pc + 1
    finally:
        free(deg)
        free(color)
        free(cnt)
        free(distinct)
        free(colored)
        free(stack_color)
        free(stack_maxused)
