"""Pure-Python backtracking kernel for conditional (k,r)-coloring search.

Same algorithm, node accounting, and traversal order as the compiled kernel
in _kernel_c.pyx; the two must stay byte-for-byte equivalent in behavior.

Search state per vertex v (colors are 1..k, 0 = uncolored):
  cnt[v*(k+1)+c]  number of neighbors of v currently colored c
  distinct[v]     number of distinct colors among colored neighbors
  colored[v]      number of colored neighbors

A color c is admissible at v when cnt[v][c] == 0 (C1).  After placing,
every neighbor u must keep the slack inequality

    distinct[u] + (deg[u] - colored[u]) >= min(deg[u], r)

alive; once u's last neighbor is colored this is exactly condition C2.
Colors are tried ascending with first-use symmetry breaking (at most one
color beyond the current maximum), so each color-class partition is reached
through exactly one canonical assignment.
"""

from __future__ import annotations

from time import monotonic

STATUS_DONE = 0
STATUS_TIMEOUT = 1

MODE_FIRST = 0
MODE_ENUM = 1


def run_search(n, indptr, nbrs, order, mins, k, mode, cap, deadline):
    """Explore canonical k-colorings of the packed graph.

    mode FIRST: stop at the first complete assignment (any number of colors
    actually used).  mode ENUM: collect every complete assignment using all
    k colors, stopping early once `cap` (0 = unlimited) are found.

    Returns (status, solutions, nodes) with solutions a list of color tuples.
    """
    indptr = list(indptr)
    nbrs = list(nbrs)
    order = list(order)
    mins = list(mins)
    k1 = k + 1
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]

    color = [0] * n
    cnt = [0] * (n * k1)
    distinct = [0] * n
    colored = [0] * n
    stack_color = [0] * n
    stack_maxused = [0] * n

    solutions = []
    nodes = 0
    maxused = 0
    depth = 0
    next_c = 1

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
                if deadline and (nodes & 2047) == 0 and monotonic() >= deadline:
                    return STATUS_TIMEOUT, solutions, nodes
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
                    solutions.append(tuple(color))
                    return STATUS_DONE, solutions, nodes
                if maxused == k:
                    solutions.append(tuple(color))
                    if cap and len(solutions) >= cap:
                        return STATUS_DONE, solutions, nodes
                # keep scanning siblings of the last vertex
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
                return STATUS_DONE, solutions, nodes
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
