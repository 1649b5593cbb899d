"""Naive enumeration oracle for conditional colorings.

Deliberately independent of the search kernel: every candidate assignment in
{1..k}^n is generated with itertools.product and checked against the two
coloring conditions directly.  Used to cross-check the solver on desk-scale
instances; never used on the solving path.
"""

from __future__ import annotations

from itertools import product

from .graph import Graph


def assignment_ok(g: Graph, colors: tuple[int, ...], r: int) -> bool:
    """True iff `colors` is a proper coloring where every vertex v sees at
    least min(d(v), r) distinct colors in its neighborhood."""
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return False
    for v in g.vertices():
        nbrs = g.neighbors(v)
        need = min(len(nbrs), r)
        if len({colors[u] for u in nbrs}) < need:
            return False
    return True


def brute_feasible(g: Graph, k: int, r: int) -> tuple[int, ...] | None:
    """First assignment in lexicographic order using at most k colors, or None."""
    for colors in product(range(1, k + 1), repeat=g.n):
        if assignment_ok(g, colors, r):
            return colors
    return None


def brute_chi(g: Graph, r: int) -> int:
    """Smallest k admitting a conditional coloring with at most k colors."""
    for k in range(1, g.n + 1):
        if brute_feasible(g, k, r) is not None:
            return k
    raise AssertionError("rainbow coloring is always feasible at k=n")


def brute_partitions(g: Graph, k: int, r: int) -> list[tuple[tuple[int, ...], ...]]:
    """All distinct color-class partitions induced by surjective conditional
    (k,r)-colorings, canonicalized and sorted."""
    seen = set()
    for colors in product(range(1, k + 1), repeat=g.n):
        if len(set(colors)) != k:
            continue
        if not assignment_ok(g, colors, r):
            continue
        blocks: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            blocks.setdefault(c, []).append(v)
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks.values())))
        seen.add(canon)
    return sorted(seen)


def brute_unique(g: Graph, r: int) -> tuple[bool, int]:
    """(uniquely colorable at k = brute_chi, that k)."""
    k = brute_chi(g, r)
    parts = brute_partitions(g, k, r)
    return len(parts) == 1, k
