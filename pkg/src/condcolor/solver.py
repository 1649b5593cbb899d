"""Exact conditional chromatic number, feasibility search, and uniqueness.

The search itself lives in the kernel modules; this layer owns instance
packing, the lower bound, the k-scan, witness certification, and partition
canonicalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import monotonic
from typing import Optional

from . import kernel
from .coloring import ColoringMap, Partition, verify
from .graph import Graph


class SolverTimeout(Exception):
    """Wall-clock budget exhausted before the search completed.

    Distinct from infeasibility: no conclusion about the instance is implied.
    """

    def __init__(self, message: str, nodes_explored: int = 0, elapsed: float = 0.0):
        super().__init__(message)
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed


@dataclass(frozen=True)
class SolveResult:
    """chi_r value plus the certified witness and search instrumentation."""

    chi_r: int
    witness: ColoringMap
    lower_bound_used: int
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class UniquenessResult:
    """Distinct color-class partitions found at palette size k."""

    k: int
    r: int
    partitions: tuple[Partition, ...]
    unique: bool
    nodes_explored: int = 0
    elapsed: float = 0.0


def _pack(g: Graph) -> tuple[list[int], list[int]]:
    indptr = [0]
    nbrs: list[int] = []
    for v in g.vertices():
        nbrs.extend(g.neighbors(v))
        indptr.append(len(nbrs))
    return indptr, nbrs


def search_order(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by id."""
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


def greedy_clique(g: Graph) -> int:
    """Size of a greedily grown clique (a lower bound on the clique number)."""
    order = search_order(g)
    rank = {v: i for i, v in enumerate(order)}
    adj = [set(g.neighbors(v)) for v in g.vertices()]
    best = 1
    for start in order:
        clique = [start]
        for u in sorted(g.neighbors(start), key=rank.__getitem__):
            if all(w in adj[u] for w in clique):
                clique.append(u)
        best = max(best, len(clique))
    return best


def lower_bound(g: Graph, r: int) -> int:
    """max(min(r, Delta) + 1, greedy clique size); never exceeds chi_r."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return max(min(r, g.max_degree()) + 1, greedy_clique(g))


def _mins(g: Graph, r: int) -> list[int]:
    return [min(g.degree(v), r) for v in g.vertices()]


def _deadline(timeout: Optional[float]) -> float:
    return monotonic() + timeout if timeout else 0.0


def _run(g, k, r, mode, cap, deadline, backend):
    indptr, nbrs = _pack(g)
    return kernel.run_search(
        g.n, indptr, nbrs, search_order(g), _mins(g, r), k, mode, cap, deadline, backend
    )


def _certify(g: Graph, colors: tuple[int, ...], r: int) -> ColoringMap:
    cmap = ColoringMap(colors, max(colors)).renormalized()
    verdict = verify(g, cmap, r)
    if not verdict.ok:
        raise AssertionError(f"search produced an invalid witness: {verdict.detail}")
    return cmap


def feasible(
    g: Graph,
    k: int,
    r: int,
    timeout: Optional[float] = None,
    backend: Optional[str] = None,
) -> Optional[ColoringMap]:
    """A certified conditional coloring with at most k colors, or None.

    The returned map is renormalized to the k' <= k colors it actually uses.
    Deterministic for fixed inputs.  Raises SolverTimeout when the budget
    runs out before either outcome is established.
    """
    if k < 1 or r < 1:
        raise ValueError(f"k and r must be >= 1, got k={k}, r={r}")
    start = monotonic()
    status, sols, nodes = _run(g, k, r, kernel.MODE_FIRST, 0, _deadline(timeout), backend)
    if status == kernel.STATUS_TIMEOUT:
        raise SolverTimeout(
            f"feasibility search (k={k}, r={r}) timed out", nodes, monotonic() - start
        )
    if not sols:
        return None
    return _certify(g, sols[0], r)


def chi_r(
    g: Graph,
    r: int,
    timeout: Optional[float] = None,
    backend: Optional[str] = None,
) -> SolveResult:
    """Smallest k admitting a conditional coloring with at most k colors.

    Scans k upward from the lower bound (feasibility is monotone in k), so
    the first feasible layer is optimal; the witness there is certified.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    start = monotonic()
    deadline = _deadline(timeout)
    lb = lower_bound(g, r)
    total_nodes = 0
    for k in range(lb, g.n + 1):
        status, sols, nodes = _run(g, k, r, kernel.MODE_FIRST, 0, deadline, backend)
        total_nodes += nodes
        if status == kernel.STATUS_TIMEOUT:
            raise SolverTimeout(
                f"chi_{r} search timed out at k={k}", total_nodes, monotonic() - start
            )
        if sols:
            witness = _certify(g, sols[0], r)
            return SolveResult(
                chi_r=k,
                witness=witness,
                lower_bound_used=lb,
                nodes_explored=total_nodes,
                elapsed=monotonic() - start,
            )
    raise AssertionError("rainbow coloring is always feasible at k=n")


def enumerate_partitions(
    g: Graph,
    k: int,
    r: int,
    cap: Optional[int] = None,
    timeout: Optional[float] = None,
    trust_k: bool = False,
    backend: Optional[str] = None,
) -> UniquenessResult:
    """Distinct color-class partitions induced by surjective conditional
    (k,r)-colorings, canonicalized and sorted.

    Requires k = chi_r(g); verified with a solver call unless trust_k is set.
    With a cap, enumeration stops as soon as `cap` partitions are found
    (cap=2 decides uniqueness).
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if cap is not None and cap < 2:
        raise ValueError(f"cap must be >= 2, got {cap}")
    start = monotonic()
    deadline = _deadline(timeout)
    total_nodes = 0
    if not trust_k:
        remaining = deadline - monotonic() if deadline else None
        sr = chi_r(g, r, timeout=remaining, backend=backend)
        total_nodes += sr.nodes_explored
        if sr.chi_r != k:
            raise ValueError(f"k={k} is not the conditional chromatic number (chi_{r}={sr.chi_r})")
    status, sols, nodes = _run(g, k, r, kernel.MODE_ENUM, cap or 0, deadline, backend)
    total_nodes += nodes
    if status == kernel.STATUS_TIMEOUT:
        raise SolverTimeout(
            f"partition enumeration (k={k}, r={r}) timed out",
            total_nodes,
            monotonic() - start,
        )
    parts = set()
    for colors in sols:
        if len(set(colors)) != k:
            raise AssertionError("enumerated coloring is not surjective at k=chi_r")
        verdict = verify(g, ColoringMap(colors, k), r)
        if not verdict.ok:
            raise AssertionError(f"enumerated coloring is invalid: {verdict.detail}")
        parts.add(Partition.from_colors(colors))
    partitions = tuple(sorted(parts, key=lambda p: p.blocks))
    return UniquenessResult(
        k=k,
        r=r,
        partitions=partitions,
        unique=len(partitions) == 1,
        nodes_explored=total_nodes,
        elapsed=monotonic() - start,
    )


def is_uniquely_colorable(
    g: Graph,
    r: int,
    timeout: Optional[float] = None,
    backend: Optional[str] = None,
) -> UniquenessResult:
    """Compute k = chi_r, then decide whether every conditional (k,r)-coloring
    induces the same partition (early exit on the second partition)."""
    start = monotonic()
    deadline = _deadline(timeout)
    sr = chi_r(g, r, timeout=timeout, backend=backend)
    remaining = deadline - monotonic() if deadline else None
    res = enumerate_partitions(
        g, sr.chi_r, r, cap=2, timeout=remaining, trust_k=True, backend=backend
    )
    return UniquenessResult(
        k=res.k,
        r=r,
        partitions=res.partitions,
        unique=res.unique,
        nodes_explored=sr.nodes_explored + res.nodes_explored,
        elapsed=monotonic() - start,
    )
