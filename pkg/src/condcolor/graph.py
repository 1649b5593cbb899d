"""Immutable simple-graph type, family generators, and graph operators.

Vertices are dense 0-based ids.  Family generators place hub/center vertices
at id 0 and tag them with a label ("s" for wheels, "v0" for gears) so that
downstream predictors can locate them without isomorphism tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class GraphError(ValueError):
    """Invalid graph construction or family parameters."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    Adjacency is kept as sorted tuples so every iteration order, and therefore
    everything computed downstream, is deterministic.
    """

    __slots__ = ("n", "_adj", "_labels", "_m")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[dict[int, str]] = None,
        allow_disconnected: bool = False,
    ):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in adj
        )
        self._m = sum(len(s) for s in self._adj) // 2
        self._labels = dict(labels) if labels else {}
        for v in self._labels:
            if not 0 <= v < n:
                raise GraphError(f"label on nonexistent vertex {v}")
        if not allow_disconnected and not self.is_connected():
            raise GraphError(
                "graph is disconnected (pass allow_disconnected=True to accept)"
            )

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def max_degree(self) -> int:
        return max(self.degrees())

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in set(self._adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending lexicographic."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    def label(self, v: int) -> Optional[str]:
        return self._labels.get(v)

    def find_label(self, tag: str) -> Optional[int]:
        for v, t in self._labels.items():
            if t == tag:
                return v
        return None

    # -- derived structure -------------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def is_tree(self) -> bool:
        return self.is_connected() and self._m == self.n - 1

    def is_path(self) -> bool:
        if not self.is_tree():
            return False
        return all(d <= 2 for d in self.degrees())

    def is_complete(self) -> bool:
        return self._m == self.n * (self.n - 1) // 2

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """BFS 2-coloring; None when an odd cycle exists.

        Assumes connectivity (side assignment starts from vertex 0).
        """
        side = [-1] * self.n
        side[0] = 0
        queue = [0]
        while queue:
            u = queue.pop(0)
            for w in self._adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
        v1 = frozenset(v for v in range(self.n) if side[v] == 0)
        v2 = frozenset(v for v in range(self.n) if side[v] == 1)
        return v1, v2

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._adj == other._adj
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# -- generators --------------------------------------------------------------


def path(n: int) -> Graph:
    """Path P_n on vertices 0..n-1."""
    if n < 1:
        raise GraphError(f"path requires n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n."""
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise GraphError(f"complete requires n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: side one is 0..m-1, side two is m..m+n-1."""
    if m < 1 or n < 1:
        raise GraphError(f"complete_bipartite requires m,n >= 1, got ({m},{n})")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def wheel(n: int) -> Graph:
    """Wheel W_n: hub (id 0, label "s") joined to every vertex of a C_{n-1}."""
    if n < 4:
        raise GraphError(f"wheel requires n >= 4, got {n}")
    rim = n - 1
    edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    edges += [(0, 1 + i) for i in range(rim)]
    return Graph(n, edges, labels={0: "s"})


def gear(n: int) -> Graph:
    """n-gear: cycle v_1..v_{2n} plus hub v_0 adjacent to the odd-indexed v_i.

    Hub has id 0 and label "v0"; rim vertex v_i has id i.
    """
    if n < 3:
        raise GraphError(f"gear requires n >= 3, got {n}")
    rim = 2 * n
    edges = [(i, i % rim + 1) for i in range(1, rim + 1)]
    edges += [(0, i) for i in range(1, rim, 2)]
    return Graph(rim + 1, edges, labels={0: "v0"})


def complete_kary_tree(k: int, h: int) -> Graph:
    """Complete k-ary tree of height h, root id 0, ids in level order."""
    if k < 2:
        raise GraphError(f"complete_kary_tree requires k >= 2, got k={k}")
    if h < 1:
        raise GraphError(f"complete_kary_tree requires h >= 1, got h={h}")
    n = (k ** (h + 1) - 1) // (k - 1)
    internal = (k ** h - 1) // (k - 1)
    edges = [(v, k * v + 1 + i) for v in range(internal) for i in range(k)]
    return Graph(n, edges, labels={0: "root"})


def line_graph(g: Graph) -> Graph:
    """Line graph L(g): one vertex per edge, adjacent iff edges share an endpoint."""
    edge_list = list(g.edges())
    if not edge_list:
        raise GraphError("line_graph requires a graph with at least one edge")
    index = {e: i for i, e in enumerate(edge_list)}
    out = []
    for v in g.vertices():
        inc = [index[(min(v, w), max(v, w))] for w in g.neighbors(v)]
        out += [(a, b) for i, a in enumerate(inc) for b in inc[i + 1 :]]
    return Graph(len(edge_list), out, allow_disconnected=not g.is_connected())


def join(g1: Graph, g2: Graph) -> Graph:
    """Join g1 + g2: disjoint union plus every edge between the two vertex sets.

    g1 keeps its ids; g2's ids are shifted by g1.n.
    """
    off = g1.n
    edges = list(g1.edges())
    edges += [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in g1.vertices() for v in g2.vertices()]
    labels = g1.labels
    labels.update({v + off: t for v, t in g2.labels.items()})
    return Graph(g1.n + g2.n, edges, labels=labels)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product g1 x g2; vertex (u1,u2) gets id u1*g2.n + u2."""
    n2 = g2.n
    edges = []
    for u1 in g1.vertices():
        for u2, w2 in g2.edges():
            edges.append((u1 * n2 + u2, u1 * n2 + w2))
    for u1, w1 in g1.edges():
        for u2 in g2.vertices():
            edges.append((u1 * n2 + u2, w1 * n2 + u2))
    return Graph(
        g1.n * n2,
        edges,
        allow_disconnected=not (g1.is_connected() and g2.is_connected()),
    )


EDGE_POLICIES = ("first-edge", "seeded-random")


def prop2_chain(k: int, edge_choice: str = "first-edge", seed: int = 0) -> Graph:
    """Chain construction: start from C_3, then k-1 times attach a new vertex
    to both endpoints of an existing edge chosen by `edge_choice`.

    Yields k+2 vertices and 2k+1 edges for any choice policy.
    """
    if k < 1:
        raise GraphError(f"prop2_chain requires k >= 1, got {k}")
    if edge_choice not in EDGE_POLICIES:
        raise GraphError(f"unknown edge_choice {edge_choice!r}; use one of {EDGE_POLICIES}")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]  # C_3 in insertion order
    n = 3
    for _ in range(k - 1):
        if edge_choice == "first-edge":
            u, v = edges[0]
        else:
            u, v = edges[rng.randrange(len(edges))]
        edges.append((u, n))
        edges.append((v, n))
        n += 1
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree: seeded Pruefer sequence, decoded."""
    if n < 2:
        raise GraphError(f"random_tree requires n >= 2, got {n}")
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, _decode_pruefer(seq, n))


def _decode_pruefer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for u in range(n):
            if degree[u] == 1:
                edges.append((u, v))
                degree[u] -= 1
                degree[v] -= 1
                break
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return edges


# -- family specs -------------------------------------------------------------

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "wheel",
    "gear",
    "complete-kary-tree",
    "line-of-kary-tree",
    "prop2-chain",
    "random-tree",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer (or policy-string) parameters."""

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}")

    def build(self) -> Graph:
        f, p = self.family, self.params
        try:
            if f == "path":
                return path(p["n"])
            if f == "cycle":
                return cycle(p["n"])
            if f == "complete":
                return complete(p["n"])
            if f == "complete-bipartite":
                return complete_bipartite(p["m"], p["n"])
            if f == "wheel":
                return wheel(p["n"])
            if f == "gear":
                return gear(p["n"])
            if f == "complete-kary-tree":
                return complete_kary_tree(p["k"], p["h"])
            if f == "line-of-kary-tree":
                return line_graph(complete_kary_tree(p["k"], p["h"]))
            if f == "prop2-chain":
                return prop2_chain(
                    p["k"], p.get("policy", "first-edge"), p.get("seed", 0)
                )
            if f == "random-tree":
                return random_tree(p["n"], p.get("seed", 0))
        except KeyError as e:
            raise GraphError(f"family {f!r} is missing parameter {e.args[0]!r}") from e
        raise AssertionError(f)

    def key(self) -> str:
        """Canonical instance name, e.g. gear(n=3)."""
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"


def parse_params(text: str) -> dict:
    """Parse "k=2,h=3" style parameter strings; values are ints when numeric."""
    params: dict = {}
    if not text:
        return params
    for part in text.split(","):
        if "=" not in part:
            raise GraphError(f"bad parameter {part!r}; expected key=value")
        key, _, val = part.partition("=")
        key = key.strip()
        val = val.strip()
        try:
            params[key] = int(val)
        except ValueError:
            params[key] = val
    return params
