"""Coloring maps, color-class partitions, and the conditional-coloring verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph


@dataclass(frozen=True)
class ColoringMap:
    """Vertex -> color assignment over colors {1..k}.

    `colors[v]` is the color of vertex v.  A certified map additionally passes
    `verify` for its r and uses all k colors.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"palette size must be >= 1, got k={self.k}")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def colors_used(self) -> frozenset[int]:
        return frozenset(self.colors)

    def renormalized(self) -> "ColoringMap":
        """Relabel colors in first-use order over vertex ids; k becomes the
        number of colors actually used."""
        remap: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in remap:
                remap[c] = len(remap) + 1
            out.append(remap[c])
        return ColoringMap(tuple(out), len(remap))

    def partition(self) -> "Partition":
        return Partition.from_colors(self.colors)


@dataclass(frozen=True)
class Partition:
    """Canonical set partition of 0..n-1: blocks internally ascending,
    blocks ordered by their smallest element."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_colors(cls, colors) -> "Partition":
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        blocks = sorted((tuple(sorted(b)) for b in by_color.values()), key=lambda b: b[0])
        return cls(tuple(blocks))

    @property
    def size(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return " | ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class Verdict:
    """Outcome of verifying a candidate conditional coloring."""

    ok: bool
    kind: Optional[str] = None  # "C1" | "C2" | "not-surjective"
    vertex: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify(g: Graph, cmap: ColoringMap, r: int) -> Verdict:
    """Check that `cmap` is a conditional (k,r)-coloring of g.

    C1: endpoints of every edge differ.  C2: every vertex v sees at least
    min(d(v), r) distinct colors among its neighbors.  The map must also use
    all k colors.  Violations are reported at the smallest vertex id, C1
    before C2 at the same vertex.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if cmap.n != g.n:
        raise ValueError(f"coloring covers {cmap.n} vertices, graph has {g.n}")
    colors = cmap.colors
    for v in g.vertices():
        nbrs = g.neighbors(v)
        for u in nbrs:
            if colors[u] == colors[v]:
                lo, hi = min(u, v), max(u, v)
                return Verdict(
                    False, "C1", v,
                    f"edge (v{lo},v{hi}) has both endpoints colored {colors[v]}",
                )
        seen = {colors[u] for u in nbrs}
        need = min(len(nbrs), r)
        if len(seen) < need:
            return Verdict(
                False, "C2", v,
                f"vertex v{v} sees {len(seen)} neighbor colors "
                f"{sorted(seen)}, needs min(d={len(nbrs)}, r={r}) = {need}",
            )
    missing = set(range(1, cmap.k + 1)) - set(colors)
    if missing:
        return Verdict(
            False, "not-surjective", None,
            f"colors {sorted(missing)} of 1..{cmap.k} are unused",
        )
    return Verdict(True)
