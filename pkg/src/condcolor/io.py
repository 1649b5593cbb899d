"""Text formats: DIMACS-col flavored graph files and witness coloring files.

Graph format: one `p edge <n> <m>` line, optional `l <u> <tag>` label lines,
then m `e <u> <v>` lines with 1-based endpoints.  The writer emits labels by
ascending vertex and edges with u < v in ascending lexicographic order, so
write -> read -> write is byte-identical.

Coloring format: one `v<id> <color>` line per vertex, ascending 0-based id.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .coloring import ColoringMap
from .graph import Graph, GraphError

PathLike = Union[str, Path]


def dumps_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    for v in sorted(g.labels):
        lines.append(f"l {v + 1} {g.labels[v]}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(dumps_graph(g))


def loads_graph(text: str, allow_disconnected: bool = False) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate p line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: expected 'p edge <n> <m>', got {line!r}")
            n, m = int(parts[2]), int(parts[3])
            if n < 1:
                raise GraphError(f"line {lineno}: vertex count must be >= 1")
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: 'e' line before 'p' line")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"line {lineno}: duplicate edge ({u + 1},{v + 1})")
            seen.add(key)
            edges.append(key)
        elif parts[0] == "l":
            if n is None:
                raise GraphError(f"line {lineno}: 'l' line before 'p' line")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'l <u> <tag>', got {line!r}")
            u = int(parts[1]) - 1
            if not 0 <= u < n:
                raise GraphError(f"line {lineno}: label vertex out of range")
            labels[u] = parts[2]
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphError("no 'p edge' line found")
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, file has {len(edges)}")
    return Graph(n, edges, labels=labels, allow_disconnected=allow_disconnected)


def read_graph(path: PathLike, allow_disconnected: bool = False) -> Graph:
    return loads_graph(Path(path).read_text(), allow_disconnected=allow_disconnected)


def dumps_coloring(cmap: ColoringMap) -> str:
    return "".join(f"v{v} {c}\n" for v, c in enumerate(cmap.colors))


def write_coloring(cmap: ColoringMap, path: PathLike) -> None:
    Path(path).write_text(dumps_coloring(cmap))


def loads_coloring(text: str) -> ColoringMap:
    entries: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if len(parts) != 2 or not parts[0].startswith("v"):
            raise GraphError(f"line {lineno}: expected 'v<id> <color>', got {line!r}")
        try:
            vid = int(parts[0][1:])
            color = int(parts[1])
        except ValueError as e:
            raise GraphError(f"line {lineno}: bad integer in {line!r}") from e
        if vid in entries:
            raise GraphError(f"line {lineno}: duplicate vertex v{vid}")
        entries[vid] = color
    if not entries:
        raise GraphError("empty coloring file")
    if sorted(entries) != list(range(len(entries))):
        raise GraphError("coloring must cover a dense vertex range 0..n-1")
    colors = tuple(entries[v] for v in range(len(entries)))
    if min(colors) < 1:
        raise GraphError("colors must be positive integers")
    return ColoringMap(colors, max(colors))


def read_coloring(path: PathLike) -> ColoringMap:
    return loads_coloring(Path(path).read_text())
