"""The six-vertex quivers Q and Q' whose paths index point-scheme components.

A "length d path" is a sequence of d vertices (d - 1 arrows).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import product

from .geometry import LA, LB, LC, PA, PB, PC, Factor


class Vertex(IntEnum):
    LineA = 0
    PtA = 1
    PtB = 2
    PtC = 3
    LineB = 4
    LineC = 5

    @property
    def is_line(self) -> bool:
        return self in (Vertex.LineA, Vertex.LineB, Vertex.LineC)

    def factor(self) -> Factor:
        return _GEOMETRY[self]


_GEOMETRY = {
    Vertex.LineA: LA, Vertex.LineB: LB, Vertex.LineC: LC,
    Vertex.PtA: PA, Vertex.PtB: PB, Vertex.PtC: PC,
}

QuiverPath = tuple[Vertex, ...]


@dataclass(frozen=True)
class Quiver:
    name: str
    edges: frozenset[tuple[Vertex, Vertex]]

    def successors(self, v: Vertex) -> list[Vertex]:
        return sorted(w for u, w in self.edges if u == v)

    def out_degree(self, v: Vertex) -> int:
        return sum(1 for u, _ in self.edges if u == v)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.edges

    def adjacency(self) -> list[list[int]]:
        return [[int((u, v) in self.edges) for v in Vertex] for u in Vertex]

    def __le__(self, other: "Quiver") -> bool:
        return self.edges <= other.edges


_PAIRS = ((Vertex.LineA, Vertex.PtA), (Vertex.LineB, Vertex.PtB), (Vertex.LineC, Vertex.PtC))
_POINTS = (Vertex.PtA, Vertex.PtB, Vertex.PtC)


def build_qprime() -> Quiver:
    edges = set()
    for line, pt in _PAIRS:
        edges.add((line, pt))
        edges.add((pt, line))
    return Quiver("Qprime", frozenset(edges))


def build_q() -> Quiver:
    edges = set(build_qprime().edges)
    for u, v in product(_POINTS, _POINTS):
        if u != v:
            edges.add((u, v))
    return Quiver("Q", frozenset(edges))


def get_quiver(name: str) -> Quiver:
    if name == "Q":
        return build_q()
    if name in ("Qprime", "Q'"):
        return build_qprime()
    raise ValueError(f"unknown quiver {name!r}")


def enumerate_paths(G: Quiver, d: int) -> list[QuiverPath]:
    """All length-d paths in lexicographic vertex order."""
    if d < 1:
        raise ValueError("path length must be at least 1")
    succ = {v: G.successors(v) for v in Vertex}
    paths: list[QuiverPath] = []

    def extend(prefix: list[Vertex]) -> None:
        if len(prefix) == d:
            paths.append(tuple(prefix))
            return
        for w in succ[prefix[-1]]:
            prefix.append(w)
            extend(prefix)
            prefix.pop()

    for v in Vertex:
        extend([v])
    return paths


def count_paths(G: Quiver, d: int) -> int:
    """Sum of the entries of A^(d-1), A the adjacency matrix."""
    if d < 1:
        raise ValueError("path length must be at least 1")
    A = G.adjacency()
    n = len(A)
    vec = [1] * n
    for _ in range(d - 1):
        vec = [sum(vec[i] * A[i][j] for i in range(n)) for j in range(n)]
    return sum(vec)


def format_path(path: QuiverPath) -> str:
    return "->".join(v.name for v in path)
