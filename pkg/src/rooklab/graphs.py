"""A small immutable undirected graph with deterministic iteration order."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

Vertex = Hashable


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph on sortable vertices."""

    vertices: tuple
    edges: frozenset[frozenset]

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for e in self.edges:
            if len(e) != 2 or not e <= vset:
                raise ValueError(f"bad edge {set(e)!r}")

    @classmethod
    def from_pairs(cls, vertices: Iterable[Vertex], pairs: Iterable[tuple]) -> "SimpleGraph":
        vs = tuple(sorted(set(vertices)))
        edges = frozenset(frozenset(p) for p in pairs if p[0] != p[1])
        return cls(vs, edges)

    @cached_property
    def _adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adjacency[v]

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adjacency[u]

    def degree(self, v: Vertex) -> int:
        return len(self._adjacency[v])

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[tuple]:
        """All edges as sorted pairs, in sorted order."""
        return sorted(tuple(sorted(e)) for e in self.edges)
