"""The sorting operator on pairs of monomials and the sorted graph."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .monomial import GenSet, Monomial

__all__ = ["sort_pair", "is_sorted_pair", "is_sortable", "SortedGraph", "sorted_graph"]


def sort_pair(u: Monomial, v: Monomial) -> tuple[Monomial, Monomial]:
    """Merge the index sequences of ``u`` and ``v`` and deal them out alternately."""
    if u.deg != v.deg:
        raise ValueError(f"cannot sort {u} (degree {u.deg}) with {v} (degree {v.deg})")
    if u.n != v.n:
        raise ValueError("monomials live in different rings")
    merged = sorted(u.indices() + v.indices())
    return Monomial.from_indices(merged[0::2], u.n), Monomial.from_indices(merged[1::2], u.n)


def is_sorted_pair(u: Monomial, v: Monomial) -> bool:
    a, b = sort_pair(u, v)
    return (a, b) == (u, v) or (a, b) == (v, u)


def is_sortable(G: GenSet) -> tuple[bool, tuple[Monomial, Monomial] | None]:
    """Whether sorting maps ``G x G`` into itself; returns a failing pair if not."""
    for u, v in combinations(G, 2):
        a, b = sort_pair(u, v)
        if a not in G or b not in G:
            return False, (u, v)
    return True, None


@dataclass(frozen=True)
class SortedGraph:
    vertices: GenSet
    edges: frozenset[tuple[int, int]]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(x) for x in adj]

    def to_ugraph(self):
        from .chordal import UGraph

        return UGraph(len(self.vertices), self.adjacency(), [str(u) for u in self.vertices])


def sorted_graph(G: GenSet) -> SortedGraph:
    """Graph on ``G`` whose edges are the sorted pairs of distinct generators.

    Vertex ``i`` is ``G[i]``; edges are stored as ``(i, j)`` with ``i < j``.
    """
    edges = frozenset(
        (i, j)
        for (i, u), (j, v) in combinations(enumerate(G), 2)
        if is_sorted_pair(u, v)
    )
    return SortedGraph(G, edges)
