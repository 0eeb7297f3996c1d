"""Chordality with certificates, induced-cycle witnesses and DOT output.

Recognition is maximum-cardinality search followed by a check that the
reverse visit order is a perfect elimination order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "UGraph",
    "ChordalResult",
    "mcs_order",
    "is_chordal",
    "is_perfect_elimination_order",
    "find_induced_cycle",
    "is_induced_cycle",
    "lemma_chordal_graph",
    "to_dot",
]


@dataclass(frozen=True)
class UGraph:
    """Simple undirected graph on vertices ``0..vcount-1``."""

    vcount: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adjacency)
        if len(adj) != self.vcount:
            raise ValueError(f"expected {self.vcount} adjacency lists, got {len(adj)}")
        sets = tuple(frozenset(nb) for nb in adj)
        for v, nb in enumerate(adj):
            for w in nb:
                if w == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= w < self.vcount or v not in sets[w]:
                    raise ValueError(f"adjacency is not symmetric at edge {v}-{w}")
        if self.labels is not None:
            if len(self.labels) != self.vcount:
                raise ValueError("one label per vertex required")
            object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_sets", sets)

    @classmethod
    def from_edges(cls, vcount: int, edges: Iterable[tuple[int, int]], labels=None) -> UGraph:
        adj: list[set[int]] = [set() for _ in range(vcount)]
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        return cls(vcount, tuple(tuple(s) for s in adj), labels)

    def adjacent(self, a: int, b: int) -> bool:
        return b in self._sets[a]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.vcount) for b in self.adjacency[a] if a < b]

    def induced(self, keep: Sequence[int]) -> UGraph:
        """Induced subgraph, renumbered in the order of ``keep``."""
        pos = {v: i for i, v in enumerate(keep)}
        adj = [tuple(pos[w] for w in self.adjacency[v] if w in pos) for v in keep]
        labels = None if self.labels is None else tuple(self.labels[v] for v in keep)
        return UGraph(len(keep), tuple(adj), labels)


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    order: tuple[int, ...] | None = None
    violation: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def mcs_order(g: UGraph) -> list[int]:
    """Maximum-cardinality search visit order; ties go to the lowest index."""
    weight = [0] * g.vcount
    seen = [False] * g.vcount
    order = []
    for _ in range(g.vcount):
        best = -1
        for v in range(g.vcount):
            if not seen[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        seen[best] = True
        order.append(best)
        for w in g.adjacency[best]:
            if not seen[w]:
                weight[w] += 1
    return order


def _first_violation(g: UGraph, order: Sequence[int]) -> tuple[int, int, int] | None:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted((w for w in g.adjacency[v] if pos[w] > pos[v]), key=pos.__getitem__)
        for x, y in combinations(later, 2):
            if not g.adjacent(x, y):
                return v, x, y
    return None


def is_perfect_elimination_order(g: UGraph, order: Sequence[int]) -> bool:
    """Each vertex's neighbours later in ``order`` must be pairwise adjacent."""
    if sorted(order) != list(range(g.vcount)):
        return False
    return _first_violation(g, order) is None


def is_chordal(g: UGraph) -> ChordalResult:
    """Return the elimination order on success, else a triple ``(v, x, y)``
    where ``x`` and ``y`` are non-adjacent later neighbours of ``v``."""
    order = mcs_order(g)[::-1]
    bad = _first_violation(g, order)
    if bad is None:
        return ChordalResult(True, tuple(order))
    return ChordalResult(False, tuple(order), bad)


def _path_avoiding(g: UGraph, v: int, x: int, y: int) -> list[int] | None:
    # shortest x-y path with no interior vertex in N[v]
    banned = set(g.neighbors(v)) | {v}
    banned.discard(x)
    banned.discard(y)
    prev = {x: -1}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        if a == y:
            path = [y]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            return path[::-1]
        for b in g.adjacency[a]:
            if b not in prev and b not in banned:
                prev[b] = a
                queue.append(b)
    return None


def _cycle_through(g: UGraph, v: int, x: int, y: int) -> list[int] | None:
    path = _path_avoiding(g, v, x, y)
    if path is None:
        return None
    return [v] + path


def find_induced_cycle(g: UGraph, min_len: int = 4) -> list[int] | None:
    """A shortest induced cycle of length at least ``min_len``, or ``None``.

    Every chordless cycle passes through some vertex ``v`` with non-adjacent
    neighbours ``x, y`` joined by a path outside ``N[v]``; scanning all such
    triples (the failed elimination check first) is therefore complete.
    """
    if min_len < 4:
        raise ValueError("only chordless cycles (length >= 4) are searched")
    res = is_chordal(g)
    if res.chordal:
        return None
    candidates = []
    if res.violation is not None:
        candidates.append(res.violation)
    for v in range(g.vcount):
        for x, y in combinations(g.adjacency[v], 2):
            if not g.adjacent(x, y):
                candidates.append((v, x, y))
    best = None
    for v, x, y in candidates:
        cyc = _cycle_through(g, v, x, y)
        if cyc is not None and len(cyc) >= min_len and (best is None or len(cyc) < len(best)):
            best = cyc
            if len(best) == min_len:
                break
    if best is not None:
        assert is_induced_cycle(g, best)
    return best


def is_induced_cycle(g: UGraph, cyc: Sequence[int]) -> bool:
    """Consecutive vertices adjacent (cyclically), all other pairs not."""
    t = len(cyc)
    if t < 3 or len(set(cyc)) != t:
        return False
    for a in range(t):
        for b in range(a + 1, t):
            consecutive = b == a + 1 or (a == 0 and b == t - 1)
            if g.adjacent(cyc[a], cyc[b]) != consecutive:
                return False
    return True


def lemma_chordal_graph(p: int) -> UGraph:
    """Three cliques ``a_1..a_p``, ``b_1..b_p``, ``c_1..c_p`` with
    ``a_i ~ b_j`` and ``b_i ~ c_j`` exactly when ``i <= j`` and no ``a``-``c`` edges."""
    if p < 1:
        raise ValueError("p must be positive")
    a = range(0, p)
    b = range(p, 2 * p)
    c = range(2 * p, 3 * p)
    edges = []
    for part in (a, b, c):
        edges.extend(combinations(part, 2))
    for i in range(p):
        for j in range(i, p):
            edges.append((a[i], b[j]))
            edges.append((b[i], c[j]))
    labels = [f"{s}{i}" for s in "abc" for i in range(1, p + 1)]
    return UGraph.from_edges(3 * p, edges, labels)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: UGraph, name: str = "") -> str:
    """Graphviz DOT text; vertices and edges in ascending index order."""
    head = f"graph {name} {{" if name else "graph {"
    lines = [head]
    for v in range(g.vcount):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append(f"  {v} [label={_quote(label)}];")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
