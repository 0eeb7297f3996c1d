"""Borel and k-Borel closures.

Everything runs on nondecreasing index sequences: ``v`` lies in the
principal Borel ideal ``B(u)`` exactly when ``v``'s sorted indices are
componentwise at most ``u``'s.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .monomial import GenSet, Monomial, format_monomial, is_k_bounded, m_index

__all__ = [
    "BorelSpec",
    "borel_leq",
    "borel_closure",
    "k_borel_closure",
    "closure",
    "minimal_borel_generators",
    "degree2_chain",
    "interval_decomposition",
    "expand_intervals",
    "shift_psi",
    "is_borel_ideal",
    "is_k_borel_ideal",
]


@dataclass(frozen=True)
class BorelSpec:
    """Borel generators ``u_1..u_m`` of one degree, with optional bound ``k``.

    ``n`` defaults to the largest variable index used by any generator.
    """

    borel_gens: tuple[Monomial, ...]
    k: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        gens = tuple(self.borel_gens)
        if not gens:
            raise ValueError("at least one Borel generator is required")
        degs = {u.deg for u in gens}
        if len(degs) != 1:
            raise ValueError(f"Borel generators must share one degree, got {sorted(degs)}")
        if self.k is not None and self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        top = max((m_index(u) for u in gens if u.deg), default=1)
        n = self.n if self.n is not None else top
        if n < top:
            raise ValueError(f"n={n} is below the largest index x{top}")
        gens = tuple(u.with_n(n) for u in gens)
        if self.k is not None:
            bad = [u for u in gens if not is_k_bounded(u, self.k)]
            if bad:
                raise ValueError(f"{format_monomial(bad[0])} is not {self.k}-bounded")
        object.__setattr__(self, "borel_gens", gens)
        object.__setattr__(self, "n", n)

    @property
    def d(self) -> int:
        return self.borel_gens[0].deg

    def __str__(self) -> str:
        inner = ", ".join(map(format_monomial, self.borel_gens))
        return f"B({inner})" if self.k is None else f"B_{self.k}({inner})"


def _same_degree(v: Monomial, u: Monomial) -> None:
    if v.deg != u.deg:
        raise ValueError(f"degree mismatch: {v} has degree {v.deg}, {u} has {u.deg}")


def borel_leq(v: Monomial, u: Monomial) -> bool:
    """True iff ``v`` is a minimal generator of ``B(u)``."""
    _same_degree(v, u)
    return all(j <= i for j, i in zip(v.indices(), u.indices()))


def _dominated(bounds: Sequence[int], k: int | None) -> Iterator[tuple[int, ...]]:
    # nondecreasing sequences s with s[t] <= bounds[t]; runs longer than k pruned
    d = len(bounds)
    seq = [0] * d

    def rec(t: int, lo: int, run: int) -> Iterator[tuple[int, ...]]:
        if t == d:
            yield tuple(seq)
            return
        for j in range(lo, bounds[t] + 1):
            r = run + 1 if (t and j == seq[t - 1]) else 1
            if k is not None and r > k:
                continue
            seq[t] = j
            yield from rec(t + 1, j, r)

    yield from rec(0, 1, 0)


def closure(spec: BorelSpec) -> GenSet:
    """``G(B(U))`` or ``G(B_k(U))`` depending on ``spec.k``."""
    n = spec.n
    found: set[tuple[int, ...]] = set()
    for u in spec.borel_gens:
        found.update(_dominated(u.indices(), spec.k))
    return GenSet((Monomial.from_indices(s, n) for s in found), n=n)


def borel_closure(spec: BorelSpec) -> GenSet:
    if spec.k is not None:
        raise ValueError("borel_closure takes a plain Borel spec; use k_borel_closure")
    return closure(spec)


def k_borel_closure(spec: BorelSpec) -> GenSet:
    """Union of the principal closures ``B_k(u_i)``, each the k-bounded part of ``B(u_i)``."""
    if spec.k is None:
        raise ValueError("k_borel_closure needs spec.k")
    return closure(spec)


def minimal_borel_generators(gens: Sequence[Monomial]) -> list[Monomial]:
    """Drop every generator lying in the Borel closure of another.

    Duplicates collapse to one copy; input order of survivors is kept.
    """
    uniq: list[Monomial] = []
    for u in gens:
        if u not in uniq:
            uniq.append(u)
    keep = [
        u for a, u in enumerate(uniq)
        if not any(b != a and borel_leq(u, w) for b, w in enumerate(uniq))
    ]
    if keep and keep[0].deg == 2:
        degree2_chain(keep)
    return keep


def degree2_chain(gens: Sequence[Monomial]) -> list[tuple[int, int]]:
    """Sort degree-2 generators into ``i1 < ... < im <= jm < ... < j1``.

    Returns the ``(i_k, j_k)`` pairs; raises if no relabelling fits.
    """
    pairs = []
    for u in gens:
        if u.deg != 2:
            raise ValueError(f"{u} is not of degree 2")
        pairs.append(u.indices())
    pairs.sort()
    for (i1, j1), (i2, j2) in zip(pairs, pairs[1:]):
        if not (i1 < i2 and j2 < j1):
            raise ValueError(f"generators do not form a minimal chain: {pairs}")
    if pairs and pairs[-1][0] > pairs[-1][1]:
        raise ValueError("malformed pair")
    return [tuple(p) for p in pairs]


def interval_decomposition(gens: Sequence[Monomial]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Split a minimal degree-2 Borel ideal into disjoint interval products.

    Summand k is ``(x_{i_{k-1}+1}..x_{i_k}) * (x_{i_{k-1}+1}..x_{j_k})`` with ``i_0 = 0``.
    """
    out = []
    prev = 0
    for i, j in degree2_chain(gens):
        out.append(((prev + 1, i), (prev + 1, j)))
        prev = i
    return out


def expand_intervals(parts, n: int) -> GenSet:
    """Minimal generators of a sum of products of two variable intervals."""
    found = set()
    for (a_lo, a_hi), (b_lo, b_hi) in parts:
        for a in range(a_lo, a_hi + 1):
            for b in range(b_lo, b_hi + 1):
                found.add(tuple(sorted((a, b))))
    return GenSet((Monomial.from_indices(s, n) for s in found), n=n)


def shift_psi(u: Monomial, k: int) -> Monomial:
    """Remove an exact ``x1^k`` factor and shift every other index down by one."""
    if u.exps[0] != k:
        raise ValueError(f"shift needs x1-exponent exactly {k}, got {u.exps[0]} in {u}")
    if not is_k_bounded(u, k):
        raise ValueError(f"{u} is not {k}-bounded")
    if u.n < 2:
        raise ValueError("shift needs at least two variables")
    return Monomial(u.exps[1:])


def _exchanges(u: Monomial) -> Iterator[Monomial]:
    e = list(u.exps)
    for j in range(1, u.n):
        if not e[j]:
            continue
        for i in range(j):
            f = e.copy()
            f[j] -= 1
            f[i] += 1
            yield Monomial(tuple(f))


def is_borel_ideal(G: GenSet) -> bool:
    """Exchange property ``x_i (u / x_j) in I`` for all ``u``, ``j in supp(u)``, ``i < j``."""
    return all(w in G for u in G for w in _exchanges(u))


def is_k_borel_ideal(G: GenSet, k: int) -> bool:
    if not all(is_k_bounded(u, k) for u in G):
        return False
    return all(w in G for u in G for w in _exchanges(u) if is_k_bounded(w, k))
