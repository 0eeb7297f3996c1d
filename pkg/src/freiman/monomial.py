"""Exponent-vector monomials and equigenerated generating sets.

Monomials are dense exponent vectors over a fixed number of variables
``x1, ..., xn`` (1-based in all text I/O).  A :class:`GenSet` is the minimal
generating set of an equigenerated monomial ideal; at a single degree no
monomial divides another, so deduplication is all minimality needs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Monomial",
    "GenSet",
    "MonomialParseError",
    "parse_monomial",
    "parse_monomial_list",
    "format_monomial",
    "m_index",
    "is_k_bounded",
    "ideal_power",
    "mu",
    "power_size",
    "minimalize",
    "all_monomials",
]

# counts are contractually 64-bit
INT64_MAX = 2**63 - 1


class MonomialParseError(ValueError):
    """Raised when monomial text does not follow the grammar."""


@dataclass(frozen=True)
class Monomial:
    """A monomial ``x1^a1 * ... * xn^an`` stored as its exponent vector."""

    exps: tuple[int, ...]
    deg: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exps)
        if not exps:
            raise ValueError("a monomial needs at least one variable (n >= 1)")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "deg", sum(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def from_indices(cls, idx: Iterable[int], n: int) -> Monomial:
        """Build from a multiset of 1-based variable indices, e.g. (1, 3, 3)."""
        exps = [0] * n
        for i in idx:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} outside 1..{n}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    def indices(self) -> tuple[int, ...]:
        """The nondecreasing index sequence, e.g. x1*x3^2 -> (1, 3, 3)."""
        out: list[int] = []
        for i, e in enumerate(self.exps, start=1):
            out.extend([i] * e)
        return tuple(out)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps, start=1) if e)

    def _check_n(self, other: Monomial) -> None:
        if self.n != other.n:
            raise ValueError(f"ambient variable counts differ: {self.n} vs {other.n}")

    def __mul__(self, other: Monomial) -> Monomial:
        self._check_n(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: Monomial) -> bool:
        self._check_n(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{format_monomial(other)} does not divide {format_monomial(self)}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def with_n(self, n: int) -> Monomial:
        """Re-embed into ``n`` variables (dropping only zero trailing exponents)."""
        if n < self.n and any(self.exps[n:]):
            raise ValueError(f"{format_monomial(self)} uses a variable beyond x{n}")
        if n < 1:
            raise ValueError("n must be positive")
        return Monomial(self.exps[:n] + (0,) * (n - self.n))

    def __str__(self) -> str:
        return format_monomial(self)


class GenSet(Sequence[Monomial]):
    """Minimal generating set of an equigenerated monomial ideal.

    Members share ``n`` and ``deg``; order is lexicographically descending on
    exponent vectors (so ``x1^d`` comes first).
    """

    __slots__ = ("_gens", "_index", "n", "deg")

    def __init__(self, gens: Iterable[Monomial], n: int | None = None):
        uniq = {g.exps: g for g in gens}
        if not uniq and n is None:
            raise ValueError("an empty GenSet needs an explicit n")
        ns = {len(e) for e in uniq}
        if n is not None:
            uniq = {g.with_n(n).exps: g.with_n(n) for g in uniq.values()}
        elif len(ns) > 1:
            raise ValueError(f"generators live in different rings: n in {sorted(ns)}")
        degs = {g.deg for g in uniq.values()}
        if len(degs) > 1:
            raise ValueError(f"generators are not equigenerated: degrees {sorted(degs)}")
        self._gens = tuple(uniq[e] for e in sorted(uniq, reverse=True))
        self._index = {g.exps: i for i, g in enumerate(self._gens)}
        self.n = n if n is not None else ns.pop()
        self.deg = degs.pop() if degs else 0

    def __len__(self) -> int:
        return len(self._gens)

    def __getitem__(self, i):  # type: ignore[override]
        return self._gens[i]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._gens)

    def __contains__(self, u: object) -> bool:
        return isinstance(u, Monomial) and u.exps in self._index

    def index(self, u: Monomial, *args) -> int:  # type: ignore[override]
        try:
            return self._index[u.exps]
        except KeyError:
            raise ValueError(f"{u} is not a generator") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GenSet):
            return NotImplemented
        return self.n == other.n and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self.n, self._gens))

    def exps_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self._index)

    def __repr__(self) -> str:
        return f"GenSet([{', '.join(map(str, self._gens))}], n={self.n})"


_TERM = re.compile(r"x(\d+)(?:\^(\d+))?")
_VECTOR = re.compile(r"\[\s*\d+\s*(?:,\s*\d+\s*)*\]")


def parse_monomial(text: str, n_hint: int | None = None) -> Monomial:
    """Parse ``x1*x3^2`` (product form) or ``[1,0,2]`` (vector form).

    Product form infers ``n`` from the largest index unless ``n_hint`` is
    given; ``"1"`` is the empty monomial and then requires ``n_hint``.
    """
    s = text.strip()
    if n_hint is not None and n_hint < 1:
        raise MonomialParseError(f"n must be positive, got {n_hint}")
    if s.startswith("["):
        if not _VECTOR.fullmatch(s):
            raise MonomialParseError(f"malformed exponent vector: {text!r}")
        exps = [int(t) for t in s[1:-1].split(",")]
        if n_hint is not None:
            if n_hint < len(exps) and any(exps[n_hint:]):
                raise MonomialParseError(f"n={n_hint} is smaller than the vector length {len(exps)}")
            exps = (exps + [0] * n_hint)[:n_hint]
        return Monomial(tuple(exps))
    if s == "1":
        if n_hint is None:
            raise MonomialParseError("the empty monomial '1' needs an explicit n")
        return Monomial.one(n_hint)
    powers: dict[int, int] = {}
    for term in s.split("*"):
        m = _TERM.fullmatch(term.strip())
        if m is None:
            raise MonomialParseError(f"bad term {term!r} in {text!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if i < 1:
            raise MonomialParseError(f"variable indices start at 1, got x{i}")
        if e < 1:
            raise MonomialParseError(f"exponents in product form must be >= 1, got x{i}^{e}")
        powers[i] = powers.get(i, 0) + e
    top = max(powers)
    if n_hint is not None and n_hint < top:
        raise MonomialParseError(f"n={n_hint} is smaller than the largest index x{top}")
    n = n_hint if n_hint is not None else top
    exps = [0] * n
    for i, e in powers.items():
        exps[i - 1] = e
    return Monomial(tuple(exps))


def parse_monomial_list(text: str, n_hint: int | None = None) -> list[Monomial]:
    """Parse a comma-separated list, padding everything to a common ``n``.

    Commas inside ``[...]`` vectors are not separators.
    """
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    parts = [p for p in (p.strip() for p in parts) if p]
    if not parts:
        raise MonomialParseError("no monomials given")
    mons = [parse_monomial(p, n_hint) for p in parts]
    n = n_hint if n_hint is not None else max(u.n for u in mons)
    return [u.with_n(n) for u in mons]


def format_monomial(u: Monomial) -> str:
    """Canonical product form: ascending index, ``^1`` omitted, ``1`` if empty."""
    terms = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(u.exps, start=1) if e]
    return "*".join(terms) if terms else "1"


def m_index(u: Monomial) -> int:
    """Largest index of a variable dividing ``u``."""
    for i in range(u.n, 0, -1):
        if u.exps[i - 1]:
            return i
    raise ValueError("m(u) is undefined for the monomial 1")


def is_k_bounded(u: Monomial, k: int) -> bool:
    return all(e <= k for e in u.exps)


def _pack(exps: Sequence[int], bits: int) -> int:
    code = 0
    for e in reversed(exps):
        code = (code << bits) | e
    return code


def _unpack(code: int, n: int, bits: int) -> tuple[int, ...]:
    mask = (1 << bits) - 1
    return tuple((code >> (bits * i)) & mask for i in range(n))


def _power_codes(G: GenSet, k: int) -> tuple[set[int], int]:
    if k < 1:
        raise ValueError("power must be >= 1")
    if len(G) == 0:
        raise ValueError("power of the zero ideal")
    # field width holds exponents up to k*deg, so packed sums never carry
    bits = max(1, (k * G.deg).bit_length())
    base = [_pack(g.exps, bits) for g in G]
    cur = set(base)
    for _ in range(k - 1):
        cur = {a + b for a in cur for b in base}
    return cur, bits


def ideal_power(G: GenSet, k: int) -> GenSet:
    """Minimal generators of ``I^k`` for ``I = (G)``.

    Exponent vectors are packed into integers so a monomial product is a
    single addition; the set of sums is already deduplicated.
    """
    codes, bits = _power_codes(G, k)
    out = GenSet((Monomial(_unpack(c, G.n, bits)) for c in codes), n=G.n)
    if __debug__:
        _assert_minimal(out)
    return out


def power_size(G: GenSet, k: int) -> int:
    """``mu(I^k)`` without building the monomials."""
    count = len(_power_codes(G, k)[0])
    assert count <= INT64_MAX
    return count


def minimalize(monos: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by another one (any degrees)."""
    uniq = sorted({u.exps: u for u in monos}.values(), key=lambda u: u.deg)
    kept: list[Monomial] = []
    for u in uniq:
        if not any(v.divides(u) for v in kept):
            kept.append(u)
    return kept


def _assert_minimal(G: GenSet) -> None:
    # one degree: a divisor of the same degree is equal, so only tiny sets
    # are worth the quadratic filter
    assert len({g.deg for g in G}) <= 1, "power lost equigeneration"
    if len(G) <= 64:
        assert len(minimalize(G)) == len(G)


def mu(G: GenSet) -> int:
    count = len(G)
    assert count <= INT64_MAX
    return count


def all_monomials(n: int, d: int) -> Iterator[Monomial]:
    """Every degree-``d`` monomial in ``n`` variables, via index multisets."""
    for idx in combinations_with_replacement(range(1, n + 1), d):
        yield Monomial.from_indices(idx, n)

