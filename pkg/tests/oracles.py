"""Independent brute-force oracles.

None of these reuse the package's closure, power, rank or chordality code;
they work from the definitions.
"""
from fractions import Fraction
from itertools import combinations, combinations_with_replacement


def exchange_closure(gens, k=None):
    """Smallest set of exponent vectors containing ``gens`` that is closed
    under u -> x_i * u / x_j (i < j), keeping only k-bounded results."""
    seen = set(tuple(g) for g in gens)
    stack = list(seen)
    while stack:
        e = stack.pop()
        for j in range(len(e)):
            if not e[j]:
                continue
            for i in range(j):
                f = list(e)
                f[j] -= 1
                f[i] += 1
                f = tuple(f)
                if k is not None and max(f) > k:
                    continue
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
    return seen


def kfold_products(gens, k):
    gens = [tuple(g) for g in gens]
    out = set()
    for combo in combinations_with_replacement(gens, k):
        acc = [0] * len(combo[0])
        for g in combo:
            acc = [a + b for a, b in zip(acc, g)]
        out.add(tuple(acc))
    return out


def fraction_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank = 0
    cols = len(a[0])
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def has_induced_long_cycle(vcount, edges):
    """Scan every vertex subset of size >= 4 for one inducing a cycle."""
    adj = {v: set() for v in range(vcount)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for size in range(4, vcount + 1):
        for sub in combinations(range(vcount), size):
            s = set(sub)
            if any(len(adj[v] & s) != 2 for v in sub):
                continue
            # 2-regular: a cycle iff connected
            start = sub[0]
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v] & s:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == s:
                return True
    return False


def sort_by_definition(u, v):
    """Sorting of a pair of exponent vectors by merging index lists."""
    idx = []
    for e in (u, v):
        for i, a in enumerate(e):
            idx += [i] * a
    idx.sort()
    n = len(u)
    a = [0] * n
    b = [0] * n
    for pos, i in enumerate(idx):
        (a if pos % 2 == 0 else b)[i] += 1
    return tuple(a), tuple(b)
