"""Exact finite-poset engine.

Everything here is brute force on purpose: this module is the oracle the
symbolic layers are checked against.  Posets are stored with the strict
order relation transitively closed, so order queries are set lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, cached_property

from .ordinals import OrdinalError


class PosetError(OrdinalError):
    pass


@dataclass(frozen=True)
class FinPoset:
    """A finite strict partial order on vertices 0..n-1, stored closed."""

    n: int
    le: frozenset  # strict pairs (i, j) meaning i < j, transitively closed

    def lt(self, i: int, j: int) -> bool:
        return (i, j) in self.le

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.le

    @cached_property
    def hasse(self) -> frozenset:
        """Transitive reduction: the covering pairs."""
        return frozenset(
            (i, j)
            for (i, j) in self.le
            if not any((i, k) in self.le and (k, j) in self.le for k in range(self.n))
        )

    def restrict(self, vertices) -> "FinPoset":
        """Induced subposet, relabelled order-preservingly to 0..k-1."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return FinPoset(
            len(vs),
            frozenset((index[i], index[j]) for (i, j) in self.le if i in index and j in index),
        )

    def minimal(self):
        return [v for v in range(self.n) if not any((u, v) in self.le for u in range(self.n))]

    def __repr__(self) -> str:
        return "FinPoset(%d, %s)" % (self.n, sorted(self.le))


def make_poset(n: int, pairs) -> FinPoset:
    """Build a FinPoset from generating strict pairs; closes transitively
    and rejects cycles."""
    pairs = set(map(tuple, pairs))
    for (i, j) in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise PosetError("vertex pair (%d, %d) out of range 0..%d" % (i, j, n - 1))
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for (i, j) in list(closed):
            for (k, l) in list(closed):
                if j == k and (i, l) not in closed:
                    closed.add((i, l))
                    changed = True
    for (i, j) in closed:
        if i == j or (j, i) in closed:
            raise PosetError("cycle through vertex %d" % i)
    return FinPoset(n, frozenset(closed))


def chain(n: int) -> FinPoset:
    return make_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> FinPoset:
    return make_poset(n, [])


def intersect(p: FinPoset, q: FinPoset) -> FinPoset:
    if p.n != q.n:
        raise PosetError("intersect needs equal vertex counts (%d vs %d)" % (p.n, q.n))
    return FinPoset(p.n, p.le & q.le)


def linear_extensions(p: FinPoset):
    """Yield every vertex permutation whose positional order extends p,
    in lexicographic order."""

    def walk(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        for v in sorted(remaining):
            if not any((u, v) in p.le for u in remaining if u != v):
                prefix.append(v)
                remaining.remove(v)
                yield from walk(prefix, remaining)
                remaining.add(v)
                prefix.pop()

    yield from walk([], set(range(p.n)))


def length_fin(p: FinPoset) -> int:
    # every linear extension of a finite poset has order type n
    return p.n


def length_recursive(p: FinPoset) -> int:
    """ell(p) = sup+ over x of ell({y : y not >= x}), computed by memoized
    recursion; agrees with length_fin on every finite poset."""

    @lru_cache(maxsize=None)
    def ell(vertices: frozenset) -> int:
        best = 0
        for x in vertices:
            rest = frozenset(
                y for y in vertices if y != x and (x, y) not in p.le
            )
            best = max(best, ell(rest) + 1)
        return best

    return ell(frozenset(range(p.n)))


def bad_sequences(p: FinPoset):
    """Iterate the nodes of Bad(p): sequences with no i<j, x_i <= x_j."""
    stack = [()]
    while stack:
        seq = stack.pop()
        yield seq
        used = set(seq)
        for v in range(p.n):
            if v in used:
                continue
            if all(not p.leq(u, v) for u in seq):
                stack.append(seq + (v,))


def bad_tree_height(p: FinPoset) -> int:
    return max(len(seq) for seq in bad_sequences(p))


def combine(kind: str, p: FinPoset, q: FinPoset) -> FinPoset:
    """direct_sum / cartesian_product / lex_sum of two finite posets."""
    if kind == "direct_sum":
        pairs = set(p.le) | {(i + p.n, j + p.n) for (i, j) in q.le}
        return FinPoset(p.n + q.n, frozenset(pairs))
    if kind == "lex_sum":
        pairs = set(p.le) | {(i + p.n, j + p.n) for (i, j) in q.le}
        pairs |= {(i, j + p.n) for i in range(p.n) for j in range(q.n)}
        return FinPoset(p.n + q.n, frozenset(pairs))
    if kind == "cartesian_product":
        def code(i, j):
            return i * q.n + j

        pairs = set()
        for i, k in itertools.product(range(p.n), repeat=2):
            for j, l in itertools.product(range(q.n), repeat=2):
                if (i, j) != (k, l) and p.leq(i, k) and q.leq(j, l):
                    pairs.add((code(i, j), code(k, l)))
        return FinPoset(p.n * q.n, frozenset(pairs))
    raise PosetError("unknown combination kind %r" % kind)


def embeds(p: FinPoset, q: FinPoset) -> bool:
    """True iff an order-embedding p -> q exists (<= and incomparability
    both preserved); exhaustive backtracking."""

    def extend(mapping):
        v = len(mapping)
        if v == p.n:
            return True
        for w in range(q.n):
            if w in mapping.values():
                continue
            ok = True
            for u, x in mapping.items():
                if p.lt(u, v) != q.lt(x, w) or p.lt(v, u) != q.lt(w, x):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if extend(mapping):
                    return True
                del mapping[v]
        return False

    return extend({})


def longcut_fin(p: FinPoset, a1: int, a2: int):
    """The lexicographically least downward-closed vertex set of size a1,
    with its complement; the two restrictions have lengths a1 and a2."""
    if a1 + a2 != p.n:
        raise PosetError("cut sizes %d+%d do not partition %d vertices" % (a1, a2, p.n))
    for initial in itertools.combinations(range(p.n), a1):
        down_closed = all(
            i in initial for j in initial for i in range(p.n) if p.lt(i, j)
        )
        if down_closed:
            final = tuple(v for v in range(p.n) if v not in initial)
            return initial, final
    raise PosetError("no downward-closed cut of size %d" % a1)  # unreachable


def all_posets(n: int):
    """Every labeled strict partial order on n vertices (219 for n=4)."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(slots)):
        rel = {slots[k] for k in range(len(slots)) if mask >> k & 1}
        if any((j, i) in rel for (i, j) in rel):
            continue
        if any(
            (i, l) not in rel
            for (i, j) in rel
            for (k, l) in rel
            if j == k
        ):
            continue
        yield FinPoset(n, frozenset(rel))
