"""Symbolic well-partial-order terms with exact length computation.

A term denotes a WPO built from ordinals and finite posets by disjoint
union, ordinal (lexicographic) sum, and cartesian product.  Lengths follow
the de Jongh-Parikh rules: disjoint union takes the natural sum, cartesian
product the natural product, ordinal sum the (ordinary) ordinal sum.

Canonical enumeration of a denotation, used by denote_prefix and frozen
for reproducibility: Ord leaves enumerate via enum_below, Fin leaves by
vertex label; DSum and LexSum alternate factors (continuing with the
survivor once a finite factor is exhausted); Prod walks anti-diagonals of
the index grid, first index ascending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .ordinals import (
    CnfOrdinal,
    OrdinalError,
    add,
    from_int,
    nat_add,
    nat_mul,
    parse_ordinal,
    render_ordinal,
)
from .posets import FinPoset, PosetError, antichain, chain, length_fin, make_poset


@dataclass(frozen=True)
class Ord:
    alpha: CnfOrdinal


@dataclass(frozen=True)
class Fin:
    poset: FinPoset


@dataclass(frozen=True)
class DSum:
    left: "PosetTerm"
    right: "PosetTerm"


@dataclass(frozen=True)
class LexSum:
    left: "PosetTerm"
    right: "PosetTerm"


@dataclass(frozen=True)
class Prod:
    left: "PosetTerm"
    right: "PosetTerm"


PosetTerm = Union[Ord, Fin, DSum, LexSum, Prod]


def length_term(t: PosetTerm) -> CnfOrdinal:
    if isinstance(t, Ord):
        return t.alpha
    if isinstance(t, Fin):
        return from_int(length_fin(t.poset))
    if isinstance(t, DSum):
        return nat_add(length_term(t.left), length_term(t.right))
    if isinstance(t, LexSum):
        return add(length_term(t.left), length_term(t.right))
    if isinstance(t, Prod):
        return nat_mul(length_term(t.left), length_term(t.right))
    raise OrdinalError("not a poset term: %r" % (t,))


def term_size(t: PosetTerm):
    """Number of elements of the denotation, or None when infinite."""
    if isinstance(t, Ord):
        return t.alpha.as_int() if t.alpha.is_finite else None
    if isinstance(t, Fin):
        return t.poset.n
    a, b = term_size(t.left), term_size(t.right)
    if isinstance(t, Prod):
        if a == 0 or b == 0:
            return 0
        return a * b if a is not None and b is not None else None
    if a == 0:
        return b
    if b == 0:
        return a
    return a + b if a is not None and b is not None else None


# -- canonical enumerations ----------------------------------------------------------


class _Denotation:
    """size (None = infinite), at(i) -> element, strict lt on elements."""

    def __init__(self, size, at, lt):
        self.size, self.at, self.lt = size, at, lt


def _denote(t: PosetTerm) -> _Denotation:
    if isinstance(t, Ord):
        from .constructions import enum_below

        if t.alpha.is_zero:
            return _Denotation(0, lambda i: None, lambda x, y: False)
        e = enum_below(t.alpha)
        return _Denotation(e.size, e.at, lambda x, y: x < y)
    if isinstance(t, Fin):
        p = t.poset
        return _Denotation(p.n, lambda i: i, lambda x, y: (x, y) in p.le)
    a, b = _denote(t.left), _denote(t.right)
    if isinstance(t, Prod):
        return _product(a, b)
    return _interleave(a, b, lexicographic=isinstance(t, LexSum))


def _interleave(a: _Denotation, b: _Denotation, lexicographic: bool) -> _Denotation:
    sa = a.size if a.size is not None else None
    sb = b.size if b.size is not None else None
    both = None if sa is None or sb is None else sa + sb
    # strict alternation left, right, left, ... until one factor runs dry
    m = min(x for x in (sa, sb) if x is not None) if (sa is not None or sb is not None) else None

    def at(i: int):
        if both is not None and i >= both:
            raise OrdinalError("enumeration index %d out of range" % i)
        if m is None or i < 2 * m:
            side, k = i % 2, i // 2
        elif sa == m and (sb is None or sb > m):
            side, k = 1, i - m
        else:
            side, k = 0, i - m
        return (side, (a if side == 0 else b).at(k))

    def lt(x, y):
        if x[0] == y[0]:
            return (a if x[0] == 0 else b).lt(x[1], y[1])
        return lexicographic and x[0] == 0

    return _Denotation(both, at, lt)


def _product(a: _Denotation, b: _Denotation) -> _Denotation:
    if a.size == 0 or b.size == 0:
        return _Denotation(0, lambda i: None, lambda x, y: False)
    total = None if a.size is None or b.size is None else a.size * b.size
    cells: list = []  # growing anti-diagonal prefix of the index grid
    state = {"d": 0}

    def at(k: int):
        if total is not None and k >= total:
            raise OrdinalError("enumeration index %d out of range" % k)
        while len(cells) <= k:
            d = state["d"]
            for i in range(d + 1):
                j = d - i
                if (a.size is None or i < a.size) and (b.size is None or j < b.size):
                    cells.append((a.at(i), b.at(j)))
            state["d"] = d + 1
        return cells[k]

    def lt(x, y):
        xa, xb = x
        ya, yb = y
        below_a = a.lt(xa, ya) or xa == ya
        below_b = b.lt(xb, yb) or xb == yb
        return below_a and below_b and x != y

    return _Denotation(total, at, lt)


def denote_prefix(t: PosetTerm, budget: int) -> FinPoset:
    """The finite poset induced on the first `budget` vertices of the
    canonical enumeration of t's denotation."""
    d = _denote(t)
    n = budget if d.size is None else min(budget, d.size)
    vs = [d.at(i) for i in range(n)]
    return make_poset(n, [(i, j) for i in range(n) for j in range(n) if d.lt(vs[i], vs[j])])


# -- term grammar --------------------------------------------------------------------


_INLINE_FIN = re.compile(r"(chain|antichain)([0-9]+)$")


def parse_term(text: str) -> PosetTerm:
    term, pos = _parse(text, 0)
    pos = _skip(text, pos)
    if pos != len(text):
        raise OrdinalError("trailing input at position %d: %r" % (pos, text[pos:]))
    return term


def _skip(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _balanced(text: str, pos: int) -> int:
    """Index of the ')' matching the '(' at pos - 1."""
    depth = 1
    for i in range(pos, len(text)):
        depth += {"(": 1, ")": -1}.get(text[i], 0)
        if depth == 0:
            return i
    raise OrdinalError("unbalanced parentheses at position %d" % (pos - 1))


def _parse(text: str, pos: int):
    pos = _skip(text, pos)
    head = re.match(r"(ord|fin|dsum|lexsum|prod)\(", text[pos:])
    if not head:
        raise OrdinalError("expected a term at position %d: %r" % (pos, text[pos:pos + 20]))
    kind = head.group(1)
    open_ = pos + head.end()
    close = _balanced(text, open_)
    if kind == "ord":
        return Ord(parse_ordinal(text[open_:close].strip())), close + 1
    if kind == "fin":
        return Fin(_parse_fin(text[open_:close].strip())), close + 1
    left, after = _parse(text, open_)
    after = _skip(text, after)
    if after >= len(text) or text[after] != ",":
        raise OrdinalError("expected ',' at position %d in %s(...)" % (after, kind))
    right, after = _parse(text, after + 1)
    after = _skip(text, after)
    if after != close:
        raise OrdinalError("trailing input at position %d in %s(...)" % (after, kind))
    node = {"dsum": DSum, "lexsum": LexSum, "prod": Prod}[kind]
    return node(left, right), close + 1


def _parse_fin(body: str) -> FinPoset:
    if body.startswith("@"):
        from .io import load_poset

        with open(body[1:], "r") as fh:
            return load_poset(fh)
    m = _INLINE_FIN.match(body)
    if not m:
        raise OrdinalError(
            "fin(...) takes chainN, antichainN, or @file, got %r" % body
        )
    make = chain if m.group(1) == "chain" else antichain
    return make(int(m.group(2)))


def render_term(t: PosetTerm) -> str:
    if isinstance(t, Ord):
        return "ord(%s)" % render_ordinal(t.alpha)
    if isinstance(t, Fin):
        p = t.poset
        if p == chain(p.n):
            return "fin(chain%d)" % p.n
        if not p.le:
            return "fin(antichain%d)" % p.n
        raise PosetError("no inline rendering for %r; export it to a file" % p)
    name = {DSum: "dsum", LexSum: "lexsum", Prod: "prod"}[type(t)]
    return "%s(%s, %s)" % (name, render_term(t.left), render_term(t.right))
