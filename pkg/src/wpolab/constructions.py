"""Explicit countable witness posets with two-order realizers.

Each construction returns a LazyPoset: an enumerated vertex universe with a
decidable strict order, optionally a realizer (two strict linear
comparators whose intersection is the order, with declared symbolic
types), and a length certificate recorded as an arithmetic derivation.
Certificates are claims about the infinite object; prefix_audit verifies
the finite structure (order axioms, realizer linearity, exact
intersection, and the mixing invariants) on enumerated prefixes.

Everything is built at the countable scale: uncountable cardinals exist
only symbolically in the theta calculus, since only countable structures
admit prefix audits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .ordinals import (
    OMEGA,
    ZERO,
    CnfOrdinal,
    OrdinalError,
    add,
    euclid_div,
    from_int,
    fund_seq,
    left_subtract,
    mul,
    nat_add,
    nat_mul,
    omega_pow,
)
from .posets import PosetError


def _ord(x) -> CnfOrdinal:
    return x if isinstance(x, CnfOrdinal) else from_int(x)


# -- canonical enumerations of countable ordinals --------------------------------


class Enumeration:
    """A fixed bijection between the naturals and {beta < alpha}.

    The coding is frozen for reproducibility: identity below omega;
    otherwise alpha is cut into unit blocks (one block per unit power
    omega^e of its normal form, the finite part as one block), blocks are
    visited anti-diagonally (within diagonal d, block index descending),
    and each omega^e block recurses through its fundamental sequence.
    """

    def __init__(self, alpha: CnfOrdinal):
        alpha = _ord(alpha)
        if alpha.is_zero:
            raise OrdinalError("cannot enumerate below 0")
        self.alpha = alpha
        self._prefix: list[CnfOrdinal] = []  # cache of at(0..k)
        if alpha.is_finite:
            self.size: Optional[int] = alpha.as_int()
            self._kind = "range"
        elif alpha == OMEGA:
            self.size = None
            self._kind = "range"
        elif len(alpha.terms) == 1 and alpha.terms[0][1] == 1:
            self.size = None
            self._kind = "power"  # omega^e, e >= 2 or a limit exponent
            self._block_count: Optional[int] = None
        else:
            self.size = None
            self._kind = "blocks"
            blocks = []
            offset = ZERO
            for e, c in alpha.terms:
                if e.is_zero:
                    blocks.append((offset, Enumeration(from_int(c))))
                    offset = add(offset, from_int(c))
                else:
                    for _ in range(c):
                        blocks.append((offset, Enumeration(omega_pow(e))))
                        offset = add(offset, omega_pow(e))
            self._blocks = blocks
            self._block_count = len(blocks)

    # block b of a pure power omega^e: the b-th step of its fundamental
    # sequence, enumerated recursively
    @lru_cache(maxsize=None)
    def _power_block(self, b: int):
        e = self.alpha.leading_exp
        if e.is_successor:
            step = omega_pow(e.pred())
            return mul(step, from_int(b)), Enumeration(step)
        lo = fund_seq(self.alpha, b)
        hi = fund_seq(self.alpha, b + 1)
        return lo, Enumeration(left_subtract(lo, hi))

    def _block(self, b: int):
        if self._kind == "power":
            return self._power_block(b)
        return self._blocks[b]

    def _diagonal(self, d: int):
        top = d if self._block_count is None else min(d, self._block_count - 1)
        for b in range(top, -1, -1):
            j = d - b
            offset, sub = self._block(b)
            if sub.size is None or j < sub.size:
                yield b, j

    def at(self, i: int) -> CnfOrdinal:
        if i < 0 or (self.size is not None and i >= self.size):
            raise OrdinalError("enumeration index %d out of range" % i)
        if self._kind == "range":
            return from_int(i)
        while len(self._prefix) <= i:
            d = getattr(self, "_next_d", 0)
            for b, j in self._diagonal(d):
                offset, sub = self._block(b)
                self._prefix.append(add(offset, sub.at(j)))
            self._next_d = d + 1
        return self._prefix[i]

    def index(self, beta: CnfOrdinal) -> int:
        """Inverse of at (beta must lie below alpha)."""
        if not beta < self.alpha:
            raise OrdinalError("%s is not below %s" % (beta, self.alpha))
        if self._kind == "range":
            return beta.as_int()
        b = 0
        while True:
            offset, sub = self._block(b)
            nxt = None
            if self._block_count is None or b + 1 < self._block_count:
                nxt = self._block(b + 1)[0]
            if nxt is None or beta < nxt:
                break
            b += 1
        j = sub.index(left_subtract(offset, beta))
        pos = 0
        for d in range(b + j):
            pos += sum(1 for _ in self._diagonal(d))
        for bb, jj in self._diagonal(b + j):
            if (bb, jj) == (b, j):
                return pos
            pos += 1
        raise OrdinalError("enumeration inconsistency at %s" % beta)  # unreachable

    def __call__(self, i: int) -> CnfOrdinal:
        return self.at(i)


def enum_below(alpha) -> Enumeration:
    return Enumeration(alpha)


# -- lazy posets with realizers ----------------------------------------------------


@dataclass
class LazyPoset:
    """An enumerated poset with a decidable order and an optional realizer.

    `lt` is the strict partial order; `left`/`right`, when present, are
    strict linear comparators with le = left intersect right on every
    prefix.  `certificate` is a recorded length derivation (a claim about
    the infinite object), `note` its justification chain.
    """

    vertex: Callable[[int], object]
    lt: Callable[[object, object], bool]
    left: Optional[Callable[[object, object], bool]] = None
    right: Optional[Callable[[object, object], bool]] = None
    type_left: Optional[CnfOrdinal] = None
    type_right: Optional[CnfOrdinal] = None
    certificate: Optional[CnfOrdinal] = None
    note: str = ""
    # mixing-specific hooks: vertex -> (a_index, b_index) and
    # vertex -> ((k1, a), (k2, b)) for bi-functionality audits
    cell: Optional[Callable[[object], tuple]] = None
    bikeys: Optional[Callable[[object], tuple]] = None
    # the vertex at a given rank of the right (resp. left) linear order,
    # when that rank is computable; used by extend_realizer
    nth_right: Optional[Callable[[int], object]] = None
    nth_left: Optional[Callable[[int], object]] = None

    def prefix(self, n: int) -> list:
        return [self.vertex(i) for i in range(n)]


def sierpinskisation(alpha) -> LazyPoset:
    """The poset on the naturals ordered by (numeric order) intersect
    (pullback of the alpha order along the canonical enumeration)."""
    alpha = _ord(alpha)
    if alpha.is_finite:
        raise OrdinalError("sierpinskisation needs an infinite countable ordinal")
    enum = enum_below(alpha)
    return LazyPoset(
        vertex=lambda i: i,
        lt=lambda x, y: x < y and enum.at(x) < enum.at(y),
        left=lambda x, y: x < y,
        right=lambda x, y: enum.at(x) < enum.at(y),
        type_left=OMEGA,
        type_right=alpha,
        certificate=alpha,
        note="length of a sierpinskisation of %s is %s" % (alpha, alpha),
        nth_left=lambda i: i,
        nth_right=lambda i: i if alpha == OMEGA else None,
    )


# -- the mixing bi-functional relation ----------------------------------------------


def _pair(x: int, y: int) -> int:
    return (x + y) * (x + y + 1) // 2 + y


def _unpair(n: int) -> tuple[int, int]:
    w = int(((8 * n + 1) ** 0.5 - 1) // 2)
    while (w + 1) * (w + 2) // 2 <= n:
        w += 1
    while w * (w + 1) // 2 > n:
        w -= 1
    y = n - w * (w + 1) // 2
    return w - y, y


def mixing_poset(a, b) -> LazyPoset:
    """Intersection of two lexicographic orders of types omega*alpha and
    omega*beta over a mixing bi-functional relation.

    The naturals are partitioned by a fixed triple coding n = <u, v, w>:
    K_a collects first-component matches, K^b second-component matches
    (indices folded modulo the size of a finite index ordinal), so every
    cell K_a intersect K^b is infinite (w is free).  Vertex n stands for
    the relation element ((k1, a), (k2, b)) with k1 the rank of n inside
    K_a and k2 its rank inside K^b; bi-functionality is then structural.
    """
    alpha, beta = _as_ordinal(a), _as_ordinal(b)
    if alpha.is_zero or beta.is_zero:
        raise OrdinalError("mixing_poset needs nonzero index ordinals")
    ea, eb = enum_below(alpha), enum_below(beta)

    @lru_cache(maxsize=None)
    def decode(n: int):
        uv, w = _unpair(n)
        u, v = _unpair(uv)
        ai = u % ea.size if ea.size is not None else u
        bi = v % eb.size if eb.size is not None else v
        return ai, bi, w

    @lru_cache(maxsize=None)
    def ranks(n: int):
        ai, bi, _ = decode(n)
        k1 = sum(1 for m in range(n) if decode(m)[0] == ai)
        k2 = sum(1 for m in range(n) if decode(m)[1] == bi)
        return k1, k2

    def left_key(n: int):
        ai, _, _ = decode(n)
        return ea.at(ai), ranks(n)[0]

    def right_key(n: int):
        _, bi, _ = decode(n)
        return eb.at(bi), ranks(n)[1]

    def left(x, y):
        return left_key(x) < left_key(y)

    def right(x, y):
        return right_key(x) < right_key(y)

    return LazyPoset(
        vertex=lambda i: i,
        lt=lambda x, y: left(x, y) and right(x, y),
        left=left,
        right=right,
        type_left=mul(OMEGA, alpha),
        type_right=mul(OMEGA, beta),
        certificate=mul(OMEGA, nat_mul(alpha, beta)),
        note="mixing relation: length at least w*(%s (x) %s); certificate is "
        "a lower bound" % (alpha, beta),
        cell=lambda n: decode(n)[:2],
        bikeys=lambda n: (
            (ranks(n)[0], ea.at(decode(n)[0])),
            (ranks(n)[1], eb.at(decode(n)[1])),
        ),
    )


def _as_ordinal(t) -> CnfOrdinal:
    if isinstance(t, CnfOrdinal):
        return t
    if isinstance(t, int):
        return from_int(t)
    from .terms import Ord

    if isinstance(t, Ord):
        return t.alpha
    raise OrdinalError("expected an ordinal or an ord() term, got %r" % (t,))


# -- block decompositions -------------------------------------------------------------


def _aligned_block(alpha: CnfOrdinal) -> LazyPoset:
    """A chain of type alpha with both realizer orders equal."""
    enum = enum_below(alpha)
    key = enum.at if not alpha.is_finite else (lambda i: i)
    return LazyPoset(
        vertex=lambda i: i,
        lt=lambda x, y: key(x) < key(y),
        left=lambda x, y: key(x) < key(y),
        right=lambda x, y: key(x) < key(y),
        type_left=alpha,
        type_right=alpha,
        certificate=alpha,
        note="aligned chain of type %s" % alpha,
    )


def _block_size(alpha: CnfOrdinal) -> Optional[int]:
    return alpha.as_int() if alpha.is_finite else None


def decompinver_witness(blocks) -> LazyPoset:
    """Blockwise realizer with the right-hand block order reversed.

    Left realizer concatenates the blocks ascending (type a1+...+an); the
    right realizer concatenates them descending (type bn+...+b1); the
    intersection is the disjoint sum of the block intersections, with
    certificate the natural sum of the block certificates.
    """
    blocks = [(_ord(x), _ord(y)) for (x, y) in blocks]
    if not blocks:
        raise OrdinalError("decompinver needs at least one block")
    parts: list[LazyPoset] = []
    for alpha, beta in blocks:
        if alpha.is_finite != beta.is_finite:
            raise OrdinalError("block (%s, %s) is not equipotent" % (alpha, beta))
        qa, ra = euclid_div(alpha, OMEGA)
        qb, rb = euclid_div(beta, OMEGA)
        # multiples of omega mix (certifying w*(qa (x) qb), even on the
        # diagonal); anything else must be an aligned equal pair
        if ra.is_zero and rb.is_zero and not qa.is_zero and not qb.is_zero:
            parts.append(mixing_poset(qa, qb))
        elif alpha == beta:
            parts.append(_aligned_block(alpha))
        else:
            raise PosetError(
                "unsupported block kind (%s, %s): aligned or omega-multiple only"
                % (alpha, beta)
            )
    sizes = [_block_size(a) for a, _ in blocks]

    def vertex(i: int):
        # round-robin across blocks, skipping exhausted finite ones
        d = 0
        while True:
            for k in range(len(parts)):
                if sizes[k] is None or d < sizes[k]:
                    if i == 0:
                        return (k, parts[k].vertex(d))
                    i -= 1
            d += 1

    def lt(x, y):
        return x[0] == y[0] and parts[x[0]].lt(x[1], y[1])

    def left(x, y):
        return x[0] < y[0] or (x[0] == y[0] and parts[x[0]].left(x[1], y[1]))

    def right(x, y):
        return x[0] > y[0] or (x[0] == y[0] and parts[x[0]].right(x[1], y[1]))

    tl = ZERO
    for p in parts:
        tl = add(tl, p.type_left)
    tr = ZERO
    for p in reversed(parts):
        tr = add(tr, p.type_right)
    cert = ZERO
    for p in parts:
        cert = nat_add(cert, p.certificate)
    return LazyPoset(
        vertex=vertex,
        lt=lt,
        left=left,
        right=right,
        type_left=tl,
        type_right=tr,
        certificate=cert,
        note="disjoint sum of %d blocks; certificate is the natural sum of "
        "the block certificates" % len(parts),
    )


def minoration_witness(alpha, beta) -> LazyPoset:
    """The three-block decomposition realizing types exactly (alpha, beta)
    whose intersection certifies r(beta) (+) w*(q(alpha) (x) q(beta)) (+)
    r(alpha) from below."""
    alpha = _ord(alpha)
    beta = _ord(beta)
    if alpha.is_finite or beta.is_finite:
        raise OrdinalError("minoration_witness needs infinite countable inputs")
    qa, ra = euclid_div(alpha, OMEGA)
    qb, rb = euclid_div(beta, OMEGA)
    blocks = []
    if not rb.is_zero:
        blocks.append((rb, rb))
    blocks.append((mul(OMEGA, qa), mul(OMEGA, qb)))
    if not ra.is_zero:
        blocks.append((ra, ra))
    return decompinver_witness(blocks)


# -- realizer extension ----------------------------------------------------------------


def extend_realizer(p: LazyPoset, targets) -> LazyPoset:
    """Grow a realizer to larger types while preserving the order on the
    original vertices (well-order padding case only)."""
    ta, tb = targets
    ta, tb = _ord(ta), _ord(tb)
    a, b = p.type_left, p.type_right
    if p.left is None or p.right is None:
        raise PosetError("extend_realizer needs a realizer on the input")
    if ta < a or tb < b or a.is_finite != ta.is_finite or b.is_finite != tb.is_finite:
        raise PosetError("targets (%s, %s) below or non-equipotent to (%s, %s)"
                         % (ta, tb, a, b))
    if ta == a and tb == b:
        return p
    ga, gb = left_subtract(a, ta), left_subtract(b, tb)

    if ga == gb:
        return _append_chunk_both(p, ga)
    if tb == b:
        return _grow_left(p, ga)
    if ta == a:
        raise PosetError("growing the right type alone is not implemented; "
                         "swap the realizer and grow left")
    # stage: equalize with a common chunk first, then grow the remainder
    raise PosetError("unsupported extension (%s,%s) -> (%s,%s)" % (a, b, ta, tb))


def _append_chunk_both(p: LazyPoset, g: CnfOrdinal) -> LazyPoset:
    """Add a chunk of type g above everything in both linear orders."""
    if g.is_zero:
        return p
    enum = enum_below(g)
    size = _block_size(g)

    def vertex(i: int):
        # odd slots take new vertices until the finite chunk runs out
        if size is None:
            return ("old", p.vertex(i // 2)) if i % 2 == 0 else ("new", i // 2)
        if i < 2 * size:
            return ("old", p.vertex(i // 2)) if i % 2 == 0 else ("new", i // 2)
        return ("old", p.vertex(i - size))

    def key_new(x):
        return enum.at(x[1]) if size is None else x[1]

    def left(x, y):
        if x[0] == "old" and y[0] == "old":
            return p.left(x[1], y[1])
        if x[0] != y[0]:
            return x[0] == "old"
        return key_new(x) < key_new(y)

    def right(x, y):
        if x[0] == "old" and y[0] == "old":
            return p.right(x[1], y[1])
        if x[0] != y[0]:
            return x[0] == "old"
        return key_new(x) < key_new(y)

    def lt(x, y):
        return left(x, y) and right(x, y)

    return LazyPoset(
        vertex=vertex,
        lt=lt,
        left=left,
        right=right,
        type_left=add(p.type_left, g),
        type_right=add(p.type_right, g),
        certificate=p.certificate,
        note=(p.note + "; realizer padded by a common chunk of type %s" % g).strip("; "),
    )


def _grow_left(p: LazyPoset, g: CnfOrdinal) -> LazyPoset:
    """Add type-g padding above everything on the left while keeping the
    right type unchanged, by inserting the i-th new vertex immediately
    below the right-rank-i original (doubling preserves the right type
    when it is a multiple of omega)."""
    if g.is_zero:
        return p
    if g.is_finite:
        raise PosetError("left growth alternates old and new vertices forever, "
                         "so the padding type must be infinite (got %s)" % g)
    _, r = euclid_div(p.type_right, OMEGA)
    if not r.is_zero:
        raise PosetError("left growth needs a right type that is a multiple "
                         "of omega (doubled points change %s)" % p.type_right)
    if p.nth_right is None or p.nth_right(0) is None:
        raise PosetError("left growth needs the nth_right rank hook")
    enum = enum_below(g)
    rank_of = {}  # original vertex -> right rank, filled lazily

    def right_rank(v):
        i = 0
        while v not in rank_of:
            rank_of[p.nth_right(i)] = i
            i += 1
        return rank_of[v]

    def vertex(i: int):
        return ("old", p.vertex(i // 2)) if i % 2 == 0 else ("new", i // 2)

    def left(x, y):
        if x[0] == "old" and y[0] == "old":
            return p.left(x[1], y[1])
        if x[0] != y[0]:
            return x[0] == "old"
        return enum.at(x[1]) < enum.at(y[1])

    def right(x, y):
        # new_i sits immediately below the right-rank-i original
        def slot(z):
            return (right_rank(z[1]), 1) if z[0] == "old" else (z[1], 0)

        return slot(x) < slot(y)

    def lt(x, y):
        return left(x, y) and right(x, y)

    return LazyPoset(
        vertex=vertex,
        lt=lt,
        left=left,
        right=right,
        type_left=add(p.type_left, g),
        type_right=p.type_right,
        certificate=p.certificate,
        note=(p.note + "; left type padded by %s via rank-doubling" % g).strip("; "),
    )


# -- prefix audits -----------------------------------------------------------------------


@dataclass
class AuditReport:
    checks: dict  # name -> (passed, witness-or-None)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.checks.values())

    def failures(self):
        return {k: w for k, (ok, w) in self.checks.items() if not ok}


def _relation_matrix(vs, pred) -> np.ndarray:
    n = len(vs)
    m = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            if i != j:
                m[i, j] = pred(vs[i], vs[j])
    return m


def _transitivity_witness(m: np.ndarray):
    gap = (m @ m) & ~m
    np.fill_diagonal(gap, False)
    if not gap.any():
        return None
    i, j = map(int, np.argwhere(gap)[0])
    k = int(np.nonzero(m[i] & m[:, j])[0][0])
    return (i, k, j)


def prefix_audit(p: LazyPoset, n: int, window=None) -> AuditReport:
    """Check the structural invariants of p on its first n vertices."""
    vs = p.prefix(n)
    checks: dict = {}
    eye = np.eye(n, dtype=bool)
    lt = _relation_matrix(vs, p.lt)

    sym = lt & lt.T
    checks["antisymmetry"] = (not sym.any(), _first_pair(sym))
    w = _transitivity_witness(lt)
    checks["transitivity"] = (w is None, w)

    left_m = _relation_matrix(vs, p.left) if p.left is not None else None
    right_m = _relation_matrix(vs, p.right) if p.right is not None else None
    for name, m in (("left", left_m), ("right", right_m)):
        if m is None:
            continue
        incomparable = ~(m | m.T | eye)
        wit = (
            _transitivity_witness(m)
            or _first_pair(incomparable)
            or _first_pair(m & m.T)
        )
        checks["%s_linear" % name] = (wit is None, wit)
    if left_m is not None and right_m is not None:
        agree = (left_m & right_m) == lt
        checks["intersection"] = (bool(agree.all()), _first_pair(~agree))

    if p.bikeys is not None:
        firsts: dict = {}
        seconds: dict = {}
        clash = None
        for v in vs:
            kf, ks = p.bikeys(v)
            if kf in firsts or ks in seconds:
                clash = v
                break
            firsts[kf], seconds[ks] = v, v
        checks["bi_functional"] = (clash is None, clash)

    if window is not None and p.cell is not None:
        wa, wb = window
        seen = {p.cell(v) for v in vs}
        missing = [(x, y) for x in range(wa) for y in range(wb) if (x, y) not in seen]
        checks["window_sections"] = (not missing, missing or None)

    if p.cell is not None and p.bikeys is not None:
        bad = None
        for i, j in np.argwhere(lt):
            if not _projection_le(p, vs[int(i)], vs[int(j)]):
                bad = (vs[int(i)], vs[int(j)])
                break
        checks["projection_monotone"] = (bad is None, bad)
    return AuditReport(checks)


def _projection_le(p: LazyPoset, x, y) -> bool:
    """(k1,(a,b)) order of type w*(alpha x beta): product on the (a,b)
    pair, rank below."""
    (k1x, ax), (_, bx) = p.bikeys(x)
    (k1y, ay), (_, by) = p.bikeys(y)
    if (ax, bx) == (ay, by):
        return k1x < k1y
    return ax <= ay and bx <= by


def _first_pair(mask):
    if mask is None or not mask.any():
        return None
    i, j = map(int, np.argwhere(mask)[0])
    return (i, j)
