"""The length-bound operator calculus.

theta_plus is the closed-form value of the maximal-order-type operator on
equipotent tuples: writing each argument as kappa*q_i + r_i for the common
infinite cardinality kappa,

    theta_plus(a_1, .., a_n) = kappa*(q_1 (x) .. (x) q_n) + |r_1 + .. + r_n|^+

with 0 on non-equipotent tuples, k+1 on all-equal finite tuples and a+1 at
arity one.

theta_tilde is its strict-box supremum  sup{ theta_plus(x) : x_i < a_i }.
It is computed by a stratified closed form: tuples are grouped by their
common cardinality, the top stratum is analysed through the euclidean
corner decomposition of each bound, and the non-attained directions reduce
to underlined natural sum/product box suprema.  Every closed-form branch is
validated by fund_seq sampling in the test suite, and the whole function is
cross-checked against the generic bracket_tilde combinator.

bracket_plus / bracket_tilde are the generic combinators over black-box
operators; bracket_tilde treats its operand purely as a value oracle
(successor corners, plus cofinal sampling with structural limit
extrapolation on countable arguments).  An omega-indexed sample can never
be cofinal below an uncountable-cofinality limit, so those arguments are
refused unless the operand declares the two stratum facts
(`at_least_cardinality`, `stratum_bounded`) that make the lower strata
dominated; theta_plus declares both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .cardinals import MAX_LEVEL, KOrdinal, cardinality, k_add, omega_level
from .ordinals import (
    OMEGA,
    ONE,
    ZERO,
    CnfOrdinal,
    OrdinalError,
    add,
    euclid_div,
    fund_seq,
    nat_add,
    nat_mul,
    omega_pow,
    ul_nat_add,
)

K_ZERO = KOrdinal.of(0)


class UnsupportedSupremum(OrdinalError):
    """The generic combinator cannot evaluate this supremum exactly."""


def _k(a) -> KOrdinal:
    return KOrdinal.of(a)


def equipotent(args: Sequence) -> bool:
    args = [_k(a) for a in args]
    return all(cardinality(a) == cardinality(args[0]) for a in args[1:])


# -- theta_plus ----------------------------------------------------------------


def _parts(a: KOrdinal, level: int) -> tuple[CnfOrdinal, KOrdinal]:
    """Euclidean (q, r) of a by omega_level; a must have that exact level."""
    if level == 0:
        q, r = euclid_div(a.countable(), OMEGA)
        return q, KOrdinal.of(r)
    return a.coeffs[level], a.r


def theta_plus(*args) -> KOrdinal:
    args = [_k(a) for a in args]
    if not args:
        raise OrdinalError("theta_plus needs at least one argument")
    if len(args) == 1:
        return args[0].succ()
    if not equipotent(args):
        return K_ZERO
    if args[0].is_finite:
        return args[0].succ()  # all arguments are the same finite value
    level = args[0].level
    prod = ONE
    rems: list[KOrdinal] = []
    for a in args:
        q, r = _parts(a, level)
        prod = nat_mul(prod, q)
        rems.append(r)
    return k_add(KOrdinal.at_level(level, prod), _hartog_of_sum(rems))


def _hartog_of_sum(rems: Sequence[KOrdinal]) -> KOrdinal:
    """hartog(r_1 + ... + r_n) without materializing the sum."""
    if all(r.is_finite for r in rems):
        total = sum(r.countable().as_int() for r in rems)
        return KOrdinal.of(total + 1)
    top = max(r.level for r in rems if not r.is_finite)
    return omega_level(top + 1)


# -- box suprema over theta ------------------------------------------------------
#
# theta_box_sup computes sup{ v(x) : x_i < b_i } together with whether the
# supremum is attained, where v is theta_plus (variant "plus") or its
# attained-length version (variant "sup", i.e. theta_plus minus one on
# successor values).


def nat_add_box_sup(gammas: Sequence[CnfOrdinal]) -> tuple[CnfOrdinal, bool]:
    """sup{ x_1 (+) ... (+) x_m : x_i < g_i } for g_i >= 1."""
    fixed = ZERO
    limits = []
    for g in gammas:
        if g.is_zero:
            raise OrdinalError("empty box")
        if g.is_successor:
            fixed = nat_add(fixed, g.pred())
        else:
            limits.append(g)
    if not limits:
        return fixed, True
    top = max(g.last_exp for g in limits)
    base = fixed
    for g in limits:
        base = nat_add(base, g.minus_last())
    return add(base.trunc_ge(top), omega_pow(top)), False


def nat_mul_box_sup(
    fixed: CnfOrdinal, qs: Sequence[CnfOrdinal]
) -> tuple[CnfOrdinal, bool]:
    """sup{ fixed (x) Q_1 (x) ... (x) Q_m : 1 <= Q_i < q_i } for fixed >= 1."""
    if fixed.is_zero:
        raise OrdinalError("fixed factor must be positive")
    limits = []
    for q in qs:
        if q.is_zero or q == ONE:
            raise OrdinalError("empty product box")
        if q.is_successor:
            fixed = nat_mul(fixed, q.pred())
        else:
            limits.append(q)
    if not limits:
        return fixed, True
    t0 = fixed
    for lam in limits:
        t0 = nat_mul(t0, lam.minus_last())
    forced = [i for i, lam in enumerate(limits) if lam.minus_last().is_zero]
    subsets = [forced] if forced else [[i] for i in range(len(limits))]
    best = None
    for sub in subsets:
        g = fixed
        for i, lam in enumerate(limits):
            if i not in sub:
                g = nat_mul(g, lam.minus_last())
        esup, att = nat_add_box_sup([limits[i].last_exp for i in sub])
        # d = sup+{ e(g) (+) y : y strictly below the exponent box }, a
        # half-underlined natural sum: the fixed slot is attained at e(g).
        y_bound = add(esup, ONE) if att else esup
        d = ul_nat_add(add(g.leading_exp, ONE), y_bound)
        if best is None or best < d:
            best = d
    return add(t0.trunc_ge(best), omega_pow(best)), False


_FREE = object()  # remainder coordinate with a free range below omega_level


def _chi(s, level: int, variant: str) -> tuple[KOrdinal, bool]:
    """sup (and attainedness) of the remainder value over rho < s."""
    s = omega_level(level) if s is _FREE else _k(s)
    if s.is_finite:
        n = s.countable().as_int()
        return (KOrdinal.of(n), True) if variant == "plus" else (KOrdinal.of(n - 1), True)
    if s.level == 0:
        if s == KOrdinal.of(OMEGA):
            return KOrdinal.of(OMEGA), False
        return omega_level(1), True
    if s == omega_level(s.level):
        return omega_level(s.level), True
    return omega_level(s.level + 1), True


def _remainder_box_sup(ss: list, level: int, variant: str) -> tuple[KOrdinal, bool]:
    """sup{ remainder-value(rho_1 + .. + rho_n) : rho_i < s_i }."""
    concrete = [omega_level(level) if s is _FREE else _k(s) for s in ss]
    if all(s.is_finite for s in concrete):
        total = sum(s.countable().as_int() - 1 for s in concrete)
        return (
            (KOrdinal.of(total + 1), True)
            if variant == "plus"
            else (KOrdinal.of(total), True)
        )
    best, att = K_ZERO, True
    for s in ss:
        v, a = _chi(s, level, variant)
        if best < v:
            best, att = v, a
        elif best == v:
            att = att or a
    return best, att


def theta_box_sup(bounds: Sequence, variant: str = "plus") -> tuple[KOrdinal, bool]:
    if variant not in ("plus", "sup"):
        raise ValueError("variant must be 'plus' or 'sup'")
    bounds = [_k(b) for b in bounds]
    if not bounds:
        raise OrdinalError("empty bound tuple")
    if any(b.is_zero for b in bounds):
        return K_ZERO, False
    if len(bounds) == 1:
        b = bounds[0]
        if variant == "plus":
            return b, b.is_successor
        return (b.pred(), True) if b.is_successor else (b, False)

    # finite stratum: all coordinates equal to some t below every bound
    fin = [b.countable().as_int() for b in bounds if b.is_finite]
    if fin:
        m = min(fin)
        f_val, f_att = (
            (KOrdinal.of(m), True) if variant == "plus" else (KOrdinal.of(m - 1), True)
        )
    else:
        f_val, f_att = KOrdinal.of(OMEGA), False

    eligible = [j for j in range(MAX_LEVEL + 1) if all(omega_level(j) < b for b in bounds)]
    if not eligible:
        return f_val, f_att
    j = max(eligible)

    if j < MAX_LEVEL and any(not b < omega_level(j + 1) for b in bounds):
        s_val, s_att = omega_level(j + 1), False
    else:
        prod = ONE
        rbars: list[KOrdinal] = []
        limit_qs: list[CnfOrdinal] = []
        for b in bounds:
            qbar, rbar = _parts(b, j)
            if rbar.is_zero:
                limit_qs.append(qbar)
            else:
                prod = nat_mul(prod, qbar)
                rbars.append(rbar)
        w, att_w = nat_mul_box_sup(prod, limit_qs)
        if not att_w:
            s_val, s_att = KOrdinal.at_level(j, w), False
        else:
            free = len(limit_qs)
            t_val, t_att = _remainder_box_sup(
                list(rbars) + [_FREE] * free, j, variant
            )
            s_val, s_att = k_add(KOrdinal.at_level(j, w), t_val), t_att

    if f_val < s_val:
        return s_val, s_att
    if s_val < f_val:
        return f_val, f_att
    return f_val, f_att or s_att


def theta_tilde(*args) -> KOrdinal:
    return theta_box_sup([_k(a) for a in args], "plus")[0]


def theta_sharp(alpha, beta, under_first: bool = False, under_second: bool = False) -> KOrdinal:
    """sup_plus of the attained-length operator over the (half-)open box
    { (x, y) : x <(=) alpha, y <(=) beta }, underlined slots being strict."""
    b1 = _k(alpha) if under_first else _k(alpha).succ()
    b2 = _k(beta) if under_second else _k(beta).succ()
    v, att = theta_box_sup([b1, b2], "sup")
    return v.succ() if att else v


def theta_len(*args) -> KOrdinal:
    """Attained-length version of theta_plus (its predecessor on successors)."""
    v = theta_plus(*args)
    return v.pred() if v.is_successor else v


# -- generic combinators -----------------------------------------------------------


@dataclass(frozen=True)
class BoundOp:
    """A named ordinal operator with the structural facts the combinators
    are allowed to rely on.  The evaluator is otherwise a black box."""

    name: str
    fn: Callable[..., KOrdinal]
    monotone: bool = False  # monotone in every argument, unconditionally
    equipotence_gated: bool = False  # 0 off-gate, monotone on each stratum
    at_least_cardinality: bool = False  # value >= kappa on a kappa stratum
    stratum_bounded: bool = False  # value < hartog(kappa) on a kappa stratum

    def __call__(self, *args) -> KOrdinal:
        return self.fn(*args)


THETA_PLUS = BoundOp(
    "theta_plus",
    theta_plus,
    equipotence_gated=True,
    at_least_cardinality=True,
    stratum_bounded=True,
)

IDENTITY_1 = BoundOp("id", lambda a: _k(a), monotone=True)


def bracket_plus(f) -> BoundOp:
    """[f]^+ : apply f at the successor-shifted tuple, gated on equipotence."""
    fn = f if isinstance(f, BoundOp) else BoundOp("f", f)

    def g(*args) -> KOrdinal:
        args = [_k(a) for a in args]
        if len(args) > 1 and not equipotent(args):
            return K_ZERO
        return _k(fn(*[a.succ() for a in args]))

    return BoundOp("[%s]+" % fn.name, g, monotone=fn.monotone, equipotence_gated=True)


def _cnf_limit(values: list[CnfOrdinal]) -> CnfOrdinal:
    """Exact limit of a sampled increasing CNF sequence by shape analysis."""
    if all(v == values[-1] for v in values):
        return values[-1]
    if any(not a < b for a, b in zip(values, values[1:])):
        raise UnsupportedSupremum("sampled values are not increasing")
    prefix: list[tuple[CnfOrdinal, int]] = []
    tails = [list(v.terms) for v in values]
    while True:
        if any(not t for t in tails):
            raise UnsupportedSupremum("sampled shapes did not stabilize")
        heads = [t[0] for t in tails]
        exps = [e for e, _ in heads]
        coeffs = [c for _, c in heads]
        if all(e == exps[0] for e in exps):
            if all(c == coeffs[0] for c in coeffs):
                prefix.append(heads[0])
                tails = [t[1:] for t in tails]
                continue
            if all(a < b for a, b in zip(coeffs, coeffs[1:])):
                limit = omega_pow(add(exps[0], ONE))
            else:
                raise UnsupportedSupremum("coefficient pattern did not stabilize")
        elif all(a < b for a, b in zip(exps, exps[1:])):
            limit = omega_pow(_cnf_limit(exps))
        else:
            raise UnsupportedSupremum("exponent pattern did not stabilize")
        out = ZERO
        for term in prefix:
            out = add(out, CnfOrdinal((term,)))
        return add(out, limit)


_SAMPLE_INDICES = range(3, 12)


def _sampled_sup(sample: Callable[[int], KOrdinal]) -> KOrdinal:
    vals = [sample(n) for n in _SAMPLE_INDICES]
    if any(v.level != 0 for v in vals):
        raise UnsupportedSupremum("cannot extrapolate uncountable sample values")
    return KOrdinal.of(_cnf_limit([v.countable() for v in vals]))


def _corner_sup(fn: BoundOp, bounds: list[KOrdinal]) -> KOrdinal:
    """Strict-box sup of a genuinely monotone operator: the diagonal corner
    (each coordinate approaching its own bound) is cofinal in the box."""
    if all(b.is_successor for b in bounds):
        return _k(fn(*[b.pred() for b in bounds]))
    if any(b.level != 0 and not b.is_successor for b in bounds):
        raise UnsupportedSupremum(
            "omega-indexed sampling is not cofinal below an uncountable limit"
        )

    def corner(n: int) -> KOrdinal:
        xs = []
        for b in bounds:
            if b.is_successor:
                xs.append(b.pred())
            else:
                xs.append(KOrdinal.of(fund_seq(b.countable(), n)))
        return _k(fn(*xs))

    return _sampled_sup(corner)


def _gated_sup(fn: BoundOp, bounds: list[KOrdinal]) -> KOrdinal:
    """Strict-box sup of an equipotence-gated operator, stratified by the
    common cardinality of the tuples actually passing the gate."""
    candidates: list[KOrdinal] = []

    # finite stratum: only equal finite tuples pass the gate
    fin = [b.countable().as_int() for b in bounds if b.is_finite]
    if fin:
        t = min(fin) - 1
        candidates.append(_k(fn(*[KOrdinal.of(t)] * len(bounds))))
    else:
        candidates.append(
            _sampled_sup(lambda n: _k(fn(*[KOrdinal.of(n)] * len(bounds))))
        )

    top = [j for j in range(MAX_LEVEL + 1) if all(omega_level(j) < b for b in bounds)]
    if top:
        j = max(top)
        if j == 0 and all(b.level == 0 for b in bounds):

            def corner(n: int) -> KOrdinal:
                xs = []
                for b in bounds:
                    c = b.countable()
                    xs.append(KOrdinal.of(c.pred() if c.is_successor else fund_seq(c, n)))
                return _k(fn(*xs))

            if all(b.is_successor for b in bounds):
                candidates.append(corner(1))
            else:
                candidates.append(_sampled_sup(corner))
        else:
            if not (fn.at_least_cardinality and fn.stratum_bounded):
                raise UnsupportedSupremum(
                    "uncountable strata need declared stratum facts"
                )
            preds = []
            for b in bounds:
                if not b.is_successor:
                    raise UnsupportedSupremum(
                        "omega-indexed sampling is not cofinal below %s" % b
                    )
                preds.append(b.pred())
            if not all(cardinality(p) == omega_level(j) for p in preds):
                raise UnsupportedSupremum(
                    "non-equipotent uncountable corner at %s" % (bounds,)
                )
            # lower strata are dominated: their values sit below
            # hartog(kappa') <= omega_j <= the corner value.
            candidates.append(_k(fn(*preds)))
    return max(candidates)


def bracket_tilde(f) -> BoundOp:
    """[f]~ : the strict-box supremum of an operator.

    The operand must be monotone, either outright or on each equipotence
    stratum (`equipotence_gated`).  Exact on successor corners and, via
    fund_seq cofinal sampling with CNF limit extrapolation, on countable
    limit bounds.  Uncountable strata of gated operators are handled only
    under declared `at_least_cardinality` and `stratum_bounded` facts
    (which make every lower stratum dominated by the attained top corner);
    anything else raises UnsupportedSupremum.
    """
    fn = f if isinstance(f, BoundOp) else BoundOp("f", f, monotone=True)
    if not (fn.monotone or fn.equipotence_gated):
        raise UnsupportedSupremum("bracket_tilde needs a monotone operand")

    def g(*args) -> KOrdinal:
        bounds = [_k(a) for a in args]
        if any(b.is_zero for b in bounds):
            return K_ZERO
        if fn.equipotence_gated and len(bounds) > 1:
            return _gated_sup(fn, bounds)
        return _corner_sup(fn, bounds)

    return BoundOp("[%s]~" % fn.name, g, monotone=fn.monotone)


THETA_TILDE = BoundOp(
    "theta_tilde",
    theta_tilde,
    monotone=True,
    at_least_cardinality=True,
    stratum_bounded=True,
)


def reduction_identity_sides(args) -> tuple[KOrdinal, KOrdinal]:
    """Both sides of [theta_tilde_2(theta_tilde_n, id)]^+ vs theta_plus at
    arity n+1, evaluated independently."""
    args = [_k(a) for a in args]
    if len(args) < 3:
        raise OrdinalError("the reduction identity needs arity >= 3")
    rhs = theta_plus(*args)
    if not equipotent(args):
        return K_ZERO, rhs
    shifted = [a.succ() for a in args]
    inner = theta_tilde(*shifted[:-1])
    lhs = theta_tilde(inner, shifted[-1])
    return lhs, rhs


def reduction_identity_check(n: int, args) -> bool:
    """True iff the arity-(n+1) reduction identity holds at args."""
    args = list(args)
    if not 2 <= n <= 4:
        raise OrdinalError("reduction arity n must be in 2..4")
    if len(args) != n + 1:
        raise OrdinalError("expected %d arguments, got %d" % (n + 1, len(args)))
    lhs, rhs = reduction_identity_sides(args)
    return lhs == rhs
