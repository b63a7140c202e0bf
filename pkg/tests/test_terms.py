"""Term algebra: de Jongh-Parikh lengths, prefixes, and the term grammar."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpolab.ordinals import (
    OrdinalError,
    add,
    from_int,
    nat_add,
    nat_mul,
    parse_ordinal,
)
from wpolab.posets import PosetError, antichain, chain, length_fin, make_poset
from wpolab.terms import (
    DSum,
    Fin,
    LexSum,
    Ord,
    Prod,
    denote_prefix,
    length_term,
    parse_term,
    render_term,
    term_size,
)

from test_bounds import random_below


def o(text):
    return parse_ordinal(text)


def test_length_of_leaves():
    assert length_term(Ord(o("w^2"))) == o("w^2")
    assert length_term(Fin(chain(4))) == from_int(4)
    assert length_term(Fin(antichain(4))) == from_int(4)


def test_length_of_combinators():
    assert length_term(DSum(Ord(o("w")), Ord(o("w")))) == o("w*2")
    assert length_term(Prod(Ord(o("w+1")), Ord(o("w+1")))) == o("w^2+w*2+1")
    assert length_term(LexSum(Ord(from_int(1)), Ord(o("w")))) == o("w")
    assert length_term(LexSum(Ord(o("w")), Ord(from_int(1)))) == o("w+1")


@given(st.integers(0, 2**48))
@settings(max_examples=60)
def test_length_is_commutative_for_dsum_and_prod(seed):
    rng = random.Random(seed)
    a = Ord(random_below(rng, o("w^3")))
    b = Ord(random_below(rng, o("w^3")))
    assert length_term(DSum(a, b)) == length_term(DSum(b, a))
    assert length_term(Prod(a, b)) == length_term(Prod(b, a))
    assert length_term(LexSum(a, b)) == add(a.alpha, b.alpha)


def test_denote_prefix_of_finite_terms_is_full():
    assert denote_prefix(Fin(chain(3)), 5) == chain(3)
    assert denote_prefix(Ord(o("w")), 4) == chain(4)
    assert denote_prefix(Fin(antichain(2)), 10) == antichain(2)


def test_dsum_prefix_alternates_factors():
    p = denote_prefix(DSum(Ord(o("w")), Ord(o("w"))), 4)
    assert p.le == frozenset({(0, 2), (1, 3)})


def test_lexsum_prefix_still_orders_left_below_right():
    p = denote_prefix(LexSum(Ord(o("w")), Ord(o("w"))), 4)
    # even slots are the left chain, odd the right; all left below all right
    assert p.le == frozenset({(0, 2), (1, 3), (0, 1), (0, 3), (2, 1), (2, 3)})


def test_interleaving_survives_a_finite_factor():
    p = denote_prefix(DSum(Fin(chain(1)), Ord(o("w"))), 5)
    # vertex 0 is the singleton; the rest is a chain of 4
    assert p.le == frozenset({(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)})


def test_product_prefix_is_the_product_order():
    p = denote_prefix(Prod(Ord(o("w")), Ord(o("w"))), 6)
    # anti-diagonal order: (0,0), (0,1), (1,0), (0,2), (1,1), (2,0)
    assert (0, 1) in p.le and (0, 2) in p.le and (1, 4) in p.le
    assert (1, 2) not in p.le and (2, 1) not in p.le  # incomparable pair


@pytest.mark.parametrize(
    "t",
    [
        Fin(make_poset(3, [(0, 1)])),
        DSum(Fin(chain(2)), Fin(antichain(2))),
        Prod(Fin(chain(2)), Fin(chain(3))),
        LexSum(Fin(antichain(2)), Fin(chain(2))),
        Prod(Ord(from_int(3)), DSum(Ord(from_int(2)), Fin(chain(2)))),
    ],
)
def test_finite_term_length_matches_the_denoted_poset(t):
    n = term_size(t)
    assert n is not None
    full = denote_prefix(t, n + 3)
    assert full.n == n
    assert length_term(t) == from_int(length_fin(full))


@given(st.integers(0, 2**48))
@settings(max_examples=40, deadline=None)
def test_monotone_budget_gives_induced_subposets(seed):
    rng = random.Random(seed)
    leaves = [Ord(o("w")), Ord(o("w*2")), Fin(chain(3)), Ord(from_int(4))]
    a, b = rng.choice(leaves), rng.choice(leaves)
    t = rng.choice([DSum, LexSum, Prod])(a, b)
    m = rng.randrange(1, 8)
    n = rng.randrange(m, 12)
    big = denote_prefix(t, n)
    assert denote_prefix(t, m) == big.restrict(range(min(m, big.n)))


def test_term_size():
    assert term_size(Ord(o("w"))) is None
    assert term_size(Prod(Ord(from_int(0)), Ord(o("w")))) == 0
    assert term_size(DSum(Fin(chain(2)), Fin(chain(3)))) == 5
    assert term_size(Prod(Fin(chain(2)), Fin(chain(3)))) == 6


# -- grammar -----------------------------------------------------------------------


def test_parse_term_examples():
    assert parse_term("ord(w)") == Ord(o("w"))
    assert parse_term("dsum(ord(w), fin(chain3))") == DSum(Ord(o("w")), Fin(chain(3)))
    assert parse_term("prod(ord(w+1), ord(w+1))") == Prod(Ord(o("w+1")), Ord(o("w+1")))
    assert parse_term("fin(antichain2)") == Fin(antichain(2))


def test_parse_term_nested_and_whitespace():
    t = parse_term(" lexsum( dsum(ord(w^2), ord(3)) , prod(ord(w), fin(chain2)) ) ")
    assert isinstance(t, LexSum) and isinstance(t.left, DSum) and isinstance(t.right, Prod)
    assert parse_term(render_term(t)) == t


def test_parse_term_from_poset_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"n": 3, "le": [[0, 1], [1, 2]]}')
    assert parse_term("fin(@%s)" % path) == Fin(chain(3))


@pytest.mark.parametrize(
    "bad",
    ["", "ord(w", "dsum(ord(w))", "prod(ord(w), ord(w)) junk", "fin(triangle3)",
     "dsum(ord(w) ord(w))"],
)
def test_parse_term_rejects_malformed_input(bad):
    with pytest.raises(OrdinalError):
        parse_term(bad)


def test_render_term_round_trips():
    for text in ["ord(w^2+w*3+5)", "fin(chain7)", "fin(antichain2)",
                 "dsum(lexsum(ord(w), ord(1)), prod(ord(w), ord(w)))"]:
        assert render_term(parse_term(text)) == text


def test_render_term_refuses_exotic_finite_posets():
    with pytest.raises(PosetError):
        render_term(Fin(make_poset(3, [(0, 1)])))
