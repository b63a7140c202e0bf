import itertools

import pytest

from wpolab.posets import (
    FinPoset,
    PosetError,
    all_posets,
    antichain,
    bad_tree_height,
    chain,
    combine,
    embeds,
    intersect,
    length_fin,
    length_recursive,
    linear_extensions,
    longcut_fin,
    make_poset,
)

from oracles import length_by_extensions


def test_make_poset():
    p = make_poset(3, [(0, 1), (1, 2)])
    assert p.le == frozenset({(0, 1), (1, 2), (0, 2)})
    assert antichain(3).le == frozenset()
    with pytest.raises(PosetError):
        make_poset(2, [(0, 1), (1, 0)])
    with pytest.raises(PosetError):
        make_poset(3, [(0, 1), (1, 2), (2, 0)])  # closure finds the cycle
    with pytest.raises(PosetError):
        make_poset(2, [(0, 5)])


def test_intersect():
    c = chain(3)
    rev = make_poset(3, [(2, 1), (1, 0)])
    assert intersect(c, rev).le == frozenset()
    assert intersect(c, c) == c
    relabeled = make_poset(3, [(0, 2), (2, 1)])  # chain 0 < 2 < 1
    assert intersect(c, relabeled).le == frozenset({(0, 1), (0, 2)})
    with pytest.raises(PosetError):
        intersect(chain(2), chain(3))


def test_linear_extensions():
    assert list(linear_extensions(chain(3))) == [(0, 1, 2)]
    assert len(list(linear_extensions(antichain(3)))) == 6
    v = make_poset(3, [(0, 1), (0, 2)])
    assert set(linear_extensions(v)) == {(0, 1, 2), (0, 2, 1)}
    # each extension respects every strict pair positionally
    p = make_poset(4, [(0, 2), (1, 2), (2, 3)])
    for perm in linear_extensions(p):
        pos = {v: i for i, v in enumerate(perm)}
        assert all(pos[i] < pos[j] for (i, j) in p.le)


def test_length_trio_small():
    assert length_fin(antichain(0)) == 0
    assert length_recursive(antichain(0)) == 0
    assert length_recursive(antichain(2)) == 2
    assert length_recursive(chain(3)) == 3
    v = make_poset(3, [(0, 1), (0, 2)])
    assert bad_tree_height(v) == 3
    assert bad_tree_height(chain(3)) == 3
    assert bad_tree_height(antichain(3)) == 3


def test_length_trio_exhaustive_n3():
    for p in all_posets(3):
        assert length_fin(p) == length_recursive(p) == bad_tree_height(p) == 3
        assert length_by_extensions(p.n, p.le) == 3


def test_all_posets_counts():
    # labeled partial orders: 1, 1, 3, 19, 219
    assert sum(1 for _ in all_posets(0)) == 1
    assert sum(1 for _ in all_posets(2)) == 3
    assert sum(1 for _ in all_posets(3)) == 19


def test_combine():
    two = chain(2)
    ds = combine("direct_sum", two, two)
    assert ds.n == 4 and ds.le == frozenset({(0, 1), (2, 3)})
    diamond = combine("cartesian_product", two, two)
    assert diamond.n == 4
    assert length_fin(diamond) == 4  # 2 (x) 2
    ls = combine("lex_sum", antichain(2), chain(1))
    assert ls.le == frozenset({(0, 2), (1, 2)})
    with pytest.raises(PosetError):
        combine("tensor", two, two)


def test_embeds():
    assert embeds(chain(2), chain(3))
    assert not embeds(antichain(2), chain(3))
    v = make_poset(3, [(0, 1), (0, 2)])
    diamond = combine("cartesian_product", chain(2), chain(2))
    assert embeds(v, diamond)
    assert not embeds(diamond, v)


def test_longcut():
    assert longcut_fin(chain(5), 2, 3) == ((0, 1), (2, 3, 4))
    assert longcut_fin(antichain(3), 2, 1) == ((0, 1), (2,))
    with pytest.raises(PosetError):
        longcut_fin(chain(2), 2, 1)
    # initial part is downward closed
    p = make_poset(4, [(2, 0), (3, 1)])
    lo, hi = longcut_fin(p, 2, 2)
    assert all(i in lo for j in lo for i in range(p.n) if p.lt(i, j))


def test_dejongh_parikh_small_pairs():
    threes = list(all_posets(3))[:6] + [chain(3), antichain(3)]
    twos = list(all_posets(2))
    for p, q in itertools.product(twos, threes):
        assert length_fin(combine("direct_sum", p, q)) == p.n + q.n
        prod = combine("cartesian_product", p, q)
        assert length_recursive(prod) == p.n * q.n
        assert length_fin(combine("lex_sum", p, q)) == p.n + q.n


def test_restriction_bounds():
    for p in all_posets(3):
        for k in range(4):
            for sub in itertools.combinations(range(3), k):
                rest = tuple(v for v in range(3) if v not in sub)
                a = length_fin(p.restrict(sub))
                b = length_fin(p.restrict(rest))
                assert a <= length_fin(p) <= a + b


def test_hasse_reduction():
    c = chain(3)
    assert c.hasse == frozenset({(0, 1), (1, 2)})
    assert antichain(2).hasse == frozenset()
