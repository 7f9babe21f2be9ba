import pytest
from hypothesis import given, strategies as st

from conftest import braid_words, free_words
from oracles import naive_action
from youngbraid import (
    BKLFactor,
    BraidWord,
    FreeWord,
    GTuple,
    ParseError,
    Permutation,
    RankError,
    WordLengthExceeded,
    apply_braid,
    apply_sigma,
    bkl_expand,
    bullet,
    compose,
    invert_braid,
    orbit_bfs,
    permutation_of,
    permute,
    product,
)
from youngbraid.free_group import cyclic_reduce


def T(text, rank=None):
    return GTuple.parse(text, rank)


def conj_class(w: FreeWord):
    core = cyclic_reduce(w)[1].letters
    return min((core[k:] + core[:k] for k in range(len(core))), default=())


@st.composite
def braid_and_tuple(draw, max_n=5, rank=3):
    n = draw(st.integers(2, max_n))
    b = draw(braid_words(n, 10))
    t = GTuple([draw(free_words(rank, 5)) for _ in range(n)], rank)
    return b, t


@given(braid_and_tuple())
def test_matches_formula_reference(bt):
    b, t = bt
    assert list(apply_braid(b, t).words) == naive_action(b.letters, list(t.words))


@given(braid_and_tuple())
def test_product_invariance(bt):
    b, t = bt
    assert product(apply_braid(b, t)) == product(t)


@given(braid_and_tuple())
def test_conjugacy_classes_follow_the_permutation(bt):
    b, t = bt
    moved = apply_braid(b, t)
    expected = permute(permutation_of(b), t)
    assert [conj_class(w) for w in moved] == [conj_class(w) for w in expected]


@given(st.integers(2, 5).flatmap(
    lambda n: st.tuples(braid_words(n), braid_words(n),
                        st.lists(free_words(2, 4), min_size=n, max_size=n))))
def test_action_law(data):
    a, b, entries = data
    t = GTuple(entries, 2)
    assert apply_braid(compose(a, b), t) == apply_braid(a, apply_braid(b, t))
    assert apply_braid(invert_braid(a), apply_braid(a, t)) == t


def test_sigma_formulas():
    t = T("(x, y)")
    assert apply_sigma(1, 1, t) == T("(y, y^-1 x y)")
    assert apply_sigma(1, -1, t) == T("(x y x^-1, x)")
    with pytest.raises(RankError):
        apply_sigma(2, 1, t)
    with pytest.raises(ValueError):
        apply_sigma(1, 2, t)


def test_apply_braid_examples():
    t = T("(x, y, x, y)")
    assert apply_braid(bkl_expand(BKLFactor(1, 3), 4), t) == t
    assert apply_braid(BraidWord.identity(4), t) == t
    b = BraidWord.parse("a(2,4) a(1,3)^-1", 4)
    assert apply_braid(b, GTuple.trivial(4)) == T(
        "(v1 v3 v1^-1, v4, v4^-1 v1 v3^-1 v2 v3 v1 v3^-1 v2^-1 v3 v1^-1 v4,"
        " v4^-1 v1 v3^-1 v2 v3 v1^-1 v4)"
    )
    with pytest.raises(RankError):
        apply_braid(BraidWord.parse("s1", 3), t)
    with pytest.raises(WordLengthExceeded):
        apply_braid(BraidWord([1, 2, 3] * 10, 4), t, max_length=20)


def test_permute_examples():
    a, b, c = (FreeWord.generator(k, 3) for k in (1, 2, 3))
    t = GTuple([a, b, c], 3)
    p = Permutation.from_cycles([(1, 2, 3)], 3)
    assert permute(p, t) == GTuple([c, a, b], 3)
    assert permute(Permutation.identity(3), t) == t
    assert permute(Permutation.transposition(1, 2, 2), T("(x, y)")) == T("(y, x)")


def test_bullet_examples():
    assert bullet(BraidWord.parse("s1", 2), GTuple.trivial(2)) == T("(v1 v2 v1^-1, v1)")
    t = T("(v1, v4, v4^-1 v2 v3 v2^-1 v4, v4^-1 v2 v4)")
    assert bullet(bkl_expand(BKLFactor(2, 4), 4), t) == GTuple.trivial(4)
    with pytest.raises(RankError):
        bullet(BraidWord.parse("s1", 2), T("(x1, x1)", 3))


@given(st.integers(2, 4).flatmap(
    lambda n: st.tuples(braid_words(n, 6), braid_words(n, 6),
                        st.lists(free_words(n, 4), min_size=n, max_size=n))))
def test_bullet_is_a_left_action_commuting_with_hurwitz(data):
    a, b, entries = data
    n = len(entries)
    t = GTuple(entries, n)
    assert bullet(compose(a, b), t) == bullet(a, bullet(b, t))
    assert bullet(a, GTuple.trivial(n)) == apply_braid(invert_braid(a), GTuple.trivial(n))
    # post-composition commutes with the Hurwitz action
    assert bullet(a, apply_braid(b, t)) == apply_braid(b, bullet(a, t))


def test_orbit_bfs_examples():
    u = T("(x, y)")
    assert set(orbit_bfs(u, 0)) == {u}
    one = orbit_bfs(u, 1)
    assert set(one) == {u, T("(y, y^-1 x y)"), T("(x y x^-1, x)")}
    assert not one.truncated
    assert set(orbit_bfs(T("(x, x)"), 4)) == {T("(x, x)")}
    cut = orbit_bfs(T("(x, y, z)"), 6, max_states=20)
    assert cut.truncated and len(cut) == 20


def test_tuple_text_and_json():
    t = T("(x1 x3 x1^-1, x4)")
    assert t.rank == 4 and len(t) == 2 and t.length() == 4
    assert T(t.format()) == t
    assert GTuple.from_json(t.to_json()) == t
    assert T("(1, x2)", 2)[0].is_identity()
    with pytest.raises(ParseError) as exc:
        T("(x1, q)")
    assert exc.value.pos == 5
    with pytest.raises(ParseError):
        T("x1, x2")
