import time

import pytest
from hypothesis import given, strategies as st

from conftest import braid_words
from oracles import reduced_words
from youngbraid import BKLFactor, BraidWord, RankError, bkl_expand, braid_equal, compose
from youngbraid.free_product import FPElement, certify_free, exotic, fp_multiply, theta

# PSL(2, Z) is Z/3 * Z/2 with u and v the classes of these matrices
U = ((0, -1), (1, 1))
V = ((0, -1), (1, 0))
I = ((1, 0), (0, 1))


def _mm(a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(2)) for c in range(2)) for r in range(2))


def psl(x: FPElement):
    m = I
    for s, e in x.syllables:
        for _ in range(e):
            m = _mm(m, U if s == "u" else V)
    return m


def psl_identity(m):
    return m in (I, ((-1, 0), (0, -1)))


syllables = st.lists(st.tuples(st.sampled_from("uv"), st.integers(-3, 3)), max_size=8)
elements = syllables.map(FPElement)


def test_multiply_examples():
    P = FPElement.parse
    assert fp_multiply(P("u"), P("u^2")).is_identity()
    assert fp_multiply(P("v"), P("v")).is_identity()
    assert fp_multiply(P("u v"), P("v u")) == P("u^2")
    assert P("u^-1").format() == "u^2"
    assert P("1").format() == "1"
    with pytest.raises(ValueError):
        P("w")


@given(syllables)
def test_normal_form_invariants(syl):
    x = FPElement(syl)
    for (a, e), (b, _) in zip(x.syllables, x.syllables[1:]):
        assert a != b
    for s, e in x.syllables:
        assert e in ((1, 2) if s == "u" else (1,))


@given(elements, elements, elements)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * ~a).is_identity() and (~a * a).is_identity()


@given(elements)
def test_identity_agrees_with_psl2z(x):
    assert x.is_identity() == psl_identity(psl(x))


def test_theta_examples():
    assert theta(BraidWord.parse("s1 s2 s1^-1", 3)).format() == "u^2 v u^2"
    assert theta(BraidWord.parse("s2 s1 s2^-1", 3)).format() == "v u^2 v u^2 v"
    assert theta(BraidWord.parse("s1 s2 s1^-1", 3)).pretty() == "u²vu²"
    assert theta(BraidWord.identity(3)).is_identity()
    with pytest.raises(RankError):
        theta(BraidWord.parse("s1", 4))


def test_theta_respects_braid_relation():
    assert theta(BraidWord.parse("s1 s2 s1", 3)) == theta(BraidWord.parse("s2 s1 s2", 3))


@given(braid_words(3), braid_words(3))
def test_theta_is_a_homomorphism(a, b):
    assert theta(compose(a, b)) == theta(a) * theta(b)


def test_exotic_examples():
    assert exotic(bkl_expand(BKLFactor(2, 4), 4)).format() == "s2 s1 s2^-1"
    assert exotic(bkl_expand(BKLFactor(1, 3), 4)).format() == "s1 s2 s1^-1"
    assert exotic(BraidWord.parse("s3 s1^-1", 4)).format() == "1"
    with pytest.raises(RankError):
        exotic(BraidWord.parse("s1", 3))


def test_exotic_respects_relations():
    pairs = [("s1 s2 s1", "s2 s1 s2"), ("s2 s3 s2", "s3 s2 s3"), ("s1 s3", "s3 s1")]
    for left, right in pairs:
        assert braid_equal(exotic(BraidWord.parse(left, 4)), exotic(BraidWord.parse(right, 4)))


def _brute_force_free(gens, length):
    images = {}
    for k, g in enumerate(gens, 1):
        images[k] = psl(theta(exotic(g)))
        inv = theta(exotic(g))
        images[-k] = psl(~inv)
    for w in reduced_words(2, length):
        m = I
        for a in w:
            m = _mm(m, images[a])
        if psl_identity(m):
            return False
    return True


def test_certificate_matches_brute_force():
    a13, a24 = bkl_expand(BKLFactor(1, 3), 4), bkl_expand(BKLFactor(2, 4), 4)
    s1 = BraidWord.parse("s1", 4)
    for gens in [(a13, a24), (s1, s1), (a13, a13), (s1, BraidWord.parse("s3", 4))]:
        for length in range(0, 6):
            assert certify_free(gens, length) == _brute_force_free(gens, length), (gens, length)


def test_certificate_examples():
    a13, a24 = bkl_expand(BKLFactor(1, 3), 4), bkl_expand(BKLFactor(2, 4), 4)
    assert certify_free((a13, a24), 1)
    s1 = BraidWord.parse("s1", 4)
    assert not certify_free((s1, s1), 2)
    start = time.perf_counter()
    assert certify_free((a13, a24), 10)
    assert time.perf_counter() - start < 1.0
