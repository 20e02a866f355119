"""Tests for free differential calculus and the minor-gcd engine."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alexpoly.errors import ComputationError
from alexpoly.fox import (
    GroupRingElement,
    alexander_one_variable,
    alexander_polynomial,
    fox_derivative,
    fox_matrix,
    theta,
)
from alexpoly.group import AbelMap, Presentation, Word, parse_word
from alexpoly.minors import _enumerate_minor_gcd, _snf_minor_gcd, minor_gcd
from alexpoly.ring import (
    LaurentPoly,
    equal_up_to_units,
    gcd,
    normalize,
    parse_poly,
)


def P(text, nvars=None):
    return parse_poly(text, nvars=nvars)


def W(text, gens=("x", "y", "z")):
    return parse_word(text, gens)


X, Y, Z = Word.generator(0), Word.generator(1), Word.generator(2)
PHI_T = AbelMap.constant_one(2)


# ---------------------------------------------------------------------------
# oracle: brute-force gcd over explicitly enumerated minors


def oracle_minor_gcd(rows, k, nvars):
    if k == 0:
        return LaurentPoly.one(nvars)
    n = len(rows[0]) if rows else 0
    g = LaurentPoly.zero(nvars)
    for ri in combinations(range(len(rows)), k):
        for ci in combinations(range(n), k):
            g = gcd(g, _det([[rows[i][j] for j in ci] for i in ri], nvars))
    return normalize(g)


def _det(mat, nvars):
    if not mat:
        return LaurentPoly.one(nvars)
    if len(mat) == 1:
        return mat[0][0]
    total = LaurentPoly.zero(nvars)
    for j, entry in enumerate(mat[0]):
        if entry.is_zero:
            continue
        minor = _det([row[:j] + row[j + 1:] for row in mat[1:]], nvars)
        term = entry * minor
        total = total + (term if j % 2 == 0 else -term)
    return total


# ---------------------------------------------------------------------------
# group ring


def test_group_ring_arithmetic():
    a = GroupRingElement.of_word(X)
    b = GroupRingElement.of_word(Y, -2)
    s = a + b
    assert s.coeffs == {X: Fraction(1), Y: Fraction(-2)}
    assert (s - s).is_zero
    prod = s * GroupRingElement.of_word(X)
    assert prod.coeffs == {X * X: Fraction(1), Y * X: Fraction(-2)}


def test_group_ring_collects_like_words():
    a = GroupRingElement({X: Fraction(1)}) + GroupRingElement({X: Fraction(-1)})
    assert a.is_zero
    ident = GroupRingElement.of_word(Word.identity())
    assert (ident * ident).coeffs == {Word.identity(): Fraction(1)}


# ---------------------------------------------------------------------------
# derivatives: frozen hand computations


def test_derivative_of_powers():
    assert fox_derivative(X ** 3, 0).coeffs == {
        Word.identity(): Fraction(1), X: Fraction(1), X ** 2: Fraction(1)}
    assert fox_derivative(X ** -2, 0).coeffs == {
        X ** -1: Fraction(-1), X ** -2: Fraction(-1)}
    assert fox_derivative(X, 1).is_zero
    assert fox_derivative(Word.identity(), 0).is_zero


def test_derivative_trefoil_relator():
    r = W("x y x y^-1 x^-1 y^-1")
    dx = fox_derivative(r, 0)
    assert dx.coeffs == {
        Word.identity(): Fraction(1),
        W("x y"): Fraction(1),
        W("x y x y^-1 x^-1"): Fraction(-1),
    }
    dy = fox_derivative(r, 1)
    assert dy.coeffs == {
        W("x"): Fraction(1),
        W("x y x y^-1"): Fraction(-1),
        W("x y x y^-1 x^-1 y^-1"): Fraction(-1),
    }


@st.composite
def words_st(draw, n_gens=3, max_syllables=6):
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n_gens - 1), st.integers(-2, 2)),
        max_size=max_syllables))
    return Word(pairs)


@given(words_st(), words_st())
def test_derivative_product_rule(u, v):
    for gen in range(3):
        left = fox_derivative(u * v, gen)
        right = fox_derivative(u, gen) + fox_derivative(v, gen).left_mul(u)
        assert left == right


@given(words_st())
def test_fundamental_identity(w):
    # sum_j dw/dx_j (x_j - 1) telescopes to w - 1
    total = GroupRingElement.zero()
    for gen in range(3):
        d = fox_derivative(w, gen)
        x = GroupRingElement.of_word(Word.generator(gen))
        one = GroupRingElement.of_word(Word.identity())
        total = total + d * (x - one)
    expected = GroupRingElement.of_word(w) - GroupRingElement.of_word(Word.identity())
    assert total == expected


# ---------------------------------------------------------------------------
# theta


def test_theta_one_variable():
    elem = fox_derivative(W("x y x y^-1 x^-1 y^-1"), 0)
    assert theta(elem, PHI_T) == P("t^2 - t + 1")


def test_theta_two_variables():
    phi = AbelMap(2, ((1, 0), (0, 1)))
    comm = W("x y x^-1 y^-1")
    assert theta(fox_derivative(comm, 0), phi) == P("1 - t1", nvars=2)
    assert theta(fox_derivative(comm, 1), phi) == P("t0 - 1", nvars=2)


def test_theta_cancellation():
    # x and y x y^-1 have equal images, so their difference dies
    elem = GroupRingElement.of_word(W("x")) - GroupRingElement.of_word(W("y x y^-1"))
    assert theta(elem, PHI_T).is_zero


# ---------------------------------------------------------------------------
# minor gcd engine


def test_minor_gcd_single_row():
    rows = [[P("1 - t1", 2), P("t0 - 1", 2)]]
    assert minor_gcd(rows, 1, 2) == LaurentPoly.one(2)


def test_minor_gcd_common_factor():
    f = P("t - 1")
    rows = [[f * P("t"), f * P("t + 1")],
            [f * P("t^2"), f * P("t - 1")]]
    assert minor_gcd(rows, 1, 1) == P("t - 1")
    # 2x2 determinant picks up f^2
    expected = normalize(f * f * (P("t") * P("t - 1") - P("t + 1") * P("t^2")))
    assert minor_gcd(rows, 2, 1) == expected


def test_minor_gcd_unit_contraction_matches_oracle():
    rows = [
        [P("1"), P("t"), P("t - 1")],
        [P("t^2"), P("t + 1"), P("0")],
        [P("t - 1"), P("0"), P("t^3 - 1")],
    ]
    for k in (1, 2, 3):
        assert minor_gcd(rows, k, 1) == oracle_minor_gcd(rows, k, 1)


def test_minor_gcd_rank_deficient():
    rows = [[P("t"), P("t^2")], [P("t^3"), P("t^4")]]
    assert minor_gcd(rows, 2, 1).is_zero
    # monomials are units, so the entry gcd normalizes to 1
    assert minor_gcd(rows, 1, 1) == LaurentPoly.one(1)


def test_minor_gcd_degenerate_shapes():
    assert minor_gcd([], 1, 1).is_zero
    assert minor_gcd([[P("t")]], 2, 1).is_zero
    assert minor_gcd([[P("t")]], 0, 1) == LaurentPoly.one(1)


@st.composite
def poly_matrix_st(draw, max_rows=4, ncols=3):
    def poly():
        return st.builds(
            lambda cs: LaurentPoly(1, {(i,): Fraction(c)
                                       for i, c in enumerate(cs) if c}),
            st.lists(st.integers(-2, 2), min_size=0, max_size=3))
    m = draw(st.integers(1, max_rows))
    return [[draw(poly()) for _ in range(ncols)] for _ in range(m)]


@given(poly_matrix_st(), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_minor_gcd_matches_bruteforce(rows, k):
    assert minor_gcd(rows, k, 1) == oracle_minor_gcd(rows, k, 1)


@given(poly_matrix_st(max_rows=4, ncols=3), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_enumeration_and_snf_agree(rows, k):
    tidy = [tuple(r) for r in rows if any(not e.is_zero for e in r)]
    if len(tidy) < k:
        return
    by_snf = _snf_minor_gcd(tidy, k)
    by_enum = _enumerate_minor_gcd(tidy, k, 1)
    assert by_snf == by_enum


# ---------------------------------------------------------------------------
# polynomial invariants of presentations


def trefoil_presentation():
    return Presentation(("x", "y"), (W("x y x y^-1 x^-1 y^-1"),))


def test_trefoil_polynomial():
    assert alexander_polynomial(trefoil_presentation(), PHI_T) == P("t^2 - t + 1")


def test_free_rank_two_gives_zero():
    pres = Presentation(("x", "y"))
    assert alexander_polynomial(pres, PHI_T).is_zero


def test_single_generator_conventions():
    phi = AbelMap.constant_one(1)
    assert alexander_polynomial(Presentation(("x",)), phi).is_zero
    pres = Presentation(("x",), (Word.generator(0, 2),))
    assert alexander_polynomial(pres, phi) == LaurentPoly.one(1)
    # relator with trivial image does not count
    killed = AbelMap(1, ((0,),))
    assert alexander_polynomial(pres, killed).is_zero


def test_z3_presentation():
    rels = (W("x y x^-1 y^-1"), W("x z x^-1 z^-1"), W("y z y^-1 z^-1"))
    pres = Presentation(("x", "y", "z"), rels)
    phi = AbelMap.constant_one(3)
    assert alexander_polynomial(pres, phi) == P("t^2 - 2*t + 1")


def test_hopf_presentation_two_variables():
    pres = Presentation(("x", "y"), (W("x y x^-1 y^-1"),))
    phi = AbelMap(2, ((1, 0), (0, 1)))
    assert alexander_polynomial(pres, phi) == LaurentPoly.one(2)


def test_wirtinger_trefoil_three_generators():
    # a b a^-1 = c, b c b^-1 = a, c a c^-1 = b
    gens = ("a", "b", "c")
    rels = tuple(parse_word(text, gens) for text in
                 ("a b a^-1 c^-1", "b c b^-1 a^-1", "c a c^-1 b^-1"))
    pres = Presentation(gens, rels)
    delta = alexander_polynomial(pres, AbelMap.constant_one(3))
    assert equal_up_to_units(delta, P("t^2 - t + 1"))


@given(words_st(n_gens=2, max_syllables=4), st.integers(0, 1))
@settings(max_examples=40, deadline=None)
def test_consequence_relators_do_not_change_invariant(u, which):
    # conjugating an existing relator adds a redundant row
    base = trefoil_presentation()
    r = base.relators[which % len(base.relators)]
    extra = u * r * u.inverse()
    bigger = Presentation(base.generators, base.relators + (extra,))
    assert alexander_polynomial(bigger, PHI_T) == \
        alexander_polynomial(base, PHI_T)


def test_product_of_conjugates_is_redundant():
    base = trefoil_presentation()
    r = base.relators[0]
    u, v = W("x y"), W("y^-1")
    extra = (u * r * u.inverse()) * (v * r.inverse() * v.inverse())
    bigger = Presentation(base.generators, base.relators + (extra,))
    assert alexander_polynomial(bigger, PHI_T) == \
        alexander_polynomial(base, PHI_T)


def test_fox_matrix_shape_and_mismatch():
    pres = trefoil_presentation()
    mat = fox_matrix(pres, PHI_T)
    assert len(mat) == 1 and len(mat[0]) == 2
    with pytest.raises(ValueError):
        fox_matrix(pres, AbelMap.constant_one(3))
    with pytest.raises(ValueError):
        alexander_polynomial(pres, AbelMap.constant_one(3))


# ---------------------------------------------------------------------------
# one-variable specialization


def test_one_variable_from_two_variable_marking():
    pres = Presentation(("x", "y"), (W("x y x^-1 y^-1"),))
    phi = AbelMap(2, ((1, 0), (0, 1)))
    # composing with the coordinate sum sends both generators to t
    assert alexander_one_variable(pres, phi) == P("t - 1")


def test_one_variable_rejects_non_surjective():
    pres = Presentation(("x", "y"), (W("x y x^-1 y^-1"),))
    phi = AbelMap(2, ((1, 1), (1, 1)))
    with pytest.raises(ComputationError):
        alexander_one_variable(pres, phi)
