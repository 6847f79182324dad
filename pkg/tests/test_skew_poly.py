import pytest
from hypothesis import given, settings, strategies as st

from naive import naive_right_factors
from petitalg import ParseError, PreconditionError, SkewPoly, make_finite_extension, parse_poly
from petitalg.skew_poly import (NEG_INF, is_invariant, is_invariant_oracle, is_irreducible, left_divmod,
                                monic_polys, right_divmod)


def P(E, text):
    return parse_poly(E, text)


def test_twist_rule(gf4):
    w = gf4.generator
    t = SkewPoly.t(gf4)
    assert t * w == SkewPoly(gf4, [0, w ** 2])
    assert P(gf4, "(t + g^2)*(t - g)") == P(gf4, "t^2 + 1")
    f = P(gf4, "t^2 + g*t + 1")
    assert f * 1 == f


def test_right_division_examples(gf4):
    f = P(gf4, "t - g")
    q, r = right_divmod(P(gf4, "t^2"), f)
    assert q == P(gf4, "t + g^2")
    assert r == P(gf4, "1")
    assert q * f + r == P(gf4, "t^2")
    g = P(gf4, "t^2 + g")
    assert right_divmod(g, g) == (P(gf4, "1"), SkewPoly(gf4))
    assert right_divmod(f, g) == (SkewPoly(gf4), f)
    assert left_divmod(g, g) == (P(gf4, "1"), SkewPoly(gf4))
    assert left_divmod(f, g) == (SkewPoly(gf4), f)
    with pytest.raises(ZeroDivisionError):
        right_divmod(g, SkewPoly(gf4))


def test_degree_sentinel(gf4):
    zero = SkewPoly(gf4)
    assert zero.degree is NEG_INF
    assert NEG_INF < 0
    assert (zero * P(gf4, "t")).degree is NEG_INF
    with pytest.raises(TypeError):
        NEG_INF + 1


def test_mixed_fields_rejected(gf4, gf9):
    with pytest.raises(PreconditionError):
        P(gf4, "t") * P(gf9, "t")


def test_irreducible_examples(gf4, q3):
    assert is_irreducible(P(gf4, "t^2 - g"))
    assert not is_irreducible(P(gf4, "t^2 - 1"))
    assert is_irreducible(P(gf4, "t + g"))
    assert is_irreducible(P(q3, "t^2 - i*sqrt(-3)"))


def test_irreducible_agrees_with_naive_factor_search(gf4, gf9):
    for E, m in [(gf4, 2), (gf4, 3), (gf9, 2)]:
        for f in monic_polys(E, m):
            factors = list(naive_right_factors(f))
            assert is_irreducible(f) == (not factors)
            for q, h in factors:
                assert q * h == f


def test_t2_minus_a_irreducible_iff_not_a_norm(gf4, gf9):
    for E in (gf4, gf9):
        norms = {E.norm(b) for b in E.elements()}
        for a in E.elements():
            f = SkewPoly(E, [-a, 0, 1])
            assert is_irreducible(f) == (a not in norms)


def test_invariance_examples(gf4, gf9):
    assert is_invariant(P(gf4, "t^2 - 1"))
    assert not is_invariant(P(gf9, "t^2 - t - 1"))
    assert not is_invariant(P(gf4, "t^2 - g"))
    assert not is_invariant_oracle(P(gf9, "t^2 - t - 1"))
    assert not is_invariant_oracle(P(gf4, "t^2 - g"))
    assert is_invariant_oracle(P(gf4, "t^2 - 1"))


def test_invariance_matches_definition_exhaustively(gf4, gf9):
    for E in (gf4, gf9):
        for m in (2, 3):
            for f in monic_polys(E, m):
                assert is_invariant(f) == is_invariant_oracle(f)


def test_parse_and_print(gf4, gf9):
    f = P(gf4, "t^2 + (g)*t + (g+1)")
    assert str(f) == "t^2 + g*t + (g + 1)"
    assert P(gf4, str(f)) == f
    for f in monic_polys(gf9, 2):
        assert P(gf9, str(f)) == f
    with pytest.raises(ParseError) as exc:
        P(gf4, "t^2 + (g")
    assert exc.value.pos == len("t^2 + (g")


E8 = make_finite_extension(2, 1, 3)
E9 = make_finite_extension(3, 1, 2)


def polys(E, max_deg=4, nonzero=False):
    coeffs = st.lists(st.integers(0, E.q - 1), min_size=1 if nonzero else 0, max_size=max_deg + 1)
    out = coeffs.map(lambda cs: SkewPoly(E, [E.element(c) for c in cs]))
    return out.filter(lambda f: not f.is_zero()) if nonzero else out


@settings(max_examples=300, deadline=None)
@given(polys(E8, 6), polys(E8, 3, nonzero=True))
def test_division_round_trip(g, f):
    q, r = g.right_divmod(f)
    assert q * f + r == g
    assert r.degree < f.degree
    q, r = g.left_divmod(f)
    assert f * q + r == g
    assert r.degree < f.degree


@settings(max_examples=300, deadline=None)
@given(polys(E9, 3), polys(E9, 3), polys(E9, 3))
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree
