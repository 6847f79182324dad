import itertools

import pytest

from naive import naive_nucleus, naive_zero_divisor_free
from petitalg import PetitAlgebra, PreconditionError, SkewPoly, parse_poly
from petitalg.petit_algebra import algebra_from_descriptor
from petitalg.skew_poly import is_irreducible, monic_polys


def S(E, text):
    return PetitAlgebra(text, E)


def test_construction_rules(gf4):
    with pytest.raises(PreconditionError):
        S(gf4, "t - g")
    A = PetitAlgebra(parse_poly(gf4, "g*t^2 + 1"))
    assert A.f.is_monic()
    assert A.dim == 4 and A.prime_dim == 4


def test_unit_and_reduction(gf4):
    A = S(gf4, "t^2 - g")
    assert A.multiply(A.t, A.t) == A.parse("g")
    for x in A.elements():
        assert A.multiply(x, A.one) == x == A.multiply(A.one, x)
    with pytest.raises(PreconditionError):
        A.multiply(A.t, S(gf4, "t^2 + t + g").t)


def test_associator_examples(gf4):
    A = S(gf4, "t^2 - g")
    B = A.prime_basis
    assert any(A.associator(x, y, z) for x, y, z in itertools.product(B, repeat=3))
    assert all(not A.associator(A.one, y, z) for y, z in itertools.product(B, repeat=2))
    inv = S(gf4, "t^2 - 1")
    assert all(not inv.associator(x, y, z) for x, y, z in itertools.product(inv.prime_basis, repeat=3))


def test_associativity_examples(gf4, gf9):
    assert S(gf4, "t^2 - 1").is_associative()
    assert not S(gf4, "t^2 - g").is_associative()
    assert not S(gf9, "t^2 - t - 1").is_associative()


def test_powers_of_t(gf4, gf9):
    assert not S(gf4, "t^2 - g").powers_of_t_associative()
    assert S(gf9, "t^2 - t - 1").powers_of_t_associative()
    assert S(gf4, "t^2 - 1").powers_of_t_associative()


def test_nuclei_gf4_example(gf4):
    A = S(gf4, "t^2 - g")
    K = A.image_of_K()
    assert A.nucleus_left() == K == A.nucleus_middle()
    assert A.nucleus_left().dim == 2
    assert A.nucleus_right() == A.nucleus_right_eigen()
    for slot, sub in [("left", A.nucleus_left()), ("middle", A.nucleus_middle()), ("right", A.nucleus_right())]:
        assert {x for x in A.elements() if sub.contains(x)} == set(naive_nucleus(A, slot))


def test_nuclei_exhaustive_gf4(gf4):
    for f in monic_polys(gf4, 2):
        A = PetitAlgebra(f)
        assert A.nucleus_right() == A.nucleus_right_eigen()
        assert A.is_associative() == A.is_invariant()
        if not A.is_associative():
            assert A.nucleus_left() == A.image_of_K() == A.nucleus_middle()
        else:
            assert A.nucleus_left().dim == A.dim == A.nucleus_right_eigen().dim


def test_fixed_field_coefficients(gf9, gf8):
    for E, text in [(gf9, "t^2 - t - 1"), (gf8, "t^3 - t - 1")]:
        A = S(E, text)
        N = A.nucleus_right()
        for i in range(A.m):
            assert N.contains(A.t_power(i))
        assert A.powers_of_t_associative()


def test_nucleus_elements_kill_associators(gf9):
    A = S(gf9, "t^2 - g*t - 1")
    B = A.prime_basis
    for x in A.nucleus_left().basis:
        assert all(not A.associator(x, y, z) for y, z in itertools.product(B, repeat=2))
    for x in A.nucleus_right().basis:
        assert all(not A.associator(y, z, x) for y, z in itertools.product(B, repeat=2))


def test_center_and_F0(gf4, gf9):
    A = S(gf4, "t^2 - g")
    assert A.F0() == A.image_of_F()
    assert A.center().dim >= 1
    assert A.center().contains(A.one)
    B = S(gf9, "t^2 - 1")
    assert B.is_associative()
    assert B.image_of_F() <= B.center()


def test_division_examples(gf4):
    assert S(gf4, "t^2 - g").is_division()
    A = S(gf4, "t^2 - 1")
    a, x = A.zero_divisor()
    assert a and x and not A.multiply(a, x)


def test_division_iff_irreducible_gf4_gf9(gf4, gf9):
    for E in (gf4, gf9):
        for f in monic_polys(E, 2):
            A = PetitAlgebra(f)
            assert A.is_division() == is_irreducible(f)
    for f in list(monic_polys(gf4, 2))[:8]:
        A = PetitAlgebra(f)
        assert A.is_division() == naive_zero_divisor_free(A)


def test_bilinearity(gf9):
    A = S(gf9, "t^2 - g*t + 2")
    els = A.elements()[::7]
    c = gf9.generator
    for x, y, z in itertools.product(els[:6], repeat=3):
        assert A.multiply(x + y, z) == A.multiply(x, z) + A.multiply(y, z)
        assert A.multiply(x, y + z) == A.multiply(x, y) + A.multiply(x, z)
    for x, y in itertools.product(els[:6], repeat=2):
        # constants of F pull out on both sides
        f = gf9(2)
        assert A.multiply(A.scale(f, x), y) == A.scale(f, A.multiply(x, y)) == A.multiply(x, A.scale(f, y))
        assert A.multiply(A.scale(c, x), y) == A.scale(c, A.multiply(x, y))


def test_quadratic_backend(q3):
    A = S(q3, "t^2 - sqrt(-3)")
    assert not A.is_associative()
    assert A.nucleus_left() == A.image_of_K() == A.nucleus_middle()
    assert A.nucleus_right() == A.nucleus_right_eigen()
    assert A.F0() == A.image_of_F()
    x = A.parse("1/2 + i*t")
    y = A.parse("sqrt(-3)*t - 3")
    assert A.multiply(x, y) == A.from_poly(x.poly() * y.poly())


def test_descriptor(gf9, q12):
    for E, text in [(gf9, "t^2 - g*t - 1"), (q12, "t^2 - sqrt(-1/12)")]:
        A = S(E, text)
        d = A.descriptor()
        assert d["f"][-1] == "1"
        assert algebra_from_descriptor(d) == A


def test_from_poly_reduces(gf4):
    A = S(gf4, "t^2 - g")
    assert A.from_poly(SkewPoly.t(gf4, 2)) == A.parse("g")
