import random

import pytest
from hypothesis import given, settings, strategies as st

from cycurve.field import (
    FieldTooSmall,
    Polynomial,
    RationalFraction,
    factorize,
    make_field,
    nth_root_of_unity,
    subfield_elements,
)


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------

def test_make_field_rejects_bad_characteristic():
    with pytest.raises(ValueError):
        make_field(2, 1)
    with pytest.raises(ValueError):
        make_field(15, 1)


def test_gf9_modulus_irreducible_by_root_check():
    F = make_field(3, 2)
    # degree-2 modulus: irreducible over GF(3) iff it has no root there
    c0, c1, c2 = F.modulus
    assert c2 == 1
    for a in range(3):
        assert (c0 + c1 * a + a * a) % 3 != 0


def test_gf49_primitive_element_order():
    F = make_field(7, 2)
    assert F.primitive.multiplicative_order() == 48
    # contains 8th roots of unity since 8 | 48
    xi = nth_root_of_unity(F, 8)
    assert xi.multiplicative_order() == 8


def test_deterministic_construction():
    a = make_field(5, 3)
    b = make_field(5, 3)
    assert a is b and a.modulus == b.modulus


def test_nth_root_examples():
    F7 = make_field(7, 1)
    assert nth_root_of_unity(F7, 2) == F7.from_int(6)
    xi = nth_root_of_unity(F7, 3)
    assert xi.multiplicative_order() == 3 and xi.index() in (2, 4)
    with pytest.raises(FieldTooSmall):
        nth_root_of_unity(F7, 5)


# ---------------------------------------------------------------------------
# field axioms (sampled)
# ---------------------------------------------------------------------------

@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_gf7_ring_axioms(a, b, c):
    F = make_field(7, 1)
    x, y, z = F.elt(a), F.elt(b), F.elt(c)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (3, 4)])
def test_frobenius_additivity_and_inverses(p, k):
    F = make_field(p, k)
    rng = random.Random(99)
    for _ in range(40):
        a = F.elt(rng.randrange(F.order))
        b = F.elt(rng.randrange(F.order))
        assert (a + b) ** p == a**p + b**p
        if a:
            assert a * a.inverse() == F.one


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def test_degree_multiplicative():
    F = make_field(5, 2)
    rng = random.Random(3)
    for _ in range(25):
        f = Polynomial(F, [F.elt(rng.randrange(25)) for _ in range(rng.randint(1, 6))])
        g = Polynomial(F, [F.elt(rng.randrange(25)) for _ in range(rng.randint(1, 6))])
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).degree == f.degree + g.degree


def test_root_multiplicity_examples():
    F5 = make_field(5, 1)
    f = Polynomial.from_roots(F5, [F5.elt(1)]) ** 3
    assert f.root_multiplicity(F5.elt(1)) == 3

    F25 = make_field(5, 2)
    a = F25.primitive
    frob = Polynomial.x(F25) ** 5 - Polynomial.constant(F25, a**5)
    assert frob.root_multiplicity(a) == 5  # X^p - a^p = (X - a)^p

    F3 = make_field(3, 1)
    g = Polynomial.x(F3) ** 2 + Polynomial.one(F3)
    assert g.root_multiplicity(F3.zero) == 0


def test_roots_sum_bounded_by_degree():
    F = make_field(3, 2)
    rng = random.Random(17)
    for _ in range(20):
        f = Polynomial(F, [F.elt(rng.randrange(9)) for _ in range(5)])
        if f.is_zero():
            continue
        total = sum(f.root_multiplicity(r) for r in f.distinct_roots_in_field())
        assert total <= f.degree
    # equality when f splits
    split = Polynomial.from_roots(F, [F.elt(i) for i in (2, 2, 5)])
    total = sum(split.root_multiplicity(r) for r in split.distinct_roots_in_field())
    assert total == split.degree


def test_squarefree_decomposition_char_p():
    F3 = make_field(3, 1)
    f = (Polynomial.from_roots(F3, [F3.elt(1)]) ** 6
         * Polynomial.from_roots(F3, [F3.elt(2)]) ** 2
         * Polynomial.x(F3))
    parts = {m: g.degree for g, m in f.squarefree_decomposition()}
    assert parts == {1: 1, 2: 1, 6: 1}


def test_fraction_canonicalization_idempotent():
    F = make_field(7, 1)
    num = Polynomial.from_roots(F, [F.elt(1), F.elt(2)]) * F.elt(3)
    den = Polynomial.from_roots(F, [F.elt(2), F.elt(4)]) * F.elt(5)
    z = RationalFraction(num, den)
    again = RationalFraction(z.num, z.den)
    assert z == again
    assert z.den.leading() == F.one
    assert z.num.gcd(z.den).degree == 0


def test_subfield_size():
    F = make_field(3, 4)
    sub = subfield_elements(F, 2)
    assert len(sub) == 9
    assert all((x**9) == x for x in sub)


def test_factorize():
    assert factorize(2 * 2 * 3 * 49) == {2: 2, 3: 1, 7: 2}
    assert factorize(1) == {}
