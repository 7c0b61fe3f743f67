import random

import pytest

from cycurve.field import Polynomial, RationalFraction, make_field
from cycurve.moebius import (
    BudgetExceeded,
    MoebiusMap,
    ReducedGroupSpec,
    closure,
    compose_fraction,
    field_for,
    generators,
    group_order,
)

DESK_SPECS = [
    (ReducedGroupSpec("Cm", p=13, m=4), 4),
    (ReducedGroupSpec("Cm", p=7, m=3), 3),
    (ReducedGroupSpec("D2m", p=7, m=2), 4),
    (ReducedGroupSpec("D2m", p=13, m=6), 12),
    (ReducedGroupSpec("A4", p=13), 12),
    (ReducedGroupSpec("S4", p=5), 24),
    (ReducedGroupSpec("A5", p=11), 60),
    (ReducedGroupSpec("A5", p=3), 60),
    (ReducedGroupSpec("U", p=3, t=1), 3),
    (ReducedGroupSpec("U", p=3, t=2), 9),
    (ReducedGroupSpec("Km", p=3, t=1, m=2), 6),
    (ReducedGroupSpec("Km", p=5, t=1, m=4), 20),
    (ReducedGroupSpec("PSL2", p=3, f=1), 12),
    (ReducedGroupSpec("PGL2", p=3, f=1), 24),
    (ReducedGroupSpec("PSL2", p=5, f=1), 60),
]


@pytest.mark.parametrize("spec,expected", DESK_SPECS,
                         ids=[f"{s.family}-p{s.p}-m{s.m}-t{s.t}-f{s.f}" for s, _ in DESK_SPECS])
def test_closure_matches_group_order(spec, expected):
    assert group_order(spec) == expected
    fld = field_for(spec)
    cl = closure(generators(spec, fld), expected=expected)
    assert len(cl) == expected
    assert all(m.determinant() for m in cl)


def test_closure_budget_trips_on_wrong_generators():
    F = make_field(13, 1)
    # x -> x+1 generates order 13, far beyond the claimed order 2
    with pytest.raises(BudgetExceeded):
        closure([MoebiusMap.translation(F.one)], expected=1, cap_factor=2)


def test_compose_fraction_examples():
    F7 = make_field(7, 1)
    x = Polynomial.x(F7)
    # z = x^2 under x -> -x
    z = RationalFraction(x**2)
    neg = MoebiusMap.scaling(-F7.one)
    assert compose_fraction(z, neg) == z
    # z = x^3 under x -> zeta_3 x
    from cycurve.field import nth_root_of_unity

    z3 = RationalFraction(x**3)
    rot = MoebiusMap.scaling(nth_root_of_unity(F7, 3))
    assert compose_fraction(z3, rot) == z3
    # z = x + 1/x invariant under x -> 1/x
    z_inv = RationalFraction(x**2 + Polynomial.one(F7), x)
    assert compose_fraction(z_inv, MoebiusMap.inversion(F7)) == z_inv
    # and x^m not fixed by a translation
    trans = MoebiusMap.translation(F7.one)
    assert compose_fraction(z3, trans) != z3


def test_compose_fraction_functorial():
    """compose(compose(z, m1), m2) == compose(z, m2 . m1) on random triples."""
    for p, k in ((7, 1), (5, 2)):
        F = make_field(p, k)
        rng = random.Random(p * 100 + k)

        def rand_map():
            while True:
                vals = [F.elt(rng.randrange(F.order)) for _ in range(4)]
                try:
                    return MoebiusMap(*vals)
                except ValueError:
                    continue

        for _ in range(50):
            num = Polynomial(F, [F.elt(rng.randrange(F.order)) for _ in range(4)])
            den = Polynomial(F, [F.elt(rng.randrange(F.order)) for _ in range(3)])
            if num.is_zero() or den.is_zero():
                continue
            z = RationalFraction(num, den)
            m1, m2 = rand_map(), rand_map()
            lhs = compose_fraction(compose_fraction(z, m1), m2)
            rhs = compose_fraction(z, m1.compose(m2))
            assert lhs == rhs


def test_d2m_generator_orders():
    # resolved reading: sigma has order m, t order 2, closure exactly 2m
    spec = ReducedGroupSpec("D2m", p=13, m=6)
    fld = field_for(spec)
    sigma, t = generators(spec, fld)
    assert sigma.projective_order() == 6
    assert t.projective_order() == 2
    assert len(closure([sigma, t], expected=12)) == 12


def test_u_generators_are_translations():
    spec = ReducedGroupSpec("U", p=3, t=1)
    fld = field_for(spec)
    gens = generators(spec, fld)
    assert len(gens) == 1
    g = gens[0]
    assert (g.a, g.c, g.d) == (fld.one, fld.zero, fld.one) and g.b


def test_cm_example_single_rotation():
    spec = ReducedGroupSpec("Cm", p=7, m=3)
    fld = field_for(spec)
    gens = generators(spec, fld)
    assert len(gens) == 1
    assert gens[0].projective_order() == 3
