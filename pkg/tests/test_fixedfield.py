import pytest

from cycurve.field import make_field
from cycurve.fixedfield import (
    build_z,
    different_exponent,
    fiber_points_in_field,
    field_for_row,
    hurwitz_count_closes,
    ramification_profile,
    verify_invariance,
)
from cycurve.moebius import ReducedGroupSpec, compose_fraction, generators

# a fast representative slice of the verification grid; the full grid runs
# in tests/test_acceptance.py
ROWS = [
    (ReducedGroupSpec("Cm", p=11, m=5), (5, 5)),
    (ReducedGroupSpec("D2m", p=13, m=3), (3, 2, 2)),
    (ReducedGroupSpec("A4", p=13), (3, 3, 2)),
    (ReducedGroupSpec("S4", p=5), (4, 3, 2)),
    (ReducedGroupSpec("A5", p=11), (5, 3, 2)),
    (ReducedGroupSpec("A5", p=3), (6, 5)),
    (ReducedGroupSpec("U", p=3, t=1), (3,)),
    (ReducedGroupSpec("Km", p=3, t=1, m=2), (6, 2)),
    (ReducedGroupSpec("PSL2", p=3, f=1), (3, 2)),
    (ReducedGroupSpec("PGL2", p=3, f=1), (6, 4)),
]


@pytest.mark.parametrize("spec,expected", ROWS,
                         ids=[f"{s.family}-p{s.p}" for s, _ in ROWS])
def test_row_verifies(spec, expected):
    fld = field_for_row(spec)
    rec = build_z(spec, fld)
    assert rec.z.degree == rec.expected_degree
    assert verify_invariance(rec, fld)
    assert ramification_profile(rec, fld) == tuple(sorted(expected, reverse=True))
    assert hurwitz_count_closes(rec, fld)


def test_translation_does_not_fix_power():
    from cycurve.field import Polynomial, RationalFraction
    from cycurve.moebius import MoebiusMap

    F = make_field(7, 1)
    z = RationalFraction(Polynomial.x(F) ** 3)
    rec_like = compose_fraction(z, MoebiusMap.translation(F.one))
    assert rec_like != z


def test_u_row_explicit_fibers():
    # z = x^3 - x over GF(3): finite fibers are separable, infinity is total
    spec = ReducedGroupSpec("U", p=3, t=1)
    fld = field_for_row(spec)
    rec = build_z(spec, fld)
    big = make_field(3, 3)  # GF(27)
    for z0_idx in range(3):
        pts = fiber_points_in_field(rec, big.elt(z0_idx), big)
        assert sorted(m for _, m in pts) == [1, 1, 1]
    inf_fiber = fiber_points_in_field(rec, None, fld)
    assert inf_fiber == [(None, 3)]


def test_fiber_size_conservation_nonbranch():
    # D2m row over GF(13): any non-branch value has deg z distinct points
    # once the fiber splits
    from cycurve.fixedfield import IncompleteSplitting

    spec = ReducedGroupSpec("D2m", p=13, m=3)
    fld = field_for_row(spec)
    rec = build_z(spec, fld)
    checked = 0
    for idx in range(3, 9):
        for e in range(1, 7):
            big = make_field(13, e)
            try:
                pts = fiber_points_in_field(rec, big.elt(idx), big)
            except IncompleteSplitting:
                continue
            break
        else:
            raise AssertionError("fiber never split")
        if all(m == 1 for _, m in pts):
            assert len(pts) == rec.z.degree
            checked += 1
    assert checked >= 3


def test_different_exponents():
    assert different_exponent(5, 0) == 4          # tame
    assert different_exponent(6, 3) == 2 * 3 + 3 - 2  # wild, e* = 2, q1 = 3
    assert different_exponent(9, 3) == 1 * 9 + 9 - 2  # q1 = 9, e* = 1
    assert different_exponent(4, 7) == 3


def test_a4_rejected_in_char_3():
    with pytest.raises(ValueError):
        ReducedGroupSpec("A4", p=3)
