import pytest
from hypothesis import given, settings, strategies as st

from cycurve.presentations import (
    GroupPresentation,
    exponent_orbits,
    group_for,
    legal_exponents,
    lemma2_central,
    metacyclic,
    parse_presentation,
    second_cohomology_order,
    sl23_presentation,
)
from cycurve.realize import fingerprint, realize


def test_legal_exponents_examples():
    assert legal_exponents(5, 2) == [1, 4]
    assert legal_exponents(7, 3) == [1, 2, 4]
    assert legal_exponents(4, 3) == [1]


@given(st.integers(2, 40), st.integers(1, 8))
@settings(max_examples=80, deadline=None)
def test_legal_exponents_property(n, ord_):
    import math

    ls = legal_exponents(n, ord_)
    assert 1 in ls
    for l in ls:
        assert math.gcd(l, n) == 1 and pow(l, ord_, n) == 1
    if ord_ % 2 == 0:
        assert n - 1 in ls or n <= 2  # l = n-1 qualifies for even order


def test_exponent_orbits():
    # n=9, ord=3: 4 and 7 are related by l -> l^2
    orbits = exponent_orbits([1, 4, 7], 9, 3)
    assert orbits == [[1], [4, 7]]


def test_second_cohomology_values():
    assert second_cohomology_order("Cm", 6, m=4) == 2
    assert second_cohomology_order("D2m", 5, m=4) == 1
    assert second_cohomology_order("D2m", 4, m=3) == 2
    assert second_cohomology_order("D2m", 4, m=4) == 8
    assert second_cohomology_order("A4", 6) == 6
    assert second_cohomology_order("S4", 6) == 4
    assert second_cohomology_order("A5", 7) == 1
    assert second_cohomology_order("PSL2", 4, q=9, p=3) == 2
    assert second_cohomology_order("PSL2", 6, q=9, p=3) == 6
    assert second_cohomology_order("PGL2", 6, q=5, p=5) == 4
    with pytest.raises(ValueError):
        second_cohomology_order("U", 2)


def test_lemma2():
    assert lemma2_central(2) and lemma2_central(4) and lemma2_central(8)
    assert not lemma2_central(7)    # 3 | 7 - 1
    assert not lemma2_central(14)


def test_dispatch_examples():
    # case 2: always cyclic
    (desc,) = group_for("2", 3, 4)
    assert desc.kind == "cyclic" and desc.order == 12
    # case 6, n and m even: dihedral of order 2mn
    (desc,) = group_for("6", 2, 4)
    assert desc.kind == "dihedral" and desc.order == 16
    # case 40/41 with q = 3, n = 2: SL(2,3)
    (desc,) = group_for("40", 2, q=3, p=3)
    assert desc.kind == "sl23" and desc.order == 24
    assert group_for("40", 2, q=5, p=5) == []
    assert group_for("44", 2, q=3, p=3) == []
    assert group_for("c", 2, p=3) == []
    # cases 5 and 8 with n even, m odd: nothing
    assert group_for("5", 2, 3) == []
    assert group_for("8", 4, 5) == []
    # A4 cases 11/14 with n an odd multiple of 3: nothing
    assert group_for("11", 9) == []
    assert group_for("14", 3) == []
    # q = 9 rows are emitted unresolved
    (desc,) = group_for("38", 2, q=9, p=3)
    assert desc.kind == "unresolved"


def test_case1_exponent_policy():
    # coprime (m, n) with l = n-1 legal: only the pinned orbit
    descs = group_for("1", 5, 4)
    assert [d.name for d in descs] == ["C5:C4(l=4)"]
    # coprime, odd m, n-1 illegal: all nontrivial orbits
    descs = group_for("1", 7, 3)
    assert len(descs) == 1 and "l=2" in descs[0].name
    # coprime with no twisted exponent at all: no group
    assert group_for("1", 5, 3) == []
    # shared factor with no twisted exponent: the plain product survives
    descs = group_for("1", 3, 3)
    assert len(descs) == 1
    fp = fingerprint(realize(descs[0].presentation, 9))
    assert fp.abelian_invariants == (3, 3)
    # shared factor with a twisted exponent: product dropped
    descs = group_for("1", 3, 6)
    assert len(descs) == 1 and "l=2" in descs[0].name


def test_km_g35_matches_case34_when_coprime():
    # the stated isomorphism note: (n, m) = 1 makes G35 the case-34 group
    d34 = group_for("34", 3, m=2, t=1, p=5)
    d35 = group_for("35", 3, m=2, t=1, p=5)
    assert len(d34) == 1 and len(d35) == 1
    fp34 = fingerprint(realize(d34[0].presentation, d34[0].order))
    fp35 = fingerprint(realize(d35[0].presentation, d35[0].order))
    assert fp34 == fp35


def test_presentation_text_round_trip():
    pres = sl23_presentation()
    text = pres.serialize()
    back = parse_presentation(text)
    assert back.generators == pres.generators
    assert back.relators == pres.relators


def test_presentation_validation():
    with pytest.raises(ValueError):
        GroupPresentation(("a",), ((("b", 1),),))
    with pytest.raises(ValueError):
        GroupPresentation(("a",), ((("a", 0),),))


def test_metacyclic_relators():
    pres = metacyclic(6, 2, 5)
    assert pres.generators == ("r", "s")
    assert (("r", 6),) in pres.relators


def test_h2_bounds_extension_counts():
    # distinct fingerprints per family at fixed n never exceed |H^2| for the
    # central-extension families
    from cycurve.presentations import product_with_cn, _central_ext

    n = 2
    a4_groups = {fingerprint(realize(product_with_cn("A4", n), 24)).key(),
                 fingerprint(realize(
                     _central_ext("A4", n, {"s": 1, "t": 1, "st": 1}), 24)).key()}
    assert len(a4_groups) <= second_cohomology_order("A4", n)
    a5_groups = {fingerprint(realize(product_with_cn("A5", n), 120)).key(),
                 fingerprint(realize(
                     _central_ext("A5", n, {"s": 1, "t": 1, "st": 1}), 120)).key()}
    assert len(a5_groups) <= second_cohomology_order("A5", n)
