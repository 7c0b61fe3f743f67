import random
from fractions import Fraction

import pytest

from cycurve.hurwitz import (
    ADJUDICATIONS,
    CASES,
    RamifiedPlace,
    WildLegalityError,
    delta_closed,
    delta_oracle,
    places_of,
    signature_of,
)


def test_case_table_complete():
    assert len(CASES) == 49
    assert set(CASES) == {str(i) for i in range(1, 46)} | {"a", "b", "c", "d"}


def test_branch_count_offsets():
    # r = delta + 3 forces n_copies = 3 - #fixed classes
    for case in CASES.values():
        assert case.n_copies_offset == 3 - len(case.fixed_classes)
        assert case.n_copies_offset in (0, 1, 2)


# frozen examples, recomputed by hand from the displayed equations
def test_frozen_dimension_examples():
    assert delta_closed("1", 2, 2, 2) == 2
    assert delta_oracle("1", 2, 2, 2) == 2
    assert delta_closed("4", 3, 2, 4) == 1
    assert delta_oracle("4", 3, 2, 4) == 1
    assert delta_closed("10", 7, 2) == Fraction(4, 3)  # rejected downstream
    assert delta_closed("a", 31, 2, p=3) == Fraction(1, 15)
    # case 32 uses the wild term (p^t + p^t - 2)/p^t
    assert delta_oracle("32", 3, 2, t=1, p=3) == delta_closed("32", 3, 2, t=1, p=3)


def test_signature_examples():
    assert signature_of("4", 1, 2, 4).classes == (2, 2, 4, 2)
    assert signature_of("1", 2, 2, 2).classes == (2, 2, 2, 2, 2)
    assert signature_of("32", 0, 2, t=1, p=3).classes == (3, 2, 2)
    with pytest.raises(ValueError):
        signature_of("4", -1, 2, 4)


def test_signature_entries_at_least_two():
    with pytest.raises(ValueError):
        # case 1 at m = 1 would print unit entries; params_ok refuses it
        from cycurve.hurwitz import Signature

        Signature((1, 2, 2))
    assert not CASES["1"].params_ok(_params(g=3, n=2, m=1))
    assert CASES["3"].params_ok(_params(g=3, n=2, m=1))


def _params(**kw):
    from cycurve.hurwitz import Params

    return Params(**{"g": 2, "n": 2, **kw})


def test_adjudications_present():
    assert set(ADJUDICATIONS) == {"2", "36", "b"}


def test_case36_table_beats_proof_line():
    # proof's final line prints 2g + nmp^t - p^t, which fails its own
    # equation; nm | p^t - 1 needs t = 2 here (nm = 4 divides 3^2 - 1)
    g, n, m, t, p = 7, 2, 2, 2, 3
    pt = p**t
    wrong = Fraction(2 * g + n * m * pt - pt, m * pt * (n - 1)) - 1
    right = delta_oracle("36", g, n, m, t, 0, p)
    assert delta_closed("36", g, n, m, t, 0, p) == right
    assert wrong != right


def test_case_b_proof_beats_table():
    g, n = 14, 2
    printed_table = Fraction(g + 5 * n - 5, 30 * (n - 1)) - 1
    right = delta_oracle("b", g, n, p=3)
    assert delta_closed("b", g, n, p=3) == right
    assert printed_table != right


def test_monotone_in_genus():
    rng = random.Random(5)
    for cid in ("1", "5", "16", "27", "34", "39", "42"):
        n = rng.randint(2, 6)
        m = rng.randint(2, 5)
        kw = {}
        if CASES[cid].family == "Km":
            kw = dict(m=2, t=1, p=3)
            if n % 3 == 0:
                n += 1
        elif CASES[cid].family in ("PSL2", "PGL2"):
            kw = dict(q=5, p=5)
            if n % 5 == 0:
                n += 1
        elif CASES[cid].family in ("Cm", "D2m"):
            kw = dict(m=m)
        prev = None
        for g in range(2, 30):
            val = delta_closed(cid, g, n, **kw)
            if prev is not None:
                assert val >= prev
            prev = val


def test_wild_legality_forces_small_n():
    # cases 40-41: e* = n(q-1)/2 must divide q-1, so n <= 2
    assert places_of("40", 5, 2, q=3, p=3)
    for n in (3, 4, 5, 6):
        with pytest.raises(WildLegalityError):
            places_of("40", 5, n, q=3, p=3)
    # cases 44-45 and c-d: only n = 1 would be legal
    for cid, kw in (("44", dict(q=3, p=3)), ("45", dict(q=3, p=3)),
                    ("c", dict(p=3)), ("d", dict(p=3))):
        for n in range(2, 7):
            if kw.get("p") and n % kw["p"] == 0:
                continue
            with pytest.raises(WildLegalityError):
                places_of(cid, 5, n, **kw)


def test_wild_place_different_exponent():
    place = RamifiedPlace(6, 3).validate()
    assert place.wild and place.e_star == 2 and place.q1 == 3
    assert place.different_exponent == 2 * 3 + 3 - 2
    tame = RamifiedPlace(6, 0)
    assert not tame.wild and tame.different_exponent == 5
