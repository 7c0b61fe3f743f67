"""Abstract groups attached to the admissible cases: direct products, the
finitely presented central extensions, and the exponent bookkeeping for
conjugation twists (s r s^-1 = r^l).

Presentation text format (also parsed back by `parse_presentation`):

    gens: r s t
    r^6
    s^2 r^-3
    s t s t

One generator-list line, then one relator word per line; a word is a
juxtaposition of tokens `g` or `g^e` (e a possibly negative integer), and
every relator equals the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

Word = tuple[tuple[str, int], ...]


class NoExtension(ValueError):
    """The theorems assign no group to this (case, parameters) pair."""


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    name: str = ""

    def __post_init__(self):
        gens = set(self.generators)
        for rel in self.relators:
            for g, e in rel:
                if g not in gens:
                    raise ValueError(f"relator uses unknown generator {g!r}")
                if e == 0:
                    raise ValueError("zero exponent in relator word")

    def serialize(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        for rel in self.relators:
            lines.append(" ".join(g if e == 1 else f"{g}^{e}" for g, e in rel))
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> GroupPresentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("gens:"):
        raise ValueError("first line must be 'gens: <names>'")
    gens = tuple(lines[0][5:].split())
    relators = []
    for ln in lines[1:]:
        word = []
        for tok in ln.split():
            tok = tok.replace("⁻¹", "^-1")
            if "^" in tok:
                g, e = tok.split("^", 1)
                word.append((g, int(e)))
            else:
                word.append((tok, 1))
        relators.append(tuple(word))
    return GroupPresentation(gens, tuple(relators))


def _w(*parts) -> Word:
    """Build a word from (gen, exp) pairs, dropping zero exponents."""
    return tuple((g, e) for g, e in parts if e != 0)


def _power(word: Word, k: int) -> Word:
    return word * k


@dataclass(frozen=True)
class GroupDescriptor:
    """A group assigned to a case: structural name + optional presentation.

    kind: cyclic | dihedral | product | presented | sl23 | unresolved
    """

    kind: str
    name: str
    order: int
    provenance: str
    presentation: Optional[GroupPresentation] = None

    def realizable(self) -> bool:
        return self.presentation is not None


# -- exponent bookkeeping ---------------------------------------------------------


def legal_exponents(n: int, ord_: int) -> list[int]:
    """All l in [1, n] with gcd(l, n) = 1 and l^ord = 1 (mod n), increasing."""
    if n < 2:
        return [1] if n == 1 else []
    return [l for l in range(1, n + 1) if math.gcd(l, n) == 1 and pow(l, ord_, n) == 1]


def exponent_orbits(ls: list[int], n: int, ord_: int) -> list[list[int]]:
    """Orbits of the exponent list under l -> l^j for j coprime to ord_.

    Replacing the conjugating generator s by an equivalent power rewrites
    l to l^j, so one group is emitted per orbit.
    """
    js = [j for j in range(1, ord_ + 1) if math.gcd(j, ord_) == 1]
    seen: set[int] = set()
    orbits = []
    for l in sorted(ls):
        if l in seen:
            continue
        orb = sorted({pow(l, j, n) for j in js} or {l % n})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def second_cohomology_order(family: str, n: int, m: int = 0, q: int = 0, p: int = 0) -> int:
    """|H^2(Gbar, C_n)| as quoted data (an upper bound on extension classes)."""
    if family == "Cm":
        return math.gcd(n, m)
    if family == "D2m":
        if n % 2 == 1:
            return 1
        return 2 if m % 2 == 1 else 8
    if family == "A4":
        return math.gcd(n, 2) * math.gcd(n, 3)
    if family == "S4":
        return math.gcd(n, 2) ** 2
    if family in ("A5", "A5p3"):
        return math.gcd(n, 2)
    if family == "PSL2":
        if p == 2 and q != 4:
            return 1
        if q == 9:
            return math.gcd(6, n)
        return math.gcd(2, n)
    if family == "PGL2":
        return math.gcd(n, 2) ** 2
    raise ValueError(f"no quoted second-cohomology formula for family {family}")


def lemma2_central(n: int) -> bool:
    """Extensions of A4 by C_n are central when 3 divides no p_i - 1 over the
    prime factorization of n."""
    from .field import factorize

    return all((pi - 1) % 3 != 0 for pi in factorize(n))


# -- presentation builders ---------------------------------------------------------


def metacyclic(n: int, m: int, l: int, name: str = "") -> GroupPresentation:
    """<r, s | r^n, s^m, s r s^-1 r^-l>."""
    rel = (
        _w(("r", n)),
        _w(("s", m)),
        _w(("s", 1), ("r", 1), ("s", -1), ("r", -l)),
    )
    return GroupPresentation(("r", "s"), rel, name or f"C{n}:C{m}(l={l})")


def cyclic_presentation(k: int) -> GroupPresentation:
    return GroupPresentation(("r",), (_w(("r", k)),), f"C{k}")


def dihedral_presentation(order: int) -> GroupPresentation:
    m = order // 2
    rel = (_w(("s", 2)), _w(("t", 2)), _power(_w(("s", 1), ("t", 1)), m))
    return GroupPresentation(("s", "t"), rel, f"D{order}")


_TRIANGLE = {"D2m": None, "A4": 3, "S4": 4, "A5": 5}


def _triangle_relators(family: str, m: int = 0) -> tuple[Word, ...]:
    """s, t relators of the base two-generator presentation of Gbar."""
    if family == "D2m":
        return (_w(("s", 2)), _w(("t", 2)), _power(_w(("s", 1), ("t", 1)), m))
    k = _TRIANGLE[family]
    torder = 3
    return (_w(("s", 2)), _w(("t", torder)), _power(_w(("s", 1), ("t", 1)), k))


def product_with_cn(family: str, n: int, m: int = 0, p: int = 0, t: int = 0,
                    name: str = "", km_k: int = 1) -> Optional[GroupPresentation]:
    """Presentation of Gbar x C_n for the realizable families (None for PSL/PGL)."""
    if family in ("D2m", "A4", "S4", "A5", "A5p3"):
        base = _triangle_relators("D2m" if family == "D2m" else family.replace("p3", ""), m)
        rel = [_w(("r", n))] + list(base)
        rel.append(_w(("s", 1), ("r", 1), ("s", -1), ("r", -1)))
        rel.append(_w(("t", 1), ("r", 1), ("t", -1), ("r", -1)))
        return GroupPresentation(("r", "s", "t"), tuple(rel), name)
    if family == "U":
        gens = ["r"] + [f"s{i}" for i in range(1, t + 1)]
        rel = [_w(("r", n))]
        for i in range(1, t + 1):
            rel.append(_w((f"s{i}", p)))
            rel.append(_w((f"s{i}", 1), ("r", 1), (f"s{i}", -1), ("r", -1)))
            for j in range(i + 1, t + 1):
                rel.append(_w((f"s{i}", 1), (f"s{j}", 1), (f"s{i}", -1), (f"s{j}", -1)))
        return GroupPresentation(tuple(gens), tuple(rel), name)
    return None


def _central_ext(family: str, n: int, shifts: dict[str, int], l: int = 1,
                 conj_gen: str = "t", name: str = "", m: int = 0) -> GroupPresentation:
    """<r, s, t | r^n, s^2 r^-a, t^T r^-b, (st)^K r^-c, conjugation twists>.

    shifts maps 's', 't', 'st' to the exponent of r on the right-hand side.
    The non-twisted generator centralizes r; conj_gen acts by r -> r^l.
    """
    if family == "D2m":
        t_ord, k_ord = 2, m
    elif family == "A4":
        t_ord, k_ord = 3, 3
    elif family == "S4":
        t_ord, k_ord = 3, 4
    else:  # A5
        t_ord, k_ord = 3, 5
    rel = [
        _w(("r", n)),
        _w(("s", 2), ("r", -shifts.get("s", 0))),
        _w(("t", t_ord), ("r", -shifts.get("t", 0))),
        _power(_w(("s", 1), ("t", 1)), k_ord) + _w(("r", -shifts.get("st", 0))),
    ]
    for g in ("s", "t"):
        e = l if g == conj_gen else 1
        rel.append(_w((g, 1), ("r", 1), (g, -1), ("r", -e)))
    return GroupPresentation(("r", "s", "t"), tuple(rel), name)


def u_extension(n: int, p: int, t: int, l: int, name: str = "") -> GroupPresentation:
    """Case-32 group: <r, s_1..s_t | r^n = s_i^p = 1, [s_i, s_j], s_i r s_i^-1 = r^l>."""
    gens = ["r"] + [f"s{i}" for i in range(1, t + 1)]
    rel = [_w(("r", n))]
    for i in range(1, t + 1):
        rel.append(_w((f"s{i}", p)))
        rel.append(_w((f"s{i}", 1), ("r", 1), (f"s{i}", -1), ("r", -l)))
        for j in range(i + 1, t + 1):
            rel.append(_w((f"s{i}", 1), (f"s{j}", 1), (f"s{i}", -1), (f"s{j}", -1)))
    return GroupPresentation(tuple(gens), tuple(rel), name)


def km_case34(n: int, m: int, p: int, t: int, l: int, k: int, name: str = "") -> GroupPresentation:
    """Case-34 group, with the conjugations exactly as printed:
    v r v^-1 = r, s_i r s_i^-1 = r^l, s_i v s_i^-1 = v^k."""
    gens = ["r"] + [f"s{i}" for i in range(1, t + 1)] + ["v"]
    rel = [_w(("r", n)), _w(("v", m)), _w(("v", 1), ("r", 1), ("v", -1), ("r", -1))]
    for i in range(1, t + 1):
        rel.append(_w((f"s{i}", p)))
        rel.append(_w((f"s{i}", 1), ("r", 1), (f"s{i}", -1), ("r", -l)))
        rel.append(_w((f"s{i}", 1), ("v", 1), (f"s{i}", -1), ("v", -k)))
        for j in range(i + 1, t + 1):
            rel.append(_w((f"s{i}", 1), (f"s{j}", 1), (f"s{i}", -1), (f"s{j}", -1)))
    return GroupPresentation(tuple(gens), tuple(rel), name)


def sl23_presentation() -> GroupPresentation:
    """Binary tetrahedral presentation <s, t | s^3 = t^3 = (st)^2>."""
    st2 = _power(_w(("s", 1), ("t", 1)), 2)
    inv = tuple((g, -e) for g, e in reversed(st2))
    rel = (_w(("s", 3)) + inv, _w(("t", 3)) + inv)
    return GroupPresentation(("s", "t"), rel, "SL(2,3)")


# -- the theorem dispatch -----------------------------------------------------------


def group_for(case_id: str, n: int, m: int = 0, t: int = 0, q: int = 0,
              p: int = 0) -> list[GroupDescriptor]:
    """Every group the theorems assign to the (admissible) case instance.

    A list because conjugation-exponent classes can yield several
    non-isomorphic extensions; empty when the theorems rule the case out.
    """
    from .hurwitz import CASES

    family = CASES[case_id].family
    half = n // 2

    if family == "Cm":
        return _cm_groups(case_id, n, m)

    if family == "D2m":
        return _d2m_groups(case_id, n, m)

    if family == "A4":
        return _a4_groups(case_id, n)

    if family == "S4":
        return _s4_groups(case_id, n)

    if family == "A5":
        if n % 2 == 1 or case_id in ("24", "25", "26", "27"):
            pres = product_with_cn("A5", n, name=f"A5 x C{n}")
            return [GroupDescriptor("product", f"A5 x C{n}", 60 * n, "Thm 3.6", pres)]
        pres = _central_ext("A5", n, {"s": half, "t": half, "st": half},
                            name=f"A5 central ext (n={n})")
        return [GroupDescriptor("presented", f"(A5 x C{n}) twisted", 60 * n, "Thm 3.6", pres)]

    if family == "U":
        if case_id == "32":
            out = []
            for orb in exponent_orbits(legal_exponents(n, p), n, p):
                l = orb[0]
                pres = u_extension(n, p, t, l, name=f"U ext l={l}")
                out.append(GroupDescriptor(
                    "presented", f"C{p}^{t} ext C{n} (l={l})", n * p**t, "Thm 3.7(1)", pres))
            return out
        pres = product_with_cn("U", n, p=p, t=t, name=f"C{p}^{t} x C{n}")
        return [GroupDescriptor("product", f"C{p}^{t} x C{n}", n * p**t, "Thm 3.7(2)", pres)]

    if family == "Km":
        pt = p**t
        if case_id == "34":
            out = []
            for orb_l in exponent_orbits(legal_exponents(n, p), n, p):
                for orb_k in exponent_orbits(legal_exponents(m, p), m, p):
                    l, k = orb_l[0], orb_k[0]
                    pres = km_case34(n, m, p, t, l, k, name=f"K{m} ext l={l},k={k}")
                    out.append(GroupDescriptor(
                        "presented", f"K{m}(p^{t}) ext C{n} (l={l},k={k})",
                        n * m * pt, "Thm 3.8(1)", pres))
            return out
        out = []
        for orb in exponent_orbits(legal_exponents(n * m, p), n * m, p):
            l = orb[0]
            pres = u_extension(n * m, p, t, l, name=f"G35 l={l}")
            out.append(GroupDescriptor(
                "presented", f"G35(nm={n * m}, p^{t}) (l={l})", n * m * pt,
                "Thm 3.8(2)", pres))
        return out

    if family == "PSL2":
        M = (q * (q - 1) * (q + 1)) // 2
        if q == 9:
            return [GroupDescriptor("unresolved", "unresolved (q = 9)", n * M,
                                    "Thm 3.9 scope excludes q = 9")]
        if case_id in ("38", "39"):
            return [GroupDescriptor("product", f"PSL(2,{q}) x C{n}", n * M, "Thm 3.9(1)")]
        if q == 3 and n == 2:
            return [GroupDescriptor("sl23", "SL(2,3)", 24, "Thm 3.9(2)", sl23_presentation())]
        return []

    if family == "PGL2":
        M = q * (q - 1) * (q + 1)
        if case_id in ("42", "43"):
            return [GroupDescriptor("product", f"PGL(2,{q}) x C{n}", n * M, "Thm 3.10")]
        return []

    if family == "A5p3":
        if case_id in ("a", "b"):
            pres = product_with_cn("A5", n, name=f"A5 x C{n}")
            return [GroupDescriptor("product", f"A5 x C{n}", 60 * n, "Thm 3.12", pres)]
        return []

    raise ValueError(family)


def _cm_groups(case_id: str, n: int, m: int) -> list[GroupDescriptor]:
    if case_id in ("2", "3"):
        k = m * n
        return [GroupDescriptor("cyclic", f"C{k}", k, "Thm 3.2(2)",
                                cyclic_presentation(k))]
    # case 1: metacyclic with l != 1; l = 1 (the plain product) only当 no
    # twisted exponent exists at all and m, n share a factor.
    ls = [l for l in legal_exponents(n, m) if l != 1]
    tag = "Thm 3.2(1)"
    if math.gcd(m, n) == 1:
        if not ls:
            return []  # C_{mn} would have an order-mn element, excluded here
        if pow(n - 1, m, n) == 1 % n:
            ls = [n - 1]  # the paper pins l = n - 1 when coprime
    out = []
    if ls:
        for orb in exponent_orbits(ls, n, m):
            l = orb[0]
            out.append(GroupDescriptor(
                "presented", f"C{n}:C{m}(l={l})", n * m, tag, metacyclic(n, m, l)))
        return out
    # gcd(m, n) > 1 and only l = 1 legal: the untwisted product
    return [GroupDescriptor("presented", f"C{n} x C{m}", n * m, tag,
                            metacyclic(n, m, 1))]


def _d2m_groups(case_id: str, n: int, m: int) -> list[GroupDescriptor]:
    half = n // 2
    prov = "Thm 3.3"
    if n % 2 == 1:
        pres = product_with_cn("D2m", n, m=m, name=f"D{2 * m} x C{n}")
        return [GroupDescriptor("product", f"D{2 * m} x C{n}", 2 * m * n, prov + "(1)", pres)]
    if m % 2 == 1:
        if case_id in ("5", "8"):
            return []
        if case_id in ("4", "6"):
            pres = product_with_cn("D2m", n, m=m, name=f"D{2 * m} x C{n}")
            return [GroupDescriptor("product", f"D{2 * m} x C{n}", 2 * m * n, prov + "(2)", pres)]
        # cases 7, 9
        shifts = {"s": 1, "t": n - 1, "st": half if case_id == "9" else 0}
        pres = _central_ext("D2m", n, shifts, m=m, name=f"G{case_id}(n={n},m={m})")
        return [GroupDescriptor("presented", f"G9-type case {case_id}", 2 * m * n,
                                prov + "(2)", pres)]
    # n even, m even
    builders = {
        "4": None,
        "5": {"s": 1, "t": 0, "st": 0, "twist": n - 1},
        "6": "dihedral",
        "7": {"s": 1, "t": n - 1, "st": 0, "twist": 1},
        "8": {"s": 1, "t": 0, "st": half, "twist": n - 1},
        "9": {"s": 1, "t": n - 1, "st": half, "twist": 1},
    }
    spec = builders[case_id]
    if spec is None:
        pres = product_with_cn("D2m", n, m=m, name=f"D{2 * m} x C{n}")
        return [GroupDescriptor("product", f"D{2 * m} x C{n}", 2 * m * n, prov + "(3)", pres)]
    if spec == "dihedral":
        return [GroupDescriptor("dihedral", f"D{2 * m * n}", 2 * m * n, prov + "(3)",
                                dihedral_presentation(2 * m * n))]
    shifts = {k: v for k, v in spec.items() if k in ("s", "t", "st")}
    pres = _central_ext("D2m", n, shifts, l=spec["twist"], conj_gen="t", m=m,
                        name=f"G{case_id}(n={n},m={m})")
    return [GroupDescriptor("presented", f"G{case_id}", 2 * m * n, prov + "(3)", pres)]


_A4_SHIFTS = {
    "10": {},
    "11": {"t": 1},
    "12": {"t": 1, "st": 1},
    "13": {"s": 1},
    "14": {"s": 1, "t": 1},
    "15": {"s": 1, "t": 1, "st": 1},
}


def _a4_groups(case_id: str, n: int) -> list[GroupDescriptor]:
    prov = "Thm 3.4"
    if n % 2 == 1 and n % 3 != 0:
        pres = product_with_cn("A4", n, name=f"A4 x C{n}")
        return [GroupDescriptor("product", f"A4 x C{n}", 12 * n, prov + "(1)", pres)]
    if n % 2 == 1:  # odd multiple of 3: the primed groups
        if case_id in ("11", "14"):
            return []
        third = n // 3
        shifts = {g: third * v for g, v in _A4_SHIFTS[case_id].items()}
        out = []
        for orb in exponent_orbits(legal_exponents(n, 3), n, 3):
            l = orb[0]
            pres = _central_ext("A4", n, shifts, l=l, conj_gen="t",
                                name=f"G'{case_id}(n={n},l={l})")
            out.append(GroupDescriptor("presented", f"G'{case_id}(l={l})", 12 * n,
                                       prov + "(2)", pres))
        return out
    if n % 3 != 0 and lemma2_central(n):
        if case_id == "10":
            pres = product_with_cn("A4", n, name=f"A4 x C{n}")
            return [GroupDescriptor("product", f"A4 x C{n}", 12 * n, prov + "(3)", pres)]
        half = n // 2
        pres = _central_ext("A4", n, {"s": half, "t": half, "st": half},
                            name=f"A4 twisted ext (n={n})")
        return [GroupDescriptor("presented", f"(A4 x C{n}) twisted", 12 * n,
                                prov + "(3)", pres)]
    # n even, (multiple of 3 or Lemma 2 fails): G_10 - G_15
    half = n // 2
    shifts = {g: half * v for g, v in _A4_SHIFTS[case_id].items()}
    out = []
    for orb in exponent_orbits(legal_exponents(n, 3), n, 3):
        k = orb[0]
        pres = _central_ext("A4", n, shifts, l=k, conj_gen="t",
                            name=f"G{case_id}(n={n},k={k})")
        out.append(GroupDescriptor("presented", f"G{case_id}(k={k})", 12 * n,
                                   prov + "(4)", pres))
    return out


_S4_SHIFTS = {
    "16": {},
    "17": {"t": 1},
    "18": {"st": 1},
    "19": {"t": 1, "st": 1},
    "20": {"s": 1},
    "21": {"s": 1, "t": 1},
    "22": {"s": 1, "st": 1},
    "23": {"s": 1, "t": 1, "st": 1},
}


def _s4_groups(case_id: str, n: int) -> list[GroupDescriptor]:
    prov = "Thm 3.5"
    if n % 2 == 1:
        pres = product_with_cn("S4", n, name=f"S4 x C{n}")
        return [GroupDescriptor("product", f"S4 x C{n}", 24 * n, prov + "(1)", pres)]
    half = n // 2
    shifts = {g: half * v for g, v in _S4_SHIFTS[case_id].items()}
    out = []
    for orb in exponent_orbits(legal_exponents(n, 2), n, 2):
        l = orb[0]
        pres = _central_ext("S4", n, shifts, l=l, conj_gen="s",
                            name=f"G{case_id}(n={n},l={l})")
        out.append(GroupDescriptor("presented", f"G{case_id}(l={l})", 24 * n,
                                   prov + "(2)", pres))
    return out


__all__ = [
    "GroupDescriptor",
    "GroupPresentation",
    "NoExtension",
    "Word",
    "cyclic_presentation",
    "dihedral_presentation",
    "exponent_orbits",
    "group_for",
    "km_case34",
    "legal_exponents",
    "lemma2_central",
    "metacyclic",
    "parse_presentation",
    "product_with_cn",
    "second_cohomology_order",
    "sl23_presentation",
    "u_extension",
]
