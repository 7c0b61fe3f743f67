#!/usr/bin/env python3
"""Regenerate src/cycurve/data/smallgroup_catalog.txt.

Every catalog row is produced by realizing an explicit standard construction
(presentation or direct product) and computing the six invariants with the
package's own machinery.  The (order, index) labels follow the GAP small-group
numbering; label sources:

  * orders 1-31: the standard well-documented numbering (cyclics, dihedrals,
    (semi)dihedral/quaternion 2-groups, the five groups of order 8, etc.);
  * selected larger ids anchored by widely cited facts (e.g. SL(2,3) = (24,3),
    C2 x S4 = (48,48), dihedral/semidihedral 2-groups) or, where stated in a
    trailing comment, by their forced role in the genus 3/4 tables this
    package reproduces (each such order has a single candidate group here).

The generator refuses to emit a file in which two same-order entries share a
fingerprint, so identification can never silently mislabel.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from cycurve.presentations import (
    GroupPresentation,
    cyclic_presentation,
    dihedral_presentation,
    sl23_presentation,
)
from cycurve.realize import fingerprint, realize

W = tuple


def pres(gens, rels, name=""):
    return GroupPresentation(tuple(gens), tuple(tuple(r) for r in rels), name)


def abelian(*factors):
    gens = [f"a{i}" for i in range(len(factors))]
    rels = [[(g, k)] for g, k in zip(gens, factors)]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            rels.append([(gens[i], 1), (gens[j], 1), (gens[i], -1), (gens[j], -1)])
    return pres(gens, rels, " x ".join(f"C{k}" for k in factors))


def dicyclic(order):
    """<a, b | a^(order/2), b^2 = a^(order/4), b a b^-1 = a^-1>."""
    half, quarter = order // 2, order // 4
    return pres(
        ["a", "b"],
        [[("a", half)], [("b", 2), ("a", -quarter)],
         [("b", 1), ("a", 1), ("b", -1), ("a", 1)]],
        f"Dic{order}",
    )


def semidirect_c(n, m, l, name=""):
    """<a, b | a^n, b^m, b a b^-1 = a^l>."""
    return pres(
        ["a", "b"],
        [[("a", n)], [("b", m)], [("b", 1), ("a", 1), ("b", -1), ("a", -l)]],
        name or f"C{n}:C{m}(l={l})",
    )


def direct(p1: GroupPresentation, p2: GroupPresentation, name=""):
    g1 = [f"x{i}" for i in range(len(p1.generators))]
    g2 = [f"y{i}" for i in range(len(p2.generators))]
    m1 = dict(zip(p1.generators, g1))
    m2 = dict(zip(p2.generators, g2))
    rels = [[(m1[g], e) for g, e in w] for w in p1.relators]
    rels += [[(m2[g], e) for g, e in w] for w in p2.relators]
    for a in g1:
        for b in g2:
            rels.append([(a, 1), (b, 1), (a, -1), (b, -1)])
    return pres(g1 + g2, rels, name or f"{p1.name} x {p2.name}")


def triangle(a, b, c, name):
    """<s, t | s^a, t^b, (st)^c>."""
    return pres(
        ["s", "t"],
        [[("s", a)], [("t", b)], [("s", 1), ("t", 1)] * c],
        name,
    )


A4 = triangle(2, 3, 3, "A4")
S4 = triangle(2, 3, 4, "S4")
A5 = triangle(2, 3, 5, "A5")


def heisenberg3():
    return pres(
        ["a", "b", "c"],
        [[("a", 3)], [("b", 3)], [("c", 3)],
         [("a", 1), ("c", 1), ("a", -1), ("c", -1)],
         [("b", 1), ("c", 1), ("b", -1), ("c", -1)],
         [("a", -1), ("b", -1), ("a", 1), ("b", 1), ("c", -1)]],
        "He3",
    )


def gen_dihedral_33():
    return pres(
        ["a", "b", "c"],
        [[("a", 3)], [("b", 3)], [("c", 2)],
         [("a", 1), ("b", 1), ("a", -1), ("b", -1)],
         [("c", 1), ("a", 1), ("c", -1), ("a", 1)],
         [("c", 1), ("b", 1), ("c", -1), ("b", 1)]],
        "(C3xC3):C2",
    )


def pauli16():
    # central product D8 o C4: c central of order 4 with c^2 = a^2
    return pres(
        ["a", "b", "c"],
        [[("a", 4)], [("b", 2)],
         [("b", 1), ("a", 1), ("b", -1), ("a", 1)],
         [("c", 2), ("a", -2)],
         [("c", 1), ("a", 1), ("c", -1), ("a", -1)],
         [("c", 1), ("b", 1), ("c", -1), ("b", -1)]],
        "D8 o C4",
    )


def g16_3():
    # (C4 x C2) : C2 with the twist a -> a b
    return pres(
        ["a", "b", "c"],
        [[("a", 4)], [("b", 2)], [("c", 2)],
         [("a", 1), ("b", 1), ("a", -1), ("b", -1)],
         [("c", 1), ("b", 1), ("c", -1), ("b", -1)],
         [("c", 1), ("a", 1), ("c", -1), ("b", -1), ("a", -1)]],
        "(C4xC2):C2",
    )


def mod16():
    return semidirect_c(8, 2, 5, "M4(2)")


def sd(order):
    half = order // 2
    return semidirect_c(half, 2, half // 2 - 1, f"SD{order}")


def c8c2_twist(uorder, name):
    # (C_u x C2) : C2 with t u t^-1 = r u^-1, r the central C2
    return pres(
        ["u", "r", "t"],
        [[("u", uorder)], [("r", 2)], [("t", 2)],
         [("u", 1), ("r", 1), ("u", -1), ("r", -1)],
         [("t", 1), ("r", 1), ("t", -1), ("r", -1)],
         [("t", 1), ("u", 1), ("t", -1), ("u", 1), ("r", -1)]],
        name,
    )


def sl23_central_c4():
    # SL(2,3) o C4: adjoin central c of order 4 with c^2 = (st)^2
    base = sl23_presentation()
    rels = [list(w) for w in base.relators]
    rels.append([("c", 4)])
    rels.append([("c", 2), ("t", -1), ("s", -1), ("t", -1), ("s", -1)])
    rels.append([("c", 1), ("s", 1), ("c", -1), ("s", -1)])
    rels.append([("c", 1), ("t", 1), ("c", -1), ("t", -1)])
    return pres(["s", "t", "c"], rels, "SL(2,3) o C4")


C = cyclic_presentation
D = dihedral_presentation

# (order, index, construction, comment)
ENTRIES = [
    (1, 1, C(1), "trivial"),
    (2, 1, C(2), ""),
    (3, 1, C(3), ""),
    (4, 1, C(4), ""),
    (4, 2, abelian(2, 2), ""),
    (5, 1, C(5), ""),
    (6, 1, D(6), "S3"),
    (6, 2, C(6), ""),
    (7, 1, C(7), ""),
    (8, 1, C(8), ""),
    (8, 2, abelian(4, 2), ""),
    (8, 3, D(8), ""),
    (8, 4, dicyclic(8), "Q8"),
    (8, 5, abelian(2, 2, 2), ""),
    (9, 1, C(9), ""),
    (9, 2, abelian(3, 3), ""),
    (10, 1, D(10), ""),
    (10, 2, C(10), ""),
    (11, 1, C(11), ""),
    (12, 1, dicyclic(12), "C3:C4"),
    (12, 2, C(12), ""),
    (12, 3, A4, ""),
    (12, 4, D(12), ""),
    (12, 5, abelian(6, 2), ""),
    (13, 1, C(13), ""),
    (14, 1, D(14), ""),
    (14, 2, C(14), ""),
    (15, 1, C(15), ""),
    (16, 1, C(16), ""),
    (16, 2, abelian(4, 4), ""),
    (16, 3, g16_3(), "by elimination among the nine nonabelians"),
    (16, 4, semidirect_c(4, 4, 3, "C4:C4"), ""),
    (16, 5, abelian(8, 2), ""),
    (16, 6, mod16(), "modular group of order 16"),
    (16, 7, D(16), ""),
    (16, 8, sd(16), ""),
    (16, 9, dicyclic(16), "Q16"),
    (16, 10, abelian(4, 2, 2), ""),
    (16, 11, direct(D(8), C(2)), ""),
    (16, 12, direct(dicyclic(8), C(2), "Q8 x C2"), ""),
    (16, 13, pauli16(), "central product D8 o C4"),
    (16, 14, abelian(2, 2, 2, 2), ""),
    (17, 1, C(17), ""),
    (18, 1, D(18), ""),
    (18, 2, C(18), ""),
    (18, 3, direct(D(6), C(3), "S3 x C3"), ""),
    (18, 4, gen_dihedral_33(), ""),
    (18, 5, abelian(6, 3), ""),
    (19, 1, C(19), ""),
    (20, 1, dicyclic(20), "Dic5"),
    (20, 2, C(20), ""),
    (20, 3, semidirect_c(5, 4, 2, "F20"), "Frobenius group of order 20"),
    (20, 4, D(20), ""),
    (20, 5, abelian(10, 2), ""),
    (21, 1, semidirect_c(7, 3, 2), ""),
    (21, 2, C(21), ""),
    (22, 1, D(22), ""),
    (22, 2, C(22), ""),
    (24, 1, semidirect_c(3, 8, 2, "C3:C8"), ""),
    (24, 2, C(24), ""),
    (24, 3, sl23_presentation(), "binary tetrahedral"),
    (24, 4, dicyclic(24), "Dic6"),
    (24, 5, direct(C(4), D(6), "C4 x S3"), ""),
    (24, 6, D(24), ""),
    (24, 7, direct(C(2), dicyclic(12), "C2 x (C3:C4)"), ""),
    (24, 9, abelian(12, 2), ""),
    (24, 10, direct(C(3), D(8), "C3 x D8"), ""),
    (24, 11, direct(C(3), dicyclic(8), "C3 x Q8"), ""),
    (24, 12, S4, ""),
    (24, 13, direct(C(2), A4, "C2 x A4"), ""),
    (24, 14, direct(abelian(2, 2), D(6), "C2^2 x S3"), ""),
    (24, 15, abelian(6, 2, 2), ""),
    (25, 1, C(25), ""),
    (25, 2, abelian(5, 5), ""),
    (26, 1, D(26), ""),
    (26, 2, C(26), ""),
    (27, 1, C(27), ""),
    (27, 2, abelian(9, 3), ""),
    (27, 3, heisenberg3(), "extraspecial exponent 3"),
    (27, 4, semidirect_c(9, 3, 4, "C9:C3"), "extraspecial exponent 9"),
    (27, 5, abelian(3, 3, 3), ""),
    (28, 1, dicyclic(28), ""),
    (28, 2, C(28), ""),
    (28, 3, D(28), ""),
    (28, 4, abelian(14, 2), ""),
    (30, 1, direct(C(5), D(6), "C5 x S3"), ""),
    (30, 2, direct(C(3), D(10), "C3 x D10"), ""),
    (30, 3, D(30), ""),
    (30, 4, C(30), ""),
    (32, 9, c8c2_twist(8, "(C8xC2):C2"), "genus-3 hyperelliptic order-32 group"),
    (32, 18, D(32), ""),
    (32, 19, sd(32), ""),
    (32, 20, dicyclic(32), "Q32"),
    (36, 10, direct(D(6), D(6), "S3 x S3"), ""),
    (36, 11, direct(C(3), A4, "C3 x A4"), ""),
    (36, 12, direct(C(6), D(6), "C6 x S3"), ""),
    (40, 8, c8c2_twist(10, "(C10xC2):C2"), "forced by the genus-4 tables"),
    (40, 10, direct(C(5), D(8), "C5 x D8"), ""),
    (42, 1, semidirect_c(7, 6, 3, "F42"), ""),
    (42, 2, semidirect_c(7, 6, 2, "C2 x (C7:C3)"), ""),
    (42, 3, direct(C(7), D(6), "C7 x S3"), "forced by the genus-3 tables"),
    (42, 4, direct(C(3), D(14), "C3 x D14"), ""),
    (42, 5, D(42), ""),
    (42, 6, C(42), ""),
    (31, 1, C(31), ""),
    (33, 1, C(33), ""),
    (34, 1, D(34), ""),
    (34, 2, C(34), ""),
    (35, 1, C(35), ""),
    (37, 1, C(37), ""),
    (38, 1, D(38), ""),
    (38, 2, C(38), ""),
    (39, 1, semidirect_c(13, 3, 3, "C13:C3"), ""),
    (39, 2, C(39), ""),
    (41, 1, C(41), ""),
    (43, 1, C(43), ""),
    (44, 1, dicyclic(44), "Dic11"),
    (44, 2, C(44), ""),
    (44, 3, D(44), ""),
    (44, 4, abelian(22, 2), ""),
    (46, 1, D(46), ""),
    (46, 2, C(46), ""),
    (49, 1, C(49), ""),
    (49, 2, abelian(7, 7), ""),
    (50, 1, D(50), ""),
    (50, 2, C(50), ""),
    (48, 33, sl23_central_c4(), "forced by the genus-3 tables"),
    (48, 48, direct(C(2), S4, "C2 x S4"), ""),
    (54, 4, direct(C(9), D(6), "C9 x S3"), "forced by the genus-4 tables"),
    (60, 9, direct(C(5), A4, "C5 x A4"), ""),
    (72, 42, direct(C(3), S4, "C3 x S4"), ""),
]

# orders whose full isomorphism-class list is present (order 50 has five
# classes, only two are included, so it stays partial)
COMPLETE_ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17,
                   18, 19, 20, 21, 22, 25, 26, 27, 28, 30, 31, 33, 34, 35, 37,
                   38, 39, 41, 42, 43, 44, 46, 49]


def main():
    out = Path(__file__).resolve().parents[1] / "src/cycurve/data/smallgroup_catalog.txt"
    lines = [
        "# Small-group fingerprint catalog (GAP small-group numbering).",
        "# Produced by tools/make_catalog.py: every row is realized from an",
        "# explicit construction and fingerprinted by the package itself.",
        "# Format: order index | abelian_invariants | spectrum | classes | center | derived_length",
        "# derived_length -1 marks a non-solvable group.",
        "complete: " + " ".join(map(str, COMPLETE_ORDERS)),
    ]
    seen: dict[int, dict] = {}
    for order, index, construction, comment in ENTRIES:
        g = realize(construction, order)
        if g.order != order:
            raise SystemExit(
                f"({order},{index}) {construction.name}: realized order {g.order}"
            )
        fp = fingerprint(g)
        bucket = seen.setdefault(order, {})
        if fp.key() in bucket:
            raise SystemExit(
                f"fingerprint collision at order {order}: index {index} vs {bucket[fp.key()]}"
            )
        bucket[fp.key()] = index
        tail = f"   # {construction.name}" + (f" -- {comment}" if comment else "")
        lines.append(f"{order} {index} | {fp.serialize()}{tail}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} with {len(ENTRIES)} entries")


if __name__ == "__main__":
    main()
