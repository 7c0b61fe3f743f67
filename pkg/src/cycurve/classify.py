"""The classifier: enumerate all admissible (case, parameters) pairs for a
given genus and characteristic and attach the groups the theorems assign.

A (case, params) pair survives when

  * the structural preconditions and the explicit constraint catalog hold
    (divisibility side conditions, the no-extension verdicts),
  * every designated wild place is legal (e* | q1 - 1; this is what forces
    n = 2 in cases 40-41 and empties 44-45 and c-d),
  * the closed-form dimension is a nonnegative integer and agrees exactly
    with the equation-solver recomputation,
  * the assigned group actually contains lifts of the right orders for the
    signature (checked on a realization when one is affordable).

Each surviving (case, params, group) triple becomes one ClassificationRow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .hurwitz import (
    CASES,
    Params,
    WildLegalityError,
    delta_closed,
    delta_oracle,
    places_of,
    signature_of,
)
from .presentations import GroupDescriptor, group_for
from .realize import Ambiguous, CayleyGroup, Overflow, fingerprint, load_catalog, realize


class UnsupportedCharacteristic(ValueError):
    pass


MODE_ZERO = "zero"
MODE_LARGE = "large"      # p > 2g+1: same case table as characteristic 0
MODE_P7PLUS = "p7plus"    # 5 < p <= 2g+1
MODE_P5 = "p5"
MODE_P3 = "p3"

_TAME_CASES = [str(i) for i in range(1, 32)]
_WILD_CASES = [str(i) for i in range(32, 46)]

_REALIZE_CAP = 2400   # skip lifting checks above this order
_NUMERIC_ORDER = {cid: i for i, cid in enumerate(
    [str(i) for i in range(1, 46)] + ["a", "b", "c", "d"])}


def characteristic_mode(g: int, p: int) -> str:
    if p == 2:
        raise UnsupportedCharacteristic("characteristic 2 is not supported")
    if p == 0:
        return MODE_ZERO
    if p == 3:
        return MODE_P3
    if p == 5:
        return MODE_P5
    if p > 2 * g + 1:
        return MODE_LARGE
    return MODE_P7PLUS


def case_ids_for_mode(mode: str) -> list[str]:
    if mode in (MODE_ZERO, MODE_LARGE):
        return list(_TAME_CASES)
    if mode == MODE_P7PLUS:
        return list(_TAME_CASES) + list(_WILD_CASES)
    if mode == MODE_P5:
        # A5 (24-31) never appears in characteristic 5
        return [c for c in _TAME_CASES if not 24 <= int(c) <= 31] + list(_WILD_CASES)
    if mode == MODE_P3:
        # A4 and S4 disappear; A5 is replaced by the wild table rows a-d
        return [c for c in _TAME_CASES if int(c) <= 9] + list(_WILD_CASES) + ["a", "b", "c", "d"]
    raise ValueError(mode)


@dataclass
class ClassificationRow:
    case_id: str
    g: int
    p: int
    n: int
    m: int
    t: int
    q: int
    delta: int
    signature: tuple[int, ...]
    group: GroupDescriptor
    order: int
    small_group_id: Optional[tuple[int, int]] = None
    id_note: str = ""
    fingerprint: Optional[str] = None
    cross_refs: tuple[str, ...] = ()  # other case ids carrying the same (signature, group)

    def sort_key(self):
        return (_NUMERIC_ORDER[self.case_id], self.n, self.m, self.t, self.q,
                self.group.name)

    def group_shape(self):
        """Key for duplicate detection: sorted signature + group fingerprint
        (falling back to the structural name for unrealized forms)."""
        return (tuple(sorted(self.signature)), self.fingerprint or self.group.name)

    def to_dict(self) -> dict:
        return {
            "case": self.case_id,
            "n": self.n,
            "m": self.m or None,
            "t": self.t or None,
            "q": self.q or None,
            "delta": self.delta,
            "signature": list(self.signature),
            "group": self.group.name,
            "group_kind": self.group.kind,
            "order": self.order,
            "provenance": self.group.provenance,
            "small_group_id": list(self.small_group_id) if self.small_group_id else None,
            "id_note": self.id_note or None,
            "cross_refs": list(self.cross_refs) or None,
        }


def _constraints_ok(case_id: str, g: int, n: int, m: int, t: int, q: int, p: int) -> bool:
    """The explicit constraint catalog (beyond wild-place legality)."""
    case = CASES[case_id]
    fam = case.family
    if p:
        if n % p == 0:
            return False
        if fam in ("Cm", "D2m", "Km") and m % p == 0:
            return False
    if fam == "U":
        if case_id == "33" and (p**t - 1) % n != 0:
            return False
    if fam == "Km":
        pt = p**t
        if (pt - 1) % m != 0:
            return False
        if case_id in ("36", "37") and (pt - 1) % (n * m) != 0:
            return False
    if case_id in ("40", "41") and n != 2:
        return False  # wild legality allows only n in {1, 2}
    if case_id in ("44", "45", "c", "d"):
        return False  # only n = 1 is wild-legal, and cyclic curves need n >= 2
    if fam == "D2m" and n % 2 == 0 and m % 2 == 1 and case_id in ("5", "8"):
        return False  # Thm 3.3(2): no extensions (delta is non-integral too)
    if fam == "A4" and n % 2 == 1 and n % 3 == 0 and case_id in ("11", "14"):
        return False  # Thm 3.4(2)
    return True


def _m_range(case_id: str, g: int, n: int) -> range:
    case = CASES[case_id]
    if case.family == "Cm":
        lo = 1 if case_id == "3" else 2
        return range(lo, 2 * (g + n) + 3)
    if case.family == "D2m":
        return range(2, 2 * (g + n) + 3)
    return range(0, 1)  # family without a free m


def _reduced_entry_orders(case_id: str, n: int, m: int, t: int, q: int, p: int) -> list[int]:
    """Orders of the fixed classes in the reduced group (the n = 1 shadow)."""
    case = CASES[case_id]
    P1 = Params(g=0, n=1, m=m, t=t, q=q, p=p)
    return [cls(P1) for cls in case.fixed_classes]


def _lifting_ok(desc: GroupDescriptor, case_id: str, n: int, m: int, t: int,
                q: int, p: int, group: Optional[CayleyGroup]) -> bool:
    """Check G contains, over each tame fixed signature class, an element of
    that order mapping onto a reduced-group element of the reduced order.

    The inertia of a tame place is cyclic of order equal to the class, so the
    element must exist.  Wild inertia groups need not be cyclic (the whole of
    C_p^t for the U rows, S3 inside A5 for the characteristic-3 rows), so the
    designated wild class is exempt; its legality is enforced separately."""
    if group is None:
        return True  # not realizable at this size; trust the theorem dispatch
    case = CASES[case_id]
    P = Params(g=0, n=n, m=m, t=t, q=q, p=p)
    entries = [cls(P) for cls in case.fixed_classes]
    reduced = _reduced_entry_orders(case_id, n, m, t, q, p)
    if case.wild_entry is not None:
        entries = [e for i, e in enumerate(entries) if i != case.wild_entry]
        reduced = [e for i, e in enumerate(reduced) if i != case.wild_entry]

    # the cyclic kernel: generated by the presentation's r generator when
    # present, else (dihedral/cyclic named forms) the canonical power
    pres = desc.presentation
    if pres is None:
        return True
    if desc.kind == "cyclic":
        # C_{mn}: the kernel C_n is the unique order-n subgroup
        gen = group.table.rows[0][0]
        power = desc.order // n
        kernel = sorted(group.subgroup_closure([_pow(group, gen, power)]))
    elif desc.kind == "dihedral":
        # D_{2mn}: kernel C_n = <rotation^m>, rotation = s*t
        s = group.table.rows[0][0]
        tg = group.table.rows[0][2]
        rot = group.mul(s, tg)
        kernel = sorted(group.subgroup_closure([_pow(group, rot, desc.order // (2 * n))]))
    elif desc.kind == "sl23":
        # the cyclic kernel is the center <(st)^2>
        s = group.table.rows[0][0]
        tg = group.table.rows[0][2]
        st = group.mul(s, tg)
        kernel = sorted(group.subgroup_closure([group.mul(st, st)]))
    elif "r" in pres.generators:
        r_elt = group.table.rows[0][2 * pres.generators.index("r")]
        kernel = sorted(group.subgroup_closure([r_elt]))
    else:
        return True
    if len(kernel) != n:
        return False
    kset = set(kernel)

    def quotient_order(x: int) -> int:
        k, y = 1, x
        while y not in kset:
            y = group.mul(y, x)
            k += 1
        return k

    orders = [group.element_order(i) for i in range(group.n)]
    for e, ebar in zip(entries, reduced):
        if not any(o == e and quotient_order(i) == ebar
                   for i, o in enumerate(orders)):
            return False
    return True


def _pow(group: CayleyGroup, x: int, k: int) -> int:
    acc = 0
    for _ in range(k):
        acc = group.mul(acc, x)
    return acc


def classify(g: int, p: int) -> list[ClassificationRow]:
    """All admissible rows for genus g in characteristic p (0 allowed)."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    mode = characteristic_mode(g, p)
    cap = 16 * g**4
    catalog = load_catalog()
    rows: list[ClassificationRow] = []

    for case_id in case_ids_for_mode(mode):
        case = CASES[case_id]
        fam = case.family
        for n in range(2, 4 * g + 3):
            if p and n % p == 0:
                continue
            for m, t, q in _param_grid(case_id, g, n, p, cap):
                P = Params(g=g, n=n, m=m, t=t, q=q, p=p)
                if not case.params_ok(P):
                    continue
                if not _constraints_ok(case_id, g, n, m, t, q, p):
                    continue
                try:
                    places_of(case_id, g, n, m, t, q, p)
                except WildLegalityError:
                    continue
                delta = delta_closed(case_id, g, n, m, t, q, p)
                if delta.denominator != 1 or delta < 0:
                    continue
                assert delta == delta_oracle(case_id, g, n, m, t, q, p)
                order = n * case.reduced_order(P)
                if p and order > cap:
                    continue
                sig = signature_of(case_id, int(delta), n, m, t, q, p)
                for desc in group_for(case_id, n, m, t, q, p):
                    row = _build_row(case_id, g, p, n, m, t, q, int(delta), sig,
                                     desc, order, catalog)
                    if row is not None:
                        rows.append(row)
    rows.sort(key=ClassificationRow.sort_key)
    # rows with the same (signature, group) under different case ids are both
    # kept (the tables count cases, not isomorphism classes) but cross-tagged
    by_shape: dict = {}
    for row in rows:
        by_shape.setdefault(row.group_shape(), []).append(row)
    for bucket in by_shape.values():
        case_ids = sorted({r.case_id for r in bucket}, key=_NUMERIC_ORDER.get)
        if len(case_ids) > 1:
            for row in bucket:
                row.cross_refs = tuple(c for c in case_ids if c != row.case_id)
    return rows


def _build_row(case_id, g, p, n, m, t, q, delta, sig, desc, order, catalog):
    group = None
    if desc.realizable() and desc.order <= _REALIZE_CAP:
        try:
            group = realize(desc.presentation, desc.order)
        except Overflow:
            return ClassificationRow(case_id, g, p, n, m, t, q, delta,
                                     sig.classes, desc, order,
                                     id_note="realization overflow")
        if group.order != desc.order:
            raise AssertionError(
                f"case {case_id}: realized order {group.order} != n*|Gbar| = {desc.order}"
            )
    if not _lifting_ok(desc, case_id, n, m, t, q, p, group):
        return None
    sgid = None
    note = ""
    fp_text = None
    if group is not None and desc.order <= catalog.max_order:
        fp = fingerprint(group)
        fp_text = fp.serialize()
        try:
            found = catalog.identify(fp)
        except Ambiguous as amb:
            note = f"ambiguous: {amb.candidates}"
        else:
            if found is None:
                note = "unidentified fingerprint"
            else:
                sgid = found.as_pair()
    return ClassificationRow(case_id, g, p, n, m, t, q, delta, sig.classes,
                             desc, order, sgid, note, fp_text)


def _param_grid(case_id: str, g: int, n: int, p: int, cap: int):
    """Yield (m, t, q) triples inside the enumeration bounds."""
    fam = CASES[case_id].family
    if fam in ("Cm", "D2m"):
        for m in _m_range(case_id, g, n):
            if p and m % p == 0:
                continue
            yield (m, 0, 0)
        return
    if fam in ("A4", "S4", "A5", "A5p3"):
        yield (0, 0, 0)
        return
    if fam == "U":
        t = 1
        while p**t <= cap:
            yield (0, t, 0)
            t += 1
        return
    if fam == "Km":
        t = 1
        while p**t <= cap:
            pt = p**t
            for m in range(2, pt):
                if (pt - 1) % m == 0 and m * pt <= cap:
                    yield (m, t, 0)
            t += 1
        return
    if fam in ("PSL2", "PGL2"):
        f = 1
        while True:
            q = p**f
            order = q * (q - 1) * (q + 1) // (2 if fam == "PSL2" else 1)
            if order > cap:
                break
            if q >= 3:
                yield (0, 0, q)
            f += 1
        return
    raise ValueError(fam)


__all__ = [
    "ClassificationRow",
    "UnsupportedCharacteristic",
    "case_ids_for_mode",
    "characteristic_mode",
    "classify",
]
