"""Command-line front end.

Subcommands: classify, verify-fixedfield, delta, present, identify.
Output is a table or a versioned JSON record; exit codes are 0 (success),
1 (usage), 2 (golden-table discrepancies under --strict), 3 (budget
exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import UnsupportedCharacteristic, classify
from .field import FieldTooSmall
from .fixedfield import build_z, field_for_row, ramification_profile
from .golden import compare_with_golden
from .hurwitz import CASES, delta_closed, delta_oracle, signature_of
from .moebius import BudgetExceeded, ReducedGroupSpec, closure, generators
from .presentations import group_for, parse_presentation
from .realize import Ambiguous, Overflow, enumerate_cosets, fingerprint, identify

SCHEMA_VERSION = "1"

_FAMILY_FLAGS = {
    "cm": "Cm", "d2m": "D2m", "a4": "A4", "s4": "S4", "a5": "A5",
    "u": "U", "km": "Km", "psl2": "PSL2", "pgl2": "PGL2",
}


def _record(command: str, rows, discrepancies=None, **extra) -> dict:
    rec = {"schema_version": SCHEMA_VERSION, "command": command, "rows": rows,
           "discrepancies": discrepancies or []}
    rec.update(extra)
    return rec


def _emit(record: dict, fmt: str, table_fn=None):
    if fmt == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        if table_fn:
            table_fn(record)
        else:
            print(json.dumps(record, indent=2, sort_keys=True))


def cmd_classify(args) -> int:
    try:
        rows = classify(args.genus, args.char)
    except UnsupportedCharacteristic as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    row_dicts = [r.to_dict() for r in rows]
    discrepancies = []
    comparison = None
    if args.golden:
        genus = {"g3": 3, "g4": 4}[args.golden]
        if genus != args.genus:
            print(f"error: --golden {args.golden} needs --genus {genus}", file=sys.stderr)
            return 1
        ids = {r.small_group_id for r in rows if r.small_group_id}
        comparison = compare_with_golden(args.genus, args.char, ids)
        discrepancies = [d.to_dict() for d in comparison.discrepancies]
    record = _record("classify", row_dicts, discrepancies)
    if comparison:
        record["golden"] = comparison.to_dict()

    def table(rec):
        print(f"# classify genus={args.genus} char={args.char}: {len(rows)} rows")
        hdr = f"{'case':>4} {'n':>3} {'m':>3} {'t':>2} {'q':>3} {'delta':>5}  "
        hdr += f"{'signature':24s} {'|G|':>5}  {'group':30s} id"
        print(hdr)
        for r in rows:
            sig = "(" + ",".join(map(str, r.signature)) + ")"
            sgid = f"({r.small_group_id[0]},{r.small_group_id[1]})" if r.small_group_id else (r.id_note or "-")
            print(f"{r.case_id:>4} {r.n:>3} {r.m or '':>3} {r.t or '':>2} {r.q or '':>3} "
                  f"{r.delta:>5}  {sig:24s} {r.order:>5}  {r.group.name:30s} {sgid}")
        if comparison:
            print(f"# golden comparison ({comparison.label}): "
                  f"{len(comparison.discrepancies)} discrepancies, "
                  f"{len(comparison.unexplained)} unexplained")
            for d in comparison.discrepancies:
                mark = "explained" if d.note else "UNEXPLAINED"
                print(f"#   {d.direction:13s} {d.id}  [{mark}] {d.note}")
            for dup in comparison.multiplicity_warnings:
                print(f"#   warning: {dup} listed more than once in the published table")

    _emit(record, args.format, table)
    if args.strict and comparison and comparison.discrepancies:
        return 2
    return 0


def cmd_verify_fixedfield(args) -> int:
    family = _FAMILY_FLAGS[args.family]
    p = args.p or (0 if args.q is None else _prime_base(args.q))
    if family in ("PSL2", "PGL2"):
        if args.q is None:
            print("error: --q required for psl2/pgl2", file=sys.stderr)
            return 1
        p = _prime_base(args.q)
        f = 0
        q = args.q
        while q % p == 0 and q > 1:
            q //= p
            f += 1
        spec_kwargs = {"p": p, "f": f}
    elif family == "U":
        spec_kwargs = {"p": p, "t": args.t or 1}
    elif family == "Km":
        spec_kwargs = {"p": p, "t": args.t or 1, "m": args.m or 2}
    elif family in ("Cm", "D2m"):
        spec_kwargs = {"p": p, "m": args.m or 2}
    else:
        spec_kwargs = {"p": p}
    try:
        spec = ReducedGroupSpec(family, **spec_kwargs)
        fld = field_for_row(spec)
        rec = build_z(spec, fld)
        gens = generators(spec, fld)
        from .moebius import compose_fraction

        per_gen = [compose_fraction(rec.z, gmap) == rec.z for gmap in gens]
        profile = ramification_profile(rec, fld)
        cl = closure(gens, expected=rec.expected_degree)
    except FieldTooSmall as err:
        from .fixedfield import min_field_degree_for_row

        hint = ""
        try:
            hint = f" (minimal sufficient extension degree: k = {min_field_degree_for_row(spec)})"
        except Exception:
            pass
        print(f"error: field too small: {err}{hint}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except BudgetExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    checks = {
        "field": repr(fld),
        "degree": rec.z.degree,
        "expected_degree": rec.expected_degree,
        "degree_ok": rec.z.degree == rec.expected_degree,
        "invariance_per_generator": per_gen,
        "invariance_ok": all(per_gen),
        "closure_order": len(cl),
        "closure_ok": len(cl) == rec.expected_degree,
        "ramification_profile": list(profile),
        "expected_ramification": list(rec.expected_ramification),
        "ramification_ok": profile == rec.expected_ramification,
    }
    record = _record("verify-fixedfield", [checks])

    def table(recd):
        print(f"# verify-fixedfield {args.family} over {checks['field']}")
        for key in ("degree_ok", "invariance_ok", "closure_ok", "ramification_ok"):
            print(f"{key:18s} {'PASS' if checks[key] else 'FAIL'}")
        print(f"profile: {checks['ramification_profile']} expected {checks['expected_ramification']}")

    _emit(record, args.format, table)
    return 0 if all(checks[k] for k in
                    ("degree_ok", "invariance_ok", "closure_ok", "ramification_ok")) else 1


def _prime_base(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    return q


def cmd_delta(args) -> int:
    if args.case not in CASES:
        print(f"error: unknown case {args.case}", file=sys.stderr)
        return 1
    closed = delta_closed(args.case, args.g, args.n, args.m, args.t, args.q, args.p)
    oracle = delta_oracle(args.case, args.g, args.n, args.m, args.t, args.q, args.p)
    row = {
        "case": args.case,
        "delta_closed": str(closed),
        "delta_oracle": str(oracle),
        "equal": closed == oracle,
        "integral": closed.denominator == 1 and closed >= 0,
    }
    if row["integral"]:
        sig = signature_of(args.case, int(closed), args.n, args.m, args.t, args.q, args.p)
        row["signature"] = list(sig.classes)
    record = _record("delta", [row])

    def table(recd):
        print(f"case {args.case}: delta_closed = {closed}, delta_oracle = {oracle}"
              f" ({'agree' if closed == oracle else 'DISAGREE'})")
        if "signature" in row:
            print("signature:", tuple(row["signature"]))

    _emit(record, args.format, table)
    return 0


def cmd_present(args) -> int:
    descs = group_for(args.case, args.n, args.m, args.t, args.q, args.p)
    if not descs:
        print("# no group extension exists for this case/parameters")
        return 0
    rows = []
    for d in descs:
        entry = {"name": d.name, "order": d.order, "provenance": d.provenance,
                 "presentation": d.presentation.serialize() if d.presentation else None}
        rows.append(entry)
    record = _record("present", rows)

    def table(recd):
        for d in descs:
            print(f"# {d.name} (order {d.order}, {d.provenance})")
            if d.presentation:
                print(d.presentation.serialize(), end="")
            else:
                print("# (no finite presentation emitted for this named form)")

    _emit(record, args.format, table)
    return 0


def cmd_identify(args) -> int:
    try:
        text = open(args.file).read()
        pres = parse_presentation(text)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    try:
        table_ = enumerate_cosets(pres)
    except Overflow as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    fp = fingerprint(table_)
    row = {"order": fp.order, "fingerprint": fp.serialize()}
    try:
        sgid = identify(fp)
    except Ambiguous as amb:
        row["small_group_id"] = None
        row["ambiguous"] = [list(c) for c in amb.candidates]
    else:
        row["small_group_id"] = list(sgid.as_pair()) if sgid else None
    record = _record("identify", [row])

    def table(recd):
        print(f"order {fp.order}; fingerprint {fp.serialize()}")
        if row.get("ambiguous"):
            print("ambiguous:", row["ambiguous"])
        else:
            print("small group id:", tuple(row["small_group_id"]) if row["small_group_id"] else None)

    _emit(record, args.format, table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cycurve",
        description="Automorphism groups of cyclic curves y^n = f(x): "
                    "classification, fixed-field verification, presentations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("classify", help="enumerate admissible cases for (genus, char)")
    pc.add_argument("--genus", type=int, required=True)
    pc.add_argument("--char", type=int, required=True)
    pc.add_argument("--format", choices=("table", "json"), default="table")
    pc.add_argument("--golden", choices=("g3", "g4"))
    pc.add_argument("--strict", action="store_true")
    pc.set_defaults(func=cmd_classify)

    pv = sub.add_parser("verify-fixedfield", help="check one fixed-field table row")
    pv.add_argument("--family", choices=sorted(_FAMILY_FLAGS), required=True)
    pv.add_argument("--m", type=int)
    pv.add_argument("--t", type=int)
    pv.add_argument("--q", type=int)
    pv.add_argument("--p", type=int)
    pv.add_argument("--format", choices=("table", "json"), default="table")
    pv.set_defaults(func=cmd_verify_fixedfield)

    pd = sub.add_parser("delta", help="dimension of one case, closed form and oracle")
    pd.add_argument("--case", required=True)
    pd.add_argument("--g", type=int, required=True)
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--m", type=int, default=0)
    pd.add_argument("--t", type=int, default=0)
    pd.add_argument("--q", type=int, default=0)
    pd.add_argument("--p", type=int, default=0)
    pd.add_argument("--format", choices=("table", "json"), default="table")
    pd.set_defaults(func=cmd_delta)

    pp = sub.add_parser("present", help="print the group presentation(s) of a case")
    pp.add_argument("--case", required=True)
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--m", type=int, default=0)
    pp.add_argument("--t", type=int, default=0)
    pp.add_argument("--q", type=int, default=0)
    pp.add_argument("--p", type=int, default=0)
    pp.add_argument("--format", choices=("table", "json"), default="table")
    pp.set_defaults(func=cmd_present)

    pi = sub.add_parser("identify", help="identify a presentation file against the catalog")
    pi.add_argument("--file", required=True)
    pi.add_argument("--format", choices=("table", "json"), default="table")
    pi.set_defaults(func=cmd_identify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
