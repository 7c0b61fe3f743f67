"""The published genus-3 and genus-4 small-group-id tables, embedded
verbatim (duplicates included), plus the comparison machinery.

Comparison is set-based; repeated entries in a published list produce
multiplicity warnings, and every set difference is looked up in the curated
discrepancy notes (data/golden_notes.json).  A difference without a note is
an unexplained mismatch, which the acceptance suite treats as a failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

# characteristic labels used by the tables: 0, 3, 5, 7 and "big" (p > 7)
GOLDEN = {
    3: {
        "0": [(2, 1), (4, 2), (3, 1), (4, 1), (8, 2), (8, 3), (7, 1), (21, 1),
              (14, 2), (6, 2), (12, 2), (9, 1), (8, 1), (8, 5), (16, 11),
              (16, 10), (32, 9), (30, 2), (42, 3), (12, 4), (16, 7), (24, 5),
              (18, 3), (16, 8), (48, 33), (48, 48)],
        "3": [(2, 1), (4, 2), (3, 1), (4, 1), (8, 2), (8, 3), (7, 1), (14, 2),
              (6, 2), (8, 1), (8, 5), (16, 11), (16, 10), (32, 9), (30, 2),
              (16, 7), (16, 8), (6, 2)],
        "5": [(2, 1), (4, 2), (3, 1), (4, 1), (8, 2), (8, 3), (7, 1), (21, 1),
              (14, 2), (6, 2), (12, 2), (9, 1), (8, 1), (8, 5), (16, 11),
              (16, 10), (32, 9), (42, 3), (12, 4), (16, 7), (24, 5), (18, 3),
              (16, 8), (48, 33), (48, 48)],
        "7": [(2, 1), (4, 2), (3, 1), (4, 1), (8, 2), (8, 3), (7, 1), (21, 1),
              (6, 2), (12, 2), (9, 1), (8, 1), (8, 5), (16, 11), (16, 10),
              (32, 9), (30, 2), (42, 3), (12, 4), (16, 7), (24, 5), (18, 3),
              (16, 8), (48, 33), (48, 48)],
        "big": [(2, 1), (4, 2), (3, 1), (4, 1), (8, 2), (8, 3), (7, 1), (21, 1),
                (14, 2), (6, 2), (12, 2), (9, 1), (8, 1), (8, 5), (16, 11),
                (16, 10), (32, 9), (30, 2), (42, 3), (12, 4), (16, 7), (24, 5),
                (18, 3), (16, 8), (48, 33), (48, 48)],
    },
    4: {
        "0": [(2, 1), (4, 2), (3, 1), (6, 2), (9, 2), (5, 1), (10, 2), (20, 1),
              (9, 1), (27, 4), (18, 2), (15, 1), (4, 1), (20, 4), (18, 3),
              (8, 3), (40, 8), (12, 5), (36, 12), (54, 4), (16, 7), (20, 5),
              (32, 19), (24, 10), (8, 4), (60, 9), (36, 11), (24, 3), (72, 42)],
        "3": [(2, 1), (4, 2), (3, 1), (6, 2), (5, 1), (10, 2), (20, 1), (9, 1),
              (18, 2), (15, 1), (4, 1), (20, 4), (8, 3), (40, 8), (12, 5),
              (16, 7), (20, 5), (32, 19), (24, 10), (8, 4), (9, 2), (18, 5)],
        "5": [(2, 1), (4, 2), (3, 1), (6, 2), (9, 2), (5, 1), (10, 2), (20, 1),
              (9, 1), (27, 4), (18, 2), (4, 1), (18, 3), (8, 3), (12, 5),
              (36, 12), (54, 4), (16, 7), (20, 5), (32, 19), (24, 10), (8, 4),
              (60, 9), (36, 11), (24, 3), (72, 42), (10, 2), (18, 5)],
        "7": [(2, 1), (4, 2), (3, 1), (6, 2), (9, 2), (5, 1), (10, 2), (20, 1),
              (9, 1), (27, 4), (18, 2), (15, 1), (4, 1), (20, 4), (18, 3),
              (8, 3), (40, 8), (12, 5), (36, 12), (54, 4), (16, 7), (20, 5),
              (32, 19), (24, 10), (8, 4), (60, 9), (36, 11), (24, 3), (72, 42)],
        "big": [(2, 1), (4, 2), (3, 1), (6, 2), (9, 2), (5, 1), (10, 2), (20, 1),
                (9, 1), (27, 4), (18, 2), (15, 1), (4, 1), (20, 4), (18, 3),
                (8, 3), (40, 8), (12, 5), (36, 12), (54, 4), (16, 7), (20, 5),
                (32, 19), (24, 10), (8, 4), (60, 9), (36, 11), (24, 3), (72, 42)],
    },
}


def char_label(p: int) -> str:
    if p in (0, 3, 5, 7):
        return str(p)
    return "big"


@dataclass
class Discrepancy:
    id: tuple[int, int]
    direction: str  # "golden_only" | "computed_only"
    note: str = ""  # empty = unexplained

    def to_dict(self):
        return {"id": list(self.id), "direction": self.direction,
                "note": self.note or None}


@dataclass
class GoldenComparison:
    genus: int
    label: str
    computed_ids: set
    golden_ids: set
    discrepancies: list[Discrepancy] = field(default_factory=list)
    multiplicity_warnings: list[tuple[int, int]] = field(default_factory=list)

    @property
    def unexplained(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if not d.note]

    @property
    def clean(self) -> bool:
        return not self.discrepancies

    def to_dict(self):
        return {
            "genus": self.genus,
            "characteristic": self.label,
            "matched": sorted(self.computed_ids & self.golden_ids),
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "multiplicity_warnings": [list(x) for x in self.multiplicity_warnings],
            "unexplained": len(self.unexplained),
        }


def _load_notes():
    data = resources.files("cycurve").joinpath("data/golden_notes.json").read_text()
    raw = json.loads(data)
    notes = {}
    for entry in raw:
        for ch in entry["chars"]:
            key = (entry["genus"], ch, tuple(entry["id"]), entry["direction"])
            notes[key] = entry["note"]
    return notes


def compare_with_golden(genus: int, p: int, computed_ids) -> GoldenComparison:
    """Diff a computed id set against the published list for (genus, p)."""
    if genus not in GOLDEN:
        raise ValueError(f"no published table for genus {genus}")
    label = char_label(p)
    published = GOLDEN[genus][label]
    golden_set = set(published)
    computed = set(computed_ids)
    notes = _load_notes()
    comp = GoldenComparison(genus, label, computed, golden_set)
    seen = set()
    for entry in published:
        if entry in seen and entry not in comp.multiplicity_warnings:
            comp.multiplicity_warnings.append(entry)
        seen.add(entry)
    for entry in sorted(golden_set - computed):
        note = notes.get((genus, label, entry, "golden_only"), "")
        comp.discrepancies.append(Discrepancy(entry, "golden_only", note))
    for entry in sorted(computed - golden_set):
        note = notes.get((genus, label, entry, "computed_only"), "")
        comp.discrepancies.append(Discrepancy(entry, "computed_only", note))
    return comp


__all__ = ["GOLDEN", "GoldenComparison", "Discrepancy", "char_label",
           "compare_with_golden"]
