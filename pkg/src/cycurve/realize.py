"""Coset enumeration, concrete group invariants, and small-group
identification.

`enumerate_cosets` is a deterministic HLT-style Todd-Coxeter: cosets are
defined in scan order, so the same presentation always yields the same
table.  A complete table over the trivial subgroup is the regular
permutation representation; `CayleyGroup` wraps it and computes the
isomorphism invariants that make up a `Fingerprint` (order, abelian
invariants, element-order spectrum, conjugacy class count, center order,
derived length).

Identification matches fingerprints against the catalog data file shipped
in cycurve/data/smallgroup_catalog.txt (see tools/make_catalog.py for how
it is produced and for the provenance of each id).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from .presentations import GroupPresentation, Word


class Overflow(RuntimeError):
    """Coset budget exhausted: infinite group or budget too small."""


class Ambiguous(LookupError):
    """Fingerprint matches several catalog entries of the same order."""

    def __init__(self, candidates):
        self.candidates = candidates
        super().__init__(f"ambiguous fingerprint: {candidates}")


DEFAULT_MAX_COSETS = 20000


def coset_budget(expected_order: int | None = None) -> int:
    env = os.environ.get("CYCURVE_MAX_COSETS")
    if env:
        return int(env)
    if expected_order:
        return max(4 * expected_order, 256)
    return DEFAULT_MAX_COSETS


@dataclass
class CosetTable:
    """Complete coset table: rows[c][letter] for letters 2i (gen i), 2i+1 (inverse)."""

    generators: tuple[str, ...]
    rows: list[list[int]]
    status: str  # "complete" | "overflow"

    @property
    def order(self) -> int:
        return len(self.rows)


def _letters_of(word: Word, gen_index: dict[str, int]) -> list[int]:
    letters = []
    for g, e in word:
        base = 2 * gen_index[g]
        letter = base if e > 0 else base + 1
        letters.extend([letter] * abs(e))
    return letters


def enumerate_cosets(pres: GroupPresentation, max_cosets: int | None = None) -> CosetTable:
    """Todd-Coxeter over the trivial subgroup; raises Overflow past the budget."""
    gens = pres.generators
    gen_index = {g: i for i, g in enumerate(gens)}
    nlet = 2 * len(gens)
    relators = [_letters_of(w, gen_index) for w in pres.relators if w]
    cap = max_cosets or coset_budget()

    table: list[list[Optional[int]]] = [[None] * nlet]
    p = [0]  # union-find for coincidences

    def rep(c: int) -> int:
        while p[c] != c:
            p[c] = p[p[c]]
            c = p[c]
        return c

    def define(c: int, x: int) -> int:
        if len(table) >= cap:
            raise Overflow(f"coset budget {cap} exhausted")
        d = len(table)
        table.append([None] * nlet)
        p.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c
        return d

    def merge(a: int, b: int):
        """Standard coincidence processing: union the classes and replay the
        dead cosets' rows, merging further classes as clashes surface."""
        a, b = rep(a), rep(b)
        if a == b:
            return
        queue = [max(a, b)]
        p[max(a, b)] = min(a, b)
        while queue:
            dead = queue.pop()
            for x in range(nlet):
                target = table[dead][x]
                if target is None:
                    continue
                if table[target][x ^ 1] == dead:
                    table[target][x ^ 1] = None
                mu, nu = rep(dead), rep(target)
                if table[mu][x] is not None:
                    other = rep(table[mu][x])
                    if other != nu:
                        lo, hi = min(other, nu), max(other, nu)
                        p[hi] = lo
                        queue.append(hi)
                elif table[nu][x ^ 1] is not None:
                    other = rep(table[nu][x ^ 1])
                    if other != mu:
                        lo, hi = min(other, mu), max(other, mu)
                        p[hi] = lo
                        queue.append(hi)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(c: int, word: list[int]):
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            # scan forward as far as possible
            while i <= j:
                nxt = table[f][word[i]]
                if nxt is None:
                    break
                f = rep(nxt)
                i += 1
            if i > j:
                if f != b:
                    merge(f, b)
                return
            # scan backward
            while j >= i:
                prev = table[b][word[j] ^ 1]
                if prev is None:
                    break
                b = rep(prev)
                j -= 1
            if j < i:
                merge(f, b)
                return
            if j == i:
                # deduction closes the gap
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            # fill one definition and continue scanning
            define(f, word[i])

    c = 0
    while c < len(table):
        if rep(c) != c:
            c += 1
            continue
        for word in relators:
            scan_and_fill(c, word)
            if rep(c) != c:
                break
        if rep(c) == c:
            for x in range(nlet):
                if table[c][x] is None:
                    define(c, x)
        c += 1

    # coincidences can undefine entries of already-processed cosets; sweep
    # until the live table is total and every relator closes everywhere
    while True:
        dirty = False
        for c in range(len(table)):
            if rep(c) != c:
                continue
            for x in range(nlet):
                if table[c][x] is None:
                    define(c, x)
                    dirty = True
            for word in relators:
                scan_and_fill(c, word)
                if rep(c) != c:
                    dirty = True
                    break
        if not dirty:
            break

    # compress live cosets
    live = [c for c in range(len(table)) if rep(c) == c]
    renum = {old: new for new, old in enumerate(live)}
    rows = [[renum[rep(table[old][x])] for x in range(nlet)] for old in live]
    return CosetTable(tuple(gens), rows, "complete")


class CayleyGroup:
    """The regular representation of a finite group, from a coset table.

    Element i is the coset i; perms[i] is right multiplication by element i,
    so products are table lookups: (a * b) = perms[b][a].
    """

    def __init__(self, table: CosetTable):
        n = table.order
        nlet = 2 * len(table.generators)
        gen_perms = {x: [table.rows[c][x] for c in range(n)] for x in range(nlet)}
        perms: list[Optional[tuple[int, ...]]] = [None] * n
        perms[0] = tuple(range(n))
        frontier = [0]
        while frontier:
            new = []
            for i in frontier:
                base = perms[i]
                for x in range(nlet):
                    j = gen_perms[x][i]
                    if perms[j] is None:
                        gp = gen_perms[x]
                        perms[j] = tuple(gp[v] for v in base)
                        new.append(j)
            frontier = new
        assert all(pm is not None for pm in perms)
        self.table = table
        self.n = n
        self.perms = [list(pm) for pm in perms]
        self.inv = [pm.index(0) for pm in self.perms]
        self.gen_elements = [table.rows[0][2 * i] for i in range(len(table.generators))]

    def mul(self, a: int, b: int) -> int:
        return self.perms[b][a]

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.perms[g][self.perms[x][self.inv[g]]]

    def element_order(self, i: int) -> int:
        if i == 0:
            return 1
        k, x = 1, i
        while x != 0:
            x = self.perms[i][x]
            k += 1
        return k

    @property
    def order(self) -> int:
        return self.n

    def order_spectrum(self) -> dict[int, int]:
        spec: dict[int, int] = {}
        for i in range(self.n):
            o = self.element_order(i)
            spec[o] = spec.get(o, 0) + 1
        return spec

    def center_order(self) -> int:
        count = 0
        for x in range(self.n):
            if all(self.mul(x, g) == self.mul(g, x) for g in self.gen_elements):
                count += 1
        return count

    def class_count(self) -> int:
        parent = list(range(self.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for x in range(self.n):
            for g in self.gen_elements:
                y = self.conj(x, g)
                ra, rb = find(x), find(y)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return len({find(x) for x in range(self.n)})

    def subgroup_closure(self, elts) -> set[int]:
        seen = {0}
        frontier = [0]
        gens = [e for e in set(elts) if e != 0]
        while frontier:
            new = []
            for a in frontier:
                for b in gens:
                    c = self.mul(a, b)
                    if c not in seen:
                        seen.add(c)
                        new.append(c)
            frontier = new
        return seen

    def derived_subgroup(self, elements: Optional[set[int]] = None) -> set[int]:
        """[H, H] for H given by its full element set (default the whole group)."""
        if elements is None:
            elements = set(range(self.n))
        elems = sorted(elements)
        comms = set()
        for a in elems:
            ia = self.inv[a]
            for b in elems:
                c = self.mul(self.mul(self.mul(ia, self.inv[b]), a), b)
                comms.add(c)
        return self.subgroup_closure(comms)

    def derived_length(self) -> int:
        """Length of the derived series; -1 when it stabilizes off the identity."""
        current = set(range(self.n))
        length = 0
        while len(current) > 1:
            nxt = self.derived_subgroup(current)
            if len(nxt) == len(current):
                return -1
            current = nxt
            length += 1
            if length > 40:
                return -1
        return length

    def abelian_invariants(self) -> tuple[int, ...]:
        """Invariant factors of G/[G, G] (1 < d_1 | d_2 | ...), possibly empty."""
        derived = self.derived_subgroup()
        dlist = sorted(derived)
        coset_of = {}
        reps = []
        for x in range(self.n):
            if x in coset_of:
                continue
            members = {self.mul(d, x) for d in dlist}
            for m in members:
                coset_of[m] = len(reps)
            reps.append(x)
        # orders of the quotient elements
        orders = []
        for r in reps:
            k, x = 1, r
            while coset_of[x] != 0:
                x = self.mul(x, r)
                k += 1
            orders.append(k)
        return _abelian_from_orders(orders)

    def has_element_of_order(self, k: int) -> bool:
        return any(self.element_order(i) == k for i in range(self.n))


def _abelian_from_orders(orders: list[int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from its element orders.

    For each prime pi | N the counts N_j = #{a : pi-part of ord(a) <= pi^j}
    satisfy N_j = pi^(sum_i min(lambda_i, j)), which pins the partition
    lambda of the pi-primary component.
    """
    N = len(orders)
    if N == 1:
        return ()
    from .field import factorize

    partitions: dict[int, list[int]] = {}
    for prime in factorize(N):
        coprime_part = N // _ppart(N, prime)  # size of the other primary components
        s = [0]  # s[j] = sum_i min(lambda_i, j)
        j = 1
        while True:
            nj = sum(1 for o in orders if _ppart(o, prime) <= prime**j)
            s.append(_intlog(nj // coprime_part, prime))
            if nj == N:
                break
            j += 1
        conj = [s[i] - s[i - 1] for i in range(1, len(s))]  # #parts >= i
        lam = [sum(1 for mj in conj if mj >= i) for i in range(1, (conj[0] or 0) + 1)]
        partitions[prime] = lam  # already non-increasing
    width = max((len(v) for v in partitions.values()), default=0)
    factors = []
    for i in range(width):
        d = 1
        for prime, lam in partitions.items():
            if i < len(lam):
                d *= prime ** lam[i]
        factors.append(d)
    return tuple(sorted(factors))


def _intlog(n: int, base: int) -> int:
    e = 0
    while n > 1:
        n //= base
        e += 1
    return e


def _ppart(o: int, prime: int) -> int:
    q = 1
    while o % (q * prime) == 0:
        q *= prime
    return q


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian_invariants: tuple[int, ...]
    order_spectrum: tuple[tuple[int, int], ...]  # sorted (order, count)
    class_count: int
    center_order: int
    derived_length: int

    def key(self):
        return (
            self.order,
            self.abelian_invariants,
            self.order_spectrum,
            self.class_count,
            self.center_order,
            self.derived_length,
        )

    def serialize(self) -> str:
        ab = ",".join(map(str, self.abelian_invariants)) or "-"
        spec = ",".join(f"{o}:{c}" for o, c in self.order_spectrum)
        return f"{ab} | {spec} | {self.class_count} | {self.center_order} | {self.derived_length}"


def fingerprint(table_or_group) -> Fingerprint:
    g = table_or_group if isinstance(table_or_group, CayleyGroup) else CayleyGroup(table_or_group)
    spec = tuple(sorted(g.order_spectrum().items()))
    return Fingerprint(
        order=g.order,
        abelian_invariants=g.abelian_invariants(),
        order_spectrum=spec,
        class_count=g.class_count(),
        center_order=g.center_order(),
        derived_length=g.derived_length(),
    )


def realize(pres: GroupPresentation, expected_order: int | None = None) -> CayleyGroup:
    """Enumerate and wrap; retries once with a larger budget, since HLT can
    overshoot the 4x default on unlucky definition orders.  Results are
    cached (identical presentations recur across classification rows); treat
    the returned group as read-only."""
    if not os.environ.get("CYCURVE_MAX_COSETS"):
        return _realize_cached(pres, expected_order)
    return _realize_uncached(pres, expected_order)


@lru_cache(maxsize=512)
def _realize_cached(pres: GroupPresentation, expected_order: int | None) -> CayleyGroup:
    return _realize_uncached(pres, expected_order)


def _realize_uncached(pres: GroupPresentation, expected_order: int | None) -> CayleyGroup:
    budget = coset_budget(expected_order)
    try:
        table = enumerate_cosets(pres, budget)
    except Overflow:
        if os.environ.get("CYCURVE_MAX_COSETS"):
            raise
        table = enumerate_cosets(pres, 16 * budget)
    return CayleyGroup(table)


@lru_cache(maxsize=None)
def presentation_fingerprint(pres: GroupPresentation, expected_order: int | None = None) -> Fingerprint:
    return fingerprint(realize(pres, expected_order))


# -- catalog -----------------------------------------------------------------------


@dataclass(frozen=True)
class SmallGroupId:
    order: int
    index: int

    def as_pair(self) -> tuple[int, int]:
        return (self.order, self.index)

    def __repr__(self):
        return f"({self.order}, {self.index})"


class Catalog:
    """Fingerprint table keyed by group order, loaded from the data file."""

    def __init__(self, entries: dict[tuple[int, int], Fingerprint], complete_orders: set[int]):
        self.entries = entries
        self.complete_orders = complete_orders
        self.by_order: dict[int, list[tuple[int, Fingerprint]]] = {}
        for (order, index), fp in sorted(entries.items()):
            self.by_order.setdefault(order, []).append((index, fp))
        # any same-order fingerprint collision downgrades identification there
        self.collisions: set[int] = set()
        for order, rows in self.by_order.items():
            keys = [fp.key() for _, fp in rows]
            if len(set(keys)) != len(keys):
                self.collisions.add(order)

    @property
    def max_order(self) -> int:
        return max(self.by_order) if self.by_order else 0

    def identify(self, fp: Fingerprint) -> Optional[SmallGroupId]:
        """The unique matching id, None when the order is uncataloged or no
        entry matches, Ambiguous when several match."""
        rows = self.by_order.get(fp.order)
        if not rows:
            return None
        matches = [SmallGroupId(fp.order, idx) for idx, cat in rows if cat.key() == fp.key()]
        if not matches:
            return None
        if len(matches) > 1:
            raise Ambiguous([m.as_pair() for m in matches])
        return matches[0]


def _parse_catalog(text: str) -> Catalog:
    entries: dict[tuple[int, int], Fingerprint] = {}
    complete: set[int] = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("complete:"):
            complete.update(int(tok) for tok in line[9:].split())
            continue
        head, ab, spec, classes, center, dl = [part.strip() for part in line.split("|")]
        order_s, index_s = head.split()
        ab_t = tuple(int(x) for x in ab.split(",")) if ab != "-" else ()
        spec_t = tuple(
            (int(o), int(c)) for o, c in (pair.split(":") for pair in spec.split(","))
        )
        fp = Fingerprint(int(order_s), ab_t, spec_t, int(classes), int(center), int(dl))
        entries[(int(order_s), int(index_s))] = fp
    return Catalog(entries, complete)


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    data = resources.files("cycurve").joinpath("data/smallgroup_catalog.txt").read_text()
    return _parse_catalog(data)


def identify(fp: Fingerprint) -> Optional[SmallGroupId]:
    return load_catalog().identify(fp)


__all__ = [
    "Ambiguous",
    "Catalog",
    "CayleyGroup",
    "CosetTable",
    "Fingerprint",
    "Overflow",
    "SmallGroupId",
    "coset_budget",
    "enumerate_cosets",
    "fingerprint",
    "identify",
    "load_catalog",
    "presentation_fingerprint",
    "realize",
]
