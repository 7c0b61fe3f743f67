"""Fractional linear maps over GF(p^k) and the nine reduced automorphism
group families inside PGL_2.

A MoebiusMap is stored projectively normalized (first nonzero entry of
(a, b, c, d) equals 1) so equality is representational.  `generators` builds
the explicit generator lists of the nine families; `closure` certifies group
order by breadth-first multiplication.

The A_5 generator constant printed in the source material makes the second
generator an element of projective order 10, which cannot lie in A_5; the
constant used here (b with b^2 = 1 - (xi + xi^4), i.e. b = xi + xi^4 up to
sign) restores an involution and the (2,3,5) triangle.  See the package
adjudication report for the verification that drove this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import (
    FieldElement,
    FieldSpec,
    FieldTooSmall,
    Polynomial,
    RationalFraction,
    make_field,
    min_extension_for_orders,
    nth_root_of_unity,
    subfield_elements,
)


class BudgetExceeded(RuntimeError):
    """Closure exceeded its safety cap: the generator set is wrong."""


FAMILIES = ("Cm", "D2m", "A4", "S4", "A5", "U", "Km", "PSL2", "PGL2")


class MoebiusMap:
    """x -> (a x + b) / (c x + d) with ad - bc != 0, projectively normalized."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement):
        det = a * d - b * c
        if not det:
            raise ValueError("degenerate map: ad - bc = 0")
        for entry in (a, b, c, d):
            if entry:
                scale = entry.inverse()
                break
        a, b, c, d = a * scale, b * scale, c * scale, d * scale
        self.a, self.b, self.c, self.d = a, b, c, d
        self._hash = hash((a, b, c, d))

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    @staticmethod
    def identity(field: FieldSpec) -> "MoebiusMap":
        return MoebiusMap(field.one, field.zero, field.zero, field.one)

    @staticmethod
    def scaling(c: FieldElement) -> "MoebiusMap":
        f = c.field
        return MoebiusMap(c, f.zero, f.zero, f.one)

    @staticmethod
    def translation(b: FieldElement) -> "MoebiusMap":
        f = b.field
        return MoebiusMap(f.one, b, f.zero, f.one)

    @staticmethod
    def inversion(field: FieldSpec, scale: Optional[FieldElement] = None) -> "MoebiusMap":
        """x -> scale / x (scale defaults to 1)."""
        s = scale if scale is not None else field.one
        return MoebiusMap(field.zero, s, field.one, field.zero)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self after other: (self . other)(x) = self(other(x))."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return MoebiusMap(a, b, c, d)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def determinant(self) -> FieldElement:
        return self.a * self.d - self.b * self.c

    def apply(self, x: FieldElement) -> Optional[FieldElement]:
        """Image of a finite point; None encodes the point at infinity."""
        den = self.c * x + self.d
        num = self.a * x + self.b
        if not den:
            return None
        return num / den

    def projective_order(self, cap: int = 10000) -> int:
        ident = MoebiusMap.identity(self.field)
        m = self
        for n in range(1, cap + 1):
            if m == ident:
                return n
            m = m.compose(self)
        raise BudgetExceeded(f"order exceeds {cap}")

    def __eq__(self, other):
        return (
            isinstance(other, MoebiusMap)
            and (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"({self.a}x + {self.b})/({self.c}x + {self.d})"


def compose_fraction(z: RationalFraction, m: MoebiusMap) -> RationalFraction:
    """Canonical form of z((ax+b)/(cx+d)), clearing denominators exactly."""
    fld = z.field
    deg = z.degree
    lin_num = Polynomial(fld, [m.b, m.a])  # a x + b
    lin_den = Polynomial(fld, [m.d, m.c])  # c x + d
    den_pows = [Polynomial.one(fld)]
    for _ in range(deg):
        den_pows.append(den_pows[-1] * lin_den)

    def substitute(poly: Polynomial) -> Polynomial:
        # sum_i c_i (ax+b)^i (cx+d)^(deg-i), by Horner in (ax+b)
        acc = Polynomial.zero(fld)
        for i in range(deg, -1, -1):
            acc = acc * lin_num
            ci = poly.coeff(i)
            if ci:
                acc = acc + den_pows[deg - i] * ci
        return acc

    return RationalFraction(substitute(z.num), substitute(z.den))


def closure(gens: list[MoebiusMap], expected: Optional[int] = None, cap_factor: int = 10) -> set[MoebiusMap]:
    """Full projective group generated, by BFS; errors past the safety cap."""
    if not gens:
        raise ValueError("empty generator list")
    cap = cap_factor * expected if expected else 100000
    seen = {MoebiusMap.identity(gens[0].field)}
    frontier = list(seen)
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                m = g.compose(h)
                if m not in seen:
                    seen.add(m)
                    new.append(m)
                    if len(seen) > cap:
                        raise BudgetExceeded(
                            f"closure exceeded cap {cap} (expected {expected})"
                        )
        frontier = new
    return seen


@dataclass(frozen=True)
class ReducedGroupSpec:
    """One of the nine reduced-group families with its parameters.

    m is used by Cm / D2m / Km; t by U / Km; f (with q = p^f) by PSL2 / PGL2.
    p is the ambient characteristic (0 allowed for the five tame families).
    """

    family: str
    p: int = 0
    m: int = 0
    t: int = 0
    f: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family}")
        fam, p, m = self.family, self.p, self.m
        if fam in ("Cm", "D2m", "Km"):
            if m < 1:
                raise ValueError(f"{fam} needs m >= 1")
            if p and m % p == 0:
                raise ValueError(f"{fam} needs gcd(m, p) = 1")
        if fam in ("U", "Km") and (self.t < 1 or p == 0):
            raise ValueError(f"{fam} needs positive characteristic and t >= 1")
        if fam == "Km" and (p**self.t - 1) % m != 0:
            raise ValueError("Km needs m | p^t - 1")
        if fam in ("PSL2", "PGL2") and (self.f < 1 or p == 0):
            raise ValueError(f"{fam} needs positive characteristic and f >= 1")
        if fam in ("A4", "S4") and p in (2, 3):
            raise ValueError(f"{fam} requires p not in {{2, 3}}")
        if fam == "A5" and p in (2, 5):
            raise ValueError("A5 requires p not in {2, 5}")

    @property
    def q(self) -> int:
        if self.family not in ("PSL2", "PGL2"):
            raise ValueError("q only defined for PSL2/PGL2")
        return self.p**self.f

    def order(self) -> int:
        fam = self.family
        if fam == "Cm":
            return self.m
        if fam == "D2m":
            return 2 * self.m
        if fam == "A4":
            return 12
        if fam == "S4":
            return 24
        if fam == "A5":
            return 60
        if fam == "U":
            return self.p**self.t
        if fam == "Km":
            return self.m * self.p**self.t
        q = self.q
        half = (q * (q - 1) * (q + 1)) // 2
        return half if fam == "PSL2" else 2 * half


def group_order(spec: ReducedGroupSpec) -> int:
    return spec.order()


def min_field_degree(spec: ReducedGroupSpec) -> int:
    """Least k such that GF(p^k) carries all constants the family's generators need."""
    fam, p = spec.family, spec.p
    if p == 0:
        raise ValueError("generators need a positive characteristic field")
    if fam == "Cm":
        return min_extension_for_orders(p, [spec.m]) if spec.m > 1 else 1
    if fam == "D2m":
        return min_extension_for_orders(p, [spec.m]) if spec.m > 1 else 1
    if fam == "A4":
        return min_extension_for_orders(p, [4])  # i with i^2 = -1
    if fam == "S4":
        return min_extension_for_orders(p, [4])
    if fam == "A5":
        return min_extension_for_orders(p, [5, 4])  # xi_5 and i
    if fam == "U":
        return spec.t
    if fam == "Km":
        k = spec.t
        # xi of order 2m for t(x) = xi^2 x
        import math

        return math.lcm(k, min_extension_for_orders(p, [2 * spec.m]))
    if fam in ("PSL2", "PGL2"):
        return spec.f
    raise ValueError(fam)


def field_for(spec: ReducedGroupSpec) -> FieldSpec:
    return make_field(spec.p, min_field_degree(spec))


def a5_involution_constant(field: FieldSpec) -> FieldElement:
    """The constant b of the A_5 generator rho(x) = (x + b)/(b x - 1).

    b = -(xi + xi^4) for xi a primitive 5th root of unity.  The printed
    constant -i(xi + xi^4) makes rho an element of projective order 10 and
    blows up the closure; dropping the factor i (and the outer sign on rho)
    restores an involution in the icosahedral group that actually fixes the
    printed fixed-field function.
    """
    xi = nth_root_of_unity(field, 5)
    return -(xi + xi**4)


def generators(spec: ReducedGroupSpec, field: FieldSpec) -> list[MoebiusMap]:
    """Generator list of the reduced group, realized in PGL_2(GF(p^k)).

    Raises FieldTooSmall when a required constant is missing.
    """
    fam = spec.family
    if field.p != spec.p:
        raise ValueError("field characteristic does not match the spec")
    one, zero = field.one, field.zero

    if fam == "Cm":
        if spec.m == 1:
            return [MoebiusMap.identity(field)]
        zeta = nth_root_of_unity(field, spec.m)
        return [MoebiusMap.scaling(zeta)]

    if fam == "D2m":
        # sigma(x) = zeta x with zeta of order m, t(x) = 1/x.  The printed
        # generator uses a 2m-th root, which fails both invariance of
        # x^m + x^-m and the order-2m closure; see the adjudication report.
        if spec.m == 1:
            sigma = MoebiusMap.identity(field)
        else:
            sigma = MoebiusMap.scaling(nth_root_of_unity(field, spec.m))
        return [sigma, MoebiusMap.inversion(field)]

    if fam == "A4":
        i = nth_root_of_unity(field, 4)
        sigma = MoebiusMap.scaling(-one)
        mu = MoebiusMap(i, i, one, -one)  # i(x+1)/(x-1)
        return [sigma, mu]

    if fam == "S4":
        i = nth_root_of_unity(field, 4)
        sigma = MoebiusMap.scaling(i)
        mu = MoebiusMap(i, i, one, -one)
        return [sigma, mu]

    if fam == "A5" and spec.p == 3:
        return _a5_char3_generators(field)

    if fam == "A5":
        xi = nth_root_of_unity(field, 5)
        b = a5_involution_constant(field)
        sigma = MoebiusMap.scaling(xi)
        rho = MoebiusMap(one, b, b, -one)  # (x + b)/(b x - 1)
        return [sigma, rho]

    if fam == "U":
        basis = _additive_basis(field, spec.t)
        return [MoebiusMap.translation(a) for a in basis]

    if fam == "Km":
        basis = _additive_basis(field, spec.t)
        xi = nth_root_of_unity(field, 2 * spec.m)
        maps = [MoebiusMap.translation(a) for a in basis]
        maps.append(MoebiusMap.scaling(xi * xi))
        return maps

    if fam in ("PSL2", "PGL2"):
        q = spec.q
        if (field.order - 1) % (q - 1) != 0 or field.k % spec.f != 0:
            raise FieldTooSmall(f"GF({spec.p}^{spec.f}) constants missing from {field}")
        if q == 3:
            xi = -one  # q - 1 = 2
        else:
            xi = nth_root_of_unity(field, q - 1)
        phi = MoebiusMap.translation(one)
        if fam == "PSL2":
            sigma = MoebiusMap.scaling(xi * xi)
            t = MoebiusMap(zero, -one, one, zero)  # -1/x
        else:
            sigma = MoebiusMap.scaling(xi)
            t = MoebiusMap.inversion(field)  # 1/x
        gens = [sigma, t, phi]
        if spec.f > 1:
            # translations by a basis of GF(q) (conjugates of phi by sigma
            # only span the squares' additive span; add them explicitly)
            gens.extend(
                MoebiusMap.translation(a)
                for a in _additive_basis(field, spec.f)
            )
        return gens

    raise ValueError(fam)


def _a5_char3_generators(field: FieldSpec) -> list[MoebiusMap]:
    """Generators of the icosahedral group in characteristic 3.

    sigma(x) = xi x as usual; the involution must lie in the stabilizer of
    the characteristic-3 fixed function (x^10 - 1)^6 / (x (x^10 + 2i x^5 + 1))^5,
    so it is built from that function's pole set: it swaps 0 with the least
    pole w and infinity with i^(+-1) w.  Validated against the fixed function
    itself, which keeps the choice deterministic.
    """
    from .field import Polynomial, RationalFraction

    i = nth_root_of_unity(field, 4)
    x = Polynomial.x(field)
    one_p = Polynomial.one(field)
    inner = x**10 + Polynomial.constant(field, i + i) * x**5 + one_p
    z = RationalFraction((x**10 - one_p) ** 6, (x * inner) ** 5)
    roots = inner.distinct_roots_in_field()
    if len(roots) < 10:
        raise FieldTooSmall("characteristic-3 icosahedral poles missing")
    w = roots[0]
    root_set = set(roots)
    sigma = MoebiusMap.scaling(nth_root_of_unity(field, 5))
    for u in (i, -i):
        wp = u * w
        if wp not in root_set:
            continue
        rho = MoebiusMap(wp, -(w * wp), field.one, -wp)
        if compose_fraction(z, rho) == z:
            return [sigma, rho]
    raise FieldTooSmall("no involution stabilizing the characteristic-3 row")


def _additive_basis(field: FieldSpec, t: int) -> list[FieldElement]:
    """A GF(p)-basis of the subfield GF(p^t) inside field (requires t | k)."""
    if field.k % t != 0:
        raise FieldTooSmall(f"subfield GF({field.p}^{t}) does not embed in {field}")
    elems = subfield_elements(field, t)
    basis: list[FieldElement] = []
    span = {field.zero}
    for e in elems:
        if e in span:
            continue
        basis.append(e)
        new = set()
        for s in span:
            cur = s
            for _ in range(field.p - 1):
                cur = cur + e
                new.add(cur)
        span |= new
        if len(basis) == t:
            break
    assert len(span) == field.p**t
    return basis


__all__ = [
    "BudgetExceeded",
    "FAMILIES",
    "MoebiusMap",
    "ReducedGroupSpec",
    "closure",
    "compose_fraction",
    "field_for",
    "generators",
    "group_order",
    "min_field_degree",
    "a5_involution_constant",
]
