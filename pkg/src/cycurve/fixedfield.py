"""Fixed-field rational functions z = phi(x) of the nine reduced groups,
with invariance verification and branch-profile computation.

The ramification profile is computed without any derivative-based
multiplicity counting: fiber multiplicities come from char-p-safe squarefree
decomposition of N - z0*D (robust under wild ramification), and candidate
branch values are the images of the zeros of the Wronskian N'D - ND', which
contains every finite ramification point in any characteristic.  The zeros
themselves are located by enlarging the field until the Wronskian's radical
splits.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import (
    FieldElement,
    FieldSpec,
    Polynomial,
    RationalFraction,
    embedding,
    make_field,
    nth_root_of_unity,
    subfield_elements,
)
from .moebius import (
    ReducedGroupSpec,
    compose_fraction,
    generators,
    group_order,
    min_field_degree,
)


class IncompleteSplitting(RuntimeError):
    """The enlargement was too small for the Wronskian's radical to split."""


@dataclass
class FixedFieldRecord:
    spec: ReducedGroupSpec
    z: RationalFraction
    expected_degree: int
    expected_ramification: tuple[int, ...]
    field: FieldSpec = dc_field(repr=False, default=None)


def min_field_degree_for_row(spec: ReducedGroupSpec) -> int:
    """Least k so GF(p^k) holds both the generators and the printed z."""
    k = min_field_degree(spec)
    if spec.family == "A5" and spec.p == 3:
        # the p = 3 numerator contains i
        from .field import min_extension_for_orders

        import math

        k = math.lcm(k, min_extension_for_orders(3, [4]))
    return k


def field_for_row(spec: ReducedGroupSpec) -> FieldSpec:
    return make_field(spec.p, min_field_degree_for_row(spec))


def build_z(spec: ReducedGroupSpec, fld: FieldSpec) -> FixedFieldRecord:
    """The Table-1 fixed rational function for the family, canonicalized."""
    fam = spec.family
    x = Polynomial.x(fld)
    one = Polynomial.one(fld)

    def C(n: int) -> Polynomial:
        return Polynomial.constant(fld, fld.from_int(n))

    if fam == "Cm":
        z = RationalFraction(x**spec.m)
        ram = (spec.m, spec.m)
    elif fam == "D2m":
        m = spec.m
        z = RationalFraction(x ** (2 * m) + one, x**m)
        ram = (2, 2, m)
    elif fam == "A4":
        num = x**12 - C(33) * x**8 - C(33) * x**4 + one
        den = x**2 * (x**4 - one) ** 2
        z = RationalFraction(num, den)
        ram = (2, 3, 3)
    elif fam == "S4":
        num = (x**8 + C(14) * x**4 + one) ** 3
        den = C(108) * (x * (x**4 - one)) ** 4
        z = RationalFraction(num, den)
        ram = (2, 3, 4)
    elif fam == "A5" and spec.p != 3:
        num = (-(x**20) + C(228) * x**15 - C(494) * x**10 - C(228) * x**5 - one) ** 3
        den = (x * (x**10 + C(11) * x**5 - one)) ** 5
        z = RationalFraction(num, den)
        ram = (2, 3, 5)
    elif fam == "A5":  # p = 3 row
        i = nth_root_of_unity(fld, 4)
        num = (x**10 - one) ** 6
        den = (x * (x**10 + Polynomial.constant(fld, i + i) * x**5 + one)) ** 5
        z = RationalFraction(num, den)
        ram = (6, 5)
    elif fam == "U":
        h = subfield_elements(fld, spec.t)
        f = one
        for a in h:
            f = f * (x + Polynomial.constant(fld, a))
        z = RationalFraction(f)
        ram = (spec.p**spec.t,)
    elif fam == "Km":
        m, t = spec.m, spec.t
        sub = subfield_elements(fld, t)
        bs = sorted({(a**m) for a in sub if a}, key=lambda e: e.index())
        inner = x
        for b in bs:
            inner = inner * (x**m - Polynomial.constant(fld, b))
        z = RationalFraction(inner**m)
        ram = (m * spec.p**t, m)
    elif fam in ("PSL2", "PGL2"):
        q = spec.q
        w = x**q - x
        if fam == "PSL2":
            num = (w ** (q - 1) + one) ** ((q + 1) // 2)
            den = w ** ((q * (q - 1)) // 2)
            ram = ((q * (q - 1)) // 2, (q + 1) // 2)
        else:
            num = (w ** (q - 1) + one) ** (q + 1)
            den = w ** (q * (q - 1))
            ram = (q * (q - 1), q + 1)
        z = RationalFraction(num, den)
    else:
        raise ValueError(fam)

    rec = FixedFieldRecord(
        spec=spec,
        z=z,
        expected_degree=group_order(spec),
        expected_ramification=tuple(sorted(ram, reverse=True)),
        field=fld,
    )
    if rec.z.degree != rec.expected_degree:
        raise AssertionError(
            f"degree of z for {fam} is {rec.z.degree}, expected {rec.expected_degree}"
        )
    return rec


def verify_invariance(rec: FixedFieldRecord, fld: FieldSpec) -> bool:
    """True iff z o g = z for every generator g of the family."""
    gens = generators(rec.spec, fld)
    return all(compose_fraction(rec.z, g) == rec.z for g in gens)


def different_exponent(e: int, p: int) -> int:
    """Exponent of a ramified place in the different: e - 1 tame, or
    e* q1 + q1 - 2 wild (q1 the p-part of e)."""
    if p == 0 or e % p != 0:
        return e - 1
    q1 = 1
    while e % (q1 * p) == 0:
        q1 *= p
    e_star = e // q1
    return e_star * q1 + q1 - 2


def _fiber_multiplicities(poly: Polynomial, inf_mult: int) -> list[int]:
    """Multiplicities of all geometric points of a fiber: those of the roots
    of `poly` over the algebraic closure (via squarefree decomposition) plus
    an optional point at infinity."""
    mults: list[int] = []
    if poly.degree > 0:
        for g, m in poly.squarefree_decomposition():
            mults.extend([m] * g.degree)
    if inf_mult > 0:
        mults.append(inf_mult)
    return mults


def _radical(poly: Polynomial) -> Polynomial:
    rad = Polynomial.one(poly.field)
    for g, _ in poly.squarefree_decomposition():
        rad = rad * g
    return rad


def _resultant(f: Polynomial, g: Polynomial) -> FieldElement:
    """Res(f, g) by the Euclidean scheme (both nonzero)."""
    fld = f.field
    res = fld.one
    sign = 1
    while True:
        if g.degree == 0:
            return (res * g.leading() ** f.degree) * (
                fld.one if sign == 1 else -fld.one
            )
        if f.degree < g.degree:
            if (f.degree * g.degree) % 2 == 1:
                sign = -sign
            f, g = g, f
            continue
        r = f % g
        if r.is_zero():
            return fld.zero
        if (f.degree * g.degree) % 2 == 1:
            sign = -sign
        res = res * g.leading() ** (f.degree - r.degree)
        f, g = g, r
    raise AssertionError


def _interpolate(points: list[tuple[FieldElement, FieldElement]], fld: FieldSpec) -> Polynomial:
    """Lagrange interpolation through (x_i, y_i)."""
    result = Polynomial.zero(fld)
    xs = [x for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        if not yi:
            continue
        basis = Polynomial.one(fld)
        denom = fld.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * Polynomial(fld, [-xj, fld.one])
            denom = denom * (xi - xj)
        result = result + basis * (yi / denom)
    return result


def _branch_value_poly(num: Polynomial, den: Polynomial, fld: FieldSpec):
    """A polynomial R(z) over an extension of fld whose roots are exactly the
    finite branch values of num/den.

    R(z) = Res_X(radical(W), num - z*den) with W the Wronskian; computed by
    evaluation and interpolation over the smallest extension with enough
    sample points.  Returns (R, sampling_field, sampling_extension_degree).
    """
    if num.degree <= den.degree:
        raise ValueError("expects deg num > deg den (all Table-1 rows comply)")
    wron = num.derivative() * den - num * den.derivative()
    if wron.is_zero():
        raise ValueError("inseparable map: Wronskian vanishes identically")
    rad = _radical(wron)
    bound = rad.degree  # deg_z R <= number of distinct finite ramification points
    s = 1
    while fld.p ** (fld.k * s) <= bound + 1:
        s += 1
    big = make_field(fld.p, fld.k * s)
    if s == 1:
        rad_b, num_b, den_b = rad, num, den
    else:
        emb = embedding(fld, big)
        rad_b = rad.map_coeffs(emb, big)
        num_b = num.map_coeffs(emb, big)
        den_b = den.map_coeffs(emb, big)
    samples = []
    for idx in range(bound + 1):
        zi = big.elt(idx)
        fiber = num_b - den_b * Polynomial.constant(big, zi)
        samples.append((zi, _resultant(rad_b, fiber)))
    R = _interpolate(samples, big)
    return R, big, s, (num_b, den_b)


def _finite_branch_fibers(
    num: Polynomial, den: Polynomial, fld: FieldSpec, enlargement: int
):
    """Yield the multiplicity multiset of the fiber over each finite branch
    value.  Branch values are located as roots of the resultant polynomial,
    searching extensions until it splits completely."""
    R, sfield, s, (num_s, den_s) = _branch_value_poly(num, den, fld)
    if R.degree <= 0:
        return []
    deg = max(num.degree, den.degree)
    out = []
    for j in range(1, enlargement + 1):
        big = make_field(fld.p, sfield.k * j)
        if j == 1:
            Rb, num_b, den_b = R, num_s, den_s
        else:
            emb = embedding(sfield, big)
            Rb = R.map_coeffs(emb, big)
            num_b = num_s.map_coeffs(emb, big)
            den_b = den_s.map_coeffs(emb, big)
        roots = _radical(Rb).distinct_roots_in_field()
        covered = sum(Rb.root_multiplicity(r) for r in roots)
        if covered < Rb.degree:
            continue  # some branch value lives further out
        for z0 in roots:
            fiber = num_b - den_b * Polynomial.constant(big, z0)
            mults = _fiber_multiplicities(fiber, deg - fiber.degree)
            assert sum(mults) == deg
            out.append(mults)
        return out
    raise IncompleteSplitting(
        f"branch values of degree-{deg} map not found within enlargement {enlargement}"
    )


def ramification_profile(
    rec: FixedFieldRecord, fld: FieldSpec, enlargement: int = 12
) -> tuple[int, ...]:
    """Multiset of ramification indices, one entry per branch point (the
    maximal index over that point, which for the Table-1 rows is the common
    one).  `enlargement` caps the extension-degree search for locating
    branch values."""
    deg = rec.z.degree
    profile: list[int] = []

    # the fiber over z0 = infinity needs no extension at all
    inf_mults = _fiber_multiplicities(rec.z.den, deg - rec.z.den.degree)
    assert sum(inf_mults) == deg
    if max(inf_mults) > 1:
        profile.append(max(inf_mults))

    for mults in _finite_branch_fibers(rec.z.num, rec.z.den, fld, enlargement):
        if max(mults) > 1:
            profile.append(max(mults))
    return tuple(sorted(profile, reverse=True))


def fiber_points_in_field(
    rec: FixedFieldRecord, z0: FieldElement | None, big: FieldSpec
) -> list[tuple[FieldElement | None, int]]:
    """Explicit fiber over z0 (None = infinity) as (point, multiplicity)
    pairs with points in `big`; None stands for x = infinity.  Raises
    IncompleteSplitting when the fiber polynomial does not split in `big`."""
    fld = rec.field
    if big == fld:
        num, den = rec.z.num, rec.z.den
    else:
        emb = embedding(fld, big)
        num = rec.z.num.map_coeffs(emb, big)
        den = rec.z.den.map_coeffs(emb, big)
    deg = rec.z.degree
    if z0 is None:
        poly, inf_mult = den, deg - den.degree
    else:
        poly = num - den * Polynomial.constant(big, z0)
        inf_mult = deg - poly.degree
    points: list[tuple[FieldElement | None, int]] = []
    total = inf_mult
    if poly.degree > 0:
        for g, m in poly.squarefree_decomposition():
            roots = g.distinct_roots_in_field()
            if len(roots) < g.degree:
                raise IncompleteSplitting(f"fiber does not split in {big}")
            points.extend((r, m) for r in roots)
            total += m * g.degree
    if inf_mult > 0:
        points.append((None, inf_mult))
    if total != deg:
        raise IncompleteSplitting("fiber sizes with multiplicity do not total deg z")
    return points


def hurwitz_count_closes(rec: FixedFieldRecord, fld: FieldSpec) -> bool:
    """Check 2*deg - 2 = sum of different exponents over all ramified points
    of the fixed-field map itself (genus 0 over genus 0)."""
    deg = rec.z.degree
    p = fld.p
    total = 0
    inf_mults = _fiber_multiplicities(rec.z.den, deg - rec.z.den.degree)
    total += sum(different_exponent(m, p) for m in inf_mults if m > 1)
    for mults in _finite_branch_fibers(rec.z.num, rec.z.den, fld, 12):
        total += sum(different_exponent(m, p) for m in mults if m > 1)
    return total == 2 * deg - 2


__all__ = [
    "FixedFieldRecord",
    "IncompleteSplitting",
    "build_z",
    "different_exponent",
    "field_for_row",
    "fiber_points_in_field",
    "hurwitz_count_closes",
    "min_field_degree_for_row",
    "ramification_profile",
    "verify_invariance",
]
