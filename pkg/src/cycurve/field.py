"""Exact arithmetic over GF(p^k): field elements, univariate polynomials,
rational fractions in canonical form.

Fields are built deterministically: the modulus of GF(p^k) is the
lexicographically least monic irreducible polynomial of degree k over GF(p),
and the stored primitive element is the least field element (in enumeration
order) of full multiplicative order.  Elements are coefficient vectors over
GF(p), immutable once built, so values can be shared freely.

Polynomial multiplication uses Kronecker substitution (packing coefficient
vectors into big integers) once operands are large enough for it to pay off;
Python's bignum multiply then does the heavy lifting.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


class FieldTooSmall(ValueError):
    """A required constant (root of unity, subfield, ...) is missing from GF(p^k)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division + Pollard rho (n fits desk scale)."""
    out: dict[int, int] = {}
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


class FieldSpec:
    """GF(p^k) with a deterministic defining modulus and primitive element.

    Use :func:`make_field`; instances are cached per (p, k).
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = _least_irreducible(p, k)  # monic, degree k, tuple low->high
        self._red_rows = self._reduction_rows()
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))
        self._unit_factors = factorize(self.order - 1) if self.order > 2 else {}
        self.primitive = self._find_primitive()

    # -- construction helpers -------------------------------------------------

    def _reduction_rows(self) -> list[tuple[int, ...]]:
        """y^j mod modulus for j = k .. 2k-2, as coefficient rows."""
        p, k = self.p, self.k
        rows = []
        # y^k = -(m_0 + m_1 y + ... + m_{k-1} y^{k-1})
        cur = [(-c) % p for c in self.modulus[:k]]
        rows.append(tuple(cur))
        for _ in range(k - 2):
            nxt = [0] * k
            for i, c in enumerate(cur[: k - 1]):
                nxt[i + 1] = c
            top = cur[k - 1]
            if top:
                for i in range(k):
                    nxt[i] = (nxt[i] + top * rows[0][i]) % p
            cur = nxt
            rows.append(tuple(cur))
        return rows

    def _find_primitive(self) -> "FieldElement":
        n = self.order - 1
        for idx in range(1, self.order):
            a = self.elt(idx)
            if all(a ** (n // q) != self.one for q in self._unit_factors):
                return a
        raise RuntimeError("no primitive element found (unreachable)")

    # -- element constructors --------------------------------------------------

    def elt(self, value) -> "FieldElement":
        """Build an element from an int index (base-p digits) or coefficient seq."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.k == 1:
                return FieldElement(self, (value % self.p,))
            digits = []
            v = value % self.order
            for _ in range(self.k):
                digits.append(v % self.p)
                v //= self.p
            return FieldElement(self, tuple(digits))
        rep = tuple(int(c) % self.p for c in value)
        if len(rep) < self.k:
            rep = rep + (0,) * (self.k - len(rep))
        if len(rep) != self.k:
            raise ValueError("coefficient vector too long")
        return FieldElement(self, rep)

    def from_int(self, n: int) -> "FieldElement":
        """The image of the integer n in the prime subfield (n mod p)."""
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def elements(self):
        """All field elements in enumeration order (base-p digit counting)."""
        for idx in range(self.order):
            yield self.elt(idx)

    # -- raw vector arithmetic (tuples low->high of length k) -------------------

    def vadd(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def vsub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def vneg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def vmul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        return self._vreduce(conv)

    def _vreduce(self, conv):
        p, k = self.p, self.k
        out = [c % p for c in conv[:k]]
        for j in range(k, len(conv)):
            c = conv[j] % p
            if c:
                row = self._red_rows[j - k]
                for i in range(k):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(out)

    def vinv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return (pow(a[0], self.p - 2, self.p),)
        # extended Euclid in GF(p)[y] against the modulus
        p = self.p
        r0 = list(self.modulus)
        r1 = list(a)
        s0, s1 = [0], [1]
        while any(r1):
            q, r = _gfp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _gfp_sub(s0, _gfp_mul(q, s1, p), p)
        lead = r0[_gfp_deg(r0)]
        inv_lead = pow(lead, p - 2, p)
        s0 = [(c * inv_lead) % p for c in s0]
        s0 += [0] * (self.k - len(s0))
        return tuple(s0[: self.k])

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))


# -- GF(p)[y] helpers for modulus search / inversion ---------------------------


def _gfp_deg(f) -> int:
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return i
    return -1


def _gfp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _gfp_sub(f, g, p):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return [(a - b) % p for a, b in zip(f, g)]


def _gfp_divmod(f, g, p):
    f = list(f)
    dg = _gfp_deg(g)
    if dg < 0:
        raise ZeroDivisionError
    inv = pow(g[dg], p - 2, p)
    q = [0] * max(len(f) - dg, 1)
    while True:
        df = _gfp_deg(f)
        if df < dg:
            break
        c = f[df] * inv % p
        q[df - dg] = c
        for i in range(dg + 1):
            f[df - dg + i] = (f[df - dg + i] - c * g[i]) % p
    return q, f


def _gfp_powmod(base, exp, mod, p):
    result = [1]
    base = _gfp_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _gfp_divmod(_gfp_mul(result, base, p), mod, p)[1]
        base = _gfp_divmod(_gfp_mul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _is_irreducible(f, p, k) -> bool:
    # f irreducible of degree k over GF(p) iff x^(p^k) = x mod f and
    # gcd(x^(p^(k/l)) - x, f) = 1 for every prime l | k.
    x = [0, 1]
    xq = _gfp_powmod(x, p**k, f, p)
    if _gfp_deg(_gfp_sub(xq, x, p)) >= 0:
        return False
    for ell in factorize(k):
        xe = _gfp_powmod(x, p ** (k // ell), f, p)
        g = _gfp_gcd(_gfp_sub(xe, x, p), f, p)
        if _gfp_deg(g) > 0:
            return False
    return True


def _gfp_gcd(f, g, p):
    f, g = list(f), list(g)
    while _gfp_deg(g) >= 0:
        f, g = g, _gfp_divmod(f, g, p)[1]
    return f


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over GF(p).

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the tuple
    (c_{k-1}, ..., c_0) read as base-p digits.
    """
    if k == 1:
        return (0, 1)  # the polynomial x
    for code in range(p**k):
        # big-endian digits: (c_{k-1}, ..., c_0) increases lexicographically
        digits = []
        v = code
        for _ in range(k):
            digits.append(v % p)
            v //= p
        f = digits + [1]  # digits[i] = c_i since little-endian of code reverses lex tuple
        if f[0] == 0:
            continue  # zero constant term: divisible by x
        if any(_gfp_eval(f, a, p) == 0 for a in range(p)):
            continue  # linear factor
        if _is_irreducible(f, p, k):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found (unreachable)")


def _gfp_eval(f, a, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * a + c) % p
    return acc


@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FieldSpec:
    """The deterministic FieldSpec for GF(p^k).  Rejects p = 2 and composite p."""
    return FieldSpec(p, k)


class FieldElement:
    """An element of GF(p^k): an immutable coefficient vector over GF(p)."""

    __slots__ = ("field", "rep", "_hash")

    def __init__(self, field: FieldSpec, rep: tuple[int, ...]):
        self.field = field
        self.rep = rep
        self._hash = hash((field.p, field.k, rep))

    def __add__(self, other):
        return FieldElement(self.field, self.field.vadd(self.rep, other.rep))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.vsub(self.rep, other.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.vneg(self.rep))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.vmul(self.rep, other.rep))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.vmul(self.rep, self.field.vinv(other.rep)))

    def inverse(self):
        return FieldElement(self.field, self.field.vinv(self.rep))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.rep)

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.rep == other.rep and self.field == other.field

    def __hash__(self):
        return self._hash

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        for q in self.field._unit_factors:
            while n % q == 0 and self ** (n // q) == self.field.one:
                n //= q
        return n

    def index(self) -> int:
        """Position in the field enumeration order (base-p digit value)."""
        v = 0
        for c in reversed(self.rep):
            v = v * self.field.p + c
        return v

    def __repr__(self):
        if self.field.k == 1:
            return str(self.rep[0])
        return f"[{','.join(map(str, self.rep))}]"


def nth_root_of_unity(field: FieldSpec, n: int) -> FieldElement:
    """An element of multiplicative order exactly n, deterministic per field.

    Raises FieldTooSmall when n does not divide p^k - 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if (field.order - 1) % n != 0:
        raise FieldTooSmall(f"{n} does not divide |{field}*| = {field.order - 1}")
    xi = field.primitive ** ((field.order - 1) // n)
    assert xi.multiplicative_order() == n
    return xi


def min_extension_for_orders(p: int, orders) -> int:
    """Least k with n | p^k - 1 for every n in orders (all coprime to p)."""
    k = 1
    for n in orders:
        if n <= 1:
            continue
        if math.gcd(n, p) != 1:
            raise ValueError(f"order {n} not coprime to characteristic {p}")
        d = 1
        while pow(p, d, n) != 1:
            d += 1
        k = math.lcm(k, d)
    return k


# -- polynomials ----------------------------------------------------------------

_KRONECKER_THRESHOLD = 24  # product coefficient count above which packing pays off


class Polynomial:
    """Univariate polynomial over a FieldSpec, coefficients lowest degree first.

    Internally stores raw coefficient vectors (tuples over GF(p)); the zero
    polynomial stores an empty list.  Leading coefficient is always nonzero.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs, normalized=False):
        self.field = field
        if normalized:
            self.coeffs = coeffs
            return
        raw = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                raw.append(c.rep)
            elif isinstance(c, tuple):
                raw.append(c)
            else:
                # bare ints are integer constants, living in the prime subfield
                raw.append(field.from_int(c).rep)
        while raw and not any(raw[-1]):
            raw.pop()
        self.coeffs = raw

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def zero(field):
        return Polynomial(field, [], normalized=True)

    @staticmethod
    def one(field):
        return Polynomial(field, [field.one.rep], normalized=True)

    @staticmethod
    def x(field):
        return Polynomial(field, [field.zero.rep, field.one.rep], normalized=True)

    @staticmethod
    def constant(field, c):
        return Polynomial(field, [c])

    @staticmethod
    def from_roots(field, roots):
        f = Polynomial.one(field)
        for r in roots:
            rep = r.rep if isinstance(r, FieldElement) else field.elt(r).rep
            f = f * Polynomial(field, [field.vneg(rep), field.one.rep], normalized=True)
        return f

    # -- basics ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def coeff(self, i: int) -> FieldElement:
        if i >= len(self.coeffs):
            return self.field.zero
        return FieldElement(self.field, self.coeffs[i])

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.k, tuple(self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if any(c):
                ce = FieldElement(self.field, c)
                parts.append(f"{ce}" if i == 0 else (f"{ce}*x^{i}" if i > 1 else f"{ce}*x"))
        return " + ".join(parts)

    # -- ring operations ----------------------------------------------------------

    def __add__(self, other):
        f, g = self.coeffs, other.coeffs
        n = max(len(f), len(g))
        fld = self.field
        out = []
        for i in range(n):
            a = f[i] if i < len(f) else None
            b = g[i] if i < len(g) else None
            if a is None:
                out.append(b)
            elif b is None:
                out.append(a)
            else:
                out.append(fld.vadd(a, b))
        while out and not any(out[-1]):
            out.pop()
        return Polynomial(fld, out, normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        fld = self.field
        return Polynomial(fld, [fld.vneg(c) for c in self.coeffs], normalized=True)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if not other:
                return Polynomial.zero(self.field)
            fld = self.field
            return Polynomial(
                fld, [fld.vmul(c, other.rep) for c in self.coeffs], normalized=True
            )
        f, g = self.coeffs, other.coeffs
        if not f or not g:
            return Polynomial.zero(self.field)
        if (len(f) + len(g)) * self.field.k >= _KRONECKER_THRESHOLD:
            return self._mul_kronecker(other)
        fld = self.field
        out = [None] * (len(f) + len(g) - 1)
        k = fld.k
        conv = [[0] * (2 * k - 1) for _ in range(len(out))]
        for i, a in enumerate(f):
            if any(a):
                for j, b in enumerate(g):
                    if any(b):
                        row = conv[i + j]
                        for s, x in enumerate(a):
                            if x:
                                for t, y in enumerate(b):
                                    row[s + t] += x * y
        out = [fld._vreduce(row) for row in conv]
        while out and not any(out[-1]):
            out.pop()
        return Polynomial(fld, out, normalized=True)

    def _mul_kronecker(self, other):
        """Multiply by packing both levels (field ext + polynomial) into one int."""
        fld = self.field
        p, k = fld.p, fld.k
        f, g = self.coeffs, other.coeffs
        width = 2 * k - 1
        # max convolution coefficient: min(len f, len g) * k * (p-1)^2
        bound = min(len(f), len(g)) * k * (p - 1) * (p - 1)
        bits = bound.bit_length() + 1
        base = 1 << bits

        def pack(coeffs):
            val = 0
            shift = 0
            for c in coeffs:
                for d in c:
                    val |= d << shift
                    shift += bits
                shift += bits * (width - k)
            return val

        prod = pack(f) * pack(g)
        mask = base - 1
        stride = bits * width
        nout = len(f) + len(g) - 1
        out = []
        for i in range(nout):
            block = prod >> (i * stride)
            conv = [(block >> (bits * j)) & mask for j in range(width)]
            out.append(fld._vreduce(conv))
        while out and not any(out[-1]):
            out.pop()
        return Polynomial(fld, out, normalized=True)

    def __pow__(self, n: int):
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        fld = self.field
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = fld.vinv(other.coeffs[-1])
        q = [fld.zero.rep] * max(len(rem) - dg, 0)
        for i in range(len(rem) - 1, dg - 1, -1):
            if not any(rem[i]):
                continue
            c = fld.vmul(rem[i], inv_lead)
            q[i - dg] = c
            for j in range(dg + 1):
                rem[i - dg + j] = fld.vsub(rem[i - dg + j], fld.vmul(c, other.coeffs[j]))
        while rem and not any(rem[-1]):
            rem.pop()
        while q and not any(q[-1]):
            q.pop()
        return (
            Polynomial(fld, q, normalized=True),
            Polynomial(fld, rem, normalized=True),
        )

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == self.field.one:
            return self
        return self * lead.inverse()

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Polynomial":
        fld = self.field
        p = fld.p
        out = []
        for i in range(1, len(self.coeffs)):
            m = i % p
            out.append(fld.vmul(self.coeffs[i], (m,) + (0,) * (fld.k - 1)))
        while out and not any(out[-1]):
            out.pop()
        return Polynomial(fld, out, normalized=True)

    def evaluate(self, x: FieldElement) -> FieldElement:
        fld = self.field
        acc = fld.zero.rep
        for c in reversed(self.coeffs):
            acc = fld.vadd(fld.vmul(acc, x.rep), c)
        return FieldElement(fld, acc)

    def shift_compose_linear(self, a: FieldElement, b: FieldElement) -> "Polynomial":
        """f(a*x + b) via Horner."""
        fld = self.field
        lin = Polynomial(fld, [b.rep, a.rep])
        acc = Polynomial.zero(fld)
        for c in reversed(self.coeffs):
            acc = acc * lin + Polynomial(fld, [c])
        return acc

    def map_coeffs(self, func, target_field) -> "Polynomial":
        return Polynomial(target_field, [func(FieldElement(self.field, c)) for c in self.coeffs])

    # -- root machinery ------------------------------------------------------------

    def root_multiplicity(self, x0: FieldElement) -> int:
        """Largest e with (X - x0)^e dividing self, by repeated exact division."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        fld = self.field
        lin = Polynomial(fld, [(-x0).rep, fld.one.rep], normalized=True)
        e = 0
        f = self
        while not f.is_zero() and f.degree >= 1:
            q, r = f.divmod(lin)
            if not r.is_zero():
                break
            e += 1
            f = q
        return e

    def powmod(self, exp: int, mod: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self % mod
        while exp:
            if exp & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            exp >>= 1
        return result

    def squarefree_decomposition(self) -> list[tuple["Polynomial", int]]:
        """[(g_i, m_i)] with self = lead * prod g_i^{m_i}, g_i squarefree, char-p safe."""
        fld = self.field
        f = self.monic()
        out: dict[int, Polynomial] = {}
        _sqfree_rec(f, 1, out)
        items = sorted(out.items())
        return [(g, m) for m, g in items if g.degree > 0]

    def distinct_roots_in_field(self) -> list[FieldElement]:
        """All roots lying in the coefficient field, each listed once, sorted."""
        fld = self.field
        f = self.monic()
        if f.degree <= 0:
            return []
        x = Polynomial.x(fld)
        xq = x.powmod(fld.order, f)
        g = f.gcd(xq - x)
        roots: list[FieldElement] = []
        _split_linear(g, roots)
        roots.sort(key=lambda r: r.index())
        return roots


def _sqfree_rec(f: Polynomial, mult: int, out: dict[int, Polynomial]):
    fld = f.field
    p = fld.p
    if f.degree <= 0:
        return
    d = f.derivative()
    if d.is_zero():
        # f = h(X^p); take p-th root of coefficients and recurse
        h = _pth_root_poly(f)
        _sqfree_rec(h, mult * p, out)
        return
    a = f.gcd(d)
    b = f.exact_div(a)  # product of squarefree part
    i = 1
    while b.degree > 0:
        c = b.gcd(a)
        g = b.exact_div(c)
        if g.degree > 0:
            key = mult * i
            out[key] = out.get(key, Polynomial.one(fld)) * g
        b = c
        a = a.exact_div(c)
        i += 1
    if a.degree > 0:
        # leftover factors all have multiplicity divisible by p; the
        # zero-derivative branch of the recursion applies the p factor
        _sqfree_rec(a, mult, out)


def _pth_root_poly(f: Polynomial) -> Polynomial:
    fld = f.field
    p = fld.p
    root_exp = fld.order // p  # a^(p^(k-1)) = a^(1/p)
    out = []
    for i in range(0, len(f.coeffs), p):
        c = FieldElement(fld, f.coeffs[i])
        out.append((c**root_exp).rep)
    return Polynomial(fld, out, normalized=False)


def _split_linear(g: Polynomial, roots: list):
    """Split a product of distinct linear factors into roots (deterministic CZ)."""
    fld = g.field
    if g.degree <= 0:
        return
    if g.degree == 1:
        c0 = FieldElement(fld, g.coeffs[0])
        c1 = FieldElement(fld, g.coeffs[1])
        roots.append(-c0 / c1)
        return
    half = (fld.order - 1) // 2
    x = Polynomial.x(fld)
    one = Polynomial.one(fld)
    for idx in range(fld.order):
        c = fld.elt(idx)
        h = (x + Polynomial.constant(fld, c)).powmod(half, g) - one
        d = g.gcd(h)
        if 0 < d.degree < g.degree:
            _split_linear(d, roots)
            _split_linear(g.exact_div(d), roots)
            return
    raise RuntimeError("failed to split linear factors (unreachable for p odd)")


# -- subfields and embeddings -----------------------------------------------------


def subfield_elements(field: FieldSpec, t: int) -> list[FieldElement]:
    """The elements of GF(p^t) inside GF(p^k) (requires t | k), sorted."""
    if field.k % t != 0:
        raise FieldTooSmall(f"GF({field.p}^{t}) does not embed in {field}")
    sub = field.order - 1
    size = field.p**t - 1
    omega = field.primitive ** (sub // size)
    elems = {field.zero}
    x = field.one
    for _ in range(size):
        elems.add(x)
        x = x * omega
    out = sorted(elems, key=lambda e: e.index())
    assert len(out) == field.p**t
    return out


def embedding(small: FieldSpec, big: FieldSpec):
    """The deterministic embedding GF(p^k) -> GF(p^(k*e)): y maps to the least
    root of the small modulus in the big field."""
    if small.p != big.p or big.k % small.k != 0:
        raise ValueError("no embedding between these fields")
    if small.k == 1:
        def embed_prime(x: FieldElement) -> FieldElement:
            return big.elt(x.rep[0])
        return embed_prime
    mod_poly = Polynomial(big, [ (c,) + (0,)*(big.k-1) for c in small.modulus ], normalized=False)
    roots = mod_poly.distinct_roots_in_field()
    if not roots:
        raise FieldTooSmall("modulus has no root in the target field")
    y = roots[0]
    pows = [big.one]
    for _ in range(small.k - 1):
        pows.append(pows[-1] * y)

    def embed(x: FieldElement) -> FieldElement:
        acc = big.zero
        for c, w in zip(x.rep, pows):
            if c:
                acc = acc + w * big.elt(c)
        return acc

    return embed


# -- rational fractions ------------------------------------------------------------


class RationalFraction:
    """num/den in canonical form: gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        fld = num.field
        if den is None:
            den = Polynomial.one(fld)
        if den.is_zero():
            raise ZeroDivisionError("rational fraction with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = Polynomial.one(fld)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead_inv = den.leading().inverse()
        self.num = num * lead_inv
        self.den = den * lead_inv

    @property
    def field(self):
        return self.num.field

    @property
    def degree(self) -> int:
        """max(deg num, deg den) -- the degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        return (
            isinstance(other, RationalFraction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num}) / ({self.den})"

    def __add__(self, other):
        return RationalFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __mul__(self, other):
        return RationalFraction(self.num * other.num, self.den * other.den)


__all__ = [
    "FieldTooSmall",
    "FieldSpec",
    "FieldElement",
    "Polynomial",
    "RationalFraction",
    "make_field",
    "nth_root_of_unity",
    "min_extension_for_orders",
    "subfield_elements",
    "embedding",
    "is_prime",
    "factorize",
    "Fraction",
]
