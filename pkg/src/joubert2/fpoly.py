"""Univariate polynomials over a finite field: arithmetic, irreducibility,
minimal and characteristic polynomials of extension elements, text I/O.

Coefficients are stored as packed field values, lowest degree first, with no
trailing zeros (the zero polynomial has an empty coefficient tuple).  A
polynomial "over K" for a relative extension L/K is an ordinary polynomial
over L whose coefficients happen to lie in the Frobenius-fixed subfield;
arithmetic never leaves that subfield, so no separate type is needed.
"""

from __future__ import annotations

import itertools
import re

from .errors import DomainError
from .ffield import ExtDesc, FElt, FieldDesc, prime_divisors


class UPoly:
    """Immutable univariate polynomial; coeffs are packed values, low first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if not 0 <= c < field.order:
                raise DomainError(f"coefficient {c} out of range for {field!r}")
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_elts(cls, elts) -> "UPoly":
        elts = list(elts)
        if not elts:
            raise DomainError("from_elts needs at least one element")
        field = elts[0].field
        return cls(field, [e.val for e in elts])

    @classmethod
    def x(cls, field: FieldDesc) -> "UPoly":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: FieldDesc, val: int) -> "UPoly":
        return cls(field, [val])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __repr__(self) -> str:
        return f"UPoly({self.field!r}, {format_poly(self)!r})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, UPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def _check(self, other: "UPoly") -> None:
        if self.field != other.field:
            raise DomainError(
                f"mixed coefficient fields: {self.field!r}, {other.field!r}")

    def __add__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add_val(out[i], c)
        return UPoly(f, out)

    def __sub__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(f, [f.sub_val(self.coeff(i), other.coeff(i))
                         for i in range(n)])

    def __neg__(self) -> "UPoly":
        f = self.field
        return UPoly(f, [f.neg_val(c) for c in self.coeffs])

    def __mul__(self, other: "UPoly") -> "UPoly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(f, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = f.add_val(out[i + j], f.mul_val(ai, bj))
        return UPoly(f, out)

    def scale(self, val: int) -> "UPoly":
        f = self.field
        return UPoly(f, [f.mul_val(val, c) for c in self.coeffs])

    def shift(self, k: int) -> "UPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UPoly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "UPoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return UPoly(f, []), self
        inv_lead = f.inv_val(other.coeffs[-1])
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c:
                c = f.mul_val(c, inv_lead)
                quo[k] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] = f.sub_val(rem[k + i], f.mul_val(c, oc))
        return UPoly(f, quo), UPoly(f, rem)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "UPoly":
        if e < 0:
            raise DomainError("negative polynomial power")
        result = UPoly(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(self.field.inv_val(lead))

    def evaluate(self, x: FElt) -> FElt:
        if x.field != self.field:
            raise DomainError("evaluation point lives in a different field")
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add_val(f.mul_val(acc, x.val), c)
        return FElt(f, acc)

    def eval_val(self, xval: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add_val(f.mul_val(acc, xval), c)
        return acc


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def pow_mod(base: UPoly, e: int, mod: UPoly) -> UPoly:
    """base**e reduced mod `mod`."""
    if e < 0:
        raise DomainError("negative exponent in pow_mod")
    result = UPoly(base.field, [1]) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def poly_from_roots(field: FieldDesc, root_vals) -> UPoly:
    """Monic polynomial with the given packed values as roots."""
    out = UPoly(field, [1])
    for r in root_vals:
        out = out * UPoly(field, [field.neg_val(r), 1])
    return out


def is_irreducible(poly: UPoly, subfield_order: int | None = None) -> bool:
    """Frobenius-based irreducibility test over a field of order Q.

    Q defaults to the coefficient field's own order.  Passing a smaller Q
    tests irreducibility over the subfield of that order, provided all
    coefficients lie in it; arithmetic then never leaves the subfield.
    Criterion: t^(Q^d) = t mod f, and gcd(t^(Q^(d/r)) - t, f) = 1 for every
    prime r dividing d = deg f.
    """
    q = poly.field.order if subfield_order is None else subfield_order
    d = poly.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    t = UPoly.x(poly.field)
    cur = t % poly
    pows = {}
    for i in range(1, d + 1):
        cur = pow_mod(cur, q, poly)
        pows[i] = cur
    if pows[d] != t % poly:
        return False
    for r in prime_divisors(d):
        if poly_gcd(pows[d // r] - t, poly).degree != 0:
            return False
    return True


def conjugates(y: FElt, ext: ExtDesc) -> list[int]:
    """Packed values of the distinct relative conjugates y, y^q, y^(q^2), ...

    The length is the degree of y over the base field and divides ext.n.
    """
    if y.field != ext.big:
        raise DomainError(f"{y!r} does not live in {ext.big!r}")
    orbit = [y.val]
    cur = ext.frob_val(y.val)
    while cur != y.val:
        orbit.append(cur)
        cur = ext.frob_val(cur)
    assert ext.n % len(orbit) == 0
    return orbit


def min_poly(y: FElt, ext: ExtDesc) -> UPoly:
    """Minimal polynomial of y over the base field of the extension.

    Monic, coefficients in the base field, degree = [K(y) : K].
    """
    orbit = conjugates(y, ext)
    poly = poly_from_roots(ext.big, orbit)
    for c in poly.coeffs:
        assert ext.frob_val(c) == c, "minimal polynomial left the base field"
    return poly


def char_poly(y: FElt, ext: ExtDesc) -> UPoly:
    """Characteristic polynomial of y over the base field: the product of
    (t - y^(q^i)) over all i < n, i.e. min_poly to the power n/deg."""
    mp = min_poly(y, ext)
    return mp ** (ext.n // mp.degree)


def char_poly_det(y: FElt, ext: ExtDesc) -> UPoly:
    """Characteristic polynomial computed a second way, as det(t*I - M) for
    M the multiplication-by-y matrix over the base field.

    Expanded over all permutations with parity signs; n! stays tiny for the
    degrees used here.  Serves as an independent check of char_poly.
    """
    if y.field != ext.big:
        raise DomainError(f"{y!r} does not live in {ext.big!r}")
    big = ext.big
    n = ext.n
    g = big.gen.val if big.m > 1 else 1
    cols = []
    pw = 1
    for _ in range(n):
        cols.append(ext.rel_coordinates(big.mul_val(y.val, pw)))
        pw = big.mul_val(pw, g)
    # entry (i, j) of t*I - M as a degree <= 1 polynomial
    entries = [[(big.neg_val(cols[j][i]), 1 if i == j else 0)
                for j in range(n)] for i in range(n)]
    acc = UPoly(big, [])
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        prod = UPoly(big, [1])
        for i in range(n):
            prod = prod * UPoly(big, entries[i][perm[i]])
        if inversions % 2:
            prod = -prod
        acc = acc + prod
    return acc


def embed_poly(poly: UPoly, ext: ExtDesc) -> UPoly:
    """Reinterpret a polynomial over standalone GF(q) as one over ext.big
    with coefficients in the base subfield.

    The standalone generator maps to kappa, the canonical in-L root of the
    same modulus, so digit vectors are preserved and the map is a field
    isomorphism onto the subfield.
    """
    if poly.field.p != ext.big.p or poly.field.m != ext.base_deg:
        raise DomainError(
            f"{poly.field!r} is not the standalone base field of {ext!r}")
    table = ext.k_elements()
    return UPoly(ext.big, [table[c] for c in poly.coeffs])


def compress_poly(poly: UPoly, ext: ExtDesc) -> UPoly:
    """Inverse of embed_poly: a polynomial over ext.big whose coefficients
    lie in the base subfield becomes one over standalone GF(q)."""
    from .ffield import make_field
    if poly.field != ext.big:
        raise DomainError(f"{poly.field!r} is not the big field of {ext!r}")
    small = make_field(ext.big.p, ext.base_deg)
    return UPoly(small, [ext.k_index(c) for c in poly.coeffs])


# ---------------------------------------------------------------------------
# Text form: "t^6+t^4+t^2+t+1", "t^6+t^2+t+[0,1]", "2*t^2+t+2".
# Coefficients print as a bare digit when they lie in the prime field, and
# as a bracketed digit vector over the base-field generator otherwise.


def _format_coeff(val: int, field: FieldDesc, ext: ExtDesc | None) -> str:
    if val < field.p:
        return str(val)
    if ext is not None:
        return "[" + ",".join(str(d) for d in ext.k_coordinates(val)) + "]"
    from .ffield import _unpack
    return "[" + ",".join(str(d) for d in _unpack(val, field.p, field.m)) + "]"


def format_poly(poly: UPoly, ext: ExtDesc | None = None) -> str:
    """Render with highest-degree term first; inverse of parse_poly."""
    if poly.is_zero():
        return "0"
    parts = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeff(k)
        if not c:
            continue
        mono = "t" if k == 1 else (f"t^{k}" if k > 1 else "")
        if not mono:
            parts.append(_format_coeff(c, poly.field, ext))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{_format_coeff(c, poly.field, ext)}*{mono}")
    return "+".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+|\[[0-9,\s]*\])\*?)?(?P<mono>t(?:\^(?P<exp>\d+))?)?$")


def _parse_coeff(text: str, field: FieldDesc, ext: ExtDesc | None) -> int:
    if text.startswith("["):
        digits = [int(d) for d in text[1:-1].split(",")] if text != "[]" else []
        if any(not 0 <= d < field.p for d in digits):
            raise DomainError(f"digit out of range in coefficient {text!r}")
        if ext is not None:
            if len(digits) > ext.base_deg:
                raise DomainError(f"too many digits in coefficient {text!r}")
            digits += [0] * (ext.base_deg - len(digits))
            idx = 0
            for d in reversed(digits):
                idx = idx * field.p + d
            return ext.k_elements()[idx]
        if len(digits) > field.m:
            raise DomainError(f"too many digits in coefficient {text!r}")
        val = 0
        for d in reversed(digits):
            val = val * field.p + d
        return val
    c = int(text)
    if c >= field.p:
        raise DomainError(f"bare coefficient {c} exceeds characteristic")
    return c


def parse_poly(text: str, field: FieldDesc, ext: ExtDesc | None = None) -> UPoly:
    """Parse the text form produced by format_poly."""
    squashed = text.replace(" ", "")
    if not squashed:
        raise DomainError("empty polynomial text")
    if squashed == "0":
        return UPoly(field, [])
    coeffs: dict[int, int] = {}
    for term in squashed.split("+"):
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("mono") is None):
            raise DomainError(f"cannot parse polynomial term {term!r}")
        cstr = m.group("coeff")
        cval = 1 if cstr is None else _parse_coeff(cstr, field, ext)
        if m.group("mono") is None:
            k = 0
        elif m.group("exp") is None:
            k = 1
        else:
            k = int(m.group("exp"))
        coeffs[k] = field.add_val(coeffs.get(k, 0), cval)
    out = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return UPoly(field, out)
