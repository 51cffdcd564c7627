"""The trace cubic surface in characteristic 2.

Inside L = F_{q^6} the trace-zero hyperplane L_0 contains the constants
(Tr(1) = 6 = 0), so y -> Tr(y^3) descends to the 4-dimensional quotient
L_0 / K.  Its projectivization is a cubic surface in P^3 over K: the points
are classes [y] with Tr(y) = Tr(y^3) = 0, the non-generator points form the
line of F_{q^3}-classes, and the rest are witnesses for trace-constrained
generators.

Counting runs over two independent routes: a scalar projective scan with
per-point classification, and a vectorized affine count of
S = {y in L_0 : Tr(y^3) = 0}, related by |surface| = (|S| - q)/(q^2 - q)
since each projective class has exactly q(q-1) affine representatives
outside the constants.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, DomainError
from .ffield import DEFAULT_LIMIT, ExtDesc, make_ext
from .fastscan import run_chunked, span_vals
from .jsearch import _ext_scan, _require_pow2

_CHUNK = 1 << 16


@dataclass(frozen=True)
class QuotientFrame:
    """Coordinates for P(L_0 / K): basis[0] = 1 spans the collapsed constant
    direction; basis[1..4] give the four projective coordinates."""

    ext: ExtDesc
    basis: tuple[int, ...]

    def lift(self, coords) -> int:
        """Trace-zero element with the given coordinates against basis[1..4]
        and zero constant component."""
        if len(coords) != 4:
            raise DomainError(f"need 4 coordinates, got {len(coords)}")
        big = self.ext.big
        acc = 0
        for c, b in zip(coords, self.basis[1:]):
            if c:
                acc = big.add_val(acc, big.mul_val(c, b))
        return acc


@dataclass(frozen=True)
class SurfaceCensus:
    q: int
    total: int
    on_line: int
    generator_points: int
    manin_floor: int
    affine_zero_count: int  # |{y in L_0 : Tr(y^3) = 0}|, the second route
    elapsed_s: float


def _f2_reduce(pivots: dict[int, int], v: int) -> int:
    for bit in sorted(pivots, reverse=True):
        if (v >> bit) & 1:
            v ^= pivots[bit]
    return v


def _f2_insert(pivots: dict[int, int], v: int) -> bool:
    v = _f2_reduce(pivots, v)
    if v == 0:
        return False
    pivots[v.bit_length() - 1] = v
    return True


def build_frame(q: int) -> QuotientFrame:
    """Deterministic K-basis (1, b_1..b_4) of L_0: greedy sweep in value
    order keeping K-linearly independent trace-zero elements."""
    k = _require_pow2(q)
    ext = make_ext(2, k, 6)
    big = ext.big
    kappas = [1]
    for _ in range(k - 1):
        kappas.append(big.mul_val(kappas[-1], ext.kappa_val))
    pivots: dict[int, int] = {}
    basis = []
    v = 1
    while len(basis) < 5 and v < big.order:
        if ext.trace_val(v) == 0:
            # K-independence: insert the whole K-line kappa^l * v
            fresh = False
            if _f2_reduce(pivots, v):
                for kp in kappas:
                    if _f2_insert(pivots, big.mul_val(kp, v)):
                        fresh = True
            if fresh:
                basis.append(v)
        v += 1
    if len(basis) != 5:
        raise AssertionError("trace-zero subspace has unexpected dimension")
    assert basis[0] == 1  # Tr(1) = 0 in characteristic 2, degree 6
    frame = QuotientFrame(ext, tuple(basis))
    for b in basis:
        assert ext.trace_val(b) == 0
    assert len(pivots) == 5 * k  # K-span of the basis is all of L_0
    return frame


def _projective_reps(q: int):
    """Normalized representatives of P^3(F_q): first nonzero coordinate 1.

    Yields 4-tuples of K-indices (0..q-1), to be mapped through k_elements.
    """
    for lead in range(4):
        free = 3 - lead
        for rest in range(q**free):
            coords = [0] * lead + [1]
            r = rest
            for _ in range(free):
                coords.append(r % q)
                r //= q
            yield tuple(coords)


def surface_census(q: int, budget: int | None = None,
                   threads: int = 1) -> SurfaceCensus:
    """Count the surface's K-points by both routes and classify them.

    Asserts the structural claims as it goes: every point is either on the
    F_{q^3}-line or a generator class, the line has exactly q+1 points, and
    the two counting routes agree.
    """
    start = time.monotonic()
    k = _require_pow2(q)
    cap = DEFAULT_LIMIT if budget is None else budget
    if q**5 > cap:
        raise BudgetError("q^5", q**5, cap)
    frame = build_frame(q)
    ext = frame.ext
    big = ext.big
    k_vals = ext.k_elements()

    on_line = 0
    generator_points = 0
    for idx_coords in _projective_reps(q):
        y = frame.lift([k_vals[i] for i in idx_coords])
        assert ext.trace_val(y) == 0
        y3 = big.mul_val(big.mul_val(y, y), y)
        if ext.trace_val(y3) != 0:
            continue
        if ext.frob_iter_val(y, 3) == y:
            # non-generator class; must be the F_{q^3} line, never F_{q^2}
            assert ext.frob_iter_val(y, 2) != y or y == 0
            assert y != 0
            on_line += 1
        else:
            # must be a full generator: n = 6 leaves only d in {2, 3}
            assert ext.frob_iter_val(y, 2) != y
            generator_points += 1
    total = on_line + generator_points

    # independent affine route, vectorized: |S| over the 2^(5k) elements
    scan = _ext_scan(2, k, 6)
    l0 = span_vals(_l0_basis_vals(frame))
    assert len(l0) == q**5

    def tally(lo: int, hi: int) -> int:
        v = l0[lo:hi]
        return int(np.count_nonzero(scan.trace(scan.ops.cube(v)) == 0))

    s_count = sum(run_chunked(len(l0), tally, chunk=_CHUNK, threads=threads))
    assert (s_count - q) % (q * q - q) == 0
    assert total == (s_count - q) // (q * q - q)

    assert on_line == q + 1
    manin_floor = q * q - 7 * q + 1
    assert total >= manin_floor
    return SurfaceCensus(q=q, total=total, on_line=on_line,
                         generator_points=generator_points,
                         manin_floor=manin_floor, affine_zero_count=s_count,
                         elapsed_s=time.monotonic() - start)


def _l0_basis_vals(frame: QuotientFrame) -> list[int]:
    # F_2-basis of L_0 as kappa-multiples of the K-basis
    ext = frame.ext
    big = ext.big
    out = []
    kp = 1
    kappas = [1]
    for _ in range(ext.base_deg - 1):
        kp = big.mul_val(kp, ext.kappa_val)
        kappas.append(kp)
    for b in frame.basis:
        for kpow in kappas:
            out.append(big.mul_val(kpow, b))
    return out


# ---------------------------------------------------------------------------
# The cubic form and its gradient, as explicit coefficients over K


def _multinomial_mod_p(multiset: tuple[int, ...], p: int) -> int:
    counts = {}
    for i in multiset:
        counts[i] = counts.get(i, 0) + 1
    total = math.factorial(3)
    for c in counts.values():
        total //= math.factorial(c)
    return total % p


def cubic_form(frame: QuotientFrame) -> dict[tuple[int, int, int], int]:
    """Coefficients c_{ijk} (i <= j <= k over the four lift coordinates) of
    C(v) = Tr(lift(v)^3), as packed base-field values.  All 20 monomials are
    present as keys, including those whose coefficient vanishes."""
    ext = frame.ext
    big = ext.big
    bs = frame.basis[1:]
    out = {}
    for i in range(4):
        for j in range(i, 4):
            for kk in range(j, 4):
                mult = _multinomial_mod_p((i, j, kk), big.p)
                prod = big.mul_val(big.mul_val(bs[i], bs[j]), bs[kk])
                tr = ext.trace_val(prod)
                out[(i, j, kk)] = big.mul_val(mult, tr)
    return out


def eval_cubic(frame: QuotientFrame,
               coeffs: dict[tuple[int, int, int], int], coords) -> int:
    """C(v) from the coefficient table; coords are base-field packed values."""
    big = frame.ext.big
    acc = 0
    for (i, j, kk), c in coeffs.items():
        if c:
            term = big.mul_val(big.mul_val(coords[i], coords[j]), coords[kk])
            acc = big.add_val(acc, big.mul_val(c, term))
    return acc


def _gradient_terms(coeffs: dict[tuple[int, int, int], int], p: int):
    """Formal partials of the cubic: for each variable l, a list of
    (multiplicity mod p, coefficient, (i, j)) quadratic monomial terms."""
    out: list[list[tuple[int, tuple[int, int]]]] = [[] for _ in range(4)]
    for (i, j, kk), c in coeffs.items():
        if not c:
            continue
        mono = (i, j, kk)
        for l in set(mono):
            count = mono.count(l) % p
            if not count:
                continue
            rest = list(mono)
            rest.remove(l)
            out[l].append((count, c, tuple(rest)))
    return out


def gradient(frame: QuotientFrame, coeffs: dict[tuple[int, int, int], int],
             coords) -> tuple[int, int, int, int]:
    """The four formal partial derivatives of C at coords."""
    big = frame.ext.big
    terms = _gradient_terms(coeffs, big.p)
    grads = []
    for l in range(4):
        acc = 0
        for count, c, (i, j) in terms[l]:
            val = big.mul_val(big.mul_val(count, c),
                              big.mul_val(coords[i], coords[j]))
            acc = big.add_val(acc, val)
        grads.append(acc)
    return tuple(grads)


def smoothness_scan(q: int, ext_deg: int = 1,
                    budget: int | None = None) -> list[tuple[int, ...]]:
    """All projective points over F_{q^ext_deg} where the cubic and its full
    gradient vanish together.  An empty list supports (never proves)
    smoothness; the scan degree is part of the report."""
    if ext_deg not in (1, 2):
        raise DomainError(f"scan degree must be 1 or 2, got {ext_deg}")
    k = _require_pow2(q)
    qq = q**ext_deg
    cap = DEFAULT_LIMIT if budget is None else budget
    if qq**4 > cap:
        raise BudgetError("(q^ext_deg)^4", qq**4, cap)
    frame = build_frame(q)
    ext = frame.ext
    big = ext.big
    coeffs = cubic_form(frame)
    sub = ext.subfield_vals(ext_deg)
    assert len(sub) == qq
    singular = []
    for idx_coords in _projective_reps(qq):
        coords = [sub[i] for i in idx_coords]
        if eval_cubic(frame, coeffs, coords) != 0:
            continue
        if all(g == 0 for g in gradient(frame, coeffs, coords)):
            singular.append(tuple(coords))
    return singular
