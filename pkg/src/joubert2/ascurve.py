"""Point census of the additive cover u^q - u = x^(2q+1) + x^(q+2) over the
sextic extension of F_q, for q a power of 2.

The right side factors as x * x^q * (x^q + x), so with y = x^q + x the fiber
over x is nonempty exactly when the relative trace of y^3 vanishes (the
trace of y itself vanishes automatically).  Solvable fibers therefore sit
over trace-qualifying elements y; fibers with y in the cubic subextension
are counted as bad, and the rest give degree-6 generators whose first and
third elementary symmetric functions are zero.  Comparing the affine count
against the Weil interval and the worst-case bad count shows good fibers
must exist once q is large enough.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .fastscan import run_chunked
from .ffield import ExtDesc, FElt, make_ext, rel_trace
from .jsearch import _check_budget, _ext_scan, _require_pow2

_CHUNK = 1 << 16


@dataclass(frozen=True)
class CurveCensus:
    """Affine and smooth point counts with their structural split."""

    q: int
    n_affine: int
    n_smooth: int
    genus: int
    weil_low: int
    weil_high: int
    good_points: int  # fiber points whose y generates the sextic extension
    bad_points: int  # fiber points with y in the cubic subextension
    elapsed_s: float


def genus_of(q: int) -> int:
    """Genus q(q-1) of the smooth model.

    The covering equation has right-side degree d = 2q + 1 prime to the
    characteristic, so the genus is (q - 1)(d - 1) / 2.
    """
    _require_pow2(q)
    d = 2 * q + 1
    assert math.gcd(d, q) == 1
    return (q - 1) * (d - 1) // 2


def weil_window(q: int) -> tuple[int, int]:
    """Allowed range for the smooth point count over the field of q^6
    elements: q^6 + 1 with slack 2 * genus * q^3."""
    slack = 2 * genus_of(q) * q**3
    return q**6 + 1 - slack, q**6 + 1 + slack


def bound_inequality(q: int) -> bool:
    """Whether the Weil lower bound alone forces a good fiber point:
    q^6 + 1 - 2q(q-1)q^3 > 1 + q^5.

    The right side is the smooth point at infinity plus the largest
    possible number of bad fiber points.
    """
    _require_pow2(q)
    lo, _ = weil_window(q)
    return lo > 1 + q**5


def fiber_size(c: FElt, ext: ExtDesc) -> int:
    """Number of u with u^q - u = c: q when the relative trace of c
    vanishes, 0 otherwise."""
    if c.field is not ext.big:
        raise DomainError("fiber argument lives in the wrong field")
    return ext.q if rel_trace(c, ext).val == 0 else 0


def rhs_value(x: FElt, ext: ExtDesc) -> FElt:
    """The covering map's right side at x, in factored form."""
    xq = rel_frobenius_elt(x, ext)
    return x * xq * (xq + x)


def rel_frobenius_elt(x: FElt, ext: ExtDesc) -> FElt:
    return FElt(ext.big, ext.frob_val(x.val))


def curve_census(q: int, budget: int | None = None,
                 threads: int = 1) -> CurveCensus:
    """Full fiber census over the sextic extension of F_q.

    Every solvable fiber is classified: y = x^q + x either generates the
    degree-6 extension (good) or lies in the cubic subextension (bad); the
    quadratic subextension is impossible for trace-qualifying y, which the
    scan asserts rather than assumes.
    """
    k = _require_pow2(q)
    total = q**6
    _check_budget("curve census scan", total, budget)
    t0 = time.perf_counter()
    scan = _ext_scan(2, k, 6)

    def tally(lo: int, hi: int) -> tuple[int, int, int]:
        x = np.arange(lo, hi, dtype=np.uint64)
        xq = scan.frob(x, 1)
        y = x ^ xq
        c = scan.ops.mul(scan.ops.mul(x, xq), y)
        solvable = scan.trace(c) == 0
        # same criterion through the trace identity, as a cross-check
        assert np.array_equal(solvable, scan.trace(scan.ops.cube(y)) == 0)
        in_cubic = scan.frob(y, 3) == y
        in_quadratic = scan.frob(y, 2) == y
        assert not np.any(in_cubic & ~solvable)
        # trace-qualifying y in the quadratic subextension is already in F_q
        assert not np.any(solvable & in_quadratic & ~in_cubic)
        good = solvable & ~in_cubic
        return (int(np.count_nonzero(solvable)),
                int(np.count_nonzero(solvable & in_cubic)),
                int(np.count_nonzero(good)))

    parts = run_chunked(total, tally, chunk=_CHUNK, threads=threads)
    solvable_x = sum(p[0] for p in parts)
    bad_x = sum(p[1] for p in parts)
    good_x = sum(p[2] for p in parts)
    assert good_x + bad_x == solvable_x

    n_affine = q * solvable_x
    lo, hi = weil_window(q)
    n_smooth = n_affine + 1
    assert n_affine % q == 0
    assert lo <= n_smooth <= hi, "smooth count escapes the Weil interval"
    census = CurveCensus(q=q, n_affine=n_affine, n_smooth=n_smooth,
                         genus=genus_of(q), weil_low=lo, weil_high=hi,
                         good_points=q * good_x, bad_points=q * bad_x,
                         elapsed_s=time.perf_counter() - t0)
    assert census.bad_points <= q**5
    return census


def trace_identity_check(q: int, budget: int | None = None,
                         threads: int = 1) -> int:
    """Exhaustively confirm Tr((x^q + x)^3) = Tr(x^(2q+1) + x^(q+2)); the
    right side is evaluated from the raw monomials, not the factored form.
    Returns the number of points checked."""
    k = _require_pow2(q)
    total = q**6
    _check_budget("trace identity scan", total, budget)
    scan = _ext_scan(2, k, 6)

    def check(lo: int, hi: int) -> int:
        x = np.arange(lo, hi, dtype=np.uint64)
        y = x ^ scan.frob(x, 1)
        lhs = scan.trace(scan.ops.cube(y))
        rhs = scan.trace(scan.power(x, 2 * q + 1) ^ scan.power(x, q + 2))
        assert np.array_equal(lhs, rhs)
        return int(x.size)

    return sum(run_chunked(total, check, chunk=_CHUNK, threads=threads))


def good_fiber_witness(q: int, budget: int | None = None) -> FElt | None:
    """Least x whose fiber is solvable with y = x^q + x a generator, or
    None when no such x exists."""
    k = _require_pow2(q)
    total = q**6
    _check_budget("good fiber search", total, budget)
    ext = make_ext(2, k, 6)
    for xv in range(total):
        yv = ext.big.add_val(ext.frob_val(xv), xv)
        if ext.trace_val(ext.big.pow_val(yv, 3)):
            continue
        if ext.frob_iter_val(yv, 3) == yv:
            continue
        return FElt(ext.big, xv)
    return None
