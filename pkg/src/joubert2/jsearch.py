"""Exhaustive searches: trace-constrained generators of F_{q^6}/F_q, the
sextic polynomials they realize, degree-5 analogues in any characteristic,
and informational scans of the first-p power-trace conditions.

Search order is always ascending packed value, so witnesses are reproducible;
chunked scans merge by taking the minimum-index hit, which keeps results
independent of thread count.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BudgetError, DomainError
from .ffield import DEFAULT_LIMIT, ExtDesc, FElt, is_prime, make_ext, make_field
from .fastscan import ExtScan, run_chunked
from .fpoly import UPoly, is_irreducible, min_poly
from .sigma import is_generator, is_joubert

_CHUNK = 1 << 16


@dataclass
class SearchReport:
    """Outcome of one search or enumeration over F_{q^n}."""

    q: int
    n: int
    mode: str  # first | count | enumerate
    found: FElt | None = None
    found_min_poly: UPoly | None = None
    count: int | None = None
    scanned: int = 0
    elapsed_s: float = 0.0
    extra: dict = dc_field(default_factory=dict)


def _split_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise DomainError(f"q = {q} is not a prime power")
    p = min(d for d in range(2, q + 1) if q % d == 0)
    k = 0
    val = q
    while val > 1:
        if val % p:
            raise DomainError(f"q = {q} is not a prime power")
        val //= p
        k += 1
    if not is_prime(p):
        raise DomainError(f"q = {q} is not a prime power")
    return p, k


def _require_pow2(q: int) -> int:
    p, k = _split_prime_power(q)
    if p != 2:
        raise DomainError(f"q = {q} must be a power of 2")
    return k


@functools.lru_cache(maxsize=None)
def _ext_scan(p: int, base_deg: int, n: int) -> ExtScan:
    return ExtScan(make_ext(p, base_deg, n))


def _check_budget(what: str, needed: int, budget: int | None) -> int:
    cap = DEFAULT_LIMIT if budget is None else budget
    if needed > cap:
        raise BudgetError(what, needed, cap)
    return cap


def _verify_joubert_witness(y: FElt, ext: ExtDesc) -> UPoly:
    # re-derive everything the report claims about the witness
    assert is_joubert(y, ext)
    mp = min_poly(y, ext)
    assert mp.degree == ext.n
    assert mp.coeff(ext.n - 1) == 0 and mp.coeff(ext.n - 3) == 0
    assert is_irreducible(mp, subfield_order=ext.q)
    return mp


def find_joubert_generator(q: int, n: int = 6, budget: int | None = None,
                           threads: int = 1) -> SearchReport:
    """First y (in value order) generating F_{q^6}/F_q with s_1 = s_3 = 0.

    Characteristic 2 only; the vectorized scan prefilters on the equivalent
    pair Tr(y) = Tr(y^3) = 0, then re-verifies candidates through the
    sigma-based predicate.
    """
    if n != 6:
        raise DomainError(f"only degree-6 searches are supported, got n = {n}")
    k = _require_pow2(q)
    start = time.monotonic()
    _check_budget("q^6", q**6, budget)
    ext = make_ext(2, k, n)
    scan = _ext_scan(2, k, n)

    def hunt(lo: int, hi: int):
        vals = np.arange(lo, hi, dtype=np.uint64)
        cand = vals[(scan.trace(vals) == 0)
                    & (scan.trace(scan.ops.cube(vals)) == 0)]
        for v in cand.tolist():
            y = ext.big.element(v)
            if is_joubert(y, ext):
                return v
        return None

    # windows of `threads` chunks run in parallel; the merge takes the first
    # hit in chunk order, so the witness is the global minimum-value one
    found_val = None
    scanned = 0
    window = max(1, threads) * _CHUNK
    for wlo in range(0, ext.big.order, window):
        whi = min(wlo + window, ext.big.order)
        hits = run_chunked(whi - wlo,
                           lambda lo, hi: hunt(wlo + lo, wlo + hi),
                           chunk=_CHUNK, threads=threads)
        scanned = whi
        for hit in hits:
            if hit is not None:
                found_val = hit
                break
        if found_val is not None:
            break

    report = SearchReport(q=q, n=n, mode="first", scanned=scanned)
    if found_val is not None:
        y = ext.big.element(found_val)
        report.found = y
        report.found_min_poly = _verify_joubert_witness(y, ext)
    report.elapsed_s = time.monotonic() - start
    return report


def count_joubert_generators(q: int, budget: int | None = None,
                             threads: int = 1) -> SearchReport:
    """Exact number of Joubert generators of F_{q^6}/F_q (characteristic 2)."""
    k = _require_pow2(q)
    start = time.monotonic()
    _check_budget("q^6", q**6, budget)
    ext = make_ext(2, k, 6)
    scan = _ext_scan(2, k, 6)

    def tally(lo: int, hi: int) -> int:
        vals = np.arange(lo, hi, dtype=np.uint64)
        pair = (scan.trace(vals) == 0) & (scan.trace(scan.ops.cube(vals)) == 0)
        fixed3 = scan.frob(vals, 3) == vals
        fixed2 = scan.frob(vals, 2) == vals
        # a trace-qualifying element of the quadratic subextension already
        # lies in F_q, so escaping the cubic subextension means generating
        assert not np.any(pair & fixed2 & ~fixed3)
        keep = pair & ~fixed3
        idx = np.flatnonzero(keep)
        for i in idx[:: max(1, idx.size // 4)].tolist():
            assert is_joubert(ext.big.element(int(vals[i])), ext)
        rej = np.flatnonzero(pair & fixed3)
        for i in rej[:: max(1, rej.size // 4)].tolist():
            assert not is_joubert(ext.big.element(int(vals[i])), ext)
        return int(np.count_nonzero(keep))

    counts = run_chunked(ext.big.order, tally, chunk=_CHUNK, threads=threads)
    return SearchReport(q=q, n=6, mode="count", count=sum(counts),
                        scanned=ext.big.order,
                        elapsed_s=time.monotonic() - start)


def enumerate_joubert_polys(q: int, budget: int | None = None) -> list[UPoly]:
    """All irreducible monic sextics t^6 + a t^4 + b t^2 + c t + d over F_q,
    ordered by ascending (a, b, c, d) packed-value tuples."""
    p, k = _split_prime_power(q)
    _check_budget("q^4", q**4, budget)
    field = make_field(p, k)
    field.build_tables()
    out = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    poly = UPoly(field, [d, c, b, 0, a, 0, 1])
                    if is_irreducible(poly):
                        out.append(poly)
    return out


def hermite_search(q: int, budget: int | None = None) -> SearchReport:
    """First generator of F_{q^5}/F_q with s_1 = s_3 = 0, any characteristic.

    The trace prefilter only rejects (s_1 = trace in all characteristics);
    acceptance always goes through the sigma profile.
    """
    p, k = _split_prime_power(q)
    start = time.monotonic()
    _check_budget("q^5", q**5, budget)
    ext = make_ext(p, k, 5)
    big = ext.big
    found = None
    scanned = 0
    for v in range(big.order):
        scanned = v + 1
        if ext.trace_val(v) != 0:
            continue
        y = big.element(v)
        if is_joubert(y, ext):
            found = y
            break
    report = SearchReport(q=q, n=5, mode="first", scanned=scanned,
                          found=found)
    if found is not None:
        report.found_min_poly = _verify_joubert_witness(found, ext)
    report.elapsed_s = time.monotonic() - start
    return report


def explore_trace_conditions(q: int, p: int, m: int,
                             budget: int | None = None) -> SearchReport:
    """Count y in F_{q^n} - F_q (n = 2p^m) with Tr(y^j) = 0 for j = 1..p,
    split by whether y generates the extension.

    Purely informational: no outcome is asserted, since the analogous
    function-field statement does not constrain any specific finite field.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"p = {p} must be an odd prime")
    if m < 1:
        raise DomainError(f"m = {m} must be positive")
    k = _require_pow2(q)
    n = 2 * p**m
    start = time.monotonic()
    _check_budget("q^n", q**n, budget)
    ext = make_ext(2, k, n)
    big = ext.big
    base = set(ext.subfield_vals(1))
    gens = 0
    non_gens = 0
    first_gen = None
    first_non = None
    for v in range(big.order):
        if v in base:
            continue
        cur = v
        ok = True
        for _ in range(p):
            if ext.trace_val(cur) != 0:
                ok = False
                break
            cur = big.mul_val(cur, v)
        if not ok:
            continue
        if is_generator(big.element(v), ext):
            gens += 1
            if first_gen is None:
                first_gen = v
        else:
            non_gens += 1
            if first_non is None:
                first_non = v
    return SearchReport(
        q=q, n=n, mode="count", count=gens + non_gens, scanned=big.order,
        elapsed_s=time.monotonic() - start,
        extra={"p": p, "m": m, "generators": gens, "non_generators": non_gens,
               "first_generator": first_gen, "first_non_generator": first_non})
