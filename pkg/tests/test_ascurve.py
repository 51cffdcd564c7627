"""Fiber census of the additive cover: counts, Weil interval, bound
inequality, and the links back to generator search and the surface scan."""

import math
from itertools import product

import pytest

from joubert2 import ascurve
from joubert2.ascurve import (CurveCensus, bound_inequality, curve_census,
                              fiber_size, genus_of, good_fiber_witness,
                              rel_frobenius_elt, rhs_value,
                              trace_identity_check, weil_window)
from joubert2.cubic import surface_census
from joubert2.errors import BudgetError, DomainError
from joubert2.ffield import FElt, make_ext, make_field
from joubert2.fpoly import compress_poly, min_poly
from joubert2.jsearch import count_joubert_generators, enumerate_joubert_polys
from joubert2.sigma import is_joubert

PINNED = {
    2: dict(n_affine=80, n_smooth=81, genus=2, weil_low=33, weil_high=97,
            good_points=48, bad_points=32),
    4: dict(n_affine=3328, n_smooth=3329, genus=12, weil_low=2561,
            weil_high=5633, good_points=2304, bad_points=1024),
    8: dict(n_affine=290816, n_smooth=290817, genus=56, weil_low=204801,
            weil_high=319489, good_points=258048, bad_points=32768),
}


class TestCensus:
    def test_pinned_counts(self):
        for q, want in PINNED.items():
            c = curve_census(q)
            for key, val in want.items():
                assert getattr(c, key) == val, (q, key)

    def test_structural_invariants(self):
        for q in (2, 4, 8):
            c = curve_census(q)
            assert c.n_affine % q == 0
            assert c.n_smooth == c.n_affine + 1
            assert c.weil_low <= c.n_smooth <= c.weil_high
            assert c.good_points + c.bad_points == c.n_affine
            assert c.bad_points <= q**5
            assert c.good_points >= 1

    def test_bad_points_fill_their_bound(self):
        # the y-preimage of the cubic subextension has full size q^4 here
        for q in (2, 4, 8):
            assert curve_census(q).bad_points == q**5

    def test_direct_double_loop_q2(self):
        ext = make_ext(2, 1, 6)
        f = ext.big
        count = 0
        for xv, uv in product(range(64), repeat=2):
            xq = f.pow_val(xv, 2)
            rhs = f.mul_val(f.mul_val(xv, xq), f.add_val(xq, xv))
            if f.add_val(f.pow_val(uv, 2), uv) == rhs:
                count += 1
        assert count == 80 == curve_census(2).n_affine

    def test_thread_count_never_changes_results(self):
        a = curve_census(8, threads=1)
        b = curve_census(8, threads=3)
        for key in ("n_affine", "n_smooth", "good_points", "bad_points"):
            assert getattr(a, key) == getattr(b, key)

    def test_budget_and_domain_guards(self):
        with pytest.raises(BudgetError):
            curve_census(16, budget=10**6)
        for q in (3, 6, 7):
            with pytest.raises(DomainError):
                curve_census(q)


class TestFibers:
    def test_fiber_size_by_root_enumeration_q2(self):
        ext = make_ext(2, 1, 6)
        f = ext.big
        for cv in range(64):
            direct = sum(1 for uv in range(64)
                         if f.add_val(f.pow_val(uv, 2), uv) == cv)
            assert direct == fiber_size(FElt(f, cv), ext)

    def test_fiber_sizes_sum_to_field_size(self):
        for q, k in ((2, 1), (4, 2)):
            ext = make_ext(2, k, 6)
            total = sum(fiber_size(FElt(ext.big, cv), ext)
                        for cv in range(ext.big.order))
            assert total == q**6

    def test_fiber_size_values(self):
        ext = make_ext(2, 2, 6)
        sizes = {fiber_size(FElt(ext.big, cv), ext) for cv in range(200)}
        assert sizes == {0, 4}

    def test_wrong_field_rejected(self):
        ext = make_ext(2, 1, 6)
        with pytest.raises(DomainError):
            fiber_size(FElt(make_field(2, 2), 1), ext)

    def test_rhs_factored_vs_monomial(self):
        ext = make_ext(2, 1, 6)
        for xv in range(64):
            x = FElt(ext.big, xv)
            monomial = x**5 + x**4  # 2q+1 = 5, q+2 = 4 at q = 2
            assert rhs_value(x, ext) == monomial

    def test_rel_frobenius_elt(self):
        ext = make_ext(2, 2, 6)
        x = FElt(ext.big, 7)
        assert rel_frobenius_elt(x, ext) == x**4


class TestIdentityAndBounds:
    def test_trace_identity_exhaustive(self):
        for q in (2, 4, 8):
            assert trace_identity_check(q) == q**6

    def test_genus(self):
        assert [genus_of(q) for q in (2, 4, 8, 16)] == [2, 12, 56, 240]
        for q in (2, 4, 8, 16, 32):
            assert math.gcd(2 * q + 1, q) == 1
            assert genus_of(q) == q * (q - 1)

    def test_weil_window(self):
        assert weil_window(2) == (33, 97)
        for q in (2, 4, 8):
            lo, hi = weil_window(q)
            assert lo == q**6 + 1 - 2 * q * (q - 1) * q**3
            assert hi == q**6 + 1 + 2 * q * (q - 1) * q**3

    def test_bound_inequality_flips_at_four(self):
        assert not bound_inequality(2)
        assert bound_inequality(4)
        assert bound_inequality(8)
        assert bound_inequality(16)

    def test_q2_bound_is_exactly_tight(self):
        lo, _ = weil_window(2)
        assert lo == 1 + 2**5  # 33 on both sides: the inequality just fails

    def test_rejects_odd_characteristic(self):
        with pytest.raises(DomainError):
            bound_inequality(9)
        with pytest.raises(DomainError):
            genus_of(3)


class TestWitnesses:
    def test_good_witness_q2(self):
        w = good_fiber_witness(2)
        assert w is not None and w.val == 6
        ext = make_ext(2, 1, 6)
        y = rel_frobenius_elt(w, ext) + w
        assert is_joubert(y, ext)

    def test_witness_y_is_an_enumerated_polynomial_root(self):
        for q, k in ((2, 1), (4, 2)):
            ext = make_ext(2, k, 6)
            w = good_fiber_witness(q)
            y = rel_frobenius_elt(w, ext) + w
            mp = compress_poly(min_poly(y, ext), ext)
            assert mp in enumerate_joubert_polys(q)

    def test_witness_fiber_is_solvable(self):
        ext = make_ext(2, 2, 6)
        w = good_fiber_witness(4)
        assert fiber_size(rhs_value(w, ext), ext) == 4


class TestCrossModule:
    def test_good_points_count_generators(self):
        # y = x^q + x is q-to-1 onto the trace-zero hyperplane, and each
        # solvable x carries q fiber points
        for q in (2, 4):
            c = curve_census(q)
            assert c.good_points == q**2 * count_joubert_generators(q).count

    def test_good_points_count_polynomials(self):
        for q in (2, 4, 8):
            c = curve_census(q)
            polys = enumerate_joubert_polys(q)
            assert c.good_points == 6 * q**2 * len(polys)

    def test_affine_count_matches_surface_zero_count(self):
        for q in (2, 4):
            c = curve_census(q)
            s = surface_census(q)
            assert c.n_affine == q**2 * s.affine_zero_count
