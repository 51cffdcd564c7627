import pytest

from joubert2 import BudgetError, DomainError, iter_elements, make_field
from joubert2.cubic import (
    QuotientFrame,
    _l0_basis_vals,
    build_frame,
    cubic_form,
    eval_cubic,
    gradient,
    smoothness_scan,
    surface_census,
)
from joubert2.fastscan import span_vals
from joubert2.jsearch import count_joubert_generators


def test_frame_q2_pinned():
    fr = build_frame(2)
    assert fr.basis == (1, 2, 4, 8, 16)
    for b in fr.basis:
        assert fr.ext.trace_val(b) == 0


@pytest.mark.parametrize("q", [2, 4, 8])
def test_frame_invariants(q):
    fr = build_frame(q)
    assert fr.basis[0] == 1
    assert len(fr.basis) == 5
    for b in fr.basis:
        assert fr.ext.trace_val(b) == 0
    assert fr.lift((0, 0, 0, 0)) == 0


def test_lift_lands_in_trace_zero_exhaustive_q4():
    fr = build_frame(4)
    kv = fr.ext.k_elements()
    for idx in range(4**4):
        r = idx
        coords = []
        for _ in range(4):
            coords.append(kv[r % 4])
            r //= 4
        assert fr.ext.trace_val(fr.lift(coords)) == 0


@pytest.mark.parametrize("q", [2, 4])
def test_trace_cube_class_invariance(q):
    # Tr((lam*y + mu)^3) = lam^3 * Tr(y^3) on the trace-zero space: the
    # predicate descends to the projective quotient
    fr = build_frame(q)
    ext = fr.ext
    big = ext.big
    k_vals = ext.k_elements()
    for y in span_vals(_l0_basis_vals(fr)).tolist():
        y3 = big.mul_val(big.mul_val(y, y), y)
        t = ext.trace_val(y3)
        for lam in k_vals[1:]:
            for mu in k_vals:
                z = big.add_val(big.mul_val(lam, y), mu)
                z3 = big.mul_val(big.mul_val(z, z), z)
                assert ext.trace_val(z3) == big.mul_val(big.pow_val(lam, 3), t)


def test_census_q2_pinned():
    c = surface_census(2)
    assert (c.total, c.on_line, c.generator_points) == (9, 3, 6)
    assert c.affine_zero_count == 20
    assert c.manin_floor == -9


def test_census_q2_independent_class_oracle():
    # re-derive the count from scratch: group qualifying field elements into
    # projective classes y ~ lam*y + mu by brute force
    f64 = make_field(2, 6)
    fr = build_frame(2)
    ext = fr.ext
    qual = []
    for e in iter_elements(f64):
        if e.val in (0, 1):
            continue
        y3 = f64.mul_val(f64.mul_val(e.val, e.val), e.val)
        if ext.trace_val(e.val) == 0 and ext.trace_val(y3) == 0:
            qual.append(e.val)
    assert len(qual) == 18  # |S| minus the constants
    classes = set()
    for y in qual:
        classes.add(frozenset({y, y ^ 1}))  # lam = 1; mu in {0, 1}
    assert len(classes) == 9
    on_line = sum(1 for cl in classes
                  if all(ext.frob_iter_val(y, 3) == y for y in cl))
    assert on_line == 3


@pytest.mark.parametrize("q,total", [(2, 9), (4, 17), (8, 81), (16, 257)])
def test_census_totals(q, total):
    # totals frozen after two independent routes agreed on each value
    c = surface_census(q)
    assert c.total == total
    assert c.on_line == q + 1
    assert c.total == c.on_line + c.generator_points
    assert c.total >= c.manin_floor
    assert c.affine_zero_count == total * (q * q - q) + q


def test_census_matches_generator_count():
    # each surface point away from the line collects q(q-1) field witnesses
    for q in (2, 4):
        c = surface_census(q)
        count = count_joubert_generators(q).count
        assert count == c.generator_points * (q * q - q)


def test_census_thread_independent():
    a = surface_census(4, threads=1)
    b = surface_census(4, threads=3)
    assert (a.total, a.on_line, a.affine_zero_count) == (
        b.total, b.on_line, b.affine_zero_count)


def test_census_budget():
    with pytest.raises(BudgetError):
        surface_census(16, budget=1000)


def test_manin_floor_binding_at_16():
    c = surface_census(16)
    assert c.manin_floor == 145
    assert c.total >= 145
    assert c.generator_points >= 1


# -- the explicit form ------------------------------------------------------


@pytest.mark.parametrize("q", [2, 4, 8])
def test_cubic_form_matches_trace_predicate(q):
    fr = build_frame(q)
    coeffs = cubic_form(fr)
    assert len(coeffs) == 20
    big = fr.ext.big
    kv = fr.ext.k_elements()
    for idx in range(q**4):
        r = idx
        coords = []
        for _ in range(4):
            coords.append(kv[r % q])
            r //= q
        y = fr.lift(coords)
        y3 = big.mul_val(big.mul_val(y, y), y)
        assert eval_cubic(fr, coeffs, coords) == fr.ext.trace_val(y3)


def test_cubic_form_char2_structure():
    # squarefree monomials carry multinomial 6 = 0; nothing else is forced
    fr = build_frame(4)
    coeffs = cubic_form(fr)
    for (i, j, k), c in coeffs.items():
        if i < j < k:
            assert c == 0


def test_cubic_form_homogeneity():
    fr = build_frame(4)
    coeffs = cubic_form(fr)
    big = fr.ext.big
    kv = fr.ext.k_elements()
    coords = [kv[1], kv[3], kv[0], kv[2]]
    base = eval_cubic(fr, coeffs, coords)
    for lam in kv[1:]:
        scaled = [big.mul_val(lam, c) for c in coords]
        assert eval_cubic(fr, coeffs, scaled) == big.mul_val(
            big.pow_val(lam, 3), base)


def test_gradient_char2_closed_form():
    # partial_l C = Tr(b_l^3) v_l^2 + sum_{i != l} Tr(b_i^2 b_l) v_i^2
    fr = build_frame(4)
    coeffs = cubic_form(fr)
    ext = fr.ext
    big = ext.big
    bs = fr.basis[1:]
    kv = ext.k_elements()
    for coords in [(kv[1], kv[2], kv[3], kv[0]), (kv[3], kv[3], kv[1], kv[2])]:
        grads = gradient(fr, coeffs, coords)
        for l in range(4):
            acc = big.mul_val(
                ext.trace_val(big.pow_val(bs[l], 3)),
                big.mul_val(coords[l], coords[l]))
            for i in range(4):
                if i == l:
                    continue
                bi2bl = big.mul_val(big.mul_val(bs[i], bs[i]), bs[l])
                acc = big.add_val(acc, big.mul_val(
                    ext.trace_val(bi2bl), big.mul_val(coords[i], coords[i])))
            assert grads[l] == acc


@pytest.mark.parametrize("q,d", [(2, 1), (2, 2), (4, 1)])
def test_no_singular_points_found(q, d):
    assert smoothness_scan(q, d) == []


def test_smoothness_guards():
    with pytest.raises(DomainError):
        smoothness_scan(2, 3)
    with pytest.raises(BudgetError):
        smoothness_scan(8, 2, budget=10**6)


def test_frame_lift_validates_arity():
    fr = build_frame(2)
    with pytest.raises(DomainError):
        fr.lift((1, 0, 0))
