"""Fixed-plane obstruction for a product of two elementary abelian groups
acting on coordinate blocks.

G = (Z/pZ)^m x (Z/pZ)^m sits inside the symmetric group on n = 2p^m indices
through the regular action of each factor on its own block.  Over a field E
of characteristic 2 containing the p-th roots of unity, E^n splits into 2p^m
character eigenlines; complete reducibility (|G| odd, char 2) forces every
G-invariant 2-plane to be a sum of two character lines, which the structured
enumeration lists and a brute-force subspace sweep can double-check.

The obstruction itself: the sum of p-th powers over any character line is
p^m = 1 in E, so no invariant plane lies inside the variety cut out by the
first p power sums.  Containment is decided by scanning all of P^1(E), which
is complete because a nonzero binary form of degree <= p cannot vanish at
|E| + 1 > p projective points.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import gflinalg
from .errors import BudgetError, DomainError
from .ffield import DEFAULT_LIMIT, FieldDesc, is_prime, make_field

REDUCTION_NOTE = (
    "containment in the power-sum variety is tested over the finite field "
    "E = GF(2^d) instead of an algebraic closure: restricted to a plane, "
    "each power-sum equation is a homogeneous binary form of degree <= p, "
    "and a nonzero such form has at most p projective roots, so vanishing "
    "on all |E|+1 > p points of P^1(E) forces the zero form; the scan over "
    "E^2 is therefore a sound and complete containment test")


@dataclass(frozen=True)
class GroupG:
    """Two commuting blocks of translations, as permutations of 0..n-1."""

    p: int
    m: int
    n: int
    gens: tuple[tuple[int, ...], ...]  # 2m permutations, block-major

    @property
    def order(self) -> int:
        return self.p ** (2 * self.m)

    @property
    def block_size(self) -> int:
        return self.p**self.m


@dataclass(frozen=True)
class CharLine:
    """Eigenline of the block action: character values in one block, zeros
    in the other."""

    block: int  # 1 or 2
    chi: tuple[int, ...]  # m exponents of the character
    vector: tuple[int, ...]  # n packed E-values


@dataclass(frozen=True)
class InvPlane:
    """G-invariant 2-plane, held by its reduced row-echelon basis."""

    basis: tuple[tuple[int, ...], tuple[int, ...]]
    origin: str  # line-pair | mixed | trivial-isotypic | brute-force


@dataclass(frozen=True)
class PlaneWitness:
    """Proof that one plane escapes the variety: a member vector and the
    index of the power-sum equation it violates."""

    plane: InvPlane
    coeffs: tuple[int, int]  # combination of the two basis rows
    vector: tuple[int, ...]
    equation: int


@dataclass(frozen=True)
class PowerSumVariety:
    """Vectors whose first p power sums all vanish."""

    field: FieldDesc
    p: int

    def violation(self, vec) -> int | None:
        """Least k in 1..p with sum_j vec_j^k != 0, or None if a member."""
        f = self.field
        for k in range(1, self.p + 1):
            acc = 0
            for v in vec:
                acc = f.add_val(acc, f.pow_val(v, k))
            if acc != 0:
                return k
        return None

    def contains(self, vec) -> bool:
        return self.violation(vec) is None


def _digits(idx: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        out.append(idx % p)
        idx //= p
    return tuple(out)


def _index(digits, p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def build_group(p: int, m: int, budget: int | None = None) -> GroupG:
    """Translation generators for each block, mixed-radix index order."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"p = {p} must be an odd prime")
    if m < 1:
        raise DomainError(f"m = {m} must be positive")
    cap = DEFAULT_LIMIT if budget is None else budget
    if p**m > cap:
        raise BudgetError("p^m", p**m, cap)
    size = p**m
    n = 2 * size
    gens = []
    for block in (0, 1):
        off = block * size
        for j in range(m):
            perm = list(range(n))
            for local in range(size):
                digits = list(_digits(local, p, m))
                digits[j] = (digits[j] + 1) % p
                perm[off + local] = off + _index(digits, p)
            gens.append(tuple(perm))
    g = GroupG(p=p, m=m, n=n, gens=tuple(gens))
    _validate_group(g)
    return g


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def _validate_group(g: GroupG) -> None:
    identity = tuple(range(g.n))
    for perm in g.gens:
        cur = perm
        for _ in range(g.p - 1):
            cur = _compose(cur, perm)
        assert cur == identity, "generator order is not p"
        # blocks are preserved
        assert all((i < g.block_size) == (perm[i] < g.block_size)
                   for i in range(g.n))
    for a in g.gens:
        for b in g.gens:
            assert _compose(a, b) == _compose(b, a), "generators must commute"
    # regular action: each block is a single orbit of its m translations
    for off in (0, g.block_size):
        seen = {off}
        frontier = [off]
        while frontier:
            x = frontier.pop()
            for perm in g.gens:
                y = perm[x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        assert len(seen) == g.block_size


def choose_char_field(p: int) -> FieldDesc:
    """Minimal GF(2^d) containing the p-th roots of unity.

    Any such field automatically has more than p elements, which the plane
    containment test needs; asserted anyway.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"p = {p} must be an odd prime")
    d = 1
    while (2**d - 1) % p:
        d += 1
    field = make_field(2, d)
    assert field.order > p
    return field


def find_order_p(field: FieldDesc, p: int) -> int:
    """Least packed value of multiplicative order exactly p."""
    if (field.order - 1) % p:
        raise DomainError(f"no elements of order {p} in {field!r}")
    for v in range(2, field.order):
        if field.pow_val(v, p) == 1:
            return v
    raise AssertionError("order-p element must exist")  # unreachable


def apply_perm(perm, vec):
    """Pullback action: coordinate i of the result reads coordinate perm(i)."""
    return tuple(vec[perm[i]] for i in range(len(perm)))


def eigen_decomposition(g: GroupG, field: FieldDesc) -> list[CharLine]:
    """All 2p^m character eigenlines of E^n; verified G-stable with the
    stated character, and jointly of full rank n."""
    if (field.order - 1) % g.p:
        raise DomainError(
            f"{field!r} has no p-th roots of unity for p = {g.p}")
    omega = find_order_p(field, g.p)
    size = g.block_size
    lines = []
    for block in (1, 2):
        off = (block - 1) * size
        for a_idx in range(size):
            a = _digits(a_idx, g.p, g.m)
            vec = [0] * g.n
            for i in range(size):
                b = _digits(i, g.p, g.m)
                e = sum(x * y for x, y in zip(a, b)) % g.p
                vec[off + i] = field.pow_val(omega, e)
            line = CharLine(block=block, chi=a, vector=tuple(vec))
            _verify_line(g, field, line, omega)
            lines.append(line)
    rank = len(gflinalg.rref_vals([list(l.vector) for l in lines], field))
    assert rank == g.n, "eigenlines must span the whole space"
    return lines


def _verify_line(g: GroupG, field: FieldDesc, line: CharLine,
                 omega: int) -> None:
    for gi, perm in enumerate(g.gens):
        gen_block = 1 if gi < g.m else 2
        j = gi % g.m
        eig = field.pow_val(omega, line.chi[j]) if gen_block == line.block else 1
        moved = apply_perm(perm, line.vector)
        expect = tuple(field.mul_val(eig, v) for v in line.vector)
        assert moved == expect, "line is not an eigenvector of the generator"


def eigenline_powersum(line: CharLine, field: FieldDesc, p: int) -> int:
    """Sum of p-th powers of the line's coordinates; 1 for every character
    line, since each block entry is a p-th root of unity and p^m is odd."""
    acc = 0
    for v in line.vector:
        acc = field.add_val(acc, field.pow_val(v, p))
    return acc


def block_indicators(g: GroupG, field: FieldDesc) -> tuple[tuple[int, ...],
                                                           tuple[int, ...]]:
    """The two fixed vectors spanning the trivial isotypic plane."""
    size = g.block_size
    u1 = tuple([1] * size + [0] * size)
    u2 = tuple([0] * size + [1] * size)
    return u1, u2


def _span_contains(rref, vec, field: FieldDesc) -> bool:
    rem = list(vec)
    for row in rref:
        pivot = next(i for i, x in enumerate(row) if x)
        c = rem[pivot]
        if c:
            rem = [field.sub_val(x, field.mul_val(c, y))
                   for x, y in zip(rem, row)]
    return not any(rem)


def _plane(field: FieldDesc, v, w, origin: str) -> InvPlane:
    rows = gflinalg.rref_vals([list(v), list(w)], field)
    if len(rows) != 2:
        raise DomainError("plane basis vectors are dependent")
    return InvPlane(basis=(rows[0], rows[1]), origin=origin)


def _verify_invariant(g: GroupG, field: FieldDesc, plane: InvPlane) -> None:
    for perm in g.gens:
        for row in plane.basis:
            assert _span_contains(plane.basis, apply_perm(perm, row), field), \
                "plane is not G-stable"


def invariant_planes(g: GroupG, field: FieldDesc) -> list[InvPlane]:
    """The complete list of G-invariant 2-planes.

    Complete reducibility in odd order and characteristic 2 means every
    invariant plane splits into character lines; distinct-character pairs,
    a nontrivial line plus any line of the trivial isotypic plane, and the
    trivial isotypic plane itself exhaust the possibilities.  Every entry
    is re-verified G-stable; the brute-force oracle guards completeness.
    """
    lines = eigen_decomposition(g, field)
    nontrivial = [l for l in lines if any(l.chi)]
    assert len(nontrivial) == 2 * g.block_size - 2
    u1, u2 = block_indicators(g, field)
    planes = []
    for i in range(len(nontrivial)):
        for j in range(i + 1, len(nontrivial)):
            planes.append(_plane(field, nontrivial[i].vector,
                                 nontrivial[j].vector, "line-pair"))
    # lines inside the trivial isotypic: u1 + c*u2 for c in E, and u2 itself
    iso_lines = [tuple(field.add_val(a, field.mul_val(c, b))
                       for a, b in zip(u1, u2)) for c in range(field.order)]
    iso_lines.append(u2)
    for l in nontrivial:
        for iso in iso_lines:
            planes.append(_plane(field, l.vector, iso, "mixed"))
    planes.append(_plane(field, u1, u2, "trivial-isotypic"))
    for plane in planes:
        _verify_invariant(g, field, plane)
    assert len({p.basis for p in planes}) == len(planes), "duplicate planes"
    return planes


def no_plane_in_x(g: GroupG, field: FieldDesc):
    """(all_excluded, witnesses, reduction note): for every invariant plane,
    a member vector violating one of the first p power sums."""
    if field.order <= g.p:
        raise DomainError(
            f"|E| = {field.order} must exceed p = {g.p} for a complete scan")
    variety = PowerSumVariety(field=field, p=g.p)
    planes = invariant_planes(g, field)
    witnesses = []
    all_excluded = True
    for plane in planes:
        wit = _exclude_plane(plane, variety, field)
        if wit is None:
            all_excluded = False
        else:
            witnesses.append(wit)
    return all_excluded, witnesses, REDUCTION_NOTE


def _exclude_plane(plane: InvPlane, variety: PowerSumVariety,
                   field: FieldDesc) -> PlaneWitness | None:
    r0, r1 = plane.basis
    for lam in range(field.order):
        for mu in range(field.order):
            if lam == 0 and mu == 0:
                continue
            vec = tuple(field.add_val(field.mul_val(lam, a),
                                      field.mul_val(mu, b))
                        for a, b in zip(r0, r1))
            k = variety.violation(vec)
            if k is not None:
                return PlaneWitness(plane=plane, coeffs=(lam, mu),
                                    vector=vec, equation=k)
    return None


def count_2planes(n: int, q: int) -> int:
    """Gaussian binomial [n choose 2]_q, the number of 2-dim subspaces."""
    num = (q**n - 1) * (q ** (n - 1) - 1)
    den = (q**2 - 1) * (q - 1)
    assert num % den == 0
    return num // den


def brute_force_oracle(g: GroupG, field: FieldDesc,
                       budget: int | None = None):
    """Sweep every 2-dim subspace of E^n: returns (no invariant plane lies
    in the variety, the list of invariant planes found).

    Enumerates canonical reduced bases directly: pivot columns j1 < j2, free
    entries right of the pivots.  Independent of the structured enumeration.
    """
    total = count_2planes(g.n, field.order)
    cap = DEFAULT_LIMIT if budget is None else budget
    if total > cap:
        raise BudgetError("2-plane count", total, cap)
    variety = PowerSumVariety(field=field, p=g.p)
    q = field.order
    n = g.n
    found = []
    excluded = True
    seen = 0
    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            free1 = [c for c in range(j1 + 1, n) if c != j2]
            free2 = list(range(j2 + 1, n))
            nfree = len(free1) + len(free2)
            for assign in range(q**nfree):
                row1 = [0] * n
                row2 = [0] * n
                row1[j1] = 1
                row2[j2] = 1
                a = assign
                for c in free1:
                    row1[c] = a % q
                    a //= q
                for c in free2:
                    row2[c] = a % q
                    a //= q
                seen += 1
                if _is_invariant_fast(g, field, row1, row2, j1, j2):
                    plane = InvPlane(basis=(tuple(row1), tuple(row2)),
                                     origin="brute-force")
                    found.append(plane)
                    if _exclude_plane(plane, variety, field) is None:
                        excluded = False
    assert seen == total
    return excluded, found


def _is_invariant_fast(g: GroupG, field: FieldDesc, row1, row2,
                       j1: int, j2: int) -> bool:
    # membership against the two pivot columns, no general reduction needed
    for perm in g.gens:
        for row in (row1, row2):
            moved = [row[perm[i]] for i in range(len(perm))]
            c1, c2 = moved[j1], moved[j2]
            for i, x in enumerate(moved):
                t = field.sub_val(
                    x, field.add_val(field.mul_val(c1, row1[i]),
                                     field.mul_val(c2, row2[i])))
                if t:
                    break
            else:
                continue
            return False
    return True
