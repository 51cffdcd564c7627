"""Elementary symmetric functions of an element's conjugates, and the
generator predicates built from them.

For y in L with extension degree n over K, the profile (s_1, ..., s_n) is
read off the characteristic polynomial: char(t) = t^n - s_1 t^(n-1) + ...
+ (-1)^n s_n, so s_i = (-1)^i * coeff(t^(n-i)).  An element is a "Joubert
generator" when it generates L over K and s_1 = s_3 = 0; its minimal
polynomial then has zero coefficients in the two relevant positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .ffield import ExtDesc, FElt, rel_trace
from .fpoly import char_poly


@dataclass(frozen=True)
class SigmaProfile:
    """Symmetric-function profile of one element; values live in the base
    field, packed as big-field values."""

    ext: ExtDesc
    sigmas: tuple[int, ...]

    def sigma(self, i: int) -> int:
        """s_i as a packed value, 1-indexed; s_0 = 1 by convention."""
        if i == 0:
            return 1
        if not 1 <= i <= len(self.sigmas):
            raise DomainError(f"sigma index {i} out of range 1..{len(self.sigmas)}")
        return self.sigmas[i - 1]

    @property
    def n(self) -> int:
        return len(self.sigmas)


def sigma_profile(y: FElt, ext: ExtDesc) -> SigmaProfile:
    """Profile of y's n conjugates (counted with multiplicity if y lies in a
    proper intermediate field)."""
    cp = char_poly(y, ext)
    big = ext.big
    n = ext.n
    sig = []
    for i in range(1, n + 1):
        c = cp.coeff(n - i)
        sig.append(big.neg_val(c) if i % 2 else c)
    for s in sig:
        assert ext.frob_val(s) == s, "sigma left the base field"
    return SigmaProfile(ext, tuple(sig))


def is_generator(y: FElt, ext: ExtDesc) -> bool:
    """True iff y generates the big field over the base field, i.e. no
    proper power q^d with d < n fixes y."""
    if y.field != ext.big:
        raise DomainError(f"{y!r} does not live in {ext.big!r}")
    cur = ext.frob_val(y.val)
    steps = 1
    while cur != y.val:
        cur = ext.frob_val(cur)
        steps += 1
    return steps == ext.n


def is_joubert(y: FElt, ext: ExtDesc) -> bool:
    """Generator of the extension whose profile has s_1 = s_3 = 0.

    Equivalently, the minimal polynomial t^n + a_{n-1} t^(n-1) + ... + a_0
    has a_{n-1} = a_{n-3} = 0.
    """
    if ext.n < 3:
        raise DomainError(f"need extension degree >= 3, got {ext.n}")
    if not is_generator(y, ext):
        return False
    prof = sigma_profile(y, ext)
    return prof.sigma(1) == 0 and prof.sigma(3) == 0


def power_traces(y: FElt, ext: ExtDesc, kmax: int) -> list[int]:
    """[Tr(y), Tr(y^2), ..., Tr(y^kmax)] as packed base-field values."""
    if y.field != ext.big:
        raise DomainError(f"{y!r} does not live in {ext.big!r}")
    big = ext.big
    out = []
    cur = y.val
    for _ in range(kmax):
        out.append(ext.trace_val(cur))
        cur = big.mul_val(cur, y.val)
    return out


def trace_conditions(y: FElt, ext: ExtDesc) -> tuple[int, int]:
    """(Tr(y), Tr(y^3)) as packed values.  In characteristic 2 these vanish
    together exactly when s_1 = s_3 = 0, which makes them a cheap prefilter
    for Joubert searches; the sigma-based predicate stays authoritative."""
    big = ext.big
    y3 = big.mul_val(big.mul_val(y.val, y.val), y.val)
    return ext.trace_val(y.val), ext.trace_val(y3)
