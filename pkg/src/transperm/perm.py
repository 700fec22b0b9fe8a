"""Almost-sign-preserving and extended k-affine permutations of the integers.

Two finitely-presented families are supported:

* period k >= 2: a bijection alpha with alpha(n+k) = alpha(n)+k, stored as the
  window of values alpha(0..k-1);
* period 0: a bijection that agrees with the shift map n -> n - chi outside a
  finite window, stored as (chi, lo, vals) with the window trimmed so that
  structural equality coincides with mathematical equality.

All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadPeriod,
    DuplicateResidue,
    NotAWindowPermutation,
    PeriodMismatch,
    ShiftMismatch,
)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class Perm:
    """A permutation of the integers in canonical form.

    Do not call the constructor directly; use make_affine / make_finitary /
    iota / sigma, which validate and canonicalize.
    """

    period: int
    chi: int
    lo: int = 0
    vals: tuple = ()      # k = 0 window values
    window: tuple = ()    # k >= 2 window alpha(0..k-1)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, n: int) -> int:
        k = self.period
        if k:
            r = n % k
            return self.window[r] + (n - r)
        if self.lo <= n < self.lo + len(self.vals):
            return self.vals[n - self.lo]
        return n - self.chi

    @property
    def hi(self) -> int:
        """One past the last window position (k = 0 only)."""
        return self.lo + len(self.vals)

    def extent(self) -> int:
        """A bound on |alpha(n) - n| over all n."""
        if self.period:
            return max(abs(w - i) for i, w in enumerate(self.window))
        if not self.vals:
            return abs(self.chi)
        disp = max(abs(v - (self.lo + i)) for i, v in enumerate(self.vals))
        return max(disp, abs(self.chi))

    def is_identity(self) -> bool:
        if self.period:
            return all(w == i for i, w in enumerate(self.window))
        return self.chi == 0 and not self.vals

    # -- display ------------------------------------------------------------

    def __repr__(self) -> str:
        from .formats import format_perm

        return f"Perm<{format_perm(self)}>"


# -- constructors -----------------------------------------------------------


def make_affine(k: int, window) -> Perm:
    """The extended k-affine permutation with the given value window."""
    if k < 2:
        raise BadPeriod(f"affine period must be >= 2, got {k}")
    window = tuple(int(w) for w in window)
    if len(window) != k:
        raise NotAWindowPermutation(f"window must have length {k}, got {len(window)}")
    if len({w % k for w in window}) != k:
        raise DuplicateResidue(f"window residues mod {k} collide: {window}")
    total = sum(w - i for i, w in enumerate(window))
    # distinct residues force total % k == 0
    return Perm(period=k, chi=-(total // k), window=window)


def make_finitary(chi: int, lo: int, vals) -> Perm:
    """The permutation equal to n -> n - chi outside the window at lo."""
    vals = tuple(int(v) for v in vals)
    target = set(range(lo - chi, lo - chi + len(vals)))
    if set(vals) != target or len(set(vals)) != len(vals):
        raise NotAWindowPermutation(
            f"vals must be a permutation of [{lo - chi}, {lo - chi + len(vals)}), got {vals}"
        )
    # trim positions that already agree with n -> n - chi
    while vals and vals[0] == lo - chi:
        vals = vals[1:]
        lo += 1
    while vals and vals[-1] == lo + len(vals) - 1 - chi:
        vals = vals[:-1]
    if not vals:
        lo = 0
    return Perm(period=0, chi=chi, lo=lo, vals=vals)


def _check_period(k: int) -> None:
    if k == 1 or k < 0:
        raise BadPeriod(f"period must be 0 or >= 2, got {k}")


def iota(n: int, k: int) -> Perm:
    """The shift permutation m -> m - n (shift n)."""
    _check_period(k)
    if k:
        return make_affine(k, [i - n for i in range(k)])
    return Perm(period=0, chi=n)


def sigma(m: int, k: int) -> Perm:
    """The involution exchanging n and n+1 for all n congruent to m mod k.

    For k = 0 only the single pair (m, m+1) is swapped.
    """
    _check_period(k)
    if k == 0:
        return Perm(period=0, chi=0, lo=m, vals=(m + 1, m))
    w = list(range(k))
    mm = m % k
    for i in range(k):
        if i % k == mm:
            w[i] = i + 1
        elif i % k == (mm + 1) % k:
            w[i] = i - 1
    return make_affine(k, w)


def identity(k: int) -> Perm:
    return iota(0, k)


# -- group operations -------------------------------------------------------


def apply(p: Perm, n: int) -> int:
    return p(n)


def inverse(p: Perm) -> Perm:
    if p.period:
        k = p.period
        inv_w = [0] * k
        for r, w in enumerate(p.window):
            v = w % k
            inv_w[v] = r + (v - w)
        return make_affine(k, inv_w)
    lo2 = p.lo - p.chi
    vals2 = [0] * len(p.vals)
    for i, v in enumerate(p.vals):
        vals2[v - lo2] = p.lo + i
    return make_finitary(-p.chi, lo2, vals2)


def apply_inverse(p: Perm, n: int) -> int:
    return inverse(p)(n)


def compose(a: Perm, b: Perm) -> Perm:
    """The composite n -> a(b(n)); products fold left-to-right this way."""
    if a.period != b.period:
        raise PeriodMismatch(f"cannot compose period {a.period} with {b.period}")
    k = a.period
    if k:
        return make_affine(k, [a(b(i)) for i in range(k)])
    lo = min(b.lo, a.lo + b.chi)
    hi = max(b.hi, a.hi + b.chi)
    vals = [a(b(n)) for n in range(lo, hi)]
    return make_finitary(a.chi + b.chi, lo, vals)


# -- shift ------------------------------------------------------------------


def shift(p: Perm) -> int:
    return p.chi


def shift_by_count(p: Perm) -> int:
    """The counting definition of the shift, as an independent cross-check."""
    m = p.extent() + p.period + abs(p.lo) + len(p.vals) + 1
    neg = sum(1 for n in range(0, m) if p(n) < 0)
    pos = sum(1 for n in range(-m, 0) if p(n) >= 0)
    return neg - pos


# -- slipface ---------------------------------------------------------------


def slipface(p: Perm, a: int, b: int) -> int:
    """s_p(a, b) = #{n >= b : p(n) < a}, computed in closed form."""
    if p.period:
        k = p.period
        total = 0
        for r, w in enumerate(p.window):
            total += max(0, _ceil_div(a - w, k) - _ceil_div(b - r, k))
        return total
    lo, hi = p.lo, p.hi
    total = sum(1 for n in range(max(b, lo), hi) if p(n) < a)
    total += max(0, a + p.chi - max(b, hi))
    total += max(0, min(lo, a + p.chi) - min(b, lo))
    return total


# -- inversions -------------------------------------------------------------


def inversion_classes(p: Perm):
    """Canonical representatives (m, n), m < n, p(m) > p(n).

    For k >= 2 one representative per k-equivalence class, normalized so that
    n lies in [0, k).
    """
    out = set()
    if p.period:
        k = p.period
        up = max(w - i for i, w in enumerate(p.window))
        for n in range(k):
            an = p(n)
            for m in range(an - up, n):
                if p(m) > an:
                    out.add((m, n))
        return out
    for j in range(len(p.vals)):
        for i in range(j):
            if p.vals[i] > p.vals[j]:
                out.add((p.lo + i, p.lo + j))
    return out


def inv_count(p: Perm) -> int:
    return len(inversion_classes(p))


# -- essential set ----------------------------------------------------------


def essential_set(p: Perm):
    """All (a, b) with p^-1(a-1) >= b > p^-1(a) and p(b-1) >= a > p(b).

    For k >= 2 one representative per translation class, with b in [0, k).
    """
    q = inverse(p)
    out = set()
    if p.period:
        bs = [m + 1 for m in range(p.period) if p(m) > p(m + 1)]
    else:
        bs = [m + 1 for m in range(p.lo - 1, p.hi + 1) if p(m) > p(m + 1)]
    for b in bs:
        for a in range(p(b) + 1, p(b - 1) + 1):
            if q(a - 1) >= b > q(a):
                if p.period:
                    r = b % p.period
                    out.add((a - (b - r), r))
                else:
                    out.add((a, b))
    return out


def descents_right(p: Perm):
    """Positions m with p(m) > p(m+1), one representative per class mod k."""
    if p.period:
        return {m for m in range(p.period) if p(m) > p(m + 1)}
    return {m for m in range(p.lo - 1, p.hi + 1) if p(m) > p(m + 1)}


# -- Bruhat order -----------------------------------------------------------


def bruhat_leq(a: Perm, b: Perm) -> bool:
    """Pointwise slipface comparison, decided on the essential set of a."""
    if a.period != b.period:
        raise PeriodMismatch(
            f"cannot compare period {a.period} with period {b.period}"
        )
    if a.chi != b.chi:
        raise ShiftMismatch(f"cannot compare shift {a.chi} with shift {b.chi}")
    return all(slipface(a, x, y) <= slipface(b, x, y) for (x, y) in essential_set(a))
