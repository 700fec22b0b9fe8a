"""Demazure products via min-plus multiplication of slipface functions.

The product of two permutations is computed by tabulating both slipfaces on a
finite box, taking the min-plus matrix product, and recovering the unique
permutation of the resulting submodular table.  A brute-force Bruhat-maximum
oracle over products of Bruhat-lower elements is provided for testing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import permutations

import numpy as np

from .errors import (
    BadAsymptotics,
    EmptySequence,
    InconsistentPeriod,
    NoUniqueMax,
    NotSubmodular,
    PeriodMismatch,
    TooLarge,
)
from .perm import (
    Perm,
    bruhat_leq,
    compose,
    identity,
    inv_count,
    inverse,
    inversion_classes,
    make_affine,
    make_finitary,
)

DEFAULT_ORACLE_BOUND = 10**6


# -- slipface tables --------------------------------------------------------


def _slipface_matrix(p: Perm, a_lo: int, a_hi: int, b_lo: int, b_hi: int):
    """ndarray S[i, j] = s_p(a_lo + i, b_lo + j)."""
    A = np.arange(a_lo, a_hi)[:, None]
    B = np.arange(b_lo, b_hi)[None, :]
    S = np.zeros((a_hi - a_lo, b_hi - b_lo), dtype=np.int64)
    if p.period:
        k = p.period
        for r, w in enumerate(p.window):
            S += np.maximum(0, (-(-(A - w) // k)) - (-(-(B - r) // k)))
        return S
    lo, hi = p.lo, p.hi
    S += np.maximum(0, A + p.chi - np.maximum(B, hi))
    S += np.maximum(0, np.minimum(lo, A + p.chi) - np.minimum(B, lo))
    for i, v in enumerate(p.vals):
        S += (B <= lo + i) & (A > v)
    return S


@dataclass(frozen=True)
class SlipfaceTable:
    """Values s(a, b) on the box [a0, a0+rows) x [b0, b0+cols)."""

    a0: int
    b0: int
    values: tuple  # tuple of row tuples
    chi: int
    margin: int

    @property
    def rows(self) -> int:
        return len(self.values)

    @property
    def cols(self) -> int:
        return len(self.values[0])

    def value(self, a: int, b: int) -> int:
        return self.values[a - self.a0][b - self.b0]

    def validate(self) -> None:
        arr = np.asarray(self.values, dtype=np.int64)
        sub = arr[1:, :-1] - arr[:-1, :-1] - arr[1:, 1:] + arr[:-1, 1:]
        if (sub < 0).any():
            raise NotSubmodular("slipface table is not submodular")
        A = np.arange(self.a0, self.a0 + self.rows)[:, None]
        B = np.arange(self.b0, self.b0 + self.cols)[None, :]
        D = A - B
        if self.a0 - (self.b0 + self.cols - 1) > -self.margin:
            raise BadAsymptotics("box does not reach the zero regime")
        if (self.a0 + self.rows - 1) - self.b0 < self.margin:
            raise BadAsymptotics("box does not reach the linear regime")
        low = D <= -self.margin
        high = D >= self.margin
        if (arr[low] != 0).any():
            raise BadAsymptotics("nonzero value in the zero regime")
        if (arr[high] != (self.chi + D)[high]).any():
            raise BadAsymptotics("value off chi + a - b in the linear regime")


def tabulate(p: Perm, pad: int = 2) -> SlipfaceTable:
    """A validated slipface table of p covering its window and both regimes."""
    E = p.extent() + 1
    margin = 2 * E + 2
    if p.period:
        b_lo, b_hi = -pad, p.period + pad
    else:
        b_lo, b_hi = min(p.lo, 0) - pad, max(p.hi, 0) + pad
    a_lo, a_hi = b_lo - margin - 1, b_hi + margin + 1
    arr = _slipface_matrix(p, a_lo, a_hi, b_lo, b_hi)
    return SlipfaceTable(
        a0=a_lo,
        b0=b_lo,
        values=tuple(tuple(int(x) for x in row) for row in arr),
        chi=p.chi,
        margin=margin,
    )


def _recover_column(t: SlipfaceTable, b: int) -> int:
    """The value p(b) of the unique permutation with slipface t."""
    for a in range(t.a0, t.a0 + t.rows):
        if t.value(a, b) - t.value(a, b + 1) == 1:
            return a - 1
    raise BadAsymptotics(f"no transition found in column {b}")


def perm_from_slipface(t: SlipfaceTable, k: int) -> Perm:
    """The unique permutation whose slipface matches t inside its box."""
    t.validate()
    if k:
        arr = np.asarray(t.values, dtype=np.int64)
        if t.rows > k and t.cols > k:
            if (arr[k:, k:] != arr[:-k, :-k]).any():
                raise InconsistentPeriod("table is not k-translation invariant")
        else:
            raise InconsistentPeriod("box too small to witness the period")
        if not (t.b0 <= 0 and t.b0 + t.cols >= k + 1):
            raise InconsistentPeriod("box must cover columns 0..k")
        window = [_recover_column(t, b) for b in range(k)]
        p = make_affine(k, window)
    else:
        vals = [_recover_column(t, b) for b in range(t.b0, t.b0 + t.cols - 1)]
        p = make_finitary(t.chi, t.b0, vals)
    if p.chi != t.chi:
        raise BadAsymptotics("recovered permutation has the wrong shift")
    return p


# -- the Demazure product ---------------------------------------------------


@lru_cache(maxsize=None)
def demazure(a: Perm, b: Perm) -> Perm:
    """The permutation whose slipface is the min-plus product of both."""
    if a.period != b.period:
        raise PeriodMismatch(
            f"cannot multiply period {a.period} with period {b.period}"
        )
    k = a.period
    chi = a.chi + b.chi
    E = a.extent() + b.extent() + 1
    pad = E + 2
    for _ in range(8):
        if k:
            b_lo, b_hi = -pad, k + pad + 1
        else:
            p0 = min(b.lo, a.lo + b.chi, 0) - pad
            p1 = max(b.hi, a.hi + b.chi, 0) + pad
            b_lo, b_hi = p0, p1 + 1
        a_lo, a_hi = b_lo - E - 2, b_hi + E + 2
        l_lo = min(a_lo, b_lo) - E - 2
        l_hi = max(a_hi, b_hi) + E + 2
        A = _slipface_matrix(a, a_lo, a_hi, l_lo, l_hi)
        B = _slipface_matrix(b, l_lo, l_hi, b_lo, b_hi)
        stack = A[:, :, None] + B[None, :, :]
        S = stack.min(axis=1)
        interior = stack[:, 1:-1, :].min(axis=1)
        if not (S == interior).all():
            pad *= 2
            continue
        table = SlipfaceTable(
            a0=a_lo,
            b0=b_lo,
            values=tuple(tuple(int(x) for x in row) for row in S),
            chi=chi,
            margin=E + 1,
        )
        return perm_from_slipface(table, k)
    raise BadAsymptotics("min-plus scan failed to stabilize")  # pragma: no cover


def demazure_fold(ps) -> Perm:
    ps = list(ps)
    if not ps:
        raise EmptySequence("cannot fold an empty sequence")
    return reduce(demazure, ps)


# -- reducedness ------------------------------------------------------------


def is_reduced_pair(a: Perm, b: Perm) -> bool:
    if a.period != b.period:
        raise PeriodMismatch("reducedness requires equal periods")
    return not (inversion_classes(a) & inversion_classes(inverse(b)))


def _normalize_pair(m: int, n: int, k: int):
    if k:
        r = n % k
        return (m - (n - r), r)
    return (m, n)


def is_reduced_tuple(ps) -> bool:
    """Whether the inversion set of the product splits as a disjoint union of
    the inversion sets of the factors, pulled back along the suffixes."""
    ps = list(ps)
    if not ps:
        return True
    k = ps[0].period
    if any(p.period != k for p in ps):
        raise PeriodMismatch("reducedness requires equal periods")
    product = reduce(compose, ps)
    target = inversion_classes(product)
    union = set()
    total = 0
    suffix_inv = identity(k)
    for p in reversed(ps):
        pulled = {
            _normalize_pair(suffix_inv(u), suffix_inv(v), k)
            for (u, v) in inversion_classes(p)
        }
        total += len(inversion_classes(p))
        if len(pulled) != len(inversion_classes(p)):
            return False
        union |= pulled
        suffix_inv = compose(suffix_inv, inverse(p))
    return union == target and total == len(target)


def is_length_additive(ps) -> bool:
    ps = list(ps)
    if not ps:
        return True
    if any(p.period != ps[0].period for p in ps):
        raise PeriodMismatch("length additivity requires equal periods")
    return inv_count(reduce(compose, ps)) == sum(inv_count(p) for p in ps)


# -- brute-force oracle -----------------------------------------------------


def bruhat_lower_set(p: Perm, bound: int = DEFAULT_ORACLE_BOUND):
    """All q with shift(q) = shift(p) and q <= p in Bruhat order."""
    out = set()
    if p.period == 0:
        if math.factorial(len(p.vals)) > bound:
            raise TooLarge(f"window of size {len(p.vals)} exceeds oracle bound")
        for arrangement in permutations(p.vals):
            q = make_finitary(p.chi, p.lo, arrangement)
            if bruhat_leq(q, p):
                out.add(q)
        return out
    k = p.period
    D = p.extent()
    if (2 * D + 1) ** k > bound:
        raise TooLarge("affine candidate count exceeds oracle bound")
    target_sum = -p.chi * k
    window: list = []

    def rec(i: int, used_residues: set, acc: int) -> None:
        if i == k:
            if acc == target_sum:
                q = make_affine(k, window)
                if bruhat_leq(q, p):
                    out.add(q)
            return
        remaining = k - i - 1
        for v in range(i - D, i + D + 1):
            r = v % k
            if r in used_residues:
                continue
            d = v - i
            if abs(acc + d - target_sum) > remaining * D:
                continue
            used_residues.add(r)
            window.append(v)
            rec(i + 1, used_residues, acc + d)
            window.pop()
            used_residues.discard(r)

    rec(0, set(), 0)
    return out


def demazure_by_max_oracle(
    a: Perm, b: Perm, bound: int = DEFAULT_ORACLE_BOUND
) -> Perm:
    """max{a1 b1 : a1 <= a, b1 <= b}, by exhaustive enumeration."""
    if a.period != b.period:
        raise PeriodMismatch("oracle requires equal periods")
    prods = {
        compose(a1, b1)
        for a1 in bruhat_lower_set(a, bound)
        for b1 in bruhat_lower_set(b, bound)
    }
    for m in prods:
        if all(bruhat_leq(q, m) for q in prods):
            return m
    raise NoUniqueMax("product set has no Bruhat maximum")
