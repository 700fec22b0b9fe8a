"""Reduced words, reduced tuples with prescribed shifts, and Hecke words.

Letters are generator indices m (the adjacent-swap class sigma_m); the
identity letter of a Hecke word is represented by None.  All counts are exact
Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .demazure import demazure, is_reduced_tuple
from .errors import ShiftNonzero, ShiftSumMismatch
from .perm import (
    Perm,
    compose,
    descents_right,
    identity,
    iota,
    sigma,
)


@dataclass(frozen=True)
class Word:
    period: int
    letters: tuple  # ints, or None for the identity letter (hecke flavor)
    flavor: str = "reduced"


@dataclass(frozen=True)
class ShiftedTuple:
    factors: tuple  # of Perm
    shifts: tuple  # of int


def evaluate_word(w: Word, mode: str = "ordinary") -> Perm:
    """Compose (or Demazure-fold) the letters left to right."""
    k = w.period
    acc = identity(k)
    op = compose if mode == "ordinary" else demazure
    for m in w.letters:
        if m is None:
            continue
        acc = op(acc, sigma(m, k))
    return acc


def _require_shift_zero(p: Perm) -> None:
    if p.chi != 0:
        raise ShiftNonzero(f"expected shift 0, got shift {p.chi}")


def reduced_words(p: Perm):
    """All reduced words for p (shift 0), as a sorted list of letter tuples.

    Every word has length inv_count(p) and evaluates to p by ordinary
    composition.
    """
    _require_shift_zero(p)

    def rec(q: Perm):
        if q.is_identity():
            yield ()
            return
        for m in sorted(descents_right(q)):
            for tail in rec(compose(q, sigma(m, q.period))):
                yield tail + (m,)

    return sorted(rec(p))


def reduced_word_objects(p: Perm):
    return [Word(p.period, w, "reduced") for w in reduced_words(p)]


_RW_COUNT_MEMO: dict = {}


def reduced_word_count(p: Perm) -> int:
    _require_shift_zero(p)
    if p.is_identity():
        return 1
    cached = _RW_COUNT_MEMO.get(p)
    if cached is not None:
        return cached
    total = sum(
        reduced_word_count(compose(p, sigma(m, p.period)))
        for m in descents_right(p)
    )
    _RW_COUNT_MEMO[p] = total
    return total


def _block_splits(n: int, parts: int):
    """All ways to cut [0, n) into `parts` consecutive (possibly empty) blocks."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _block_splits(n - first, parts - 1):
            yield (first,) + rest


def reduced_tuples(target: Perm, shifts, max_inv_per_factor=None):
    """All reduced tuples (b_1, ..., b_l) with prescribed factor shifts whose
    ordinary product is target.

    Works by splitting reduced words of the shift-normalized target into
    consecutive blocks and re-instating shifts; conjugation by a shift
    re-indexes generators, sigma_m -> sigma_{m+c}.
    """
    shifts = tuple(int(s) for s in shifts)
    k = target.period
    if sum(shifts) != target.chi:
        raise ShiftSumMismatch(
            f"factor shifts sum to {sum(shifts)}, target shift is {target.chi}"
        )
    ell = len(shifts)
    t0 = compose(iota(-target.chi, k), target)
    # trailing shift to the right of factor i
    tails = [sum(shifts[i + 1 :]) for i in range(ell)]
    out = set()
    for letters in reduced_words(t0):
        for sizes in _block_splits(len(letters), ell):
            if max_inv_per_factor is not None and max(sizes) > max_inv_per_factor:
                continue
            factors = []
            pos = 0
            for i, size in enumerate(sizes):
                block = letters[pos : pos + size]
                pos += size
                delta = identity(k)
                for m in block:
                    delta = compose(delta, sigma(m - tails[i], k))
                factors.append(compose(iota(shifts[i], k), delta))
            tup = tuple(factors)
            if tup in out:
                continue
            if reduce(compose, tup) == target and is_reduced_tuple(tup):
                out.add(tup)
    return {ShiftedTuple(tup, shifts) for tup in out}


_HECKE_MEMO: dict = {}


def hecke_word_count(p: Perm, g: int) -> int:
    """The number of length-g sequences of identity-or-sigma letters whose
    Demazure fold equals p (shift 0)."""
    _require_shift_zero(p)
    if g < 0:
        return 0
    key = (g, p)
    cached = _HECKE_MEMO.get(key)
    if cached is not None:
        return cached
    if g == 0:
        result = 1 if p.is_identity() else 0
    else:
        ds = descents_right(p)
        result = hecke_word_count(p, g - 1) * (1 + len(ds))
        for m in ds:
            result += hecke_word_count(compose(p, sigma(m, p.period)), g - 1)
    _HECKE_MEMO[key] = result
    return result


def hecke_words_naive(k: int, g: int, alphabet):
    """Exhaustive tally of Demazure folds of all length-g letter sequences.

    Letters are None plus sigma_m for m in alphabet.  Returns a dict mapping
    each resulting permutation to its number of words.  Test oracle only.
    """
    tallies = {identity(k): 1}
    letters = [None] + [sigma(m, k) for m in alphabet]
    for _ in range(g):
        nxt: dict = {}
        for q, c in tallies.items():
            for s in letters:
                r = q if s is None else demazure(q, s)
                nxt[r] = nxt.get(r, 0) + c
        tallies = nxt
    return tallies
