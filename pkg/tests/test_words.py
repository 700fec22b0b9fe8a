import pytest

from transperm import (
    ShiftNonzero,
    ShiftSumMismatch,
    Word,
    compose,
    evaluate_word,
    hecke_word_count,
    hecke_words_naive,
    identity,
    inv_count,
    iota,
    is_reduced_tuple,
    make_affine,
    make_finitary,
    reduced_tuples,
    reduced_word_count,
    reduced_words,
    sigma,
)


def test_reduced_words_s3():
    w0 = make_finitary(0, 0, [2, 1, 0])
    assert reduced_words(w0) == [(0, 1, 0), (1, 0, 1)]


def test_reduced_words_evaluate_back():
    targets = [
        make_finitary(0, 0, [3, 1, 2, 0]),
        make_affine(2, [3, -2]),
        make_affine(3, [2, 0, 1]),
        identity(0),
    ]
    for p in targets:
        words = reduced_words(p)
        assert len(words) == reduced_word_count(p)
        for letters in words:
            assert len(letters) == inv_count(p)
            assert evaluate_word(Word(p.period, letters)) == p
            # a reduced word folds to the same element in the Hecke sense
            assert evaluate_word(Word(p.period, letters), mode="demazure") == p


def test_reduced_words_requires_shift_zero():
    with pytest.raises(ShiftNonzero):
        reduced_words(iota(1, 0))
    with pytest.raises(ShiftNonzero):
        reduced_word_count(iota(-1, 2))


def test_longest_element_counts():
    assert reduced_word_count(make_finitary(0, 0, [2, 1, 0])) == 2
    assert reduced_word_count(make_finitary(0, 0, [3, 2, 1, 0])) == 16


def test_affine_dihedral_words():
    # in period 2 every element has a unique reduced word (dihedral group)
    for w in ([3, -2], [-2, 3], [2, -1], [-1, 2]):
        assert reduced_word_count(make_affine(2, w)) == 1


def test_evaluate_word_skips_identity_letters():
    w = Word(0, (0, None, 1, None, 0))
    assert evaluate_word(w) == make_finitary(0, 0, [2, 1, 0])


def test_hecke_count_matches_naive():
    s0 = sigma(0, 0)
    assert hecke_word_count(s0, 1) == 1
    assert hecke_word_count(s0, 2) == 3  # s0 _, _ s0, s0 s0
    for k, alphabet in ((0, range(-1, 3)), (2, range(2))):
        for g in range(4):
            tally = hecke_words_naive(k, g, alphabet)
            total = (len(list(alphabet)) + 1) ** g
            assert sum(tally.values()) == total
            for p, c in tally.items():
                if p.chi == 0:
                    assert hecke_word_count(p, g) == c


def test_hecke_at_length_equals_reduced_count():
    for p in [make_finitary(0, 0, [2, 1, 0]), make_affine(2, [2, -1]),
              make_affine(3, [1, 0, 2])]:
        assert hecke_word_count(p, inv_count(p)) == reduced_word_count(p)
        assert hecke_word_count(p, inv_count(p) - 1) == 0


def test_reduced_tuples_shift_guard():
    with pytest.raises(ShiftSumMismatch):
        reduced_tuples(sigma(0, 2), [1, -2])


def test_reduced_tuples_trivial_target():
    # identity target with zero shifts: only the tuple of identities
    tups = reduced_tuples(identity(2), [0, 0])
    assert len(tups) == 1
    (t,) = tups
    assert all(f.is_identity() for f in t.factors)


def test_reduced_tuples_reconstruct_target():
    targets = [
        (compose(iota(1, 2), sigma(0, 2)), (1, 0)),
        (compose(iota(1, 2), sigma(0, 2)), (0, 1)),
        (make_affine(2, [3, -2]), (0, 0, 0)),
        (compose(iota(2, 3), sigma(1, 3)), (1, 1)),
    ]
    for target, shifts in targets:
        for tup in reduced_tuples(target, shifts):
            assert tup.shifts == shifts
            prod = tup.factors[0]
            for f in tup.factors[1:]:
                prod = compose(prod, f)
            assert prod == target
            assert is_reduced_tuple(tup.factors)
            assert [f.chi for f in tup.factors] == list(shifts)


def test_reduced_tuples_inv_cap():
    target = make_affine(2, [3, -2])  # inv 3
    all_tups = reduced_tuples(target, (0, 0))
    capped = reduced_tuples(target, (0, 0), max_inv_per_factor=1)
    assert capped <= all_tups
    assert all(
        max(inv_count(f) for f in t.factors) <= 1 for t in capped
    )
    assert len(capped) == 0  # 3 inversions cannot split into two factors of <= 1
