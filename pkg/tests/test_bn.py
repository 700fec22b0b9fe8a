import itertools

import pytest

from transperm import (
    BadParameters,
    BadPeriod,
    ResidualPeriodic,
    SplittingType,
    essential_set,
    gamma_rd,
    gamma_splitting,
    inv_count,
    inv_pi_bound,
    is_bigrassmannian,
    make_affine,
    recompose,
    rho_pi_decompose,
    shift,
    slipface,
    splitting_d,
    splitting_type_of,
    splitting_u,
    splitting_x,
)
from transperm.curves import enumerate_affine


def test_gamma_rd_basic():
    g = gamma_rd(2, -1)
    assert shift(g) == -1
    assert inv_count(g) == 9  # (r+1)(r-chi)
    assert essential_set(g) == {(1, 0)}
    assert slipface(g, 1, 0) == 3


def test_gamma_rd_degenerate():
    # r = chi + 1 boundary and chi very negative
    assert inv_count(gamma_rd(1, 0)) == 2
    assert shift(gamma_rd(0, -4)) == -4


def test_gamma_rd_rejects_bad_parameters():
    with pytest.raises(BadParameters):
        gamma_rd(1, 1)  # needs r >= chi + 1
    with pytest.raises(BadParameters):
        gamma_rd(-1, -5)


def test_splitting_type_validation():
    with pytest.raises(BadParameters):
        SplittingType(2, (1, 0))  # not nondecreasing
    with pytest.raises(BadParameters):
        SplittingType(3, (0, 0))  # wrong length
    with pytest.raises(BadPeriod):
        SplittingType(1, (0,))


def test_splitting_numerics():
    e = SplittingType(2, (-2, 0))
    assert splitting_u(e) == 1
    assert splitting_x(e, 0) == 1
    assert splitting_x(e, 1) == 2
    assert splitting_x(e, -1) == 0
    assert splitting_d(e, 2) == 1


def test_decompose_recompose_roundtrip():
    for p in enumerate_affine(3, 3):
        assert recompose(rho_pi_decompose(p)) == p


def test_residual_is_permutation():
    for p in enumerate_affine(2, 4):
        rp = rho_pi_decompose(p)
        assert sorted(rp.rho) == list(range(p.period))


def test_bigrassmannian_examples():
    assert is_bigrassmannian(make_affine(2, [0, 3]))
    assert not is_bigrassmannian(make_affine(2, [3, 0]))
    assert is_bigrassmannian(make_affine(3, [0, 1, 2]))  # identity


def test_gamma_splitting_pinned_window():
    g = gamma_splitting(SplittingType(2, (-2, 0)))
    assert g == make_affine(2, [0, 3])


def test_gamma_splitting_properties_small_grid():
    for k in (2, 3):
        for entries in itertools.combinations_with_replacement(range(-2, 2), k):
            e = SplittingType(k, entries)
            g = gamma_splitting(e)
            assert is_bigrassmannian(g)
            assert inv_count(g) == splitting_u(e)
            assert splitting_type_of(g) == e
            assert inv_pi_bound(g) == inv_count(g)


def test_inv_pi_bound_is_lower_bound():
    for p in enumerate_affine(3, 3):
        assert inv_count(p) >= inv_pi_bound(p)


def test_unique_bigrassmannian_residual():
    # for a fixed periodic part, exactly one residual yields a bigrassmannian
    e = SplittingType(3, (-3, -1, 0))
    pi = rho_pi_decompose(gamma_splitting(e)).pi
    hits = [
        rho
        for rho in itertools.permutations(range(3))
        if is_bigrassmannian(recompose(ResidualPeriodic(3, rho, pi)))
    ]
    assert len(hits) == 1
