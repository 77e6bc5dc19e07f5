import numpy as np
import pytest

from vilenkin.errors import DomainError, RangeError, ShapeMismatchError
from vilenkin.spectral import (
    GridFunction,
    character_function,
    constant,
    convolve,
    convolve_naive,
    delta,
    fourier_coeff,
    lp_norm,
    naive_forward,
    partial_sum,
    random_grid_function,
    shift,
    transform_forward,
    transform_inverse,
    weak_lp,
    weighted_sum_combination,
)


def test_coeff_of_character(walsh):
    f = character_function(walsh, 5, 3)
    for k in range(8):
        expect = 1.0 if k == 5 else 0.0
        assert fourier_coeff(f, k) == pytest.approx(expect, abs=1e-12)


def test_coeff_of_constant(mixed):
    f = constant(mixed, 3, 2.0 - 1.0j)
    assert fourier_coeff(f, 0) == pytest.approx(2.0 - 1.0j, abs=1e-14)


def test_coeff_above_rank_is_exact_zero(mixed):
    f = random_grid_function(mixed, 2, seed=5)
    MN = mixed.order(2)
    assert fourier_coeff(f, MN + 1) == 0.0
    # oracle: embed at the finer rank and evaluate the direct sum
    finer = GridFunction(mixed, 3, np.tile(f.values, mixed.m[2]))
    assert abs(fourier_coeff(finer, MN + 1)) < 1e-12


def test_forward_matches_naive(any_group):
    g = any_group
    N = 3 if g.order(3) <= 256 else 2
    f = random_grid_function(g, N, seed=11)
    fast = transform_forward(f).coeffs
    slow = naive_forward(f).coeffs
    assert np.abs(fast - slow).max() < 1e-10


def test_round_trip_and_plancherel(any_group):
    g = any_group
    N = min(5, g.levels)
    for seed in range(5):
        f = random_grid_function(g, N, seed=seed)
        s = transform_forward(f)
        back = transform_inverse(s)
        assert np.abs(back.values - f.values).max() < 1e-12
        power = (np.abs(f.values) ** 2).mean()
        assert abs(power - (np.abs(s.coeffs) ** 2).sum()) < 1e-10


def test_delta_transform(walsh):
    MN = walsh.order(3)
    f = delta(walsh, 3, scale=MN)
    assert np.abs(transform_forward(f).coeffs - 1.0).max() < 1e-12


def test_partial_sum_endpoints(walsh):
    f = random_grid_function(walsh, 4, seed=9)
    assert np.abs(partial_sum(f, 0).values).max() == 0.0
    assert np.abs(partial_sum(f, walsh.order(4)).values - f.values).max() < 1e-12
    with pytest.raises(RangeError):
        partial_sum(f, walsh.order(4) + 1)


def test_partial_sum_selects_characters(walsh):
    f = character_function(walsh, 5, 3)
    assert np.abs(partial_sum(f, 6).values - f.values).max() < 1e-12
    assert np.abs(partial_sum(f, 5).values).max() < 1e-12


def test_partial_sum_is_dirichlet_convolution(mixed):
    from vilenkin.kernels import dirichlet

    f = random_grid_function(mixed, 3, seed=21)
    for n in (1, 3, 7, 12):
        lhs = partial_sum(f, n)
        rhs = convolve(f, dirichlet(mixed, n, N=3))
        assert np.abs(lhs.values - rhs.values).max() < 1e-10


def test_convolution_matches_naive(mixed):
    f = random_grid_function(mixed, 2, seed=1)
    h = random_grid_function(mixed, 2, seed=2)
    assert np.abs(convolve(f, h).values - convolve_naive(f, h).values).max() < 1e-12


def test_convolution_identity_kernel(walsh):
    MN = walsh.order(3)
    f = random_grid_function(walsh, 3, seed=4)
    ident = delta(walsh, 3, scale=MN)
    assert np.abs(convolve(f, ident).values - f.values).max() < 1e-12


def test_characters_convolve_orthogonally(walsh):
    a = character_function(walsh, 3, 3)
    b = character_function(walsh, 5, 3)
    assert np.abs(convolve(a, b).values).max() < 1e-12
    assert np.abs(convolve(a, a).values - a.values).max() < 1e-12


def test_convolution_shape_error(walsh, mixed):
    with pytest.raises(ShapeMismatchError):
        convolve(random_grid_function(walsh, 2, seed=0), random_grid_function(walsh, 3, seed=0))


def test_lp_norm_basics(walsh):
    one = constant(walsh, 3)
    for p in (0.5, 1, 2, np.inf):
        assert lp_norm(one, p) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        lp_norm(one, 0)


def test_lp_norm_indicator(walsh):
    vals = np.zeros(8)
    vals[[0, 2, 4, 6]] = 3.0   # indicator of I_1 scaled by 3
    f = GridFunction(walsh, 3, vals)
    for p in (1, 2, 4):
        assert lp_norm(f, p) == pytest.approx(3.0 * 0.5 ** (1 / p))
        assert weak_lp(f, p) == pytest.approx(3.0 * 0.5 ** (1 / p))


def test_weak_lp_below_lp(any_group):
    g = any_group
    for seed in range(10):
        f = random_grid_function(g, 3, seed=seed)
        for p in (0.5, 1, 2):
            assert weak_lp(f, p) <= lp_norm(f, p) + 1e-12


def test_weighted_sum_combination_matches_direct(walsh):
    f = random_grid_function(walsh, 4, seed=33)
    s = transform_forward(f)
    w = np.zeros(9)
    w[1:] = np.linspace(0.1, 0.9, 8)
    direct = sum(w[k] * partial_sum(f, k, s).values for k in range(1, 9))
    combo = weighted_sum_combination(f, w, s)
    assert np.abs(combo.values - direct).max() < 1e-12


def test_shift_is_group_translation(mixed):
    f = random_grid_function(mixed, 2, seed=8)
    from vilenkin.group import group_sub, point_from_index

    sh = shift(f, 4)
    for i in range(mixed.order(2)):
        x = point_from_index(i, mixed, 2)
        h = point_from_index(4, mixed, 2)
        assert sh.values[i] == f.values[group_sub(x, h).index()]


def test_values_are_immutable(walsh):
    f = random_grid_function(walsh, 3, seed=0)
    with pytest.raises(ValueError):
        f.values[0] = 1.0
