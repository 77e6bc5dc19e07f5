import numpy as np
import pytest

from vilenkin import weights as wts
from vilenkin.errors import DegenerateWeightsError, RangeError, ShapeMismatchError
from vilenkin.group import digits_of, make_group
from vilenkin.kernels import (
    KernelId,
    dirichlet,
    dirichlet_block,
    fejer,
    fejer_l1_batch,
    kernel,
    lebesgue_batch,
    lebesgue_bounds,
    lebesgue_constant,
    min_resolution,
    norlund_kernel,
    norlund_log_kernel,
    q_pattern,
    riesz_log_kernel,
    tmean_kernel,
)
from vilenkin.spectral import convolve, random_grid_function


def test_dirichlet_block_values(walsh):
    D = dirichlet_block(walsh, 2, 3)
    # M_2 = 4 on I_2 (indices with two low zero digits), else 0
    assert D[0] == 4 and D[4] == 4
    assert np.abs(D[[1, 2, 3, 5, 6, 7]]).max() == 0


def test_dirichlet_one_is_constant(any_group):
    D = dirichlet(any_group, 1)
    assert np.abs(D.values - 1.0).max() < 1e-14


def test_dirichlet_walsh_d3():
    g = make_group([2], 4)
    D = dirichlet(g, 3)
    assert D.resolution == 2
    assert np.abs(D.values - np.array([3, 1, 1, -1])).max() < 1e-13


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9, 23, 24, 37])
def test_dirichlet_closed_vs_naive(any_group, n):
    g = any_group
    c = dirichlet(g, n, method="closed")
    nv = dirichlet(g, n, N=c.resolution, method="naive")
    assert np.abs(c.values - nv.values).max() < 1e-12


def test_dirichlet_resolution_guard(walsh):
    with pytest.raises(ShapeMismatchError):
        dirichlet(walsh, 9, N=2)


def test_fejer_matches_kn8_spec_example():
    g = make_group([2], 3)
    K = fejer(g, 2, N=2)
    assert np.abs(K.values - np.array([1.5, 0.5, 1.5, 0.5])).max() < 1e-14


def test_fejer_one(any_group):
    K = fejer(any_group, 1)
    assert np.abs(K.values - 1.0).max() < 1e-14


@pytest.mark.parametrize("n", [1, 2, 3, 6, 11, 24, 40])
def test_fejer_closed_vs_naive(any_group, n):
    g = any_group
    c = fejer(g, n, method="closed")
    nv = fejer(g, n, N=c.resolution, method="naive")
    assert np.abs(c.values - nv.values).max() < 1e-12


def test_fejer_block_m32():
    # triadic-first group: K_{M_1} matches the closed shell form
    g = make_group([3, 2], 4)
    K = fejer(g, g.M[1], method="closed")
    nv = fejer(g, g.M[1], N=K.resolution, method="naive")
    assert np.abs(K.values - nv.values).max() < 1e-13


def test_norlund_ones_is_fejer(walsh):
    q = wts.ones(32)
    A = norlund_kernel(walsh, q, 10)
    K = fejer(walsh, 10, N=A.resolution)
    assert np.abs(A.values - K.values).max() < 1e-13


def test_norlund_one_term(walsh):
    q = wts.power_weights(0.5, 8)
    A = norlund_kernel(walsh, q, 1)
    assert np.abs(A.values - 1.0).max() < 1e-14


def test_tmean_kernel_direct_sum(walsh):
    q = wts.power_weights(0.5, 8)
    F = tmean_kernel(walsh, q, 4)
    direct = sum(q.q(k) * dirichlet(walsh, k, N=F.resolution).values for k in range(1, 4))
    assert np.abs(F.values - direct / q.Q(4)).max() < 1e-13


def test_kernels_reproduce_means_by_convolution(walsh):
    from vilenkin.means import norlund_mean, t_mean

    f = random_grid_function(walsh, 5, seed=3)
    q = wts.power_weights(0.5, 64)
    for n in (1, 5, 9):
        A = norlund_kernel(walsh, q, n, N=5)
        assert np.abs(norlund_mean(f, n, q).values - convolve(f, A).values).max() < 1e-10
        F = tmean_kernel(walsh, q, n, N=5)
        assert np.abs(t_mean(f, n, q).values - convolve(f, F).values).max() < 1e-10


def test_riesz_log_kernel_small(walsh):
    Y2 = riesz_log_kernel(walsh, 2)
    assert np.abs(Y2.values - 1.0).max() < 1e-14   # D_1 / l_2
    Y4 = riesz_log_kernel(walsh, 4)
    direct = (dirichlet(walsh, 1, N=Y4.resolution).values
              + dirichlet(walsh, 2, N=Y4.resolution).values / 2
              + dirichlet(walsh, 3, N=Y4.resolution).values / 3)
    assert np.abs(Y4.values - direct / wts.harmonic_number(4)).max() < 1e-13


def test_log_kernels_need_two_terms(walsh):
    with pytest.raises(RangeError):
        riesz_log_kernel(walsh, 1)
    with pytest.raises(RangeError):
        norlund_log_kernel(walsh, 1)


def test_harmonic_number():
    assert wts.harmonic_number(4) == pytest.approx(11 / 6)


def test_kernel_id_validation():
    with pytest.raises(Exception):
        KernelId("norlund", 4)   # missing weights
    kid = KernelId("fejer", 4)
    g = make_group([2], 6)
    assert np.abs(kernel(g, kid).values - fejer(g, 4).values).max() == 0


def test_lebesgue_values(walsh):
    assert lebesgue_constant(walsh, 1) == pytest.approx(1.0, abs=1e-14)
    assert lebesgue_constant(walsh, 3) == pytest.approx(1.5, abs=1e-14)


def test_lebesgue_block_norms(any_group):
    g = any_group
    for lvl in range(1, 5):
        assert lebesgue_constant(g, g.M[lvl]) == pytest.approx(1.0, abs=1e-12)


def test_lebesgue_batch_matches_pointwise(mixed):
    L = lebesgue_batch(mixed, 24)
    for n in (1, 5, 12, 24):
        assert L[n] == pytest.approx(lebesgue_constant(mixed, n), abs=1e-12)


def test_lebesgue_bounds_walsh(walsh):
    b = lebesgue_bounds(digits_of(3, walsh))
    assert (b.v, b.vstar) == (2, 0)
    assert b.lower == pytest.approx(0.25) and b.upper == pytest.approx(2.0)
    assert b.lower <= 1.5 <= b.upper
    b1 = lebesgue_bounds(digits_of(1, walsh))
    assert b1.lower == pytest.approx(0.125) and b1.upper == pytest.approx(1.0)


def test_lebesgue_bounds_bracket_corrected(any_group):
    g = any_group
    L = lebesgue_batch(g, 64)
    for n in range(1, 65):
        b = lebesgue_bounds(digits_of(n, g), variant="corrected")
        assert b.lower - 1e-10 <= L[n] <= b.upper + 1e-10


def test_q_pattern_bracket(any_group):
    g = any_group
    lam = g.lam
    for k in (2, 3):
        if 2 * k >= g.levels:
            continue
        n = q_pattern(g, k)
        L = lebesgue_constant(g, n)
        assert k / (2 * lam) - 1e-10 <= L <= lam * k + 1e-10


def test_fejer_l1_batch_bounded(walsh):
    sup = fejer_l1_batch(walsh, 64)[1:].max()
    assert sup <= 2.0


def test_degenerate_weights_rejected(walsh):
    q = wts.from_values([0.0, 0.0, 1.0])
    with pytest.raises(DegenerateWeightsError):
        tmean_kernel(walsh, q, 2)


def test_min_resolution(walsh):
    assert min_resolution(walsh, 1) == 1
    assert min_resolution(walsh, 3) == 2
    assert min_resolution(walsh, 8) == 4
