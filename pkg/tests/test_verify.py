import json

import numpy as np
import pytest

from vilenkin import verify
from vilenkin.group import make_group
from vilenkin.hardy import counterexample
from vilenkin.spectral import partial_sum
from vilenkin.weights import ones


@pytest.fixture(scope="module")
def walsh10():
    return make_group([2], 10)


@pytest.fixture(scope="module")
def identity_records(walsh10):
    return verify.run_identity_suite(walsh10, n_max=32)


def test_identity_suite_passes(identity_records):
    judged = [r for r in identity_records if r.passed is not None]
    assert judged and all(r.passed for r in judged)


def test_identity_residuals_tiny(identity_records):
    for r in identity_records:
        if r.kind == "identity" and r.claim in ("dn21", "dn22", "3aa", "9dn", "2dna"):
            assert r.value < 1e-12


def test_shifted_log_kernel_identity_has_residual(identity_records):
    shifted = [r for r in identity_records
               if r.claim == "reiszkernel" and r.params.get("variant") == "shifted"]
    assert shifted and shifted[0].kind == "report"
    assert shifted[0].value > 1e-3   # the index shift is a real discrepancy, not rounding
    corrected = [r for r in identity_records
                 if r.claim == "reiszkernel" and r.params.get("variant") == "corrected"]
    assert corrected[0].passed


def test_identity_suite_other_groups():
    for pat in ([3], [2, 3, 4]):
        g = make_group(pat, 7)
        recs = verify.run_identity_suite(g, n_max=24)
        judged = [r for r in recs if r.passed is not None]
        assert all(r.passed for r in judged)


def test_inequality_suite(walsh10):
    recs = verify.run_inequality_suite(walsh10, n_max=64, samples=5)
    judged = [r for r in recs if r.passed is not None]
    assert judged and all(r.passed for r in judged)
    yano = [r for r in recs if r.claim == "yano"]
    assert yano and yano[0].value <= 2.0
    reports = {r.claim for r in recs if r.kind == "report"}
    assert "Dn" in reports and "knbounded" in reports


def test_kernel_lemma_suite(walsh10):
    recs = verify.run_kernel_lemma_suite(walsh10, n_max=32)
    judged = [r for r in recs if r.passed is not None]
    assert judged and all(r.passed for r in judged)
    star1 = [r for r in recs if r.claim == "lemma222" and r.params.get("part") == "star1"]
    assert star1 and star1[0].value <= 1e-12
    ratios = [r for r in recs if r.kind == "report"]
    assert all(np.isfinite(r.value) for r in ratios)


def test_strong_suite_trends(walsh10):
    recs = verify.run_strong_suite(walsh10, rank=5, n_max=32)
    trends = [r for r in recs if r.kind == "trend"]
    assert trends and all(r.passed for r in trends)


def test_divergence_suite_bounds():
    g = make_group([5], 8)
    recs = verify.run_divergence_suite(g)
    bound_recs = [r for r in recs if r.claim == "theorem1T" and r.kind == "bound"]
    assert len(bound_recs) == 3
    assert all(r.passed for r in bound_recs)
    trend = [r for r in recs if r.kind == "trend" and r.claim == "theorem1T"]
    assert trend and trend[0].passed


def test_divergence_probe_trivial_martingale(walsh10):
    from vilenkin.hardy import StepMartingale, project_to_level
    from vilenkin.spectral import constant

    c = constant(walsh10, 3, 1.0)
    mart = StepMartingale(group=walsh10, levels=(3,), entries=(c,))
    rows = verify.divergence_probe(mart, "tmean", 0.5, [4, 6], q=ones(8))
    # constant function: T_n c has no mass beyond the constant term
    assert all(r["weak_lp"] <= 1.0 + 1e-12 for r in rows)


def test_records_deterministic(walsh10):
    a = verify.run_identity_suite(walsh10, n_max=16)
    b = verify.run_identity_suite(walsh10, n_max=16)
    assert [r.to_dict() for r in a] == [r.to_dict() for r in b]


def test_records_sorted(identity_records):
    keys = [(r.claim, json.dumps(r.params, sort_keys=True)) for r in identity_records]
    assert keys == sorted(keys)


def test_strong_sum_constant_function_is_flat(walsh10):
    from vilenkin.spectral import constant

    c = constant(walsh10, 4, 2.0)
    rows = verify.strong_sum(c, "partial_sum", 1.0, lambda k: 1.0, 8,
                             checkpoints=[4, 8])
    # S_k c = c for k >= 1, so the cumulative sum grows exactly linearly
    assert rows[0]["cumulative"] == pytest.approx(4 * 2.0)
    assert rows[1]["cumulative"] == pytest.approx(8 * 2.0)


def test_claim_registry_closure():
    # every claim is emitted by some suite; no suite emits unregistered claims
    emitted = set()
    for pat, lv in (([2], 10), ([3], 7), ([2, 3, 4], 7)):
        g = make_group(pat, lv)
        emitted |= verify.emitted_claims(verify.run_all(g, n_max=32, samples=3))
    emitted |= verify.emitted_claims(verify.run_divergence_suite(make_group([5], 8)))
    assert emitted == verify.all_claim_ids()


def test_block_function_partial_sum_shape(walsh10):
    # f with unit coefficients on [M_2, M_3) has S_i f = D_i - D_{M_2} inside
    # the block, the shape driving the log-mean sharpness computations
    from vilenkin.kernels import dirichlet
    from vilenkin.means import norlund_log_mean
    from vilenkin.spectral import GridFunction, Spectrum, transform_inverse

    g = walsh10
    N = 4
    coeffs = np.zeros(g.order(N), dtype=complex)
    coeffs[g.M[2]:g.M[3]] = 1.0
    f = transform_inverse(Spectrum(g, N, coeffs))
    for i in range(g.M[2] + 1, g.M[3] + 1):
        lhs = partial_sum(f, i)
        rhs = dirichlet(g, i, N=N).values - dirichlet(g, g.M[2], N=N).values
        assert np.abs(lhs.values - rhs).max() < 1e-12
    # log-mean at an in-block index agrees with its direct weighted sum
    n = g.M[2] + 2
    ln = sum(1.0 / k for k in range(1, n))
    direct = sum(partial_sum(f, k).values / (n - k) for k in range(1, n)) / ln
    assert np.abs(norlund_log_mean(f, n).values - direct).max() < 1e-12


def test_strong_partial_sum_sharpness_rank8(walsh10):
    # normalized partial-sum averages grow across the block checkpoints
    mart = counterexample(walsh10, "strong-partial-sums", [1, 2, 3], rank=8)
    f = mart.final
    s = verify.transform_forward(f)
    import math

    from vilenkin.hardy import _default_phi

    vals = []
    for a in (1, 2, 3):
        n = 2 * walsh10.M[a]
        acc = math.fsum(verify.lp_norm(partial_sum(f, k, s), 1.0) for k in range(1, n + 1))
        vals.append(acc / (n * _default_phi(n)))
    assert vals[0] < vals[1] < vals[2]
