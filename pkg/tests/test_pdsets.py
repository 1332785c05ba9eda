"""
Tests for the PD-like set <T_alpha>, its witnesses and the baseline columns
"""

import itertools

import numpy as np
import pytest

from pdrm.codes import BudgetError
from pdrm.field import cached_field
from pdrm.infoset import select_full_order_factor, valid_factorizations
from pdrm.pdsets import (
    WitnessError,
    baselines,
    find_witness,
    junta_mu,
    lambda0,
    moves_off,
    pd_like_set,
    ranked_factorizations,
    s_value,
    verify_pd_like,
)

S_VALUES = {4: 5, 6: 13, 8: 44, 9: 62, 10: 185, 11: 266, 12: 629, 14: 1523, 15: 2386, 16: 4334}
FACTORS = {
    4: (5, 3),
    6: (9, 7),
    8: (17, 15),
    9: (73, 7),
    10: (11, 93),
    11: (23, 89),
    12: (13, 315),
    14: (43, 381),
    15: (151, 217),
    16: (257, 255),
}


@pytest.fixture(scope="module")
def pd4(gf16):
    return pd_like_set(gf16)


def test_lambda0():
    """Test the largest lambda with m < ceil(r1 / lambda)"""
    assert lambda0(4, 5) == 1
    assert lambda0(8, 17) == 2
    assert lambda0(8, 51) == 6
    assert lambda0(8, 85) == 10
    with pytest.raises(ValueError):
        lambda0(8, 5)


@pytest.mark.parametrize("m", sorted(S_VALUES))
def test_s_values(m):
    """Test s for the best full-order factorization of each tabulated m"""
    fact, s = ranked_factorizations(m)[0]
    assert (fact.r1, fact.r2) == FACTORS[m]
    assert s == S_VALUES[m]


def test_ranked_factorizations_m8():
    """Test every full-order choice at m = 8, best first"""
    ranked = [(f.r1, s) for f, s in ranked_factorizations(8)]
    assert ranked == [(17, 44), (51, 34), (85, 32)]


def test_s_value_needs_full_order():
    """Test that a non-full-order orientation is refused"""
    fact = valid_factorizations(8)[0]
    with pytest.raises(ValueError, match="Ord_r1"):
        s_value(fact, 8)


def test_junta_mu():
    """Test the shift placing a small residue set high in Z_r"""
    assert junta_mu(5, [0, 1]) == 3
    assert junta_mu(9, [0, 3, 6]) == 2
    assert junta_mu(7, [4]) == 2
    with pytest.raises(ValueError):
        junta_mu(5, [1, 1])


def _assert_junta_mu_everywhere(r: int, sizes=None) -> None:
    for h in sizes or range(1, r + 1):
        bound = -(-r // h) - 1
        for xs in itertools.combinations(range(r), h):
            mu = junta_mu(r, xs)
            shifted = [(x + mu) % r for x in xs]
            assert min(shifted) >= bound, (r, xs, mu)
            assert r - 1 in shifted, (r, xs, mu)


@pytest.mark.parametrize("r", range(1, 13))
def test_junta_mu_exhaustive(r):
    """Test the shift exists for every nonempty subset of Z_r"""
    _assert_junta_mu_everywhere(r)


@pytest.mark.slow
@pytest.mark.parametrize("r", range(13, 19))
def test_junta_mu_exhaustive_large_r(r):
    """Test every nonempty subset of Z_r up to r = 18"""
    _assert_junta_mu_everywhere(r)


@pytest.mark.parametrize("r", range(13, 31))
def test_junta_mu_extreme_sizes(r):
    """Test all subsets of size 1..3 and r - 1..r up to r = 30"""
    _assert_junta_mu_everywhere(r, sizes=(1, 2, 3, r - 1, r))


def test_find_witness(pd4):
    """Test both strategies on I' itself"""
    exponents = [0, 3, 6, 12]
    scan = find_witness(exponents, pd4)
    assert scan.exponent == 1
    assert moves_off(pd4, exponents, scan.exponent)
    constructive = find_witness(exponents, pd4, strategy="constructive")
    assert moves_off(pd4, exponents, constructive.exponent)
    assert constructive.mu is not None


def test_find_witness_beyond_s(pd4):
    """Test that twelve errors cannot be moved off four positions among fifteen"""
    with pytest.raises(WitnessError, match="no witness"):
        find_witness(range(12), pd4)
    with pytest.raises(ValueError):
        find_witness([1], pd4, strategy="guess")


def test_empty_set_needs_no_move(pd4):
    """Test the trivial witness"""
    assert find_witness([], pd4).exponent == 0


def test_verify_exhaustive_m4(pd4):
    """Test all 3003 five-subsets of G* at m = 4"""
    report = verify_pd_like(pd4, mode="exhaustive")
    assert report.checked == 3003
    assert report.failures == 0
    assert report.constructive_failures == 0
    assert report.holds
    assert report.as_dict()["schema"] == 1


def test_verify_beyond_s_fails(pd4):
    """Test the s override: every 12-subset fails"""
    report = verify_pd_like(pd4.with_s(12), mode="exhaustive")
    assert report.checked == 455
    assert report.failures == 455
    assert not report.holds
    assert len(report.example_failure) == 12


def test_verify_budget(gf64):
    """Test the enumeration guard"""
    pd = pd_like_set(gf64)
    with pytest.raises(BudgetError):
        verify_pd_like(pd, mode="exhaustive", budget=1000)


def test_verify_sampled_is_deterministic(gf64):
    """Test sampled mode against itself across worker counts"""
    pd = pd_like_set(gf64)
    serial = verify_pd_like(pd, mode="sampled", trials=2000, seed=3)
    threaded = verify_pd_like(pd, mode="sampled", trials=2000, seed=3, workers=4)
    assert serial.as_dict() == threaded.as_dict()
    assert serial.failures == 0
    assert serial.constructive_failures == 0


@pytest.mark.slow
def test_verify_sampled_m6_acceptance(gf64):
    """Test 10^5 random 13-subsets at m = 6"""
    report = verify_pd_like(pd_like_set(gf64), mode="sampled", trials=100_000, seed=42)
    assert report.checked == 100_000
    assert report.failures == 0
    assert report.constructive_failures == 0


def test_scan_and_constructive_agree_m6(gf64):
    """Test that both strategies clear I' on random s-subsets"""
    pd = pd_like_set(gf64, select_full_order_factor(6))
    rng = np.random.default_rng(11)
    for _ in range(200):
        exponents = rng.choice(gf64.n, size=pd.s, replace=False)
        for strategy in ("scan", "constructive"):
            assert moves_off(pd, exponents, find_witness(exponents, pd, strategy).exponent)


def test_scan_and_constructive_agree_m8():
    """Test both strategies on random 44-subsets at m = 8"""
    report = verify_pd_like(pd_like_set(cached_field(8)), mode="sampled", trials=300, seed=8)
    assert report.s == 44
    assert report.failures == 0
    assert report.constructive_failures == 0


@pytest.mark.slow
@pytest.mark.parametrize("m", [6, 8])
def test_scan_and_constructive_agree_acceptance(m):
    """Test 10^4 random s-subsets with both strategies"""
    report = verify_pd_like(
        pd_like_set(cached_field(m)), mode="sampled", trials=10_000, seed=m, workers=4
    )
    assert report.checked == 10_000
    assert report.failures == 0
    assert report.constructive_failures == 0


def test_baselines():
    """Test columns A and B2, including the m = 6 discrepancy"""
    assert baselines(6).col_a == 9
    assert baselines(6).col_b2 == 8
    assert baselines(16).col_a == 3855
    assert baselines(16).col_b2 == 3854
    assert baselines(10).col_b1 == 64
    assert baselines(4).gordon_schonheim_min_size == 4
    assert baselines(7).s_alg2 is None
