from math import gcd

import pytest

from blocktrans.arith import (LieParams, divisors, factorize, is_full_period,
                              lcg_full_period, ldc_example_params,
                              multiplicative_order, phi_k, rank1_classify)
from blocktrans.errors import ValidationError


def test_factorize_and_divisors():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_phi_k_examples():
    assert phi_k(1, 1) == 1
    assert phi_k(2, 12) == 8
    assert phi_k(1, 7) == 6
    assert phi_k(-2, 3) == 2
    with pytest.raises(ValidationError):
        phi_k(1, 0)


def test_phi_1_is_euler_totient():
    def euler(t):
        return sum(1 for i in range(1, t + 1) if gcd(i, t) == 1)
    for t in range(1, 2000):
        assert phi_k(1, t) == euler(t)


def test_full_period_examples():
    assert is_full_period(4, 9) is True
    assert is_full_period(3, 8) is False
    assert is_full_period(123, 1) is True


def test_full_period_matches_iteration_small():
    for a in range(1, 80):
        for n in range(1, 80):
            assert is_full_period(a, n) == lcg_full_period(a, n), (a, n)


RANK1_CONFIGS = {
    # catalog name -> (params, d_G, h for n > 1)
    "PGammaL2(8)": (LieParams("PSL2", 2, 3, t_G=1, e_G=3), 1, {}),
    "M10": (LieParams("PSL2", 3, 2, t_G=2, e_G=2, r_G=1), 2, {2: 2}),
    "PSigmaL2(9)": (LieParams("PSL2", 3, 2, t_G=2, e_G=2), 1, {}),
    "PGammaL2(9)": (LieParams("PSL2", 3, 2, t_G=1, e_G=2), 1, {}),
    "PGammaL2(27)": (LieParams("PSL2", 3, 3, t_G=1, e_G=3), 1, {}),
    "PSL2(64):3": (LieParams("PSL2", 2, 6, t_G=1, e_G=3), 3, {3: 2}),
}


def test_rank1_configurations():
    for name, (lp, d_g, h) in RANK1_CONFIGS.items():
        rep = rank1_classify(lp)
        assert rep.d_G == d_g, name
        for n, hn in h.items():
            assert rep.h[n] == hn, name
        assert rep.sharp is False


def test_rank1_psu3_example():
    lp = LieParams("PSU3", 2, 21, t_G=1, e_G=14)
    rep = rank1_classify(lp)
    assert rep.d_G == 7
    assert rep.h[7] == 6


def test_rank1_h_even_and_divisibility():
    configs = [LieParams("PSL2", 3, 2, t_G=2, e_G=2, r_G=1),
               LieParams("PSL2", 2, 6, t_G=1, e_G=3),
               LieParams("PSU3", 2, 21, t_G=1, e_G=14),
               LieParams("Sz", 2, 21, t_G=1, e_G=7),
               LieParams("Ree", 3, 15, t_G=1, e_G=5)]
    for lp in configs:
        rep = rank1_classify(lp)
        assert lp.e_G % rep.d_G == 0
        assert (lp.p ** lp.field_exponent - 1) % rep.d_G == 0
        for n, hn in rep.h.items():
            if n > 1:
                assert hn % 2 == 0, (lp, n)


def test_lieparams_validation():
    with pytest.raises(ValidationError):
        LieParams("Sz", 2, 4)          # e must be odd
    with pytest.raises(ValidationError):
        LieParams("PSL2", 2, 1)        # q >= 4
    with pytest.raises(ValidationError):
        LieParams("PSL2", 5, 1, t_G=3)
    with pytest.raises(ValidationError):
        LieParams("PSL2", 5, 1, e_G=2)  # e_G must divide e


def test_ldc_example_params():
    assert ldc_example_params(2, 7) == (3, 2 ** 21)
    m, q = ldc_example_params(2, 161)
    assert m == 33 and q == 2 ** (33 * 161)
    m, q = ldc_example_params(3, 143)
    assert m == 15
    # even order -> no parameters
    assert ldc_example_params(2, 15) is None   # ord_15(2) = 4
    with pytest.raises(ValidationError):
        ldc_example_params(3, 9)
    with pytest.raises(ValidationError):
        ldc_example_params(2, 8)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 1) == 1
    with pytest.raises(ValidationError):
        multiplicative_order(2, 4)
