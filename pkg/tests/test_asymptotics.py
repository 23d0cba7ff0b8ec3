import math
from fractions import Fraction

import pytest

from uplab.gf import DomainError
from uplab.asymptotics import (ball_volume_upper, construction_demo, entropy,
                               eventual_trend, f_alpha, f_alpha_sweep, f_delta,
                               lambda_n_bound, plotkin_lambda_cap, weak_up_scan)

SWEEP_PRIMES = [11, 17, 23, 31, 41, 53, 61]


def test_entropy_values():
    assert entropy(0.5) == 1.0
    # 2 - (3/4) log2 3, evaluated independently
    assert abs(entropy(0.25) - (2 - 0.75 * math.log2(3))) < 1e-14
    assert abs(entropy(0.25) - 0.8112781244591328) < 1e-12
    with pytest.raises(DomainError):
        entropy(0.0)
    with pytest.raises(DomainError):
        entropy(1.0)


def test_entropy_symmetry_and_concavity():
    xs = [i / 200 for i in range(1, 200)]
    for x in xs:
        assert abs(entropy(x) - entropy(1 - x)) < 1e-12
    vals = [entropy(x) for x in xs]
    second = [vals[i - 1] - 2 * vals[i] + vals[i + 1] for i in range(1, len(vals) - 1)]
    assert all(s < 0 for s in second)


def test_plotkin_cap():
    assert plotkin_lambda_cap(2) == Fraction(1, 2)
    assert plotkin_lambda_cap(4) == Fraction(3, 4)
    for q in (2, 3, 4, 5, 8):
        cap = plotkin_lambda_cap(q)
        grid_min = min(f_delta(i * 1e-4, q) for i in range(1, 10000))
        assert abs(grid_min - float(cap)) < 1e-3


def test_ball_volume():
    exact, log2 = ball_volume_upper(7, 0.5, 2)
    assert exact == 63  # radius 2: 3 * C(7,2) * 1
    assert abs(log2 - math.log2(63)) < 1e-12
    exact3, _ = ball_volume_upper(7, 0.5, 3)
    assert exact3 == 63 * 4  # (q-1)^2 = 4
    for n in (10, 100, 1000):
        exact, log2 = ball_volume_upper(n, 0.6, 2)
        assert abs(log2 - math.log2(exact)) < 1e-9 * max(1, log2)


def test_lambda_n_bound():
    got = lambda_n_bound(7, 3, 0.5, 0.5)
    assert abs(got - (7 - math.sqrt(7)) / 3) < 1e-12
    # linear in H(R); tends to zero with the entropy factor
    assert abs(lambda_n_bound(7, 3, 0.5, 0.11) / entropy(0.11)
               - lambda_n_bound(7, 3, 0.5, 0.5)) < 1e-9
    assert lambda_n_bound(100, 5, 0.5, 1e-9) < 1e-6


def test_f_alpha_sign_dichotomy():
    low = [r.value for r in f_alpha_sweep(SWEEP_PRIMES, 0.4, 2, 0.5)]
    high = [r.value for r in f_alpha_sweep(SWEEP_PRIMES, 0.6, 2, 0.5)]
    assert eventual_trend(low) == "decrease"
    assert eventual_trend(high) == "increase"
    assert low[-1] < 0 < high[-1]
    # the entropy coefficient peaks at R = 1/2
    mid = f_alpha(31, 0.4, 2, 0.5).counting_term
    assert mid > f_alpha(31, 0.4, 2, 0.3).counting_term
    assert mid > f_alpha(31, 0.4, 2, 0.7).counting_term


def test_construction_7_4_3():
    for seed in (0, 1, 2):
        rep = construction_demo(2, 3, 0.5, seed=seed)
        assert (rep.n, rep.s, rep.s_prime) == (7, 2, 1)
        assert rep.n == rep.q - 1 + rep.s * 3
        assert rep.dim == 4 and rep.distance.exact and rep.distance.lower == 3


def test_construction_p5():
    rep = construction_demo(2, 5, 0.5, seed=1)
    assert rep.n == 31 and rep.s == 6
    assert rep.s_prime == 3 and rep.dim == 31 - 5 * 3
    assert rep.n == rep.q - 1 + rep.s * 5
    assert abs(rep.rate - rep.dim / rep.n) < 1e-12
    assert rep.binom_exact == math.comb(6, 3)
    assert rep.binom_stirling > 0


def test_construction_q3():
    rep = construction_demo(3, 3, 0.5, seed=0)
    assert rep.n == 26 and rep.n == 3 - 1 + rep.s * 3
    assert rep.dim == rep.n - 3 * rep.s_prime


def test_construction_deterministic_in_seed():
    a = construction_demo(2, 5, 0.4, seed=42)
    b = construction_demo(2, 5, 0.4, seed=42)
    assert a.chosen == b.chosen and a.gen == b.gen
    c = construction_demo(2, 5, 0.4, seed=43)
    assert a.chosen != c.chosen or a.gen == c.gen  # different seed may pick elsewhere


def test_construction_caps():
    with pytest.raises(DomainError):
        construction_demo(2, 11, 0.5)  # 2^11 - 1 over the cap
    with pytest.raises(DomainError):
        construction_demo(2, 4, 0.5)  # p must be prime


def test_weak_up_scan_example():
    rows = weak_up_scan(2, 0.2, 0.6, 35)
    by_p = {r.p: r for r in rows}
    r31 = by_p[31]
    assert r31.ord_qp == 5 and r31.mu_lower == 20 and r31.mu_exact
    assert r31.cond_order and r31.cond_mu
    r5 = by_p[5]
    assert r5.ord_qp == 4 and r5.mu_lower == 6
    # flags recomputed from the stored values agree
    for r in rows:
        assert r.cond_order == (r.ord_qp < 0.2 * r.p)
        if r.mu_exact:
            assert r.cond_mu == (r.mu_lower > 0.6 * r.p)
    assert 2 not in by_p


def test_weak_up_high_lambda_has_no_rows():
    rows = weak_up_scan(2, 0.3, 0.9, 35)
    assert not [r for r in rows if r.cond_order and r.cond_mu]


def test_weak_up_scan_validates():
    with pytest.raises(DomainError):
        weak_up_scan(2, 0.7, 0.6, 20)
