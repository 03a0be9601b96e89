"""Leading-order combinatorics: kappa, term lists, dominance, switchback."""

import random
import warnings

import mpmath as mp
import pytest

import oracles
from conftest import assert_close, rel_diff
from multifold import (
    ComplexityBudget,
    DomainError,
    OscillatorParams,
    RegimeWarning,
    TimeFold,
    dominant_term,
    fold_legs,
    hp,
    kappa,
    loschmidt_terms,
    precursor_terms,
    rho_L_leading,
    rho_P_leading,
    scrambling_time,
    sign_patterns,
    switchback_complexity,
    total_folded_time,
)

P = +1
M = -1


def params_ratio(ratio="1e-3", **kw):
    return OscillatorParams.from_ratio(ratio, **kw)


def by_subset_pattern(terms):
    return {(t.subset, t.pattern): t for t in terms}


# --- kappa -----------------------------------------------------------------

def test_kappa_displayed_values():
    assert kappa((P,)) == 0
    assert kappa((M,)) == 1
    assert kappa((P, M)) == 1
    assert kappa((M, M)) == 1
    assert kappa((M, P)) == 2
    assert kappa((M, M, P)) == 2


def test_kappa_edge_cases():
    assert kappa(()) == 0
    assert kappa((M, P, M)) == 3
    with pytest.raises(DomainError):
        kappa((0, 1))


def test_sign_patterns_order():
    assert list(sign_patterns(1)) == [()]
    assert list(sign_patterns(2)) == [(P,), (M,)]
    assert list(sign_patterns(3)) == [(P, P), (P, M), (M, P), (M, M)]


# --- term enumeration --------------------------------------------------------

def test_loschmidt_terms_single_insertion():
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=(3,)), params)
    assert len(terms) == 2  # constant + alpha e^{|4 w t1|}
    const, single = terms
    assert const.subset == () and const.sigma == 0 and const.value == 1
    assert single.subset == (1,) and single.sigma == 1
    assert_close(single.value, params.alpha * hp.exp(12), rel=1e-35)


def test_loschmidt_terms_two_insertions_structure():
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=("1.5", "4")), params)
    assert len(terms) == 5  # (3^2 + 1)/2
    table = by_subset_pattern(terms)
    assert table[((1,), ())].sigma == 1
    assert table[((2,), ())].sigma == 1
    assert table[((1, 2), (M,))].sigma == 2  # t1 - t2
    assert table[((1, 2), (P,))].sigma == 3  # t1 + t2
    assert_close(table[((1, 2), (M,))].exponent_arg, "-2.5", rel=1e-38)
    assert_close(table[((1, 2), (P,))].exponent_arg, "5.5", rel=1e-38)


def test_loschmidt_terms_quadruple_coefficient_audit():
    """Structural audit of the displayed quadruple-insertion terms: exact
    powers on exact time combinations, zero tolerance."""
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=(1, 2, 3, 4)), params)
    assert len(terms) == 41  # (3^4 + 1)/2
    table = by_subset_pattern(terms)
    displayed = [
        ((1,), (), 1),
        ((1, 2), (M,), 2),
        ((1, 2), (P,), 3),
        ((1, 2, 3), (M, P), 3),    # t1 - t2 + t3
        ((1, 2, 3), (P, M), 4),    # t1 + t2 - t3
        ((1, 2, 3), (M, M), 4),    # t1 - t2 - t3
        ((1, 2, 3, 4), (M, P, M), 4),  # t1 - t2 + t3 - t4
        ((1, 2, 3), (P, P), 5),    # t1 + t2 + t3
        ((1, 2, 3, 4), (P, P, P), 7),  # t1 + t2 + t3 + t4
    ]
    for subset, pattern, sigma in displayed:
        assert table[(subset, pattern)].sigma == sigma


def test_loschmidt_sigma_range_property():
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=(1, 2, 3, 4, 5)), params)
    assert len(terms) == (3**5 + 1) // 2
    for t in terms:
        n = len(t.subset)
        if n == 0:
            assert t.sigma == 0
        else:
            assert n <= t.sigma <= 2 * n - 1


def test_rho_L_leading_values_against_oracle():
    params = params_ratio()
    for times in [(3,), (2, 5), (1, 2, 3, 4)]:
        got = rho_L_leading(TimeFold(times=times), params).value
        with mp.workdps(60):
            want = oracles.rho_L_leading(list(times), dw="1e-3")
        assert rel_diff(got, want) < 1e-35


def test_precursor_terms_structure():
    params = params_ratio()
    fold = TimeFold(times=(3, 5), t_s=-2, t_f=4)
    terms = precursor_terms(fold, params)
    assert len(terms) == 4  # 2^2
    one_way = terms[0]
    assert one_way.subset == () and one_way.sigma == 0
    assert_close(one_way.exponent_arg, -3, rel=1e-38)  # (t_s - t_f)/2
    table = by_subset_pattern(terms)
    # n=1: t_s/2 - t_j + t_f/2
    assert_close(table[((1,), ())].exponent_arg, -2, rel=1e-38)    # -1 - 3 + 2
    assert_close(table[((2,), ())].exponent_arg, -4, rel=1e-38)    # -1 - 5 + 2
    # n=2: t_s/2 - t1 + t2 - t_f/2
    assert_close(table[((1, 2), (M,))].exponent_arg, -1, rel=1e-38)
    for t in terms[1:]:
        assert t.sigma == len(t.subset)


def test_precursor_quadruple_spot_checks():
    params = params_ratio()
    fold = TimeFold(times=(1, 2, 3, 4), t_s=-2, t_f=4)
    table = by_subset_pattern(precursor_terms(fold, params))
    assert len(table) == 16  # 2^4
    t3 = table[((1, 2, 3), (M, P))]
    assert t3.sigma == 3
    assert_close(t3.exponent_arg, -1 - 1 + 2 - 3 + 2, rel=1e-38)
    t4 = table[((1, 2, 3, 4), (M, P, M))]
    assert t4.sigma == 4
    assert_close(t4.exponent_arg, -1 - 1 + 2 - 3 + 4 - 2, rel=1e-38)


def test_rho_P_leading_against_oracle():
    params = params_ratio()
    fold = TimeFold(times=(3, 5, 1), t_s=-2, t_f=4)
    got = rho_P_leading(fold, params).value
    with mp.workdps(60):
        want = oracles.rho_P_leading([3, 5, 1], ts=-2, tf=4, dw="1e-3")
    assert rel_diff(got, want) < 1e-35


def test_precursor_is_max_kappa_slice_of_loschmidt():
    """With no outer offsets, each precursor term equals the echo term of the
    same subset with the fully-alternating sign arrangement (sigma = n)."""
    params = params_ratio()
    fold = TimeFold(times=("1.5", "2.5", "4"))
    echo = by_subset_pattern(loschmidt_terms(fold, params))
    for term in precursor_terms(fold, params)[1:]:
        n = len(term.subset)
        alternating = tuple(M if i % 2 == 0 else P for i in range(n - 1))
        partner = echo[(term.subset, alternating)]
        assert partner.sigma == n == term.sigma
        assert rel_diff(partner.value, term.value) < 1e-35


def test_term_budget_guards():
    params = params_ratio()
    with pytest.raises(ComplexityBudget):
        loschmidt_terms(TimeFold(times=tuple(range(1, 17))), params)
    with pytest.raises(ComplexityBudget):
        precursor_terms(TimeFold(times=tuple(range(1, 42))), params)


def test_zero_perturbation_has_no_expansion():
    with pytest.raises(DomainError):
        loschmidt_terms(TimeFold(times=(1,)), OscillatorParams())


def test_perturbative_regime_flagged():
    rough = OscillatorParams.from_ratio("0.2")
    with pytest.warns(RegimeWarning):
        loschmidt_terms(TimeFold(times=(1,)), rough)
    with pytest.warns(RegimeWarning):
        scrambling_time(rough)


# --- scrambling time, folded time, switchback -------------------------------

def test_scrambling_time_values():
    t_star = scrambling_time(params_ratio())
    assert float(t_star) == pytest.approx(3.8004512297710407, rel=1e-12)
    # alpha = e^-4  <=>  delta = 2 e^-2 omega (ratio 0.27: flagged but valid)
    params = OscillatorParams(delta_omega=2 * hp.exp(-2))
    with pytest.warns(RegimeWarning):
        assert_close(scrambling_time(params), 1, rel=1e-35)
    # doubling omega at fixed alpha halves t_star
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        p1 = OscillatorParams(omega=1, delta_omega="0.2")
        p2 = OscillatorParams(omega=2, delta_omega="0.4")
        assert_close(scrambling_time(p1), 2 * scrambling_time(p2), rel=1e-35)


def test_scrambling_time_domain_error():
    with pytest.raises(DomainError):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            scrambling_time(OscillatorParams(delta_omega=2))  # alpha = 1
    with pytest.raises(DomainError):
        scrambling_time(OscillatorParams())  # alpha = 0


def test_total_folded_time_examples():
    assert_close(total_folded_time(TimeFold(t_s=0, t_f=5)), 5, rel=0)
    fold = TimeFold(times=(20, 0, 20, 0), t_s=-20, t_f=-20)
    assert_close(total_folded_time(fold), 120, rel=1e-38)
    zig = TimeFold(times=(3, -3, 3), t_s=0, t_f=0)
    assert_close(total_folded_time(zig), 18, rel=1e-38)
    assert len(fold_legs(zig)) == 4


def test_dominant_term_comparison_list():
    """Double insertion at t1=10, t2=1: the singleton t1 wins the published
    comparison |t1|-t*, |t2|-t*, |t1-t2|-2t*, |t1+t2|-3t*."""
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=(10, 1)), params)
    result = dominant_term(terms, params)
    assert result.term.subset == (1,)
    assert not result.is_tie


def test_dominant_term_all_zero_times():
    params = params_ratio()
    echo = dominant_term(loschmidt_terms(TimeFold(times=(0, 0)), params), params)
    assert echo.term.subset == ()  # the constant dominates
    prec = dominant_term(
        precursor_terms(TimeFold(times=(0, 0), t_s=-4, t_f=4), params), params
    )
    assert prec.term.subset == ()  # the one-way term dominates


def test_dominant_term_tie_flagged():
    params = params_ratio()
    terms = loschmidt_terms(TimeFold(times=(5, 5)), params)
    result = dominant_term(terms, params)
    assert result.is_tie
    assert result.term.subset == (1,)  # smallest sigma, lexicographic subset
    assert len(result.tied) >= 2


def test_dominant_term_matches_bruteforce_random_folds():
    params = params_ratio()
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        fold = TimeFold(
            times=tuple(rng.uniform(-18, 18) for _ in range(n)),
            t_s=rng.uniform(-10, 10),
            t_f=rng.uniform(-10, 10),
        )
        terms = precursor_terms(fold, params)
        best = max(terms, key=lambda t: t.log_value)
        got = dominant_term(terms, params)
        assert float(got.term.log_value) == pytest.approx(
            float(best.log_value), rel=1e-25
        )


def test_dominant_zigzag_is_full_alternating():
    """Every leg far beyond t*: the full alternating insertion pattern wins
    and its exponent is half the total folded time."""
    params = params_ratio()
    t_star = float(scrambling_time(params))
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 6)
        pts = [rng.uniform(-10, 10)]
        sign = rng.choice((1, -1))
        for _ in range(n + 1):
            pts.append(pts[-1] + sign * rng.uniform(3 * t_star, 3 * t_star + 25))
            sign = -sign
        fold = TimeFold(times=tuple(pts[1:-1]), t_s=pts[0], t_f=pts[-1])
        terms = precursor_terms(fold, params)
        result = dominant_term(terms, params)
        assert result.term.subset == tuple(range(1, n + 1))
        assert rel_diff(2 * abs(result.term.exponent_arg), total_folded_time(fold)) < 1e-30


def test_switchback_examples():
    params = params_ratio()
    # no insertions: pure one-way growth
    assert_close(
        switchback_complexity(TimeFold(t_s=0, t_f=5), params), 5, rel=1e-35
    )
    fold = TimeFold(times=(20, -20, 20), t_s=-20, t_f=-20)
    c = switchback_complexity(fold, params)
    assert float(c) == pytest.approx(160 - 6 * 3.8004512297710407, rel=1e-10)
    # cross-check against half the log of the leading-order sum
    half_log = hp.log(rho_P_leading(fold, params).value) / 2
    assert 0 <= float(half_log - c) <= float(hp.log(2))


def test_switchback_scaling_homogeneity():
    params = params_ratio()
    fold1 = TimeFold(times=(15, -15), t_s=0, t_f=0)
    fold2 = TimeFold(times=(30, -30), t_s=0, t_f=0)
    t_star = scrambling_time(params)
    c1 = switchback_complexity(fold1, params)
    c2 = switchback_complexity(fold2, params)
    assert_close(c2 + 4 * params.omega * t_star, 2 * (c1 + 4 * params.omega * t_star), rel=1e-30)


def test_switchback_regime_warning():
    params = params_ratio()
    with pytest.warns(RegimeWarning):
        switchback_complexity(TimeFold(times=(1,), t_s=0, t_f=2), params)
