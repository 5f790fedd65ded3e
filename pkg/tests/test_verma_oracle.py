import pytest

from qknot.braid import parse_braid
from qknot.exactpoly import LaurentPoly, QExponent, q_int_binom
from qknot.mcmahon import colored_jones
from qknot.qweyl import AlgebraElement, NormalMonomial, StrandSigns, normal_order_product
from qknot.verma_oracle import (
    BasisState,
    VermaAction,
    braiding_coeff,
    check_braid_relation,
    check_braiding_inverse,
    qint_bracket,
    state_sum_jones,
)


def test_balanced_integer_bracket():
    assert qint_bracket(0).is_zero()
    assert qint_bracket(1) == LaurentPoly.one()
    v = LaurentPoly.term(1, QExponent.of_v(1))
    v_inv = LaurentPoly.term(1, QExponent.of_v(-1))
    assert qint_bracket(2) == v + v_inv
    assert qint_bracket(3) == LaurentPoly.q_power(1) + LaurentPoly.one() + LaurentPoly.q_power(-1)
    for n in range(1, 8):
        assert qint_bracket(-n) == qint_bracket(n).scale(-1)


def test_module_relations_hold_on_basis_vectors():
    # K e_i = v^{N-1-2i} e_i, E e_0 = 0, EF - FE = (K - K^{-1})/(v - v^{-1})
    for N in (0, 2, 3, 5):
        act = VermaAction(N)
        assert act.e_coeff(0).is_zero()
        for i in range(11):
            assert act.k_weight(i) == LaurentPoly.term(1, QExponent.of_v(N - 1 - 2 * i))
            ef = act.f_coeff(i) * act.e_coeff(i + 1)
            fe = act.e_coeff(i) * act.f_coeff(i - 1) if i >= 1 else LaurentPoly.zero()
            assert ef - fe == qint_bracket(N - 1 - 2 * i), (N, i)


def test_k_ladder_matches_q_commutation():
    # K E = q E K and K F = q^{-1} F K, read off the weight ladder
    for N in (0, 2, 3, 5):
        act = VermaAction(N)
        q = LaurentPoly.q_power(1)
        for i in range(1, 11):
            assert act.k_weight(i - 1) == act.k_weight(i) * q


def test_raising_coefficient_uses_inverse_powers():
    act = VermaAction(5)
    for i in range(11):
        want = LaurentPoly.zero()
        for j in range(i):
            want = want + LaurentPoly.q_power(-j)
        assert act.e_coeff(i) == want


def test_lowering_vanishes_at_top_of_finite_module():
    for N in (2, 3, 5):
        act = VermaAction(N)
        assert act.f_coeff(N - 1).is_zero()
        assert not act.f_coeff(N - 2).is_zero()


def test_basis_state_validation():
    BasisState((0, 4), 5)
    BasisState((0, 40), 0)
    with pytest.raises(ValueError):
        BasisState((0, -1), 3)
    with pytest.raises(ValueError):
        BasisState((0, 3), 3)


def test_braiding_identity_coefficient_is_pure_half_power():
    for N in (2, 3, 4, 5):
        half = (N - 1) ** 2
        assert braiding_coeff(1, 0, 0, 0, N) == LaurentPoly.term(1, QExponent.of_v_half(-half))
        assert braiding_coeff(-1, 0, 0, 0, N) == LaurentPoly.term(1, QExponent.of_v_half(half))


def test_braiding_coefficients_vanish_outside_finite_module():
    # transitions out of W_N x W_N carry coefficient zero of their own accord
    for N in (3, 4):
        for n1 in range(N):
            for n2 in range(N):
                for l in range(n1 + 1):
                    if l > N - 1 - n2:
                        assert braiding_coeff(1, n1, n2, l, N).is_zero(), (n1, n2, l)
                for l in range(n2 + 1):
                    if l > N - 1 - n1:
                        assert braiding_coeff(-1, n1, n2, l, N).is_zero(), (n1, n2, l)


def test_braid_relation_and_inverse_on_truncated_modules():
    for N in range(1, 5):
        assert check_braid_relation(N, N)
        assert check_braiding_inverse(N, N)


def test_truncation_cap_validation():
    with pytest.raises(ValueError):
        check_braid_relation(3, 4)
    with pytest.raises(ValueError):
        check_braiding_inverse(3, 0)


def test_gauss_binomial_identity_in_the_operator_algebra():
    # (X+Y)^n = sum_l binom(n,l)_q X^l Y^(n-l) for YX = qXY, with X=c_1, Y=a_1
    signs = StrandSigns((1,))
    x_plus_y = AlgebraElement.generator("c", 1) + AlgebraElement.generator("a", 1)
    power = AlgebraElement.one()
    for n in range(1, 7):
        power = normal_order_product(power, x_plus_y, signs)
        seen = dict(power.terms)
        for l in range(n + 1):
            mono = NormalMonomial.from_map({1: (0, l, n - l)})
            assert seen.pop(mono) == q_int_binom(n, l, -1), (n, l)
        assert seen == {}


def test_state_sum_matches_series_engine_on_corpus(corpus_braids):
    for name, b in corpus_braids.items():
        for N in (1, 2, 3):
            assert state_sum_jones(b, N) == colored_jones(b, N), (name, N)


def test_state_sum_unknot_normalization():
    b = parse_braid("1")
    for N in range(1, 6):
        assert state_sum_jones(b, N) == LaurentPoly.one()


def test_state_sum_rejects_bad_input():
    with pytest.raises(ValueError):
        state_sum_jones(parse_braid("1 1"), 2)
    with pytest.raises(ValueError):
        state_sum_jones(parse_braid("1 1 1"), 0)
