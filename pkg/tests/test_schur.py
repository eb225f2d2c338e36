import random

import pytest

from dualgroth.partitions import (horizontal_strip_additions,
                                  partitions_of, partitions_up_to, size,
                                  subpartitions, transpose)
from dualgroth.schur import (E_series, H_series, SymFunc, TensorElem,
                             TruncSeries, antipode, coproduct, counit, e_gen,
                             from_polynomial, h_gen, hall, is_group_like,
                             lr_coeff, p_gen, phi_t, schur, series_mul,
                             to_polynomial, truncate)
from dualgroth.tpoly import MultiPoly, ONE, T, TPoly, ZERO


def random_symfunc(rng, max_deg, nterms=3, with_t=False):
    pool = partitions_up_to(max_deg)
    terms = {}
    for _ in range(nterms):
        la = pool[rng.randrange(len(pool))]
        c = TPoly((rng.randint(-3, 3), rng.randint(-2, 2) if with_t else 0))
        terms[la] = terms.get(la, ZERO) + c
    return SymFunc(terms)


def test_generator_examples():
    assert h_gen(2) == schur((2,))
    assert h_gen(0) == SymFunc.one()
    assert e_gen(3) == schur((1, 1, 1))
    assert e_gen(0) == SymFunc.one()
    assert p_gen(2) == schur((2,)) - schur((1, 1))
    with pytest.raises(ValueError):
        p_gen(0)
    with pytest.raises(ValueError):
        h_gen(-1)


def test_p2_against_power_sum_evaluation():
    # independent oracle: p_2 restricted to two variables is x1^2 + x2^2
    assert to_polynomial(p_gen(2), 2) == MultiPoly(2, {(2, 0): 1, (0, 2): 1})
    assert to_polynomial(p_gen(3), 2) == MultiPoly(2, {(3, 0): 1, (0, 3): 1})


def test_lr_coeff_examples():
    assert lr_coeff((2,), (1,), (1,)) == 1
    assert lr_coeff((2, 1), (1,), (1, 1)) == 1
    assert lr_coeff((3,), (1,), (1,)) == 0
    assert lr_coeff((2, 1), (1,), (1,)) == 0
    assert lr_coeff((2, 1), (2,), (1,)) == 1
    assert lr_coeff((4, 2), (2, 1), (2, 1)) == 1


def test_lr_symmetries_up_to_6():
    for la in partitions_up_to(6):
        n = size(la)
        for mu in subpartitions(la):
            for nu in partitions_of(n - size(mu)):
                c = lr_coeff(la, mu, nu)
                assert c == lr_coeff(la, nu, mu)
                assert c == lr_coeff(transpose(la), transpose(mu), transpose(nu))


def test_mul_examples():
    s1 = schur((1,))
    assert s1 * s1 == schur((2,)) + schur((1, 1))
    assert s1 * schur((2,)) == schur((3,)) + schur((2, 1))
    f = schur((2, 1)) + schur((1,)).scale(T)
    assert f * SymFunc.one() == f


def test_mul_matches_polynomial_multiplication():
    # independent oracle: multiply the evaluations in enough variables
    rng = random.Random(7)
    for _ in range(15):
        f = random_symfunc(rng, 3)
        g = random_symfunc(rng, 3)
        n = max(1, f.degree() + g.degree())
        lhs = to_polynomial(f * g, n)
        rhs = to_polynomial(f, n).mul(to_polynomial(g, n))
        assert lhs == rhs


def test_mul_row_case_is_pieri():
    for mu in partitions_up_to(4):
        for k in range(4):
            prod = schur(mu) * h_gen(k)
            expected = SymFunc.zero()
            for la in horizontal_strip_additions(mu, k):
                expected = expected + schur(la)
            assert prod == expected


def test_coproduct_examples():
    d = coproduct(schur((1,)))
    assert d == TensorElem({((), (1,)): 1, ((1,), ()): 1})
    assert coproduct(SymFunc.one()) == TensorElem({((), ()): 1})
    d2 = coproduct(schur((2,)))
    assert d2 == TensorElem({((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})


def test_coproduct_counit_axiom():
    rng = random.Random(2)
    for _ in range(10):
        f = random_symfunc(rng, 4, with_t=True)
        d = coproduct(f)
        left = SymFunc.zero()
        for (mu, nu), c in d.terms.items():
            if mu == ():
                left = left + schur(nu).scale(c)
        assert left == f


def test_coproduct_cocommutative():
    rng = random.Random(3)
    for la in partitions_up_to(5):
        d = coproduct(schur(la))
        assert d.swap() == d
    for _ in range(5):
        f = random_symfunc(rng, 4, with_t=True)
        d = coproduct(f)
        assert d.swap() == d


def test_bialgebra_compatibility():
    rng = random.Random(4)
    for _ in range(10):
        f = random_symfunc(rng, 3)
        g = random_symfunc(rng, 3)
        assert coproduct(f * g) == coproduct(f) * coproduct(g)


def test_self_duality_pairing():
    # (fg, h) agrees with pairing f (x) g against the coproduct of h
    rng = random.Random(8)
    for _ in range(10):
        f = random_symfunc(rng, 3)
        g = random_symfunc(rng, 3)
        h = random_symfunc(rng, 4, with_t=True)
        lhs = hall(f * g, h)
        rhs = ZERO
        for (mu, nu), c in coproduct(h).terms.items():
            rhs = rhs + f.coeff(mu) * g.coeff(nu) * c
        assert lhs == rhs


def test_antipode_examples():
    assert antipode(schur((2,))) == schur((1, 1))
    assert antipode(schur((1,))) == schur((1,)).scale(-1)
    assert counit(schur((2, 1)) + SymFunc.one().scale(3)) == TPoly.const(3)


def test_antipode_axiom_up_to_5():
    from dualgroth.schur import _coproduct_pairs
    for la in partitions_up_to(5):
        total = SymFunc.zero()
        for (tau, rho), k in _coproduct_pairs(la).items():
            total = total + (antipode(schur(tau)) * schur(rho)).scale(k)
        assert total == (SymFunc.one() if not la else SymFunc.zero())


def test_hall_examples():
    assert hall(schur((2, 1)), schur((2, 1))) == ONE
    assert hall(schur((2,)), schur((1, 1))) == ZERO
    assert hall(H_series(3), schur((2,))) == T ** 2
    with pytest.raises(ValueError):
        hall(H_series(1), schur((2,)))


def test_from_polynomial_examples():
    x1x2 = MultiPoly(2, {(1, 1): 1})
    assert from_polynomial(x1x2) == schur((1, 1))
    h2 = MultiPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert from_polynomial(h2) == schur((2,))
    pw = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
    assert from_polynomial(pw) == schur((2,)) - schur((1, 1))
    with pytest.raises(ValueError):
        from_polynomial(MultiPoly(2, {(2, 0): 1}))
    with pytest.raises(ValueError):
        from_polynomial(MultiPoly(1, {(2,): 1, (1,): 1}))


def test_to_polynomial_examples():
    assert to_polynomial(schur((1, 1)), 1).is_zero()
    assert to_polynomial(schur((2,)), 2) == MultiPoly(
        2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert to_polynomial(schur((2, 1)), 2) == MultiPoly(2, {(2, 1): 1, (1, 2): 1})
    with pytest.raises(ValueError):
        to_polynomial(schur((1,)), 0)


def test_polynomial_round_trip():
    rng = random.Random(9)
    for la in partitions_up_to(5):
        assert from_polynomial(to_polynomial(schur(la), 5)) == schur(la)
    for _ in range(10):
        f = random_symfunc(rng, 4, with_t=True)
        assert from_polynomial(to_polynomial(f, 4)) == f


def test_phi_t_examples():
    assert phi_t(schur((2, 1))) == schur((2, 1)).scale(T ** 3)
    assert phi_t(SymFunc.one()) == SymFunc.one()


def test_phi_t_self_adjoint():
    rng = random.Random(10)
    for _ in range(10):
        f = random_symfunc(rng, 4)
        g = random_symfunc(rng, 4)
        assert hall(phi_t(f), g) == hall(f, phi_t(g))


def test_series_examples():
    assert H_series(2) == TruncSeries(2, {(): 1, (1,): T, (2,): T ** 2})
    assert E_series(0) == TruncSeries.unit(0)
    assert series_mul(H_series(4), E_series(4, -T)) == TruncSeries.unit(4)


def test_series_min_cap():
    F = H_series(5)
    G = E_series(3)
    assert series_mul(F, G).cap == 3
    assert (F + G).cap == 3
    assert (F - G).cap == 3


def test_truncate_checks_cap():
    f = schur((2, 1))
    assert truncate(f, 5).cap == 5
    with pytest.raises(ValueError):
        truncate(f, 2)


def test_is_group_like():
    assert is_group_like(H_series(5))
    assert is_group_like(E_series(5))
    assert is_group_like(phi_t(H_series(5, 1)))
    # 1 + s_1 + s_2 agrees with the H(1) truncation at cap 2, so only a cap
    # that sees degree 3 exposes the failure
    probe2 = TruncSeries(2, {(): 1, (1,): 1, (2,): 1})
    assert is_group_like(probe2)
    probe3 = TruncSeries(3, {(): 1, (1,): 1, (2,): 1})
    assert not is_group_like(probe3)
    scaled = TruncSeries(2, {(): 1, (1,): 1, (2,): 2})
    assert not is_group_like(scaled)
    no_unit = TruncSeries(2, {(1,): 1})
    assert not is_group_like(no_unit)


def test_group_like_condition_via_lr_oracle():
    F = H_series(4, 1)
    for mu in partitions_up_to(2):
        for nu in partitions_up_to(2):
            lhs = F.coeff(mu) * F.coeff(nu)
            rhs = ZERO
            for la in partitions_of(size(mu) + size(nu)):
                c = F.coeff(la)
                if not c.is_zero():
                    rhs = rhs + c * lr_coeff(la, mu, nu)
            assert lhs == rhs


def test_series_scale_and_coeff():
    F = H_series(3).scale(T)
    assert F.coeff((2,)) == T ** 3
    assert F.coeff((1, 1)) == ZERO
