from fractions import Fraction

import pytest

from torcrys.qcoeff import (CycloElem, ExpansionError, LaurentPoly, QSeries,
                            RQ_ONE, RationalQ, SpecializationError,
                            cyclotomic, eval_cyclotomic, qbinom, qint,
                            series_log, series_of_rational)

Q = LaurentPoly.q_power
INT = LaurentPoly.from_int


# independent long-division oracle over Q coefficients
def divide_exactly(num: dict, den: dict) -> dict:
    num = {k: Fraction(c) for k, c in num.items() if c}
    den = {k: Fraction(c) for k, c in den.items() if c}
    quot = {}
    while num:
        dn, dd = max(num), max(den)
        f = num[dn] / den[dd]
        quot[dn - dd] = f
        for k, c in den.items():
            e = dn - dd + k
            s = num.get(e, 0) - f * c
            if s:
                num[e] = s
            else:
                num.pop(e, None)
    return quot


def test_qint_trivial():
    assert qint(0).is_zero()
    assert qint(2) == LaurentPoly({1: 1, -1: 1})
    assert qint(-3) == -qint(3)


def test_qint_3_against_division_oracle():
    expected = divide_exactly({3: 1, -3: -1}, {1: 1, -1: -1})
    assert {k: Fraction(c) for k, c in qint(3).terms.items()} == expected
    assert qint(3) == LaurentPoly({2: 1, 0: 1, -2: 1})


def test_qbinom_small():
    assert qbinom(2, 1) == qint(2)
    assert qbinom(3, 0) == INT(1)


def test_qbinom_4_2_against_product_oracle():
    num = {0: 1}
    for t in (4, 3):
        num = {k + e: sum(num.get(k + e - d, 0) * c
                          for d, c in qint(t).terms.items() if k + e - d in num)
               for k in list(num) for e in range(-5, 6)}  # not used; direct below
    # direct product/divide oracle
    def mul(a, b):
        out = {}
        for i, c in a.items():
            for j, d in b.items():
                out[i + j] = out.get(i + j, 0) + c * d
        return {k: v for k, v in out.items() if v}

    prod = mul(dict(qint(4).terms), dict(qint(3).terms))
    den = mul(dict(qint(2).terms), dict(qint(1).terms))
    quot = divide_exactly(prod, den)
    assert {k: Fraction(c) for k, c in qbinom(4, 2).terms.items()} == quot
    assert qbinom(4, 2) == LaurentPoly({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})


def test_qbinom_symmetry_and_classical_limit():
    from math import comb
    for m in range(9):
        for k in range(m + 1):
            b = qbinom(m, k)
            assert b == qbinom(m, m - k)
            assert b.eval_at_one() == comb(m, k)


def test_qbinom_range_error():
    with pytest.raises(ValueError):
        qbinom(3, 4)
    with pytest.raises(ValueError):
        qbinom(3, -1)


def test_series_of_rational_geometric():
    one = RQ_ONE
    s = series_of_rational({0: one}, {0: one, 1: -one}, 1, 3)
    assert [str(c) for c in s.coeffs] == ["1", "1", "1", "1"]


def test_series_of_rational_constant():
    c = RationalQ(Q(2))
    s = series_of_rational({0: c}, {0: RQ_ONE}, 1, 4)
    assert s.coeff(0) == c
    assert all(s.coeff(k).is_zero() for k in range(1, 5))


def test_series_of_rational_example_against_long_multiplication():
    # (1 - q^-1 z)/(1 - q z): multiply out (1 - q^-1 z) * sum (qz)^k
    num = {0: RQ_ONE, 1: -RationalQ.q_power(-1)}
    den = {0: RQ_ONE, 1: -RationalQ.q_power(1)}
    s = series_of_rational(num, den, 1, 2)
    assert s.coeff(0) == RQ_ONE
    assert s.coeff(1) == RationalQ(LaurentPoly({1: 1, -1: -1}))
    assert s.coeff(2) == RationalQ(LaurentPoly({2: 1, 0: -1}))


def test_series_of_rational_requires_invertible_term():
    with pytest.raises(ExpansionError):
        series_of_rational({0: RQ_ONE}, {1: RQ_ONE}, 1, 2)


def test_series_log_examples():
    one = QSeries(1, [RQ_ONE], 3)
    assert all(c.is_zero() for c in series_log(one).coeffs)
    s = series_of_rational({0: RQ_ONE}, {0: RQ_ONE, 1: -RationalQ.q_power(1)}, 1, 4)
    lg = series_log(s)
    for m in range(1, 5):
        assert lg.coeff(m) == RationalQ(Q(m), INT(m))
    # (1 - q^-1 z)/(1 - q z): log coefficients (q^m - q^-m)/m
    num = {0: RQ_ONE, 1: -RationalQ.q_power(-1)}
    den = {0: RQ_ONE, 1: -RationalQ.q_power(1)}
    lg = series_log(series_of_rational(num, den, 1, 4))
    for m in range(1, 5):
        assert lg.coeff(m) == RationalQ(LaurentPoly({m: 1, -m: -1}), INT(m))


def test_series_log_requires_unit_constant():
    s = QSeries(1, [RationalQ.q_power(1)], 2)
    with pytest.raises(ValueError):
        series_log(s)


def test_cyclotomic_basics():
    assert cyclotomic(1) == LaurentPoly({1: 1, 0: -1})
    assert cyclotomic(4) == LaurentPoly({2: 1, 0: 1})
    assert cyclotomic(8) == LaurentPoly({4: 1, 0: 1})
    # product over divisors reconstructs q^12 - 1
    prod = LaurentPoly({0: 1})
    for d in (1, 2, 3, 4, 6, 12):
        prod = prod * cyclotomic(d)
    assert prod == LaurentPoly({12: 1, 0: -1})


def test_eval_cyclotomic_examples():
    # q^2 = -1 mod Phi_4
    v = eval_cyclotomic(RationalQ.q_power(2), 4)
    assert v == CycloElem.from_fraction(4, Fraction(-1))
    # [2]_q vanishes at a primitive 4th root
    assert eval_cyclotomic(RationalQ(qint(2)), 4).is_zero()
    # 1/(q - q^-1) is well defined at a primitive cube root
    inv = eval_cyclotomic(RationalQ(INT(1), LaurentPoly({1: 1, -1: -1})), 3)
    back = inv * CycloElem.from_laurent(3, LaurentPoly({1: 1, -1: -1}))
    assert back == CycloElem.one(3)


def test_eval_cyclotomic_vanishing_denominator():
    with pytest.raises(SpecializationError):
        eval_cyclotomic(RationalQ(INT(1), qint(2)), 4)


def test_cyclo_field_ops():
    a = CycloElem.q_power(8, 3)
    assert a * a.inv() == CycloElem.one(8)
    z = CycloElem.q_power(8, 1)
    assert z.to_complex().real == pytest.approx(2 ** -0.5)


def test_rationalq_canonical_string():
    r = RationalQ(LaurentPoly({2: 1, 0: 1}), Q(1))
    assert str(r) == "(q^2+1)/(q)"
    r2 = RationalQ(LaurentPoly({3: 2, 1: 2}), LaurentPoly({2: 2}))
    # reduces to (q^2+1)/(q)
    assert r2 == r
    assert str(r2) == "(q^2+1)/(q)"
    assert str(RationalQ(INT(0), Q(5))) == "0"


def test_rationalq_sign_convention():
    r = RationalQ(INT(1), LaurentPoly({1: -1})).canonical()
    assert r.den.lowest_coeff() > 0
    assert str(r) == "(-1)/(q)"


def test_divexact_error():
    # (q^2+1)/(q+q^-1) = q is exact in the Laurent ring
    assert LaurentPoly({2: 1, 0: 1}).divexact(qint(2)) == Q(1)
    with pytest.raises(ValueError):
        LaurentPoly({2: 1, 0: 2}).divexact(qint(2))
