import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twisted_elliptic.characters import character_by_name, enumerate_characters, induce, kronecker, kronecker_character
from twisted_elliptic.qseries import (
    EtaQuotientSpec,
    FormalSeries,
    QuadraticNumber,
    compare_series,
    eisenstein_qexp,
    eta_quotient_expand,
    euler_product_expand,
    gauss_lambert_expand,
    lambert_expand,
    lambert_series,
    lambert_twisted_expand,
    partition_numbers,
    qform_theta,
    series_inverse,
    series_mul,
    theta_constant_expand,
)

coeff = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def series(n=64):
    return st.lists(coeff, min_size=n, max_size=n).map(FormalSeries)


def divisors(k):
    return [d for d in range(1, k + 1) if k % d == 0]


# -- ring structure ------------------------------------------------------------


@settings(max_examples=25, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) - b == a


@settings(max_examples=25, deadline=None)
@given(series(40))
def test_inverse_round_trip(a):
    if a.coeffs[0] == 0:
        a = a + 1
    one = FormalSeries.one(40)
    assert a * series_inverse(a) == one


def test_basic_products():
    s = FormalSeries([3, 1, 4, 1, 5])
    assert FormalSeries.one(5) * s == s
    geom = FormalSeries([1] * 30)
    assert FormalSeries([1, -1] + [0] * 28) * geom == FormalSeries.one(30)
    e = euler_product_expand(1, 100)
    assert series_mul(e, series_inverse(e)) == FormalSeries.one(100)


def test_inverses():
    assert series_inverse(FormalSeries.one(10)) == FormalSeries.one(10)
    assert series_inverse(euler_product_expand(1, 10)).coeffs == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    sq = FormalSeries([1, -2, 1] + [0] * 17)
    assert series_inverse(sq).coeffs == list(range(1, 21))
    with pytest.raises(ZeroDivisionError):
        series_inverse(FormalSeries([0, 1, 2]))


def test_truncation_never_exceeds_inputs():
    a = FormalSeries([1] * 10)
    b = FormalSeries([1] * 4)
    assert len(a * b) == 4 and len(a + b) == 4


def test_fractional_offsets():
    a = FormalSeries([1, 2, 3], Fraction(1, 8))
    b = FormalSeries([1, 1, 1], Fraction(1, 8))
    assert (a * b).offset == Fraction(1, 4)
    assert (a + b).coeffs == [2, 3, 4]
    with pytest.raises(ValueError):
        compare_series(a, FormalSeries([1, 2, 3]))
    with pytest.raises(ValueError):
        a + FormalSeries([1, 2])


# -- comparison ------------------------------------------------------------------


def test_compare_series():
    e = euler_product_expand(1, 50)
    assert compare_series(e, e) is None
    bumped = e + FormalSeries.monomial(1, 40, 50)
    m = compare_series(e, bumped, 50)
    # 40 is pentagonal, so (q;q) has coefficient -1 there
    assert m.exponent == 40 and m.lhs == -1 and m.rhs == 0


def test_compare_weighted_lambert_against_eta():
    # 1 - 5 sum (n/5) n q^n/(1-q^n) = (q;q)^5/(q^5;q^5)
    chi = kronecker_character(5)
    lhs = FormalSeries.one(200) - 5 * lambert_twisted_expand(chi, "n_over_1-q^n", 200)
    rhs = eta_quotient_expand(EtaQuotientSpec(((1, 5), (5, -1))), 200)
    assert compare_series(lhs, rhs, 200) is None


def test_compare_unweighted_lambert_against_eta():
    # without the weight n the two sides already differ at q^2
    chi = kronecker_character(5)
    lhs = FormalSeries.one(200) - 5 * lambert_twisted_expand(chi, "over_1-q^n", 200)
    rhs = eta_quotient_expand(EtaQuotientSpec(((1, 5), (5, -1))), 200)
    m = compare_series(lhs, rhs, 200)
    assert (m.exponent, m.lhs, m.rhs) == (2, 0, 5)


# -- eta quotients ------------------------------------------------------------------


def pentagonal(T):
    c = [0] * T
    for k in range(-40, 41):
        e = k * (3 * k - 1) // 2
        if 0 <= e < T:
            c[e] += (-1) ** k
    return FormalSeries(c)


def test_euler_product_is_pentagonal():
    assert eta_quotient_expand(EtaQuotientSpec(((1, 1),)), 200) == pentagonal(200)
    assert [e for e, _ in eta_quotient_expand(EtaQuotientSpec(((1, 1),)), 13).terms()] == [0, 1, 2, 5, 7, 12]


def test_empty_eta_quotient_is_one():
    assert eta_quotient_expand(EtaQuotientSpec(), 20) == FormalSeries.one(20)


def test_q5_quotient_matches_lambert_side():
    s = eta_quotient_expand(EtaQuotientSpec(((5, 5), (1, -1)), Fraction(1)), 8)
    assert [s[k] for k in range(1, 8)] == [1, 1, 2, 3, 5, 2, 6]
    lam = lambert_twisted_expand(kronecker_character(5), "over_(1-q^n)^2", 8)
    assert compare_series(s, lam, 8) is None


def test_eta_parse_and_scalar():
    spec = EtaQuotientSpec.parse("5^5,1^-1", "1", "2")
    assert spec.factors == ((5, 5), (1, -1)) and spec.q_power == 1 and spec.scalar == 2
    assert eta_quotient_expand(spec, 5).coeffs == [2, 2, 4, 6]


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 6), st.integers(-3, 3)), max_size=4))
def test_eta_quotient_is_product_of_factors(factors):
    T = 40
    expected = FormalSeries.one(T)
    for a, e in factors:
        expected = expected * euler_product_expand(a, T) ** e
    assert eta_quotient_expand(EtaQuotientSpec(tuple(factors)), T) == expected


def test_partition_numbers_oracle():
    assert series_inverse(euler_product_expand(1, 60)).coeffs == partition_numbers(60)


# -- Lambert series ----------------------------------------------------------------


def test_lambert_examples():
    triv = enumerate_characters(1)[0]
    assert lambert_expand(triv, 1, 5).coeffs == [0, 1, 3, 4, 7]
    minus4 = kronecker_character(-4)
    assert lambert_expand(minus4, 0, 6).coeffs == [0, 1, 1, 0, 1, 2]
    assert lambert_twisted_expand(triv, "over_1-q^n", 5).coeffs == [0, 1, 2, 2, 3]
    assert lambert_twisted_expand(kronecker_character(5), "over_(1-q^n)^2", 6).coeffs == [0, 1, 1, 2, 3, 5]
    for variant in ("over_1-q^n", "n_over_1-q^n", "over_(1-q^n)^2"):
        assert lambert_twisted_expand(minus4, variant, 1).terms() == []


@pytest.mark.parametrize("N", range(1, 13))
def test_lambert_expand_brute_force(N):
    T = 64
    for chi in enumerate_characters(N):
        for l in (0, 1, 3):
            s = lambert_expand(chi, l, T)
            assert s[0] == 0
            for k in range(1, T):
                expected = sum(((k // d) ** l * chi.value(d) for d in divisors(k)), 0)
                assert s[k] == expected


@pytest.mark.parametrize("name", ["kronecker:5", "kronecker:8", "psi10", "kronecker:12", "kronecker:-4"])
def test_twisted_variants_brute_force(name):
    chi = character_by_name(name)
    T = 60
    a = lambert_twisted_expand(chi, "over_1-q^n", T)
    b = lambert_twisted_expand(chi, "n_over_1-q^n", T)
    c = lambert_twisted_expand(chi, "over_(1-q^n)^2", T)
    for k in range(1, T):
        ds = divisors(k)
        assert a[k] == sum(chi.int_value(d) for d in ds)
        assert b[k] == sum(d * chi.int_value(d) for d in ds)
        assert c[k] == sum((k // d) * chi.int_value(d) for d in ds)


def test_lambert_scale():
    s = lambert_series(lambda n: 1, 12, scale=2)
    assert [s[k] for k in range(12)] == [0, 0, 1, 0, 2, 0, 2, 0, 3, 0, 2, 0]


# -- Eisenstein ----------------------------------------------------------------------


def test_eisenstein_qexp():
    chi8 = kronecker_character(8)
    e2 = eisenstein_qexp(chi8, 2, 50)
    assert e2[0] == 0
    assert e2 == lambert_expand(chi8, 1, 50) * -8
    with pytest.raises(ValueError):
        eisenstein_qexp(kronecker_character(-4), 4, 10)
    with pytest.raises(ValueError):
        eisenstein_qexp(chi8, 3, 10)


def test_eisenstein_induced_character_agrees_off_p():
    chi = kronecker_character(5)
    big = induce(chi, 15)
    a = eisenstein_qexp(chi, 4, 80)
    b = eisenstein_qexp(big, 4, 80)
    for j in range(1, 80):
        if j % 3:
            assert a[j] == b[j]


# -- theta series of forms and theta constants -------------------------------------------


def test_qform_theta():
    assert qform_theta((1, 0, 1), 3).coeffs == [1, 4, 4]
    with pytest.raises(ValueError):
        qform_theta((1, 3, 1), 5)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(-3, 3), st.integers(1, 6))
def test_qform_brute_force(a, b, c):
    if b * b - 4 * a * c >= 0:
        return
    T = 30
    brute = [0] * T
    for m in range(-40, 41):
        for n in range(-40, 41):
            v = a * m * m + b * m * n + c * n * n
            if v < T:
                brute[v] += 1
    assert qform_theta((a, b, c), T).coeffs == brute


@pytest.mark.parametrize(
    "d,forms",
    [(-24, [(1, 0, 6), (2, 0, 3)]), (-15, [(1, 1, 4), (2, 1, 2)]), (-20, [(1, 0, 5), (2, 2, 3)])],
)
def test_qform_sum_is_lambert(d, forms):
    T = 200
    lhs = qform_theta(forms[0], T) + qform_theta(forms[1], T)
    rhs = 2 * FormalSeries.one(T) + 2 * lambert_series(lambda n: kronecker(d, n), T)
    assert compare_series(lhs, rhs) is None


def test_theta_constants():
    t2 = theta_constant_expand(2, 1, 30)
    assert t2.offset == Fraction(1, 8)
    rhs = 2 * eta_quotient_expand(EtaQuotientSpec(((2, 2), (1, -1))), 30).shift(Fraction(1, 8))
    assert compare_series(t2, rhs, 30) is None
    t4 = theta_constant_expand(4, 2, 60)
    assert compare_series(t4, eta_quotient_expand(EtaQuotientSpec(((1, 2), (2, -1))), 60)) is None
    with pytest.raises(ValueError):
        theta_constant_expand(1, 2, 10)


# -- Gauss-weighted series and exact quadratic coefficients ------------------------------


def test_gauss_lambert_quadratic():
    psi = character_by_name("psi10")
    s = gauss_lambert_expand(psi, 0, 30, sqrt_of=5)
    assert s[1] == QuadraticNumber(0, 1, 5)
    cyclo = gauss_lambert_expand(psi, 0, 30)

    def num(x):
        return complex(x.to_complex()) if hasattr(x, "to_complex") else complex(x)

    for k in range(30):
        assert abs(num(s[k]) - num(cyclo[k])) < 1e-9


def test_quadratic_number_arithmetic():
    r = QuadraticNumber(0, 1, 5)
    assert r * r == 5
    assert (r + 1) * (r - 1) == 4
    assert r * r.inverse() == 1


def test_json_round_trip():
    s = eta_quotient_expand(EtaQuotientSpec(((1, 2),), Fraction(1, 8), 2), 10)
    js = s.to_json()
    again = json.loads(json.dumps(js))
    assert again == js
    assert js["offset"] == "1/8"
    assert FormalSeries([Fraction(x) for x in js["coeffs"]], Fraction(js["offset"])) == s
