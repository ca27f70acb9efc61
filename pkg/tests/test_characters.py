import cmath
import math
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twisted_elliptic.characters import (
    AlgebraicValue,
    DirichletCharacter,
    character_by_name,
    conductor,
    enumerate_characters,
    evaluate,
    gauss_sum,
    induce,
    kronecker,
    kronecker_character,
    legendre_character,
    principal_character,
    restrict,
)


def phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def brute_kronecker_odd(d, n):
    """Jacobi symbol for odd positive n by factoring n and Euler's criterion."""
    out = 1
    m = n
    p = 3
    while m > 1:
        while m % p == 0:
            r = pow(d % p, (p - 1) // 2, p)
            out *= 0 if d % p == 0 else (1 if r == 1 else -1)
            m //= p
        p += 2
    return out


# -- enumeration ---------------------------------------------------------


def test_modulus_one_has_the_trivial_character():
    (chi,) = enumerate_characters(1)
    assert chi.modulus == 1
    assert all(chi.value(n) == 1 for n in range(-3, 4))


def test_mod_5_contains_the_legendre_symbol():
    chars = enumerate_characters(5)
    assert len(chars) == 4
    assert chars[0].is_principal
    leg = [kronecker(5, n) for n in range(5)]
    assert any(c.is_real and c.int_table() == leg for c in chars)


def test_mod_8_even_primitive_is_kronecker_8():
    evens = [c for c in enumerate_characters(8) if c.is_even and c.is_primitive]
    assert len(evens) == 1
    assert evens[0].int_table() == [kronecker(8, n) for n in range(8)]


@pytest.mark.parametrize("N", range(1, 51))
def test_enumeration_axioms(N):
    chars = enumerate_characters(N)
    assert len(chars) == phi(N)
    assert chars[0].is_principal
    assert len({c.exponents for c in chars}) == len(chars)
    for chi in chars:
        assert chi.value(1) == 1
        for a in range(N):
            assert chi.value(a).is_zero() == (math.gcd(a, N) != 1)
            for b in range(N):
                assert chi.value(a * b) == chi.value(a) * chi.value(b)
        assert chi.is_even == (chi.value(-1) == 1)
        assert N % chi.conductor == 0
        assert chi.is_primitive == (chi.conductor == N)
        total = sum((chi.value(k) for k in range(N)), AlgebraicValue.zero())
        assert total.is_zero() != chi.is_principal
        assert induce(restrict(chi), N) == chi


def test_enumeration_is_deterministic():
    enumerate_characters.cache_clear()
    a = [c.exponents for c in enumerate_characters(21)]
    enumerate_characters.cache_clear()
    b = [c.exponents for c in enumerate_characters(21)]
    assert a == b


def test_value_set_matches_order():
    for N in (7, 13, 15, 16, 21):
        for chi in enumerate_characters(N):
            units = {chi.exponents[n] for n in range(N) if math.gcd(n, N) == 1}
            assert len(units) == chi.order


# -- evaluation, conductor, induction -------------------------------------


def test_evaluate_periodic_and_negative():
    psi = character_by_name("psi10")
    assert evaluate(psi, 13) == -1
    assert evaluate(psi, -1) == 1
    assert evaluate(psi, 4) == 0
    assert evaluate(psi, 1) == 1


def test_psi10_values_and_conductor():
    psi = character_by_name("psi10")
    assert psi.int_table() == [0, 1, 0, -1, 0, 0, 0, -1, 0, 1]
    assert conductor(psi) == 5
    assert psi == induce(legendre_character(5), 10)


def test_conductors():
    assert conductor(principal_character(12)) == 1
    assert conductor(kronecker_character(8)) == 8
    assert conductor(kronecker_character(12)) == 12


def test_induce_identity_and_trivial():
    chi = kronecker_character(12)
    assert induce(chi, 12) == chi
    assert induce(enumerate_characters(1)[0], 9) == principal_character(9)
    with pytest.raises(ValueError):
        induce(chi, 18)


def test_invalid_tables_rejected():
    with pytest.raises(ValueError):
        DirichletCharacter(4, 2, (None, 1, None, 0))
    with pytest.raises(ValueError):
        DirichletCharacter(4, 2, (0, 0, None, 0))


def test_conductor_is_race_free():
    chi = enumerate_characters(48)[5]
    out = []
    threads = [threading.Thread(target=lambda: out.append(conductor(chi))) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(out)) == 1


# -- algebraic values ------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 24), st.lists(st.integers(-5, 5), min_size=1, max_size=24))
def test_algebraic_to_complex_matches_roots(m, coeffs):
    x = AlgebraicValue(m, coeffs)
    direct = sum(c * cmath.exp(2j * math.pi * j / m) for j, c in enumerate(coeffs))
    assert abs(x.to_complex() - direct) <= 1e-12 * max(1.0, sum(map(abs, coeffs)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 30), st.integers(1, 12), st.integers(0, 30))
def test_algebraic_field_operations(m1, e1, m2, e2):
    a = AlgebraicValue.root_of_unity(m1, e1)
    b = AlgebraicValue.root_of_unity(m2, e2)
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12
    assert a * a.conjugate() == 1
    assert (a - a).is_zero()


def test_sqrt_discriminants():
    for d in (5, 8, 12, 13, -3, -4):
        s = AlgebraicValue.sqrt_discriminant(d)
        assert s * s == d
    assert str(AlgebraicValue.sqrt_discriminant(5)) == "1*sqrt(5)"
    with pytest.raises(ValueError):
        AlgebraicValue.sqrt_discriminant(6)


# -- Gauss sums --------------------------------------------------------------


def test_gauss_sums_psi10():
    psi = character_by_name("psi10")
    root5 = AlgebraicValue.sqrt_discriminant(5)
    assert gauss_sum(psi, 1) == root5
    assert gauss_sum(psi, 5) == 0
    # direct evaluation of sum psi(k) cos(4 pi k/10) is +sqrt5
    direct = sum(psi(k) * cmath.exp(2j * math.pi * 2 * k / 10) for k in range(10))
    assert abs(direct - math.sqrt(5)) < 1e-12
    assert gauss_sum(psi, 2) == root5
    for n in range(10):
        expected = kronecker(5, n) if n % 2 else kronecker(5, n // 2)
        assert gauss_sum(psi, n) == root5 * expected


def test_gauss_sum_for_kronecker_8():
    assert gauss_sum(kronecker_character(8), 1) == AlgebraicValue.sqrt_discriminant(8)


@pytest.mark.parametrize("N", range(1, 25))
def test_gauss_primitivity_law(N):
    for chi in enumerate_characters(N):
        if not chi.is_primitive:
            continue
        g1 = gauss_sum(chi, 1)
        for n in range(-N, 2 * N):
            assert gauss_sum(chi, n) == chi.value(n).conjugate() * g1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.integers(0, 100), st.integers(-60, 60))
def test_gauss_sum_matches_numeric(N, idx, n):
    chars = enumerate_characters(N)
    chi = chars[idx % len(chars)]
    direct = sum(chi(k) * cmath.exp(2j * math.pi * n * k / N) for k in range(1, N))
    assert abs(gauss_sum(chi, n).to_complex() - direct) < 1e-10


# -- Kronecker symbols -------------------------------------------------------


def test_kronecker_examples():
    assert [kronecker(-4, n) for n in range(1, 6)] == [1, 0, -1, 0, 1]
    assert [kronecker(5, n) for n in range(1, 5)] == [1, -1, -1, 1]
    assert all(kronecker(d, 1) == 1 for d in range(-30, 30) if d)


@settings(max_examples=200, deadline=None)
@given(st.integers(-200, 200), st.integers(1, 300), st.integers(1, 300))
def test_kronecker_multiplicative(d, m, n):
    assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(-200, 200), st.integers(0, 200).map(lambda k: 2 * k + 1))
def test_kronecker_matches_euler_criterion(d, n):
    assert kronecker(d, n) == brute_kronecker_odd(d, n)


@pytest.mark.parametrize("d", [5, 8, 12, 13, -3, -4, -7, -8, -15, -20, -24])
def test_kronecker_period_for_fundamental_discriminants(d):
    assert all(kronecker(d, n) == kronecker(d, n + abs(d)) for n in range(1, 200))
    chi = kronecker_character(d)
    assert chi.modulus == abs(d) and chi.is_primitive


# -- names -------------------------------------------------------------------


def test_character_names():
    assert character_by_name("kronecker:8") == kronecker_character(8)
    assert character_by_name("legendre-top:5").int_table() == [0, 1, -1, -1, 1]
    assert character_by_name("principal:6") == principal_character(6)
    assert character_by_name("mod:13:0").is_principal
    for bad in ("nope", "kronecker:x", "mod:10:99", "kronecker:0"):
        with pytest.raises(ValueError):
            character_by_name(bad)


def test_json_form():
    js = character_by_name("psi10").to_json()
    assert js["modulus"] == 10 and js["conductor"] == 5 and js["parity"] == "even"
    assert js["values"][0] is None and js["values"][3] == [2, 1]
