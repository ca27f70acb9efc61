"""The identity catalog.

Each record binds two or more independently computed sides of one displayed
identity.  Exact records compare formal q-series coefficient by coefficient;
pointwise records compare complex values at seeded random points; modular
records run the ratio test of the transformation law.

Records marked ``as_printed`` reproduce a formula exactly as it is displayed
even though the displayed form is believed to contain a misprint; their
failure is expected and reported with a witness.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from ..analytic import (
    E2k_classical,
    cot_coefficient_B,
    cot_derivative,
    cot_sum,
    dedekind_eta,
    eisenstein_E_lattice,
    eisenstein_E_qexp,
    eisenstein_F_lattice,
    eisenstein_F_qexp,
    euler_product,
    g_companion,
    g_twisted,
    lambert_trig_sum,
    lattice_distance,
    lattice_sum,
    taylor_coefficients,
    theta,
    theta1_logderiv,
    theta_derivatives,
    twisted_lattice_sum,
    twisted_wp_sum,
    companion_wp_sum,
    weierstrass_p,
)
from ..characters import (
    AlgebraicValue,
    DirichletCharacter,
    character_by_name,
    enumerate_characters,
    gauss_sum,
    kronecker,
    kronecker_character,
    legendre_character,
)
from ..qseries import (
    EtaQuotientSpec,
    FormalSeries,
    eta_quotient_expand,
    gauss_lambert_expand,
    lambert_expand,
    lambert_series,
    lambert_twisted_expand,
    qform_theta,
    theta_constant_expand,
)
from .records import Case, IdentityRecord, SampleDomain, SamplePoint

PI = math.pi

CHI5 = legendre_character(5)
CHI8 = kronecker_character(8)
CHI12 = kronecker_character(12)
PSI10 = character_by_name("psi10")

# half-periods where odd sides vanish together; relative errors are meaningless there
ODD_ZEROS = ((PI / 2, 0.0),)


def _even_characters() -> list[tuple[str, DirichletCharacter]]:
    out = []
    for N in (5, 7, 8, 10, 12, 13):
        for idx, chi in enumerate(enumerate_characters(N)):
            if chi.is_even and not chi.is_principal:
                out.append((f"mod:{N}:{idx}", chi))
    return out


EVEN_CHARS = _even_characters()


def _named(*names: str) -> list[tuple[str, DirichletCharacter]]:
    return [(n, character_by_name(n)) for n in names]


def _complex_mod7() -> tuple[str, DirichletCharacter]:
    return next((label, chi) for label, chi in EVEN_CHARS if chi.modulus == 7)


LATTICE_CHARS = _named("kronecker:5", "kronecker:8", "kronecker:12") + [_complex_mod7()]
TAYLOR_CHARS = _named("kronecker:5", "kronecker:8", "psi10", "kronecker:12") + [_complex_mod7()]


def _moduli_avoid(chars, extra=ODD_ZEROS) -> tuple[tuple[float, float], ...]:
    return tuple(sorted({(PI / chi.modulus, 0.0) for _, chi in chars})) + tuple(extra)


# ---------------------------------------------------------------------------
# numerical building blocks


def _qr(tau: complex, r) -> complex:
    """q^r = exp(2 pi i tau r)."""
    return cmath.exp(2j * PI * tau * float(r))


def _P(tau: complex, *factors: tuple[int, int]) -> complex:
    """prod (q^a; q^a)_inf^e."""
    out = 1 + 0j
    for a, e in factors:
        out *= euler_product(tau, a) ** e
    return out


def _eta(tau: complex, scale: int = 1) -> complex:
    return dedekind_eta(scale * tau)


def _th(j: int, z: complex, tau: complex) -> complex:
    return theta(j, z, tau)


def _th1p0(tau: complex) -> complex:
    return theta_derivatives(1, 0, tau, 1)[1]


def _L(z: complex, tau: complex, order: int = 0) -> complex:
    return theta1_logderiv(z, tau, order)


def _ratio_sum(chi: DirichletCharacter, tau: complex, z: complex = 0, trig: str | None = None, weight=None, power: int = 0) -> complex:
    """sum_n w(n) n^power (sum_k chi(k) q^{kn}) / (1 - q^{Nn}) trig(2nz), summed literally in n."""
    N = chi.modulus
    vals = [chi(k) for k in range(N)]
    q = cmath.exp(2j * PI * tau)
    grow = math.exp(2 * abs(z.imag)) if trig else 1.0
    rate = abs(q) * grow
    if rate >= 1:
        raise ValueError("sum diverges at this point")
    total = 0j
    scale = 0.0
    for n in range(1, 100_000):
        qn = q**n
        num = sum(vals[k] * qn**k for k in range(1, N) if vals[k] != 0)
        w = 1 if weight is None else weight(n)
        term = w * n**power * num / (1 - qn**N)
        if trig == "sin":
            term *= cmath.sin(2 * n * z)
        elif trig == "cos":
            term *= cmath.cos(2 * n * z)
        total += term
        scale = max(scale, abs(term), abs(total))
        if n > 3 and N * n**power * rate**n < 1e-17 * scale:
            return total
    raise ArithmeticError("ratio sum did not converge")


def _qpochhammer(a: complex, q: complex) -> complex:
    """(a; q)_inf."""
    out = 1 + 0j
    t = a
    for _ in range(100_000):
        out *= 1 - t
        if abs(t) < 1e-18:
            return out
        t *= q
    raise ArithmeticError("q-Pochhammer product did not converge")


def _sqrt_minus_i(tau: complex) -> complex:
    """Principal sqrt(-i tau), which has positive real part on the upper half plane."""
    return cmath.sqrt(-1j * tau)


# ---------------------------------------------------------------------------
# exact building blocks


def _eq(T, factors, q_power=0, scalar=1) -> FormalSeries:
    return eta_quotient_expand(EtaQuotientSpec(tuple(factors), Fraction(q_power), Fraction(scalar)), T)


def _one(T) -> FormalSeries:
    return FormalSeries.one(T)


def _char_table(chi: DirichletCharacter) -> list:
    if chi.is_real:
        return chi.int_table()
    return [chi.value(k) for k in range(chi.modulus)]


def _ratio_series(chi: DirichletCharacter, T: int, weight=None, power: int = 0) -> FormalSeries:
    """sum_n w(n) n^power (sum_k chi(k) q^{kn}) sum_j q^{jNn}, expanded literally."""
    N = chi.modulus
    vals = _char_table(chi)
    c: list = [0] * T
    for n in range(1, T):
        w = (1 if weight is None else weight(n)) * n**power
        if not w:
            continue
        for k in range(1, N):
            v = vals[k]
            if v == 0:
                continue
            e = k * n
            while e < T:
                c[e] = c[e] + w * v
                e += N * n
    return FormalSeries(c)


def _kron(d: int):
    return lambda n: kronecker(d, n)


def _theta1p_series(scale: int, T) -> FormalSeries:
    """theta_1'(0 | scale tau) = 2 q^{scale/8} sum (-1)^n (2n+1) q^{scale n(n+1)/2}."""
    offset = Fraction(scale, 8)
    size = max(0, math.ceil(Fraction(T) - offset))
    c = [0] * size
    n = 0
    while scale * n * (n + 1) // 2 < size:
        c[scale * n * (n + 1) // 2] += 2 * (-1) ** n * (2 * n + 1)
        n += 1
    return FormalSeries(c, offset)


# ---------------------------------------------------------------------------
# record helpers


def _exact(rid, statement, cases, order=200, as_printed=False, note="") -> IdentityRecord:
    return IdentityRecord(rid, "exact_qseries", statement, tuple(cases), order=order, as_printed=as_printed, note=note)


def _pointwise(rid, statement, cases, tolerance=1e-9, domain=None, as_printed=False, note="", kind="pointwise_z") -> IdentityRecord:
    return IdentityRecord(
        rid,
        kind,
        statement,
        tuple(cases),
        tolerance=tolerance,
        domain=domain or SampleDomain(avoid=ODD_ZEROS),
        as_printed=as_printed,
        note=note,
    )


def _c(label: str, *sides) -> Case:
    return Case(label, tuple(sides))


def _lattice_guard(rho: float = 0.1):
    """All of x1, x2, x3 and their partial sums stay away from the zeros of theta_1."""

    def guard(p: SamplePoint) -> bool:
        x1, x2, x3 = p.zs
        args = (x1, x2, x3, x1 + x2, x1 + x3, x2 + x3, x1 + x2 + x3)
        return all(lattice_distance(a, p.tau) > rho for a in args)

    return guard


# ---------------------------------------------------------------------------
# theta functions, eta, Weierstrass p


def _theta_records() -> list[IdentityRecord]:
    recs = []

    recs.append(
        _pointwise(
            "theta.product",
            "theta_j(z|tau) equals its infinite product, j = 1..4",
            [_c(f"theta{j}", (lambda p, j=j: theta(j, p.z, p.tau, "series")), (lambda p, j=j: theta(j, p.z, p.tau, "product"))) for j in (1, 2, 3, 4)],
            tolerance=1e-12,
            domain=SampleDomain(),
        )
    )

    def exp_product(p):
        q = cmath.exp(2j * PI * p.tau)
        e = cmath.exp(2j * p.z)
        return 1j * _qr(p.tau, Fraction(1, 8)) * cmath.exp(-1j * p.z) * _qpochhammer(q, q) * _qpochhammer(e, q) * _qpochhammer(q / e, q)

    recs.append(
        _pointwise(
            "theta1.exp-product",
            "theta_1(z|tau) = i q^{1/8} e^{-iz} (q;q)(e^{2iz};q)(q e^{-2iz};q)",
            [_c("theta1", lambda p: _th(1, p.z, p.tau), exp_product)],
            tolerance=1e-11,
        )
    )

    def th_inv(j_lhs, j_rhs, factor):
        def lhs(p):
            return theta(j_lhs, p.z / p.tau, -1 / p.tau)

        def rhs(p):
            return factor * _sqrt_minus_i(p.tau) * cmath.exp(1j * p.z**2 / (PI * p.tau)) * theta(j_rhs, p.z, p.tau)

        return lhs, rhs

    recs.append(
        _pointwise(
            "theta1.imaginary",
            "theta_1(z/tau | -1/tau) = (1/i) sqrt(-i tau) e^{i z^2/(pi tau)} theta_1(z|tau)",
            [_c("theta1", *th_inv(1, 1, -1j))],
        )
    )
    recs.append(
        _pointwise(
            "theta4.imaginary",
            "theta_4(z/tau | -1/tau) = sqrt(-i tau) e^{i z^2/(pi tau)} theta_2(z|tau)",
            [_c("theta4", *th_inv(4, 2, 1))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "eta.imaginary",
            "eta(-1/tau) = sqrt(-i tau) eta(tau)",
            [_c("eta", lambda p: _eta(-1 / p.tau), lambda p: _sqrt_minus_i(p.tau) * _eta(p.tau))],
            tolerance=1e-12,
            domain=SampleDomain(),
        )
    )
    recs.append(
        _exact(
            "theta1.derivative-zero",
            "theta_1'(0|tau) = 2 q^{1/8} (q;q)^3",
            [_c("tau", lambda T: _theta1p_series(1, T), lambda T: _eq(T, [(1, 3)], Fraction(1, 8), 2))],
        )
    )
    recs.append(
        _pointwise(
            "theta1.logderiv-lambert",
            "theta_1'/theta_1(z|tau) = cot z + 4 sum q^n/(1-q^n) sin 2nz",
            [_c("L", lambda p: theta1_logderiv(p.z, p.tau, 0, "theta"), lambda p: theta1_logderiv(p.z, p.tau, 0, "lambert"))],
        )
    )

    def exp_form(p):
        q = cmath.exp(2j * PI * p.tau)
        e = cmath.exp(2j * p.z)
        total = 1 + 0j
        for n in range(1, 10_000):
            qn = q**n
            a = e**n / (1 - qn)
            b = -(e ** (-n)) * qn / (1 - qn)
            total += 2 * (a + b)
            if abs(a) + abs(b) < 1e-18 * abs(total):
                return total
        raise ArithmeticError("exponential series did not converge")

    recs.append(
        _pointwise(
            "theta1.logderiv-exp",
            "i theta_1'/theta_1(z|tau) = 1 + 2 sum_{n != 0} e^{2inz}/(1-q^n) for |q| < |e^{2iz}| < 1",
            [_c("L", lambda p: 1j * _L(p.z, p.tau), exp_form)],
            domain=SampleDomain(z_imag=(0.2, 2.0)),
        )
    )
    recs.append(
        _pointwise(
            "theta1.logderiv-imaginary",
            "theta_1'/theta_1(z/tau | -1/tau) = tau theta_1'/theta_1(z|tau) + 2iz/pi",
            [_c("L", lambda p: _L(p.z / p.tau, -1 / p.tau), lambda p: p.tau * _L(p.z, p.tau) + 2j * p.z / PI)],
        )
    )

    matrices = [(0, -1, 1, 0), (1, 0, 1, 1), (2, 1, 1, 1), (1, 0, 2, 1)]

    def modular_L(a, b, c, d):
        def lhs(p):
            return _L(p.z, (a * p.tau + b) / (c * p.tau + d))

        def rhs(p):
            j = c * p.tau + d
            return 2j * p.z * c * j / PI + j * _L(j * p.z, p.tau)

        return lhs, rhs

    recs.append(
        _pointwise(
            "theta1.logderiv-modular",
            "theta_1'/theta_1(z | g tau) = 2izc(c tau + d)/pi + (c tau + d) theta_1'/theta_1((c tau + d) z | tau)",
            [_c(f"[{a},{b},{c},{d}]", *modular_L(a, b, c, d)) for a, b, c, d in matrices],
        )
    )

    def four_lhs(p):
        x1, x2, x3 = p.zs
        return _L(x1, p.tau) + _L(x2, p.tau) + _L(x3, p.tau) - _L(x1 + x2 + x3, p.tau)

    def four_rhs(p):
        x1, x2, x3 = p.zs
        t = p.tau
        num = _th1p0(t) * _th(1, x1 + x2, t) * _th(1, x1 + x3, t) * _th(1, x2 + x3, t)
        return num / (_th(1, x1, t) * _th(1, x2, t) * _th(1, x3, t) * _th(1, x1 + x2 + x3, t))

    recs.append(
        _pointwise(
            "theta1.four-variable",
            "sum theta_1'/theta_1(x_i) - theta_1'/theta_1(x1+x2+x3) = theta_1'(0) prod theta_1(x_i+x_j) / (prod theta_1(x_i) theta_1(x1+x2+x3))",
            [_c("x1,x2,x3", four_lhs, four_rhs)],
            domain=SampleDomain(z_radius=0.8, n_z=3, guard=_lattice_guard()),
        )
    )

    # Weierstrass p
    recs.append(
        _pointwise(
            "wp.theta-form",
            "p(z|tau) = -(theta_1'/theta_1)'(z|tau) - E_2/3 = csc^2 z - 8 sum n q^n/(1-q^n) cos 2nz - E_2/3",
            [_c("p", lambda p: weierstrass_p(p.z, p.tau, "theta"), lambda p: weierstrass_p(p.z, p.tau, "lambert"))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "wp.lattice",
            "p(z|tau) = 1/z^2 + sum' (1/(z + m pi + n pi tau)^2 - 1/(m pi + n pi tau)^2)",
            [_c("p", lambda p: weierstrass_p(p.z, p.tau, "theta"), lambda p: weierstrass_p(p.z, p.tau, "lattice", cutoff=400))],
            tolerance=1e-4,
            domain=SampleDomain(),
            note="the square-truncated lattice sum converges like 1/M; tolerance reflects truncation",
        )
    )
    recs.append(
        _pointwise(
            "wp.imaginary",
            "p(z/tau | -1/tau) / tau^2 = p(z|tau)",
            [_c("p", lambda p: weierstrass_p(p.z / p.tau, -1 / p.tau) / p.tau**2, lambda p: weierstrass_p(p.z, p.tau))],
            domain=SampleDomain(),
        )
    )

    def laurent(k):
        def lhs(p):
            coeffs = taylor_coefficients(lambda w: w * w * weierstrass_p(w, p.tau), 2 * k + 2, radius=0.8)
            return coeffs[2 * k + 2]

        def rhs(p):
            return (2 * k + 1) * E2k_classical(k + 1, p.tau)

        return lhs, rhs

    recs.append(
        _pointwise(
            "wp.laurent",
            "p(z|tau) = 1/z^2 + sum_{k>=1} (2k+1) E_{2k+2}(tau) z^{2k}",
            [_c(f"z^{2 * k}", *laurent(k)) for k in (1, 2, 3)],
            tolerance=1e-8,
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "eisenstein.classical",
            "E_{2k}(tau) = pi^{-2k} sum' (m + n tau)^{-2k} = 2 zeta(2k)/pi^{2k} + 2(-4)^k/(2k-1)! sum sigma_{2k-1}(n) q^n",
            [
                _c(f"E{2 * k}", (lambda p, k=k: E2k_classical(k, p.tau, "lattice", cutoff=200)), (lambda p, k=k: E2k_classical(k, p.tau, "lambert")))
                for k in (2, 3)
            ],
            tolerance=1e-6,
            domain=SampleDomain(),
            note="lattice side uses Richardson extrapolation of the square truncation",
        )
    )
    return recs


# ---------------------------------------------------------------------------
# the twisted function and its companion


def _main_records() -> list[IdentityRecord]:
    recs = []
    chars = EVEN_CHARS

    recs.append(
        _pointwise(
            "g.sine-form",
            "g(z|tau;chi) = sum chi(k) theta_1'/theta_1(z + k pi tau | N tau) = 4 sum Q(q^n) sin 2nz",
            [_c(label, (lambda p, c=chi: g_twisted(p.z, p.tau, c, "theta_shift")), (lambda p, c=chi: g_twisted(p.z, p.tau, c, "sine_series"))) for label, chi in chars],
        )
    )
    recs.append(
        _pointwise(
            "g.shift-sum",
            "sum chi(k) theta_1'/theta_1(z + k pi tau | N tau) = 4 sum (sum_k chi(k) q^{kn})/(1 - q^{Nn}) sin 2nz",
            [_c(label, (lambda p, c=chi: g_twisted(p.z, p.tau, c)), (lambda p, c=chi: 4 * _ratio_sum(c, p.tau, p.z, "sin"))) for label, chi in chars],
        )
    )

    def q_reflection(chi):
        N = chi.modulus

        def Q(t):
            return sum(chi(k) * t**k for k in range(N)) / (1 - t**N)

        return (lambda p: Q(1 / cmath.exp(2j * PI * p.tau))), (lambda p: -Q(cmath.exp(2j * PI * p.tau)))

    recs.append(
        _pointwise(
            "g.Q-reflection",
            "Q(q^{-n}) = -Q(q^n) for even chi, Q(t) = sum chi(k) t^k/(1 - t^N)",
            [_c(label, *q_reflection(chi)) for label, chi in chars],
            tolerance=1e-12,
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "g.companion-identity",
            "(1/tau) g(z/tau | -1/(N tau); chi) = sum chi(k) theta_1'/theta_1(z + k pi/N | tau)",
            [_c(label, (lambda p, c=chi: g_companion(p.z, p.tau, c, "transform")), (lambda p, c=chi: g_companion(p.z, p.tau, c, "theta"))) for label, chi in chars],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid(chars)),
        )
    )
    recs.append(
        _pointwise(
            "companion.cot-form",
            "(1/tau) g(z/tau | -1/(N tau); chi) = sum chi(k) cot(z - k pi/N) + 4 sum g_n(chi) q^n/(1-q^n) sin 2nz",
            [_c(label, (lambda p, c=chi: g_companion(p.z, p.tau, c, "transform")), (lambda p, c=chi: g_companion(p.z, p.tau, c, "cot_series"))) for label, chi in chars],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid(chars)),
        )
    )

    def shift_sum_companion(chi):
        N = chi.modulus
        gs = chi.gauss_sums()

        def lhs(p):
            return sum(chi(k) * _L(p.z + k * PI / N, p.tau) for k in range(1, N) if chi(k) != 0)

        def rhs(p):
            return cot_sum(chi, p.z, sign=1) + 4 * lambert_trig_sum(None, lambda n: gs[n % N], p.tau, p.z, "sin")

        return lhs, rhs

    recs.append(
        _pointwise(
            "companion.shift-sum",
            "sum chi(k) theta_1'/theta_1(z + k pi/N | tau) = sum chi(k) cot(z + k pi/N) + 4 sum g_n(chi) q^n/(1-q^n) sin 2nz",
            [_c(label, *shift_sum_companion(chi)) for label, chi in chars],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid(chars)),
        )
    )

    primitive = [(label, chi) for label, chi in chars if chi.is_primitive]

    def primitive_rhs(chi):
        g1 = complex(gauss_sum(chi, 1))

        def rhs(p):
            tail = lambert_trig_sum(None, lambda n: chi(n).conjugate(), p.tau, p.z, "sin")
            return cot_sum(chi, p.z, sign=-1) + 4 * g1 * tail

        return rhs

    recs.append(
        _pointwise(
            "companion.primitive",
            "for primitive chi: companion = sum chi(k) cot(z - k pi/N) + 4 g_1(chi) sum conj(chi(n)) q^n/(1-q^n) sin 2nz",
            [_c(label, (lambda p, c=chi: g_companion(p.z, p.tau, c, "transform")), primitive_rhs(chi)) for label, chi in primitive],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid(primitive)),
        )
    )

    quad = [(f"kronecker:{d}", kronecker_character(d), d) for d in (5, 8, 12, 13, 17, 21, 24)]

    def quadratic_rhs(chi, d):
        root = math.sqrt(d)

        def rhs(p):
            return cot_sum(chi, p.z, sign=-1) + 4 * root * lambert_trig_sum(None, chi, p.tau, p.z, "sin")

        return rhs

    recs.append(
        _pointwise(
            "companion.quadratic",
            "for a real quadratic discriminant d: companion = sum chi_d(k) cot(z - k pi/d) + 4 sqrt(d) sum chi_d(n) q^n/(1-q^n) sin 2nz",
            [_c(label, (lambda p, c=chi: g_companion(p.z, p.tau, c, "transform")), quadratic_rhs(chi, d)) for label, chi, d in quad],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid([(l, c) for l, c, _ in quad])),
        )
    )

    def gauss_cos(chi, N):
        return (
            lambda T: FormalSeries([gauss_sum(chi, n) for n in range(T)]),
            lambda T: FormalSeries([gauss_sum(chi, -n) for n in range(T)]),
        )

    recs.append(
        _exact(
            "companion.gauss-symmetry",
            "g_n(chi) = g_{-n}(chi) for even chi, so the Gauss sums are the cosine sums",
            [_c(label, *gauss_cos(chi, chi.modulus)) for label, chi in chars],
            order=30,
        )
    )

    def quad_gauss(d):
        chi = kronecker_character(d)
        root = AlgebraicValue.sqrt_discriminant(d)
        return (
            lambda T: FormalSeries([gauss_sum(chi, n) for n in range(T)]),
            lambda T: FormalSeries([root * kronecker(d, n) for n in range(T)]),
        )

    recs.append(
        _exact(
            "companion.quadratic-gauss",
            "sum_k chi_d(k) cos(2nk pi/d) = sqrt(d) chi_d(n)",
            [_c(f"d={d}", *quad_gauss(d)) for d in (5, 8, 12, 13, 17, 21, 24, 28)],
            order=60,
        )
    )
    return recs


# ---------------------------------------------------------------------------
# Eisenstein series from the twisted p sums


def _eisenstein_records() -> list[IdentityRecord]:
    recs = []
    lat = LATTICE_CHARS

    def wp_derivative(chi, l):
        def s1(p):
            return twisted_wp_sum(p.z, p.tau, chi, l, "lambert")

        def s2(p):
            return (-1) ** l * math.factorial(l + 1) * twisted_lattice_sum(chi, l + 2, p.z, p.tau, "n")

        def s3(p):
            N = chi.modulus
            return -sum(chi(k) * _L(p.z + k * PI * p.tau, N * p.tau, l + 1) for k in range(1, N) if chi(k) != 0)

        return s1, s2, s3

    recs.append(
        _pointwise(
            "lemma.wp-derivative-lattice",
            "sum chi(k) p^(l)(z + k pi tau | N tau) = (-1)^l (l+1)! sum chi(n)/(z + m pi + n pi tau)^{l+2} = -sum chi(k) (theta_1'/theta_1)^(l+1)(z + k pi tau | N tau)",
            [_c(f"{label},l={l}", *wp_derivative(chi, l)) for label, chi in lat for l in (1, 2)],
            tolerance=1e-5,
        )
    )

    def wp_cos(chi, l):
        return (
            lambda p: twisted_wp_sum(p.z, p.tau, chi, 2 * l),
            lambda p: (-1) ** (l + 1) * 2 ** (2 * l + 3) * _ratio_sum(chi, p.tau, p.z, "cos", power=2 * l + 1),
        )

    def wp_sin(chi, l):
        return (
            lambda p: twisted_wp_sum(p.z, p.tau, chi, 2 * l + 1),
            lambda p: (-1) ** l * 2 ** (2 * l + 4) * _ratio_sum(chi, p.tau, p.z, "sin", power=2 * l + 2),
        )

    recs.append(
        _pointwise(
            "lemma.wp-cos-series",
            "sum chi(k) p^(2l)(z + k pi tau | N tau) = (-1)^{l+1} 2^{2l+3} sum n^{2l+1} (sum_k chi(k) q^{kn})/(1 - q^{Nn}) cos 2nz",
            [_c(f"{label},l={l}", *wp_cos(chi, l)) for label, chi in EVEN_CHARS for l in (0, 1)],
            tolerance=1e-8,
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "lemma.wp-sin-series",
            "sum chi(k) p^(2l+1)(z + k pi tau | N tau) = (-1)^l 2^{2l+4} sum n^{2l+2} (sum_k chi(k) q^{kn})/(1 - q^{Nn}) sin 2nz",
            [_c(f"{label},l={l}", *wp_sin(chi, l)) for label, chi in EVEN_CHARS for l in (0, 1)],
            tolerance=1e-8,
        )
    )

    def double_sum(chi, l):
        return (lambda T: _ratio_series(chi, T, power=l)), (lambda T: lambert_expand(chi, l, T))

    dchars = _named("kronecker:5", "kronecker:8", "psi10", "kronecker:12", "kronecker:13") + [_complex_mod7()]
    recs.append(
        _exact(
            "lemma.lambert-double-sum",
            "sum_n n^l (sum_k chi(k) q^{kn})/(1 - q^{Nn}) = sum_{m,n} n^l chi(m) q^{mn}",
            [_c(f"{label},l={l}", *double_sum(chi, l)) for label, chi in dchars for l in (0, 1, 2, 3)],
            order=150,
        )
    )

    def even_lattice(chi, l):
        return (
            lambda p: twisted_wp_sum(p.z, p.tau, chi, 2 * l),
            lambda p: math.factorial(2 * l + 1) * twisted_lattice_sum(chi, 2 * l + 2, p.z, p.tau, "n"),
            lambda p: (-1) ** (l + 1) * 2 ** (2 * l + 3) * lambert_trig_sum(chi, None, p.tau, p.z, "cos", 2 * l + 1),
        )

    def odd_lattice(chi, l):
        return (
            lambda p: twisted_wp_sum(p.z, p.tau, chi, 2 * l + 1),
            lambda p: -math.factorial(2 * l + 2) * twisted_lattice_sum(chi, 2 * l + 3, p.z, p.tau, "n"),
            lambda p: (-1) ** l * 2 ** (2 * l + 4) * lambert_trig_sum(chi, None, p.tau, p.z, "sin", 2 * l + 2),
        )

    recs.append(
        _pointwise(
            "lemma.wp-even-lattice",
            "sum chi(k) p^(2l)(z + k pi tau | N tau) = (2l+1)! sum chi(n)/(z + m pi + n pi tau)^{2l+2} = (-1)^{l+1} 2^{2l+3} sum n^{2l+1} chi(m) q^{mn} cos 2nz, l >= 1",
            [_c(f"{label},l={l}", *even_lattice(chi, l)) for label, chi in lat for l in (1, 2)],
            tolerance=1e-5,
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "lemma.wp-odd-lattice",
            "sum chi(k) p^(2l+1)(z + k pi tau | N tau) = -(2l+2)! sum chi(n)/(z + m pi + n pi tau)^{2l+3} = (-1)^l 2^{2l+4} sum n^{2l+2} chi(m) q^{mn} sin 2nz, l >= 0",
            [_c(f"{label},l={l}", *odd_lattice(chi, l)) for label, chi in lat for l in (0, 1)],
            tolerance=1e-5,
        )
    )

    def g_taylor(chi, k):
        def lhs(p):
            return taylor_coefficients(lambda w: g_twisted(w, p.tau, chi), 2 * k + 1, radius=0.5)[2 * k + 1]

        return lhs, (lambda p: -eisenstein_E_qexp(chi, 2 * k + 2, p.tau))

    def gwp_taylor(chi, k):
        def lhs(p):
            return taylor_coefficients(lambda w: twisted_wp_sum(w, p.tau, chi), 2 * k, radius=0.5)[2 * k]

        return lhs, (lambda p: (2 * k + 1) * eisenstein_E_qexp(chi, 2 * k + 2, p.tau))

    tau_only = SampleDomain()
    recs.append(
        _pointwise(
            "g.taylor-E",
            "g(z|tau;chi) = -sum_k E_{2k+2}(tau,chi) z^{2k+1}",
            [_c(f"{label},z^{2 * k + 1}", *g_taylor(chi, k)) for label, chi in TAYLOR_CHARS for k in (0, 1, 2)],
            tolerance=1e-8,
            domain=tau_only,
        )
    )
    recs.append(
        _pointwise(
            "g.wp-taylor-E",
            "sum chi(k) p(z + k pi tau | N tau) = sum_k (2k+1) E_{2k+2}(tau,chi) z^{2k}",
            [_c(f"{label},z^{2 * k}", *gwp_taylor(chi, k)) for label, chi in TAYLOR_CHARS for k in (0, 1, 2)],
            tolerance=1e-8,
            domain=tau_only,
        )
    )
    recs.append(
        _pointwise(
            "eisenstein.E-lattice",
            "E_{2k}(tau,chi) = pi^{-2k} sum chi(n)/(m + n tau)^{2k} = ((-1)^k 2^{2k+1}/(2k-1)!) sum n^{2k-1} chi(m) q^{mn}, k >= 2",
            [_c(f"{label},w={w}", (lambda p, c=chi, w=w: eisenstein_E_lattice(c, w, p.tau)), (lambda p, c=chi, w=w: eisenstein_E_qexp(c, w, p.tau))) for label, chi in lat for w in (4, 6)],
            tolerance=1e-6,
            domain=tau_only,
        )
    )

    def half_lattice(chi, l, shift, power, trig_weight, scale):
        def lhs(p):
            return lattice_sum(1.0, p.tau, power, lambda m, n: chi.values[n % chi.modulus], z=shift, exclude_origin=False)

        def rhs(p):
            return scale * lambert_trig_sum(chi, trig_weight, p.tau, 0, None, power - 1)

        return lhs, rhs

    def half_case(chi, l):
        scale = (-1) ** (l + 1) * 2 ** (2 * l + 3) * PI ** (2 * l + 2) / math.factorial(2 * l + 1)
        return half_lattice(chi, l, 0.5, 2 * l + 2, lambda n: (-1) ** n, scale)

    def third_case(chi, l):
        scale = (-1) ** (l + 1) * 2 ** (2 * l + 4) * PI ** (2 * l + 3) / math.factorial(2 * l + 2)
        return half_lattice(chi, l, 1 / 3, 2 * l + 3, _kron(-3), scale)

    def quarter_case(chi, l):
        scale = (-1) ** (l + 1) * 2 ** (2 * l + 4) * PI ** (2 * l + 3) / math.factorial(2 * l + 2)
        return half_lattice(chi, l, 0.25, 2 * l + 3, _kron(-4), scale)

    recs.append(
        _pointwise(
            "lattice.z-half",
            "sum chi(n)/(1/2 + m + n tau)^{2l+2} = ((-1)^{l+1} 2^{2l+3} pi^{2l+2}/(2l+1)!) sum (-1)^n n^{2l+1} chi(m) q^{mn}, l >= 1",
            [_c(f"{label},l={l}", *half_case(chi, l)) for label, chi in lat for l in (1, 2)],
            tolerance=1e-5,
            domain=tau_only,
        )
    )
    recs.append(
        _pointwise(
            "lattice.z-third",
            "sum chi(n)/(1/3 + m + n tau)^{2l+3} = ((-1)^{l+1} 2^{2l+4} pi^{2l+3}/(2l+2)!) sum n^{2l+2} (-3/n) chi(m) q^{mn}, l >= 0",
            [_c(f"{label},l={l}", *third_case(chi, l)) for label, chi in lat for l in (0, 1)],
            tolerance=1e-5,
            domain=tau_only,
            as_printed=True,
            note="sin(2n pi/3) = (sqrt(3)/2)(-3/n), so the displayed right side lacks a factor sqrt(3)/2",
        )
    )
    recs.append(
        _pointwise(
            "lattice.z-quarter",
            "sum chi(n)/(1/4 + m + n tau)^{2l+3} = ((-1)^{l+1} 2^{2l+4} pi^{2l+3}/(2l+2)!) sum n^{2l+2} (-4/n) chi(m) q^{mn}, l >= 0",
            [_c(f"{label},l={l}", *quarter_case(chi, l)) for label, chi in lat for l in (0, 1)],
            tolerance=1e-5,
            domain=tau_only,
        )
    )

    # the companion side
    def companion_taylor(chi, k):
        r = 0.5 * PI / chi.modulus

        def lhs(p):
            return taylor_coefficients(lambda w: g_companion(w, p.tau, chi, "theta"), 2 * k + 1, radius=r)[2 * k + 1]

        return lhs, (lambda p: -eisenstein_F_qexp(chi, 2 * k + 2, p.tau))

    def companion_wp_taylor(chi, k):
        r = 0.5 * PI / chi.modulus

        def lhs(p):
            return taylor_coefficients(lambda w: companion_wp_sum(w, p.tau, chi), 2 * k, radius=r)[2 * k]

        return lhs, (lambda p: (2 * k + 1) * eisenstein_F_qexp(chi, 2 * k + 2, p.tau))

    recs.append(
        _pointwise(
            "companion.taylor-F",
            "(1/tau) g(z/tau | -1/(N tau); chi) = -sum_k F_{2k+2}(tau,chi) z^{2k+1}",
            [_c(f"{label},z^{2 * k + 1}", *companion_taylor(chi, k)) for label, chi in TAYLOR_CHARS for k in (0, 1, 2)],
            tolerance=1e-8,
            domain=tau_only,
            note="F uses the normalisation 2^{2k+1}/(2k-1)! in weight 2k; see eisenstein.F-definition",
        )
    )
    recs.append(
        _pointwise(
            "companion.wp-taylor-F",
            "sum chi(k) p(z + k pi/N | tau) = sum_k (2k+1) F_{2k+2}(tau,chi) z^{2k}",
            [_c(f"{label},z^{2 * k}", *companion_wp_taylor(chi, k)) for label, chi in TAYLOR_CHARS for k in (0, 1, 2)],
            tolerance=1e-8,
            domain=tau_only,
        )
    )
    recs.append(
        _pointwise(
            "eisenstein.F-lattice",
            "F_{2k}(tau,chi) = (N/pi)^{2k} sum chi(m)/(m + n N tau)^{2k} = -B_{2k-1}(chi) + ((-1)^k 2^{2k+1}/(2k-1)!) sum n^{2k-1} g_n(chi) q^{mn}",
            [_c(f"{label},w={w}", (lambda p, c=chi, w=w: eisenstein_F_lattice(c, w, p.tau)), (lambda p, c=chi, w=w: eisenstein_F_qexp(c, w, p.tau))) for label, chi in lat for w in (4, 6)],
            tolerance=1e-6,
            domain=tau_only,
        )
    )

    def printed_F(chi, w):
        k = w // 2 - 1  # F_{2k+2}

        def value(p):
            N = chi.modulus
            gs = chi.gauss_sums()
            s = lambert_trig_sum(None, lambda n: gs[n % N], p.tau, 0, None, 2 * k + 1)
            return -cot_coefficient_B(chi, 2 * k + 1) + (-1) ** (k + 1) * 2 ** (2 * k + 1) / math.factorial(2 * k + 1) * s

        return value

    recs.append(
        _pointwise(
            "eisenstein.F-definition",
            "F_{2k+2}(tau,chi) := -B_{2k+1}(chi) + ((-1)^{k+1} 2^{2k+1}/(2k+1)!) sum n^{2k+1} g_n(chi) q^{mn}, compared with its lattice form",
            [_c(f"{label},w={w}", (lambda p, c=chi, w=w: eisenstein_F_lattice(c, w, p.tau)), printed_F(chi, w)) for label, chi in lat for w in (4, 6)],
            tolerance=1e-6,
            domain=tau_only,
            as_printed=True,
            note="the sine expansion of the companion forces 2^{2k+3} here, four times the displayed factor",
        )
    )
    recs.append(
        _pointwise(
            "eisenstein.E-F-relation",
            "E_{2k}(-1/(N tau), chi) = tau^{2k} F_{2k}(tau, chi)",
            [
                _c(f"{label},w={w}", (lambda p, c=chi, w=w: eisenstein_E_lattice(c, w, -1 / (c.modulus * p.tau))), (lambda p, c=chi, w=w: p.tau**w * eisenstein_F_lattice(c, w, p.tau)))
                for label, chi in lat
                for w in (4, 6)
            ],
            tolerance=1e-6,
            domain=tau_only,
        )
    )

    def companion_derivative(chi, l):
        N = chi.modulus

        def s1(p):
            return companion_wp_sum(p.z, p.tau, chi, l, "lambert")

        def s2(p):
            s = twisted_lattice_sum(chi, l + 2, N * p.z, p.tau, "m", scale_n=N)
            return (-1) ** l * math.factorial(l + 1) * N ** (l + 2) * s

        def s3(p):
            return -sum(chi(k) * _L(p.z + k * PI / N, p.tau, l + 1) for k in range(1, N) if chi(k) != 0)

        return s1, s2, s3

    recs.append(
        _pointwise(
            "companion.wp-derivative-lattice",
            "sum chi(k) p^(l)(z + k pi/N | tau) = (-1)^l (l+1)! N^{l+2} sum chi(m)/(Nz + m pi + n N pi tau)^{l+2} = -sum chi(k) (theta_1'/theta_1)^(l+1)(z + k pi/N | tau)",
            [_c(f"{label},l={l}", *companion_derivative(chi, l)) for label, chi in lat for l in (1, 2)],
            tolerance=1e-5,
            domain=SampleDomain(avoid=_moduli_avoid(lat)),
        )
    )

    def companion_cot(chi, l, parity):
        N = chi.modulus
        gs = chi.gauss_sums()
        gn = lambda n: gs[n % N]
        if parity == "even":
            return (
                lambda p: companion_wp_sum(p.z, p.tau, chi, 2 * l),
                lambda p: -cot_sum(chi, p.z, 1, 2 * l + 1) + (-1) ** (l + 1) * 2 ** (2 * l + 3) * lambert_trig_sum(None, gn, p.tau, p.z, "cos", 2 * l + 1),
            )
        return (
            lambda p: companion_wp_sum(p.z, p.tau, chi, 2 * l + 1),
            lambda p: -cot_sum(chi, p.z, 1, 2 * l + 2) + (-1) ** l * 2 ** (2 * l + 4) * lambert_trig_sum(None, gn, p.tau, p.z, "sin", 2 * l + 2),
        )

    recs.append(
        _pointwise(
            "companion.wp-cot-series",
            "sum chi(k) p^(2l)(z + k pi/N | tau) = -sum chi(k) cot^(2l+1)(z + k pi/N) + (-1)^{l+1} 2^{2l+3} sum n^{2l+1} g_n q^{mn} cos 2nz, and the odd analogue",
            [_c(f"{label},{par},l={l}", *companion_cot(chi, l, par)) for label, chi in TAYLOR_CHARS for l in (0, 1) for par in ("even", "odd")],
            tolerance=1e-8,
            domain=SampleDomain(avoid=_moduli_avoid(TAYLOR_CHARS)),
        )
    )

    # cotangent sums and L-values
    def partial_fractions(chi, l):
        N = chi.modulus
        M = 200_000
        m = np.arange(-M, M + 1)
        w = chi.values[m % N]

        def lhs(p):
            return complex(np.sum(w / (N * p.z + m * PI) ** (l + 1)))

        def rhs(p):
            return cot_sum(chi, p.z, 1, l) / (math.factorial(l) * N ** (l + 1))

        return lhs, rhs

    recs.append(
        _pointwise(
            "cot.partial-fractions",
            "sum_m chi(m)/(Nz + m pi)^{l+1} = (1/(l! N^{l+1})) sum chi(k) cot^(l)(z + k pi/N)",
            [_c(f"{label},l={l}", *partial_fractions(chi, l)) for label, chi in lat for l in (1, 2, 3)],
            tolerance=1e-8,
            domain=SampleDomain(z_radius=0.5, avoid=_moduli_avoid(lat)),
            as_printed=True,
            note="expanding cot^(l) in partial fractions gives a factor (-1)^l; the displayed form holds for even l only",
        )
    )

    def two_sided_L(chi, s):
        N = chi.modulus
        one = sum(chi(a) * float(hurwitz_zeta(s, a / N)) for a in range(1, N + 1) if chi(a) != 0) / N**s
        return one + chi(N - 1) * (-1) ** s * one

    def l_value(chi, l):
        N = chi.modulus
        return (
            lambda p: two_sided_L(chi, l + 1),
            lambda p: (PI / N) ** (l + 1) / math.factorial(l) * sum(chi(k) * cot_derivative(k * PI / N, l) for k in range(1, N) if chi(k) != 0),
        )

    recs.append(
        _pointwise(
            "cot.L-value",
            "sum_{m != 0} chi(m)/m^{l+1} = (1/l!) (pi/N)^{l+1} sum chi(k) cot^(l)(k pi/N)",
            [_c(f"{label},l={l}", *l_value(chi, l)) for label, chi in lat for l in (1, 3)],
            tolerance=1e-9,
            domain=SampleDomain(),
            as_printed=True,
            note="the correct right side carries (-1)^l; odd l exposes the sign",
        )
    )

    def b_coeff(chi, l):
        N = chi.modulus

        def taylor(p):
            return taylor_coefficients(lambda w: cot_sum(chi, w, 1), l, radius=0.5 * PI / N)[l]

        return (
            taylor,
            lambda p: cot_coefficient_B(chi, l, "derivative"),
            lambda p: (N / PI) ** (l + 1) * two_sided_L(chi, l + 1),
        )

    recs.append(
        _pointwise(
            "cot.B-coefficients",
            "B_l(chi) = [z^l] sum chi(k) cot(z + k pi/N) = (1/l!) sum chi(k) cot^(l)(k pi/N) = (N/pi)^{l+1} sum chi(m)/m^{l+1}",
            [_c(f"{label},l={l}", *b_coeff(chi, l)) for label, chi in lat for l in (1, 3, 5)],
            tolerance=1e-9,
            domain=SampleDomain(),
            as_printed=True,
            note="the last equality needs (-1)^l; the first two agree",
        )
    )

    # transformation laws
    for which in ("E", "F"):
        for group in ("gamma0", "gamma1"):
            mult = {"E": "conj(chi(a))", "F": "chi(a)"}[which] if group == "gamma0" else "1"
            recs.append(
                IdentityRecord(
                    f"modular.{which}.{group}",
                    "modular",
                    f"{which}_{{2k}}((a tau + b)/(c tau + d), chi) = {mult} (c tau + d)^{{2k}} {which}_{{2k}}(tau, chi) on {group}(N)",
                    tolerance=1e-5,
                    params={
                        "group": group,
                        "which": which,
                        "cases": [(f"{label},w={w}", chi, w) for label, chi in _named("kronecker:5", "kronecker:8", "kronecker:12") for w in (4, 6)],
                    },
                )
            )
    return recs


# ---------------------------------------------------------------------------
# moduli 8, 10, 12 and 5


def _four_step(N: int):
    def lhs(p):
        t = N * p.tau
        s = PI * p.tau
        return _L(p.z - s, t) + _L(p.z + s, t) - _L(p.z - 3 * s, t) - _L(p.z + 3 * s, t)

    def rhs(p):
        t = N * p.tau
        s = PI * p.tau
        num = -_th1p0(t) * _th(1, 2 * p.z, t) * _th(1, 2 * s, t) * _th(1, 4 * s, t)
        den = _th(1, p.z - s, t) * _th(1, p.z + s, t) * _th(1, p.z - 3 * s, t) * _th(1, p.z + 3 * s, t)
        return num / den

    return lhs, rhs


def _theta_quad(N):
    def lhs(p):
        t = N * p.tau
        s = PI * p.tau
        return _th(1, p.z - s, t) * _th(1, p.z + s, t) * _th(1, p.z - 3 * s, t) * _th(1, p.z + 3 * s, t)

    return lhs


def _theta_pair(N):
    return lambda p: _th(1, 2 * PI * p.tau, N * p.tau) * _th(1, 4 * PI * p.tau, N * p.tau)


def _explicit_companion(chi, root):
    """sum chi(k) cot(z - k pi/N) + 4 root sum chi(n) q^n/(1-q^n) sin 2nz."""
    return lambda p: cot_sum(chi, p.z, sign=-1) + 4 * root * lambert_trig_sum(None, chi, p.tau, p.z, "sin")


def _d8_records() -> list[IdentityRecord]:
    recs = []
    chi = CHI8

    def prod_rhs(p):
        t = p.tau
        return _P(t, (4, 1), (2, 2), (8, -1)) / 2 * _th(1, 2 * p.z, 8 * t) / _th(4, p.z, 2 * t)

    def eta_rhs(p):
        t = p.tau
        return _eta(t, 4) * _eta(t, 2) ** 2 / (2 * _eta(t, 8)) * _th(1, 2 * p.z, 8 * t) / _th(4, p.z, 2 * t)

    recs.append(
        _pointwise(
            "d8.g-product",
            "sum (q^n - q^{3n} - q^{5n} + q^{7n})/(1 - q^{8n}) sin 2nz = (q^4;q^4)(q^2;q^2)^2/(2(q^8;q^8)) theta_1(2z|8tau)/theta_4(z|2tau)",
            [_c("chi8", lambda p: _ratio_sum(chi, p.tau, p.z, "sin"), prod_rhs)],
        )
    )
    recs.append(
        _pointwise(
            "d8.g-eta",
            "g(z|tau;chi_8) = eta(4tau) eta^2(2tau)/(2 eta(8tau)) theta_1(2z|8tau)/theta_4(z|2tau)",
            [_c("chi8", lambda p: g_twisted(p.z, p.tau, chi), eta_rhs)],
            as_printed=True,
            note="g is four times the sine sum, so this eta form and d8.g-product cannot both hold",
        )
    )
    recs.append(
        _pointwise(
            "d8.four-variable-step",
            "L(z-pi tau) + L(z+pi tau) - L(z-3pi tau) - L(z+3pi tau) = -theta_1'(0) theta_1(2z) theta_1(2pi tau) theta_1(4pi tau)/prod theta_1(z +- pi tau, z +- 3pi tau), all at 8tau",
            [_c("N=8", *_four_step(8))],
        )
    )
    recs.append(
        _exact(
            "d8.theta1-derivative",
            "theta_1'(0|8tau) = 2q (q^8;q^8)^3",
            [_c("8tau", lambda T: _theta1p_series(8, T), lambda T: _eq(T, [(8, 3)], 1, 2))],
        )
    )
    recs.append(
        _pointwise(
            "d8.theta-pair",
            "theta_1(2pi tau|8tau) theta_1(4pi tau|8tau) = -q^{-1} (q^2;q^2)(q^4;q^4)",
            [_c("N=8", _theta_pair(8), lambda p: -_qr(p.tau, -1) * _P(p.tau, (2, 1), (4, 1)))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "d8.theta-quad",
            "theta_1(z-pi tau) theta_1(z+pi tau) theta_1(z-3pi tau) theta_1(z+3pi tau) at 8tau = (q^8;q^8)^4 theta_4(z|2tau)/(q^2;q^2)",
            [_c("N=8", _theta_quad(8), lambda p: _P(p.tau, (8, 4), (2, -1)) * _th(4, p.z, 2 * p.tau))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _exact(
            "d8.item1",
            "sum n (q^n - q^{3n} - q^{5n} + q^{7n})/(1 - q^{8n}) = q (q^2;q^2)^3 (q^4;q^4)(q^8;q^8)^2/(q;q)^2",
            [_c("chi8", lambda T: _ratio_series(chi, T, power=1), lambda T: _eq(T, [(2, 3), (4, 1), (8, 2), (1, -2)], 1))],
        )
    )
    recs.append(
        _exact(
            "d8.item2a",
            "sum (n/3) (q^n - q^{3n} - q^{5n} + q^{7n})/(1 - q^{8n}) = q (q;q)(q^4;q^4)(q^6;q^6)(q^24;q^24)/((q^3;q^3)(q^8;q^8))",
            [_c("chi8", lambda T: _ratio_series(chi, T, _kron(-3)), lambda T: _eq(T, [(1, 1), (4, 1), (6, 1), (24, 1), (3, -1), (8, -1)], 1))],
        )
    )
    recs.append(
        _exact(
            "d8.item2b",
            "sum (-4/n) (q^n - q^{3n} - q^{5n} + q^{7n})/(1 - q^{8n}) = q (q^2;q^2)^2 (q^16;q^16)^2/((q^4;q^4)(q^8;q^8))",
            [_c("chi8", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(2, 2), (16, 2), (4, -1), (8, -1)], 1))],
        )
    )

    def comp_lhs(p):
        return cmath.sin(2 * p.z) / cmath.cos(4 * p.z) - 2 * lambert_trig_sum(None, chi, p.tau, p.z, "sin")

    def comp_rhs(p):
        t = p.tau
        return _qr(t, Fraction(3, 8)) * _P(t, (4, 2), (2, 1), (1, -1)) * _th(1, 2 * p.z, t) / _th(2, 4 * p.z, 4 * t)

    avoid8 = ((PI / 4, PI / 8), (PI / 8, 0.0), (PI / 2, 0.0))
    recs.append(
        _pointwise(
            "d8.companion-product",
            "sin 2z/cos 4z - 2 sum chi_8(n) q^n/(1-q^n) sin 2nz = q^{3/8} (q^4;q^4)^2 (q^2;q^2)/(q;q) theta_1(2z|tau)/theta_2(4z|4tau)",
            [_c("chi8", comp_lhs, comp_rhs)],
            domain=SampleDomain(avoid=avoid8),
        )
    )

    def comp_eta(p):
        t = p.tau
        return -4 * math.sqrt(2) * _eta(t, 2) * _eta(t, 4) ** 2 * _th(1, 2 * p.z, t) / (_eta(t) * _th(2, 4 * p.z, 4 * t))

    recs.append(
        _pointwise(
            "d8.companion-eta",
            "sum chi_8(k) cot(z - k pi/8) + 4 sqrt(8) sum chi_8(n) q^n/(1-q^n) sin 2nz = -4 sqrt(2) eta(2tau) eta^2(4tau) theta_1(2z|tau)/(eta(tau) theta_2(4z|4tau))",
            [_c("chi8", _explicit_companion(chi, math.sqrt(8)), comp_eta)],
            domain=SampleDomain(avoid=avoid8),
        )
    )
    recs.append(
        _pointwise(
            "d8.cot-limit",
            "sum chi_8(k) cot(z - k pi/8) = -4 sqrt(2) sin 2z/cos 4z",
            [_c("chi8", lambda p: cot_sum(chi, p.z, sign=-1), lambda p: -4 * math.sqrt(2) * cmath.sin(2 * p.z) / cmath.cos(4 * p.z))],
            domain=SampleDomain(avoid=avoid8),
            kind="limit_q0",
        )
    )
    recs.append(
        _exact(
            "d8.companion-item1",
            "1 - 2 sum chi_8(n) n q^n/(1-q^n) = (q;q)^2 (q^2;q^2)(q^4;q^4)^3/(q^8;q^8)^2",
            [_c("chi8", lambda T: _one(T) - 2 * lambert_twisted_expand(chi, "n_over_1-q^n", T), lambda T: _eq(T, [(1, 2), (2, 1), (4, 3), (8, -2)]))],
        )
    )
    recs.append(
        _exact(
            "d8.companion-item2a",
            "1 + sum (-24/n) q^n/(1-q^n) = (q^2;q^2)(q^3;q^3)(q^8;q^8)(q^12;q^12)/((q;q)(q^24;q^24))",
            [_c("chi8", lambda T: _one(T) + lambert_series(_kron(-24), T), lambda T: _eq(T, [(2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)]))],
        )
    )
    recs.append(
        _exact(
            "d8.companion-item2b",
            "1 + 2 sum (-32/n) q^n/(1-q^n) = (q^2;q^2)^3 (q^4;q^4)^3/((q;q)^2 (q^8;q^8)^2)",
            [_c("chi8", lambda T: _one(T) + 2 * lambert_series(_kron(-32), T), lambda T: _eq(T, [(2, 3), (4, 3), (1, -2), (8, -2)]))],
        )
    )
    return recs


def _d10_records() -> list[IdentityRecord]:
    recs = []
    chi = PSI10

    def g_rhs(p):
        t = p.tau
        return _eta(t, 2) ** 2 * _th(1, 2 * p.z, 10 * t) * _th(4, p.z, 10 * t) / (2 * _eta(t, 10) * _th(4, p.z, 2 * t))

    recs.append(
        _pointwise(
            "d10.g-product",
            "sum (q^n - q^{3n} - q^{7n} + q^{9n})/(1 - q^{10n}) sin 2nz = eta^2(2tau) theta_1(2z|10tau) theta_4(z|10tau)/(2 eta(10tau) theta_4(z|2tau))",
            [_c("psi10", lambda p: _ratio_sum(chi, p.tau, p.z, "sin"), g_rhs)],
        )
    )
    recs.append(_pointwise("d10.four-variable-step", "the four-variable step at 10tau", [_c("N=10", *_four_step(10))]))
    recs.append(
        _exact(
            "d10.theta1-derivative",
            "theta_1'(0|10tau) = 2 q^{5/4} (q^10;q^10)^3",
            [_c("10tau", lambda T: _theta1p_series(10, T), lambda T: _eq(T, [(10, 3)], Fraction(5, 4), 2))],
        )
    )
    recs.append(
        _pointwise(
            "d10.theta-pair",
            "theta_1(2pi tau|10tau) theta_1(4pi tau|10tau) = -eta(2tau) eta(10tau)",
            [_c("N=10", _theta_pair(10), lambda p: -_eta(p.tau, 2) * _eta(p.tau, 10))],
            domain=SampleDomain(),
            as_printed=True,
            note="the left side equals -q^{-1} eta(2tau) eta(10tau); the displayed form drops q^{-1}",
        )
    )
    recs.append(
        _pointwise(
            "d10.theta-pair.corrected",
            "theta_1(2pi tau|10tau) theta_1(4pi tau|10tau) = -q^{-1} eta(2tau) eta(10tau)",
            [_c("N=10", _theta_pair(10), lambda p: -_qr(p.tau, -1) * _eta(p.tau, 2) * _eta(p.tau, 10))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _pointwise(
            "d10.theta-quad",
            "theta_1(z-pi tau) theta_1(z+pi tau) theta_1(z-3pi tau) theta_1(z+3pi tau) at 10tau = q (q^10;q^10)^5 theta_4(z|2tau)/((q^2;q^2) theta_4(z|10tau))",
            [_c("N=10", _theta_quad(10), lambda p: _qr(p.tau, 1) * _P(p.tau, (10, 5), (2, -1)) * _th(4, p.z, 2 * p.tau) / _th(4, p.z, 10 * p.tau))],
            domain=SampleDomain(),
        )
    )
    recs.append(
        _exact(
            "d10.theta4-zero",
            "theta_4(0|2tau) = (q;q)^2/(q^2;q^2)",
            [_c("2tau", lambda T: theta_constant_expand(4, 2, T), lambda T: _eq(T, [(1, 2), (2, -1)]))],
        )
    )
    recs.append(
        _exact(
            "d10.theta2-zero",
            "theta_2(0|tau) = 2 q^{1/8} (q^2;q^2)^2/(q;q) and theta_2(0|5tau) = 2 q^{5/8} (q^10;q^10)^2/(q^5;q^5)",
            [
                _c("tau", lambda T: theta_constant_expand(2, 1, T), lambda T: _eq(T, [(2, 2), (1, -1)], Fraction(1, 8), 2)),
                _c("5tau", lambda T: theta_constant_expand(2, 5, T), lambda T: _eq(T, [(10, 2), (5, -1)], Fraction(5, 8), 2)),
            ],
        )
    )
    recs.append(
        _exact(
            "d10.item1",
            "sum n (q^n - q^{3n} - q^{7n} + q^{9n})/(1 - q^{10n}) = q (q^2;q^2)^3 (q^5;q^5)^2 (q^10;q^10)/(q;q)^2",
            [_c("psi10", lambda T: _ratio_series(chi, T, power=1), lambda T: _eq(T, [(2, 3), (5, 2), (10, 1), (1, -2)], 1))],
        )
    )
    recs.append(
        _exact(
            "d10.item1-lambert",
            "sum psi(n) q^n/(1-q^n)^2 = q (q^2;q^2)^3 (q^5;q^5)^2 (q^10;q^10)/(q;q)^2",
            [_c("psi10", lambda T: lambert_twisted_expand(chi, "over_(1-q^n)^2", T), lambda T: _eq(T, [(2, 3), (5, 2), (10, 1), (1, -2)], 1))],
        )
    )
    recs.append(
        _exact(
            "d10.item2a",
            "sum (n/3) (q^n - q^{3n} - q^{7n} + q^{9n})/(1 - q^{10n}) = q (q;q)(q^6;q^6)(q^10;q^10)(q^15;q^15)/((q^3;q^3)(q^5;q^5))",
            [_c("psi10", lambda T: _ratio_series(chi, T, _kron(-3)), lambda T: _eq(T, [(1, 1), (6, 1), (10, 1), (15, 1), (3, -1), (5, -1)], 1))],
        )
    )
    recs.append(
        _exact(
            "d10.item2b",
            "sum (-4/n) (q^n - q^{3n} - q^{7n} + q^{9n})/(1 - q^{10n}) = q (q^2;q^2)^2 (q^8;q^8)(q^20;q^20)^4/((q^4;q^4)^2 (q^10;q^10)^2 (q^40;q^40))",
            [_c("psi10", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(2, 2), (8, 1), (20, 4), (4, -2), (10, -2), (40, -1)], 1))],
        )
    )

    def sign5(n):
        return 0 if n % 5 == 0 else (-1) ** n

    def comp_lhs(p):
        z, t = p.z, p.tau
        head = cmath.sin(2 * z) * cmath.cos(z) / cmath.cos(5 * z)
        return head - lambert_trig_sum(None, chi, t, z, "sin") - lambert_trig_sum(None, sign5, 2 * t, 2 * z, "sin")

    def comp_rhs(p):
        t = p.tau
        return _eta(t, 5) ** 2 * _th(1, 2 * p.z, t) * _th(2, p.z, t) / (2 * _eta(t) * _th(2, 5 * p.z, 5 * t))

    avoid10 = ((PI / 10, 0.0),)
    recs.append(
        _pointwise(
            "d10.companion-product",
            "sin 2z cos z/cos 5z - sum psi(n) q^n/(1-q^n) sin 2nz - sum_{5 !| n} (-1)^n q^{2n}/(1-q^{2n}) sin 4nz = eta^2(5tau) theta_1(2z|tau) theta_2(z|tau)/(2 eta(tau) theta_2(5z|5tau))",
            [_c("psi10", comp_lhs, comp_rhs)],
            domain=SampleDomain(avoid=avoid10),
            as_printed=True,
            note="the even-index weights come from the misprinted Gauss table; see d10.companion-product.corrected",
        )
    )

    def comp_lhs_true(p):
        z, t = p.z, p.tau
        head = cmath.sin(2 * z) * cmath.cos(z) / cmath.cos(5 * z)
        return head - lambert_trig_sum(None, chi, t, z, "sin") - lambert_trig_sum(None, _kron(5), 2 * t, 2 * z, "sin")

    recs.append(
        _pointwise(
            "d10.companion-product.corrected",
            "sin 2z cos z/cos 5z - sum psi(n) q^n/(1-q^n) sin 2nz - sum (n/5) q^{2n}/(1-q^{2n}) sin 4nz = eta^2(5tau) theta_1(2z|tau) theta_2(z|tau)/(2 eta(tau) theta_2(5z|5tau))",
            [_c("psi10", comp_lhs_true, comp_rhs)],
            domain=SampleDomain(avoid=avoid10),
            note="same specialization with the Gauss sums g_{2m}(psi) = (m/5) sqrt5",
        )
    )

    def comp_eta(p):
        t = p.tau
        return -2 * math.sqrt(5) * _eta(t, 5) ** 2 * _th(1, 2 * p.z, t) * _th(2, p.z, t) / (_eta(t) * _th(2, 5 * p.z, 5 * t))

    recs.append(
        _pointwise(
            "d10.companion-eta",
            "sum psi(k) cot(z - k pi/10) + 4 sum g_n(psi) q^n/(1-q^n) sin 2nz = -2 sqrt(5) eta^2(5tau) theta_1(2z|tau) theta_2(z|tau)/(eta(tau) theta_2(5z|5tau))",
            [_c("psi10", lambda p: g_companion(p.z, p.tau, chi, "cot_series"), comp_eta)],
            domain=SampleDomain(avoid=avoid10),
        )
    )

    def imag_lhs(p):
        t = p.tau
        return g_companion(p.z, t, chi, "transform")

    def imag_rhs(p):
        z, t = p.z, p.tau
        num = _eta(-1 / (5 * t)) ** 2 * theta(1, 2 * z / t, -1 / t) * theta(4, z / t, -1 / t)
        return num / (2 * _eta(-1 / t) * theta(4, z / t, -1 / (5 * t))) * 4 / t

    recs.append(
        _pointwise(
            "d10.companion-imaginary",
            "(1/tau) g(z/tau | -1/(10tau); psi) equals the psi10 product form transformed under tau -> -1/(10 tau)",
            [_c("psi10", imag_lhs, imag_rhs)],
            domain=SampleDomain(avoid=avoid10),
            note="uses g = 4 x (the sine sum) together with d10.g-product",
        )
    )
    recs.append(
        _pointwise(
            "d10.cot-limit",
            "sum psi(k) cot(z - k pi/10) = -4 sqrt(5) sin 2z cos z/cos 5z",
            [_c("psi10", lambda p: cot_sum(chi, p.z, sign=-1), lambda p: -4 * math.sqrt(5) * cmath.sin(2 * p.z) * cmath.cos(p.z) / cmath.cos(5 * p.z))],
            domain=SampleDomain(avoid=avoid10),
            kind="limit_q0",
        )
    )

    root5 = AlgebraicValue.sqrt_discriminant(5)
    table = {1: 1, 4: 1, 8: 1, 9: 1, 2: -1, 3: -1, 6: -1, 7: -1, 0: 0, 5: 0}
    recs.append(
        _exact(
            "d10.gauss-table",
            "g_n(psi) = sqrt5 for n = 1, 4, 8, 9; -sqrt5 for n = 2, 3, 6, 7; 0 for n = 0, 5",
            [_c("psi10", lambda T: FormalSeries([gauss_sum(chi, n) for n in range(min(T, 10))]), lambda T: FormalSeries([root5 * table[n] for n in range(min(T, 10))]))],
            order=10,
            as_printed=True,
            note="direct evaluation gives g_n(psi) = (n/5) sqrt5 for odd n and (m/5) sqrt5 for n = 2m, so the signs at n = 2 and n = 4 are swapped",
        )
    )
    recs.append(
        _exact(
            "d10.companion-item1",
            "1 - sum psi(n) n q^n/(1-q^n) - 2 sum_{5 !| n} (-1)^n n q^{2n}/(1-q^{2n}) = (q;q)(q^2;q^2)^2 (q^5;q^5)^3/(q^10;q^10)^2",
            [
                _c(
                    "psi10",
                    lambda T: _one(T) - lambert_twisted_expand(chi, "n_over_1-q^n", T) - 2 * lambert_series(lambda n: sign5(n) * n, T, scale=2),
                    lambda T: _eq(T, [(1, 1), (2, 2), (5, 3), (10, -2)]),
                )
            ],
            as_printed=True,
            note="the even-index weights come from the misprinted Gauss table; see d10.companion-item1.corrected",
        )
    )
    recs.append(
        _exact(
            "d10.companion-item1.corrected",
            "1 - sum psi(n) n q^n/(1-q^n) - 2 sum (n/5) n q^{2n}/(1-q^{2n}) = (q;q)(q^2;q^2)^2 (q^5;q^5)^3/(q^10;q^10)^2",
            [
                _c(
                    "psi10",
                    lambda T: _one(T) - lambert_twisted_expand(chi, "n_over_1-q^n", T) - 2 * lambert_series(lambda n: kronecker(5, n) * n, T, scale=2),
                    lambda T: _eq(T, [(1, 1), (2, 2), (5, 3), (10, -2)]),
                )
            ],
            note="same specialization with the Gauss sums g_{2m}(psi) = (m/5) sqrt5",
        )
    )
    s6 = [0, 1, 1, 0, -1, -1]
    recs.append(
        _exact(
            "d10.companion-item2a",
            "1 - sum psi(n) (n/3) q^n/(1-q^n) - (2/sqrt3) sum_{5 !| n} sin(n pi/3) q^{2n}/(1-q^{2n}) = (q;q)(q^6;q^6)(q^10;q^10)(q^15;q^15)/((q^2;q^2)(q^30;q^30))",
            [
                _c(
                    "psi10",
                    lambda T: _one(T) - lambert_series(lambda n: chi.int_value(n) * kronecker(-3, n), T) - lambert_series(lambda n: 0 if n % 5 == 0 else s6[n % 6], T, scale=2),
                    lambda T: _eq(T, [(1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1)]),
                )
            ],
            as_printed=True,
            note="the even-index weights come from the misprinted Gauss table; see d10.companion-item2a.corrected",
        )
    )
    recs.append(
        _exact(
            "d10.companion-item2a.corrected",
            "1 - sum psi(n) (n/3) q^n/(1-q^n) + sum (n/5)(n/3) q^{2n}/(1-q^{2n}) = (q;q)(q^6;q^6)(q^10;q^10)(q^15;q^15)/((q^2;q^2)(q^30;q^30))",
            [
                _c(
                    "psi10",
                    lambda T: _one(T) - lambert_series(lambda n: chi.int_value(n) * kronecker(-3, n), T) + lambert_series(lambda n: kronecker(5, n) * kronecker(-3, n), T, scale=2),
                    lambda T: _eq(T, [(1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1)]),
                )
            ],
            note="same specialization at z = pi/3 with the Gauss sums g_{2m}(psi) = (m/5) sqrt5",
        )
    )
    recs.append(
        _exact(
            "d10.companion-item2b",
            "1 + sum psi(n) (-4/n) q^n/(1-q^n) = (q^2;q^2)(q^4;q^4)(q^5;q^5)(q^10;q^10)/((q;q)(q^20;q^20))",
            [
                _c(
                    "psi10",
                    lambda T: _one(T) + lambert_series(lambda n: chi.int_value(n) * kronecker(-4, n), T),
                    lambda T: _eq(T, [(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)]),
                )
            ],
        )
    )
    return recs


def _d12_records() -> list[IdentityRecord]:
    recs = []
    chi = CHI12

    def item1_rhs(p):
        z, t = p.z, p.tau
        num = _eta(t, 2) * _eta(t, 4) * _eta(t, 6) ** 3 * _th(1, z, 3 * t) * _th(1, 2 * z, 12 * t)
        den = 2 * _eta(t, 3) * _eta(t, 12) ** 2 * _th(1, z, 6 * t) * _th(4, z, 2 * t)
        return num / den

    recs.append(
        _pointwise(
            "d12.item1",
            "sum (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) sin 2nz = eta(2tau) eta(4tau) eta^3(6tau) theta_1(z|3tau) theta_1(2z|12tau)/(2 eta(3tau) eta^2(12tau) theta_1(z|6tau) theta_4(z|2tau))",
            [_c("chi12", lambda p: _ratio_sum(chi, p.tau, p.z, "sin"), item1_rhs)],
        )
    )
    recs.append(
        _exact(
            "d12.item2",
            "sum n (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) = q (q^2;q^2)^2 (q^3;q^3)^2 (q^4;q^4)(q^12;q^12)/(q;q)^2",
            [_c("chi12", lambda T: _ratio_series(chi, T, power=1), lambda T: _eq(T, [(2, 2), (3, 2), (4, 1), (12, 1), (1, -2)], 1))],
        )
    )
    recs.append(
        _exact(
            "d12.item3a",
            "sum (n/3) (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) = q (q;q)(q^4;q^4)(q^6;q^6)^4 (q^9;q^9)(q^36;q^36)/((q^2;q^2)(q^3;q^3)^2 (q^12;q^12)^2 (q^18;q^18))",
            [_c("chi12", lambda T: _ratio_series(chi, T, _kron(-3)), lambda T: _eq(T, [(1, 1), (4, 1), (6, 4), (9, 1), (36, 1), (2, -1), (3, -2), (12, -2), (18, -1)], 1))],
        )
    )
    recs.append(
        _exact(
            "d12.item3b",
            "sum (-4/n) (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) = q (q;q)(q^2;q^2)(q^6;q^6)(q^8;q^8)(q^24;q^24)/((q^4;q^4)(q^12;q^12))",
            [_c("chi12", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(1, 1), (2, 1), (6, 1), (8, 1), (24, 1), (4, -1), (12, -1)], 1))],
            as_printed=True,
            note="the left side has only even powers beyond q; the factor (q;q) on the right is spurious, see d12.item3b.corrected",
        )
    )
    recs.append(
        _exact(
            "d12.item3b.corrected",
            "sum (-4/n) (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) = q (q^2;q^2)(q^6;q^6)(q^8;q^8)(q^24;q^24)/((q^4;q^4)(q^12;q^12))",
            [_c("chi12", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(2, 1), (6, 1), (8, 1), (24, 1), (4, -1), (12, -1)], 1))],
        )
    )

    def item4_lhs(p):
        return cmath.sin(4 * p.z) / cmath.cos(6 * p.z) - 2 * lambert_trig_sum(None, chi, p.tau, p.z, "sin")

    def item4_rhs(p):
        z, t = p.z, p.tau
        num = _eta(t, 2) ** 3 * _eta(t, 3) * _eta(t, 6) * _th(1, 4 * z, 4 * t) * _th(1, 2 * z, t)
        den = _eta(t) ** 2 * _eta(t, 4) * _th(1, 2 * z, 2 * t) * _th(2, 6 * z, 6 * t)
        return num / den

    recs.append(
        _pointwise(
            "d12.item4",
            "sin 4z/cos 6z - 2 sum (12/n) q^n/(1-q^n) sin 2nz = eta^3(2tau) eta(3tau) eta(6tau) theta_1(4z|4tau) theta_1(2z|tau)/(eta^2(tau) eta(4tau) theta_1(2z|2tau) theta_2(6z|6tau))",
            [_c("chi12", item4_lhs, item4_rhs)],
            domain=SampleDomain(avoid=((PI / 6, PI / 12), (PI / 4, 0.0))),
        )
    )
    recs.append(
        _exact(
            "d12.item5",
            "1 - sum (12/n) n q^n/(1-q^n) = (q;q)(q^3;q^3)(q^4;q^4)^2 (q^6;q^6)^2/(q^12;q^12)^2",
            [_c("chi12", lambda T: _one(T) - lambert_twisted_expand(chi, "n_over_1-q^n", T), lambda T: _eq(T, [(1, 1), (3, 1), (4, 2), (6, 2), (12, -2)]))],
        )
    )
    recs.append(
        _exact(
            "d12.item6a",
            "1 + 2 sum (-36/n) q^n/(1-q^n) = (q^2;q^2)^3 (q^3;q^3)^2 (q^6;q^6)/((q;q)^2 (q^4;q^4)(q^12;q^12))",
            [_c("chi12", lambda T: _one(T) + 2 * lambert_series(_kron(-36), T), lambda T: _eq(T, [(2, 3), (3, 2), (6, 1), (1, -2), (4, -1), (12, -1)]))],
        )
    )
    recs.append(
        _exact(
            "d12.item6b",
            "sum (-4/n) (q^n - q^{5n} - q^{7n} + q^{11n})/(1 - q^{12n}) = q (q^4;q^4)^2 (q^6;q^6)(q^12;q^12)^3/((q^2;q^2)(q^24;q^24))",
            [_c("chi12", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(4, 2), (6, 1), (12, 3), (2, -1), (24, -1)], 1))],
            as_printed=True,
            note="the left side is the same series as in d12.item3b; its product form is d12.item3b.corrected",
        )
    )
    return recs


def _d5_records() -> list[IdentityRecord]:
    recs = []
    chi = CHI5

    def item1_rhs(p):
        z, t = p.z, p.tau
        pre = -_qr(t, Fraction(-1, 8)) * _P(t, (1, 2), (5, -1)) / 2
        return pre * _th(1, z, 5 * t) * _th(1, 2 * z, 5 * t) / _th(1, z, t)

    recs.append(
        _pointwise(
            "d5.item1",
            "sum (q^n - q^{2n} - q^{3n} + q^{4n})/(1 - q^{5n}) sin 2nz = -q^{-1/8} (q;q)^2/(2(q^5;q^5)) theta_1(z|5tau) theta_1(2z|5tau)/theta_1(z|tau)",
            [_c("chi5", lambda p: _ratio_sum(chi, p.tau, p.z, "sin"), item1_rhs)],
            as_printed=True,
            note="both sides agree up to an overall sign; near q = 0 the left side is 2qz and the right side -2qz",
        )
    )
    recs.append(
        _pointwise(
            "d5.item1.corrected",
            "sum (q^n - q^{2n} - q^{3n} + q^{4n})/(1 - q^{5n}) sin 2nz = q^{-1/8} (q;q)^2/(2(q^5;q^5)) theta_1(z|5tau) theta_1(2z|5tau)/theta_1(z|tau)",
            [_c("chi5", lambda p: _ratio_sum(chi, p.tau, p.z, "sin"), lambda p: -item1_rhs(p))],
        )
    )
    recs.append(
        _exact(
            "d5.item2",
            "sum (n/5) q^n/(1-q^n)^2 = q (q^5;q^5)^5/(q;q)",
            [_c("chi5", lambda T: lambert_twisted_expand(chi, "over_(1-q^n)^2", T), lambda T: _eq(T, [(5, 5), (1, -1)], 1))],
        )
    )
    recs.append(
        _exact(
            "d5.item3a",
            "sum (n/3) (q^n - q^{2n} - q^{3n} + q^{4n})/(1 - q^{5n}) = q (q;q)^2 (q^15;q^15)^2/((q^3;q^3)(q^5;q^5))",
            [_c("chi5", lambda T: _ratio_series(chi, T, _kron(-3)), lambda T: _eq(T, [(1, 2), (15, 2), (3, -1), (5, -1)], 1))],
        )
    )
    recs.append(
        _exact(
            "d5.item3b",
            "sum (-4/n) (q^n - q^{2n} - q^{3n} + q^{4n})/(1 - q^{5n}) = q (q;q)(q^2;q^2)(q^10;q^10)(q^20;q^20)/(2(q^4;q^4)(q^5;q^5))",
            [_c("chi5", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1)], 1, Fraction(1, 2)))],
            as_printed=True,
            note="the identity holds without the factor 1/2, see d5.item3b.corrected",
        )
    )
    recs.append(
        _exact(
            "d5.item3b.corrected",
            "sum (-4/n) (q^n - q^{2n} - q^{3n} + q^{4n})/(1 - q^{5n}) = q (q;q)(q^2;q^2)(q^10;q^10)(q^20;q^20)/((q^4;q^4)(q^5;q^5))",
            [_c("chi5", lambda T: _ratio_series(chi, T, _kron(-4)), lambda T: _eq(T, [(1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1)], 1))],
        )
    )

    def item4_lhs(p):
        z = p.z
        return cmath.sin(z) * cmath.sin(2 * z) / cmath.sin(5 * z) - lambert_trig_sum(None, chi, p.tau, z, "sin")

    def item4_rhs(p):
        z, t = p.z, p.tau
        return _qr(t, Fraction(3, 8)) * _P(t, (5, 2), (1, -1)) * _th(1, z, t) * _th(1, 2 * z, t) / (2 * _th(1, 5 * z, 5 * t))

    recs.append(
        _pointwise(
            "d5.item4",
            "sin z sin 2z/sin 5z - sum (n/5) q^n/(1-q^n) sin 2nz = q^{3/8} (q^5;q^5)^2 theta_1(z|tau) theta_1(2z|tau)/(2 (q;q) theta_1(5z|5tau))",
            [_c("chi5", item4_lhs, item4_rhs)],
            domain=SampleDomain(avoid=((PI / 5, 0.0), (PI / 2, 0.0))),
        )
    )
    recs.append(
        _exact(
            "d5.item5",
            "1 - 5 sum (n/5) q^n/(1-q^n) = (q;q)^5/(q^5;q^5)",
            [_c("chi5", lambda T: _one(T) - 5 * lambert_twisted_expand(chi, "over_1-q^n", T), lambda T: _eq(T, [(1, 5), (5, -1)]))],
            as_printed=True,
            note="the coefficient of q^2 is 0 on the left and 5 on the right; the classical identity carries the weight n, see d5.item5.weighted",
        )
    )
    recs.append(
        _exact(
            "d5.item5.weighted",
            "1 - 5 sum (n/5) n q^n/(1-q^n) = (q;q)^5/(q^5;q^5)",
            [_c("chi5", lambda T: _one(T) - 5 * lambert_twisted_expand(chi, "n_over_1-q^n", T), lambda T: _eq(T, [(1, 5), (5, -1)]))],
        )
    )
    recs.append(
        _exact(
            "d5.item6a",
            "1 + sum (-15/n) q^n/(1-q^n) = (q^3;q^3)^2 (q^5;q^5)^2/((q;q)(q^15;q^15))",
            [_c("chi5", lambda T: _one(T) + lambert_series(_kron(-15), T), lambda T: _eq(T, [(3, 2), (5, 2), (1, -1), (15, -1)]))],
        )
    )
    recs.append(
        _exact(
            "d5.item6b",
            "1 + sum (-20/n) q^n/(1-q^n) = (q^2;q^2)(q^4;q^4)(q^5;q^5)(q^10;q^10)/((q;q)(q^20;q^20))",
            [_c("chi5", lambda T: _one(T) + lambert_series(_kron(-20), T), lambda T: _eq(T, [(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)]))],
        )
    )
    return recs


def _misc_exact_records() -> list[IdentityRecord]:
    recs = []

    def well_known(chi):
        return (lambda T: _ratio_series(chi, T, power=1)), (lambda T: lambert_twisted_expand(chi, "over_(1-q^n)^2", T))

    recs.append(
        _exact(
            "lambert.well-known",
            "sum_n (sum_k chi(k) n q^{kn})/(1 - q^{Nn}) = sum chi(n) q^n/(1-q^n)^2",
            [_c(label, *well_known(chi)) for label, chi in _named("kronecker:5", "kronecker:8", "psi10", "kronecker:12") + [_complex_mod7()]],
        )
    )

    forms = {
        -24: (((1, 0, 6), (2, 0, 3)), [(2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)]),
        -15: (((1, 1, 4), (2, 1, 2)), [(3, 2), (5, 2), (1, -1), (15, -1)]),
        -20: (((1, 0, 5), (2, 2, 3)), [(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)]),
    }
    for d, (qforms, eta_factors) in forms.items():
        recs.append(
            _exact(
                f"qform.d{d}",
                f"sum over the reduced forms of discriminant {d} of their theta series = 2 + 2 sum ({d}/n) q^n/(1-q^n) = 2 x eta quotient",
                [
                    _c(
                        f"d={d}",
                        (lambda T, f=qforms: qform_theta(f[0], T) + qform_theta(f[1], T)),
                        (lambda T, d=d: 2 * _one(T) + 2 * lambert_series(_kron(d), T)),
                        (lambda T, e=eta_factors: _eq(T, e, 0, 2)),
                    )
                ],
            )
        )

    def gauss_lambert(chi):
        N = chi.modulus

        def literal(T):
            return FormalSeries([0] + [sum((gauss_sum(chi, n) for n in range(1, T) if k % n == 0), AlgebraicValue.zero()) for k in range(1, T)])

        return literal, (lambda T: gauss_lambert_expand(chi, 0, T))

    recs.append(
        _exact(
            "companion.gauss-lambert",
            "sum g_n(chi) q^n/(1-q^n) = sum_{m,n} g_n(chi) q^{mn}",
            [_c(label, *gauss_lambert(chi)) for label, chi in _named("kronecker:5", "psi10", "kronecker:8")],
            order=60,
        )
    )
    return recs


@lru_cache(maxsize=1)
def _build() -> tuple[IdentityRecord, ...]:
    recs = (
        _theta_records()
        + _main_records()
        + _eisenstein_records()
        + _d8_records()
        + _d10_records()
        + _d12_records()
        + _d5_records()
        + _misc_exact_records()
    )
    ids = [r.id for r in recs]
    dupes = {i for i in ids if ids.count(i) > 1}
    if dupes:
        raise RuntimeError(f"duplicate catalog ids: {sorted(dupes)}")
    return tuple(sorted(recs, key=lambda r: r.id))


def catalog() -> list[IdentityRecord]:
    """Every registered identity, ordered by id."""
    return list(_build())


def lookup(record_id: str) -> IdentityRecord:
    for r in _build():
        if r.id == record_id:
            return r
    raise KeyError(f"no catalog record with id {record_id!r}")
