"""Double-precision evaluation of theta functions and the twisted elliptic functions.

Conventions: q = exp(2 pi i tau), lattice periods pi and pi*tau, and
theta_1(z|tau) = 2 q^{1/8} sum (-1)^n q^{n(n+1)/2} sin((2n+1)z).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from .characters import DirichletCharacter
from .qseries import EtaQuotientSpec

__all__ = [
    "HalfPlanePoint",
    "EvalConfig",
    "DEFAULT_CONFIG",
    "ConvergenceError",
    "PoleProximityError",
    "ParityError",
    "StripError",
    "theta",
    "theta_derivatives",
    "theta1_logderiv",
    "lattice_distance",
    "cot_derivative",
    "cot_sum",
    "weierstrass_p",
    "E2",
    "E2k_classical",
    "dedekind_eta",
    "euler_product",
    "eta_quotient_value",
    "g_twisted",
    "g_companion",
    "twisted_wp_sum",
    "companion_wp_sum",
    "lattice_sum",
    "twisted_lattice_sum",
    "eisenstein_E_lattice",
    "eisenstein_F_lattice",
    "eisenstein_E_qexp",
    "eisenstein_F_qexp",
    "lambert_trig_sum",
    "cot_coefficient_B",
    "taylor_coefficients",
]


class ConvergenceError(ArithmeticError):
    """A series did not reach its tail tolerance within the term cap."""


class PoleProximityError(ValueError):
    """The evaluation point sits on (or numerically at) a pole."""


class ParityError(ValueError):
    """An operation that needs an even character received an odd one."""


class StripError(ValueError):
    """A series representation was requested outside its convergence strip."""


@dataclass(frozen=True)
class HalfPlanePoint:
    tau: complex

    def __post_init__(self):
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.tau.imag > 0:
            raise ValueError(f"tau must lie in the upper half-plane, got {self.tau}")

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)

    def q_power(self, r) -> complex:
        """q**r on the branch exp(2 pi i tau r)."""
        return cmath.exp(2j * math.pi * self.tau * float(r))


@dataclass(frozen=True)
class EvalConfig:
    """Cutoff policy.

    eps_tail: series stop once the remaining terms are below eps_tail times
    the largest term.  max_terms caps every series.  lattice_cutoff is the
    half-width M of square lattice sums.  pole_guard is the distance below
    which evaluators refuse to work; sample_exclusion is the larger radius
    used when drawing random test points.
    """

    eps_tail: float = 1e-17
    max_terms: int = 100_000
    lattice_cutoff: int = 300
    pole_guard: float = 1e-10
    sample_exclusion: float = 0.05

    def __post_init__(self):
        if not (self.eps_tail > 0 and self.max_terms > 0 and self.lattice_cutoff > 0):
            raise ValueError("cutoffs must be positive")
        if self.pole_guard < 0 or self.sample_exclusion < 0:
            raise ValueError("radii must be nonnegative")


DEFAULT_CONFIG = EvalConfig()


def _tau(tau) -> complex:
    if isinstance(tau, HalfPlanePoint):
        return tau.tau
    tau = complex(tau)
    if not tau.imag > 0:
        raise ValueError(f"tau must lie in the upper half-plane, got {tau}")
    return tau


def _require_even(chi: DirichletCharacter) -> None:
    if not chi.is_even:
        raise ParityError("this operation is defined for even characters only")


# ---------------------------------------------------------------------------
# theta functions


def _theta_bilateral(j: int, z: complex, tau: complex, order: int, cfg: EvalConfig) -> complex:
    """order-th z-derivative of theta_j from sum_n c_n exp(i pi tau x^2 + 2 i x z)."""
    half = j in (1, 2)
    t = tau.imag
    y = z.imag
    centre = -y / (math.pi * t)
    # terms relative to the peak decay like exp(-pi t (x - centre)^2)
    width = math.sqrt((-math.log(cfg.eps_tail) + 8 + order * math.log(2 + abs(centre) * 4 + 8)) / (math.pi * t)) + 2
    lo = math.floor(centre - width) - 1
    hi = math.ceil(centre + width) + 1
    if hi - lo > cfg.max_terms:
        raise ConvergenceError(f"theta series needs {hi - lo} terms (cap {cfg.max_terms})")
    n = np.arange(lo, hi + 1)
    x = n + 0.5 if half else n.astype(float)
    expo = 1j * math.pi * tau * x * x + 2j * x * z
    terms = np.exp(expo)
    if j in (1, 4):
        terms = terms * np.where(n % 2 == 0, 1.0, -1.0)
    if order:
        terms = terms * (2j * x) ** order
    if j == 1:
        terms = terms * -1j
    mags = np.abs(terms)
    scale = mags.max()
    if scale == 0 or not np.isfinite(scale):
        raise ConvergenceError("theta series overflowed; reduce |Im z|")
    if max(mags[0], mags[-1]) > cfg.eps_tail * scale:
        raise ConvergenceError("theta series tail bound not met")
    return complex(terms.sum())


def _theta_product(j: int, z: complex, tau: complex, cfg: EvalConfig) -> complex:
    t = tau.imag
    if abs(z.imag) >= math.pi * t:
        raise StripError("product form needs |Im z| < pi Im tau")
    q = cmath.exp(2j * math.pi * tau)
    aq = abs(q)
    e2 = cmath.exp(2j * z)
    growth = max(abs(e2), 1 / abs(e2))
    # |q^k| * growth < eps, with k counting from the first factor
    k_needed = math.ceil(math.log(cfg.eps_tail / 8) / math.log(aq * growth)) + 2 if aq * growth > 0 else 2
    if k_needed > cfg.max_terms:
        raise ConvergenceError("theta product needs too many factors")
    k = np.arange(1, k_needed + 1)
    qk = np.exp(2j * math.pi * tau * k)
    euler = np.prod(1 - qk)
    if j == 1:
        val = 2 * cmath.exp(0.25j * math.pi * tau) * cmath.sin(z) * euler * np.prod((1 - qk / e2) * (1 - qk * e2))
    elif j == 2:
        val = 2 * cmath.exp(0.25j * math.pi * tau) * cmath.cos(z) * euler * np.prod((1 + qk / e2) * (1 + qk * e2))
    else:
        qh = np.exp(2j * math.pi * tau * (k - 0.5))
        sign = 1 if j == 3 else -1
        val = euler * np.prod((1 + sign * qh / e2) * (1 + sign * qh * e2))
    return complex(val)


def theta(j: int, z, tau, mode: str = "series", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Jacobi theta_j(z|tau), j in 1..4, from its series or its product."""
    if j not in (1, 2, 3, 4):
        raise ValueError("j must be 1, 2, 3 or 4")
    z = complex(z)
    tau = _tau(tau)
    if mode == "series":
        return _theta_bilateral(j, z, tau, 0, config)
    if mode == "product":
        return _theta_product(j, z, tau, config)
    raise ValueError(f"unknown mode {mode!r}")


def theta_derivatives(j: int, z, tau, order: int, config: EvalConfig = DEFAULT_CONFIG) -> list[complex]:
    """[theta_j, theta_j', ..., theta_j^(order)] at (z, tau) by termwise differentiation."""
    z = complex(z)
    tau = _tau(tau)
    return [_theta_bilateral(j, z, tau, k, config) for k in range(order + 1)]


def _reduce_argument(z: complex, tau: complex) -> tuple[complex, int, int]:
    """z = z0 + m*pi + n*pi*tau with z0 in the centred period parallelogram."""
    n = round(z.imag / (math.pi * tau.imag))
    z1 = z - n * math.pi * tau
    m = round(z1.real / math.pi)
    return z1 - m * math.pi, m, n


def _lattice_distance(z0: complex, tau: complex) -> float:
    return min(abs(z0 - a * math.pi - b * math.pi * tau) for a in (-1, 0, 1) for b in (-1, 0, 1))


def lattice_distance(z, tau) -> float:
    """Distance from z to the nearest point of pi Z + pi tau Z (the zeros of theta_1)."""
    tau = _tau(tau)
    z0, _, _ = _reduce_argument(complex(z), tau)
    return _lattice_distance(z0, tau)


@lru_cache(maxsize=64)
def _cot_poly(k: int) -> tuple[int, ...]:
    """Integer polynomial P_k with cot^(k)(z) = P_k(cot z); lowest degree first."""
    if k == 0:
        return (0, 1)
    prev = _cot_poly(k - 1)
    deriv = [i * prev[i] for i in range(1, len(prev))]
    out = [0] * (len(deriv) + 2)
    for i, c in enumerate(deriv):
        out[i] -= c
        out[i + 2] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def cot_derivative(z, k: int = 0) -> complex:
    """k-th derivative of cot at z."""
    c = 1 / cmath.tan(complex(z))
    acc = 0j
    for coeff in reversed(_cot_poly(k)):
        acc = acc * c + coeff
    return acc


def _logderiv_lambert(z: complex, tau: complex, order: int, cfg: EvalConfig) -> complex:
    q = cmath.exp(2j * math.pi * tau)
    r = abs(q) * math.exp(2 * abs(z.imag))
    if r >= 1:
        raise StripError("sine series of theta1'/theta1 needs |Im z| < pi Im tau")
    total = cot_derivative(z, order)
    n = 1
    scale = abs(total) + 1.0
    qn = q
    while True:
        coeff = 4 * qn / (1 - qn) * (2 * n) ** order
        term = coeff * cmath.sin(2 * n * z + order * math.pi / 2)
        total += term
        if abs(coeff) * math.exp(2 * n * abs(z.imag)) < cfg.eps_tail * scale and n > 2:
            return total
        n += 1
        qn *= q
        if n > cfg.max_terms:
            raise ConvergenceError("Lambert series for theta1'/theta1 did not converge")


def theta1_logderiv(z, tau, order: int = 0, mode: str = "theta", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """order-th derivative of theta_1'/theta_1 at z.

    mode 'theta' reduces z into the period parallelogram (using
    L(z + n pi tau) = L(z) - 2 i n) and divides theta-series derivatives;
    mode 'lambert' sums cot z + 4 sum q^n/(1-q^n) sin 2nz directly.
    """
    z = complex(z)
    tau = _tau(tau)
    z0, _, n = _reduce_argument(z, tau)
    if _lattice_distance(z0, tau) < config.pole_guard:
        raise PoleProximityError(f"z={z} is at a zero of theta_1")
    if mode == "lambert":
        val = _logderiv_lambert(z0, tau, order, config)
    elif mode == "theta":
        f = theta_derivatives(1, z0, tau, order + 1, config)
        L: list[complex] = []
        for k in range(order + 1):
            acc = f[k + 1]
            for i in range(k):
                acc -= math.comb(k, i) * L[i] * f[k - i]
            L.append(acc / f[0])
        val = L[order]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if order == 0:
        val -= 2j * n
    return val


def cot_sum(chi: DirichletCharacter, z, sign: int = 1, order: int = 0) -> complex:
    """sum_{k=1}^{N-1} chi(k) cot^(order)(z + sign*k*pi/N)."""
    N = chi.modulus
    z = complex(z)
    return sum(chi(k) * cot_derivative(z + sign * k * math.pi / N, order) for k in range(1, N) if chi(k) != 0)


# ---------------------------------------------------------------------------
# Eisenstein series, eta, Weierstrass p


def _lambert_numeric(coeff: Callable[[int], complex], q: complex, cfg: EvalConfig, growth: float = 1.0) -> complex:
    """sum_{n>=1} coeff(n) q^n / (1 - q^n), terms bounded by |coeff(n)| (|q| growth)^n."""
    total = 0j
    qn = 1
    aq = abs(q) * growth
    if aq >= 1:
        raise StripError("Lambert series diverges at this point")
    scale = 0.0
    cmax = 0.0
    for n in range(1, cfg.max_terms):
        qn *= q
        c = coeff(n)
        term = c * qn / (1 - qn)
        total += term
        # zero coefficients must not end the sum, so bound with the largest one seen
        cmax = max(cmax, abs(c) / growth**n)
        bound = cmax * n * aq**n
        scale = max(scale, abs(term))
        if n > 3 and bound < cfg.eps_tail * max(scale, abs(total), 1e-300):
            return total
    raise ConvergenceError("Lambert series did not converge")


def E2(tau, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """E_2(tau) = 1 - 24 sum n q^n / (1 - q^n)."""
    q = cmath.exp(2j * math.pi * _tau(tau))
    return 1 - 24 * _lambert_numeric(lambda n: n, q, config)


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def E2k_classical(k: int, tau, mode: str = "lambert", config: EvalConfig = DEFAULT_CONFIG, cutoff: int | None = None) -> complex:
    """E_{2k}(tau) = pi^{-2k} sum' (m + n tau)^{-2k}, for k >= 2.

    'lambert' uses 2 zeta(2k)/pi^{2k} + 2 (-4)^k/(2k-1)! sum n^{2k-1} q^n/(1-q^n);
    'lattice' sums a square of half-width M and removes the 1/M^2 tail by
    Richardson extrapolation against the half-width M/2 sum.
    """
    if k < 2:
        raise ValueError("classical E_{2k} needs k >= 2 (use E2 for weight 2)")
    tau = _tau(tau)
    if mode == "lambert":
        q = cmath.exp(2j * math.pi * tau)
        head = 2 * float(hurwitz_zeta(2 * k)) / math.pi ** (2 * k)
        tail = _lambert_numeric(lambda n: n ** (2 * k - 1), q, config)
        return head + 2 * (-4) ** k / math.factorial(2 * k - 1) * tail
    if mode == "lattice":
        M = cutoff or config.lattice_cutoff
        ones = lambda m, n: 1.0
        full = lattice_sum(1.0, tau, 2 * k, ones, M=M)
        half = lattice_sum(1.0, tau, 2 * k, ones, M=M // 2)
        return (4 * full - half) / 3 / math.pi ** (2 * k)
    raise ValueError(f"unknown mode {mode!r}")


def euler_product(tau, scale: int = 1, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """(q^a; q^a)_inf for a = scale."""
    tau = _tau(tau)
    qa = cmath.exp(2j * math.pi * tau * scale)
    prod = 1 + 0j
    qk = 1 + 0j
    for _ in range(config.max_terms):
        qk *= qa
        prod *= 1 - qk
        if abs(qk) < config.eps_tail:
            return prod
    raise ConvergenceError("Euler product did not converge")


def dedekind_eta(tau, mode: str = "product", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """eta(tau) = q^{1/24} (q;q)_inf, by the product or the pentagonal-number series."""
    tau = _tau(tau)
    pre = cmath.exp(2j * math.pi * tau / 24)
    if mode == "product":
        return pre * euler_product(tau, 1, config)
    if mode == "pentagonal":
        q = cmath.exp(2j * math.pi * tau)
        total = 1 + 0j
        for k in range(1, config.max_terms):
            a = q ** (k * (3 * k - 1) // 2)
            b = q ** (k * (3 * k + 1) // 2)
            total += (-1) ** k * (a + b)
            if abs(a) < config.eps_tail:
                return pre * total
        raise ConvergenceError("pentagonal series did not converge")
    raise ValueError(f"unknown mode {mode!r}")


def eta_quotient_value(spec: EtaQuotientSpec, tau, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Numerical value of scalar * q^r * prod (q^a; q^a)^e with q^r = exp(2 pi i tau r)."""
    tau = _tau(tau)
    val = complex(float(spec.scalar)) * cmath.exp(2j * math.pi * tau * float(spec.q_power))
    for a, e in spec.factors:
        val *= euler_product(tau, a, config) ** e
    return val


def weierstrass_p(z, tau, mode: str = "theta", derivative: int = 0, config: EvalConfig = DEFAULT_CONFIG, cutoff: int | None = None) -> complex:
    """Weierstrass p (or its derivative) for the lattice pi Z + pi tau Z.

    'theta': -(theta_1'/theta_1)' - E_2/3; 'lambert': csc^2 z - 8 sum n q^n/(1-q^n) cos 2nz - E_2/3;
    'lattice': the truncated double sum with subtracted constants.
    """
    z = complex(z)
    tau = _tau(tau)
    z0, _, _ = _reduce_argument(z, tau)
    if _lattice_distance(z0, tau) < config.pole_guard:
        raise PoleProximityError(f"z={z} is a lattice point")
    if mode in ("theta", "lambert"):
        base = -theta1_logderiv(z0, tau, derivative + 1, "theta" if mode == "theta" else "lambert", config)
        return base - E2(tau, config) / 3 if derivative == 0 else base
    if mode == "lattice":
        M = cutoff or config.lattice_cutoff
        if derivative:
            p = derivative + 2
            s = lattice_sum(math.pi, math.pi * tau, p, lambda m, n: 1.0, z=z, M=M, exclude_origin=False)
            return (-1) ** derivative * math.factorial(derivative + 1) * s
        shifted = lattice_sum(math.pi, math.pi * tau, 2, lambda m, n: 1.0, z=z, M=M, exclude_origin=True)
        plain = lattice_sum(math.pi, math.pi * tau, 2, lambda m, n: 1.0, z=0, M=M, exclude_origin=True)
        return 1 / z**2 + shifted - plain
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# lattice sums


def _reduce_basis(w1: complex, w2: complex):
    """Lagrange-reduce (w1, w2); returns reduced (u, v) and integer coordinate rows A, B."""
    u, v = complex(w1), complex(w2)
    A, B = (1, 0), (0, 1)
    for _ in range(10_000):
        if abs(v) < abs(u):
            u, v, A, B = v, u, B, A
        mu = round((v * u.conjugate()).real / abs(u) ** 2)
        if mu == 0:
            return u, v, A, B
        v -= mu * u
        B = (B[0] - mu * A[0], B[1] - mu * A[1])
    raise ConvergenceError("lattice reduction did not terminate")


def lattice_sum(w1, w2, power: int, weight: Callable, z=0, M: int = 300, exclude_origin: bool = True) -> complex:
    """sum weight(m, n) / (z + m w1 + n w2)^power over a square of half-width M.

    The square is taken in a Lagrange-reduced basis of the lattice, so the
    truncation is well conditioned even when w2/w1 has a tiny imaginary part.
    weight receives integer arrays (m, n) in the original coordinates.
    """
    u, v, A, B = _reduce_basis(w1, w2)
    r = np.arange(-M, M + 1)
    i, j = np.meshgrid(r, r, indexing="ij")
    m = i * A[0] + j * B[0]
    n = i * A[1] + j * B[1]
    pts = complex(z) + i * u + j * v
    if exclude_origin:
        keep = (i != 0) | (j != 0)
        pts, m, n = pts[keep], m[keep], n[keep]
    if np.any(np.abs(pts) < 1e-12):
        raise PoleProximityError("lattice sum evaluated at a lattice point")
    w = np.broadcast_to(np.asarray(weight(m, n)), pts.shape)
    return complex(np.sum(w / pts**power))


def _char_weight(chi: DirichletCharacter, slot: str):
    vals = chi.values
    N = chi.modulus
    if slot == "n":
        return lambda m, n: vals[n % N]
    return lambda m, n: vals[m % N]


def twisted_lattice_sum(chi: DirichletCharacter, power: int, z, tau, slot: str = "n", M: int = 300, scale_n: int = 1) -> complex:
    """sum_{m,n} chi(slot) / (z + m pi + n scale_n pi tau)^power (all lattice points)."""
    tau = _tau(tau)
    return lattice_sum(math.pi, math.pi * scale_n * tau, power, _char_weight(chi, slot), z=z, M=M, exclude_origin=False)


def eisenstein_E_lattice(chi: DirichletCharacter, weight: int, tau, M: int = 300) -> complex:
    """E_{2k}(tau, chi) = pi^{-2k} sum chi(n) / (m + n tau)^{2k}, k >= 2."""
    _require_even(chi)
    if weight < 4 or weight % 2:
        raise ValueError("lattice form needs an even weight 2k >= 4")
    tau = _tau(tau)
    s = lattice_sum(1.0, tau, weight, _char_weight(chi, "n"), M=M)
    return s / math.pi**weight


def eisenstein_F_lattice(chi: DirichletCharacter, weight: int, tau, M: int = 300) -> complex:
    """F_{2k}(tau, chi) = (N/pi)^{2k} sum chi(m) / (m + n N tau)^{2k}, k >= 2."""
    _require_even(chi)
    if weight < 4 or weight % 2:
        raise ValueError("lattice form needs an even weight 2k >= 4")
    tau = _tau(tau)
    N = chi.modulus
    s = lattice_sum(1.0, N * tau, weight, _char_weight(chi, "m"), M=M)
    return s * (N / math.pi) ** weight


# ---------------------------------------------------------------------------
# q-sums with trigonometric weights


def lambert_trig_sum(a_m, b_n, tau, z=0, trig: str | None = None, power: int = 0, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """sum_{m,n >= 1} a(m) b(n) n^power q^{mn} trig(2nz).

    a_m and b_n are Dirichlet characters, integer-indexed sequences (periodic
    tables), callables on integers, or None for the constant 1.  trig is
    'sin', 'cos' or None.
    """
    tau = _tau(tau)
    z = complex(z)
    q = cmath.exp(2j * math.pi * tau)
    aq = abs(q)
    a = _as_fn(a_m)
    b = _as_fn(b_n)
    grow = math.exp(2 * abs(z.imag)) if trig else 1.0
    if aq * grow >= 1:
        raise StripError("q-sum diverges: need |Im z| < pi Im tau")
    log_eps = math.log(config.eps_tail)
    total = 0j
    scale = 0.0
    n = 0
    while True:
        n += 1
        if n > config.max_terms:
            raise ConvergenceError("q-sum did not converge")
        head = (aq * grow) ** n * n**power
        if head == 0 or (n > 2 and scale > 0 and head < config.eps_tail * scale):
            return total
        bn = b(n)
        if bn == 0:
            continue
        mmax = max(1, math.ceil((log_eps - 3) / (n * math.log(aq))) + 1)
        inner = 0j
        for m in range(1, mmax + 1):
            am = a(m)
            if am:
                inner += am * q ** (m * n)
        if not inner:
            continue
        w = bn * n**power * inner
        if trig == "sin":
            w *= cmath.sin(2 * n * z)
        elif trig == "cos":
            w *= cmath.cos(2 * n * z)
        elif trig is not None:
            raise ValueError("trig must be 'sin', 'cos' or None")
        scale = max(scale, abs(w) * (grow if trig else 1.0))
        total += w


def _as_fn(x) -> Callable[[int], complex]:
    if x is None:
        return lambda n: 1
    if isinstance(x, DirichletCharacter):
        return x
    if callable(x):
        return x
    seq = list(x)
    L = len(seq)
    return lambda n: seq[n % L]


# ---------------------------------------------------------------------------
# the twisted functions


def g_twisted(z, tau, chi: DirichletCharacter, mode: str = "theta_shift", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """g(z|tau;chi) = sum_k chi(k) theta_1'/theta_1(z + k pi tau | N tau).

    'sine_series' evaluates 4 sum Q(q^n) sin 2nz with
    Q(t) = sum_k chi(k) t^k / (1 - t^N); it needs |Im z| < pi Im tau.
    """
    _require_even(chi)
    z = complex(z)
    tau = _tau(tau)
    N = chi.modulus
    if mode == "theta_shift":
        return sum(
            chi(k) * theta1_logderiv(z + k * math.pi * tau, N * tau, 0, "theta", config)
            for k in range(1, N)
            if chi(k) != 0
        )
    if mode == "sine_series":
        if abs(z.imag) >= math.pi * tau.imag:
            raise StripError("sine series of g needs |Im z| < pi Im tau")
        return 4 * lambert_trig_sum(chi, None, tau, z, "sin", 0, config)
    raise ValueError(f"unknown mode {mode!r}")


def g_companion(z, tau, chi: DirichletCharacter, mode: str = "cot_series", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The companion (1/tau) g(z/tau | -1/(N tau); chi).

    'cot_series': sum chi(k) cot(z - k pi/N) + 4 sum g_n(chi) q^n/(1-q^n) sin 2nz;
    'theta': sum chi(k) theta_1'/theta_1(z + k pi/N | tau);
    'transform': the defining expression with g evaluated at -1/(N tau).
    """
    _require_even(chi)
    z = complex(z)
    tau = _tau(tau)
    N = chi.modulus
    for k in range(N):
        if chi(k) != 0:
            w = z - k * math.pi / N
            if abs(w - round(w.real / math.pi) * math.pi) < config.pole_guard:
                raise PoleProximityError(f"z={z} is at a cotangent pole")
    if mode == "cot_series":
        gs = chi.gauss_sums()
        q = cmath.exp(2j * math.pi * tau)
        head = cot_sum(chi, z, sign=-1)
        if abs(q) * math.exp(2 * abs(z.imag)) >= 1:
            raise StripError("companion series needs |Im z| < pi Im tau")
        tail = _lambert_numeric(lambda n: gs[n % N] * cmath.sin(2 * n * z), q, config, math.exp(2 * abs(z.imag)))
        return head + 4 * tail
    if mode == "theta":
        return sum(
            chi(k) * theta1_logderiv(z + k * math.pi / N, tau, 0, "theta", config) for k in range(1, N) if chi(k) != 0
        )
    if mode == "transform":
        return g_twisted(z / tau, -1 / (N * tau), chi, "theta_shift", config) / tau
    raise ValueError(f"unknown mode {mode!r}")


def twisted_wp_sum(z, tau, chi: DirichletCharacter, derivative: int = 0, mode: str = "theta", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """sum_k chi(k) p^(derivative)(z + k pi tau | N tau), p in the given weierstrass_p mode."""
    z = complex(z)
    tau = _tau(tau)
    N = chi.modulus
    return sum(
        chi(k) * weierstrass_p(z + k * math.pi * tau, N * tau, mode, derivative, config)
        for k in range(1, N)
        if chi(k) != 0
    )


def companion_wp_sum(z, tau, chi: DirichletCharacter, derivative: int = 0, mode: str = "theta", config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """sum_k chi(k) p^(derivative)(z + k pi/N | tau), p in the given weierstrass_p mode."""
    z = complex(z)
    tau = _tau(tau)
    N = chi.modulus
    return sum(
        chi(k) * weierstrass_p(z + k * math.pi / N, tau, mode, derivative, config) for k in range(1, N) if chi(k) != 0
    )


# ---------------------------------------------------------------------------
# Eisenstein q-expansions and cotangent coefficients


def eisenstein_E_qexp(chi: DirichletCharacter, weight: int, tau, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """E_{2k}(tau, chi) = ((-1)^k 2^{2k+1}/(2k-1)!) sum n^{2k-1} chi(m) q^{mn}."""
    _require_even(chi)
    if weight < 2 or weight % 2:
        raise ValueError("weight must be even and >= 2")
    k = weight // 2
    s = lambert_trig_sum(chi, None, tau, 0, None, 2 * k - 1, config)
    return (-1) ** k * 2 ** (2 * k + 1) / math.factorial(2 * k - 1) * s


def eisenstein_F_qexp(chi: DirichletCharacter, weight: int, tau, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """F_{2k}(tau, chi) = -B_{2k-1}(chi) + ((-1)^k 2^{2k+1}/(2k-1)!) sum n^{2k-1} g_n(chi) q^{mn}.

    The normalisation 2^{2k+1} is the one forced by the sine expansion of the
    companion function; it makes F agree with its lattice form.
    """
    _require_even(chi)
    if weight < 2 or weight % 2:
        raise ValueError("weight must be even and >= 2")
    k = weight // 2
    gs = chi.gauss_sums()
    N = chi.modulus
    s = lambert_trig_sum(None, lambda n: gs[n % N], tau, 0, None, 2 * k - 1, config)
    B = cot_coefficient_B(chi, 2 * k - 1, "derivative")
    return -B + (-1) ** k * 2 ** (2 * k + 1) / math.factorial(2 * k - 1) * s


def cot_coefficient_B(chi: DirichletCharacter, l: int, mode: str = "derivative") -> complex:
    """B_l(chi), the z^l coefficient of sum chi(k) cot(z + k pi/N).

    'derivative': (1/l!) sum chi(k) cot^(l)(k pi/N).
    'Lvalue': (-1)^l (N/pi)^{l+1} sum_{m != 0} chi(m) / m^{l+1}, the two-sided
    sum computed with Hurwitz zeta values.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    N = chi.modulus
    if mode == "derivative":
        s = sum(chi(k) * cot_derivative(k * math.pi / N, l) for k in range(1, N) if chi(k) != 0)
        return s / math.factorial(l)
    if mode == "Lvalue":
        if l == 0:
            raise ValueError("the L-value form needs l >= 1")
        sgn = chi(N - 1) if N > 1 else 1
        if (1 + sgn * (-1) ** (l + 1)) == 0:
            return 0j
        s_exp = l + 1
        one_sided = sum(chi(a) * float(hurwitz_zeta(s_exp, a / N)) for a in range(1, N + 1) if chi(a) != 0) / N**s_exp
        two_sided = (1 + sgn * (-1) ** (l + 1)) * one_sided
        return (-1) ** l * (N / math.pi) ** (l + 1) * two_sided
    raise ValueError(f"unknown mode {mode!r}")


def taylor_coefficients(f: Callable[[complex], complex], order: int, radius: float = 0.5, points: int = 64, centre: complex = 0) -> np.ndarray:
    """Taylor coefficients a_0..a_order of f at centre, by the trapezoidal Cauchy integral.

    f must be holomorphic on a disc of radius larger than radius.
    """
    if points <= order:
        raise ValueError("need more sample points than the requested order")
    w = np.exp(2j * math.pi * np.arange(points) / points)
    vals = np.array([f(centre + radius * x) for x in w])
    coeffs = np.fft.fft(vals) / points
    return coeffs[: order + 1] / radius ** np.arange(order + 1)
