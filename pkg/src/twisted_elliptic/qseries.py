"""Exact truncated power series in q.

A :class:`FormalSeries` is ``q**offset * sum_k coeffs[k] q**k`` known up to
(but excluding) the absolute exponent ``offset + len(coeffs)``.  Coefficients
are Python ints where possible, otherwise Fractions, :class:`QuadraticNumber`
or cyclotomic :class:`~twisted_elliptic.characters.AlgebraicValue` elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .characters import AlgebraicValue, DirichletCharacter, gauss_sum

__all__ = [
    "QuadraticNumber",
    "FormalSeries",
    "Mismatch",
    "EtaQuotientSpec",
    "series_mul",
    "series_inverse",
    "compare_series",
    "eta_quotient_expand",
    "euler_product_expand",
    "divisor_sum_series",
    "lambert_series",
    "lambert_expand",
    "lambert_twisted_expand",
    "LAMBERT_VARIANTS",
    "eisenstein_qexp",
    "gauss_lambert_expand",
    "qform_theta",
    "theta_constant_expand",
    "partition_numbers",
]


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class QuadraticNumber:
    """a + b*sqrt(d) with rational a, b."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 5):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.b and self.b and other.d != self.d:
                raise ValueError("cannot combine different square roots")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return NotImplemented

    def _pick_d(self, other):
        return self.d if self.b else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._pick_d(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._pick_d(o)
        return QuadraticNumber(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticNumber":
        norm = self.a * self.a - self.d * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadraticNumber(self.a / norm, -self.b / norm, self.d)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else None))

    def __bool__(self):
        return bool(self.a or self.b)

    def to_complex(self) -> complex:
        root = math.sqrt(self.d) if self.d >= 0 else 1j * math.sqrt(-self.d)
        return complex(float(self.a) + float(self.b) * root)

    def __complex__(self):
        return self.to_complex()

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"

    __repr__ = __str__


def _inverse_scalar(c):
    if c == 1:
        return 1
    if c == -1:
        return -1
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / c
    if isinstance(c, QuadraticNumber):
        return c.inverse()
    raise ZeroDivisionError(f"cannot invert coefficient {c!r}")


def _is_zero(c) -> bool:
    if isinstance(c, AlgebraicValue):
        return c.is_zero()
    return not c


def _fmt(c) -> str:
    return str(c)


class FormalSeries:
    """Truncated power series with exact coefficients and a rational offset."""

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable = (), offset=0):
        self.coeffs = [_norm(c) for c in coeffs]
        self.offset = Fraction(offset)

    # construction -------------------------------------------------------
    @classmethod
    def one(cls, T: int) -> "FormalSeries":
        return cls.monomial(1, 0, T)

    @classmethod
    def monomial(cls, c, e: int, T: int) -> "FormalSeries":
        """c*q^e known up to q^T (e a nonnegative integer)."""
        coeffs = [0] * max(T, 0)
        if e < T:
            coeffs[e] = c
        return cls(coeffs)

    @classmethod
    def from_function(cls, f: Callable[[int], object], T: int, start: int = 0) -> "FormalSeries":
        """sum_{k >= start} f(k) q^k known up to q^T."""
        return cls([f(k) if k >= start else 0 for k in range(T)])

    # basic attributes -------------------------------------------------
    @property
    def order(self) -> Fraction:
        """Absolute exponent up to which coefficients are known (exclusive)."""
        return self.offset + len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def coefficient(self, e) -> object:
        """Coefficient of q^e for an absolute exponent e."""
        k = Fraction(e) - self.offset
        if k.denominator != 1:
            raise ValueError(f"q^{e} is not on the exponent grid of this series")
        k = int(k)
        if k < 0:
            return 0
        if k >= len(self.coeffs):
            raise IndexError(f"coefficient of q^{e} is beyond the truncation order {self.order}")
        return self.coeffs[k]

    def __getitem__(self, e):
        return self.coefficient(e)

    def terms(self) -> list[tuple[Fraction, object]]:
        """Nonzero (exponent, coefficient) pairs."""
        return [(self.offset + k, c) for k, c in enumerate(self.coeffs) if not _is_zero(c)]

    def truncate(self, T) -> "FormalSeries":
        n = max(0, min(len(self.coeffs), math.ceil(Fraction(T) - self.offset)))
        return FormalSeries(self.coeffs[:n], self.offset)

    def shift(self, k) -> "FormalSeries":
        """Multiply by q^k (k rational)."""
        return FormalSeries(self.coeffs, self.offset + Fraction(k))

    # arithmetic -------------------------------------------------------
    def _aligned(self, other: "FormalSeries"):
        delta = other.offset - self.offset
        if delta.denominator != 1:
            raise ValueError(f"offsets {self.offset} and {other.offset} are not congruent mod 1")
        base = min(self.offset, other.offset)
        top = min(self.order, other.order)
        n = max(0, int(top - base))

        def pad(s):
            lead = int(s.offset - base)
            out = [0] * lead + s.coeffs
            return out[:n] + [0] * (n - len(out))

        return base, pad(self), pad(other)

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            return self + self._constant(other)
        base, a, b = self._aligned(other)
        return FormalSeries([x + y for x, y in zip(a, b)], base)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _constant(self, c) -> "FormalSeries":
        if self.offset.denominator != 1:
            raise ValueError("cannot add a constant to a series with fractional offset")
        n = max(0, math.ceil(self.order))
        return FormalSeries([c] + [0] * (n - 1), 0) if n else FormalSeries([], 0)

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, other)
        return FormalSeries([c * other for c in self.coeffs], self.offset)

    def __rmul__(self, other):
        return FormalSeries([other * c for c in self.coeffs], self.offset)

    def __truediv__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, series_inverse(other))
        inv = _inverse_scalar(other)
        return self * inv

    def inverse(self) -> "FormalSeries":
        return series_inverse(self)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return series_inverse(self) ** (-e)
        result = FormalSeries([1] + [0] * (len(self.coeffs) - 1)) if self.coeffs else FormalSeries([])
        base = self
        first = True
        while e:
            if e & 1:
                result = base if first else result * base
                first = False
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        try:
            return compare_series(self, other) is None and self.order == other.order
        except ValueError:
            return False

    __hash__ = None

    # output -------------------------------------------------------------
    def to_json(self) -> dict:
        return {"offset": str(self.offset), "order": str(self.order), "coeffs": [_fmt(c) for c in self.coeffs]}

    def sparse(self) -> list[str]:
        return [f"{_fmt(c)} * q^{e}" for e, c in self.terms()]

    def __repr__(self):
        shown = self.sparse()[:8]
        tail = " + ..." if len(self.terms()) > 8 else ""
        return "FormalSeries(" + (" + ".join(shown) or "0") + tail + f"; O(q^{self.order}))"


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product, truncated to the shorter relative length."""
    n = min(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    bc = b.coeffs
    for i in range(n):
        x = a.coeffs[i]
        if _is_zero(x):
            continue
        for j in range(n - i):
            y = bc[j]
            if not _is_zero(y):
                out[i + j] += x * y
    return FormalSeries(out, a.offset + b.offset)


def series_inverse(a: FormalSeries) -> FormalSeries:
    """1/a; the leading coefficient (of q^offset) must be invertible."""
    if not a.coeffs or _is_zero(a.coeffs[0]):
        raise ZeroDivisionError("series with zero leading coefficient has no inverse")
    n = len(a.coeffs)
    inv0 = _inverse_scalar(a.coeffs[0])
    out = [inv0] + [0] * (n - 1)
    for k in range(1, n):
        acc = 0
        for i in range(1, k + 1):
            x = a.coeffs[i]
            if not _is_zero(x):
                acc += x * out[k - i]
        out[k] = _norm(-acc * inv0)
    return FormalSeries(out, -a.offset)


@dataclass(frozen=True)
class Mismatch:
    exponent: Fraction
    lhs: object
    rhs: object

    def to_json(self) -> dict:
        return {"exponent": str(self.exponent), "lhs": _fmt(self.lhs), "rhs": _fmt(self.rhs)}


def compare_series(a: FormalSeries, b: FormalSeries, T=None) -> Mismatch | None:
    """First exponent below T (and below both truncation orders) where a and b differ."""
    if (a.offset - b.offset).denominator != 1:
        raise ValueError(f"offsets {a.offset} and {b.offset} are not congruent mod 1")
    top = min(a.order, b.order)
    if T is not None:
        top = min(top, Fraction(T))
    e = min(a.offset, b.offset)
    while e < top:
        x = a.coefficient(e)
        y = b.coefficient(e)
        if x != y:
            return Mismatch(e, x, y)
        e += 1
    return None


# --------------------------------------------------------------------------
# Euler products and eta quotients


def _mul_one_minus(c: list, s: int) -> None:
    for i in range(len(c) - 1, s - 1, -1):
        c[i] -= c[i - s]


def _div_one_minus(c: list, s: int) -> None:
    for i in range(s, len(c)):
        c[i] += c[i - s]


def euler_product_expand(scale: int, T: int, power: int = 1) -> FormalSeries:
    """(q^scale; q^scale)_inf ** power up to q^T."""
    c = [1] + [0] * (T - 1) if T > 0 else []
    for _ in range(abs(power)):
        for k in range(1, T):
            s = scale * k
            if s >= T:
                break
            (_mul_one_minus if power > 0 else _div_one_minus)(c, s)
    return FormalSeries(c)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """scalar * q**q_power * prod_i (q^{a_i}; q^{a_i})_inf ** e_i."""

    factors: tuple[tuple[int, int], ...] = ()
    q_power: Fraction = Fraction(0)
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(a), int(e)) for a, e in self.factors))
        object.__setattr__(self, "q_power", Fraction(self.q_power))
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        for a, _ in self.factors:
            if a < 1:
                raise ValueError("Euler product scales must be positive")

    @classmethod
    def eta(cls, factors, scalar=1) -> "EtaQuotientSpec":
        """prod eta(a_i tau)^{e_i}, i.e. with the q^{sum a e / 24} prefactor."""
        factors = tuple(factors)
        return cls(factors, sum(Fraction(a * e, 24) for a, e in factors), scalar)

    @classmethod
    def parse(cls, text: str, q_power="0", scalar="1") -> "EtaQuotientSpec":
        """Parse 'a^e,a^e,...', e.g. '5^5,1^-1' for (q^5;q^5)^5/(q;q)."""
        factors = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            a, _, e = part.partition("^")
            factors.append((int(a), int(e or 1)))
        return cls(tuple(factors), Fraction(q_power), Fraction(scalar))

    def __str__(self):
        body = " ".join(f"(q^{a};q^{a})^{e}" for a, e in self.factors) or "1"
        return f"{self.scalar} * q^({self.q_power}) * {body}"


def eta_quotient_expand(spec: EtaQuotientSpec, T) -> FormalSeries:
    """Exact expansion of an eta quotient, known up to the absolute exponent T."""
    n = max(0, math.ceil(Fraction(T) - spec.q_power))
    c = [1] + [0] * (n - 1) if n else []
    for a, e in spec.factors:
        for _ in range(abs(e)):
            for k in range(1, n):
                s = a * k
                if s >= n:
                    break
                (_mul_one_minus if e > 0 else _div_one_minus)(c, s)
    if spec.scalar != 1:
        c = [x * spec.scalar for x in c]
    return FormalSeries(c, spec.q_power)


def partition_numbers(n: int) -> list[int]:
    """p(0..n-1) by the standard coin-change recurrence (independent of Euler products)."""
    p = [1] + [0] * (n - 1)
    for part in range(1, n):
        for total in range(part, n):
            p[total] += p[total - part]
    return p


# --------------------------------------------------------------------------
# Lambert series


def _weight(chi) -> Callable[[int], object]:
    if isinstance(chi, DirichletCharacter):
        if chi.is_real:
            table = chi.int_table()
            N = chi.modulus
            return lambda n: table[n % N]
        return chi.value
    if chi is None:
        return lambda n: 1
    return chi


def divisor_sum_series(inner, outer, T: int) -> FormalSeries:
    """sum_{m, n >= 1} inner(m) * outer(n) * q^{m n} up to q^T."""
    inner = _weight(inner)
    outer = _weight(outer)
    c = [0] * max(T, 0)
    outer_vals = [None] + [outer(n) for n in range(1, T)]
    for m in range(1, T):
        x = inner(m)
        if _is_zero(x):
            continue
        for n in range(1, (T - 1) // m + 1):
            y = outer_vals[n]
            if not _is_zero(y):
                c[m * n] += x * y
    return FormalSeries(c)


def lambert_series(a, T: int, scale: int = 1, squared: bool = False) -> FormalSeries:
    """sum_n a(n) q^{s n} / (1 - q^{s n}) (or / (1 - q^{s n})^2) up to q^T."""
    a = _weight(a)
    c = [0] * max(T, 0)
    for n in range(1, T):
        step = scale * n
        if step >= T:
            break
        x = a(n)
        if _is_zero(x):
            continue
        for j in range(1, (T - 1) // step + 1):
            c[step * j] += x * j if squared else x
    return FormalSeries(c)


def lambert_expand(chi, l: int, T: int) -> FormalSeries:
    """sum_{m,n >= 1} n^l chi(m) q^{m n}; coefficient of q^k is sum_{d | k} (k/d)^l chi(d)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return divisor_sum_series(chi, lambda n: n**l, T)


LAMBERT_VARIANTS = ("over_1-q^n", "n_over_1-q^n", "over_(1-q^n)^2")


def lambert_twisted_expand(chi, variant: str, T: int) -> FormalSeries:
    """The twisted Lambert shapes with chi on the summation index n.

    over_1-q^n       sum chi(n) q^n / (1 - q^n)
    n_over_1-q^n     sum chi(n) n q^n / (1 - q^n)
    over_(1-q^n)^2   sum chi(n) q^n / (1 - q^n)^2
    """
    w = _weight(chi)
    if variant == "over_1-q^n":
        return lambert_series(w, T)
    if variant == "n_over_1-q^n":
        return lambert_series(lambda n: w(n) * n, T)
    if variant == "over_(1-q^n)^2":
        return lambert_series(w, T, squared=True)
    raise ValueError(f"unknown Lambert variant {variant!r}; choose from {LAMBERT_VARIANTS}")


def eisenstein_qexp(chi: DirichletCharacter, weight: int, T: int) -> FormalSeries:
    """E_{2k}(tau, chi) = ((-1)^k 2^{2k+1} / (2k-1)!) sum n^{2k-1} chi(m) q^{mn}."""
    if weight < 2 or weight % 2:
        raise ValueError("weight must be an even integer >= 2")
    if not chi.is_even:
        raise ValueError("E_{2k}(tau, chi) needs an even character")
    k = weight // 2
    factor = Fraction((-1) ** k * 2 ** (2 * k + 1), math.factorial(2 * k - 1))
    return lambert_expand(chi, 2 * k - 1, T) * factor


def gauss_lambert_expand(chi: DirichletCharacter, l: int, T: int, sqrt_of: int | None = None) -> FormalSeries:
    """sum_{m,n >= 1} n^l g_n(chi) q^{m n}.

    Coefficients are cyclotomic AlgebraicValues, or QuadraticNumbers in
    Q(sqrt(sqrt_of)) when that is given and every Gauss sum lies there.
    """
    N = chi.modulus
    gs = [gauss_sum(chi, n) for n in range(N)]
    if sqrt_of is not None:
        conv = []
        for g in gs:
            ab = g.as_quadratic(sqrt_of)
            if ab is None:
                raise ValueError(f"g_n(chi) is not in Q(sqrt({sqrt_of}))")
            conv.append(QuadraticNumber(ab[0], ab[1], sqrt_of))
        gs = conv
    return divisor_sum_series(None, lambda n: gs[n % N] * n**l, T)


def qform_theta(form: Sequence[int], T: int) -> FormalSeries:
    """sum_{m,n in Z} q^{a m^2 + b m n + c n^2} for a positive definite form (a, b, c)."""
    a, b, c = form
    disc = b * b - 4 * a * c
    if a <= 0 or disc >= 0:
        raise ValueError(f"form {tuple(form)} is not positive definite")
    counts = [0] * max(T, 0)
    # Q(m, n) >= |disc| n^2 / (4a), so |n| is bounded for Q < T
    nmax = math.isqrt(4 * a * max(T - 1, 0) // -disc) + 1
    for n in range(-nmax, nmax + 1):
        # a m^2 + b n m + (c n^2 - v) < 0 for v = T
        mroot = math.isqrt(max(0, (b * n) ** 2 - 4 * a * (c * n * n - T))) // (2 * a) + 2
        center = -b * n // (2 * a)
        for m in range(center - mroot, center + mroot + 1):
            v = a * m * m + b * m * n + c * n * n
            if v < T:
                counts[v] += 1
    return FormalSeries(counts)


def theta_constant_expand(j: int, scale: int, T) -> FormalSeries:
    """theta_j(0 | scale*tau) as a q-series (j = 2, 3, 4), known up to q^T.

    theta_2 carries the offset scale/8; theta_3 and theta_4 need an even scale
    so that all exponents scale*n^2/2 are integers.
    """
    if j == 2:
        offset = Fraction(scale, 8)
        n = max(0, math.ceil(Fraction(T) - offset))
        c = [0] * n
        k = 0
        while scale * k * (k + 1) // 2 < n:
            c[scale * k * (k + 1) // 2] += 2
            k += 1
        return FormalSeries(c, offset)
    if j in (3, 4):
        if scale % 2:
            raise ValueError("theta_3 and theta_4 constants need an even scale for integral exponents")
        n = max(0, math.ceil(Fraction(T)))
        c = [0] * n
        if n:
            c[0] = 1
        k = 1
        while (scale // 2) * k * k < n:
            c[(scale // 2) * k * k] += 2 * ((-1) ** k if j == 4 else 1)
            k += 1
        return FormalSeries(c)
    raise ValueError("theta_1(0) vanishes; j must be 2, 3 or 4")
