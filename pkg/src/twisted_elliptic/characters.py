"""Dirichlet characters modulo N with exact cyclotomic values.

Characters are stored as a table of exponents: ``chi(n) = zeta_order ** e``
for units ``n`` and ``None`` (meaning zero) off the units.  Exact values live
in :class:`AlgebraicValue`, an element of a cyclotomic field Q(zeta_m)
kept reduced modulo the m-th cyclotomic polynomial, so equality is exact.
"""

from __future__ import annotations

import cmath
import itertools
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import Poly, cyclotomic_poly, symbols
from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.ntheory import factorint, primitive_root

__all__ = [
    "AlgebraicValue",
    "DirichletCharacter",
    "enumerate_characters",
    "evaluate",
    "conductor",
    "induce",
    "restrict",
    "gauss_sum",
    "kronecker",
    "kronecker_character",
    "legendre_character",
    "principal_character",
    "character_by_name",
    "CHARACTER_NAME_FORMS",
]


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    x = symbols("x")
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))


def _reduce(poly: list, m: int) -> tuple:
    phi = _cyclotomic(m)
    deg = len(phi) - 1
    poly = list(poly)
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            base = i - deg
            for j, p in enumerate(phi):
                if p:
                    poly[base + j] -= c * p
    out = poly[:deg] + [0] * (deg - len(poly))
    return tuple(out)


class AlgebraicValue:
    """An element sum_j c_j zeta_m^j of Q(zeta_m), zeta_m = exp(2 pi i / m).

    Coefficients are ints or Fractions, reduced modulo Phi_m so that the
    representation is canonical for a given m.  Values with different m are
    compared after lifting both to Q(zeta_lcm).
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, poly=(), reduced: bool = False):
        if m < 1:
            raise ValueError("cyclotomic index must be positive")
        self.m = m
        self.coeffs = tuple(poly) if reduced else _reduce(list(poly), m)

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls) -> "AlgebraicValue":
        return cls(1, (0,), reduced=True)

    @classmethod
    def from_rational(cls, r) -> "AlgebraicValue":
        return cls(1, (r,), reduced=True)

    @classmethod
    def root_of_unity(cls, m: int, e: int) -> "AlgebraicValue":
        poly = [0] * m
        poly[e % m] = 1
        return cls(m, poly)

    @classmethod
    def sqrt_discriminant(cls, d: int) -> "AlgebraicValue":
        """sqrt(d) for a fundamental discriminant d (i*sqrt(|d|) when d < 0)."""
        chi = kronecker_character(d)
        if chi.conductor != abs(d):
            raise ValueError(f"{d} is not a fundamental discriminant")
        return gauss_sum(chi, 1)

    # arithmetic -------------------------------------------------------
    def _lift(self, L: int) -> list:
        step = L // self.m
        poly = [0] * L
        for j, c in enumerate(self.coeffs):
            if c:
                poly[j * step] += c
        return poly

    def _common(self, other: "AlgebraicValue"):
        L = math.lcm(self.m, other.m)
        if self.m == other.m:
            return L, list(self.coeffs), list(other.coeffs)
        return L, list(_reduce(self._lift(L), L)), list(_reduce(other._lift(L), L))

    @staticmethod
    def _coerce(x) -> "AlgebraicValue":
        if isinstance(x, AlgebraicValue):
            return x
        if isinstance(x, (int, Fraction)):
            return AlgebraicValue.from_rational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        L, a, b = self._common(other)
        return AlgebraicValue(L, [x + y for x, y in zip(a, b)], reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicValue(self.m, [-c for c in self.coeffs], reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicValue(self.m, [c * other for c in self.coeffs], reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        L, a, b = self._common(other)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return AlgebraicValue(L, prod)

    __rmul__ = __mul__

    def conjugate(self) -> "AlgebraicValue":
        poly = [0] * self.m
        for j, c in enumerate(self.coeffs):
            poly[(-j) % self.m] += c
        return AlgebraicValue(self.m, poly)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        _, a, b = self._common(other)
        return a == b

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_complex(self) -> complex:
        return sum(
            (complex(c) * cmath.exp(2j * math.pi * j / self.m) for j, c in enumerate(self.coeffs) if c),
            0j,
        )

    def __complex__(self):
        return self.to_complex()

    def as_rational(self):
        """The value as a Fraction if it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return Fraction(self.coeffs[0])
        return None

    def as_quadratic(self, d: int):
        """Return (a, b) with self == a + b*sqrt(d), or None if impossible."""
        r = self.as_rational()
        if r is not None:
            return r, Fraction(0)
        s = AlgebraicValue.sqrt_discriminant(d)
        L, v, w = self._common(s)
        idx = next((i for i in range(1, len(w)) if w[i]), None)
        if idx is None:
            return None
        b = Fraction(v[idx]) / w[idx]
        a = Fraction(v[0]) - b * w[0]
        if self == s * b + a:
            return a, b
        return None

    def __str__(self):
        r = self.as_rational()
        if r is not None:
            return str(r)
        for d in (5, 8, 12, 13, -3, -4, -7, -8):
            try:
                ab = self.as_quadratic(d)
            except ValueError:
                continue
            if ab is not None:
                a, b = ab
                root = f"sqrt({d})"
                return f"{b}*{root}" if a == 0 else f"{a}+{b}*{root}"
        return repr(self)

    def __repr__(self):
        terms = [f"{c}*z{self.m}^{j}" for j, c in enumerate(self.coeffs) if c]
        return "AlgebraicValue(" + (" + ".join(terms) or "0") + ")"


def _divisors(n: int) -> list[int]:
    return sorted(d for d in range(1, n + 1) if n % d == 0)


def _unit_group(N: int):
    """Cyclic decomposition of (Z/N)^x.

    Returns (orders, logs) where ``logs[n]`` is the exponent vector of the
    unit n with respect to fixed generators (smallest primitive roots for odd
    prime powers; -1 and 5 for 2^a with a >= 3).
    """
    components = []  # (prime power q, [(generator, order), ...])
    for p, a in sorted(factorint(N).items()):
        q = p**a
        if p == 2:
            if a == 1:
                continue
            if a == 2:
                components.append((q, [(q - 1, 2)]))
            else:
                components.append((q, [(q - 1, 2), (5, 2 ** (a - 2))]))
        else:
            components.append((q, [(primitive_root(q), (p - 1) * p ** (a - 1))]))

    orders = [o for _, gens in components for _, o in gens]
    local_logs = []
    for q, gens in components:
        table = {}
        ranges = [range(o) for _, o in gens]
        for exps in itertools.product(*ranges):
            r = 1
            for (g, _), e in zip(gens, exps):
                r = r * pow(g, e, q) % q
            table[r] = exps
        local_logs.append((q, table))

    logs = {}
    for n in range(N):
        if math.gcd(n, N) != 1:
            continue
        vec = ()
        for q, table in local_logs:
            vec += table[n % q]
        logs[n] = vec
    return orders, logs


_conductor_lock = threading.Lock()


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod ``modulus``.

    ``exponents[n]`` is ``e`` with chi(n) = exp(2 pi i e / order), or None when
    gcd(n, modulus) > 1.  ``order`` is the exact order of the character.
    Calling the character returns a complex number; use :func:`evaluate` for
    the exact value.
    """

    modulus: int
    order: int
    exponents: tuple
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        N = self.modulus
        if N < 1 or len(self.exponents) != N:
            raise ValueError("value table must have one entry per residue")
        for n, e in enumerate(self.exponents):
            if (e is None) != (math.gcd(n, N) != 1):
                raise ValueError(f"chi({n}) must vanish exactly off the units mod {N}")
        units = [e for e in self.exponents if e is not None]
        g = math.gcd(self.order, *units)
        if g != 1:
            object.__setattr__(self, "order", self.order // g)
            object.__setattr__(self, "exponents", tuple(None if e is None else (e // g) % (self.order) for e in self.exponents))
        else:
            object.__setattr__(self, "exponents", tuple(None if e is None else e % self.order for e in self.exponents))
        if self.exponents[1 % N] != 0:
            raise ValueError("chi(1) must be 1")

    # values -----------------------------------------------------------
    @property
    def values(self) -> np.ndarray:
        vals = self._cache.get("values")
        if vals is None:
            vals = np.array(
                [0j if e is None else cmath.exp(2j * math.pi * e / self.order) for e in self.exponents]
            )
            for n, e in enumerate(self.exponents):
                if e is not None and (2 * e) % self.order == 0:
                    vals[n] = 1.0 if e == 0 else -1.0
            vals.setflags(write=False)
            self._cache["values"] = vals
        return vals

    def __call__(self, n: int) -> complex:
        return complex(self.values[n % self.modulus])

    def value(self, n: int) -> AlgebraicValue:
        e = self.exponents[n % self.modulus]
        if e is None:
            return AlgebraicValue.zero()
        return AlgebraicValue.root_of_unity(self.order, e)

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    def int_value(self, n: int) -> int:
        """chi(n) as an int; only for real characters."""
        if not self.is_real:
            raise ValueError("character is not real valued")
        e = self.exponents[n % self.modulus]
        if e is None:
            return 0
        return 1 if e == 0 else -1

    def int_table(self) -> list[int]:
        return [self.int_value(n) for n in range(self.modulus)]

    # structure --------------------------------------------------------
    @property
    def is_principal(self) -> bool:
        return self.order == 1

    @property
    def is_even(self) -> bool:
        return self.exponents[(-1) % self.modulus] == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    @property
    def conductor(self) -> int:
        c = self._cache.get("conductor")
        if c is None:
            with _conductor_lock:
                c = self._cache.get("conductor")
                if c is None:
                    c = _compute_conductor(self)
                    self._cache["conductor"] = c
        return c

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def gauss_sums(self) -> np.ndarray:
        """Complex Gauss sums g_n for n = 0..modulus-1 (computed exactly, cached)."""
        gs = self._cache.get("gauss")
        if gs is None:
            gs = np.array([gauss_sum(self, n).to_complex() for n in range(self.modulus)])
            gs.setflags(write=False)
            self._cache["gauss"] = gs
        return gs

    def to_json(self) -> dict:
        vals = []
        for e in self.exponents:
            if e is None:
                vals.append(None)
            else:
                g = math.gcd(e, self.order)
                vals.append([self.order // g, e // g])
        return {
            "modulus": self.modulus,
            "conductor": self.conductor,
            "parity": self.parity,
            "values": vals,
        }

    def __repr__(self):
        return f"DirichletCharacter(modulus={self.modulus}, order={self.order}, exponents={self.exponents})"


def _compute_conductor(chi: DirichletCharacter) -> int:
    N = chi.modulus
    for d in _divisors(N):
        if all(e == 0 for n, e in enumerate(chi.exponents) if e is not None and n % d == 1 % d):
            return d
    return N


def principal_character(N: int) -> DirichletCharacter:
    return DirichletCharacter(N, 1, tuple(0 if math.gcd(n, N) == 1 else None for n in range(N)))


@lru_cache(maxsize=None)
def enumerate_characters(N: int) -> tuple[DirichletCharacter, ...]:
    """All phi(N) characters mod N, principal first, in a fixed order.

    The order sorts value tables lexicographically, reading chi(n) for the
    units n = 1, 2, ... as the fraction e/order in [0, 1).
    """
    if N < 1:
        raise ValueError("modulus must be positive")
    orders, logs = _unit_group(N)
    M = math.lcm(*orders) if orders else 1
    chars = []
    for js in itertools.product(*(range(o) for o in orders)):
        exps = tuple(
            None if n not in logs else sum(j * e * (M // o) for j, e, o in zip(js, logs[n], orders)) % M
            for n in range(N)
        )
        chars.append(DirichletCharacter(N, M, exps))

    def key(chi):
        return tuple(Fraction(e, chi.order) for e in chi.exponents if e is not None)

    chars.sort(key=key)
    return tuple(chars)


def evaluate(chi: DirichletCharacter, n: int) -> AlgebraicValue:
    """Exact value chi(n), extended periodically to all integers."""
    return chi.value(n)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def induce(chi: DirichletCharacter, new_modulus: int) -> DirichletCharacter:
    """The character mod new_modulus induced by chi (new_modulus must be a multiple)."""
    N = chi.modulus
    if new_modulus % N:
        raise ValueError(f"{N} does not divide {new_modulus}")
    exps = tuple(
        chi.exponents[k % N] if math.gcd(k, new_modulus) == 1 else None for k in range(new_modulus)
    )
    return DirichletCharacter(new_modulus, chi.order, exps)


def restrict(chi: DirichletCharacter, d: int | None = None) -> DirichletCharacter:
    """The character mod d inducing chi; d defaults to the conductor."""
    N = chi.modulus
    if d is None:
        d = chi.conductor
    if N % d or d % chi.conductor:
        raise ValueError(f"no character mod {d} induces this character")
    exps = []
    for r in range(d):
        if math.gcd(r, d) != 1:
            exps.append(None)
            continue
        n = next(r + d * t for t in range(N // d) if math.gcd(r + d * t, N) == 1)
        exps.append(chi.exponents[n])
    return DirichletCharacter(d, chi.order, tuple(exps))


def gauss_sum(chi: DirichletCharacter, n: int) -> AlgebraicValue:
    """g_n(chi) = sum_{k=1}^{N-1} chi(k) exp(2 pi i n k / N), exactly."""
    N = chi.modulus
    L = math.lcm(N, chi.order)
    poly = [0] * L
    for k in range(1, N):
        e = chi.exponents[k]
        if e is not None:
            poly[(e * (L // chi.order) + n * k * (L // N)) % L] += 1
    return AlgebraicValue(L, poly)


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d/n)."""
    if n == 0:
        return 1 if abs(d) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    if v:
        if d % 2 == 0:
            return 0
        n >>= v
        if v % 2 and d % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(d % n, n))


def _from_signs(N: int, table) -> DirichletCharacter:
    exps = tuple(None if t == 0 else (0 if t == 1 else 1) for t in table)
    chi = DirichletCharacter(N, 2, exps)
    for a in range(N):
        for b in range(N):
            if table[a * b % N] != table[a] * table[b]:
                raise ValueError("table is not multiplicative")
    return chi


@lru_cache(maxsize=None)
def kronecker_character(d: int) -> DirichletCharacter:
    """n -> (d/n) as a character of modulus |d| (4|d| unless d = 0, 1 mod 4)."""
    if d == 0:
        raise ValueError("d must be nonzero")
    N = abs(d) if d % 4 in (0, 1) else 4 * abs(d)
    return _from_signs(N, [kronecker(d, n) for n in range(N)])


@lru_cache(maxsize=None)
def legendre_character(p: int) -> DirichletCharacter:
    """n -> (n/p), the Legendre symbol in its top argument, mod an odd prime p."""
    return _from_signs(p, [kronecker(n, p) for n in range(p)])


CHARACTER_NAME_FORMS = ("kronecker:<d>", "legendre-top:<p>", "psi10", "principal:<N>", "mod:<N>:<index>")


def character_by_name(name: str) -> DirichletCharacter:
    """Resolve names like 'kronecker:8', 'legendre-top:5', 'psi10', 'mod:13:2'."""
    try:
        if name == "psi10":
            return induce(legendre_character(5), 10)
        kind, _, rest = name.partition(":")
        if kind == "kronecker":
            return kronecker_character(int(rest))
        if kind == "legendre-top":
            return legendre_character(int(rest))
        if kind == "principal":
            return principal_character(int(rest))
        if kind == "mod":
            N, _, idx = rest.partition(":")
            return enumerate_characters(int(N))[int(idx)]
    except (ValueError, IndexError) as exc:
        raise ValueError(f"bad character name {name!r}: {exc}") from None
    raise ValueError(f"unknown character name {name!r}; valid forms: {', '.join(CHARACTER_NAME_FORMS)}")
