"""Exact arithmetic in the cyclotomic fields Q(zeta_e).

A value of order e is stored by its coordinates in the power basis
{zeta_e^k : 0 <= k < phi(e)}, with rational coefficients reduced modulo the
e-th cyclotomic polynomial.  The reduced coordinate vector is a normal form,
so equality and zero tests are exact; no floating arithmetic enters any
logic path.  Values of different orders are lifted to the lcm order before
they are combined.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient of n."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; the division is known to be exact.
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dn]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of the e-th cyclotomic polynomial, ascending."""
    if e < 1:
        raise ValueError("cyclotomic_polynomial requires e >= 1")
    if e == 1:
        return (-1, 1)
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(dense: list, e: int) -> list:
    # Polynomial remainder modulo the e-th cyclotomic polynomial; entries may
    # be ints or Fractions and keep their type (the divisor is integral).
    phi = euler_phi(e)
    cyc = cyclotomic_polynomial(e)
    poly = list(dense)
    if len(poly) < phi:
        poly += [0] * (phi - len(poly))
    for k in range(len(poly) - 1, phi - 1, -1):
        c = poly[k]
        if c:
            base = k - phi
            for j in range(phi):
                cj = cyc[j]
                if cj:
                    poly[base + j] -= c * cj
            poly[k] = 0
    return poly[:phi]


def _int_vector(coeffs) -> tuple[list[int], int]:
    # common-denominator form: coeffs == ints / den
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


_TERM_RE = re.compile(r"^(?P<coef>-?\d+(?:/\d+)?)?(?P<star>\*)?(?P<z>z(?:\^(?P<exp>\d+))?)?$")


class Cyclotomic:
    """An exact element of Q(zeta_order) in reduced power-basis form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs, _normal: bool = False):
        if order < 1:
            raise ValueError("order must be a positive integer")
        self.order = order
        if _normal:
            self.coeffs = coeffs
            return
        dense = [_ZERO] * order
        for k, c in enumerate(coeffs):
            if c:
                dense[k % order] += Fraction(c)
        self.coeffs = tuple(Fraction(c) for c in _reduce(dense, order))

    # construction

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "Cyclotomic":
        phi = euler_phi(order)
        coeffs = (Fraction(value),) + (_ZERO,) * (phi - 1)
        return cls(order, coeffs, _normal=True)

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "Cyclotomic":
        return cls.from_rational(1, order)

    @classmethod
    def root(cls, order: int, k: int = 1) -> "Cyclotomic":
        """zeta_order^k."""
        k %= order
        dense = [_ZERO] * (k + 1)
        dense[k] = _ONE
        return cls(order, dense)

    # coercion helpers

    @staticmethod
    def _coerce(value, order: int) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.from_rational(value, order)
        return NotImplemented  # type: ignore[return-value]

    def lifted(self, new_order: int) -> "Cyclotomic":
        """The same value viewed in Q(zeta_new_order); requires order | new_order."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {new_order}")
        step = new_order // self.order
        dense = [_ZERO] * new_order
        for k, c in enumerate(self.coeffs):
            if c:
                dense[k * step] += c
        return Cyclotomic(new_order, dense)

    def _pair(self, other):
        other = self._coerce(other, self.order)
        if other is NotImplemented:
            return None, None
        e = lcm(self.order, other.order)
        return self.lifted(e), other.lifted(e)

    # arithmetic

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), _normal=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs), _normal=True)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), _normal=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.order, tuple(c * q for c in self.coeffs), _normal=True)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        # convolve in common-denominator integer form; the reduction then
        # runs entirely on ints, which matters for large orders
        na, da = _int_vector(a.coeffs)
        nb, db = _int_vector(b.coeffs)
        out = [0] * (len(na) + len(nb) - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    if bj:
                        out[i + j] += ai * bj
        den = da * db
        coeffs = tuple(Fraction(n, den) for n in _reduce(out, a.order))
        return Cyclotomic(a.order, coeffs, _normal=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        if isinstance(other, Cyclotomic) and other.is_rational():
            return self / other.rational_value()
        raise TypeError("division is only supported by nonzero rationals")

    # Galois action

    def galois(self, t: int) -> "Cyclotomic":
        """Image under zeta |-> zeta^t, for t coprime to the order."""
        t %= self.order
        if gcd(t, self.order) != 1:
            raise ValueError(f"{t} is not invertible modulo {self.order}")
        ints, den = _int_vector(self.coeffs)
        dense = [0] * self.order
        for k, c in enumerate(ints):
            if c:
                dense[(k * t) % self.order] += c
        coeffs = tuple(Fraction(n, den) for n in _reduce(dense, self.order))
        return Cyclotomic(self.order, coeffs, _normal=True)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate (zeta |-> zeta^-1)."""
        return self.galois(self.order - 1) if self.order > 1 else self

    # predicates and extraction

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_integral(self) -> bool:
        """True when every power-basis coordinate is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def integer_value(self) -> int:
        q = self.rational_value()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __bool__(self) -> bool:
        return not self.is_zero()

    def key(self) -> tuple:
        """Hashable canonical key; comparable within a fixed order."""
        return (self.order, tuple((c.numerator, c.denominator) for c in self.coeffs))

    def __hash__(self):
        return hash(self.key())

    # display / serialization / numerics

    def approx(self) -> complex:
        """Floating approximation; for display and sanity checks only."""
        tau = 2 * cmath.pi / self.order
        return sum(float(c) * cmath.exp(1j * tau * k) for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append("-" + z)
                else:
                    parts.append(f"{c}*{z}")
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {self})"

    @classmethod
    def parse(cls, text: str, order: int) -> "Cyclotomic":
        """Parse the display form (`z` stands for zeta_order)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty cyclotomic literal")
        s = s.replace("-", "+-")
        if s.startswith("+"):
            s = s[1:]
        dense: dict[int, Fraction] = {}
        for token in s.split("+"):
            if not token:
                raise ValueError(f"malformed cyclotomic literal: {text!r}")
            m = _TERM_RE.match(token)
            if not m or (m.group("coef") is None and m.group("z") is None):
                # allow a bare "-z^k"
                if token.startswith("-") and _TERM_RE.match(token[1:]):
                    m = _TERM_RE.match(token[1:])
                    sign = -1
                else:
                    raise ValueError(f"malformed term {token!r} in {text!r}")
            else:
                sign = 1
            coef = m.group("coef")
            c = Fraction(coef) if coef is not None else Fraction(1)
            c *= sign
            if m.group("z"):
                k = int(m.group("exp") or 1)
            else:
                k = 0
            dense[k % order] = dense.get(k % order, _ZERO) + c
        top = max(dense) if dense else 0
        vec = [_ZERO] * (top + 1)
        for k, c in dense.items():
            vec[k] = c
        return cls(order, vec)

    def to_json(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, payload) -> "Cyclotomic":
        order = int(payload["order"])
        coeffs = tuple(Fraction(c) for c in payload["coeffs"])
        if len(coeffs) != euler_phi(order):
            raise ValueError("coefficient vector has the wrong length")
        return cls(order, coeffs, _normal=True)


def hermitian_term(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    """a * conjugate(b), the summand of the Hermitian inner product."""
    return a * b.conjugate()
