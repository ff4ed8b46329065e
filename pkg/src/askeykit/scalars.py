"""Exact scalar types shared by every module.

Rational arithmetic is ``fractions.Fraction``.  ``GaussianRational`` adds an
exact complex layer (a + b*i with rational a, b) which is what makes identity
checks at points like e^{i*theta} = (3+4i)/5 possible without floating error.
Floating scalars are plain ``float`` / ``complex``.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

_REALS = (int, Fraction)


class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- constructors -----------------------------------------------------
    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _REALS):
            return cls(other)
        return None

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (GaussianRational(1) / self) ** (-exponent)
        result = GaussianRational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ---------------------------------------------------------
    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self):
        return self.im == 0

    def as_fraction(self):
        if self.im != 0:
            raise ValueError(f"{self!r} has a nonzero imaginary part")
        return self.re

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return abs(complex(self))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _REALS):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == complex(other)
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


I = GaussianRational(0, 1)


def is_exact(value) -> bool:
    """True when arithmetic on ``value`` is exact (no floating rounding)."""
    return isinstance(value, (int, Fraction, GaussianRational))


def conj(value):
    if isinstance(value, GaussianRational):
        return value.conjugate()
    if isinstance(value, complex):
        return value.conjugate()
    return value


def to_complex(value) -> complex:
    if isinstance(value, GaussianRational):
        return complex(value)
    return complex(value)


def real_part(value):
    if isinstance(value, GaussianRational):
        return value.re
    if isinstance(value, complex):
        return value.real
    return value


def imag_part(value):
    if isinstance(value, GaussianRational):
        return value.im
    if isinstance(value, complex):
        return value.imag
    return 0


def as_exact_real(value) -> Fraction:
    """Demote an exact scalar to Fraction, rejecting genuine complex values."""
    if isinstance(value, GaussianRational):
        return value.as_fraction()
    if isinstance(value, _REALS):
        return Fraction(value)
    raise TypeError(f"not an exact real scalar: {value!r}")
