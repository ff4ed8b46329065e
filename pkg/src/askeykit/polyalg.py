"""Exact dense polynomial and Laurent-polynomial algebra.

Coefficient identities are compared on these types; all operations are
linear, exact over exact scalars, and never mutate their inputs.  Degrees at
desk scale stay below ~40, so dense storage is right.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, as_exact_real, is_exact


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return self._as_poly(other) + (-self)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        return Poly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return Poly([c / scalar for c in self.coeffs])

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self - other).is_zero
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    @staticmethod
    def _as_poly(v):
        return v if isinstance(v, Poly) else Poly([v])

    # -- evaluation / composition -------------------------------------------
    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def compose(self, inner: "Poly") -> "Poly":
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * inner + Poly([c])
        return result

    def compose_linear(self, a, b) -> "Poly":
        """p(a*x + b), exact."""
        return self.compose(Poly([b, a]))

    def reflect(self) -> "Poly":
        """p(-x)."""
        return Poly([(-1) ** k * c for k, c in enumerate(self.coeffs)])

    def shift_up(self, m: int) -> "Poly":
        """x^m * p(x)."""
        return Poly([0] * m + list(self.coeffs))

    def div_x(self) -> "Poly":
        """p(x)/x, asserting the constant term is exactly zero."""
        if self.is_zero:
            return Poly()
        if self.coeffs[0] != 0:
            raise ValueError("polynomial not divisible by x")
        return Poly(self.coeffs[1:])

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    def real_poly(self) -> "Poly":
        """Demote GaussianRational coefficients with zero imaginary part."""
        return self.map_coeffs(as_exact_real)


def derivative(p: Poly) -> Poly:
    return Poly([k * p.coeffs[k] for k in range(1, len(p.coeffs))])


def dunkl(p: Poly, mu) -> Poly:
    """Dunkl operator: p'(x) + mu * (p(x) - p(-x)) / x.

    The difference is odd, so the division by x is exact; asserting that
    structure catches programming errors early.
    """
    odd = p - p.reflect()
    return derivative(p) + mu * odd.div_x()


def substitute_quadratic(p: Poly) -> Poly:
    """p(2x^2 - 1), exact composition."""
    return p.compose(Poly([-1, 0, 2]))


class LaurentPoly:
    """Dense Laurent polynomial in z; exponents run from ``low`` upward."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs=(), low=0):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0

    @classmethod
    def term(cls, c, exponent):
        return cls([c], exponent)

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, exponent):
        idx = exponent - self.low
        return self.coeffs[idx] if 0 <= idx < len(self.coeffs) else 0

    def __add__(self, other):
        other = self._as_laurent(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        return LaurentPoly(
            [self.coeff(e) + other.coeff(e) for e in range(low, high + 1)], low
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        return self + (-self._as_laurent(other))

    def __rsub__(self, other):
        return self._as_laurent(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if self.is_zero or other.is_zero:
                return LaurentPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return LaurentPoly(out, self.low + other.low)
        return LaurentPoly([c * other for c in self.coeffs], self.low)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        return LaurentPoly([c / scalar for c in self.coeffs], self.low)

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction, GaussianRational)):
            return (self - self._as_laurent(other)).is_zero
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)!r}, low={self.low})"

    @staticmethod
    def _as_laurent(v):
        return v if isinstance(v, LaurentPoly) else LaurentPoly([v], 0)

    def __call__(self, z):
        pos = 0
        for c in reversed(self.coeffs):
            pos = pos * z + c
        return pos * z**self.low if not self.is_zero else 0 * z

    def reverse(self) -> "LaurentPoly":
        """z -> 1/z."""
        return LaurentPoly(list(reversed(self.coeffs)), -self.high)

    def is_palindromic(self) -> bool:
        return self == self.reverse()


def q_dilate(p: LaurentPoly, factor) -> LaurentPoly:
    """z -> factor * z: multiply the z^k coefficient by factor^k, exactly.

    Negative exponents use exact division, so ``factor`` must be invertible.
    """
    out = []
    for k in range(len(p.coeffs)):
        e = p.low + k
        if e >= 0:
            out.append(p.coeffs[k] * factor**e)
        else:
            out.append(p.coeffs[k] / factor ** (-e))
    return LaurentPoly(out, p.low)


def trig_realize(p: Poly) -> LaurentPoly:
    """Substitute x -> (z + 1/z)/2; the result is palindromic."""
    half_sum = LaurentPoly([Fraction(1, 2), 0, Fraction(1, 2)], -1)
    result = LaurentPoly()
    power = LaurentPoly([1], 0)
    for c in p.coeffs:
        result = result + power * c
        power = power * half_sum
    return result


def chebyshev_t_polys(n: int):
    """T_0 .. T_n by the three-term recurrence (independent oracle route)."""
    polys = [Poly([1])]
    if n >= 1:
        polys.append(Poly([0, 1]))
    for _ in range(2, n + 1):
        polys.append(Poly([0, 2]) * polys[-1] - polys[-2])
    return polys[: n + 1]


def laurent_to_chebyshev(p: LaurentPoly) -> Poly:
    """Invert trig_realize: palindromic Laurent in z -> polynomial in x.

    Uses z^m + z^-m = 2 T_m((z + 1/z)/2); requires palindromic input.
    """
    if not p.is_palindromic():
        raise ValueError("laurent_to_chebyshev needs a palindromic input")
    m_max = max(p.high, 0)
    t = chebyshev_t_polys(m_max)
    result = Poly([p.coeff(0)])
    for m in range(1, m_max + 1):
        c = p.coeff(m)
        if c != 0:
            result = result + t[m] * (2 * c)
    return result
