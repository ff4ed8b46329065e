"""Generalized and basic hypergeometric machinery.

Pochhammer symbols, rFs and r-phi-s series, very-well-poised 8W7, theta
products and Appell's F4.  Terminating series over exact scalars evaluate
exactly; non-terminating ones fall back to floating summation with a
monitored geometric tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import NonConvergenceError, sum_with_tail
from .scalars import GaussianRational, is_exact, to_complex

_TERMINATION_CAP = 600


@dataclass(frozen=True)
class HypSpec:
    """One hypergeometric series: upper/lower parameters, base, argument.

    ``base`` is None for an ordinary rFs; otherwise the series is the
    q-analogue with that base (which may exceed 1 for inverted-base series,
    as long as the series terminates).
    """

    upper: tuple
    lower: tuple
    argument: object
    base: object = None


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); exact on exact scalars."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    result = _one_like(a)
    for k in range(n):
        result = result * (a + k)
    return result


def q_pochhammer(a, q, n=None):
    """q-shifted factorial (a; q)_n; n=None means the infinite product.

    Finite products are exact over exact scalars.  The infinite product
    requires |q| < 1 and is truncated once the remaining factors are within
    machine distance of 1 (returned value is float/complex).
    """
    if n is not None:
        if n < 0:
            raise ValueError("q_pochhammer needs n >= 0 or n=None")
        result = _one_like(a)
        p = _one_like(a)
        for _ in range(n):
            result = result * (1 - a * p)
            p = p * q
        return result
    qa = abs(to_complex(q))
    if qa >= 1:
        raise NonConvergenceError("(a; q)_infinity requires |q| < 1")
    ac = to_complex(a)
    qc = to_complex(q)
    result = 1.0 + 0.0j
    p = 1.0 + 0.0j
    for _ in range(100000):
        factor = 1 - ac * p
        if factor == 0:
            return 0.0
        result *= factor
        p *= qc
        if abs(ac * p) < 1e-18:
            break
    if abs(result.imag) == 0:
        return result.real
    return result


def _one_like(a):
    if is_exact(a):
        return Fraction(1) if not isinstance(a, GaussianRational) else GaussianRational(1)
    if isinstance(a, complex):
        return 1.0 + 0.0j
    return 1.0


def _is_nonpositive_int(a):
    """Return n >= 0 such that a == -n, else None (exact and float scalars)."""
    if isinstance(a, GaussianRational):
        if a.im != 0:
            return None
        a = a.re
    if isinstance(a, (int, Fraction)):
        f = Fraction(a)
        if f.denominator == 1 and f <= 0:
            return -int(f)
        return None
    if isinstance(a, complex):
        if abs(a.imag) > 1e-12:
            return None
        a = a.real
    r = round(a)
    if a <= 1e-12 and abs(a - r) < 1e-12:
        return -int(r)
    return None


def _q_termination_index(a, q):
    """Return n >= 0 such that a == q^(-n), else None."""
    if a == 0:
        return None
    t = a
    for n in range(_TERMINATION_CAP + 1):
        if is_exact(t) and is_exact(q):
            if t == 1:
                return n
        else:
            if abs(to_complex(t) - 1) < 1e-12:
                return n
        t = t * q
    return None


def hyp(spec: HypSpec):
    """Evaluate an ordinary rFs series.

    Terminating series over exact scalars evaluate exactly; otherwise the
    series is summed in floating point inside its convergence domain.
    """
    if spec.base is not None:
        return qhyp(spec)
    upper, lower, z = spec.upper, spec.lower, spec.argument
    lengths = [m for m in (_is_nonpositive_int(u) for u in upper) if m is not None]
    n_terms = min(lengths) + 1 if lengths else None
    if n_terms is not None:
        for (l_) in lower:
            m = _is_nonpositive_int(l_)
            if m is not None and m < n_terms - 1:
                raise ZeroDivisionError(
                    f"lower parameter {l_} truncates before the series terminates"
                )
        term = _one_like(z)
        total = term
        for k in range(n_terms - 1):
            for u in upper:
                term = term * (u + k)
            for l_ in lower:
                term = term / (l_ + k)
            term = term * z / (k + 1)
            total = total + term
        return total
    # non-terminating: floating evaluation
    r, s = len(upper), len(lower)
    if r > s + 1:
        raise NonConvergenceError("non-terminating series with r > s+1 diverges")
    if r == s + 1 and abs(to_complex(z)) >= 1:
        raise NonConvergenceError("rFs with r = s+1 needs |z| < 1")
    zc = to_complex(z)
    uc = [to_complex(u) for u in upper]
    lc = [to_complex(l_) for l_ in lower]

    def terms():
        term = 1.0 + 0.0j
        k = 0
        while True:
            yield term
            num = 1.0 + 0.0j
            for u in uc:
                num *= u + k
            den = k + 1.0
            for l_ in lc:
                den *= l_ + k
            term = term * num / den * zc
            k += 1

    total, _ = sum_with_tail(terms())
    if abs(total.imag) == 0:
        return total.real
    return total


def qhyp(spec: HypSpec):
    """Evaluate an r-phi-s basic hypergeometric series with base ``spec.base``.

    Includes the standard [(-1)^k q^C(k,2)]^(s+1-r) factor, so series with
    r != s+1 (zero parameters removed, inverted bases) are covered.
    """
    upper, lower, z, q = spec.upper, spec.lower, spec.argument, spec.base
    r, s = len(upper), len(lower)
    extra = s + 1 - r
    lengths = [m for m in (_q_termination_index(u, q) for u in upper) if m is not None]
    n_terms = min(lengths) + 1 if lengths else None
    if n_terms is not None:
        for l_ in lower:
            m = _q_termination_index(l_, q)
            if m is not None and m < n_terms - 1:
                raise ZeroDivisionError(
                    f"lower parameter {l_} truncates before the series terminates"
                )
        term = _one_like(z)
        total = term
        qpow = _one_like(z)  # q^k
        for k in range(n_terms - 1):
            for u in upper:
                term = term * (1 - u * qpow)
            for l_ in lower:
                term = term / (1 - l_ * qpow)
            term = term / (1 - q * qpow)
            if extra:
                term = term * (-qpow) ** extra if extra > 0 else term / (-qpow) ** (-extra)
            term = term * z
            total = total + term
            qpow = qpow * q
        return total
    if abs(to_complex(q)) >= 1:
        raise NonConvergenceError("non-terminating q-series needs |q| < 1")
    zc = to_complex(z)
    qc = to_complex(q)
    uc = [to_complex(u) for u in upper]
    lc = [to_complex(l_) for l_ in lower]

    def terms():
        term = 1.0 + 0.0j
        qpow = 1.0 + 0.0j
        while True:
            yield term
            num = 1.0 + 0.0j
            for u in uc:
                num *= 1 - u * qpow
            den = 1 - qc * qpow
            for l_ in lc:
                den *= 1 - l_ * qpow
            term = term * num / den * zc
            if extra:
                term = term * (-qpow) ** extra
            qpow *= qc

    total, _ = sum_with_tail(terms())
    if abs(total.imag) == 0:
        return total.real
    return total


def w8_7(a1, a4, a5, a6, a7, a8, q, z):
    """Terminating very-well-poised 8W7 series.

    The well-poised pair of square-root parameters enters only through the
    factor (1 - a1 q^{2k}) / (1 - a1), so no square roots are ever taken and
    exact scalars stay exact.
    """
    rest = (a4, a5, a6, a7, a8)
    lengths = [m for m in (_q_termination_index(a, q) for a in rest) if m is not None]
    if not lengths:
        raise NonConvergenceError("w8_7 requires a terminating parameter q^(-n)")
    n_terms = min(lengths) + 1
    term = _one_like(z)
    total = term
    qpow = _one_like(z)
    for k in range(n_terms - 1):
        term = term * (1 - a1 * qpow)
        for a in rest:
            term = term * (1 - a * qpow)
        for a in rest:
            term = term / (1 - q * a1 / a * qpow)
        term = term / (1 - q * qpow)
        term = term * z
        qpow = qpow * q
        total = total + term * (1 - a1 * qpow * qpow) / (1 - a1)
    return total


def w8_7_spec(a1, a4, a5, a6, a7, a8, q, z, sqrt_a1):
    """The literal 8-phi-7 spec induced by the very-well-poised notation.

    Caller must supply an exact square root of a1 (used by the definition
    unfolding check).
    """
    upper = (a1, q * sqrt_a1, -q * sqrt_a1, a4, a5, a6, a7, a8)
    lower = (sqrt_a1, -sqrt_a1, q * a1 / a4, q * a1 / a5, q * a1 / a6,
             q * a1 / a7, q * a1 / a8)
    return HypSpec(upper=upper, lower=lower, argument=z, base=q)


def theta(x, q):
    """theta(x; q) = (x; q)_inf (q/x; q)_inf for |q| < 1, x != 0."""
    if x == 0:
        raise ValueError("theta requires x != 0")
    if is_exact(x) and is_exact(q):
        # exact zero exactly on the lattice x in q^Z
        t = x
        for _ in range(_TERMINATION_CAP):
            if t == 1:
                return 0.0
            t = t * q
        t = x
        for _ in range(_TERMINATION_CAP):
            if t == 1:
                return 0.0
            t = t / q
    a = q_pochhammer(x, q, None)
    b = q_pochhammer(_div(q, x), q, None)
    return a * b


def theta_multi(xs, q):
    result = 1.0
    for x in xs:
        result = result * theta(x, q)
    return result


def _div(a, b):
    if is_exact(a) and is_exact(b):
        if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
            return GaussianRational._coerce(a) / GaussianRational._coerce(b)
        return Fraction(a) / Fraction(b)
    return to_complex(a) / to_complex(b)


def appell_f4(a, b, c, c2, x, y):
    """Appell F4 double series, summed by total degree with a tail bound.

    Requires |x|^(1/2) + |y|^(1/2) < 1.
    """
    xa, ya = abs(to_complex(x)), abs(to_complex(y))
    if math.sqrt(xa) + math.sqrt(ya) >= 1:
        raise NonConvergenceError("appell_f4 outside |x|^(1/2)+|y|^(1/2) < 1")
    ac, bc, cc, c2c = (to_complex(v) for v in (a, b, c, c2))
    xc, yc = to_complex(x), to_complex(y)

    def diagonal_blocks():
        # row[m] = term (m, s-m) for the current total degree s
        row = [1.0 + 0.0j]
        s = 0
        while True:
            yield sum(row)
            # advance total degree: term(m, n+1) from term(m, n)
            new = []
            for m, t in enumerate(row):
                n = s - m
                new.append(t * (ac + s) * (bc + s) / ((c2c + n) * (n + 1)) * yc)
            # term(s+1, 0) from term(s, 0)
            new.append(row[-1] * (ac + s) * (bc + s) / ((cc + s) * (s + 1)) * xc)
            row = new
            s += 1

    total, _ = sum_with_tail(diagonal_blocks(), rel_tol=1e-15, max_terms=400)
    if abs(total.imag) == 0:
        return total.real
    return total


def euler_qpoch_coeffs(q, order: int):
    """Power-series coefficients of (t; q)_infinity in t, through t^order.

    Exact via Euler's expansion: coefficient of t^k is
    (-1)^k q^(k(k-1)/2) / (q; q)_k.
    """
    coeffs = []
    for k in range(order + 1):
        num = (-1) ** k * q ** (k * (k - 1) // 2)
        coeffs.append(num / q_pochhammer(q, q, k))
    return coeffs
