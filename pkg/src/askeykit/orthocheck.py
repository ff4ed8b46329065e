"""Integration and summation engines.

Finite discrete sums run in exact rational arithmetic; Jackson q-integrals
and bilateral q-lattice sums truncate with geometric tail bounds; continuous
integrals use adaptive Gauss-Legendre panels after explicit substitutions
(endpoint-power smoothing, Moebius map or probed truncation for half lines).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import families
from .numerics import NonConvergenceError, gamma, sum_with_tail
from .polyalg import Poly
from .scalars import to_complex

# ---------------------------------------------------------------------------
# Exact finite discrete orthogonality
# ---------------------------------------------------------------------------


def discrete_orthogonality(fid: str, m: int, n: int, params: dict):
    """Sum_x w_x p_m p_n - h_n delta_mn, computed exactly over rationals."""
    masses = families.weight_masses(fid, params)
    pm = families.coeffs(fid, m, params)
    pn = families.coeffs(fid, n, params)
    s = sum(w * pm(lam) * pn(lam) for _, lam, w in masses)
    if m == n:
        s = s - families.norm(fid, n, params)
    return s


# ---------------------------------------------------------------------------
# Jackson q-integral and bilateral q-lattice sums
# ---------------------------------------------------------------------------


def jackson_q_integral(f, c, d, q, tol=1e-14):
    """integral_{-d}^{c} f(x) d_q x = (1-q) sum_k q^k (c f(c q^k) + d f(-d q^k))."""
    if not 0 < float(q) < 1:
        raise NonConvergenceError("jackson_q_integral needs 0 < q < 1")
    qc = to_complex(q)
    cc = to_complex(c)
    dc = to_complex(d)

    def terms():
        p = 1.0 + 0.0j
        while True:
            t = 0.0j
            if cc != 0:
                t += cc * f(cc * p)
            if dc != 0:
                t += dc * f(-dc * p)
            yield t * p
            p *= qc

    total, _ = sum_with_tail(terms(), rel_tol=tol, max_terms=20000)
    total = (1 - qc) * total
    if abs(total.imag) < 1e-300:
        return total.real
    return total


def jackson_q_integral_poly(p: Poly, c, d, q):
    """Exact Jackson q-integral of a polynomial (zero-tolerance mode)."""
    total = Fraction(0) * (q * 0 + 1)
    for m, coef in enumerate(p.coeffs):
        if coef == 0:
            continue
        lattice = (c ** (m + 1) - (-d) ** (m + 1)) * (1 - q) / (1 - q ** (m + 1))
        total = total + coef * lattice
    return total


def bilateral_q_sum(f, z_minus, z_plus, q, tol=1e-12, max_out=600):
    """q-integral over the bilateral lattice z_-. q^Z union z_+ q^Z.

    Inward terms (k >= 0) shrink geometrically with the measure; outward
    terms (k < 0) must decay because of the integrand, which is monitored.
    """
    if not (float(z_minus) < 0 < float(z_plus)):
        raise NonConvergenceError("bilateral lattice needs z_- < 0 < z_+")
    qc = float(q)
    zp, zm = to_complex(z_plus), to_complex(z_minus)

    def inward():
        p = 1.0 + 0.0j
        while True:
            yield p * (zp * f(zp * p) + abs(zm) * f(zm * p))
            p *= qc

    total_in, _ = sum_with_tail(inward(), rel_tol=tol, max_terms=20000)
    total_out = 0.0j
    scale = max(1.0, abs(total_in))
    p = 1.0 / qc
    decreasing_run = 0
    prev = math.inf
    for _ in range(max_out):
        t = p * (zp * f(zp * p) + abs(zm) * f(zm * p))
        total_out += t
        at = abs(t)
        if at < prev:
            decreasing_run += 1
        else:
            decreasing_run = 0
        prev = at
        if at <= tol * scale and decreasing_run >= 3:
            break
        p /= qc
    else:
        raise NonConvergenceError("outward bilateral tail did not decay")
    total = (1 - qc) * (total_in + total_out)
    if abs(total.imag) < 1e-300:
        return total.real
    return total


# ---------------------------------------------------------------------------
# Adaptive Gauss-Legendre quadrature
# ---------------------------------------------------------------------------

_GL_ORDER = 20
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_GL_ORDER)


def _panel(f, a, b):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0.0
    for xi, wi in zip(_GL_NODES, _GL_WEIGHTS):
        total = total + wi * f(mid + half * xi)
    return total * half


def _adaptive(f, a, b, tol, depth=0):
    whole = _panel(f, a, b)
    mid = 0.5 * (a + b)
    left = _panel(f, a, mid)
    right = _panel(f, mid, b)
    err = abs(left + right - whole)
    # floor: panel differences below a few ulps of the local mass carry no
    # information, so refining further only chases roundoff
    floor = 5e-15 * (abs(whole) + abs(left) + abs(right)) + 1e-280
    if err <= max(tol, floor):
        return left + right
    if depth >= 36:
        if err <= 1e4 * floor:
            return left + right
        raise NonConvergenceError("adaptive quadrature did not converge")
    return _adaptive(f, a, mid, tol / 2, depth + 1) + _adaptive(
        f, mid, b, tol / 2, depth + 1
    )


def _smooth_power(exponent):
    """Smallest k with k*(exponent+1) a positive integer (power substitution)."""
    e = Fraction(exponent).limit_denominator(64) + 1
    for k in (1, 2, 3, 4, 5, 6, 8, 12, 16):
        if (e * k).denominator == 1 and e * k >= 1:
            return k
    return 16


def integrate_interval(f, a, b, tol=1e-12, exp_a=0, exp_b=0):
    """Integrate f on [a, b]; exp_a/exp_b are algebraic endpoint exponents of
    the integrand ((x-a)^exp_a etc., > -1), smoothed by power substitution."""
    a = float(a)
    b = float(b)
    pieces = []
    mid = 0.5 * (a + b)
    if exp_a != 0:
        k = _smooth_power(exp_a)
        h = mid - a

        def left(v, k=k, h=h):
            x = a + h * v**k
            if x == a:  # substitution collapsed onto the endpoint
                return 0.0
            return f(x) * k * v ** (k - 1) * h

        pieces.append((left, 0.0, 1.0))
    else:
        pieces.append((f, a, mid))
    if exp_b != 0:
        k = _smooth_power(exp_b)
        h = b - mid

        def right(v, k=k, h=h):
            x = b - h * v**k
            if x == b:
                return 0.0
            return f(x) * k * v ** (k - 1) * h

        pieces.append((right, 0.0, 1.0))
    else:
        pieces.append((f, mid, b))
    return sum(_adaptive(g, lo, hi, tol / 2) for g, lo, hi in pieces)


def integrate_halfline(f, a=0.0, tol=1e-12, exp_a=0, algebraic_tail=None):
    """Integrate f on [a, infinity).

    ``algebraic_tail`` = s when f ~ x^s (s < -1) at infinity: a Moebius map
    turns the tail into an algebraic endpoint.  Otherwise the integrand must
    decay superpolynomially and the domain is truncated by probing.
    """
    if algebraic_tail is not None:
        s = float(algebraic_tail)
        if s >= -1:
            raise NonConvergenceError("algebraic tail must decay faster than 1/x")
        shift = a - 1.0

        def g(u):
            x = shift + 1.0 / (1.0 - u)
            return f(x) / (1.0 - u) ** 2

        return integrate_interval(g, 0.0, 1.0, tol, exp_a=exp_a, exp_b=-s - 2)
    x_max = a + 16.0
    scale = max(abs(f(a + 0.5)), abs(f(a + 1.0)), 1e-30)
    for _ in range(60):
        probes = [x_max, 1.25 * x_max, 1.6 * x_max]
        if all(abs(f(x)) <= tol * scale * 1e-3 for x in probes):
            break
        x_max *= 1.6
    else:
        raise NonConvergenceError("no superpolynomial decay detected")
    return integrate_interval(f, a, x_max, tol, exp_a=exp_a)


def integrate_jacobi_weighted(f, alpha, beta, tol=1e-12):
    """integral_{-1}^{1} f(x) (1-x)^alpha (1+x)^beta dx.

    Substitutes x = cos(u) so the endpoint distances 1 -+ x become
    2 sin^2(u/2) / 2 cos^2(u/2), avoiding the cancellation that makes
    negative exponents unevaluable near the endpoints.
    """
    af, bf = float(alpha), float(beta)

    def g(u):
        s, c = math.sin(0.5 * u), math.cos(0.5 * u)
        return f(math.cos(u)) * (2 * s * s) ** af * (2 * c * c) ** bf * math.sin(u)

    return integrate_interval(
        g,
        0.0,
        math.pi,
        tol,
        exp_a=(2 * af + 1) if af < 0 else 0,
        exp_b=(2 * bf + 1) if bf < 0 else 0,
    )


def integrate_line(f, tol=1e-12):
    """Integrate f over the real line (superexponentially decaying f)."""
    x_max = 16.0
    scale = max(abs(f(0.0)), abs(f(0.5)), 1e-30)
    for _ in range(60):
        if abs(f(x_max)) <= tol * scale * 1e-3 and abs(f(-x_max)) <= tol * scale * 1e-3:
            break
        x_max *= 1.5
    else:
        raise NonConvergenceError("no decay detected on the line")
    return integrate_interval(f, -x_max, x_max, tol)


# ---------------------------------------------------------------------------
# Integral-transform checks (fixed catalog, 5 sample points each)
# ---------------------------------------------------------------------------


def _hermite_poly(n):
    return families.coeffs("hermite", n, {})


def _transform_fourier_gegenbauer(lam, n, x, tol):
    # weighted Gegenbauer Fourier transform against the Bessel closed form
    from .numerics import bessel_j

    cn = families.coeffs("gegenbauer", n, {"lam": lam})
    unit = cn(Fraction(1))
    e = float(lam) - 0.5

    re = integrate_jacobi_weighted(
        lambda y: float(cn(y)) / float(unit) * math.cos(x * y), e, e, tol
    )
    im = integrate_jacobi_weighted(
        lambda y: float(cn(y)) / float(unit) * math.sin(x * y), e, e, tol
    )
    lhs = complex(re, im) * gamma(float(lam) + 1) / (
        gamma(float(lam) + 0.5) * gamma(0.5)
    )
    rhs = (
        (1j**n)
        * 2 ** float(lam)
        * gamma(float(lam) + 1)
        * x ** (-float(lam))
        * bessel_j(float(lam) + n, x)
    )
    return abs(lhs - rhs)


def _transform_fourier_laguerre(al, n, x, tol):
    # kernel orientation e^{-ixy} makes the stated closed form hold with
    # (ix+1) in the denominator
    ln = families.coeffs("laguerre", n, {"alpha": al})
    l0 = ln(Fraction(0))
    alf = float(al)

    def g(y):
        return float(ln(y)) / float(l0) * math.exp(-y) * y**alf * complex(
            math.cos(x * y), -math.sin(x * y)
        )

    def gr(y):
        return g(y).real

    def gi(y):
        return g(y).imag

    re = integrate_halfline(gr, 0.0, tol, exp_a=alf)
    im = integrate_halfline(gi, 0.0, tol, exp_a=alf)
    lhs = complex(re, im) / gamma(alf + 1)
    rhs = (1j * x) ** n / (1 + 1j * x) ** (n + alf + 1)
    return abs(lhs - rhs)


def _transform_hermite_self(n, x, tol):
    hn = _hermite_poly(n)

    def g(y):
        return float(hn(y)) * math.exp(-0.5 * y * y) * complex(
            math.cos(x * y), math.sin(x * y)
        )

    re = integrate_line(lambda y: g(y).real, tol)
    im = integrate_line(lambda y: g(y).imag, tol)
    lhs = complex(re, im) / math.sqrt(2 * math.pi)
    rhs = (1j**n) * float(hn(Fraction(x).limit_denominator(10**12))) * math.exp(
        -0.5 * x * x
    )
    return abs(lhs - rhs)


def _transform_hermite_monomial(n, x, tol):
    hn = _hermite_poly(n)

    def g(y):
        return float(hn(y)) * math.exp(-y * y) * complex(math.cos(x * y), math.sin(x * y))

    re = integrate_line(lambda y: g(y).real, tol)
    im = integrate_line(lambda y: g(y).imag, tol)
    lhs = complex(re, im) / math.sqrt(math.pi)
    rhs = (1j**n) * x**n * math.exp(-0.25 * x * x)
    return abs(lhs - rhs)


def _transform_monomial_hermite(n, x, tol):
    hn = _hermite_poly(n)

    def g(y):
        return y**n * math.exp(-0.25 * y * y) * complex(math.cos(-x * y), math.sin(-x * y))

    re = integrate_line(lambda y: g(y).real, tol)
    im = integrate_line(lambda y: g(y).imag, tol)
    lhs = (1j**n) * complex(re, im) / (2 * math.sqrt(math.pi))
    rhs = float(hn(Fraction(x).limit_denominator(10**12))) * math.exp(-x * x)
    return abs(lhs - rhs)


def _transform_gegenbauer_to_hermite(lam, n, x, tol):
    # t = cos(u) keeps (1 - t^2)^{lam - 1/2} stable for lam < 1/2
    cn = families.coeffs("gegenbauer", n, {"lam": lam})
    unit = cn(Fraction(1))
    lamf = float(lam)
    hn = _hermite_poly(n)

    def g(u):
        t = math.cos(u)
        if x * x / (t * t) > 700:  # essential zero; avoid 0 * inf
            return 0.0
        s = math.sin(u)
        return (
            float(cn(Fraction(t).limit_denominator(10**12)))
            / float(unit)
            * s ** (2 * lamf)
            * t ** (-n - 2 * lamf - 2)
            * math.exp(-x * x / (t * t))
        )

    lhs = (
        2
        / gamma(lamf + 0.5)
        * x ** (n + 2 * lamf + 1)
        * integrate_interval(
            g, 0.0, 0.5 * math.pi, tol, exp_a=(2 * lamf if lamf < 0 else 0)
        )
    )
    rhs = 2.0**-n * float(hn(Fraction(x).limit_denominator(10**12))) * math.exp(-x * x)
    return abs(lhs - rhs)


def _transform_hermite_to_gegenbauer(lam, n, x, tol):
    hn = _hermite_poly(n)
    cn = families.coeffs("gegenbauer", n, {"lam": lam})
    lamf = float(lam)

    def g(t):
        return float(hn(t * x)) * t ** (n + 2 * lamf - 1) * math.exp(-t * t)

    lhs = 2 / (math.factorial(n) * gamma(lamf)) * integrate_halfline(
        g, 0.0, tol, exp_a=n + 2 * lamf - 1
    )
    rhs = float(cn(Fraction(x).limit_denominator(10**12)))
    return abs(lhs - rhs)


TRANSFORM_SAMPLES = {
    "fourier_gegenbauer_bessel": [(Fraction(3, 4), 0), (Fraction(3, 4), 1),
                                  (Fraction(3, 4), 2), (Fraction(1, 2), 3),
                                  (Fraction(2), 2)],
    "fourier_laguerre": [(Fraction(0), 0), (Fraction(1, 2), 1), (Fraction(1, 2), 2),
                         (Fraction(1), 3), (Fraction(2), 2)],
    "fourier_hermite_self": [0, 1, 2, 3, 4],
    "fourier_hermite_monomial": [0, 1, 2, 3, 4],
    "fourier_monomial_hermite": [0, 1, 2, 3, 4],
    "laplace_hermite_to_gegenbauer": [(Fraction(-1, 4), 1), (Fraction(1, 2), 2),
                                      (Fraction(2), 2), (Fraction(3, 4), 3),
                                      (Fraction(1, 2), 0)],
    "laplace_gegenbauer_to_hermite": [(Fraction(-1, 4), 1), (Fraction(1, 2), 2),
                                      (Fraction(2), 2), (Fraction(3, 4), 3),
                                      (Fraction(1, 2), 0)],
}

_XGRID = [0.5, 0.7, 1.3, 2.4, 3.6]
_XGRID_SMALL = [0.3, 0.45, 0.6, 0.75, 0.9]


def transform_check(transform_id: str, tol=1e-10):
    """Run one transform over its 5-point catalog; return max |residual|."""
    worst = 0.0
    if transform_id == "fourier_gegenbauer_bessel":
        for (lam, n), x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID):
            worst = max(worst, _transform_fourier_gegenbauer(lam, n, x, tol))
    elif transform_id == "fourier_laguerre":
        for (al, n), x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID):
            worst = max(worst, _transform_fourier_laguerre(al, n, x, tol))
    elif transform_id == "fourier_hermite_self":
        for n, x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID):
            worst = max(worst, _transform_hermite_self(n, x, tol))
    elif transform_id == "fourier_hermite_monomial":
        for n, x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID):
            worst = max(worst, _transform_hermite_monomial(n, x, tol))
    elif transform_id == "fourier_monomial_hermite":
        for n, x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID):
            worst = max(worst, _transform_monomial_hermite(n, x, tol))
    elif transform_id == "laplace_hermite_to_gegenbauer":
        for (lam, n), x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID_SMALL):
            worst = max(worst, _transform_hermite_to_gegenbauer(lam, n, x, tol))
    elif transform_id == "laplace_gegenbauer_to_hermite":
        for (lam, n), x in zip(TRANSFORM_SAMPLES[transform_id], _XGRID_SMALL):
            worst = max(worst, _transform_gegenbauer_to_hermite(lam, n, x, tol))
    else:
        raise KeyError(f"unknown transform {transform_id!r}")
    return worst
