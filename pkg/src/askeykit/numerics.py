"""Numeric backends: tolerance policy, gamma, Bessel J, limit extrapolation.

Everything here is pure and reentrant; values are immutable after
construction.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .scalars import to_complex


class PoleError(ValueError):
    """Evaluation requested at a pole."""


class DomainError(ValueError):
    """Argument outside the supported desk-scale domain."""


class NonConvergenceError(ArithmeticError):
    """A truncated series / extrapolation failed to converge."""


class AdmissibilityError(ValueError):
    """Parameter set violates a family's admissibility predicate."""


# ---------------------------------------------------------------------------
# Tolerance policy
# ---------------------------------------------------------------------------


class Tol(enum.Enum):
    EXACT = "exact"
    TIGHT = "tight"
    LOOSE = "loose"


@dataclass(frozen=True)
class TolerancePolicy:
    """Central floating-comparison policy.

    EXACT comparisons never go through floats at all; TIGHT and LOOSE are
    relative tolerances used for truncated series, quadrature and
    extrapolated limits respectively.
    """

    tight: float = 1e-10
    loose: float = 1e-6

    def value(self, cls: Tol) -> float:
        if cls is Tol.EXACT:
            return 0.0
        if cls is Tol.TIGHT:
            return self.tight
        return self.loose

    @classmethod
    def from_env(cls) -> "TolerancePolicy":
        raw = os.environ.get("ASKEYKIT_TOL", "")
        kwargs = {}
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            key, _, val = part.partition("=")
            key = key.strip().lower()
            if key in ("tight", "loose"):
                kwargs[key] = float(val)
        return cls(**kwargs)

    def describe(self) -> dict:
        return {"exact": 0.0, "tight": self.tight, "loose": self.loose}


_POLICY = TolerancePolicy.from_env()


def policy() -> TolerancePolicy:
    return _POLICY


def rel_close(lhs, rhs, tol: float) -> bool:
    """|lhs - rhs| <= tol * max(1, |lhs|, |rhs|); accepts any scalar type."""
    a = to_complex(lhs)
    b = to_complex(rhs)
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) <= tol * scale


def residual(lhs, rhs) -> float:
    a = to_complex(lhs)
    b = to_complex(rhs)
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) / scale


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

_SQRT_PI = math.sqrt(math.pi)


def gamma(x: float) -> float:
    """Real gamma with exact integer / half-integer shortcuts.

    Raises PoleError at nonpositive integers.  Relative error <= 1e-13 on
    [-20, 50] (the shortcut paths are exact up to one rounding).
    """
    xf = Fraction(x) if not isinstance(x, Fraction) else x
    if xf.denominator == 1:
        n = int(xf)
        if n <= 0:
            raise PoleError(f"gamma pole at {x}")
        return float(math.factorial(n - 1))
    if xf.denominator == 2:
        # gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!) extended downward by
        # the recurrence gamma(x) = gamma(x+1)/x.
        k2 = xf - Fraction(1, 2)  # integer
        k = int(k2)
        if k >= 0:
            return math.factorial(2 * k) / (4**k * math.factorial(k)) * _SQRT_PI
        m = -k
        denom = Fraction(1)
        for j in range(m):
            denom *= xf + j
        return _SQRT_PI / float(denom)
    try:
        return math.gamma(float(x))
    except ValueError as exc:  # pragma: no cover - math.gamma pole guard
        raise PoleError(f"gamma pole at {x}") from exc


# ---------------------------------------------------------------------------
# Bessel J by ascending series (desk scale |x| <= 30)
# ---------------------------------------------------------------------------


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) by the ascending series.

    Valid for 0 <= x <= 30 and nu > -1.  For x beyond ~8 the alternating
    series cancels catastrophically in binary64, so the inner sum is done in
    exact rationals and rounded once at the end.
    """
    if not (0 <= x <= 30):
        raise DomainError(f"bessel_j defined for 0 <= x <= 30, got {x}")
    if not nu > -1:
        raise DomainError(f"bessel_j requires nu > -1, got {nu}")
    if x == 0:
        if nu == 0:
            return 1.0
        if nu > 0:
            return 0.0
        raise DomainError("bessel_j diverges at x = 0 for -1 < nu < 0")
    if x <= 8:
        s = 0.0
        term = 1.0
        k = 0
        while True:
            s += term
            k += 1
            term *= -(x * x / 4) / (k * (nu + k))
            if abs(term) < 1e-20 * (1 + abs(s)):
                s += term
                break
        return (x / 2) ** nu / gamma(nu + 1) * s
    # exact inner sum: sum_k (-z)^k / (k! (nu+1)_k), z = x^2/4
    z = Fraction(x) ** 2 / 4
    nuf = Fraction(nu)
    s = Fraction(0)
    term = Fraction(1)
    k = 0
    while True:
        s += term
        k += 1
        term *= -z / (k * (nuf + k))
        if abs(float(term)) < 1e-25 * (1 + abs(float(s))):
            s += term
            break
    return (x / 2) ** nu / gamma(nu + 1) * float(s)


# ---------------------------------------------------------------------------
# Richardson / polynomial extrapolation to step -> 0
# ---------------------------------------------------------------------------


def extrapolate_limit(samples):
    """Extrapolate f(step) -> step = 0 from >= 4 geometrically shrinking steps.

    ``samples`` is a sequence of (step, value) pairs with strictly decreasing
    positive steps.  Value arithmetic is generic: exact scalars stay exact.
    Returns (limit, error_estimate) where the estimate is the last
    extrapolation increment; raises NonConvergenceError when the increments
    stop decreasing.
    """
    samples = list(samples)
    if len(samples) < 4:
        raise ValueError("need at least 4 samples")
    steps = [s for s, _ in samples]
    for h in steps:
        if not float(h) > 0:
            raise ValueError("steps must be positive")
    for h0, h1 in zip(steps, steps[1:]):
        if not float(h1) < float(h0):
            raise ValueError("steps must be strictly decreasing")

    tableau = [v for _, v in samples]
    n = len(tableau)
    increments = []
    # Neville-style elimination toward step = 0.
    for j in range(1, n):
        new = []
        for i in range(n - j):
            ratio = steps[i] / steps[i + j]  # > 1
            hi = tableau[i + 1]
            lo = tableau[i]
            new.append(hi + (hi - lo) / (ratio - 1))
        increments.append(abs(to_complex(new[-1]) - to_complex(tableau[-1])))
        tableau = new
    # The increments should shrink overall; tolerate one plateau but reject
    # clear growth at the end (signals a non-polynomial step model).
    if len(increments) >= 3:
        a, b = increments[-1], increments[-2]
        floor = 1e-13 * max(1.0, abs(to_complex(tableau[0])))
        if a > floor and b > floor and a > 4.0 * b:
            raise NonConvergenceError(
                f"extrapolation increments grew: {b:.3e} -> {a:.3e}"
            )
    return tableau[0], increments[-1] if increments else 0.0


# ---------------------------------------------------------------------------
# Series summation helpers
# ---------------------------------------------------------------------------


def sum_with_tail(terms, rel_tol=1e-16, max_terms=100000, tail_ratio_cap=0.995):
    """Sum an infinite series given by an iterator of terms.

    Stops once the geometric tail bound (observed ratio, capped) falls below
    ``rel_tol`` times the partial sum.  Returns (sum, tail_bound).
    """
    total = None
    prev = None
    ratio = 0.0
    for k, t in enumerate(terms):
        total = t if total is None else total + t
        at = abs(to_complex(t))
        if prev is not None and prev > 0:
            ratio = max(ratio * 0.5, min(at / prev, tail_ratio_cap))
        prev = at
        if k >= 3:
            scale = max(1.0, abs(to_complex(total)))
            tail = at * ratio / (1 - ratio) if ratio < 1 else math.inf
            if at <= rel_tol * scale and tail <= rel_tol * scale:
                return total, tail
        if k + 1 >= max_terms:
            raise NonConvergenceError(f"series did not settle in {max_terms} terms")
    return total, 0.0  # terminating iterator


def sum_alternating(partial_sums):
    """Accelerate an eventually alternating slowly-convergent series.

    ``partial_sums`` is a list of successive partial sums; repeated
    averaging of adjacent entries is applied (Euler-style), which gains one
    order per sweep for alternating tails.  Returns (value, error_estimate).
    """
    row = list(partial_sums)
    if len(row) < 4:
        raise ValueError("need at least 4 partial sums")
    last = row[-1]
    for _ in range(len(row) - 1):
        row = [(a + b) / 2 for a, b in zip(row, row[1:])]
        new = row[-1]
        if abs(to_complex(new) - to_complex(last)) == 0:
            return new, 0.0
        last = new
        if len(row) < 2:
            break
    err = abs(to_complex(row[-1]) - to_complex(row[-2])) if len(row) >= 2 else 0.0
    return row[-1], err
