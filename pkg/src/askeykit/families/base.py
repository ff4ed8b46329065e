"""Family registry core: descriptors, series builders, derived recurrences."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..numerics import AdmissibilityError
from ..polyalg import Poly

F = Fraction


@dataclass
class Family:
    """Everything the library knows about one polynomial family.

    ``coeffs`` builds the exact coefficient vector of degree n from the
    family's primary (basic-)hypergeometric representation, in the family's
    own argument variable (x, or a quadratic lattice variable).
    """

    fid: str
    param_names: tuple
    coeffs: Callable
    monic_leading: Callable
    admissible: Optional[Callable] = None
    special: dict = field(default_factory=dict)
    monic_rec: Optional[Callable] = None
    lattice: Optional[Callable] = None
    weight_masses: Optional[Callable] = None
    norm_h: Optional[Callable] = None
    degree_cap: Optional[Callable] = None
    notes: str = ""


FAMILIES: dict = {}


def register(fam: Family) -> Family:
    if fam.fid in FAMILIES:
        raise ValueError(f"duplicate family id {fam.fid}")
    FAMILIES[fam.fid] = fam
    return fam


def get(fid: str) -> Family:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise KeyError(f"unknown family {fid!r}") from None


def family_ids():
    return sorted(FAMILIES)


# ---------------------------------------------------------------------------
# Series builder
# ---------------------------------------------------------------------------


def hyp_poly(n: int, ratio, factor, prefactor=None) -> Poly:
    """Build sum_{k=0..n} c_k * prod_{j<k} factor(j) as an exact Poly.

    ``ratio(k)`` is the scalar c_{k+1}/c_k (argument-independent part of the
    term ratio); ``factor(j)`` is the new linear Poly factor appended at step
    j.  ``prefactor`` scales the result.
    """
    total = Poly()
    term = Poly([F(1)])
    for k in range(n + 1):
        total = total + term
        if k < n:
            term = term * factor(k) * ratio(k)
    if prefactor is not None:
        total = total * prefactor
    return total


def check_params(params: dict, names) -> dict:
    missing = [k for k in names if k not in params]
    if missing:
        raise AdmissibilityError(f"missing parameters: {missing}")
    return params


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def coeffs(fid: str, n: int, params: dict) -> Poly:
    fam = get(fid)
    check_params(params, fam.param_names)
    cap = fam.degree_cap(params) if fam.degree_cap else None
    if cap is not None and n > cap:
        raise AdmissibilityError(f"{fid}: degree {n} exceeds cap {cap}")
    return fam.coeffs(n, params)


def eval_family(fid: str, n: int, params: dict, x):
    return coeffs(fid, n, params)(x)


def monic_leading(fid: str, n: int, params: dict):
    return get(fid).monic_leading(n, params)


def monic_coeffs(fid: str, n: int, params: dict) -> Poly:
    return coeffs(fid, n, params) / monic_leading(fid, n, params)


def derived_monic_recurrence(fid: str, n: int, params: dict, _cache={}):
    """B_n, C_n of x p~_n = p~_{n+1} + B_n p~_n + C_n p~_{n-1}, from coeffs.

    The full remainder is required to vanish, so this doubles as an
    orthogonality-structure check of the representation.
    """
    key = (fid, n, tuple(sorted((k, str(v)) for k, v in params.items())))
    if key in _cache:
        return _cache[key]
    pm1 = monic_coeffs(fid, n - 1, params)
    pn = monic_coeffs(fid, n, params)
    pp1 = monic_coeffs(fid, n + 1, params)
    r = pn.shift_up(1) - pp1
    b = r.coeff(n)
    r = r - pn * b
    c = r.coeff(n - 1)
    r = r - pm1 * c
    if not r.is_zero:
        raise ArithmeticError(
            f"{fid}: three-term recurrence remainder nonzero at n={n}"
        )
    _cache[key] = (b, c)
    return b, c


def monic_recurrence(fid: str, n: int, params: dict):
    fam = get(fid)
    if fam.monic_rec is not None:
        return fam.monic_rec(n, params)
    return derived_monic_recurrence(fid, n, params)


def even_recurrence(fid: str, n: int, params: dict):
    """A_n, C_n of x p_n = A_n p_{n+1} + C_n p_{n-1} for even-measure
    families in their own normalization (B_n = 0 enforced exactly)."""
    pm1 = coeffs(fid, n - 1, params)
    pn = coeffs(fid, n, params)
    pp1 = coeffs(fid, n + 1, params)
    lhs = pn.shift_up(1)
    a = lhs.coeff(n + 1) / pp1.leading()
    r = lhs - pp1 * a
    c = r.coeff(n - 1) / pm1.leading()
    r = r - pm1 * c
    if not r.is_zero:
        raise ArithmeticError(f"{fid}: not an even-measure recurrence at n={n}")
    return a, c


def special_value(fid: str, n: int, params: dict, tag: str):
    """Return (point, closed-form value) for a family's special point."""
    fam = get(fid)
    if tag not in fam.special:
        raise KeyError(f"{fid} has no special point {tag!r}")
    return fam.special[tag](n, params)


def norm(fid: str, n: int, params: dict):
    fam = get(fid)
    if fam.norm_h is None:
        raise KeyError(f"{fid} has no norm closed form")
    if fam.admissible is not None:
        fam.admissible(params)
    return fam.norm_h(n, params)


def lattice_point(fid: str, params: dict, x: int):
    fam = get(fid)
    if fam.lattice is None:
        return F(x)
    return fam.lattice(params, x)


def weight_masses(fid: str, params: dict):
    """List of (x, argument value, mass) for a finite discrete family."""
    fam = get(fid)
    if fam.weight_masses is None:
        raise KeyError(f"{fid} has no discrete weight")
    if fam.admissible is not None:
        fam.admissible(params)
    return fam.weight_masses(params)


# shared Pochhammer shortcuts over exact scalars ----------------------------


def poch(a, n: int):
    r = F(1) if isinstance(a, int) else a * 0 + 1
    for k in range(n):
        r = r * (a + k)
    return r


def qpoch(a, q, n: int):
    r = q * 0 + 1
    p = r
    for _ in range(n):
        r = r * (1 - a * p)
        p = p * q
    return r


def qbinom_c2(k: int) -> int:
    return k * (k - 1) // 2


def binom_gen(a, k: int):
    """Generalized binomial C(a, k) = (a-k+1)_k / k!."""
    return poch(a - k + 1, k) / F(fact(k))


def fact(n: int) -> int:
    r = 1
    for k in range(2, n + 1):
        r *= k
    return r
