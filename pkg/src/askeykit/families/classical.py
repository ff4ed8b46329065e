"""Classical (non-q) families: Wilson down to Hermite.

Each family's ``coeffs`` transcribes its primary hypergeometric
representation into an exact dense polynomial in the family's argument
variable (x, or the quadratic lattice variable for Wilson/Racah/dual Hahn).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..numerics import AdmissibilityError
from ..polyalg import Poly, substitute_quadratic
from ..scalars import GaussianRational, I, as_exact_real
from .base import Family, F, binom_gen, fact, hyp_poly, poch, register

# ---------------------------------------------------------------------------
# Wilson  (argument y = x^2)
# ---------------------------------------------------------------------------


def _wilson_coeffs(n, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d

    def ratio(k):
        return (
            (-n + k)
            * (n + s - 1 + k)
            / ((a + b + k) * (a + c + k) * (a + d + k) * (k + 1))
        )

    def factor(j):
        return Poly([(a + j) ** 2, 1])

    pref = poch(a + b, n) * poch(a + c, n) * poch(a + d, n)
    return hyp_poly(n, ratio, factor, pref)


def _wilson_special(which):
    def sv(n, p):
        a = p[which]
        others = [p[k] for k in "abcd" if k != which]
        val = poch(a + others[0], n) * poch(a + others[1], n) * poch(a + others[2], n)
        return -(a**2), val

    return sv


register(
    Family(
        fid="wilson",
        param_names=("a", "b", "c", "d"),
        coeffs=_wilson_coeffs,
        monic_leading=lambda n, p: (-1) ** n
        * poch(n + p["a"] + p["b"] + p["c"] + p["d"] - 1, n),
        special={k: _wilson_special(k) for k in "abcd"},
    )
)


# ---------------------------------------------------------------------------
# Racah  (argument lam = x(x + gamma + delta + 1))
# ---------------------------------------------------------------------------


def _racah_N(p):
    for v in (p["alpha"] + 1, p["beta"] + p["delta"] + 1, p["gamma"] + 1):
        f = Fraction(v)
        if f.denominator == 1 and f <= -1:
            return -int(f)
    raise AdmissibilityError("racah: no truncation parameter equals -N")


def _racah_coeffs(n, p):
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]

    def ratio(k):
        return (
            (-n + k)
            * (n + al + be + 1 + k)
            / ((al + 1 + k) * (be + de + 1 + k) * (ga + 1 + k) * (k + 1))
        )

    def factor(j):
        return Poly([F(j) * (j + ga + de + 1), -1])

    return hyp_poly(n, ratio, factor)


def _racah_weight(p):
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    N = _racah_N(p)
    out = []
    for x in range(N + 1):
        w = (
            poch(al + 1, x)
            * poch(be + de + 1, x)
            * poch(ga + 1, x)
            * poch(ga + de + 1, x)
            * (ga + de + 1 + 2 * x)
            / (
                F(fact(x))
                * poch(ga + de - al + 1, x)
                * poch(ga - be + 1, x)
                * poch(de + 1, x)
                * (ga + de + 1)
            )
        )
        out.append((x, F(x) * (x + ga + de + 1), w))
    return out


def _racah_norm(n, p):
    # h0 is Dougall's terminating 5F4 sum; the non-truncating parameter pair
    # selects the closed form.
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    N = _racah_N(p)
    a1 = ga + de + 2
    if ga + 1 == -N:
        h0 = poch(a1, N) * poch(ga - al - be, N) / (
            poch(ga + de - al + 1, N) * poch(ga - be + 1, N)
        )
    elif al + 1 == -N:
        h0 = poch(a1, N) * poch(-be, N) / (poch(ga - be + 1, N) * poch(de + 1, N))
    else:  # beta + delta + 1 == -N
        h0 = poch(a1, N) * poch(de - al, N) / (
            poch(ga + de - al + 1, N) * poch(de + 1, N)
        )
    ratio = (
        poch(n + al + be + 1, n)
        * poch(al + be - ga + 1, n)
        * poch(al - de + 1, n)
        * poch(be + 1, n)
        * F(fact(n))
        / (
            poch(al + be + 2, 2 * n)
            * poch(al + 1, n)
            * poch(be + de + 1, n)
            * poch(ga + 1, n)
        )
    )
    return h0 * ratio


register(
    Family(
        fid="racah",
        param_names=("alpha", "beta", "gamma", "delta"),
        coeffs=_racah_coeffs,
        monic_leading=lambda n, p: poch(n + p["alpha"] + p["beta"] + 1, n)
        / (
            poch(p["alpha"] + 1, n)
            * poch(p["beta"] + p["delta"] + 1, n)
            * poch(p["gamma"] + 1, n)
        ),
        lattice=lambda p, x: F(x) * (x + p["gamma"] + p["delta"] + 1),
        weight_masses=_racah_weight,
        norm_h=_racah_norm,
        degree_cap=lambda p: _racah_N(p),
    )
)


# ---------------------------------------------------------------------------
# Continuous dual Hahn  (argument y = x^2)
# ---------------------------------------------------------------------------


def _cdh_coeffs(n, p):
    a, b, c = p["a"], p["b"], p["c"]

    def ratio(k):
        return (-n + k) / ((a + b + k) * (a + c + k) * (k + 1))

    def factor(j):
        return Poly([(a + j) ** 2, 1])

    return hyp_poly(n, ratio, factor, poch(a + b, n) * poch(a + c, n))


def _cdh_special(which):
    def sv(n, p):
        a = p[which]
        others = [p[k] for k in "abc" if k != which]
        return -(a**2), poch(a + others[0], n) * poch(a + others[1], n)

    return sv


register(
    Family(
        fid="cont_dual_hahn",
        param_names=("a", "b", "c"),
        coeffs=_cdh_coeffs,
        monic_leading=lambda n, p: F(-1) ** n,
        special={k: _cdh_special(k) for k in "abc"},
    )
)


# ---------------------------------------------------------------------------
# Continuous Hahn  (argument x; parameters may be Gaussian rationals)
# ---------------------------------------------------------------------------


def _cont_hahn_coeffs(n, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d

    def ratio(k):
        return (-n + k) * (n + s - 1 + k) / ((a + c + k) * (a + d + k) * (k + 1))

    def factor(j):
        return Poly([a + j, I])

    pref = I**n * poch(a + c, n) * poch(a + d, n) / fact(n)
    return hyp_poly(n, ratio, factor, pref)


def _cont_hahn_monic_rec(n, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    s = a + b + c + d
    # B_n from the book recurrence; C_n is the O(n^2) growth coefficient.
    def a_coef(m):
        return -(m + s - 1) * (m + a + c) * (m + a + d) / ((2 * m + s - 1) * (2 * m + s))

    def c_coef(m):
        return m * (m + b + c - 1) * (m + b + d - 1) / ((2 * m + s - 2) * (2 * m + s - 1))

    bn = I * (a_coef(n) + c_coef(n) - a)
    cn = a_coef(n - 1) * c_coef(n)
    return bn, cn


register(
    Family(
        fid="cont_hahn",
        param_names=("a", "b", "c", "d"),
        coeffs=_cont_hahn_coeffs,
        monic_leading=lambda n, p: poch(
            n + p["a"] + p["b"] + p["c"] + p["d"] - 1, n
        )
        / fact(n),
    )
)


# ---------------------------------------------------------------------------
# Hahn / dual Hahn
# ---------------------------------------------------------------------------


def _hahn_coeffs(n, p):
    al, be, N = p["alpha"], p["beta"], p["N"]

    def ratio(k):
        return (-n + k) * (n + al + be + 1 + k) / ((al + 1 + k) * (-N + k) * (k + 1))

    def factor(j):
        return Poly([F(j), -1])

    return hyp_poly(n, ratio, factor)


def _hahn_weight(p):
    al, be, N = p["alpha"], p["beta"], int(p["N"])
    return [
        (x, F(x), binom_gen(al + x, x) * binom_gen(be + N - x, N - x))
        for x in range(N + 1)
    ]


def _hahn_norm(n, p):
    al, be, N = p["alpha"], p["beta"], int(p["N"])
    return (
        F(-1) ** n
        * poch(n + al + be + 1, N + 1)
        * poch(be + 1, n)
        * fact(n)
        / ((2 * n + al + be + 1) * poch(al + 1, n) * poch(-N, n) * fact(N))
    )


register(
    Family(
        fid="hahn",
        param_names=("alpha", "beta", "N"),
        coeffs=_hahn_coeffs,
        monic_leading=lambda n, p: poch(n + p["alpha"] + p["beta"] + 1, n)
        / (poch(p["alpha"] + 1, n) * poch(-p["N"], n)),
        special={
            "0": lambda n, p: (F(0), F(1)),
            "N": lambda n, p: (
                F(p["N"]),
                F(-1) ** n * poch(p["beta"] + 1, n) / poch(p["alpha"] + 1, n),
            ),
        },
        weight_masses=_hahn_weight,
        norm_h=_hahn_norm,
        degree_cap=lambda p: int(p["N"]),
    )
)


def _dual_hahn_coeffs(n, p):
    ga, de, N = p["gamma"], p["delta"], p["N"]

    def ratio(k):
        return (-n + k) / ((ga + 1 + k) * (-N + k) * (k + 1))

    def factor(j):
        return Poly([F(j) * (j + ga + de + 1), -1])

    return hyp_poly(n, ratio, factor)


def dual_hahn_w(x, ga, de, N):
    """Closed-form dual Hahn mass at lattice index x (the (gamma, delta, N)
    weight with the N! binom(N, x) normalization)."""
    return (
        fact(N)
        * (2 * x + ga + de + 1)
        / poch(x + ga + de + 1, N + 1)
        * poch(ga + 1, x)
        / poch(de + 1, x)
        * binom_gen(F(N), x)
    )


def _dual_hahn_weight(p):
    ga, de, N = p["gamma"], p["delta"], int(p["N"])
    return [
        (x, F(x) * (x + ga + de + 1), dual_hahn_w(x, ga, de, N)) for x in range(N + 1)
    ]


def _dual_hahn_norm(n, p):
    ga, de, N = p["gamma"], p["delta"], int(p["N"])
    return 1 / (binom_gen(ga + n, n) * binom_gen(de + N - n, N - n))


register(
    Family(
        fid="dual_hahn",
        param_names=("gamma", "delta", "N"),
        coeffs=_dual_hahn_coeffs,
        monic_leading=lambda n, p: 1 / (poch(p["gamma"] + 1, n) * poch(-p["N"], n)),
        special={
            "top": lambda n, p: (
                F(p["N"]) * (p["N"] + p["gamma"] + p["delta"] + 1),
                poch(-p["N"] - p["delta"], n) / poch(p["gamma"] + 1, n),
            ),
        },
        lattice=lambda p, x: F(x) * (x + p["gamma"] + p["delta"] + 1),
        weight_masses=_dual_hahn_weight,
        norm_h=_dual_hahn_norm,
        degree_cap=lambda p: int(p["N"]),
    )
)


# ---------------------------------------------------------------------------
# Meixner-Pollaczek (parameter eiphi = e^{i phi} as an exact unit scalar)
# ---------------------------------------------------------------------------


def _mp_coeffs(n, p):
    lam, u = p["lam"], p["eiphi"]
    z = 1 - u.conjugate() ** 2  # 1 - e^{-2 i phi}

    def ratio(k):
        return (-n + k) * z / ((2 * lam + k) * (k + 1))

    def factor(j):
        return Poly([lam + j, I])

    pref = poch(2 * lam, n) / fact(n) * u**n
    raw = hyp_poly(n, ratio, factor, pref)
    return raw.real_poly()


def _mp_monic_rec(n, p):
    lam, u = p["lam"], p["eiphi"]
    sin_phi = u.im
    cos_phi = u.re
    bn = -(n + lam) * cos_phi / sin_phi
    cn = n * (n + 2 * lam - 1) / (4 * sin_phi**2)
    return bn, cn


register(
    Family(
        fid="meixner_pollaczek",
        param_names=("lam", "eiphi"),
        coeffs=_mp_coeffs,
        monic_leading=lambda n, p: (2 * p["eiphi"].im) ** n / fact(n),
        monic_rec=_mp_monic_rec,
    )
)


# ---------------------------------------------------------------------------
# Jacobi family tree
# ---------------------------------------------------------------------------


def _jacobi_coeffs(n, p):
    al, be = p["alpha"], p["beta"]

    def ratio(k):
        return (-n + k) * (n + al + be + 1 + k) / ((al + 1 + k) * (k + 1))

    def factor(j):
        return Poly([F(1, 2), F(-1, 2)])

    return hyp_poly(n, ratio, factor, poch(al + 1, n) / fact(n))


def jacobi_h0(al, be) -> float:
    from ..numerics import gamma

    return 2.0 ** float(al + be + 1) * gamma(float(al + 1)) * gamma(
        float(be + 1)
    ) / gamma(float(al + be + 2))


def jacobi_hn_ratio(n, al, be):
    return (
        (n + al + be + 1)
        / (2 * n + al + be + 1)
        * poch(al + 1, n)
        * poch(be + 1, n)
        / (poch(al + be + 2, n) * fact(n))
    )


def _jacobi_norm(n, p):
    al, be = p["alpha"], p["beta"]
    return jacobi_h0(al, be) * float(jacobi_hn_ratio(n, al, be))


def _jacobi_admiss(p):
    if not (p["alpha"] > -1 and p["beta"] > -1):
        raise AdmissibilityError("jacobi needs alpha, beta > -1")


register(
    Family(
        fid="jacobi",
        param_names=("alpha", "beta"),
        coeffs=_jacobi_coeffs,
        monic_leading=lambda n, p: poch(n + p["alpha"] + p["beta"] + 1, n)
        / (2**n * fact(n)),
        admissible=_jacobi_admiss,
        special={
            "1": lambda n, p: (F(1), poch(p["alpha"] + 1, n) / fact(n)),
            "-1": lambda n, p: (
                F(-1),
                F(-1) ** n * poch(p["beta"] + 1, n) / fact(n),
            ),
        },
        norm_h=_jacobi_norm,
    )
)


def _gegenbauer_coeffs(n, p):
    lam = p["lam"]

    def ratio(k):
        return (-n + k) * (n + 2 * lam + k) / ((lam + F(1, 2) + k) * (k + 1))

    def factor(j):
        return Poly([F(1, 2), F(-1, 2)])

    return hyp_poly(n, ratio, factor, poch(2 * lam, n) / fact(n))


def gegenbauer_h0(lam) -> float:
    return math.sqrt(math.pi) * _gam(lam + F(1, 2)) / _gam(lam + 1)


def _gam(v) -> float:
    from ..numerics import gamma

    return gamma(float(v))


register(
    Family(
        fid="gegenbauer",
        param_names=("lam",),
        coeffs=_gegenbauer_coeffs,
        monic_leading=lambda n, p: 2**n * poch(p["lam"], n) / fact(n),
        admissible=lambda p: None
        if p["lam"] > F(-1, 2) and p["lam"] != 0
        else (_ for _ in ()).throw(AdmissibilityError("gegenbauer needs lam > -1/2, lam != 0")),
        special={"1": lambda n, p: (F(1), poch(2 * p["lam"], n) / fact(n))},
        norm_h=lambda n, p: gegenbauer_h0(p["lam"])
        * float(
            p["lam"] / (p["lam"] + n) * poch(2 * p["lam"], n) / fact(n)
        ),
    )
)


def _jacobi_ratio_poly(n, al, be):
    """P_n^{(al,be)} normalized to 1 at x = 1."""
    pn = _jacobi_coeffs(n, {"alpha": al, "beta": be})
    return pn / (poch(al + 1, n) / F(fact(n)))


def _chebyshev(kind):
    def builder(n, p):
        if kind == "T":
            return _jacobi_ratio_poly(n, F(-1, 2), F(-1, 2))
        if kind == "U":
            return (n + 1) * _jacobi_ratio_poly(n, F(1, 2), F(1, 2))
        if kind == "V":
            return _jacobi_ratio_poly(n, F(-1, 2), F(1, 2))
        return (2 * n + 1) * _jacobi_ratio_poly(n, F(1, 2), F(-1, 2))

    return builder


def _cheb_leading(kind):
    def lead(n, p):
        if kind == "T":
            return F(2) ** (n - 1) if n >= 1 else F(1)
        return F(2) ** n

    return lead


for _kind in "TUVW":
    register(
        Family(
            fid=f"chebyshev_{_kind.lower()}",
            param_names=(),
            coeffs=_chebyshev(_kind),
            monic_leading=_cheb_leading(_kind),
        )
    )


def _pseudo_jacobi_cap(p):
    # real N > -1/2 allowed; degrees run to the integer nearest N
    N = F(p["N"])
    n0 = math.floor(N + F(1, 2))
    if N + F(1, 2) == n0:  # N half-integer: N - 1/2 <= N0 < N + 1/2
        n0 -= 1
    return n0


def _pseudo_jacobi_coeffs(n, p):
    nu, N = p["nu"], p["N"]
    top = -N + nu * I

    def ratio(k):
        return (-n + k) * (n - 2 * N - 1 + k) / ((top + k) * (k + 1))

    def factor(j):
        return Poly([F(1, 2), GaussianRational(0, F(-1, 2))])

    pref = (-2 * I) ** n * poch(top, n) / poch(n - 2 * N - 1, n)
    return hyp_poly(n, ratio, factor, pref).real_poly()


register(
    Family(
        fid="pseudo_jacobi",
        param_names=("nu", "N"),
        coeffs=_pseudo_jacobi_coeffs,
        monic_leading=lambda n, p: F(1),
        degree_cap=_pseudo_jacobi_cap,
    )
)


# ---------------------------------------------------------------------------
# Meixner / Krawtchouk / Laguerre / Charlier / Hermite
# ---------------------------------------------------------------------------


def _meixner_coeffs(n, p):
    be, c = p["beta"], p["c"]
    z = 1 - 1 / c

    def ratio(k):
        return (-n + k) * z / ((be + k) * (k + 1))

    def factor(j):
        return Poly([F(j), -1])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="meixner",
        param_names=("beta", "c"),
        coeffs=_meixner_coeffs,
        monic_leading=lambda n, p: (1 - 1 / p["c"]) ** n / poch(p["beta"], n),
        monic_rec=lambda n, p: (
            (n + (n + p["beta"]) * p["c"]) / (1 - p["c"]),
            n * (n + p["beta"] - 1) * p["c"] / (1 - p["c"]) ** 2,
        ),
        admissible=lambda p: None
        if p["beta"] > 0 and 0 < p["c"] < 1
        else (_ for _ in ()).throw(AdmissibilityError("meixner needs beta>0, 0<c<1")),
    )
)


def _krawtchouk_coeffs(n, p):
    pp, N = p["p"], p["N"]

    def ratio(k):
        return (-n + k) / ((-N + k) * (k + 1) * pp)

    def factor(j):
        return Poly([F(j), -1])

    return hyp_poly(n, ratio, factor)


def _krawtchouk_weight(p):
    pp, N = p["p"], int(p["N"])
    return [
        (x, F(x), binom_gen(F(N), x) * pp**x * (1 - pp) ** (N - x))
        for x in range(N + 1)
    ]


register(
    Family(
        fid="krawtchouk",
        param_names=("p", "N"),
        coeffs=_krawtchouk_coeffs,
        monic_leading=lambda n, p: 1 / (poch(-p["N"], n) * p["p"] ** n),
        special={
            "0": lambda n, p: (F(0), F(1)),
            "N": lambda n, p: (F(p["N"]), (1 - 1 / p["p"]) ** n),
        },
        weight_masses=_krawtchouk_weight,
        norm_h=lambda n, p: F(-1) ** n
        * fact(n)
        / poch(-p["N"], n)
        * ((1 - p["p"]) / p["p"]) ** n,
        admissible=lambda p: None
        if 0 < p["p"] < 1
        else (_ for _ in ()).throw(AdmissibilityError("krawtchouk needs 0<p<1")),
        degree_cap=lambda p: int(p["N"]),
    )
)


def _laguerre_coeffs(n, p):
    al = p["alpha"]

    def ratio(k):
        return (-n + k) / ((al + 1 + k) * (k + 1))

    def factor(j):
        return Poly([0, 1])

    return hyp_poly(n, ratio, factor, poch(al + 1, n) / fact(n))


register(
    Family(
        fid="laguerre",
        param_names=("alpha",),
        coeffs=_laguerre_coeffs,
        monic_leading=lambda n, p: F(-1) ** n / fact(n),
        monic_rec=lambda n, p: (2 * n + p["alpha"] + 1, n * (n + p["alpha"])),
        special={"0": lambda n, p: (F(0), poch(p["alpha"] + 1, n) / fact(n))},
    )
)


def _charlier_coeffs(n, p):
    a = p["a"]

    def ratio(k):
        return (-n + k) / ((k + 1) * (-a))

    def factor(j):
        return Poly([F(j), -1])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="charlier",
        param_names=("a",),
        coeffs=_charlier_coeffs,
        monic_leading=lambda n, p: (-1 / p["a"]) ** n,
        monic_rec=lambda n, p: (n + p["a"], n * p["a"]),
    )
)


def _hermite_coeffs(n, p):
    out = [F(0)] * (n + 1)
    for ell in range(n // 2 + 1):
        out[n - 2 * ell] = (
            F(-1) ** ell * fact(n) * 2 ** (n - 2 * ell) / (fact(ell) * fact(n - 2 * ell))
        )
    return Poly(out)


register(
    Family(
        fid="hermite",
        param_names=(),
        coeffs=_hermite_coeffs,
        monic_leading=lambda n, p: F(2) ** n,
        monic_rec=lambda n, p: (F(0), F(n, 2)),
    )
)


# ---------------------------------------------------------------------------
# Generalized Gegenbauer / generalized Hermite (Dunkl companions)
# ---------------------------------------------------------------------------


def _gen_gegenbauer_coeffs(n, p):
    al, be = p["alpha"], p["beta"]
    m = n // 2
    if n % 2 == 0:
        body = substitute_quadratic(_jacobi_coeffs(m, {"alpha": al, "beta": be}))
        return poch(al + be + 1, m) / poch(be + 1, m) * body
    body = substitute_quadratic(_jacobi_coeffs(m, {"alpha": al, "beta": be + 1}))
    return poch(al + be + 1, m + 1) / poch(be + 1, m + 1) * body.shift_up(1)


def _gen_gegenbauer_leading(n, p):
    al, be = p["alpha"], p["beta"]
    m = n // 2
    if n % 2 == 0:
        return (
            poch(al + be + 1, m)
            / poch(be + 1, m)
            * poch(m + al + be + 1, m)
            / fact(m)
        )
    return (
        poch(al + be + 1, m + 1)
        / poch(be + 1, m + 1)
        * poch(m + al + be + 2, m)
        / fact(m)
    )


register(
    Family(
        fid="generalized_gegenbauer",
        param_names=("alpha", "beta"),
        coeffs=_gen_gegenbauer_coeffs,
        monic_leading=_gen_gegenbauer_leading,
    )
)


def _gen_hermite_coeffs(n, p):
    mu = p["mu"]
    m = n // 2
    if n % 2 == 0:
        body = _laguerre_coeffs(m, {"alpha": mu - F(1, 2)}).compose(Poly([0, 0, 1]))
        return F(-1) ** m * fact(2 * m) / poch(mu + F(1, 2), m) * body
    body = _laguerre_coeffs(m, {"alpha": mu + F(1, 2)}).compose(Poly([0, 0, 1]))
    return (
        F(-1) ** m
        * fact(2 * m + 1)
        / poch(mu + F(1, 2), m + 1)
        * body.shift_up(1)
    )


def _gen_hermite_leading(n, p):
    mu = p["mu"]
    m = n // 2
    if n % 2 == 0:
        return F(fact(2 * m)) / (poch(mu + F(1, 2), m) * fact(m))
    return F(fact(2 * m + 1)) / (poch(mu + F(1, 2), m + 1) * fact(m))


register(
    Family(
        fid="generalized_hermite",
        param_names=("mu",),
        coeffs=_gen_hermite_coeffs,
        monic_leading=_gen_hermite_leading,
    )
)


# ---------------------------------------------------------------------------
# Gottlieb (Meixner alias with c = e^{-lambda})
# ---------------------------------------------------------------------------


def _gottlieb_coeffs(n, p):
    c = p["c"]
    return c**n * _meixner_coeffs(n, {"beta": F(1), "c": c})


register(
    Family(
        fid="gottlieb",
        param_names=("c",),
        coeffs=_gottlieb_coeffs,
        monic_leading=lambda n, p: (p["c"] - 1) ** n / fact(n),
    )
)
