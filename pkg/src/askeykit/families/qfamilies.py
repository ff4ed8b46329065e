"""Basic (q-) families: Askey-Wilson down to discrete q-Hermite II.

Base q is an exact rational in (0, 1) unless a family explicitly works in
base 1/q; fractional powers of q enter through an explicit base root s
(q = s^4), never through floating roots.
"""

from __future__ import annotations

from fractions import Fraction

from ..numerics import AdmissibilityError
from ..polyalg import LaurentPoly, Poly, laurent_to_chebyshev
from ..scalars import GaussianRational, I, as_exact_real
from .base import Family, F, fact, hyp_poly, qbinom_c2, qpoch, register

# ---------------------------------------------------------------------------
# Askey-Wilson  (argument x = cos theta)
# ---------------------------------------------------------------------------


def _aw_coeffs(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    abcd = a * b * c * d

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - abcd * q ** (n - 1 + k))
            * q
            / ((1 - a * b * q**k) * (1 - a * c * q**k) * (1 - a * d * q**k) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1 + a**2 * q ** (2 * j), -2 * a * q**j])

    pref = qpoch(a * b, q, n) * qpoch(a * c, q, n) * qpoch(a * d, q, n) * a ** (-n)
    return hyp_poly(n, ratio, factor, pref)


def _aw_special(which):
    def sv(n, p):
        a = p[which]
        q = p["q"]
        others = [p[k] for k in "abcd" if k != which]
        val = a ** (-n)
        for o in others:
            val = val * qpoch(a * o, q, n)
        return (a + 1 / a) / 2, val

    return sv


def aw_monic_leading(n, p):
    return 2**n * qpoch(p["a"] * p["b"] * p["c"] * p["d"] * p["q"] ** (n - 1), p["q"], n)


register(
    Family(
        fid="askey_wilson",
        param_names=("a", "b", "c", "d", "q"),
        coeffs=_aw_coeffs,
        monic_leading=aw_monic_leading,
        special={k: _aw_special(k) for k in "abcd"},
    )
)


# ---------------------------------------------------------------------------
# q-Racah  (argument mu(x) = q^{-x} + gamma*delta*q^{x+1})
# ---------------------------------------------------------------------------


def qracah_N(p):
    q = p["q"]
    for v in (p["alpha"] * q, p["beta"] * p["delta"] * q, p["gamma"] * q):
        t = v
        for m in range(1, 200):
            t = t * q
            if t == 1:
                return m
    raise AdmissibilityError("q_racah: no truncation parameter equals q^(-N-1)")


def _qracah_coeffs(n, p):
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - al * be * q ** (n + 1 + k))
            * q
            / (
                (1 - al * q ** (k + 1))
                * (1 - be * de * q ** (k + 1))
                * (1 - ga * q ** (k + 1))
                * (1 - q ** (k + 1))
            )
        )

    def factor(j):
        return Poly([1 + ga * de * q ** (2 * j + 1), -(q**j)])

    return hyp_poly(n, ratio, factor)


def _qracah_weight(p):
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    N = qracah_N(p)
    out = []
    for x in range(N + 1):
        w = (
            qpoch(al * q, q, x)
            * qpoch(be * de * q, q, x)
            * qpoch(ga * q, q, x)
            * qpoch(ga * de * q, q, x)
            / (
                qpoch(q, q, x)
                * qpoch(ga * de * q / al, q, x)
                * qpoch(ga * q / be, q, x)
                * qpoch(de * q, q, x)
            )
            * (1 - ga * de * q ** (2 * x + 1))
            / (1 - ga * de * q)
            / (al * be * q) ** x
        )
        out.append((x, q ** (-x) + ga * de * q ** (x + 1), w))
    return out


def _qracah_norm(n, p):
    # h0 is Jackson's terminating 6phi5 sum; the truncating parameter picks
    # the closed form.
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    N = qracah_N(p)
    a1 = ga * de * q**2
    if ga * q * q**N == 1:
        h0 = (
            qpoch(a1, q, N)
            * qpoch(ga / (al * be), q, N)
            / (qpoch(ga * de * q / al, q, N) * qpoch(ga * q / be, q, N))
        )
    elif al * q * q**N == 1:
        h0 = (
            qpoch(a1, q, N)
            * qpoch(1 / be, q, N)
            / (qpoch(ga * q / be, q, N) * qpoch(de * q, q, N))
        )
    else:  # beta*delta*q = q^{-N}
        h0 = (
            qpoch(a1, q, N)
            * qpoch(de / al, q, N)
            / (qpoch(ga * de * q / al, q, N) * qpoch(de * q, q, N))
        )
    ratio = (
        (ga * de * q) ** n
        * qpoch(al * be * q ** (n + 1), q, n)
        * qpoch(al * be * q / ga, q, n)
        * qpoch(al * q / de, q, n)
        * qpoch(be * q, q, n)
        * qpoch(q, q, n)
        / (
            qpoch(al * be * q**2, q, 2 * n)
            * qpoch(al * q, q, n)
            * qpoch(be * de * q, q, n)
            * qpoch(ga * q, q, n)
        )
    )
    return h0 * ratio


register(
    Family(
        fid="q_racah",
        param_names=("alpha", "beta", "gamma", "delta", "q"),
        coeffs=_qracah_coeffs,
        monic_leading=lambda n, p: qpoch(
            p["alpha"] * p["beta"] * p["q"] ** (n + 1), p["q"], n
        )
        / (
            qpoch(p["alpha"] * p["q"], p["q"], n)
            * qpoch(p["beta"] * p["delta"] * p["q"], p["q"], n)
            * qpoch(p["gamma"] * p["q"], p["q"], n)
        ),
        lattice=lambda p, x: p["q"] ** (-x)
        + p["gamma"] * p["delta"] * p["q"] ** (x + 1),
        weight_masses=_qracah_weight,
        norm_h=_qracah_norm,
        degree_cap=lambda p: qracah_N(p),
    )
)


# ---------------------------------------------------------------------------
# Continuous dual q-Hahn / continuous q-Hahn (independent transcriptions)
# ---------------------------------------------------------------------------


def _cdqh_coeffs(n, p):
    a, b, c, q = p["a"], p["b"], p["c"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * q
            / ((1 - a * b * q**k) * (1 - a * c * q**k) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1 + a**2 * q ** (2 * j), -2 * a * q**j])

    pref = qpoch(a * b, q, n) * qpoch(a * c, q, n) * a ** (-n)
    return hyp_poly(n, ratio, factor, pref)


register(
    Family(
        fid="cont_dual_q_hahn",
        param_names=("a", "b", "c", "q"),
        coeffs=_cdqh_coeffs,
        monic_leading=lambda n, p: F(2) ** n,
    )
)


def _cqh_coeffs(n, p):
    # parameters a, b rational moduli; u = e^{i phi} exact on the unit circle
    a, b, u, q = p["a"], p["b"], p["eiphi"], p["q"]
    w = a * u
    ab_e2 = a * b * u**2
    a2 = a * a
    ab = a * b

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - a2 * b * b * q ** (n - 1 + k))
            * q
            / ((1 - ab_e2 * q**k) * (1 - a2 * q**k) * (1 - ab * q**k) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1 + w**2 * q ** (2 * j), -2 * w * q**j])

    pref = qpoch(ab_e2, q, n) * qpoch(a2, q, n) * qpoch(ab, q, n) * w ** (-n)
    return hyp_poly(n, ratio, factor, pref)


register(
    Family(
        fid="cont_q_hahn",
        param_names=("a", "b", "eiphi", "q"),
        coeffs=_cqh_coeffs,
        monic_leading=lambda n, p: 2**n
        * qpoch(p["a"] ** 2 * p["b"] ** 2 * p["q"] ** (n - 1), p["q"], n),
    )
)


# ---------------------------------------------------------------------------
# Big q-Jacobi: 3-parameter (14.5.1) and 4-parameter forms
# ---------------------------------------------------------------------------


def _bqj3_coeffs(n, p):
    a, b, c, q = p["a"], p["b"], p["c"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - a * b * q ** (n + 1 + k))
            * q
            / ((1 - a * q ** (k + 1)) * (1 - c * q ** (k + 1)) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1, -(q**j)])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="big_q_jacobi",
        param_names=("a", "b", "c", "q"),
        coeffs=_bqj3_coeffs,
        monic_leading=lambda n, p: qpoch(p["a"] * p["b"] * p["q"] ** (n + 1), p["q"], n)
        / (qpoch(p["a"] * p["q"], p["q"], n) * qpoch(p["c"] * p["q"], p["q"], n)),
    )
)


def _bqj4_coeffs(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - a * b * q ** (n + 1 + k))
            * q
            / (
                (1 - a * q ** (k + 1))
                * (1 + a * d / c * q ** (k + 1))
                * (1 - q ** (k + 1))
            )
        )

    def factor(j):
        return Poly([1, -(q ** (j + 1)) * a / c])

    return hyp_poly(n, ratio, factor)


def _bqj4_leading(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    return (
        qpoch(a * b * q ** (n + 1), q, n)
        * (q * a / c) ** n
        / (qpoch(a * q, q, n) * qpoch(-a * d / c * q, q, n))
    )


def _bqj4_admiss(p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    if not (c > 0 and d > 0 and 0 < q < 1):
        raise AdmissibilityError("big_q_jacobi4 needs c, d > 0 and 0 < q < 1")
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        ratio_a = GaussianRational._coerce(a) / GaussianRational._coerce(c)
        ratio_b = GaussianRational._coerce(b) / GaussianRational._coerce(d)
        if ratio_a != -ratio_b.conjugate() or ratio_a.im == 0:
            raise AdmissibilityError(
                "big_q_jacobi4 complex case needs a/c = -conj(b)/d off the real line"
            )
        return
    if not (-c / (q * d) < a < 1 / q and -d / (c * q) < b < 1 / q):
        raise AdmissibilityError("big_q_jacobi4 parameters outside the real window")


def _bqj4_special(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    return {
        "unit": (c / (q * a), F(1) if not isinstance(c / (q * a), GaussianRational) else GaussianRational(1)),
        "neg_unit": (
            -d / (q * b),
            (-a * d / (b * c)) ** n
            * qpoch(q * b, q, n)
            * qpoch(-q * b * c / d, q, n)
            / (qpoch(q * a, q, n) * qpoch(-q * a * d / c, q, n)),
        ),
        "c": (
            c,
            q ** (n * (n + 1) // 2)
            * (a * d / c) ** n
            * qpoch(-q * b * c / d, q, n)
            / qpoch(-q * a * d / c, q, n),
        ),
        "neg_d": (
            -d,
            q ** (n * (n + 1) // 2)
            * (-a) ** n
            * qpoch(q * b, q, n)
            / qpoch(q * a, q, n),
        ),
    }


register(
    Family(
        fid="big_q_jacobi4",
        param_names=("a", "b", "c", "d", "q"),
        coeffs=_bqj4_coeffs,
        monic_leading=_bqj4_leading,
        admissible=_bqj4_admiss,
        special={
            tag: (lambda n, p, _t=tag: _bqj4_special(n, p)[_t])
            for tag in ("unit", "neg_unit", "c", "neg_d")
        },
    )
)


def _pbqj_coeffs(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    inner = _bqj3_coeffs(n, {"a": c / b, "b": d / a, "c": c / a, "q": q})
    return inner.compose_linear(c, 0)


def pbqj_cap(p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    rho = as_exact_real(
        GaussianRational._coerce(a)
        * GaussianRational._coerce(b)
        / (GaussianRational._coerce(c) * GaussianRational._coerce(d) * q)
    )
    if not 0 < rho < 1:
        raise AdmissibilityError("pseudo big q-Jacobi needs 0 < ab/(qcd) < 1")
    n = 0
    while q ** (2 * (n + 1)) > rho:
        n += 1
    return n


def _pbqj_leading(n, p):
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    aa, bb, cc = c / b, d / a, c / a
    return (
        qpoch(aa * bb * q ** (n + 1), q, n)
        / (qpoch(aa * q, q, n) * qpoch(cc * q, q, n))
        * c**n
    )


register(
    Family(
        fid="pseudo_big_q_jacobi",
        param_names=("a", "b", "c", "d", "q"),
        coeffs=_pbqj_coeffs,
        monic_leading=_pbqj_leading,
        degree_cap=pbqj_cap,
    )
)


# ---------------------------------------------------------------------------
# Dual q-Hahn  (argument mu(x) = q^{-x} + gamma*delta*q^{x+1})
# ---------------------------------------------------------------------------


def _dqh_coeffs(n, p):
    ga, de, N, q = p["gamma"], p["delta"], int(p["N"]), p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * q
            / ((1 - ga * q ** (k + 1)) * (1 - q ** (k - N)) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1 + ga * de * q ** (2 * j + 1), -(q**j)])

    return hyp_poly(n, ratio, factor)


def dual_q_hahn_cases(p):
    """The five positivity windows for the (gamma, delta) parameter plane."""
    ga, de, N, q = p["gamma"], p["delta"], int(p["N"]), p["q"]
    if 0 < ga * q < 1 and 0 < de * q < 1:
        return "i"
    if 0 < ga * q < 1 and de < 0:
        return "ii"
    if ga < 0 and de > q ** (-N):
        return "iii"
    if ga > q ** (-N) and de > q ** (-N):
        return "iv"
    if 0 < ga * q < 1 and de == 0:
        return "v"
    raise AdmissibilityError("dual_q_hahn parameters outside the positivity cases")


def _dqh_weight(p):
    ga, de, N, q = p["gamma"], p["delta"], int(p["N"]), p["q"]
    out = []
    for x in range(N + 1):
        w = (
            qpoch(ga * q, q, x)
            * qpoch(ga * de * q, q, x)
            * qpoch(q ** (-N), q, x)
            / (
                qpoch(q, q, x)
                * qpoch(ga * de * q ** (N + 2), q, x)
                * qpoch(de * q, q, x)
            )
            * (1 - ga * de * q ** (2 * x + 1))
            / (1 - ga * de * q)
            * (-1) ** x
            * ga ** (-x)
            * q ** (N * x - x * (x + 1) // 2)
        )
        out.append((x, q ** (-x) + ga * de * q ** (x + 1), w))
    return out


def _dqh_norm(n, p):
    ga, de, N, q = p["gamma"], p["delta"], int(p["N"]), p["q"]
    h0 = qpoch(ga * de * q**2, q, N) / (qpoch(de * q, q, N) * (ga * q) ** N)
    ratio = (
        (ga * q) ** n
        * qpoch(q, q, n)
        * qpoch(de * q ** (N - n + 1), q, n)
        / (qpoch(ga * q, q, n) * qpoch(q ** (N - n + 1), q, n))
    )
    return h0 * ratio


register(
    Family(
        fid="dual_q_hahn",
        param_names=("gamma", "delta", "N", "q"),
        coeffs=_dqh_coeffs,
        monic_leading=lambda n, p: 1
        / (
            qpoch(p["gamma"] * p["q"], p["q"], n)
            * qpoch(p["q"] ** (-int(p["N"])), p["q"], n)
        ),
        lattice=lambda p, x: p["q"] ** (-x)
        + p["gamma"] * p["delta"] * p["q"] ** (x + 1),
        weight_masses=_dqh_weight,
        norm_h=_dqh_norm,
        admissible=dual_q_hahn_cases,
        degree_cap=lambda p: int(p["N"]),
    )
)


# ---------------------------------------------------------------------------
# Al-Salam-Chihara, base q and base 1/q
# ---------------------------------------------------------------------------


def _asc_coeffs(n, p):
    a, b, q = p["a"], p["b"], p["q"]

    def ratio(k):
        return (1 - q ** (k - n)) * q / ((1 - a * b * q**k) * (1 - q ** (k + 1)))

    def factor(j):
        return Poly([1 + a**2 * q ** (2 * j), -2 * a * q**j])

    pref = qpoch(a * b, q, n) * a ** (-n)
    return hyp_poly(n, ratio, factor, pref)


register(
    Family(
        fid="al_salam_chihara",
        param_names=("a", "b", "q"),
        coeffs=_asc_coeffs,
        monic_leading=lambda n, p: F(2) ** n,
    )
)


def _asc_qinv_coeffs(n, p):
    a, b, q = p["a"], p["b"], p["q"]
    return _asc_coeffs(n, {"a": a, "b": b, "q": 1 / q})


def _asc_qinv_norm(n, p):
    from ..hyperkernel import q_pochhammer

    a, b, q = p["a"], p["b"], p["q"]
    inf1 = q_pochhammer(q / a**2, q, None)
    inf2 = q_pochhammer(q * b / a, q, None)
    finite = qpoch(q, q, n) * qpoch(1 / (a * b), q, n)
    return float(inf1 / inf2) * float(finite * (a * b) ** n * q ** (-n * n))


def _asc_qinv_admiss(p):
    a, b, q = p["a"], p["b"], p["q"]
    if not (a * b > 1 and q * b < a and 0 < q < 1):
        raise AdmissibilityError("q^{-1}-Al-Salam-Chihara needs ab > 1, qb < a")


register(
    Family(
        fid="al_salam_chihara_qinv",
        param_names=("a", "b", "q"),
        coeffs=_asc_qinv_coeffs,
        monic_leading=lambda n, p: F(2) ** n,
        monic_rec=lambda n, p: (
            (p["a"] + p["b"]) * p["q"] ** (-n) / 2,
            (p["q"] ** (-n) - 1) * (p["a"] * p["b"] * p["q"] ** (-n + 1) - 1) / 4,
        ),
        norm_h=_asc_qinv_norm,
        admissible=_asc_qinv_admiss,
    )
)


# ---------------------------------------------------------------------------
# Continuous q-Jacobi (base root s, q = s^4) and q-ultraspherical
# ---------------------------------------------------------------------------


def _int_exp(v, what):
    f = Fraction(v)
    if f.denominator != 1:
        raise AdmissibilityError(f"{what} must make the s-exponent integral")
    return int(f)


def _cqj_coeffs(n, p):
    al, be, s = p["alpha"], p["beta"], p["s"]
    q = s**4
    a = s ** _int_exp(2 * al + 1, "alpha")
    low2 = -(s ** _int_exp(2 * (al + be + 1), "alpha+beta"))
    low3 = -(s ** _int_exp(2 * (al + be + 2), "alpha+beta"))
    qa1 = s ** _int_exp(4 * (al + 1), "alpha")  # q^{alpha+1}
    qnab = s ** _int_exp(4 * (n + al + be + 1), "alpha+beta")  # q^{n+al+be+1}

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - qnab * q**k)
            * q
            / ((1 - qa1 * q**k) * (1 - low2 * q**k) * (1 - low3 * q**k) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1 + a**2 * q ** (2 * j), -2 * a * q**j])

    pref = qpoch(qa1, q, n) / qpoch(q, q, n)
    return hyp_poly(n, ratio, factor, pref)


def _cqj_leading(n, p):
    al, be, s = p["alpha"], p["beta"], p["s"]
    q = s**4
    a = s ** _int_exp(2 * al + 1, "alpha")
    low2 = -(s ** _int_exp(2 * (al + be + 1), "alpha+beta"))
    low3 = -(s ** _int_exp(2 * (al + be + 2), "alpha+beta"))
    qnab = s ** _int_exp(4 * (n + al + be + 1), "alpha+beta")
    return (
        qpoch(qnab, q, n)
        * (2 * a) ** n
        / (qpoch(low2, q, n) * qpoch(low3, q, n) * qpoch(q, q, n))
    )


register(
    Family(
        fid="cont_q_jacobi",
        param_names=("alpha", "beta", "s"),
        coeffs=_cqj_coeffs,
        monic_leading=_cqj_leading,
    )
)


def cqu_laurent(n, beta, q) -> LaurentPoly:
    """C_n[z; beta | q]: the symmetric Laurent realization.

    Coefficient of z^{n-2k} is (beta;q)_k (beta;q)_{n-k} / ((q;q)_k (q;q)_{n-k}).
    """
    ck = qpoch(beta, q, n) / qpoch(q, q, n)  # k = 0 value
    full = [F(0)] * (2 * n + 1)  # exponents -n .. n
    for k in range(n + 1):
        full[2 * n - 2 * k] = ck
        if k < n:
            ck = (
                ck
                * (1 - beta * q**k)
                * (1 - q ** (n - k))
                / ((1 - q ** (k + 1)) * (1 - beta * q ** (n - k - 1)))
            )
    return LaurentPoly(full, -n)


def _cqu_coeffs(n, p):
    return laurent_to_chebyshev(cqu_laurent(n, p["beta"], p["q"]))


register(
    Family(
        fid="cont_q_ultraspherical",
        param_names=("beta", "q"),
        coeffs=_cqu_coeffs,
        monic_leading=lambda n, p: 2**n
        * qpoch(p["beta"], p["q"], n)
        / qpoch(p["q"], p["q"], n),
    )
)


# ---------------------------------------------------------------------------
# Big q-Laguerre / little q-Jacobi / little q-Laguerre
# ---------------------------------------------------------------------------


def _bql_coeffs(n, p):
    a, b, q = p["a"], p["b"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * q
            / ((1 - a * q ** (k + 1)) * (1 - b * q ** (k + 1)) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1, -(q**j)])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="big_q_laguerre",
        param_names=("a", "b", "q"),
        coeffs=_bql_coeffs,
        monic_leading=lambda n, p: 1
        / (qpoch(p["a"] * p["q"], p["q"], n) * qpoch(p["b"] * p["q"], p["q"], n)),
    )
)


def _lqj_coeffs(n, p):
    a, b, q = p["a"], p["b"], p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * (1 - a * b * q ** (n + 1 + k))
            / ((1 - a * q ** (k + 1)) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([0, q])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="little_q_jacobi",
        param_names=("a", "b", "q"),
        coeffs=_lqj_coeffs,
        monic_leading=lambda n, p: F(-1) ** n
        * p["q"] ** (-qbinom_c2(n))
        * qpoch(p["a"] * p["b"] * p["q"] ** (n + 1), p["q"], n)
        / qpoch(p["a"] * p["q"], p["q"], n),
        special={
            "0": lambda n, p: (F(0), F(1)),
            "1/(qb)": lambda n, p: (
                1 / (p["q"] * p["b"]),
                (-p["q"] * p["b"]) ** (-n)
                * p["q"] ** (-qbinom_c2(n))
                * qpoch(p["q"] * p["b"], p["q"], n)
                / qpoch(p["q"] * p["a"], p["q"], n),
            ),
            "1": lambda n, p: (
                F(1),
                (-p["a"]) ** n
                * p["q"] ** (n * (n + 1) // 2)
                * qpoch(p["q"] * p["b"], p["q"], n)
                / qpoch(p["q"] * p["a"], p["q"], n),
            ),
        },
    )
)


def _lql_coeffs(n, p):
    a, q = p["a"], p["q"]

    def ratio(k):
        return (1 - q ** (k - n)) / ((1 - a * q ** (k + 1)) * (1 - q ** (k + 1)))

    def factor(j):
        return Poly([0, q])

    return hyp_poly(n, ratio, factor)


register(
    Family(
        fid="little_q_laguerre",
        param_names=("a", "q"),
        coeffs=_lql_coeffs,
        monic_leading=lambda n, p: F(-1) ** n
        * p["q"] ** (-qbinom_c2(n))
        / qpoch(p["a"] * p["q"], p["q"], n),
    )
)


# ---------------------------------------------------------------------------
# Quantum / affine / dual q-Krawtchouk
# ---------------------------------------------------------------------------


def _qtm_coeffs(n, p):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    z = pp * q ** (n + 1)

    def ratio(k):
        return (1 - q ** (k - n)) * z / ((1 - q ** (k - N)) * (1 - q ** (k + 1)))

    def factor(j):
        return Poly([1, -(q**j)])

    return hyp_poly(n, ratio, factor)


def _qtm_weight(p):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    out = []
    for x in range(N + 1):
        w = (
            qpoch(pp * q, q, N - x)
            * qpoch(q, q, N)
            / (qpoch(q, q, x) * qpoch(q, q, N - x))
            * (-1) ** x
            * q ** qbinom_c2(x)
        )
        out.append((x, q ** (-x), w))
    return out


def _qtm_norm(n, p):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    h0 = (-pp) ** N * q ** (N * (N + 1) // 2)
    ratio = (
        (-1) ** n
        * qpoch(q, q, n)
        * qpoch(pp * q, q, n)
        * q ** (N * n - n * (n + 1) // 2)
        / qpoch(q ** (N - n + 1), q, n)
    )
    return h0 * ratio


register(
    Family(
        fid="quantum_q_krawtchouk",
        param_names=("p", "N", "q"),
        coeffs=_qtm_coeffs,
        monic_leading=lambda n, p: p["p"] ** n
        * p["q"] ** (n * n)
        / qpoch(p["q"] ** (-int(p["N"])), p["q"], n),
        special={
            "1": lambda n, p: (F(1), F(1)),
            "q^-N": lambda n, p: (
                p["q"] ** (-int(p["N"])),
                qpoch(p["p"] * p["q"], p["q"], n),
            ),
        },
        lattice=lambda p, x: p["q"] ** (-x),
        weight_masses=_qtm_weight,
        norm_h=_qtm_norm,
        degree_cap=lambda p: int(p["N"]),
    )
)


def _aff_coeffs(n, p):
    pp, N, q = p["p"], int(p["N"]), p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n))
            * q
            / ((1 - q ** (k - N)) * (1 - pp * q ** (k + 1)) * (1 - q ** (k + 1)))
        )

    def factor(j):
        return Poly([1, -(q**j)])

    return hyp_poly(n, ratio, factor)


def _aff_weight(p):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    out = []
    for x in range(N + 1):
        w = (
            qpoch(pp * q, q, x)
            * qpoch(q, q, N)
            / (qpoch(q, q, x) * qpoch(q, q, N - x))
            * (pp * q) ** (-x)
        )
        out.append((x, q ** (-x), w))
    return out


def _aff_norm(n, p):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    h0 = (pp * q) ** (-N)
    ratio = (
        (pp * q) ** n
        * qpoch(q, q, n)
        / (qpoch(pp * q, q, n) * qpoch(q ** (N - n + 1), q, n))
    )
    return h0 * ratio


register(
    Family(
        fid="affine_q_krawtchouk",
        param_names=("p", "N", "q"),
        coeffs=_aff_coeffs,
        monic_leading=lambda n, p: 1
        / (
            qpoch(p["q"] ** (-int(p["N"])), p["q"], n)
            * qpoch(p["p"] * p["q"], p["q"], n)
        ),
        special={
            "1": lambda n, p: (F(1), F(1)),
            "q^-N": lambda n, p: (
                p["q"] ** (-int(p["N"])),
                1 / qpoch(1 / (p["p"] * p["q"]), 1 / p["q"], n),
            ),
        },
        lattice=lambda p, x: p["q"] ** (-x),
        weight_masses=_aff_weight,
        norm_h=_aff_norm,
        degree_cap=lambda p: int(p["N"]),
    )
)


def _dqk_coeffs(n, p):
    c, N, q = p["c"], int(p["N"]), p["q"]

    def ratio(k):
        return (1 - q ** (k - n)) * q / ((1 - q ** (k - N)) * (1 - q ** (k + 1)))

    def factor(j):
        return Poly([1 + c * q ** (2 * j - N), -(q**j)])

    return hyp_poly(n, ratio, factor)


def _dqk_weight(p):
    c, N, q = p["c"], int(p["N"]), p["q"]
    out = []
    for x in range(N + 1):
        w = (
            qpoch(q ** (-N), q, x)
            * qpoch(c * q ** (-N), q, x)
            / (qpoch(q, q, x) * qpoch(c * q, q, x))
            * (1 - c * q ** (2 * x - N))
            / (1 - c * q ** (-N))
            * c ** (-x)
            * q ** (2 * N * x - x * x)
        )
        out.append((x, q ** (-x) + c * q ** (x - N), w))
    return out


def _dqk_norm(n, p):
    c, N, q = p["c"], int(p["N"]), p["q"]
    h0 = qpoch(1 / c, q, N)
    ratio = (
        (-c) ** n
        * q ** (n - n * (n + 1) // 2)
        * qpoch(q, q, n)
        / qpoch(q ** (N - n + 1), q, n)
    )
    return h0 * ratio


def _dqk_admiss(p):
    if not p["c"] < 0:
        raise AdmissibilityError("dual_q_krawtchouk needs c < 0")


register(
    Family(
        fid="dual_q_krawtchouk",
        param_names=("c", "N", "q"),
        coeffs=_dqk_coeffs,
        monic_leading=lambda n, p: 1 / qpoch(p["q"] ** (-int(p["N"])), p["q"], n),
        lattice=lambda p, x: p["q"] ** (-x) + p["c"] * p["q"] ** (x - int(p["N"])),
        weight_masses=_dqk_weight,
        norm_h=_dqk_norm,
        admissible=_dqk_admiss,
        degree_cap=lambda p: int(p["N"]),
    )
)


# ---------------------------------------------------------------------------
# q-Laguerre / Stieltjes-Wigert / discrete q-Hermite I and II
# ---------------------------------------------------------------------------


def _q_alpha(p):
    al, q = p["alpha"], p["q"]
    if "qalpha" in p:
        return p["qalpha"]
    f = Fraction(al)
    if f.denominator == 1:
        return q ** int(f)
    raise AdmissibilityError("q_laguerre with fractional alpha needs qalpha = q^alpha")


def _qlag_coeffs(n, p):
    q = p["q"]
    qa1 = _q_alpha(p) * q  # q^{alpha+1}

    def ratio(k):
        # includes the 1-phi-1 factor (-1)^k q^{C(k,2)} via (-q^k)
        return (
            (1 - q ** (k - n))
            / ((1 - qa1 * q**k) * (1 - q ** (k + 1)))
            * (-(q**k))
            * (-(qa1) * q**n)
        )

    def factor(j):
        return Poly([0, 1])

    pref = qpoch(qa1, q, n) / qpoch(q, q, n)
    return hyp_poly(n, ratio, factor, pref)


def q_laguerre_h0(alpha, q) -> float:
    """(14.21.2)-style h0; by continuity at integral alpha."""
    import math as _math

    from ..hyperkernel import q_pochhammer

    f = Fraction(alpha)
    if f.denominator == 1:
        al = int(f)
        return float(
            q ** F(-al * (al + 1), 2) * qpoch(q, q, al) * _math.log(1 / float(q))
        )
    qma = float(q) ** float(-alpha)
    inf1 = 1.0
    t = qma
    qf = float(q)
    while abs(t) > 1e-18:
        inf1 *= 1 - t
        t *= qf
    inf2 = q_pochhammer(float(q), float(q), None)
    return -inf1 / inf2 * _math.pi / _math.sin(_math.pi * float(alpha))


register(
    Family(
        fid="q_laguerre",
        param_names=("alpha", "q"),
        coeffs=_qlag_coeffs,
        monic_leading=lambda n, p: F(-1) ** n
        * (_q_alpha(p) * p["q"] ** n) ** n
        / qpoch(p["q"], p["q"], n),
        norm_h=lambda n, p: q_laguerre_h0(p["alpha"], p["q"])
        * float(
            qpoch(_q_alpha(p) * p["q"], p["q"], n)
            / (qpoch(p["q"], p["q"], n) * p["q"] ** n)
        ),
    )
)


def _sw_coeffs(n, p):
    q = p["q"]

    def ratio(k):
        return (
            (1 - q ** (k - n)) / (1 - q ** (k + 1)) * (-(q**k)) * (-(q ** (n + 1)))
        )

    def factor(j):
        return Poly([0, 1])

    return hyp_poly(n, ratio, factor, 1 / qpoch(q, q, n))


register(
    Family(
        fid="stieltjes_wigert",
        param_names=("q",),
        coeffs=_sw_coeffs,
        monic_leading=lambda n, p: F(-1) ** n * p["q"] ** (n * n) / qpoch(p["q"], p["q"], n),
    )
)


def _dqh1_coeffs(n, p):
    q = p["q"]
    out = [F(0)] * (n + 1)
    ck = F(1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = ck
        ck = (
            ck
            * (1 - q ** (2 * k - n))
            * (1 - q ** (2 * k - n + 1))
            * (-(q ** (2 * n - 1 - 2 * k)))
            / (1 - q ** (2 * k + 2))
        )
    return Poly(out)


register(
    Family(
        fid="discrete_q_hermite_1",
        param_names=("q",),
        coeffs=_dqh1_coeffs,
        monic_leading=lambda n, p: F(1),
    )
)


# ---------------------------------------------------------------------------
# Big / pseudo big q-Jacobi norm closed forms (q-integral targets)
# ---------------------------------------------------------------------------


def bqj4_norm_ratio(n, p):
    """h_n / h_0 for the four-parameter big q-Jacobi orthogonality."""
    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    return (
        q ** qbinom_c2(n)
        * (q**2 * a**2 * d / c) ** n
        * (1 - q * a * b)
        / (1 - q ** (2 * n + 1) * a * b)
        * qpoch(q, q, n)
        * qpoch(q * b, q, n)
        * qpoch(-q * b * c / d, q, n)
        / (qpoch(q * a, q, n) * qpoch(q * a * b, q, n) * qpoch(-q * a * d / c, q, n))
    )


def bqj4_h0(p):
    """h_0 of the four-parameter big q-Jacobi q-integral (complex capable)."""
    from ..hyperkernel import q_pochhammer
    from ..scalars import to_complex

    a, b, c, d = (to_complex(p[k]) for k in "abcd")
    q = float(p["q"])
    num = (
        q_pochhammer(q, q, None)
        * q_pochhammer(-d / c, q, None)
        * q_pochhammer(-q * c / d, q, None)
        * q_pochhammer(q**2 * a * b, q, None)
    )
    den = (
        q_pochhammer(q * a, q, None)
        * q_pochhammer(q * b, q, None)
        * q_pochhammer(-q * b * c / d, q, None)
        * q_pochhammer(-q * a * d / c, q, None)
    )
    return (1 - q) * c * num / den


def pbqj_norm_ratio(n, p):
    """h_n / h_0 for the pseudo big q-Jacobi bilateral orthogonality."""
    from ..scalars import GaussianRational

    a, b, c, d, q = p["a"], p["b"], p["c"], p["d"], p["q"]
    g = GaussianRational._coerce
    rho = g(c) * g(d) / (g(a) * g(b))  # cd/(ab), real for admissible sets
    val = (
        (-1) ** n
        * (g(c) ** 2 / (g(a) * g(b))) ** n
        * q ** qbinom_c2(n)
        * q ** (2 * n)
        * qpoch(q, q, n)
        * qpoch(q * g(d) / g(a), q, n)
        * qpoch(q * g(d) / g(b), q, n)
        / (
            qpoch(q * rho, q, n)
            * qpoch(q * g(c) / g(a), q, n)
            * qpoch(q * g(c) / g(b), q, n)
        )
        * (1 - q * rho)
        / (1 - q ** (2 * n + 1) * rho)
    )
    return as_exact_real(val)


def pbqj_h0(p, z_minus, z_plus):
    """h_0 of the pseudo big q-Jacobi bilateral q-integral via theta products."""
    from ..hyperkernel import q_pochhammer, theta, theta_multi
    from ..scalars import to_complex

    a, b, c, d = (to_complex(p[k]) for k in "abcd")
    q = float(p["q"])
    zm, zp = to_complex(z_minus), to_complex(z_plus)
    num = 1.0
    for arg in (q, a / c, a / d, b / c, b / d):
        num *= q_pochhammer(arg, q, None)
    num /= q_pochhammer(a * b / (q * c * d), q, None)
    t_num = theta_multi((zm / zp, c * d * zm * zp), q)
    t_den = theta_multi((c * zm, d * zm, c * zp, d * zp), q)
    return (1 - q) * zp * num * t_num / t_den


def _dqh2_coeffs(n, p):
    # book representation: i^{-n} q^{-C(n,2)} 2phi0(q^{-n}, ix; -; q, -q^n);
    # the i-powers cancel exactly, asserted by the real demotion at the end.
    q = p["q"]
    total = Poly()
    coef = GaussianRational(1)
    acc = Poly([GaussianRational(1)])
    for k in range(n + 1):
        total = total + acc * coef
        if k < n:
            coef = coef * (1 - q ** (k - n)) / (1 - q ** (k + 1)) * q ** (n - k)
            acc = acc * Poly([GaussianRational(1), -I * q**k])
    total = total * (1 / I) ** n
    return total.real_poly() * q ** (-qbinom_c2(n))


register(
    Family(
        fid="discrete_q_hermite_2",
        param_names=("q",),
        coeffs=_dqh2_coeffs,
        monic_leading=lambda n, p: F(1),
    )
)
