"""Dev: exact verification of all discrete weight+norm closed forms."""
from fractions import Fraction as F

from askeykit.families import coeffs, lattice_point
from askeykit.families.base import poch, qpoch, fact, qbinom_c2
from derive_weights import solve_weights
from derive_weights3 import fitted_weight


def exact_h(fid, p, N, wfun):
    lam = [lattice_point(fid, p, x) for x in range(N + 1)]
    wts = [wfun(fid, p, x) for x in range(N + 1)]
    hs = []
    for n in range(N + 1):
        pn = coeffs(fid, n, p)
        hs.append(sum(wts[x] * pn(lam[x]) ** 2 for x in range(N + 1)))
    # off-diagonal spot checks
    for m, n in ((0, 1), (1, 2), (0, N), (N - 1, N)):
        pm, pn = coeffs(fid, m, p), coeffs(fid, n, p)
        s = sum(wts[x] * pm(lam[x]) * pn(lam[x]) for x in range(N + 1))
        assert s == 0, (fid, m, n, s)
    return hs


def dqh_h(n, p, N):
    ga, de, q = p["gamma"], p["delta"], p["q"]
    h0 = qpoch(ga * de * q**2, q, N) / (qpoch(de * q, q, N) * (ga * q) ** N)
    r = (
        (ga * q) ** n * qpoch(q, q, n) * qpoch(de * q ** (N - n + 1), q, n)
        / (qpoch(ga * q, q, n) * qpoch(q ** (N - n + 1), q, n))
    )
    return h0 * r


def qtm_h(n, p, N):
    pp, q = p["p"], p["q"]
    h0 = (-pp) ** N * q ** (N * (N + 1) // 2)
    r = (
        F(-1) ** n * qpoch(q, q, n) * qpoch(pp * q, q, n)
        * q ** (N * n - n * (n + 1) // 2) / qpoch(q ** (N - n + 1), q, n)
    )
    return h0 * r


def aff_h(n, p, N):
    pp, q = p["p"], p["q"]
    h0 = (pp * q) ** (-N)
    r = (pp * q) ** n * qpoch(q, q, n) / (
        qpoch(pp * q, q, n) * qpoch(q ** (N - n + 1), q, n)
    )
    return h0 * r


def dqk_h(n, p, N):
    c, q = p["c"], p["q"]
    h0 = qpoch(1 / c, q, N)
    r = (
        (-c) ** n * q ** (n - n * (n + 1) // 2) * qpoch(q, q, n)
        / qpoch(q ** (N - n + 1), q, n)
    )
    return h0 * r


def qracah_h(n, p, N):
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    h0 = (
        qpoch(ga * de * q**2, q, N) * qpoch(ga * q / (al * be), q, N)
        / (qpoch(ga * de * q / al, q, N) * qpoch(ga * q / be, q, N))
    )
    r = (
        (ga * de * q) ** n
        * qpoch(al * be * q ** (n + 1), q, n) * qpoch(al * be * q / ga, q, n)
        * qpoch(al * q / de, q, n) * qpoch(be * q, q, n) * qpoch(q, q, n)
        / (
            qpoch(al * be * q**2, q, 2 * n) * qpoch(al * q, q, n)
            * qpoch(be * de * q, q, n) * qpoch(ga * q, q, n)
        )
    )
    return h0 * r


def qracah_w(p, x):
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    return (
        qpoch(al * q, q, x) * qpoch(be * de * q, q, x) * qpoch(ga * q, q, x)
        * qpoch(ga * de * q, q, x)
        / (qpoch(q, q, x) * qpoch(ga * de * q / al, q, x)
           * qpoch(ga * q / be, q, x) * qpoch(de * q, q, x))
        * (1 - ga * de * q ** (2 * x + 1)) / (1 - ga * de * q)
        / (al * be * q) ** x
    )


CASES = [
    ("dual_q_hahn", dqh_h,
     [{"gamma": F(1, 3), "delta": F(1, 5), "N": 4, "q": F(1, 2)},
      {"gamma": F(2, 5), "delta": F(-3), "N": 3, "q": F(1, 3)},
      {"gamma": F(1, 5), "delta": F(0), "N": 5, "q": F(2, 3)},
      {"gamma": F(-2), "delta": F(9), "N": 3, "q": F(1, 2)}]),
    ("quantum_q_krawtchouk", qtm_h,
     [{"p": F(3), "N": 4, "q": F(1, 2)},
      {"p": F(5), "N": 3, "q": F(1, 3)},
      {"p": F(7, 2), "N": 5, "q": F(2, 5)}]),
    ("affine_q_krawtchouk", aff_h,
     [{"p": F(1, 3), "N": 4, "q": F(1, 2)},
      {"p": F(1, 7), "N": 3, "q": F(1, 3)},
      {"p": F(2, 7), "N": 5, "q": F(2, 5)}]),
    ("dual_q_krawtchouk", dqk_h,
     [{"c": F(-1, 2), "N": 4, "q": F(1, 2)},
      {"c": F(-2, 7), "N": 3, "q": F(1, 3)},
      {"c": F(-5), "N": 5, "q": F(2, 5)}]),
]

for fid, hfun, plist in CASES:
    for p in plist:
        N = int(p["N"])
        hs = exact_h(fid, p, N, fitted_weight)
        ok = all(hs[n] == hfun(n, p, N) for n in range(N + 1))
        print(f"{fid} {p}: norms {'OK' if ok else 'MISMATCH ' + str([(hs[n], hfun(n,p,N)) for n in range(N+1) if hs[n]!=hfun(n,p,N)][:1])}")

from askeykit.families.qfamilies import qracah_N
for p in [
    {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(32), "delta": F(1, 7), "q": F(1, 2)},
    {"alpha": F(1, 7), "beta": F(2, 5), "gamma": F(81), "delta": F(-2), "q": F(1, 3)},
    {"alpha": F(2, 3), "beta": F(1, 5), "gamma": F(125, 8), "delta": F(3), "q": F(2, 5)},
]:
    N = qracah_N(p)
    hs = exact_h("q_racah", p, N, lambda fid, pp, x: qracah_w(pp, x))
    ok = all(hs[n] == qracah_h(n, p, N) for n in range(N + 1))
    print(f"q_racah N={N} {p}: norms {'OK' if ok else 'MISMATCH'}")

# racah h0 + ratio, all three truncation flavors
from askeykit.families import weight_masses


def racah_h(n, p, N):
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    h0 = (
        poch(ga + de + 2, N) * poch(ga - al - be, N)
        / (poch(ga + de - al + 1, N) * poch(ga - be + 1, N))
    )
    r = (
        poch(n + al + be + 1, n) * poch(al + be - ga + 1, n) * poch(al - de + 1, n)
        * poch(be + 1, n) * fact(n)
        / (poch(al + be + 2, 2 * n) * poch(al + 1, n)
           * poch(be + de + 1, n) * poch(ga + 1, n))
    )
    return h0 * r


for p in [
    {"alpha": F(1, 2), "beta": F(1, 3), "gamma": F(-6), "delta": F(1, 4)},
    {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(-5), "delta": F(2, 3)},
    {"alpha": F(-5), "beta": F(1, 3), "gamma": F(1, 2), "delta": F(1, 4)},   # alpha+1=-N
    {"alpha": F(1, 3), "beta": F(-9, 2), "gamma": F(1, 2), "delta": F(1, 2)},  # beta+delta+1=-N
]:
    try:
        masses = weight_masses("racah", p)
        N = len(masses) - 1
        lam = [v for _, v, _ in masses]
        wts = [m for _, _, m in masses]
        hs = []
        for n in range(N + 1):
            pn = coeffs("racah", n, p)
            hs.append(sum(wts[x] * pn(lam[x]) ** 2 for x in range(N + 1)))
        ok = all(hs[n] == racah_h(n, p, N) for n in range(N + 1))
        print(f"racah N={N} {p}: norms {'OK' if ok else 'MISMATCH h0: %s vs %s' % (hs[0], racah_h(0,p,N))}")
    except Exception as e:
        print(f"racah {p}: {type(e).__name__}: {e}")
