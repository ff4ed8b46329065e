"""Dev round 3: confirm fitted weights on fresh params; fit h_n step ratios."""
from fractions import Fraction as F

from askeykit.families import coeffs, lattice_point
from askeykit.families.base import poch, qpoch, fact, qbinom_c2
from derive_weights import solve_weights


def fitted_weight(fid, p, x):
    q = p["q"]
    if fid == "dual_q_hahn":
        ga, de, N = p["gamma"], p["delta"], int(p["N"])
        return (
            qpoch(ga * q, q, x) * qpoch(ga * de * q, q, x) * qpoch(q ** (-N), q, x)
            / (qpoch(q, q, x) * qpoch(ga * de * q ** (N + 2), q, x) * qpoch(de * q, q, x))
            * (1 - ga * de * q ** (2 * x + 1)) / (1 - ga * de * q)
            * (-1) ** x * ga ** (-x) * q ** (N * x - x * (x + 1) // 2)
        )
    if fid == "q_racah":
        al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
        return (
            qpoch(al * q, q, x) * qpoch(be * de * q, q, x) * qpoch(ga * q, q, x)
            * qpoch(ga * de * q, q, x)
            / (qpoch(q, q, x) * qpoch(ga * de * q / al, q, x)
               * qpoch(ga * q / be, q, x) * qpoch(de * q, q, x))
            * (1 - ga * de * q ** (2 * x + 1)) / (1 - ga * de * q)
            / (al * be * q) ** x
        )
    if fid == "quantum_q_krawtchouk":
        pp, N = p["p"], int(p["N"])
        return (
            qpoch(pp * q, q, N - x) * qpoch(q, q, N)
            / (qpoch(q, q, x) * qpoch(q, q, N - x))
            * (-1) ** x * q ** qbinom_c2(x)
        )
    if fid == "affine_q_krawtchouk":
        pp, N = p["p"], int(p["N"])
        return (
            qpoch(pp * q, q, x) * qpoch(q, q, N)
            / (qpoch(q, q, x) * qpoch(q, q, N - x))
            * (pp * q) ** (-x)
        )
    if fid == "dual_q_krawtchouk":
        c, N = p["c"], int(p["N"])
        return (
            qpoch(q ** (-N), q, x) * qpoch(c * q ** (-N), q, x)
            / (qpoch(q, q, x) * qpoch(c * q, q, x))
            * (1 - c * q ** (2 * x - N)) / (1 - c * q ** (-N))
            * c ** (-x) * q ** (2 * N * x - x * x)
        )
    raise KeyError(fid)


CASES = {
    "dual_q_hahn": [
        {"gamma": F(1, 3), "delta": F(1, 5), "N": 4, "q": F(1, 2)},
        {"gamma": F(2, 5), "delta": F(-3), "N": 3, "q": F(1, 3)},
        {"gamma": F(1, 5), "delta": F(0), "N": 4, "q": F(1, 2)},
    ],
    "q_racah": [
        {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(32), "delta": F(1, 7), "q": F(1, 2)},
        {"alpha": F(16), "beta": F(1, 5), "gamma": F(1, 3), "delta": F(1, 7), "q": F(1, 2)},
    ],
    "quantum_q_krawtchouk": [
        {"p": F(3), "N": 4, "q": F(1, 2)},
        {"p": F(5), "N": 3, "q": F(1, 3)},
    ],
    "affine_q_krawtchouk": [
        {"p": F(1, 3), "N": 4, "q": F(1, 2)},
        {"p": F(1, 7), "N": 3, "q": F(1, 3)},
    ],
    "dual_q_krawtchouk": [
        {"c": F(-1, 2), "N": 4, "q": F(1, 2)},
        {"c": F(-2, 7), "N": 3, "q": F(1, 3)},
    ],
}

for fid, plist in CASES.items():
    for p in plist:
        N = int(p["N"]) if "N" in p else None
        if fid == "q_racah":
            from askeykit.families.qfamilies import qracah_N
            N = qracah_N(p)
        w = solve_weights(fid, p, N)
        ok = all(
            w[x] / w[0] == fitted_weight(fid, p, x) / fitted_weight(fid, p, 0)
            for x in range(N + 1)
        )
        # exact norms with the fitted weight (absolute scale)
        lam = [lattice_point(fid, p, x) for x in range(N + 1)]
        wts = [fitted_weight(fid, p, x) for x in range(N + 1)]
        hs = []
        for n in range(N + 1):
            pn = coeffs(fid, n, p)
            hs.append(sum(wts[x] * pn(lam[x]) ** 2 for x in range(N + 1)))
        # cross terms must vanish
        p1, p2 = coeffs(fid, 1, p), coeffs(fid, 2, p)
        cross = sum(wts[x] * p1(lam[x]) * p2(lam[x]) for x in range(N + 1))
        print(f"== {fid} {p}\n   weight-match={ok} cross12={cross}")
        print("   h0 =", hs[0])
        for n in range(1, N + 1):
            print(f"   t{n} = h{n}/h{n-1} =", hs[n] / hs[n - 1])
