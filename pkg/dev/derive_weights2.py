"""Dev round 2: dual q-Krawtchouk ratio fit; racah/q-racah norm fits."""
from fractions import Fraction as F

from askeykit.families import coeffs, lattice_point
from askeykit.families.base import poch, qpoch, fact
from derive_weights import solve_weights

Q = F(1, 2)

# --- dual q-Krawtchouk ------------------------------------------------------
def dqk_ratio(p, x):
    c, N, q = p["c"], int(p["N"]), p["q"]
    return (
        (1 - q ** (x - N - 1)) * (1 - c * q ** (x - N - 1)) * (1 - c * q ** (2 * x - N))
        / ((1 - q**x) * (1 - c * q**x) * (1 - c * q ** (2 * x - N - 2)))
    )

for c, N, q in [(F(-1, 2), 4, Q), (F(-1, 3), 3, Q), (F(-1, 2), 4, F(1, 3))]:
    p = {"c": c, "N": N, "q": q}
    w = solve_weights("dual_q_krawtchouk", p, N)
    print(f"== dual_q_krawtchouk c={c} N={N} q={q}")
    for x in range(1, N + 1):
        v = (w[x] / w[x - 1]) / dqk_ratio(p, x)
        print(f"  x={x}: leftover = {v}")

# --- racah norms ------------------------------------------------------------
def racah_exact_h(p, N):
    w = [m for _, _, m in _masses(p, N)]
    lam = [lattice_point("racah", p, x) for x in range(N + 1)]
    hs = []
    for n in range(N + 1):
        pn = coeffs("racah", n, p)
        hs.append(sum(w[x] * pn(lam[x]) ** 2 for x in range(N + 1)))
    return hs

def _masses(p, N):
    from askeykit.families import weight_masses
    return weight_masses("racah", p)

for p in [
    {"alpha": F(1, 2), "beta": F(1, 3), "gamma": F(-6), "delta": F(1, 4)},
    {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(-5), "delta": F(2, 3)},
]:
    N = -int(p["gamma"]) - 1
    hs = racah_exact_h(p, N)
    al, be, ga, de = p["alpha"], p["beta"], p["gamma"], p["delta"]
    print(f"== racah {p} N={N}")
    print("   h0 exact =", hs[0])
    cands = {
        "M1": poch(-be, N) * poch(ga + de + 2, N) / (poch(-be + ga + 1, N) * poch(de + 1, N)),
        
    }
    m1 = poch(-be, N) * poch(ga + de + 2, N) / (poch(-be + ga + 1, N) * poch(de + 1, N))
    print("   M1 =", m1, " ratio:", hs[0] / m1)
    for n in range(1, N + 1):
        ratio = (
            poch(n + al + be + 1, n) * poch(al + be - ga + 1, n) * poch(al - de + 1, n)
            * poch(be + 1, n) * fact(n)
            / (poch(al + be + 2, 2 * n) * poch(al + 1, n) * poch(be + de + 1, n) * poch(ga + 1, n))
        )
        print(f"   n={n}: (h_n/h_0)/coded_ratio = {(hs[n]/hs[0]) / ratio}")
