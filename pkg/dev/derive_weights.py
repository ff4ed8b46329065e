"""Dev: solve exact discrete weights from orthogonality, print ratio structure."""
from fractions import Fraction as F

from askeykit.families import coeffs, lattice_point
from askeykit.families.base import qpoch


def solve_weights(fid, p, N):
    # V[n][x] = p_n(lam_x); solve V w = e0 exactly (Gaussian elimination)
    lam = [lattice_point(fid, p, x) for x in range(N + 1)]
    polys = [coeffs(fid, n, p) for n in range(N + 1)]
    A = [[polys[n](lam[x]) for x in range(N + 1)] + [F(1) if n == 0 else F(0)]
         for n in range(N + 1)]
    n_rows = N + 1
    for col in range(n_rows):
        piv = next(r for r in range(col, n_rows) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [v / pv for v in A[col]]
        for r in range(n_rows):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [v - f * w for v, w in zip(A[r], A[col])]
    return [A[x][-1] for x in range(n_rows)]


def show(fid, p, N, candidate_ratio=None):
    w = solve_weights(fid, p, N)
    print(f"== {fid}  {p}")
    for x in range(1, N + 1):
        r = w[x] / w[x - 1]
        line = f"  x={x}: w/w_prev = {r}"
        if candidate_ratio:
            leftover = r / candidate_ratio(p, x)
            line += f"   leftover = {leftover}"
        print(line)
    return w


Q = F(1, 2)

# dual q-Hahn candidate ratio
def dqh_ratio(p, x):
    ga, de, N, q = p["gamma"], p["delta"], int(p["N"]), p["q"]
    return (
        (1 - ga * q**x) * (1 - ga * de * q**x) * (1 - q ** (x - N - 1))
        * (1 - ga * de * q ** (2 * x + 1))
        / ((1 - q**x) * (1 - ga * de * q ** (N + x + 1)) * (1 - de * q**x)
           * (1 - ga * de * q ** (2 * x - 1)))
    )

show("dual_q_hahn", {"gamma": F(1, 3), "delta": F(1, 5), "N": 4, "q": Q}, 4, dqh_ratio)

# q-Racah candidate ratio
def qracah_ratio(p, x):
    al, be, ga, de, q = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"]
    return (
        (1 - al * q**x) * (1 - be * de * q**x) * (1 - ga * q**x) * (1 - ga * de * q**x)
        * (1 - ga * de * q ** (2 * x + 1))
        / ((1 - q**x) * (1 - ga * de * q**x / al) * (1 - ga * q**x / be)
           * (1 - de * q**x) * (1 - ga * de * q ** (2 * x - 1)))
        / (al * be * q)
    )

show("q_racah", {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(32), "delta": F(1, 7), "q": Q}, 4, qracah_ratio)

# quantum q-Krawtchouk: inspect raw
def qtm_ratio(p, x):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    return (1 - q ** (x - N - 1)) / ((1 - q**x) * pp * q**x)

show("quantum_q_krawtchouk", {"p": F(3), "N": 4, "q": Q}, 4, qtm_ratio)

# affine q-Krawtchouk
def aff_ratio(p, x):
    pp, N, q = p["p"], int(p["N"]), p["q"]
    return (1 - pp * q**x) * (1 - q ** (x - N - 1)) / ((1 - q**x) * pp * q**x)

show("affine_q_krawtchouk", {"p": F(1, 3), "N": 4, "q": Q}, 4, aff_ratio)

# dual q-Krawtchouk
def dqk_ratio(p, x):
    c, N, q = p["c"], int(p["N"]), p["q"]
    return (
        (1 - q ** (x - N - 1)) * (1 - c * q ** (x - N)) * (1 - c * q ** (2 * x - N + 1))
        / ((1 - q**x) * (1 - c * q ** (x + 1 - N) / q) * (1 - c * q ** (2 * x - N - 1)))
    )

show("dual_q_krawtchouk", {"c": F(-1, 2), "N": 4, "q": Q}, 4, dqk_ratio)

# racah: check coded closed form directly
from askeykit.families import weight_masses, norm
p = {"alpha": F(1, 2), "beta": F(1, 3), "gamma": F(-6), "delta": F(1, 4)}
w = solve_weights("racah", p, 5)
masses = weight_masses("racah", p)
tot = sum(m for _, _, m in masses)
print("== racah: solved-vs-coded (normalized)")
for (x, _, m) in masses:
    print(f"  x={x}: solved={w[x]}  coded_norm={m/tot}  ratio={(m/tot)/w[x]}")
print("  coded h0 =", norm("racah", 0, p), " exact sum =", tot)
