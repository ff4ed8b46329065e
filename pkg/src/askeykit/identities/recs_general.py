"""General-purpose records: uniqueness criteria, even-measure ratio, Appell
F4 reduction, base inversion, terminating 2phi1 transform, 8W7, theta."""

from __future__ import annotations

from fractions import Fraction as F

from .. import families
from ..families.base import fact, poch, qpoch
from ..hyperkernel import (
    HypSpec,
    appell_f4,
    hyp,
    q_pochhammer,
    qhyp,
    theta,
    theta_multi,
    w8_7,
    w8_7_spec,
)
from ..numerics import Tol
from .core import CheckMode, divergence_diagnostic, record


@record("A.90", "G", CheckMode.DIAG, families=("hermite",),
        anchor="orthonormal-square divergence criterion for measure uniqueness")
def _a90(ctx):
    # orthonormal Hermite at z = 0: |p_2m(0)|^2 = C(2m, m)/4^m ~ 1/sqrt(pi m)
    def term(n):
        m = n // 2
        if n % 2:
            return 0.0
        return float(F(fact(2 * m), fact(m) ** 2) / F(4) ** m)

    divergence_diagnostic(ctx, term, 200, "sum |p_n(0)|^2 for Hermite")


@record("A.93", "G", CheckMode.DIAG, families=("hermite", "laguerre"),
        anchor="divergent sum of C_n^(-1/2) criterion for measure uniqueness")
def _a93(ctx):
    for fid, p in (("hermite", {}), ("laguerre", {"alpha": F(1, 3)})):
        def term(n, fid=fid, p=p):
            _, c = families.monic_recurrence(fid, n, p)
            return float(c) ** -0.5

        divergence_diagnostic(ctx, term, 200, f"sum C_n^(-1/2) for {fid}")


@record("A.1", "G", CheckMode.EXACT_POINT,
        families=("gegenbauer", "hermite", "discrete_q_hermite_1", "discrete_q_hermite_2"),
        anchor="value ratio at 0 from an even orthogonality measure")
def _a1(ctx):
    cases = [
        ("gegenbauer", {"lam": F(3, 4)}),
        ("hermite", {}),
        ("discrete_q_hermite_1", {"q": F(1, 2)}),
        ("discrete_q_hermite_2", {"q": F(1, 2)}),
    ]
    for fid, p in cases:
        for n in range(1, 9):
            a, c = families.even_recurrence(fid, 2 * n - 1, p)
            p2n = families.coeffs(fid, 2 * n, p)(F(0))
            p2n2 = families.coeffs(fid, 2 * n - 2, p)(F(0))
            ctx.exact_equal(p2n * a, -c * p2n2, f"{fid} n={n}")
        ctx.note(f"{fid}: n <= 8")


@record("A.62", "G", CheckMode.NUM_SERIES, anchor="Appell F4 double series")
def _a62(ctx):
    ctx.close(appell_f4(0.3, 0.7, 1.1, 0.9, 0.0, 0.0), 1.0, Tol.TIGHT, "F4 at origin")
    for x, y in [(0.05, 0.11), (0.02, 0.2), (0.13, 0.04)]:
        lhs = appell_f4(1 / 3, 2 / 5, 0.8, 0.8, x, y)
        rhs = appell_f4(1 / 3, 2 / 5, 0.8, 0.8, y, x)
        ctx.close(lhs, rhs, Tol.TIGHT, f"x<->y symmetry at ({x},{y})")
    ctx.note("origin value and 3-point x<->y symmetry with equal lower parameters")


@record("A.63", "G", CheckMode.NUM_SERIES, anchor="F4 reduction to a single 2F1")
def _a63(ctx):
    a, b = 1 / 3, 2 / 5
    grid = [0.02, 0.04, 0.06, 0.08, 0.10]
    for x in grid:
        for y in grid:
            lhs = appell_f4(a, b, b, b, x, y)
            u = 1 - x - y
            z = 4 * x * y / u**2
            rhs = u**-a * hyp(HypSpec((a / 2, (a + 1) / 2), (b,), z))
            ctx.close(lhs, rhs, Tol.TIGHT, f"grid point ({x},{y})")
    ctx.note("5x5 grid inside the convergence region, a=1/3 b=2/5")


@record("A.154", "G", CheckMode.EXACT_POINT, anchor="series inversion to base 1/q")
def _a154(ctx):
    q = F(1, 2)
    for trial in range(10):
        pool = ctx.rationals(4, lambda v: v != 0)
        n = 1 + trial % 4
        a1 = q**n  # = (1/q)^(-n): terminating on the inverted-base side
        b1, z = pool[0], pool[1]
        lhs = qhyp(HypSpec((a1,), (b1,), z, base=1 / q))
        rhs = qhyp(
            HypSpec((1 / a1, 0), (1 / b1,), q * a1 * z / b1, base=q)
        )
        ctx.exact_equal(lhs, rhs, f"r=s=1 trial {trial}")
        # r=2, s=2 flavor with an extra upper/lower pair
        a2, b2 = pool[2], pool[3]
        lhs2 = qhyp(HypSpec((a1, a2), (b1, b2), z, base=1 / q))
        rhs2 = qhyp(
            HypSpec((1 / a1, 1 / a2, 0), (1 / b1, 1 / b2), q * a1 * a2 * z / (b1 * b2), base=q)
        )
        ctx.exact_equal(lhs2, rhs2, f"r=s=2 trial {trial}")
        ctx.note(f"trial {trial}: n={n} b1={b1} z={z}")


@record("A.151", "G", CheckMode.EXACT_POINT,
        anchor="terminating 2phi1 as a 3phi2 with argument q")
def _a151(ctx):
    q = F(1, 2)
    b, c, z = F(1, 3), F(1, 5), F(2, 7)
    for n in range(0, 9):
        lhs = qhyp(HypSpec((q**-n, b), (c,), z, base=q))
        pref = qpoch(b * z / (c * q), 1 / q, n)
        rhs = pref * qhyp(
            HypSpec((q**-n, c / b, 0), (c, c * q / (b * z)), q, base=q)
        )
        ctx.exact_equal(lhs, rhs, f"n={n}")
    ctx.note("n <= 8 at b=1/3 c=1/5 z=2/7 q=1/2")


@record("A.111", "G", CheckMode.EXACT_POINT,
        anchor="very-well-poised 8W7 shorthand unfolds to its 8phi7 series")
def _a111(ctx):
    q = F(1, 2)
    # length-1 case: a4 = 1 kills every k >= 1 term
    val = w8_7(F(1, 3), F(1), F(1, 5), F(1, 7), F(2, 3), q**-3, q, F(1, 9))
    ctx.exact_equal(val, F(1), "a4=1 collapses the series")
    a1 = F(9, 16)  # perfect square so the literal spec is exact
    sqrt_a1 = F(3, 4)
    rest = (F(1, 3), F(1, 5), F(1, 7), F(2, 3))
    for n in range(1, 5):
        args = rest + (q**-n,)
        direct = w8_7(a1, *args, q, F(1, 9))
        spec = w8_7_spec(a1, *args, q, F(1, 9), sqrt_a1)
        ctx.exact_equal(direct, qhyp(spec), f"n={n}")
    ctx.note("definition unfolding for 4 terminating lengths at a1=9/16")


@record("A.117", "G", CheckMode.NUM_SERIES, anchor="theta product and its symmetry")
def _a117(ctx):
    q = F(1, 2)
    ctx.close(theta(F(1), q), 0.0, Tol.TIGHT, "theta(1; q) = 0")
    ctx.close(theta(q, q), 0.0, Tol.TIGHT, "theta(q; q) = 0")
    x = 1 / 3
    ctx.close(theta(x, 0.5), theta(0.5 / x, 0.5), Tol.TIGHT, "x <-> q/x symmetry")
    lhs = theta_multi((0.3, -0.2, 1.7), 0.5)
    rhs = theta(0.3, 0.5) * theta(-0.2, 0.5) * theta(1.7, 0.5)
    ctx.close(lhs, rhs, Tol.TIGHT, "multi-argument product")
    ctx.note("zeros on the q-lattice, symmetry at x=1/3, product splitting")
