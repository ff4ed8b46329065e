"""Dev: per-family smoke checks — recurrence remainder, leading coeff, specials."""
from fractions import Fraction as F

from askeykit.families import (
    coeffs, derived_monic_recurrence, eval_family, monic_leading, special_value,
)
from askeykit.scalars import GaussianRational as G, I

SAMPLES = {
    "wilson": {"a": F(1, 2), "b": F(1, 3), "c": F(1, 4), "d": F(1, 5)},
    "racah": {"alpha": F(1, 2), "beta": F(1, 3), "gamma": F(-6), "delta": F(1, 4)},  # N=5 via gamma+1=-5
    "cont_dual_hahn": {"a": F(1, 2), "b": F(1, 3), "c": F(1, 4)},
    "cont_hahn": {"a": G(F(1, 2), F(1, 3)), "b": G(F(1, 4), F(1, 5)),
                  "c": G(F(1, 2), -F(1, 3)), "d": G(F(1, 4), -F(1, 5))},
    "hahn": {"alpha": F(1, 2), "beta": F(1, 3), "N": 5},
    "dual_hahn": {"gamma": F(1, 2), "delta": F(1, 3), "N": 5},
    "meixner_pollaczek": {"lam": F(3, 4), "eiphi": G(F(3, 5), F(4, 5))},
    "jacobi": {"alpha": F(1, 3), "beta": F(-1, 4)},
    "gegenbauer": {"lam": F(3, 4)},
    "chebyshev_t": {}, "chebyshev_u": {}, "chebyshev_v": {}, "chebyshev_w": {},
    "pseudo_jacobi": {"nu": F(1, 3), "N": F(7, 2)},
    "meixner": {"beta": F(2, 3), "c": F(1, 4)},
    "krawtchouk": {"p": F(1, 3), "N": 5},
    "laguerre": {"alpha": F(1, 3)},
    "charlier": {"a": F(2)},
    "hermite": {},
    "generalized_gegenbauer": {"alpha": F(1, 4), "beta": F(1, 3)},
    "generalized_hermite": {"mu": F(2, 5)},
    "gottlieb": {"c": F(1, 3)},
    "askey_wilson": {"a": F(1, 2), "b": F(1, 3), "c": F(1, 5), "d": F(1, 7), "q": F(1, 2)},
    "q_racah": {"alpha": F(1, 3), "beta": F(1, 5), "gamma": F(32), "delta": F(1, 7), "q": F(1, 2)},  # gamma*q = 16 = q^-4, N=4... need gamma*q=q^{-N-1}
    "cont_dual_q_hahn": {"a": F(1, 2), "b": F(1, 3), "c": F(1, 5), "q": F(1, 2)},
    "cont_q_hahn": {"a": F(1, 2), "b": F(1, 3), "eiphi": G(F(3, 5), F(4, 5)), "q": F(1, 2)},
    "big_q_jacobi": {"a": F(1, 4), "b": F(1, 5), "c": F(1, 3), "q": F(1, 2)},
    "big_q_jacobi4": {"a": F(1, 4), "b": F(1, 5), "c": F(1), "d": F(1), "q": F(1, 2)},
    "pseudo_big_q_jacobi": {"a": G(0, F(1, 4)), "b": G(0, -F(1, 4)), "c": G(0, 2), "d": G(0, -2), "q": F(1, 2)},
    "dual_q_hahn": {"gamma": F(1, 3), "delta": F(1, 5), "N": 5, "q": F(1, 2)},
    "al_salam_chihara": {"a": F(1, 2), "b": F(1, 3), "q": F(1, 2)},
    "al_salam_chihara_qinv": {"a": F(3), "b": F(1, 2), "q": F(1, 2)},
    "cont_q_jacobi": {"alpha": F(1, 2), "beta": F(1), "s": F(1, 2)},
    "cont_q_ultraspherical": {"beta": F(1, 3), "q": F(1, 2)},
    "big_q_laguerre": {"a": F(1, 3), "b": F(1, 5), "q": F(1, 2)},
    "little_q_jacobi": {"a": F(1, 3), "b": F(1, 5), "q": F(1, 2)},
    "little_q_laguerre": {"a": F(1, 3), "q": F(1, 2)},
    "quantum_q_krawtchouk": {"p": F(3), "N": 5, "q": F(1, 2)},
    "affine_q_krawtchouk": {"p": F(1, 3), "N": 5, "q": F(1, 2)},
    "dual_q_krawtchouk": {"c": F(-1, 2), "N": 5, "q": F(1, 2)},
    "q_laguerre": {"alpha": 1, "q": F(1, 2)},
    "stieltjes_wigert": {"q": F(1, 2)},
    "discrete_q_hermite_1": {"q": F(1, 2)},
    "discrete_q_hermite_2": {"q": F(1, 2)},
}

bad = []
for fid, p in SAMPLES.items():
    try:
        # degree-0 normalization
        c0 = coeffs(fid, 0, p)
        assert list(c0.coeffs) == [1], f"{fid}: p_0 != 1: {c0}"
        for n in (1, 2, 3, 4, 5):
            cn = coeffs(fid, n, p)
            assert cn.degree == n, f"{fid}: degree {cn.degree} != {n}"
            lead = monic_leading(fid, n, p)
            assert cn.leading() == lead, f"{fid} n={n}: leading {cn.leading()} != {lead}"
        for n in (1, 2, 3, 4):
            derived_monic_recurrence(fid, n, p)
        print(f"OK   {fid}")
    except Exception as e:
        bad.append(fid)
        print(f"FAIL {fid}: {type(e).__name__}: {e}")

print("\nfailures:", bad)
