"""Identity registry core: record type, check context, suite execution."""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from ..numerics import AdmissibilityError, Tol, policy, residual
from ..polyalg import LaurentPoly, Poly
from ..scalars import GaussianRational, is_exact


class CheckMode(enum.Enum):
    EXACT_COEFF = "EXACT_COEFF"
    EXACT_POINT = "EXACT_POINT"
    SERIES_TRUNC = "SERIES_TRUNC"
    NUM_SERIES = "NUM_SERIES"
    NUM_INT = "NUM_INT"
    NUM_LIMIT = "NUM_LIMIT"
    DIAG = "DIAG"


EXACT_MODES = (CheckMode.EXACT_COEFF, CheckMode.EXACT_POINT, CheckMode.SERIES_TRUNC)


@dataclass(frozen=True)
class IdentityRecord:
    rid: str
    section: str
    mode: CheckMode
    families: tuple
    anchor: str
    fn: object
    uses: tuple = ()            # trusted definitions consumed by the check
    tol_class: Tol = Tol.EXACT


@dataclass
class CheckResult:
    rid: str
    section: str
    mode: str
    passed: bool
    residual: float
    exact: bool
    samples: list
    seed: int
    elapsed_ms: float
    message: str = ""
    skipped: bool = False

    def as_dict(self):
        return {
            "id": self.rid,
            "section": self.section,
            "mode": self.mode,
            "pass": self.passed,
            "skip": self.skipped,
            "residual": self.residual,
            "samples": self.samples,
            "ms": round(self.elapsed_ms, 3),
            "message": self.message,
        }


class CheckFailure(AssertionError):
    pass


# fixed pool of small rationals (denominators <= 13); seeds shuffle only
_RATIONAL_POOL = tuple(
    Fraction(num, den)
    for den in (2, 3, 4, 5, 7, 9, 11, 13)
    for num in range(1, den)
    if Fraction(num, den).denominator == den
)


class Ctx:
    """Per-check context: seeded sampling, residual bookkeeping, assertions."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = random.Random(seed)
        self.policy = policy()
        self.samples: list = []
        self.max_residual = 0.0
        self.exact_only = True

    # -- sampling ------------------------------------------------------------
    def rationals(self, count: int, predicate=None):
        pool = list(_RATIONAL_POOL)
        self.rng.shuffle(pool)
        out = []
        for v in pool:
            if predicate is None or predicate(v):
                out.append(v)
            if len(out) == count:
                return out
        raise AdmissibilityError("rational pool exhausted by predicate")

    def note(self, description: str):
        self.samples.append(str(description))

    # -- exact assertions ------------------------------------------------------
    def exact_zero(self, value, what=""):
        if isinstance(value, (Poly, LaurentPoly)):
            ok = value.is_zero
            exact = all(is_exact(c) for c in value.coeffs)
        else:
            exact = is_exact(value)
            ok = exact and value == 0
        if not exact:
            raise CheckFailure(f"{what}: floating scalar leaked into an exact check")
        if not ok:
            raise CheckFailure(f"{what}: nonzero exact residual {value!r}")

    def exact_equal(self, lhs, rhs, what=""):
        if isinstance(lhs, (Poly, LaurentPoly)) or isinstance(rhs, (Poly, LaurentPoly)):
            self.exact_zero(lhs - rhs, what)
            return
        if not (is_exact(lhs) and is_exact(rhs)):
            raise CheckFailure(f"{what}: floating scalar leaked into an exact check")
        if lhs != rhs:
            raise CheckFailure(f"{what}: {lhs!r} != {rhs!r}")

    # -- numeric assertions ----------------------------------------------------
    def close(self, lhs, rhs, tol_class: Tol, what=""):
        self.exact_only = False
        r = residual(lhs, rhs)
        self.max_residual = max(self.max_residual, r)
        tol = self.policy.value(tol_class)
        if r > tol:
            raise CheckFailure(f"{what}: relative residual {r:.3e} > {tol:.1e}")

    def close_abs(self, lhs, rhs, tol: float, what=""):
        self.exact_only = False
        r = abs(complex(lhs) - complex(rhs)) if not isinstance(lhs, float) or not isinstance(rhs, float) else abs(lhs - rhs)
        self.max_residual = max(self.max_residual, r)
        if r > tol:
            raise CheckFailure(f"{what}: absolute residual {r:.3e} > {tol:.1e}")

    def is_true(self, cond: bool, what=""):
        if not cond:
            raise CheckFailure(what or "condition failed")


REGISTRY: dict = {}


def record(rid, section, mode, families=(), anchor="", uses=(), tol_class=None):
    if tol_class is None:
        tol_class = Tol.EXACT if mode in EXACT_MODES else (
            Tol.LOOSE if mode in (CheckMode.NUM_LIMIT, CheckMode.DIAG) else Tol.TIGHT
        )

    def deco(fn):
        if rid in REGISTRY:
            raise ValueError(f"duplicate identity id {rid}")
        REGISTRY[rid] = IdentityRecord(
            rid=rid, section=section, mode=mode, families=tuple(families),
            anchor=anchor, fn=fn, uses=tuple(uses), tol_class=tol_class,
        )
        return fn

    return deco


def _section_key(section: str):
    if section == "G":
        return (0,)
    return tuple(int(p) for p in section.split("."))


def _rid_key(rid: str):
    tail = rid.split(".", 1)[1]
    parts = tail.split(".")
    if len(parts) == 1 and parts[0].isdigit():
        return (0, int(parts[0]), "")
    return (1, 0, tail)


def catalog():
    """All records in canonical order: section, then equation number."""
    return sorted(
        REGISTRY.values(), key=lambda r: (_section_key(r.section), _rid_key(r.rid))
    )


def lookup(rid: str) -> IdentityRecord:
    try:
        return REGISTRY[rid]
    except KeyError:
        raise KeyError(f"unknown identity {rid!r}") from None


def check(rid: str, seed: int = 1) -> CheckResult:
    rec = lookup(rid)
    ctx = Ctx(seed)
    t0 = time.perf_counter()
    passed, skipped, message = True, False, ""
    try:
        rec.fn(ctx)
    except AdmissibilityError as exc:
        passed, skipped, message = False, True, f"SKIP: {exc}"
    except CheckFailure as exc:
        passed, message = False, str(exc)
    except Exception as exc:  # noqa: BLE001 - failures are results, not errors
        passed, message = False, f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - t0) * 1000
    if rec.mode in EXACT_MODES and passed and not ctx.exact_only:
        passed = False
        message = "exact-mode record performed floating comparisons"
    return CheckResult(
        rid=rec.rid,
        section=rec.section,
        mode=rec.mode.value,
        passed=passed and not skipped,
        residual=0.0 if ctx.exact_only else ctx.max_residual,
        exact=ctx.exact_only,
        samples=ctx.samples,
        seed=seed,
        elapsed_ms=elapsed,
        message=message,
        skipped=skipped,
    )


def run_suite(sections=None, modes=None, family=None, seed=1, jobs=1):
    """Run all matching records; returns (results, summary) in canonical order."""
    recs = catalog()
    if sections:
        wanted = set(sections)
        recs = [r for r in recs if r.section in wanted]
    if modes:
        wanted_modes = {m if isinstance(m, str) else m.value for m in modes}
        recs = [r for r in recs if r.mode.value in wanted_modes]
    if family:
        recs = [r for r in recs if family in r.families]
    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda r: check(r.rid, seed), recs))
    else:
        results = [check(r.rid, seed) for r in recs]
    summary = {
        "pass": sum(1 for r in results if r.passed),
        "fail": sum(1 for r in results if not r.passed and not r.skipped),
        "skip": sum(1 for r in results if r.skipped),
    }
    return results, summary


def limit_check(rid: str, seed: int = 1) -> CheckResult:
    rec = lookup(rid)
    if rec.mode is not CheckMode.NUM_LIMIT:
        raise ValueError(f"{rid} is not a limit record")
    return check(rid, seed)


def diagnostics(rid: str, seed: int = 1) -> CheckResult:
    rec = lookup(rid)
    if rec.mode is not CheckMode.DIAG:
        raise ValueError(f"{rid} is not a diagnostic record")
    return check(rid, seed)


def export_catalog_lines():
    """Tab-separated registry export: id, section, mode, families, anchor."""
    out = []
    for rec in catalog():
        out.append(
            "\t".join(
                [
                    rec.rid,
                    rec.section,
                    rec.mode.value,
                    ",".join(rec.families),
                    rec.anchor,
                ]
            )
        )
    return out


# -- shared diagnostic helper -------------------------------------------------


def divergence_diagnostic(ctx: Ctx, term, n_max=200, what=""):
    """Window diagnostic for sum term(n) = infinity: partial sums over
    doubling windows must keep growing (never collapse toward zero)."""
    ctx.exact_only = False
    sums = []
    lo = 4
    while lo < n_max:
        hi = min(2 * lo, n_max)
        sums.append(sum(float(term(n)) for n in range(lo, hi)))
        lo = hi
    ctx.is_true(all(s > 0 for s in sums), f"{what}: window sums must be positive")
    floor_ = 0.25 * sums[0]
    ctx.is_true(
        all(s >= floor_ for s in sums),
        f"{what}: window sums decay toward zero (series looks summable)",
    )
    ctx.note(f"{what}: window sums {['%.3g' % s for s in sums]}")


def bounded_ratio_diagnostic(ctx: Ctx, values, what="", spread=50.0):
    ctx.exact_only = False
    vals = [float(v) for v in values]
    ctx.is_true(all(v > 0 for v in vals), f"{what}: ratios must stay positive")
    lo, hi = min(vals), max(vals)
    ctx.is_true(
        hi <= spread * lo,
        f"{what}: ratio spread {hi / lo:.2e} exceeds bound {spread}",
    )
    ctx.note(f"{what}: ratio range [{lo:.4g}, {hi:.4g}] over n <= 200")
