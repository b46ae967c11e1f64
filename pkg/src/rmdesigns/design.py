"""t-design verification: direct counting, harmonic (Delsarte) and Jacobi routes."""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import CapacityError, InputError, VerificationError
from .gf2code import (
    MAX_ENUM_DIM,
    BinaryCode,
    BlockSet,
    dual,
    extended_hamming,
    reed_muller_1,
    shell,
    weight_distribution,
    weight_enumerator,
)
from .harmonic import corollary_f, harm_basis, hwe, make_subspace3, thm12_closed, tilde
from .jacobi import (
    T_DEP,
    T_INDEP,
    design_coefficient,
    jacobi,
    jacobi_design_test,
    jacobi_difference_closed,
)
from .poly import macwilliams_substitute
from .report import DesignReport, vacuous

COVERAGE_CAP = 10_000_000


def coverage(blocks: BlockSet, t: int) -> Counter:
    """Number of blocks (with multiplicity) containing each t-subset."""
    cov: Counter = Counter()
    for b in blocks.blocks:
        cov.update(itertools.combinations(b, t))
    return cov


def is_t_design(blocks: BlockSet, t: int, cap: int = COVERAGE_CAP) -> DesignReport:
    """Count, for every t-subset of points, the blocks containing it."""
    n = blocks.n
    if not 1 <= t <= n:
        raise InputError(f"t must lie in 1..{n}")
    if comb(n, t) > cap:
        raise CapacityError(f"C({n},{t}) t-subsets exceed cap {cap}; use the Jacobi route")
    if not blocks.blocks:
        return vacuous(t, "direct")
    cov = coverage(blocks, t)
    lo = hi = None
    for s in itertools.combinations(range(n), t):
        c = cov.get(s, 0)
        if lo is None or c < lo[1]:
            lo = (s, c)
        if hi is None or c > hi[1]:
            hi = (s, c)
    if lo[1] == hi[1]:
        return DesignReport(True, t, "direct", lam=lo[1])
    return DesignReport(
        False, t, "direct",
        witness={"sets": [list(lo[0]), list(hi[0])], "counts": [lo[1], hi[1]]},
    )


def delsarte_sum(blocks: BlockSet, f) -> Fraction | int:
    return sum(tilde(f, b) for b in blocks.blocks)


def delsarte_test(blocks: BlockSet, t: int, method: str = "tableau") -> DesignReport:
    """A block set of uniform size is a t-design iff every harmonic f of degree 1..t sums to zero over it."""
    n = blocks.n
    if not 1 <= t <= n:
        raise InputError(f"t must lie in 1..{n}")
    if not blocks.blocks:
        return vacuous(t, "delsarte")
    sizes = blocks.block_sizes()
    if len(sizes) != 1:
        raise InputError("the harmonic criterion needs blocks of one size")
    size = sizes.pop()
    if t > size:
        # the criterion needs t <= block size; beyond it every t-set has coverage 0
        return DesignReport(True, t, "delsarte", lam=0, note="blocks smaller than t: every t-set is covered 0 times")
    for k in range(1, t + 1):
        if 2 * k > n:
            continue  # Harm_k is zero
        cov = coverage(blocks, k)
        for i, f in enumerate(harm_basis(n, k, method)):
            s = sum(v * cov.get(z, 0) for z, v in f.values.items())
            if s:
                return DesignReport(
                    False, t, "delsarte",
                    witness={"degree": k, "basis_index": i, "sum": s},
                )
    lam = Fraction(len(blocks) * comb(size, t), comb(n, t))
    if lam.denominator != 1:
        raise VerificationError("harmonic criterion passed but lambda is not an integer")
    return DesignReport(True, t, "delsarte", lam=lam.numerator)


def check_agreement(reports: Iterable[DesignReport]) -> bool:
    """All non-vacuous reports must give the same verdict (and lambda when designs)."""
    verdicts = {(r.is_design, r.lam) for r in reports if not (r.note or "").startswith("vacuous")}
    return len(verdicts) <= 1


# Assmus-Mattson


def weight_distribution_any(code: BinaryCode) -> list[int]:
    """Weight distribution by enumeration, or through the dual when the code is too big."""
    if code.k <= MAX_ENUM_DIM:
        return weight_distribution(code)
    d = dual(code)
    if d.k > MAX_ENUM_DIM:
        raise CapacityError("neither the code nor its dual can be enumerated")
    we = macwilliams_substitute(weight_enumerator(d)).div(d.size)
    return [int(we.coeff((0, 0, code.n - w, w))) for w in range(code.n + 1)]


def assmus_mattson(code: BinaryCode) -> dict:
    """Largest t for which the weight condition holds, with the disjuncts that fired.

    A code without nonzero words has no minimum weight; it is treated as
    infinite, so its condition holds for every t.
    """
    n = code.n
    wc = weight_distribution_any(code)
    wd = weight_distribution_any(dual(code))
    weights_c = [w for w in range(1, n + 1) if wc[w]]
    weights_d = [w for w in range(1, n + 1) if wd[w]]
    inf = n + 1
    d = weights_c[0] if weights_c else inf
    d_perp = weights_d[0] if weights_d else inf
    best, fired = 0, []
    for t in range(1, n + 1):
        first = sum(1 for w in weights_d if w <= n - t) <= d - t
        second = sum(1 for w in weights_c if w <= n - t) <= d_perp - t
        if first or second:
            best = t
            fired = [name for name, ok in (("dual-weights", first), ("code-weights", second)) if ok]
    return {"t": best, "fired": fired, "d": d if weights_c else None, "d_perp": d_perp if weights_d else None}


def assmus_mattson_t(code: BinaryCode) -> int:
    return assmus_mattson(code)["t"]


# end-to-end corollary check


def _route_flags(route: str) -> tuple[bool, bool]:
    if route not in ("jacobi", "harmonic", "both"):
        raise InputError(f"route must be jacobi, harmonic or both, not {route!r}")
    return route in ("jacobi", "both"), route in ("harmonic", "both")


def verify_corollary(m: int, route: str = "both", *, direct_max_m: int = 5,
                     dual_direct_max_m: int = 4, dual_enum_max_m: int = 4) -> dict:
    """Check that no non-trivial shell of RM(1, m) or its dual is a 4-design.

    Every non-empty shell is tested for t = 3 and t = 4 by each method that
    fits the caps (direct count, harmonic basis, Jacobi coefficients) and
    the methods must agree. Independently, the Jacobi route reads the
    coefficient gap off the closed-form T1/T2 difference and the harmonic
    route reads nonzero coefficients off the enumerator of the explicit
    degree-4 harmonic function. Shells of weight 0 and n hold a single
    empty or full block and are trivially t-designs for every t; they are
    reported but excluded from the refutation.
    """
    if m < 3:
        raise InputError("needs m >= 3")
    use_j, use_h = _route_flags(route)
    n, half = 1 << m, 1 << (m - 1)
    U = make_subspace3(m, (1, 2, 4))
    f = corollary_f((0, 1), U)
    checks: list[dict] = []
    failures: list[str] = []

    sides = [("RM", reed_muller_1(m), direct_max_m, direct_max_m)]
    sides.append(("H", extended_hamming(m), dual_direct_max_m, dual_enum_max_m))
    for name, code, direct_m, enum_m in sides:
        enumerable = m <= enum_m
        dist = weight_distribution_any(code)
        am = assmus_mattson(code)
        checks.append({"code": name, "check": "assmus-mattson", "t": am["t"], "fired": am["fired"],
                       "ok": am["t"] >= 3})
        if am["t"] < 3:
            failures.append(f"{name}: Assmus-Mattson gives t={am['t']} < 3")
        side = "code" if name == "RM" else "dual"
        diff = jacobi_difference_closed(m, side) if use_j else None
        if use_j and enumerable:
            direct_diff = jacobi(code, T_INDEP) - jacobi(code, T_DEP)
            ok = direct_diff == diff
            checks.append({"code": name, "check": "jacobi-difference-identity", "ok": ok})
            if not ok:
                failures.append(f"{name}: closed-form Jacobi difference disagrees with enumeration")
        if use_h:
            if name == "RM" and code.k <= MAX_ENUM_DIM:
                wcf = hwe(code, f)
            elif enumerable:
                wcf = hwe(code, f)
            else:
                wcf = thm12_closed(m, 4, 8)[1]
        for ell in (w for w in range(n + 1) if dist[w]):
            trivial = ell in (0, n)
            blocks = shell(code, ell) if m <= direct_m else None
            for t in (3, 4):
                reports = []
                if blocks is not None:
                    reports.append(is_t_design(blocks, t))
                    if use_h:
                        reports.append(delsarte_test(blocks, t))
                    if use_j:
                        reports.append(jacobi_design_test(code, ell, t))
                expected = trivial or t == 3
                if not check_agreement(reports):
                    raise VerificationError(
                        f"{name} m={m} ell={ell} t={t}: methods disagree: "
                        + "; ".join(f"{r.method}={r.is_design}" for r in reports)
                    )
                for r in reports:
                    row = {"code": name, "m": m, "ell": ell, **r.to_json_obj(), "trivial": trivial}
                    row["ok"] = r.is_design == expected
                    checks.append(row)
                    if not row["ok"]:
                        failures.append(f"{name} ell={ell} t={t} {r.method}: is_design={r.is_design}")
            if use_j:
                gap = design_coefficient(diff, n, ell, 4)
                ok = (gap != 0) != trivial
                checks.append({"code": name, "m": m, "ell": ell, "t": 4, "method": "jacobi-closed-gap",
                               "gap": gap, "trivial": trivial, "ok": ok})
                if not ok:
                    failures.append(f"{name} ell={ell}: closed-form Jacobi gap {gap}")
            if use_h:
                c = wcf.coeff((0, 0, n - ell, ell))
                ok = (c != 0) != trivial
                checks.append({"code": name, "m": m, "ell": ell, "t": 4, "method": "harmonic-coefficient",
                               "coefficient": c, "trivial": trivial, "ok": ok})
                if not ok:
                    failures.append(f"{name} ell={ell}: harmonic coefficient {c}")
    return {"m": m, "route": route, "middle_shell": half, "checks": checks,
            "failures": failures, "ok": not failures}
