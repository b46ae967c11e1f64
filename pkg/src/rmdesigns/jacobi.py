"""Jacobi polynomials of binary codes and their closed forms for RM(1, m)."""

from __future__ import annotations

import enum
import itertools
import random
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError, VerificationError
from .gf2code import BinaryCode, pattern_histogram, weight_distribution
from .poly import W, X, Y, Z, Poly4, binomial_xy, macwilliams_substitute
from .report import DesignReport, vacuous

# canonical witness pair: vectors {0, e1, e2, e3} and {0, e1, e2, e1+e2}
T_INDEP = (0, 1, 2, 4)
T_DEP = (0, 1, 2, 3)

DESIGN_SUBSET_CAP = 100_000


class TClass(enum.Enum):
    INDEPENDENT = "indep"
    DEPENDENT = "dep"


def _check_T(n: int, T: Iterable[int]) -> tuple[int, ...]:
    T = tuple(sorted(T))
    if len(set(T)) != len(T):
        raise InputError(f"reference set {T} has repeated points")
    if T and (T[0] < 0 or T[-1] >= n):
        raise InputError(f"reference set {T} out of range 0..{n - 1}")
    return T


def jacobi(code: BinaryCode, T: Iterable[int]) -> Poly4:
    """Sum over codewords c of w^m0 z^m1 x^n0 y^n1 (agreement counts on T and off T)."""
    n = code.n
    T = _check_T(n, T)
    t = len(T)
    terms: dict[tuple[int, int, int, int], int] = {}
    for (pat, wt), cnt in pattern_histogram(code, T).items():
        m1 = pat.bit_count()
        n1 = wt - m1
        e = (t - m1, m1, n - t - n1, n1)
        terms[e] = terms.get(e, 0) + cnt
    return Poly4(terms)


def jacobi_transform(J: Poly4, code_size: int, *, require_integral: bool = True) -> Poly4:
    """Dual Jacobi polynomial: J(w+z, w-z, x+y, x-y) / |C|."""
    if code_size <= 0:
        raise InputError("code size must be positive")
    out = macwilliams_substitute(J).div(code_size)
    if require_integral and not out.is_integral():
        raise VerificationError("transformed polynomial has non-integral coefficients")
    return out


def classify_four_set(m: int, T: Sequence[int]) -> TClass:
    T = _check_T(1 << m, T)
    if len(T) != 4:
        raise InputError("a four-set needs exactly 4 distinct points")
    a, b, c, d = T
    return TClass.DEPENDENT if a ^ b ^ c ^ d == 0 else TClass.INDEPENDENT


def canonical_four_set(cls: TClass) -> tuple[int, ...]:
    return T_INDEP if cls is TClass.INDEPENDENT else T_DEP


def random_four_set(m: int, cls: TClass, rng: random.Random) -> tuple[int, ...]:
    n = 1 << m
    if cls is TClass.DEPENDENT:
        a, b, c = rng.sample(range(n), 3)
        return tuple(sorted((a, b, c, a ^ b ^ c)))
    if m < 3:
        raise InputError("no affinely independent 4-sets for m < 3")
    while True:
        T = tuple(sorted(rng.sample(range(n), 4)))
        if T[0] ^ T[1] ^ T[2] ^ T[3]:
            return T


def _require_m(m: int) -> None:
    if m < 3:
        raise InputError("closed forms need m >= 3")


def rm1_jacobi_closed(m: int, cls: TClass) -> Poly4:
    """Jacobi polynomial of RM(1, m) for a 4-set of the given class, written out term by term."""
    _require_m(m)
    n, h = 1 << m, 1 << (m - 1)

    def mono(ew, ez, ex, ey, c):
        return Poly4.monomial((ew, ez, ex, ey), c)

    if cls is TClass.INDEPENDENT:
        return (
            mono(4, 0, n - 4, 0, 1)
            + mono(4, 0, h - 4, h, 2 ** (m - 3) - 1)
            + mono(3, 1, h - 3, h - 1, 2 ** (m - 1))
            + mono(2, 2, h - 2, h - 2, 3 * 2 ** (m - 2))
            + mono(1, 3, h - 1, h - 3, 2 ** (m - 1))
            + mono(0, 4, h, h - 4, 2 ** (m - 3) - 1)
            + mono(0, 4, 0, n - 4, 1)
        )
    return (
        mono(4, 0, n - 4, 0, 1)
        + mono(4, 0, h - 4, h, 2 ** (m - 2) - 1)
        + mono(2, 2, h - 2, h - 2, 3 * 2 ** (m - 1))
        + mono(0, 4, h, h - 4, 2 ** (m - 2) - 1)
        + mono(0, 4, 0, n - 4, 1)
    )


def rm1_dual_jacobi_closed(m: int, cls: TClass) -> Poly4:
    """Jacobi polynomial of the extended Hamming code, via the transform of the RM(1, m) form."""
    return jacobi_transform(rm1_jacobi_closed(m, cls), 2 ** (m + 1))


def rm1_dual_jacobi_printed(m: int, cls: TClass, *, corrected: bool = False) -> Poly4:
    """Term-by-term transcription of the published dual Jacobi formula.

    The published independent case has a bare ``y^(h-3)`` in its fifth term.
    ``corrected=True`` reads it as ``(x-y)^(h-3)`` instead. Only used to
    report the discrepancy; :func:`rm1_dual_jacobi_closed` is authoritative.
    """
    _require_m(m)
    n, h = 1 << m, 1 << (m - 1)
    wp, wm = W + Z, W - Z

    def xy(a, b):
        return binomial_xy(a, b)

    if cls is TClass.INDEPENDENT:
        fifth = xy(h - 1, h - 3) if corrected else xy(h - 1, 0) * Y ** (h - 3)
        total = (
            wp**4 * xy(n - 4, 0)
            + (2 ** (m - 3) - 1) * wp**4 * xy(h - 4, h)
            + 2 ** (m - 1) * wp**3 * wm * xy(h - 3, h - 1)
            + 3 * 2 ** (m - 2) * wp**2 * wm**2 * xy(h - 2, h - 2)
            + 2 ** (m - 1) * wp * wm**3 * fifth
            + (2 ** (m - 3) - 1) * wm**4 * xy(h, h - 4)
            + wm**4 * xy(0, n - 4)
        )
    else:
        total = (
            wp**4 * xy(n - 4, 0)
            + (2 ** (m - 2) - 1) * wp**4 * xy(h - 4, h)
            + 3 * 2 ** (m - 1) * wp**2 * wm**2 * xy(h - 2, h - 2)
            + (2 ** (m - 2) - 1) * wm**4 * xy(h, h - 4)
            + wm**4 * xy(0, n - 4)
        )
    return total.div(2 ** (m + 1))


def restriction_profile(
    code: BinaryCode, T: Iterable[int], exclude: Iterable[int] = ()
) -> dict[int, int]:
    """Histogram of wt(c|_T) over codewords c not in ``exclude``."""
    T = _check_T(code.n, T)
    hist = {i: 0 for i in range(len(T) + 1)}
    for (pat, _), cnt in pattern_histogram(code, T).items():
        hist[pat.bit_count()] += cnt
    for v in set(exclude):
        if code.contains(v):
            hist[sum((v >> q) & 1 for q in T)] -= 1
    return hist


def lemma_profile(m: int, cls: TClass) -> dict[int, int]:
    """Published counts of wt(c|_T) over RM(1, m) minus {0, 1}."""
    _require_m(m)
    if cls is TClass.INDEPENDENT:
        a, b, c = 2 ** (m - 3) - 1, 2 ** (m - 1), 3 * 2 ** (m - 2)
    else:
        a, b, c = 2 ** (m - 2) - 1, 0, 3 * 2 ** (m - 1)
    return {0: a, 1: b, 2: c, 3: b, 4: a}


def jacobi_difference_closed(m: int, side: str = "code") -> Poly4:
    """J_{T1} - J_{T2} for an independent T1 and dependent T2, expanded.

    ``side`` is ``"code"`` for RM(1, m) or ``"dual"`` for the extended Hamming code.
    """
    _require_m(m)
    h = 1 << (m - 1)
    quartic = (W * Y - X * Z) ** 4
    if side == "code":
        return -(2 ** (m - 3)) * X ** (h - 4) * Y ** (h - 4) * quartic
    if side == "dual":
        return -binomial_xy(h - 4, h - 4) * quartic
    raise InputError(f"side must be 'code' or 'dual', not {side!r}")


def design_coefficient(J: Poly4, n: int, ell: int, t: int) -> int:
    """Coefficient of z^t x^(n-ell) y^(ell-t): weight-ell words containing T."""
    if ell < t:
        return 0
    return J.coeff((0, t, n - ell, ell - t))


def _t_sets(n: int, t: int, mode: str, count: int, seed: int, cap: int) -> Iterator[tuple[int, ...]]:
    if mode == "all":
        if comb(n, t) > cap:
            raise CapacityError(f"C({n},{t}) = {comb(n, t)} t-sets exceeds cap {cap}; use sampling")
        yield from itertools.combinations(range(n), t)
    elif mode == "sample":
        rng = random.Random(seed)
        for _ in range(count):
            yield tuple(sorted(rng.sample(range(n), t)))
    else:
        raise InputError(f"mode must be 'all' or 'sample', not {mode!r}")


def jacobi_design_test(
    code: BinaryCode,
    ell: int,
    t: int,
    mode: str = "all",
    *,
    count: int = 100,
    seed: int = 0,
    cap: int = DESIGN_SUBSET_CAP,
) -> DesignReport:
    """Decide whether the weight-``ell`` shell is a t-design from Jacobi coefficients.

    Stops at the first pair of reference sets whose coefficients differ.
    Sampling can only refute; a sampled "design" verdict is marked as such.
    """
    n = code.n
    if not 1 <= t <= n:
        raise InputError(f"t must lie in 1..{n}")
    if weight_distribution(code)[ell] == 0:
        return vacuous(t, "jacobi")
    first = None
    for T in _t_sets(n, t, mode, count, seed, cap):
        c = design_coefficient(jacobi(code, T), n, ell, t)
        if first is None:
            first = (T, c)
        elif c != first[1]:
            return DesignReport(
                False, t, "jacobi",
                witness={"sets": [list(first[0]), list(T)], "counts": [first[1], c]},
            )
    note = None if mode == "all" else f"sampled {count} t-sets (seed {seed}); not a proof"
    return DesignReport(True, t, "jacobi", lam=first[1], note=note)

