"""Harmonic functions on k-subsets and harmonic weight enumerators."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd
from typing import Iterable, Mapping, Optional, Sequence

from .errors import CapacityError, InputError, VerificationError
from .gf2code import (
    BinaryCode,
    BlockSet,
    codewords,
    extended_hamming,
    pattern_histogram,
    rref,
    shell,
)
from .poly import Coeff, Poly4, binomial_xy, macwilliams_substitute

HARM_BASIS_CAP = 100_000

Subset = tuple[int, ...]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class SubsetFn:
    """A rational-valued function on the k-subsets of ``{0..n-1}``; absent keys are zero."""

    n: int
    k: int
    values: Mapping[Subset, Coeff]

    @classmethod
    def of(cls, n: int, k: int, values: Mapping[Iterable[int], Coeff]) -> SubsetFn:
        clean: dict[Subset, Coeff] = {}
        for s, v in values.items():
            s = tuple(sorted(s))
            if len(s) != k or len(set(s)) != k or (s and (s[0] < 0 or s[-1] >= n)):
                raise InputError(f"{s} is not a {k}-subset of 0..{n - 1}")
            v = _norm(clean.get(s, 0) + v)
            if v:
                clean[s] = v
            else:
                clean.pop(s, None)
        return cls(n, k, clean)

    def __call__(self, s: Iterable[int]) -> Coeff:
        return self.values.get(tuple(sorted(s)), 0)

    def is_zero(self) -> bool:
        return not self.values

    def points(self) -> tuple[int, ...]:
        return tuple(sorted({p for s in self.values for p in s}))

    def __add__(self, other: SubsetFn) -> SubsetFn:
        if (self.n, self.k) != (other.n, other.k):
            raise InputError("subset functions live on different spaces")
        vals = dict(self.values)
        for s, v in other.values.items():
            vals[s] = vals.get(s, 0) + v
        return SubsetFn.of(self.n, self.k, vals)

    def scale(self, c: Coeff) -> SubsetFn:
        return SubsetFn.of(self.n, self.k, {s: v * c for s, v in self.values.items()})

    def __sub__(self, other: SubsetFn) -> SubsetFn:
        return self + other.scale(-1)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "values": [{"subset": list(s), "value": str(self.values[s])} for s in sorted(self.values)],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> SubsetFn:
        return cls.of(
            int(obj["n"]), int(obj["k"]),
            {tuple(e["subset"]): _norm(Fraction(str(e["value"]))) for e in obj["values"]},
        )


@dataclass(frozen=True)
class HarmonicFn(SubsetFn):
    """A subset function in the kernel of :func:`gamma`; checked on construction."""

    def __post_init__(self):
        if self.k >= 1 and not gamma(self).is_zero():
            raise VerificationError("function is not harmonic: gamma(f) != 0")

    @classmethod
    def wrap(cls, f: SubsetFn) -> HarmonicFn:
        return cls(f.n, f.k, f.values)


def gamma(f: SubsetFn) -> SubsetFn:
    """Differentiation: (gamma f)(y) = sum of f(z) over k-subsets z containing the (k-1)-subset y."""
    if f.k < 1:
        raise InputError("gamma is undefined on degree 0")
    out: dict[Subset, Coeff] = {}
    for s, v in f.values.items():
        for i in range(f.k):
            y = s[:i] + s[i + 1 :]
            out[y] = out.get(y, 0) + v
    return SubsetFn.of(f.n, f.k - 1, out)


def tilde(f: SubsetFn, u: Iterable[int]) -> Coeff:
    """Sum of f over the k-subsets of ``u``."""
    pts = set(f.points())
    uu = sorted(pts.intersection(u))
    if len(uu) < f.k:
        return 0
    if comb(len(uu), f.k) <= len(f.values):
        total = sum(f.values.get(s, 0) for s in itertools.combinations(uu, f.k))
    else:
        us = set(uu)
        total = sum(v for s, v in f.values.items() if us.issuperset(s))
    return _norm(total)


# bases of Harm_k


def _standard_second_rows(n: int, k: int):
    """Second rows of standard Young tableaux of shape (n-k, k)."""
    for b in itertools.combinations(range(n), k):
        # ballot condition: the i-th entry of row two exceeds 2i
        if all(b[i] >= 2 * i + 1 for i in range(k)):
            yield b


def _polytabloid(n: int, b: Subset) -> SubsetFn:
    b_set = set(b)
    a = [p for p in range(n) if p not in b_set][: len(b)]
    vals = {}
    for choice in itertools.product((0, 1), repeat=len(b)):
        s = tuple(sorted(a[i] if c else b[i] for i, c in enumerate(choice)))
        vals[s] = -1 if sum(choice) & 1 else 1
    return SubsetFn(n, len(b), vals)


def _kernel_by_elimination(n: int, k: int) -> list[SubsetFn]:
    cols = list(itertools.combinations(range(n), k))
    rows_idx = {y: i for i, y in enumerate(itertools.combinations(range(n), k - 1))}
    mat = [[Fraction(0)] * len(cols) for _ in rows_idx]
    for j, s in enumerate(cols):
        for i in range(k):
            mat[rows_idx[s[:i] + s[i + 1 :]]][j] += 1
    pivot_cols = []
    r = 0
    for c in range(len(cols)):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                fac = mat[i][c]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(mat):
            break
    pivset = set(pivot_cols)
    basis = []
    for free in range(len(cols)):
        if free in pivset:
            continue
        vec = {cols[free]: Fraction(1)}
        for row, pc in enumerate(pivot_cols):
            if mat[row][free] != 0:
                vec[cols[pc]] = -mat[row][free]
        basis.append(_integer_content_one(n, k, vec))
    return basis


def _integer_content_one(n: int, k: int, vec: Mapping[Subset, Fraction]) -> SubsetFn:
    den = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in vec.values()), 1)
    ints = {s: int(v * den) for s, v in vec.items()}
    g = reduce(gcd, ints.values())
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return SubsetFn.of(n, k, {s: v // g for s, v in ints.items()})


@lru_cache(maxsize=32)
def harm_basis(n: int, k: int, method: str = "tableau", cap: int = HARM_BASIS_CAP) -> tuple[HarmonicFn, ...]:
    """A basis of Harm_k on n points, of size C(n,k) - C(n,k-1) (empty when that is <= 0).

    ``method="tableau"`` returns the standard polytabloids (entries +-1);
    ``method="elimination"`` computes ker(gamma) by exact rational row
    reduction with content-one integer vectors. Both span the same space.
    """
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got n={n}, k={k}")
    if comb(n, k) > cap:
        raise CapacityError(f"C({n},{k}) = {comb(n, k)} exceeds harmonic basis cap {cap}")
    if method == "tableau":
        fns = [_polytabloid(n, b) for b in _standard_second_rows(n, k)]
    elif method == "elimination":
        fns = _kernel_by_elimination(n, k)
    else:
        raise InputError(f"unknown basis method {method!r}")
    return tuple(HarmonicFn.wrap(f) for f in fns)


def subset_rank(fns: Sequence[SubsetFn]) -> int:
    """Rank of a family of subset functions over Q (exact)."""
    keys = sorted({s for f in fns for s in f.values})
    idx = {s: i for i, s in enumerate(keys)}
    rows = []
    for f in fns:
        row = [Fraction(0)] * len(keys)
        for s, v in f.values.items():
            row[idx[s]] = Fraction(v)
        rows.append(row)
    rank = 0
    for c in range(len(keys)):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c] != 0:
                fac = rows[i][c] / rows[rank][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


# harmonic weight enumerators


def hwe(code: BinaryCode, f: SubsetFn) -> Poly4:
    """Harmonic weight enumerator: sum over c of tilde(f)(supp c) x^(n-wt) y^wt."""
    if f.n != code.n:
        raise InputError(f"function lives on {f.n} points, code has length {code.n}")
    pts = f.points()
    cache: dict[int, Coeff] = {}
    terms: dict[tuple[int, int], Coeff] = {}
    for (pat, wt), cnt in pattern_histogram(code, pts).items():
        if pat not in cache:
            cache[pat] = tilde(f, [pts[i] for i in range(len(pts)) if (pat >> i) & 1])
        v = cache[pat]
        if v:
            key = (code.n - wt, wt)
            terms[key] = terms.get(key, 0) + cnt * v
    return Poly4.xy(terms)


def bachoc_transform(wcf: Poly4, n: int, k: int, code_size: int) -> Poly4:
    """Harmonic weight enumerator of the dual code from that of the code.

    Writes w = (xy)^k Z with Z homogeneous of degree n - 2k, then returns
    (xy)^k * (-1)^k 2^k / |C| * Z(x+y, x-y). The 1/sqrt(2) scalings cancel
    against 2^(n/2) by homogeneity, so no radicals appear.
    """
    if code_size <= 0:
        raise InputError("code size must be positive")
    z_terms = {}
    for (ew, ez, ex, ey), c in wcf.terms.items():
        if ew or ez:
            raise InputError("harmonic weight enumerator must involve x and y only")
        if ex < k or ey < k:
            raise InputError(f"enumerator is not divisible by (xy)^{k}")
        if ex + ey != n:
            raise InputError(f"enumerator is not homogeneous of degree {n}")
        z_terms[(0, 0, ex - k, ey - k)] = c
    z_dual = macwilliams_substitute(Poly4(z_terms)) * Fraction((-1) ** k * 2**k, code_size)
    return Poly4({(0, 0, ex + k, ey + k): c for (_, _, ex, ey), c in z_dual.terms.items()})


# three-dimensional subspaces and restriction


@dataclass(frozen=True)
class Subspace3:
    m: int
    basis: tuple[int, int, int]
    points: tuple[int, ...]


def make_subspace3(m: int, basis: Sequence[int]) -> Subspace3:
    basis = tuple(basis)
    if len(basis) != 3 or any(b <= 0 or b >> m for b in basis):
        raise InputError(f"need 3 nonzero vectors in F_2^{m}")
    if len(rref(basis, m)) != 3:
        raise InputError(f"basis {basis} is linearly dependent")
    pts = sorted({(i & 1) * basis[0] ^ ((i >> 1) & 1) * basis[1] ^ ((i >> 2) & 1) * basis[2] for i in range(8)})
    return Subspace3(m, basis, tuple(pts))


def random_subspace3(m: int, rng: random.Random) -> Subspace3:
    while True:
        basis = [rng.randrange(1, 1 << m) for _ in range(3)]
        if len(rref(basis, m)) == 3:
            return make_subspace3(m, basis)


def restrict_to_subspace(code: BinaryCode, U: Subspace3) -> tuple[BinaryCode, dict[int, int]]:
    """Restriction image of RM(1, m) to U (bit i = value at U's i-th smallest point).

    Returns the image as a length-8 code, which must be the extended Hamming
    code of length 8, and for each of its weight-4 words the number of
    weight-2^(m-1) codewords restricting to it.
    """
    m = U.m
    if code.n != 1 << m or m < 3:
        raise InputError("restriction expects RM(1, m) with m >= 3 on the subspace's ambient space")
    hist = pattern_histogram(code, U.points)
    image = {pat for pat, _ in hist}
    h8 = extended_hamming(3)
    if image != set(codewords(h8)):
        raise VerificationError("restriction image is not the extended Hamming code of length 8")
    half = 1 << (m - 1)
    fibers = {a: hist.get((a, half), 0) for a in codewords(h8) if a.bit_count() == 4}
    return h8, fibers


# the explicit degree-4 harmonic function


def hamming8_weight4_blocks() -> BlockSet:
    return shell(extended_hamming(3), 4)


def _check_tau(tau: Sequence[int]) -> tuple[int, int]:
    i, j = tau
    if i == j or not (0 <= i < 8 and 0 <= j < 8):
        raise InputError(f"transposition {tau} must swap two distinct points of 0..7")
    return i, j


def _apply_tau(block: Subset, tau: tuple[int, int]) -> Subset:
    i, j = tau
    swap = {i: j, j: i}
    return tuple(sorted(swap.get(p, p) for p in block))


def transposition_overlap(tau: Sequence[int]) -> int:
    """|B ∩ B^tau| for the 14 weight-4 blocks B of the length-8 Hamming code."""
    tau = _check_tau(tau)
    blocks = set(hamming8_weight4_blocks().blocks)
    return len(blocks & {_apply_tau(b, tau) for b in blocks})


def corollary_f(tau: Sequence[int] = (0, 1), U: Optional[Subspace3] = None) -> HarmonicFn:
    """f = sum(B) - sum(B^tau), optionally carried onto the points of U in sorted order."""
    tau = _check_tau(tau)
    blocks = hamming8_weight4_blocks().blocks
    vals: dict[Subset, int] = {}
    for b in blocks:
        vals[b] = vals.get(b, 0) + 1
        bt = _apply_tau(b, tau)
        vals[bt] = vals.get(bt, 0) - 1
    n = 8
    if U is not None:
        n = 1 << U.m
        vals = {tuple(U.points[p] for p in s): v for s, v in vals.items()}
    return HarmonicFn.wrap(SubsetFn.of(n, 4, vals))


def weight4_tilde_sum(f: SubsetFn, U: Optional[Subspace3] = None) -> Coeff:
    """Sum of tilde(f)(a) over weight-4 words a of the length-8 Hamming code (on U's points)."""
    pts = U.points if U is not None else tuple(range(8))
    return _norm(sum(tilde(f, [pts[p] for p in b]) for b in hamming8_weight4_blocks().blocks))


def thm12_closed(m: int, k: int, S: Coeff) -> tuple[Poly4, Poly4]:
    """Harmonic weight enumerators of RM(1, m) and its dual for f supported in a 3-space.

    ``S`` is the weight-4 tilde sum. The primal side is written out; the
    dual side is the :func:`bachoc_transform` of it, which works out to
    (-1)^k 2^(k-4) S (xy)^k (x^2-y^2)^(2^(m-1)-k).
    """
    if m < 3:
        raise InputError("needs m >= 3")
    if not 1 <= k <= 4:
        raise InputError("degree k must lie in 1..4")
    h = 1 << (m - 1)
    primal = Poly4.xy({(h, h): 2 ** (m - 3) * S})
    dual_side = bachoc_transform(primal, 1 << m, k, 2 ** (m + 1))
    return primal, dual_side


def thm12_dual_printed(m: int, k: int, S: Coeff) -> Poly4:
    """The dual-side formula with its published constant 2^(2^(m-1)-2).

    (x+y)/sqrt2 and (x-y)/sqrt2 raised to the same power h-k combine into
    2^-(h-k) (x^2-y^2)^(h-k), so this is exact.
    """
    h = 1 << (m - 1)
    c = Fraction((-1) ** k * 2 ** (h - 2), 2 ** (h - k)) * S
    return Poly4.xy({(k, k): 1}) * binomial_xy(h - k, h - k) * c
