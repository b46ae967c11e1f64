"""Binary linear codes over GF(2).

Vectors of length ``n`` are Python ints; bit ``j`` is coordinate ``j``.
Generator rows are kept in reduced row-echelon form with pivots at the
lowest set bit, so two codes are equal iff their generator tuples are.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, InputError
from .poly import Poly4

MAX_ENUM_DIM = 26
_LOW_DIM = 16
_MAX_NUMPY_PATTERN_BITS = 18

# default worker count for enumeration; the CLI overrides it from --threads
THREADS = os.cpu_count() or 1


def weight(v: int) -> int:
    return v.bit_count()


def support(v: int) -> tuple[int, ...]:
    out = []
    j = 0
    while v:
        if v & 1:
            out.append(j)
        v >>= 1
        j += 1
    return tuple(out)


def from_support(points: Iterable[int]) -> int:
    v = 0
    for p in points:
        v |= 1 << p
    return v


def bits_to_str(v: int, n: int) -> str:
    return "".join("1" if (v >> j) & 1 else "0" for j in range(n))


def str_to_bits(s: str) -> int:
    if any(ch not in "01" for ch in s):
        raise InputError(f"bit string may only contain 0/1: {s!r}")
    return sum(1 << j for j, ch in enumerate(s) if ch == "1")


def rref(rows: Iterable[int], n: int) -> tuple[int, ...]:
    """Reduced row-echelon form over GF(2); zero and dependent rows vanish."""
    pivots: dict[int, int] = {}  # pivot column -> row
    for r in rows:
        if r < 0 or r >> n:
            raise InputError(f"row does not fit in length {n}")
        for c, pr in pivots.items():
            if (r >> c) & 1:
                r ^= pr
        if not r:
            continue
        c = (r & -r).bit_length() - 1
        for pc in list(pivots):
            if (pivots[pc] >> c) & 1:
                pivots[pc] ^= r
        pivots[c] = r
    return tuple(pivots[c] for c in sorted(pivots))


@dataclass(frozen=True)
class BinaryCode:
    n: int
    generators: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def size(self) -> int:
        return 1 << self.k

    def pivots(self) -> list[int]:
        return [(g & -g).bit_length() - 1 for g in self.generators]

    def contains(self, v: int) -> bool:
        for g, c in zip(self.generators, self.pivots()):
            if (v >> c) & 1:
                v ^= g
        return v == 0

    def encode(self, message: int) -> int:
        v = 0
        i = 0
        while message:
            if message & 1:
                v ^= self.generators[i]
            message >>= 1
            i += 1
        return v

    def __str__(self) -> str:
        return f"BinaryCode[n={self.n}, k={self.k}]"


@dataclass(frozen=True)
class BlockSet:
    """Multiset of blocks (sorted index tuples) on points ``0..n-1``."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for b in self.blocks:
            if any(p < 0 or p >= self.n for p in b) or len(set(b)) != len(b):
                raise InputError(f"invalid block {b} for n={self.n}")

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> BlockSet:
        return cls(n, tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> set[int]:
        return {len(b) for b in self.blocks}


def make_code(n: int, rows: Sequence[int | str]) -> BinaryCode:
    """Build a code from generator rows given as ints or 0/1 strings."""
    if n < 1:
        raise InputError("code length must be positive")
    ints = []
    for r in rows:
        if isinstance(r, str):
            if len(r) != n:
                raise InputError(f"row {r!r} has length {len(r)}, expected {n}")
            r = str_to_bits(r)
        ints.append(r)
    return BinaryCode(n, rref(ints, n))


def reed_muller_1(m: int) -> BinaryCode:
    """RM(1, m): affine functions on F_2^m; coordinate j is the vector with LSB-first digits of j."""
    if m < 1:
        raise InputError("RM(1,m) needs m >= 1")
    n = 1 << m
    rows = [sum(1 << j for j in range(n) if (j >> i) & 1) for i in range(m)]
    rows.append((1 << n) - 1)
    return make_code(n, rows)


def dual(code: BinaryCode) -> BinaryCode:
    n = code.n
    piv = code.pivots()
    pivset = set(piv)
    rows = []
    for f in range(n):
        if f in pivset:
            continue
        v = 1 << f
        for g, p in zip(code.generators, piv):
            if (g >> f) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(n, rref(rows, n))


def extended_hamming(m: int) -> BinaryCode:
    """The extended Hamming code of length 2^m, taken to be exactly dual(RM(1, m))."""
    if m < 2:
        raise InputError("extended Hamming code needs m >= 2")
    return dual(reed_muller_1(m))


def _check_capacity(code: BinaryCode) -> None:
    if code.k > MAX_ENUM_DIM:
        raise CapacityError(
            f"dimension {code.k} exceeds enumeration cap {MAX_ENUM_DIM}; "
            "use the MacWilliams/Bachoc transform of the dual instead"
        )


def gray_flips(k: int) -> Iterator[int]:
    """Indices of the generator toggled at each step of a k-bit Gray code walk."""
    for i in range(1, 1 << k):
        yield (i & -i).bit_length() - 1


def codewords(code: BinaryCode) -> Iterator[int]:
    """All codewords, each exactly once, consecutive words differing by one generator."""
    _check_capacity(code)
    v = 0
    yield v
    gens = code.generators
    for i in gray_flips(code.k):
        v ^= gens[i]
        yield v


def _low_table(gens: Sequence[int]) -> np.ndarray:
    arr = np.zeros(1, dtype=np.uint64)
    for g in gens:
        arr = np.concatenate([arr, arr ^ np.uint64(g)])
    return arr


def _offsets(gens: Sequence[int]) -> list[int]:
    v = 0
    out = [v]
    for i in gray_flips(len(gens)):
        v ^= gens[i]
        out.append(v)
    return out


def _pattern_counts_numpy(code, points, threads):
    n = code.n
    p = len(points)
    gens = code.generators
    low = _low_table(gens[:_LOW_DIM])
    offsets = _offsets(gens[_LOW_DIM:])
    nbins = (1 << p) * (n + 1)

    def work(chunk):
        acc = np.zeros(nbins, dtype=np.int64)
        for off in chunk:
            words = low ^ np.uint64(off) if off else low
            key = np.bitwise_count(words).astype(np.int64)
            for i, q in enumerate(points):
                bit = ((words >> np.uint64(q)) & np.uint64(1)).astype(np.int64)
                key += bit * ((n + 1) << i)
            acc += np.bincount(key, minlength=nbins)
        return acc

    threads = max(1, min(threads, len(offsets)))
    if threads == 1:
        total = work(offsets)
    else:
        step = -(-len(offsets) // threads)
        chunks = [offsets[i : i + step] for i in range(0, len(offsets), step)]
        with ThreadPoolExecutor(threads) as ex:
            total = sum(ex.map(work, chunks))
    out = Counter()
    for key in np.flatnonzero(total):
        pat, wt = divmod(int(key), n + 1)
        out[(pat, wt)] = int(total[key])
    return out


def _pattern_counts_python(code, points):
    out = Counter()
    for v in codewords(code):
        pat = 0
        for i, q in enumerate(points):
            pat |= ((v >> q) & 1) << i
        out[(pat, v.bit_count())] += 1
    return out


def pattern_histogram(
    code: BinaryCode, points: Sequence[int] = (), *, threads: int | None = None
) -> Counter:
    """Count codewords by (restriction pattern to ``points``, weight).

    Bit ``i`` of the pattern is the codeword's value at ``points[i]``. Every
    enumerator in the package (weight, Jacobi, harmonic, restriction
    profiles) is a fold of this histogram.
    """
    _check_capacity(code)
    points = tuple(points)
    if any(q < 0 or q >= code.n for q in points):
        raise InputError(f"points {points} out of range for length {code.n}")
    if len(set(points)) != len(points):
        raise InputError("points must be distinct")
    if code.n <= 64 and len(points) <= _MAX_NUMPY_PATTERN_BITS:
        return _pattern_counts_numpy(code, points, threads or THREADS)
    return _pattern_counts_python(code, points)


def weight_distribution(code: BinaryCode) -> list[int]:
    dist = [0] * (code.n + 1)
    for (_, wt), c in pattern_histogram(code).items():
        dist[wt] += c
    return dist


def weight_enumerator(code: BinaryCode) -> Poly4:
    """Sum over codewords of x^(n - wt) y^wt."""
    n = code.n
    return Poly4.xy({(n - w, w): a for w, a in enumerate(weight_distribution(code)) if a})


def shell(code: BinaryCode, ell: int) -> BlockSet:
    """Supports of the codewords of weight ``ell``."""
    if not 0 <= ell <= code.n:
        raise InputError(f"weight {ell} out of range 0..{code.n}")
    return BlockSet.of(code.n, (support(v) for v in codewords(code) if v.bit_count() == ell))


def minimum_distance(code: BinaryCode) -> int | None:
    """Smallest nonzero weight, or None for the zero code."""
    for w, a in enumerate(weight_distribution(code)):
        if w and a:
            return w
    return None


# file formats


def format_generator_matrix(code: BinaryCode) -> str:
    lines = [f"{code.n} {code.k}"]
    lines += [bits_to_str(g, code.n) for g in code.generators]
    return "\n".join(lines) + "\n"


def parse_generator_matrix(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty generator matrix file")
    try:
        n, k = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise InputError("first line must be 'n k'") from exc
    rows = lines[1:]
    if len(rows) != k:
        raise InputError(f"header declares {k} rows, found {len(rows)}")
    return make_code(n, rows)


def read_generator_matrix(path: str | Path) -> BinaryCode:
    return parse_generator_matrix(Path(path).read_text())


def format_blockset(blocks: BlockSet) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in blocks.blocks)


def parse_blockset(text: str, n: int) -> BlockSet:
    """One block per line; an empty line is the empty block."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    try:
        return BlockSet.of(n, (tuple(int(t) for t in ln.split()) for ln in lines))
    except ValueError as exc:
        raise InputError("block lines must hold integers") from exc
