"""Sparse exact polynomials in the four variables ``w, z, x, y``.

Coefficients are Python ints whenever integral and :class:`fractions.Fraction`
otherwise, so code-derived enumerators stay on the fast integer path while
divisions by ``|C|`` remain exact.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

from .errors import InputError

Exps = tuple[int, int, int, int]
Coeff = Union[int, Fraction]

VARS = ("w", "z", "x", "y")
MAX_EXPONENT = 1 << 20


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _check_exps(e) -> Exps:
    e = tuple(e)
    if len(e) != 4:
        raise InputError(f"monomial needs 4 exponents, got {e!r}")
    for v in e:
        if not isinstance(v, int) or v < 0 or v > MAX_EXPONENT:
            raise InputError(f"bad exponent in {e!r}")
    return e  # type: ignore[return-value]


class Poly4:
    """Immutable sparse polynomial; equality is exact and term-by-term."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], Coeff] | None = None, *, _trusted=False):
        if _trusted:
            self._terms = terms
        else:
            clean: dict[Exps, Coeff] = {}
            for e, c in (terms or {}).items():
                c = _norm(c)
                if c:
                    e = _check_exps(e)
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
            self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c: Coeff) -> Poly4:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Coeff = 1) -> Poly4:
        return cls({tuple(exps): coeff})

    @classmethod
    def var(cls, name: str) -> Poly4:
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): 1})

    @classmethod
    def xy(cls, coeffs: Mapping[tuple[int, int], Coeff]) -> Poly4:
        """Build a polynomial in ``x, y`` from ``{(deg_x, deg_y): c}``."""
        return cls({(0, 0, a, b): c for (a, b), c in coeffs.items()})

    # read access

    @property
    def terms(self) -> Mapping[Exps, Coeff]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[Exps, Coeff]]:
        """Terms in canonical order (exponent tuples, lexicographically descending)."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def coeff(self, exps: Iterable[int]) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def evaluate(self, w=1, z=1, x=1, y=1):
        vals = (w, z, x, y)
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v**k
            total += t
        return _norm(total) if isinstance(total, (int, Fraction)) else total

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    # arithmetic

    def __add__(self, other) -> Poly4:
        if not isinstance(other, Poly4):
            if isinstance(other, (int, Fraction)):
                other = Poly4.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Poly4(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Poly4:
        return Poly4({e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> Poly4:
        if isinstance(other, (int, Fraction)):
            other = Poly4.const(other)
        if not isinstance(other, Poly4):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly4:
        return (-self) + other

    def __mul__(self, other) -> Poly4:
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return Poly4()
            return Poly4({e: _norm(c * other) for e, c in self._terms.items()}, _trusted=True)
        if not isinstance(other, Poly4):
            return NotImplemented
        out: dict[Exps, Coeff] = {}
        get = out.get
        for (a0, a1, a2, a3), c in self._terms.items():
            for (b0, b1, b2, b3), d in other._terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                out[e] = get(e, 0) + c * d
        return Poly4(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly4:
        if not isinstance(e, int) or e < 0:
            raise InputError("exponent must be a non-negative integer")
        result = Poly4.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def div(self, d: int) -> Poly4:
        """Divide every coefficient by the nonzero integer ``d`` exactly."""
        if d == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly4({e: _norm(Fraction(c) / d) for e, c in self._terms.items()}, _trusted=True)

    def __truediv__(self, d: int) -> Poly4:
        return self.div(d)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly4.const(other)
        if not isinstance(other, Poly4):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # formatting

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Poly4({to_text(self)!r})"


W = Poly4.var("w")
Z = Poly4.var("z")
X = Poly4.var("x")
Y = Poly4.var("y")
ONE = Poly4.const(1)


def poly_add(p: Poly4, q: Poly4) -> Poly4:
    return p + q


def poly_mul(p: Poly4, q: Poly4) -> Poly4:
    return p * q


def poly_pow(p: Poly4, e: int) -> Poly4:
    return p**e


def poly_scale_div(p: Poly4, d: int) -> Poly4:
    return p.div(d)


def poly_coeff(p: Poly4, mono: Iterable[int]) -> Coeff:
    return p.coeff(mono)


def substitute(p: Poly4, mapping: Mapping[str, Poly4]) -> Poly4:
    """Simultaneously replace variables by linear forms; unmapped variables stay."""
    forms = []
    for v in VARS:
        f = mapping.get(v, Poly4.var(v))
        if any(sum(e) > 1 for e in f.terms):
            raise InputError(f"substitution for {v} must have total degree <= 1")
        forms.append(f)
    powers: list[dict[int, Poly4]] = [{0: ONE} for _ in VARS]

    def power(i: int, k: int) -> Poly4:
        cache = powers[i]
        if k not in cache:
            cache[k] = forms[i] ** k
        return cache[k]

    out: dict[Exps, Coeff] = {}
    for e, c in p.terms.items():
        t = Poly4.const(c)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        for te, tc in t.terms.items():
            out[te] = out.get(te, 0) + tc
    return Poly4(out)


# MacWilliams substitution (w, z, x, y) -> (w+z, w-z, x+y, x-y)


def _binom_row(n: int) -> list[int]:
    row = [1] * (n + 1)
    for i in range(n):
        row[i + 1] = row[i] * (n - i) // (i + 1)
    return row


def _plus_minus_power(a: int, b: int) -> list[int]:
    """Coefficients of ``(1+t)^a (1-t)^b`` in ascending powers of ``t``."""
    lo, diff = min(a, b), abs(a - b)
    sq = [0] * (2 * lo + 1)  # (1 - t^2)^lo
    for i, c in enumerate(_binom_row(lo)):
        sq[2 * i] = -c if i & 1 else c
    lin = _binom_row(diff)
    if b > a:
        lin = [-c if i & 1 else c for i, c in enumerate(lin)]
    out = [0] * (a + b + 1)
    for i, s in enumerate(sq):
        if s:
            for j, l in enumerate(lin):
                out[i + j] += s * l
    return out


def _homogeneous_transform(n: int, coeffs: dict[int, Coeff]) -> list[Coeff]:
    """Transform ``sum_j c_j u^(n-j) v^j`` under ``u->u+v, v->u-v``.

    Returns the dense coefficient list indexed by the power of ``v``.
    """
    sparse_cost = sum((min(n - j, j) + 1) * (abs(n - 2 * j) + 1) for j in coeffs)
    if sparse_cost <= 3 * (n + 1) ** 2:
        out: list[Coeff] = [0] * (n + 1)
        for j, c in coeffs.items():
            for i, v in enumerate(_plus_minus_power(n - j, j)):
                if v:
                    out[i] += c * v
        return out
    # Horner: G_j = c_j (1+t)^(n-j) + (1-t) G_{j+1}
    g: list[Coeff] = [coeffs.get(n, 0)]
    pa = [1]
    for j in range(n - 1, -1, -1):
        pa = [p + q for p, q in zip(pa + [0], [0] + pa)]
        g = [p - q for p, q in zip(g + [0], [0] + g)]
        c = coeffs.get(j, 0)
        if c:
            g = [p + c * q for p, q in zip(g, pa)]
    return g


def _pair_transform(pairs: dict[tuple[int, int], Coeff]) -> dict[tuple[int, int], Coeff]:
    by_degree: dict[int, dict[int, Coeff]] = {}
    for (a, b), c in pairs.items():
        by_degree.setdefault(a + b, {})[b] = c
    out: dict[tuple[int, int], Coeff] = {}
    for n, coeffs in by_degree.items():
        for i, v in enumerate(_homogeneous_transform(n, coeffs)):
            if v:
                out[(n - i, i)] = out.get((n - i, i), 0) + v
    return out


def macwilliams_substitute(p: Poly4) -> Poly4:
    """Return ``p(w+z, w-z, x+y, x-y)``, fully expanded.

    Equivalent to :func:`substitute` with the MacWilliams map, but works one
    variable pair at a time on dense binomial rows, which keeps length-1024
    enumerators tractable.
    """
    stage: dict[tuple[int, int], dict[tuple[int, int], Coeff]] = {}
    for (ew, ez, ex, ey), c in p.terms.items():
        stage.setdefault((ew, ez), {})[(ex, ey)] = c
    mixed: dict[tuple[int, int], dict[tuple[int, int], Coeff]] = {}
    for wz, xy in stage.items():
        for xy_exp, c in _pair_transform(xy).items():
            mixed.setdefault(xy_exp, {})[wz] = c
    out: dict[Exps, Coeff] = {}
    for (ex, ey), wz in mixed.items():
        for (ew, ez), c in _pair_transform(wz).items():
            if c:
                out[(ew, ez, ex, ey)] = c
    return Poly4(out)


# serialization


def _coeff_str(c: Coeff) -> str:
    return str(c)


def _parse_coeff(s: str) -> Coeff:
    try:
        return _norm(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient {s!r}") from exc


def to_json_obj(p: Poly4) -> dict:
    return {
        "vars": list(VARS),
        "terms": [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in p.items()],
    }


def to_json(p: Poly4) -> str:
    return json.dumps(to_json_obj(p), separators=(",", ":"))


def from_json_obj(obj: Mapping) -> Poly4:
    if list(obj.get("vars", [])) != list(VARS):
        raise InputError("expected vars [w, z, x, y]")
    terms: dict[Exps, Coeff] = {}
    for t in obj["terms"]:
        e = _check_exps(t["exp"])
        if e in terms:
            raise InputError(f"duplicate monomial {e}")
        terms[e] = _parse_coeff(str(t["coeff"]))
    return Poly4(terms)


def from_json(s: str) -> Poly4:
    return from_json_obj(json.loads(s))


def _mono_text(e: Exps) -> str:
    parts = []
    for v, k in zip(VARS, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def to_text(p: Poly4) -> str:
    """Human-readable form, e.g. ``x^8 + 14*x^4*y^4 + y^8``."""
    if not p:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.items()):
        neg = c < 0
        a = -c if neg else c
        mono = _mono_text(e)
        if not mono:
            body = _coeff_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_coeff_str(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^([wzxy])(?:\^(\d+))?$")


def from_text(s: str) -> Poly4:
    s = s.replace(" ", "")
    if s in ("", "0"):
        return Poly4()
    terms: dict[Exps, Coeff] = {}
    pos = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            raise InputError(f"cannot parse polynomial near {s[pos:]!r}")
        pos = m.end()
        sign, body = m.groups()
        coeff: Coeff = 1
        e = [0, 0, 0, 0]
        for factor in body.split("*"):
            fm = _FACTOR_RE.match(factor)
            if fm:
                e[VARS.index(fm.group(1))] += int(fm.group(2) or 1)
            else:
                coeff = coeff * _parse_coeff(factor)
        if sign == "-":
            coeff = -coeff
        key = _check_exps(e)
        terms[key] = terms.get(key, 0) + coeff
    if pos != len(s):
        raise InputError(f"cannot parse polynomial near {s[pos:]!r}")
    return Poly4(terms)


def binomial_xy(a: int, b: int) -> Poly4:
    """``(x+y)^a (x-y)^b`` expanded; convenience for closed forms."""
    return Poly4.xy({(a + b - i, i): c for i, c in enumerate(_plus_minus_power(a, b)) if c})

