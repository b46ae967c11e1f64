"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gf2code
from .design import delsarte_test, is_t_design
from .errors import CapacityError, InputError, VerificationError
from .gf2code import (
    dual,
    extended_hamming,
    format_blockset,
    format_generator_matrix,
    parse_blockset,
    read_generator_matrix,
    reed_muller_1,
    shell,
    weight_enumerator,
)
from .harmonic import (
    SubsetFn,
    bachoc_transform,
    corollary_f,
    harm_basis,
    hwe,
    make_subspace3,
)
from .jacobi import (
    TClass,
    canonical_four_set,
    classify_four_set,
    jacobi,
    jacobi_design_test,
    rm1_dual_jacobi_closed,
    rm1_jacobi_closed,
)
from .poly import Poly4, from_json_obj, from_text, to_json_obj, to_text
from .verify import TARGETS, run, summarize


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def poly(self, p: Poly4, label: str | None = None) -> None:
        if self.fmt == "json":
            obj = to_json_obj(p)
            if label:
                obj = {"label": label, **obj}
            print(json.dumps(obj, separators=(",", ":")))
        else:
            print(f"{label}: {to_text(p)}" if label else to_text(p))

    def obj(self, obj: dict, text: str) -> None:
        print(json.dumps(obj, separators=(",", ":")) if self.fmt == "json" else text)


def _int_list(s: str) -> list[int]:
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from exc


def _m_range(s: str) -> list[int]:
    try:
        if ".." in s:
            a, b = s.split("..")
            return list(range(int(a), int(b) + 1))
        return _int_list(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a..b or a list, got {s!r}") from exc


def _add_code_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--rm1", type=int, metavar="M", help="first-order Reed-Muller code RM(1,M)")
    g.add_argument("--ehamming", type=int, metavar="M", help="extended Hamming code of length 2^M")
    g.add_argument("--file", type=Path, help="generator matrix file ('n k' then k rows of 0/1)")


def _code_from(args):
    if getattr(args, "rm1", None) is not None:
        return reed_muller_1(args.rm1), ("rm1", args.rm1)
    if getattr(args, "ehamming", None) is not None:
        return extended_hamming(args.ehamming), ("ehamming", args.ehamming)
    return read_generator_matrix(args.file), ("file", None)


def _read_poly(s: str) -> Poly4:
    path = Path(s)
    text = path.read_text() if path.exists() else s
    text = text.strip()
    return from_json_obj(json.loads(text)) if text.startswith("{") else from_text(text)


# subcommands


def cmd_code(args, out: _Out) -> int:
    if args.kind == "rm1":
        if args.m is None:
            raise InputError("code rm1 needs -m")
        code = reed_muller_1(args.m)
    elif args.kind == "ehamming":
        if args.m is None:
            raise InputError("code ehamming needs -m")
        code = extended_hamming(args.m)
    else:
        if args.file is None and args.m is None:
            raise InputError(f"code {args.kind} needs --file or -m (RM(1,m))")
        code = read_generator_matrix(args.file) if args.file else reed_muller_1(args.m)
        if args.kind == "dual":
            code = dual(code)
    if args.kind == "wenum" or args.wenum:
        out.poly(weight_enumerator(code))
    elif args.kind == "shell":
        if args.ell is None:
            raise InputError("code shell needs --ell")
        blocks = shell(code, args.ell)
        if out.fmt == "json":
            print(json.dumps({"n": blocks.n, "blocks": [list(b) for b in blocks.blocks]}, separators=(",", ":")))
        else:
            sys.stdout.write(format_blockset(blocks))
    elif args.dim:
        out.obj({"n": code.n, "k": code.k}, str(code.k))
    else:
        text = format_generator_matrix(code)
        out.obj({"n": code.n, "k": code.k, "rows": text.split()[2:]}, text.rstrip("\n"))
    return 0


def cmd_jacobi(args, out: _Out) -> int:
    code, (kind, m) = _code_from(args)
    if args.t is not None:
        T = tuple(args.t)
    elif args.cls is not None:
        T = canonical_four_set(TClass(args.cls))
    else:
        raise InputError("give --t or --class")
    closed = None
    if args.closed or args.check:
        if kind not in ("rm1", "ehamming") or len(T) != 4:
            raise InputError("closed forms exist for RM(1,m) / extended Hamming codes and 4-sets only")
        cls = classify_four_set(m, T)
        closed = rm1_jacobi_closed(m, cls) if kind == "rm1" else rm1_dual_jacobi_closed(m, cls)
    if args.closed and not args.check:
        out.poly(closed)
        return 0
    J = jacobi(code, T)
    if args.check:
        if J == closed:
            out.obj({"check": "jacobi", "T": list(T), "ok": True}, "OK")
            return 0
        diff = J - closed
        out.obj({"check": "jacobi", "T": list(T), "ok": False, "diff": to_json_obj(diff)},
                f"MISMATCH: enumeration - closed form = {to_text(diff)}")
        return 1
    out.poly(J)
    return 0


def cmd_harm_basis(args, out: _Out) -> int:
    basis = harm_basis(args.n, args.k, args.method)
    if out.fmt == "json":
        for f in basis:
            print(json.dumps(f.to_json_obj(), separators=(",", ":")))
    else:
        print(f"# dim Harm_{args.k}({args.n}) = {len(basis)}")
        for f in basis:
            print(" + ".join(f"{v}*{list(s)}" for s, v in sorted(f.values.items())).replace("+ -", "- "))
    return 0


def _harmonic_fn(args, n: int):
    if args.f is not None:
        return SubsetFn.from_json_obj(json.loads(Path(args.f).read_text()))
    U = None
    if args.subspace is not None:
        m = n.bit_length() - 1
        U = make_subspace3(m, args.subspace)
    elif n != 8:
        m = n.bit_length() - 1
        U = make_subspace3(m, (1, 2, 4))
    return corollary_f(tuple(args.tau), U)


def cmd_hwe(args, out: _Out) -> int:
    code, _ = _code_from(args)
    f = _harmonic_fn(args, code.n)
    out.poly(hwe(code, f))
    return 0


def cmd_bachoc(args, out: _Out) -> int:
    out.poly(bachoc_transform(_read_poly(args.poly), args.n, args.k, args.code_size))
    return 0


def cmd_design_check(args, out: _Out) -> int:
    if args.blocks is not None:
        if args.n is None:
            raise InputError("--blocks needs -n")
        blocks = parse_blockset(Path(args.blocks).read_text(), args.n)
        code = None
    else:
        code, _ = _code_from(args)
        if args.ell is None:
            raise InputError("a code source needs --ell")
        blocks = shell(code, args.ell)
    methods = ["direct", "delsarte", "jacobi"] if args.method == "all" else [args.method]
    for method in methods:
        if method == "direct":
            rep = is_t_design(blocks, args.t)
        elif method == "delsarte":
            rep = delsarte_test(blocks, args.t)
        else:
            if code is None:
                raise InputError("the Jacobi method needs a code, not a block file")
            mode = "sample" if args.sample else "all"
            rep = jacobi_design_test(code, args.ell, args.t, mode, count=args.sample or 0, seed=args.seed)
        obj = {"ell": args.ell, **rep.to_json_obj()}
        verdict = f"{args.t}-design, lambda={rep.lam}" if rep.is_design else f"not a {args.t}-design"
        out.obj(obj, f"{method}: {verdict}" + (f" ({rep.note})" if rep.note else "")
                + (f" witness={rep.witness}" if rep.witness else ""))
    return 0


def cmd_verify(args, out: _Out) -> int:
    checks = run(args.target, args.m, slow=args.slow, seed=args.seed, route=args.route)
    ok, failed = summarize(checks)
    for c in checks:
        status = "PASS" if c.ok else ("NOTE" if c.info else "FAIL")
        brief = {k: v for k, v in c.detail.items() if k not in ("checks",)}
        out.obj(c.to_json_obj(), f"{status} {c.name} {json.dumps(brief, default=str)}")
    summary = {"summary": True, "ok": ok, "checks": len(checks), "failed": len(failed),
               "notes": sum(1 for c in checks if c.info)}
    out.obj(summary, f"{'OK' if ok else 'FAILED'}: {len(checks)} checks, {len(failed)} failed, "
                     f"{summary['notes']} documented discrepancies")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rmdesigns", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None, help="enumeration workers (default: all cores)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("code", help="construct codes; print matrix, dimension, weight enumerator or a shell")
    c.add_argument("kind", choices=("rm1", "ehamming", "dual", "wenum", "shell"))
    c.add_argument("-m", type=int)
    c.add_argument("--file", type=Path)
    c.add_argument("--ell", type=int)
    c.add_argument("--wenum", action="store_true")
    c.add_argument("--dim", action="store_true")
    c.set_defaults(func=cmd_code)

    j = sub.add_parser("jacobi", help="Jacobi polynomial of a code for a reference set")
    _add_code_source(j)
    tg = j.add_mutually_exclusive_group()
    tg.add_argument("--t", type=_int_list, help="reference set, e.g. 0,1,2,4")
    tg.add_argument("--class", dest="cls", choices=("indep", "dep"), help="canonical 4-set of this class")
    j.add_argument("--closed", action="store_true", help="print the closed form instead")
    j.add_argument("--check", action="store_true", help="compare enumeration with the closed form")
    j.set_defaults(func=cmd_jacobi)

    hb = sub.add_parser("harm-basis", help="basis of harmonic functions of degree k on n points")
    hb.add_argument("-n", type=int, required=True)
    hb.add_argument("-k", type=int, required=True)
    hb.add_argument("--method", choices=("tableau", "elimination"), default="tableau")
    hb.set_defaults(func=cmd_harm_basis)

    h = sub.add_parser("hwe", help="harmonic weight enumerator")
    _add_code_source(h)
    h.add_argument("--f", type=Path, help="SubsetFn JSON file (default: the explicit degree-4 function)")
    h.add_argument("--tau", type=_int_list, default=[0, 1], help="transposition for the default function")
    h.add_argument("--subspace", type=_int_list, help="basis b1,b2,b3 of the 3-space carrying the function")
    h.set_defaults(func=cmd_hwe)

    b = sub.add_parser("bachoc", help="dual harmonic weight enumerator from a code's one")
    b.add_argument("--poly", required=True, help="polynomial (text or JSON, inline or a file path)")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-k", type=int, required=True)
    b.add_argument("--code-size", type=int, required=True)
    b.set_defaults(func=cmd_bachoc)

    d = sub.add_parser("design-check", help="test whether a shell or block file is a t-design")
    _add_code_source(d, required=False)
    d.add_argument("--blocks", type=Path)
    d.add_argument("-n", type=int)
    d.add_argument("--ell", type=int)
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--method", choices=("direct", "delsarte", "jacobi", "all"), default="all")
    d.add_argument("--sample", type=int, default=0, help="Jacobi route: sample this many t-sets")
    d.set_defaults(func=cmd_design_check)

    v = sub.add_parser("verify", help="run the closed-form and design checks")
    v.add_argument("target", choices=tuple(TARGETS) + ("all",))
    v.add_argument("--m", type=_m_range, default=None, help="m range, e.g. 3..8")
    v.add_argument("--route", choices=("jacobi", "harmonic", "both"), default="both")
    v.add_argument("--slow", action="store_true", help="include 2^26-word enumerations")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None:
        if args.threads < 1:
            parser.error("--threads must be positive")
        gf2code.THREADS = args.threads
    out = _Out(args.format)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
