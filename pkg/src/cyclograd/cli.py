"""Command-line front end.

Examples::

    cyclograd grad "x1.x2.x1"
    cyclograd bracket "x2; -x1" "x1.x1; 0"
    cyclograd moment x1.x2.x1.x2
    cyclograd basis --grade 2 --form roots --n 2
    cyclograd verify thm27 --m 3 --R 1 --Rp 2 --seed 7 --json
"""

from __future__ import annotations

import argparse
import json
import sys

from gmpy2 import mpq

from . import calculus as calc
from . import lie
from . import seminorms as sn
from . import suites
from .semicircular import fock, moments, structure
from .text import ParseError, parse_polynomial, parse_vector_field, print_polynomial, print_tensor


def _rational(text):
    try:
        q = mpq(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    return q


def _positive_rational(text):
    q = _rational(text)
    if q <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return q


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


class UsageError(Exception):
    pass


def _poly(text, n):
    return parse_polynomial(text, n)


def _field(text, n):
    v = parse_vector_field(text, n)
    return v


def _same_n(*objs):
    ns = {o.n for o in objs}
    if len(ns) > 1:
        raise UsageError("inputs use different generator counts; pass --n")
    return ns.pop()


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(suites._jsonable(payload), indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _field_text(v):
    return "; ".join(print_polynomial(c) for c in v)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_derive(args):
    P, K = _poly(args.poly, args.n), _field(args.field, args.n)
    n = max(P.n, K.n) if args.n is None else args.n
    P, K = _poly(args.poly, n), _field(args.field, n)
    out = calc.iterated_derivation(K, P, args.m)
    _emit(args, {"result": print_polynomial(out)}, [print_polynomial(out)])
    return 0


def cmd_grad(args):
    P = _poly(args.poly, args.n)
    g = calc.cyclic_gradient(P)
    comps = [print_polynomial(c) for c in g]
    _emit(args, {"gradient": comps}, [f"delta_{j} = {c}" for j, c in enumerate(comps, 1)])
    return 0


def cmd_ffd(args):
    P = _poly(args.poly, args.n)
    js = [args.j] if args.j else range(1, P.n + 1)
    out = {}
    for j in js:
        if j > P.n:
            raise UsageError(f"--j {j} exceeds the generator count {P.n}")
        out[j] = print_tensor(calc.free_difference_quotient(P, j))
    _emit(args, {"quotients": out}, [f"d_{j} = {t}" for j, t in out.items()])
    return 0


def cmd_csym(args):
    from .ncpoly import cyclic_symmetrize
    out = print_polynomial(cyclic_symmetrize(_poly(args.poly, args.n)))
    _emit(args, {"result": out}, [out])
    return 0


def cmd_bracket(args):
    a, b = _field(args.left, args.n), _field(args.right, args.n)
    _same_n(a, b)
    out = lie.vect_bracket(a, b)
    _emit(args, {"bracket": [print_polynomial(c) for c in out]}, [_field_text(out)])
    return 0


def cmd_theta(args):
    v = _field(args.field, args.n)
    t = calc.theta(v)
    dec = calc.is_cyclic_gradient(v)
    payload = {"theta": print_polynomial(t), "is_cyclic_gradient": dec.is_gradient,
               "witness": print_polynomial(dec.witness) if dec.is_gradient else None}
    lines = [f"theta = {print_polynomial(t)}", f"cyclic gradient: {'yes' if dec.is_gradient else 'no'}"]
    if dec.is_gradient:
        lines.append(f"witness = {print_polynomial(dec.witness)}")
    _emit(args, payload, lines)
    return 0


def cmd_seminorm(args):
    try:
        obj = _poly(args.expr, args.n)
    except ParseError:
        obj = _field(args.expr, args.n)
    v = sn.seminorm_value(obj, args.R, args.k)
    payload = {"R": args.R, "k": args.k, "value": v.value, "exact": v.exact}
    _emit(args, payload, [f"|.|_(R={args.R},k={args.k}) = {v.value}"
                          + ("" if v.exact else "  (upper bound)")])
    return 0


def cmd_bound(args):
    if args.which == "thm27":
        if len(args.inputs) != 2:
            raise UsageError("bound thm27 takes a field K and a polynomial P")
        K, P = _field(args.inputs[0], args.n), _poly(args.inputs[1], args.n)
        _same_n(K, P)
        rows = sn.thm27_checks(K, P, args.m, args.R, args.Rp)
        ok = all(r.holds for r in rows)
        payload = {"bound": "thm27", "R": args.R, "Rp": args.Rp, "pass": ok,
                   "rows": [{"m": r.m, "lhs": r.lhs, "bound": r.bound, "holds": r.holds} for r in rows]}
        lines = [f"m={r.m}: |D^m_K P|_R = {r.lhs} <= {r.bound}  {'ok' if r.holds else 'FAIL'}" for r in rows]
        _emit(args, payload, lines)
        return 0 if ok else 1
    # prop64: chain K_0, ..., K_m
    if len(args.inputs) < 1:
        raise UsageError("bound prop64 takes fields K_0 ... K_m")
    ks = [_field(t, args.n) for t in args.inputs]
    _same_n(*ks)
    m = len(ks) - 1
    M = max(sn.seminorm(k, args.Rp) for k in ks)
    lhs = sn.seminorm(lie.adjoint_chain(ks), args.R)
    bound = sn.prop64_bound(m, M, args.R, args.Rp)
    ok = lhs <= bound
    _emit(args, {"bound": "prop64", "m": m, "M": M, "lhs": lhs, "rhs": bound, "pass": ok},
          [f"m={m}, M={M}: |ad chain|_R = {lhs} <= {bound}  {'ok' if ok else 'FAIL'}"])
    return 0 if ok else 1


def cmd_moment(args):
    w = _poly(args.word, args.n)
    if len(w.terms) != 1 or next(iter(w.terms.values())) != 1:
        raise UsageError("moment expects a single monomial such as x1.x2.x1.x2")
    word = next(iter(w.terms))
    value = moments.semicircular_moment(word)
    _emit(args, {"word": list(word), "moment": value}, [str(value)])
    return 0


def _fock_field_text(t):
    return "; ".join(print_polynomial(fock.fock_to_poly(c)) for c in t)


def cmd_basis(args):
    n, k = args.n or 2, args.grade
    rows = []
    if args.trace:
        tau = moments.semicircular_trace(n) if args.trace == "semicircular" else calc.vacuum_trace(n)
        for v in lie.trace_preserving_basis(tau, k, n):
            rows.append({"field": [print_polynomial(c) for c in v]})
        lines = [f"dim = {len(rows)}"] + [_field_text(v) for v in lie.trace_preserving_basis(tau, k, n)]
    elif args.form == "lex":
        if k < 1:
            raise UsageError("--grade must be at least 1 for Fock bases")
        fam = structure.omega_basis(k, n)
        rows = [{"index": list(I), "field": _fock_field_text(G)} for I, G in fam]
        lines = [f"dim = {len(rows)}"] + [f"F{list(I)} - F{list(structure.right_rotate(I))}: {r['field']}"
                                          for (I, _), r in zip(fam, rows)]
    elif args.form == "roots":
        if k < 1:
            raise UsageError("--grade must be at least 1 for Fock bases")
        fam = structure.root_basis(k, n)
        rows = [{"index": list(e.I), "period": e.m, "root": f"exp(2 pi i {e.a}/{e.m})"} for e in fam]
        lines = [f"dim = {len(rows)}"] + [f"sum_j zeta^j F(rot^j {list(e.I)}), zeta = exp(2 pi i {e.a}/{e.m})"
                                          for e in fam]
    else:
        if k < 1:
            raise UsageError("--grade must be at least 1 for Fock bases")
        fam = structure.real_basis(k, n)
        rows = [{"index": list(I), "kind": kind, "field": _fock_field_text(t)} for I, kind, t in fam]
        lines = [f"dim = {len(rows)}"] + [f"{r['kind']} {r['index']}: {r['field']}" for r in rows]
    _emit(args, {"grade": k, "n": n, "trace": args.trace, "form": None if args.trace else args.form,
                 "basis": rows}, lines)
    return 0


def cmd_glcheck(args):
    n = args.n or 3
    derived = lie.check_gl_relations(n, "derived")
    printed = lie.check_gl_relations(n, "printed")
    center = lie.center_of_V0(n)
    payload = {"n": n, "derived_relation": derived, "opposite_sign_relation": printed,
               "center": [_field_text(v) for v in center]}
    lines = [f"[E_ab, E_cd] = d_da E_cb - d_bc E_ad: {'holds' if derived else 'FAILS'}",
             f"opposite sign convention: {'holds' if printed else 'fails'}",
             "center of V_0: " + ", ".join(f"({_field_text(v)})" for v in center)]
    _emit(args, payload, lines)
    return 0 if derived else 1


def cmd_verify(args):
    cfg = suites.Config(n=args.n, degree=args.degree, seed=args.seed, R=args.R, Rp=args.Rp,
                        m=args.m, samples=args.samples)
    report = suites.run_suite(args.suite, cfg, jobs=args.jobs)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for c in report["checks"]:
            mark = "PASS" if c["pass"] else "FAIL"
            print(f"[{mark}] {c['name']}  ({c['anchor']})")
            if not c["pass"]:
                print(f"       {json.dumps(c['detail'], sort_keys=True)[:2000]}")
        total = len(report["checks"])
        passed = sum(c["pass"] for c in report["checks"])
        print(f"{passed}/{total} checks passed")
    return 0 if suites.all_passed(report) else 1


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive_int, help="number of generators")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="cyclograd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("derive", parents=[common], help="D_K^m P")
    s.add_argument("poly")
    s.add_argument("field", help="components separated by ';'")
    s.add_argument("--m", type=_nonneg_int, default=1)
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("grad", parents=[common], help="cyclic gradient")
    s.add_argument("poly")
    s.set_defaults(func=cmd_grad)

    s = sub.add_parser("ffd", parents=[common], help="free difference quotients")
    s.add_argument("poly")
    s.add_argument("--j", type=_positive_int)
    s.set_defaults(func=cmd_ffd)

    s = sub.add_parser("csym", parents=[common], help="cyclic symmetrization")
    s.add_argument("poly")
    s.set_defaults(func=cmd_csym)

    s = sub.add_parser("bracket", parents=[common], help="Lie bracket of vector fields")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("theta", parents=[common], help="theta of a field and the gradient test")
    s.add_argument("field")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("seminorm", parents=[common], help="|p|_{R,k}")
    s.add_argument("expr", help="a polynomial or a ';'-separated field")
    s.add_argument("--R", type=_positive_rational, default=mpq(1))
    s.add_argument("--k", type=_nonneg_int, default=0)
    s.set_defaults(func=cmd_seminorm)

    s = sub.add_parser("bound", parents=[common], help="iterated-derivation or bracket-chain bounds")
    s.add_argument("which", choices=["thm27", "prop64"])
    s.add_argument("inputs", nargs="*")
    s.add_argument("--R", type=_positive_rational, default=mpq(1))
    s.add_argument("--Rp", type=_positive_rational, default=mpq(2))
    s.add_argument("--m", type=_nonneg_int, default=3)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("moment", parents=[common], help="semicircular moment of a word")
    s.add_argument("word")
    s.set_defaults(func=cmd_moment)

    s = sub.add_parser("basis", parents=[common], help="bases of trace-preserving fields")
    s.add_argument("--grade", type=int, required=True)
    s.add_argument("--trace", choices=["semicircular", "vacuum"])
    s.add_argument("--form", choices=["lex", "roots", "real"], default="lex")
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("glcheck", parents=[common], help="gl(n) relations among linear fields")
    s.set_defaults(func=cmd_glcheck)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    s.add_argument("--degree", type=_nonneg_int)
    s.add_argument("--R", type=_positive_rational, default=mpq(1))
    s.add_argument("--Rp", type=_positive_rational, default=mpq(2))
    s.add_argument("--m", type=_nonneg_int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=_positive_int, help="random instances per check")
    s.add_argument("--jobs", type=_positive_int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "R", None) is not None and getattr(args, "Rp", None) is not None and args.Rp <= args.R:
        parser.error("--Rp must exceed --R")
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, IndexError) as exc:
        print(f"cyclograd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
