"""Command-line entry point: ``hecke-cocenter <subcommand> ...``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on usage or
bound errors.  Output depends only on the arguments (and ``--seed``).
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import json
import sys
from math import comb

from gmpy2 import mpq

from . import cocenterlab as cl
from .acceptance import CRITERIA, LARGE, run_criterion
from .exactnum import U, V, parse_rational, scalar_to_str
from .heckeclifford import FuelExhausted, HeckeClifford, PBWElement, eps_indices, symbolic_algebra
from .linalg import DimensionBoundExceeded
from .morita import DEFAULT_SEED, MoritaAnsatzError, homomorphism_fuzz, morita_map, transport_independence, verify_iso
from .spinhecke import SpinHecke, SpinPBWElement, symbolic_spin_algebra
from .weylcomb import ConventionFlag, SignedPerm, WeylError, WeylType, distinguished_classes, group, J_of_class

LARGE_SLICE = 20_000


class UsageError(ValueError):
    pass


# ----------------------------------------------------------------------
# expressions
# ----------------------------------------------------------------------


def parse_expression(text: str, algebra):
    """Evaluate a generator expression such as ``2*s1*x1^2 - u*c1*c2`` in ``algebra``.

    Names are x<i>, c<i>, s<i> (Hecke-Clifford) or b<i>, t<i> (spin), plus u and v
    for the parameters.  ``^`` and ``**`` are powers; ``/`` divides by a number.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc.msg}") from None
    kinds = {k for k, _ in algebra.generators()}

    def param(name):
        if algebra.kind == "poly":
            return U if name == "u" else V
        if name == "u":
            return algebra.u
        if not isinstance(algebra, HeckeClifford):
            raise UsageError("the spin algebra has no parameter v")
        try:
            return parse_rational(algebra.params[1])
        except ValueError:
            raise UsageError("cannot read the specialized v") from None

    def lift(x):
        return x if isinstance(x, PBWElement) else algebra.scalar(x)

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return mpq(node.value)
        if isinstance(node, ast.Name):
            name = node.id
            if name in ("u", "v"):
                return lift(param(name))
            kind, idx = name[:1], name[1:]
            if kind in kinds and idx.isdigit():
                try:
                    return algebra.generator(kind, int(idx))
                except (WeylError, ValueError) as exc:
                    raise UsageError(str(exc)) from None
            raise UsageError(f"unknown name {name!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow):
                if isinstance(right, PBWElement) or right.denominator != 1 or right < 0:
                    raise UsageError("exponents must be nonnegative integers")
                return left ** int(right)
            if isinstance(node.op, ast.Div):
                if isinstance(right, PBWElement) or not right:
                    raise UsageError("can only divide by a nonzero number")
                return left / right if not isinstance(left, PBWElement) else left * (1 / right)
            if isinstance(node.op, ast.Add):
                return lift(left) + lift(right)
            if isinstance(node.op, ast.Sub):
                return lift(left) - lift(right)
            if isinstance(node.op, ast.Mult):
                if not isinstance(left, PBWElement) and not isinstance(right, PBWElement):
                    return left * right
                return lift(left) * lift(right)
        raise UsageError(f"unsupported syntax in {text!r}")

    return lift(ev(tree.body))


def format_words(a, pretty: bool = True) -> str:
    """Write the Weyl part of each monomial as its reduced word, highest degree first."""
    A = a.algebra
    spin = isinstance(a, SpinPBWElement)
    letter, wl = ("b", "t") if spin else ("x", "s")
    dot = "·" if pretty else "*"
    items = sorted(a.terms.items(), key=lambda kv: (-sum(kv[0][0]), kv[0]))
    if not items:
        return "0"
    parts = []
    for key, c in items:
        alpha, w = (key[0], key[1]) if spin else (key[0], key[2])
        mono = []
        for i, e in enumerate(alpha, start=1):
            if e:
                mono.append(f"{letter}{i}" + (f"^{e}" if e > 1 else ""))
        if not spin and key[1]:
            mono += [f"c{i}" for i in eps_indices(key[1])]
        mono += [f"{wl}{i}" for i in A.G.reduced_word(w)]
        cs = scalar_to_str(c, pretty)
        m = dot.join(mono)
        if not m:
            parts.append(cs)
        elif cs == "1":
            parts.append(m)
        elif cs == "-1":
            parts.append("-" + m)
        elif " " in cs:
            parts.append(f"({cs}){dot}{m}")
        else:
            parts.append(f"{cs}{dot}{m}")
    return " + ".join(parts).replace("+ -", "- ")


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------


def _type_name(report) -> str:
    try:
        return str(WeylType(report.family, report.n))
    except WeylError:
        return f"{report.family}{report.n}"


def _empty_report_json(meta: dict) -> dict:
    out = {"report": "empty", "degrees": []}
    out.update(meta)
    return out


def emit_report(report, fmt: str = "json") -> str:
    """Serialize a CocenterReport (or None for an empty report) as json, csv, latex or text."""
    if report is None:
        report = cl.CocenterReport()
    data = report.to_json() if report.degrees else _empty_report_json({
        "algebra": report.algebra, "type": report.family, "n": report.n, "mode": report.mode,
    })
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    rows = [(d.degree, d.cocenter_dim, d.candidates, d.verdict, d.independence or "") for d in report.degrees]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "dim", "candidates", "verdict", "independence"])
        w.writerows(["" if x is None else x for x in r] for r in rows)
        return buf.getvalue()
    title = f"{report.algebra} {_type_name(report)} {report.mode}".strip()
    if fmt == "latex":
        lines = [
            "% " + title + (f", convention {report.convention}" if report.convention else ""),
            "\\begin{tabular}{rrrl}",
            "\\hline",
            "degree & dim & candidates & verdict \\\\",
            "\\hline",
        ]
        for deg, dim, cands, verdict, _ in rows:
            lines.append(f"{deg} & {'--' if dim is None else dim} & {cands} & \\texttt{{{verdict}}} \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = [title, f"verdict: {report.verdict}"]
        if report.convention:
            lines.append(f"convention: {report.convention}")
        for deg, dim, cands, verdict, ind in rows:
            extra = f" independence={ind}" if ind else ""
            lines.append(f"  degree {deg}: dim={'-' if dim is None else dim} candidates={cands} {verdict}{extra}")
        for d in report.degrees:
            if d.witness:
                lines.append(f"  witness (degree {d.degree}): {json.dumps(d.witness, ensure_ascii=False)}")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def _wtype(args) -> WeylType:
    try:
        return WeylType(args.type, args.n)
    except WeylError as exc:
        raise UsageError(str(exc)) from None


def _conv(args, wtype):
    if getattr(args, "convention", "auto") in (None, "auto"):
        return None
    return ConventionFlag(args.convention)


def _scalar_arg(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def cmd_classes(args, out) -> int:
    t = _wtype(args)
    labels = distinguished_classes(t, _conv(args, t))
    if args.detail:
        rows = []
        for lab in labels:
            J, wc = J_of_class(t, lab)
            rows.append({"label": str(lab), "J": sorted(J.indices), "w_C": list(wc.window)})
        out.write(_json(rows))
    else:
        out.write(_json([str(l) for l in labels]))
    return 0


def _hc_algebra(args, t) -> HeckeClifford:
    if args.u0 is None and args.v0 is None:
        return symbolic_algebra(t)
    return HeckeClifford(t, _scalar_arg(args.u0 or "0"), _scalar_arg(args.v0 or "0"))


def cmd_normalize(args, out) -> int:
    t = _wtype(args)
    A = _hc_algebra(args, t)
    a = parse_expression(args.expr, A)
    out.write(_json(a.to_json()) if args.format == "json" else format_words(a, not args.ascii) + "\n")
    return 0


def cmd_spin_normalize(args, out) -> int:
    t = _wtype(args)
    S = symbolic_spin_algebra(t) if args.u0 is None else SpinHecke(t, _scalar_arg(args.u0))
    a = parse_expression(args.expr, S)
    out.write(_json(a.to_json()) if args.format == "json" else format_words(a, not args.ascii) + "\n")
    return 0


def _ints(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def cmd_reduce(args, out) -> int:
    t = _wtype(args)
    if args.window:
        try:
            w = SignedPerm(t, _ints(args.window))
        except WeylError as exc:
            raise UsageError(str(exc)) from None
        lab = cl.class_reduce(w, _conv(args, t))
        res = {"window": list(w.window), "class": str(group(t).cycle_type(w.window)), "reduces_to": None if lab is None else str(lab)}
        sp = cl.spin_class_reduce(w, _conv(args, t))
        res["spin"] = None if sp is None else {"sign": sp[0], "label": str(sp[1])}
    elif args.gamma:
        gamma = _ints(args.gamma)
        if sum(gamma) != t.n or any(g <= 0 for g in gamma):
            raise UsageError(f"{gamma} is not a composition of {t.n}")
        I = _ints(args.subset or "")
        neg = None
        if args.negative:
            neg = tuple(bool(int(x)) for x in _ints(args.negative))
        try:
            val = cl.clifford_reduce(gamma, I, t, neg)
        except (WeylError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        res = {"gamma": list(gamma), "subset": list(I), "value": val}
    else:
        raise UsageError("reduce needs --window or --gamma")
    out.write(_json(res))
    return 0


def estimate_slice(t: WeylType, max_deg: int, mode: str, slack: int) -> int:
    top = max_deg + (slack if mode == "filtered" else 0)
    order = group(t).order()
    cliff = 1 << t.n if mode != "spin" else 1
    return sum(order * cliff * comb(t.n + d - 1, d) for d in range(top + 1))


def _guard_large(args, t, mode, err) -> None:
    est = estimate_slice(t, args.max_deg, mode, getattr(args, "slack", 0) or 0)
    if t.family == "D" or est > LARGE_SLICE:
        err.write(f"cost estimate: {t}, {mode}, about {est} PBW monomials up to degree {args.max_deg}\n")
        if not args.allow_large:
            raise UsageError("this check is large; pass --allow-large to run it")


def cmd_verify(args, out, err) -> int:
    t = _wtype(args)
    if args.max_deg < 0:
        raise UsageError("--max-deg must be nonnegative")
    _guard_large(args, t, args.mode, err)
    conv = _conv(args, t)
    if args.mode == "graded":
        rep = cl.verify_graded_basis(t, args.max_deg, conv, args.bound)
    elif args.mode == "spin":
        rep = cl.verify_spin_graded_basis(t, args.max_deg, conv, args.bound)
    elif args.mode == "filtered":
        rep = cl.verify_filtered(t, args.max_deg, args.slack, _scalar_arg(args.u0), _scalar_arg(args.v0), conv, args.bound)
    else:
        rep = transport_independence(t, args.max_deg, conv)
    out.write(emit_report(rep, args.format))
    return 0 if rep.ok else 1


def cmd_resolve(args, out, err) -> int:
    t = _wtype(args)
    _guard_large(args, t, "graded", err)
    res = cl.resolve_convention(t, args.max_deg)
    out.write(_json(res))
    return 0 if len(res["passing"]) == 1 else 1


def cmd_morita(args, out, err) -> int:
    t = _wtype(args)
    _guard_large(args, t, "graded", err)
    M = morita_map(t)
    bad = M.failing_relations()
    iso = verify_iso(t, args.max_deg)
    fz = homomorphism_fuzz(t, args.pairs, args.seed)
    tr = transport_independence(t, args.max_deg)
    res = {
        "generator_images": M.images.to_json(),
        "relations_failing": bad,
        "iso": iso.to_json(),
        "homomorphism_fuzz": {"pairs": args.pairs, "seed": args.seed, "failures": len(fz)},
        "transport": tr.to_json(),
    }
    out.write(_json(res))
    return 0 if not bad and iso.ok and not fz and tr.ok else 1


def cmd_acceptance(args, out, err) -> int:
    wanted = args.criterion or sorted(CRITERIA)
    ok = True
    for k in wanted:
        if k not in CRITERIA:
            raise UsageError(f"no criterion {k}")
        if k in LARGE and not args.allow_large:
            out.write(f"criterion {k}: SKIP - {CRITERIA[k][0]}: needs --allow-large\n")
            continue
        if k in LARGE:
            err.write(f"cost estimate: D_4, graded, about {estimate_slice(WeylType('D', 4), 0, 'graded', 0)} PBW monomials up to degree 0\n")
        r = run_criterion(k, args.seed)
        ok &= r.ok
        out.write(r.line() + "\n")
    return 0 if ok else 1


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------


def _add_type(p):
    p.add_argument("--type", required=True, choices=["A", "B", "D"])
    p.add_argument("--n", required=True, type=int, help="number of letters (A_{n-1}, B_n, D_n)")


def _add_conv(p):
    p.add_argument("--convention", default="auto", choices=["auto"] + [c.value for c in ConventionFlag])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hecke-cocenter", description="Cocenters of degenerate affine Hecke-Clifford and spin Hecke algebras.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("classes", help="distinguished conjugacy classes")
    _add_type(p)
    _add_conv(p)
    p.add_argument("--detail", action="store_true", help="include J_C and w_C")

    for name, hlp in (("normalize", "PBW normal form in aHC_X"), ("spin-normalize", "PBW normal form in saH_X")):
        p = sub.add_parser(name, help=hlp)
        _add_type(p)
        p.add_argument("--expr", required=True)
        p.add_argument("--u0", default=None, help="specialize u (default symbolic)")
        if name == "normalize":
            p.add_argument("--v0", default=None, help="specialize v (default symbolic)")
        p.add_argument("--format", default="text", choices=["text", "json"])
        p.add_argument("--ascii", action="store_true", help="plain ASCII coefficients")

    p = sub.add_parser("reduce", help="Clifford or class reduction")
    _add_type(p)
    _add_conv(p)
    p.add_argument("--window", help="signed permutation, e.g. --window=-2,1")
    p.add_argument("--gamma", help="composition, e.g. 2,1")
    p.add_argument("--subset", help="Clifford subset I, e.g. 1,2")
    p.add_argument("--negative", help="per-block sign flags, e.g. 1,0 (types B, D)")

    p = sub.add_parser("verify", help="exact cocenter verification")
    _add_type(p)
    _add_conv(p)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--mode", default="graded", choices=["graded", "filtered", "spin", "transport"])
    p.add_argument("--slack", type=int, default=2)
    p.add_argument("--u0", default="7/3")
    p.add_argument("--v0", default="5/2")
    p.add_argument("--bound", type=int, default=cl.DEFAULT_SLICE_BOUND)
    p.add_argument("--format", default="json", choices=["json", "csv", "latex", "text"])
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("resolve-convention", help="run the graded check under both conventions")
    _add_type(p)
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("morita-check", help="solve Phi and check it")
    _add_type(p)
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("acceptance", help="run acceptance criteria")
    p.add_argument("--criterion", type=int, action="append")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    p.add_argument("--allow-large", action="store_true")
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cmd == "classes":
            return cmd_classes(args, out)
        if args.cmd == "normalize":
            return cmd_normalize(args, out)
        if args.cmd == "spin-normalize":
            return cmd_spin_normalize(args, out)
        if args.cmd == "reduce":
            return cmd_reduce(args, out)
        if args.cmd == "verify":
            return cmd_verify(args, out, err)
        if args.cmd == "resolve-convention":
            return cmd_resolve(args, out, err)
        if args.cmd == "morita-check":
            return cmd_morita(args, out, err)
        return cmd_acceptance(args, out, err)
    except (UsageError, WeylError, DimensionBoundExceeded, FuelExhausted) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except MoritaAnsatzError as exc:
        err.write(f"ansatz failure: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
