"""Command line front end: loopcalc <command> [options].

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .algebra import Element, enumerate_basis, lower_indices, parse_space, sphere
from .dlops import FuelExhausted, OutOfModel, normal_form
from .hopf import coproduct
from .maps import LeadingTermOnly, j2_project, stabilize, suspend
from .parse import ContextError, ParseError, element_json, format_element, parse_expr
from .replication import CaseResult, UnknownCase, run_replication
from .sieve import ResourceLimit, sieve_report
from .steenrod import sq_down

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=None)


def _need(args, name: str):
    v = getattr(args, name)
    if v is None or v == []:
        raise UsageError(f"{args.command} needs --{name.replace('_', '-')}")
    return v


def _space(args):
    return parse_space(_need(args, "space"))


def _one_expr(args, space) -> Element:
    exprs = _need(args, "expr")
    if len(exprs) != 1:
        raise UsageError(f"{args.command} takes exactly one --expr")
    return parse_expr(exprs[0], space)


def _element_out(e: Element, args, space, **extra) -> str:
    if args.format == "json":
        doc = element_json(e, space)
        doc.update(extra)
        return _dumps(doc)
    lines = [format_element(e)]
    lines.extend(f"{k}: {v}" for k, v in extra.items())
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------


def cmd_basis(args) -> tuple[str, int]:
    space = _space(args)
    d = _need(args, "dim")
    basis = enumerate_basis(space, d)
    if args.format == "json":
        items = [element_json(Element(frozenset([m]), space))["monomials"][0] for m in basis]
        return _dumps({"space": str(space), "dim": d, "size": len(basis), "basis": items}), EXIT_OK
    return "\n".join(str(m) for m in basis), EXIT_OK


def cmd_sq(args) -> tuple[str, int]:
    space = _space(args)
    e = _one_expr(args, space)
    r = _need(args, "r")
    return _element_out(sq_down(r, e), args, space), EXIT_OK


def cmd_mul(args) -> tuple[str, int]:
    space = _space(args)
    exprs = _need(args, "expr")
    out = Element.one(space)
    for text in exprs:
        out = out * parse_expr(text, space)
    return _element_out(out, args, space), EXIT_OK


def cmd_coprod(args) -> tuple[str, int]:
    space = _space(args)
    t = coproduct(_one_expr(args, space))
    if args.format == "json":
        pairs = sorted((str(a), str(b)) for a, b in t.terms)
        return _dumps({"space": str(space), "terms": [list(p) for p in pairs], "string": str(t)}), EXIT_OK
    return str(t), EXIT_OK


def cmd_sieve(args) -> tuple[str, int]:
    space = _space(args)
    max_dim = _need(args, "max_dim")
    min_dim = args.dim if args.dim is not None else 1
    rep = sieve_report(space, max_dim, min_dim=min_dim)
    if args.format == "json":
        doc = {
            "space": str(space),
            "min_dim": min_dim,
            "max_dim": max_dim,
            "dims": [
                {
                    "dim": r.dim,
                    "basis_size": r.basis_size,
                    "candidates": [str(c) for c in r.candidates],
                    "square_candidates": [str(c) for c in r.square_candidates],
                }
                for r in rep.dims
            ],
        }
        if rep.criterion_agree or rep.criterion_disagree:
            doc["criterion"] = {"agree": rep.criterion_agree, "disagree": [list(map(str, w)) for w in rep.criterion_disagree]}
        return _dumps(doc), EXIT_OK
    lines = [f"homology sieve for {space}, dimensions {min_dim}..{max_dim}"]
    for r in rep.dims:
        if not r.candidates:
            continue
        lines.append(f"dim {r.dim} (basis {r.basis_size}):")
        lines.extend(f"  candidate {c}" for c in r.candidates)
        lines.extend(f"  square candidate {c}" for c in r.square_candidates)
    squares = rep.all_square_candidates()
    lines.append("square candidates: " + (", ".join(str(c) for c in squares) if squares else "none"))
    if rep.criterion_agree or rep.criterion_disagree:
        lines.append(f"criterion agrees on {rep.criterion_agree} classes, disagrees on {len(rep.criterion_disagree)}")
    return "\n".join(lines), EXIT_OK


def _lower_form(e: Element) -> str:
    parts = []
    for m in e.monomials():
        factors = []
        for g, k in m.factors:
            if g.ops:
                J = lower_indices(g.ops, g.gen.dim)
                s = f"q[{','.join(map(str, J))}]{g.gen}"
            else:
                s = str(g.gen)
            factors.append(s if k == 1 else f"({s})^{k}")
        parts.append(" ".join(factors) or "1")
    return " + ".join(parts) or "0"


def cmd_convert(args) -> tuple[str, int]:
    space = _space(args)
    e = _one_expr(args, space)
    lower = _lower_form(e)
    if args.format == "json":
        doc = element_json(e, space)
        doc["lower"] = lower
        return _dumps(doc), EXIT_OK
    return f"upper: {e}\nlower: {lower}", EXIT_OK


def cmd_suspend(args) -> tuple[str, int]:
    space = _space(args)
    out, target = suspend(_one_expr(args, space), space)
    return _element_out(out, args, target), EXIT_OK


def cmd_stabilize(args) -> tuple[str, int]:
    space = _space(args)
    out = stabilize(_one_expr(args, space), space)
    return _element_out(out, args, out.space), EXIT_OK


def cmd_j2(args) -> tuple[str, int]:
    space = _space(args)
    img = j2_project(_one_expr(args, space), space, mode=args.mode)
    return _element_out(img.element, args, img.element.space, exact=img.exact), EXIT_OK


def _confluence_sweep(seed: int, count: int = 200) -> CaseResult:
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        n = rng.randint(1, 6)
        seq = tuple(rng.randint(0, 24) for _ in range(rng.randint(1, 4)))
        a = normal_form(seq, sphere(n), "innermost")
        b = normal_form(seq, sphere(n), "outermost")
        if a != b:
            failures.append({"check": f"Q{list(seq)}x{n}", "got": str(Element(a)), "expected": str(Element(b))})
    return CaseResult(f"adem-confluence-seed-{seed}", "innermost and outermost rewriting agree", "derived", not failures, count, failures)


def cmd_verify(args) -> tuple[str, int]:
    results = run_replication(args.case or None)
    if args.seed is not None:
        results.append(_confluence_sweep(args.seed))
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = _dumps({"passed": ok, "cases": [r.as_dict() for r in results]})
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.case_id} ({r.n_checks} checks)")
            for f in r.failures:
                lines.append(f"  {f['check']}: got {f['got']}, expected {f['expected']}")
            if r.note:
                lines.append(f"  note: {r.note}")
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} cases passed")
        text = "\n".join(lines)
    return text, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "basis": cmd_basis,
    "sq": cmd_sq,
    "mul": cmd_mul,
    "coprod": cmd_coprod,
    "sieve": cmd_sieve,
    "convert": cmd_convert,
    "suspend": cmd_suspend,
    "stabilize": cmd_stabilize,
    "j2": cmd_j2,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="QS<n>, Q0S0, L<a>S<b> or QP<m>")
    common.add_argument("--dim", type=int, help="dimension (sieve: first dimension)")
    common.add_argument("--expr", action="append", help="expression; repeat for mul")
    common.add_argument("--r", type=int, help="operation index for sq")
    common.add_argument("--max-dim", type=int, dest="max_dim")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, help="seed for the property sweep in verify")
    common.add_argument("--out", help="also write the output to this directory")
    common.add_argument("--case", action="append", help="replication case id (repeatable)")
    common.add_argument("--mode", choices=["leading-term", "exact"], default="leading-term", help="j2 mode")

    p = argparse.ArgumentParser(prog="loopcalc", description="Mod 2 homology of iterated loop spaces.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def _emit(text: str, stream) -> None:
    data = (text.rstrip("\n") + "\n").encode("utf-8")
    stream.buffer.write(data) if hasattr(stream, "buffer") else stream.write(data.decode("utf-8"))
    stream.flush()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = COMMANDS[args.command](args)
    except UnknownCase as exc:
        _emit(f"error: unknown case id: {exc.args[0]}", sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParseError, ContextError, OutOfModel, LeadingTermOnly, ResourceLimit, FuelExhausted, ValueError) as exc:
        _emit(f"error: {exc}", sys.stderr)
        return EXIT_USAGE
    _emit(text, sys.stdout)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        ext = "json" if args.format == "json" else "txt"
        (out / f"{args.command}.{ext}").write_bytes((text.rstrip("\n") + "\n").encode("utf-8"))
    return code


if __name__ == "__main__":
    sys.exit(main())
