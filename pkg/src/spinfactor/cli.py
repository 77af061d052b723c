"""Command-line front end.

Exit codes: 0 success, 1 a verification failed (the report is still
printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import io
import json
import re
import sys
from contextlib import redirect_stderr
from fractions import Fraction
from typing import Sequence

from . import affine, charalg, embed, spin, suite
from .charalg import FormalCharacter
from .errors import SpinfactorError
from .report import Report, compare
from .rootsys import (
    GeneralizedCartanMatrix,
    RootSystem,
    build_root_system,
    format_weight,
    root_system,
)

IDENTITIES = ("denominator", "weyl", "theorem1", "theorem2", "prop3", "prop4", "prop678",
              "coprimary", "dual-facts", "clifford", "all")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_weight(text: str) -> tuple:
    try:
        vals = [Fraction(x.strip()) for x in text.split(",") if x.strip() != ""]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--weight: cannot parse {text!r}") from None
    return tuple(int(v) if v.denominator == 1 else v for v in vals)


def _root_system(args) -> RootSystem:
    if getattr(args, "cartan", None):
        try:
            entries = json.loads(args.cartan)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--cartan: invalid JSON ({exc.msg})") from None
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise UsageError("--cartan: expected a 2-D integer array")
        try:
            return build_root_system(GeneralizedCartanMatrix(entries))
        except SpinfactorError as exc:
            raise UsageError(f"--cartan: {exc}") from None
    if getattr(args, "type", None):
        try:
            return root_system(args.type)
        except SpinfactorError as exc:
            raise UsageError(f"--type: {exc}") from None
    raise UsageError("one of --type or --cartan is required")


def _weights(args, rs: RootSystem, default=None) -> list[tuple]:
    raw = args.weight or []
    if not raw:
        if default is None:
            raise UsageError("--weight is required")
        return [default]
    try:
        weights = [rs.check_weight(_parse_weight(w)) for w in raw]
    except SpinfactorError as exc:
        raise UsageError(f"--weight: {exc}") from None
    for w in weights:
        if not rs.is_dominant(w):
            raise UsageError(f"--weight: {format_weight(w)} is not dominant for {rs.name}")
    return weights


def _single_weight(args, rs: RootSystem, default=None) -> tuple:
    ws = _weights(args, rs, default)
    if len(ws) != 1:
        raise UsageError("--weight given more than once")
    return ws[0]


# ---------------------------------------------------------------------------
# text rendering

def _char_text(chi: FormalCharacter) -> str:
    rows = [(format_weight(w), str(c)) for w, c in chi.sorted_terms()]
    width = max((len(r[0]) for r in rows), default=0)
    lines = [f"{chi.rs.name}  dim {chi.dim()}  terms {len(chi)}"]
    lines += [f"  {w.ljust(width)}  {c.rjust(4)}" for w, c in rows]
    return "\n".join(lines)


def _decomp_obj(rs: RootSystem, parts) -> dict:
    return {"rs": rs.name,
            "constituents": [{"highest": list(w), "multiplicity": m,
                              "dim": charalg.weyl_dimension(rs, w)} for w, m in parts]}


def _decomp_text(rs: RootSystem, parts) -> str:
    lines = [f"{rs.name}  constituents {sum(m for _, m in parts)}"]
    for w, m in parts:
        lines.append(f"  {m} x V{format_weight(w)}  dim {charalg.weyl_dimension(rs, w)}")
    return "\n".join(lines)


def _affine_text(ch: affine.AffineCharacter) -> str:
    lines = [f"{ch.rs.name}  level {ch.level}  K {ch.K}"]
    for m in sorted(ch.slices, reverse=True):
        sl = ch.slices[m]
        parts = charalg.decompose(ch.rs, sl)
        body = " + ".join(f"{c}*V{format_weight(w)}" for w, c in parts)
        lines.append(f"  delta {m:+d}  dim {sl.dim()}  {body}")
    return "\n".join(lines)


def _report_text(rep: Report) -> str:
    lines = [f"{'PASS' if rep.passed else 'FAIL'}  {rep.identity}"]
    if rep.first_diff:
        lines.append(f"  first difference: {_dumps(rep.first_diff)}")
    for f in rep.factors:
        lines.append(f"  factor {f['poly']}  symmetric unimodal: {f['symmetric_unimodal']}")
    checks = rep.details.get("checks")
    if checks:
        for c in checks:
            lines.append(f"  {'ok  ' if c['pass'] else 'FAIL'}  {c['check']}")
    else:
        for k, v in rep.details.items():
            lines.append(f"  {k}: {v if isinstance(v, (str, int, bool)) else _dumps(v)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verbs

def cmd_roots(args, out) -> int:
    rs = _root_system(args)
    obj = {
        "rs": rs.name, "rank": rs.rank, "cartan": [list(r) for r in rs.cartan.entries],
        "positive_roots": [list(r) for r in rs.positive_roots],
        "short_positive_roots": [list(r) for r in rs.short_positive_roots],
        "long_positive_roots": [list(r) for r in rs.long_positive_roots],
        "rho": list(rs.rho), "rho_s": list(rs.rho_s),
        "theta": list(rs.theta), "theta_s": list(rs.theta_s),
        "marks": list(rs.marks), "comarks": list(rs.comarks),
        "coxeter_number": rs.coxeter_number, "dual_coxeter_number": rs.dual_coxeter_number,
        "dimension": rs.dimension,
    }
    if args.json:
        out.write(_dumps(obj) + "\n")
    else:
        for k, v in obj.items():
            out.write(f"{k:22s} {v if not isinstance(v, list) else _dumps(v)}\n")
    return 0


def cmd_char(args, out) -> int:
    rs = _root_system(args)
    lam = _single_weight(args, rs)
    if args.dim:
        d = charalg.weyl_dimension(rs, lam)
        out.write((_dumps({"rs": rs.name, "highest": list(lam), "dim": d}) if args.json
                   else str(d)) + "\n")
        return 0
    chi = charalg.irreducible_character(rs, lam)
    out.write((chi.to_json() if args.json else _char_text(chi)) + "\n")
    return 0


def _input_character(args, rs: RootSystem) -> FormalCharacter:
    if args.input:
        try:
            with open(args.input) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"--input: {exc}") from None
        return charalg.character_from_json(rs, obj)
    chars = [charalg.irreducible_character(rs, w) for w in _weights(args, rs)]
    return charalg.product(chars, rs)


def cmd_decompose(args, out) -> int:
    rs = _root_system(args)
    chi = _input_character(args, rs)
    parts = charalg.decompose(rs, chi)
    out.write((_dumps(_decomp_obj(rs, parts)) if args.json else _decomp_text(rs, parts)) + "\n")
    return 0


def _sum_of_irreducibles(args, rs: RootSystem) -> FormalCharacter:
    return spin.direct_sum([charalg.irreducible_character(rs, w)
                            for w in _weights(args, rs, rs.theta)])


def cmd_spin0(args, out) -> int:
    rs = _root_system(args)
    chi = _sum_of_irreducibles(args, rs)
    if args.K is not None:
        affine._rank_gate(rs, args.allow_large)
        ch = affine.affine_spin0_character(rs, chi, args.K)
        out.write((_dumps(ch.to_json_obj()) if args.json else _affine_text(ch)) + "\n")
        return 0
    res = spin.spin0_character(rs, chi)
    parts = charalg.decompose(rs, res)
    if args.json:
        obj = res.to_json_obj()
        obj["decomposition"] = _decomp_obj(rs, parts)["constituents"]
        out.write(_dumps(obj) + "\n")
    else:
        out.write(_char_text(res) + "\n" + _decomp_text(rs, parts) + "\n")
    return 0


def _embedding(args):
    if args.folding and args.embedding:
        raise UsageError("--folding and --embedding are mutually exclusive")
    try:
        if args.folding:
            return embed.folding_embedding(args.folding)
        if args.embedding:
            return embed.embedding_by_name(args.embedding)
    except SpinfactorError as exc:
        flag = "--folding" if args.folding else "--embedding"
        raise UsageError(f"{flag}: {exc}") from None
    raise UsageError("one of --folding or --embedding is required")


def cmd_restrict(args, out) -> int:
    spec, _ = _embedding(args)
    lam = _single_weight(args, spec.source, spec.source.theta)
    chi = embed.restrict_character(spec, charalg.irreducible_character(spec.source, lam))
    parts = charalg.decompose(spec.target, chi)
    if args.json:
        obj = chi.to_json_obj()
        obj["embedding"] = spec.name
        obj["decomposition"] = _decomp_obj(spec.target, parts)["constituents"]
        out.write(_dumps(obj) + "\n")
    else:
        out.write(f"{spec.name}: V{format_weight(lam)} of {spec.source.name}\n"
                  + _decomp_text(spec.target, parts) + "\n")
    return 0


def _verify(args) -> Report | list[Report]:
    ident = args.identity
    if ident == "all":
        return suite.run_all(args.max_rank, args.K if args.K is not None else 2,
                             threads=args.threads)
    if ident == "denominator":
        rs = _root_system(args)
        if args.K is None:
            ok = charalg.denominator_check(rs)
            return Report(f"denominator:{rs.name}", ok)
        ok = affine.affine_denominator_check(rs, args.K, args.allow_large)
        return Report(f"affine_denominator:{rs.name}:K={args.K}", ok)
    if ident == "weyl":
        rs = _root_system(args)
        lam = _single_weight(args, rs)
        chi = charalg.irreducible_character(rs, lam)
        ok = charalg.verify_weyl_character(rs, lam, chi)
        dim_ok = chi.dim() == charalg.weyl_dimension(rs, lam)
        return Report(f"weyl:{rs.name}:{format_weight(lam)}", ok and dim_ok,
                      details={"quotient": ok, "dimension": dim_ok, "dim": chi.dim()})
    if ident == "theorem1":
        spec, parts = _embedding(args)
        return embed.verify_theorem1(spec, parts, args.allow_large)
    if ident == "theorem2":
        spec, parts = _embedding(args)
        mu = _single_weight(args, spec.source)
        return embed.verify_theorem2(spec, parts, mu, args.allow_large)
    if ident == "prop3":
        if args.n is None:
            raise UsageError("--n is required for prop3")
        mu = _parse_weight(args.partition) if args.partition else (0,)
        return embed.verify_prop3(args.n, mu)
    if ident == "prop4":
        if not args.folding:
            raise UsageError("--folding is required for prop4")
        return embed.verify_prop4(args.folding)
    if ident == "prop678":
        rs = _root_system(args)
        mu = None
        if args.weight:
            mu = affine.AffineWeight(_single_weight(args, rs), args.level)
        return affine.verify_prop6_7_8(rs, args.K if args.K is not None else 1, mu,
                                       allow_large=args.allow_large)
    if ident == "coprimary":
        rs = _root_system(args)
        return affine.coprimary_check(rs, args.case, args.K, args.allow_large)
    if ident == "dual-facts":
        rs = _root_system(args)
        return affine.dual_rootsystem_facts(rs, args.K if args.K is not None else 4)
    if ident == "clifford":
        rs = _root_system(args)
        chi = _sum_of_irreducibles(args, rs)
        lhs = spin.clifford_wedge_oracle(rs, chi)
        rhs = spin.spin_character(rs, chi)
        return compare(f"clifford:{rs.name}:dim={chi.dim()}", lhs, rhs)
    raise UsageError(f"unknown identity {ident!r}")


def cmd_verify(args, out) -> int:
    result = _verify(args)
    reports = result if isinstance(result, list) else [result]
    ok = all(r.passed for r in reports)
    if isinstance(result, list):
        if args.json:
            out.write(_dumps({"identity": "all", "pass": ok,
                              "criteria": [r.to_json_obj() for r in reports]}) + "\n")
        else:
            out.write("\n".join(_report_text(r) for r in reports) + "\n")
            out.write(f"{'PASS' if ok else 'FAIL'}  all ({sum(r.passed for r in reports)}"
                      f"/{len(reports)} criteria)\n")
    else:
        out.write((result.to_json() if args.json else _report_text(result)) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinfactor",
                                description="Exact root systems, characters and Spin checks.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def common(sp, weights=True):
        sp.add_argument("--type", help="built-in type name such as B3")
        sp.add_argument("--cartan", help="Cartan matrix as a JSON 2-D integer array")
        if weights:
            sp.add_argument("--weight", action="append",
                            help="Dynkin labels a,b,...; repeatable")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--allow-large", action="store_true",
                        help="lift the size gates on expensive computations")

    sp = sub.add_parser("roots", help="root system data")
    common(sp, weights=False)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("char", help="irreducible character")
    common(sp)
    sp.add_argument("--dim", action="store_true", help="print only the dimension")
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("decompose", help="decompose a tensor product or a JSON character")
    common(sp)
    sp.add_argument("--input", help="character JSON file to decompose")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("spin0", help="Spin0 of a direct sum of irreducibles")
    common(sp)
    sp.add_argument("--K", type=int, help="affine truncation depth")
    sp.set_defaults(func=cmd_spin0)

    sp = sub.add_parser("restrict", help="restrict an irreducible along an embedding")
    sp.add_argument("--folding")
    sp.add_argument("--embedding", help="principal_sl2:<n>")
    sp.add_argument("--weight", action="append")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("verify", help="verify an identity")
    sp.add_argument("identity", choices=IDENTITIES)
    common(sp)
    sp.add_argument("--folding")
    sp.add_argument("--embedding", help="principal_sl2:<n>")
    sp.add_argument("--K", type=int)
    sp.add_argument("--n", type=int, help="number of variables for prop3")
    sp.add_argument("--partition", help="partition for prop3, e.g. 2,1")
    sp.add_argument("--level", type=int, default=1, help="level of mu-hat for prop678")
    sp.add_argument("--case", choices=affine.CASES, default="adjoint")
    sp.add_argument("--max-rank", type=int, default=3)
    sp.set_defaults(func=cmd_verify, threads=None)
    return p


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Let ``--weight -1,0`` through; argparse would read it as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--weight", "--partition"):
            nxt = next(it, None)
            if nxt is not None and re.match(r"^-\d", nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, out=None, threads: int | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if threads is not None:
        args.threads = threads
    if getattr(args, "K", None) is not None and args.K < 0:
        sys.stderr.write("error: --K must be nonnegative\n")
        return 2
    try:
        return args.func(args, out)
    except (UsageError, SpinfactorError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def run_captured(argv: Sequence[str], threads: int | None = None) -> tuple[int, str]:
    buf = io.StringIO()
    err = io.StringIO()
    with redirect_stderr(err):
        code = run(list(argv), out=buf, threads=threads)
    return code, buf.getvalue()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
