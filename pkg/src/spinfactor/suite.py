"""The acceptance suite, shared by ``spinfactor verify all`` and the tests.

Each criterion returns a Report whose details are deterministic (no
timings), so the JSON output is byte-stable.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from itertools import product as cartesian
from typing import Callable

from .affine import (
    AffineWeight,
    affine_denominator_check,
    affine_irreducible_character,
    affine_spin0_character,
    coprimary_check,
    dual_rootsystem_facts,
    verify_prop6_7_8,
)
from .charalg import (
    FormalCharacter,
    adjoint_character,
    decompose,
    denominator_check,
    irreducible_character,
    verify_weyl_character,
    weyl_dimension,
)
from .embed import folding_case, folding_embedding, verify_prop3, verify_prop4, verify_theorem1, \
    verify_theorem2
from .report import Report
from .rootsys import BUILTIN_TYPES, root_system, wadd, wscale
from .spin import clifford_relations_hold, clifford_wedge_oracle, spin0_character, \
    spin_character

RANK4_TYPES = tuple(t for t in BUILTIN_TYPES if int(t[1:]) <= 4)
FOLDINGS = ("A3_to_C2", "D3_to_B2", "A2_to_B1", "A4_to_B2", "D4_to_G2")


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SPINFACTOR_THREADS", "1")))
    except ValueError:
        return 1


def _report(identity: str, checks: list[dict]) -> Report:
    return Report(identity, all(c["pass"] for c in checks), details={"checks": checks})


def finite_denominator_checks() -> list[dict]:
    return [{"check": f"finite:{t}", "pass": denominator_check(root_system(t))}
            for t in RANK4_TYPES]


def affine_denominator_checks(K: int = 3) -> list[dict]:
    return [{"check": f"affine:{t}:K={K}", "pass": affine_denominator_check(root_system(t), K)}
            for t in ("A1", "A2", "B2")]


def criterion_denominators(K: int = 3) -> Report:
    return _report("1:denominator_identities",
                   finite_denominator_checks() + affine_denominator_checks(K))


def criterion_characters(max_rank: int = 3, max_label: int = 2) -> Report:
    checks = []
    for t in BUILTIN_TYPES:
        rs = root_system(t)
        if rs.rank > max_rank:
            continue
        count = 0
        ok = True
        for lam in cartesian(range(max_label + 1), repeat=rs.rank):
            chi = irreducible_character(rs, lam)
            count += 1
            if not (verify_weyl_character(rs, lam, chi) and chi.dim() == weyl_dimension(rs, lam)):
                ok = False
        checks.append({"check": t, "weights": count, "pass": ok})
    return _report("2:character_engine", checks)


def criterion_adjoint_spin() -> Report:
    checks = []
    for t in RANK4_TYPES:
        rs = root_system(t)
        ok = spin0_character(rs, adjoint_character(rs)) == irreducible_character(rs, rs.rho)
        checks.append({"check": t, "pass": ok})
    return _report("3:spin0_adjoint_is_V(rho)", checks)


def clifford_corpus() -> list[tuple[str, FormalCharacter]]:
    out = []
    for t in ("A1", "A2", "B2"):
        rs = root_system(t)
        out.append((f"{t}:adjoint", adjoint_character(rs)))
    b2 = root_system("B2")
    out.append(("B2:V(theta_s)", irreducible_character(b2, b2.theta_s)))
    base = list(out)
    for i, (n1, c1) in enumerate(base):
        for n2, c2 in base[i:]:
            if c1.rs == c2.rs:
                out.append((f"{n1}+{n2.split(':', 1)[1]}", c1 + c2))
    return out


def criterion_clifford() -> Report:
    checks = []
    for name, chi in clifford_corpus():
        ok = clifford_wedge_oracle(chi.rs, chi) == spin_character(chi.rs, chi)
        checks.append({"check": name, "dim": chi.dim(), "pass": ok})
    for dim in range(0, 11):
        checks.append({"check": f"relations:dim={dim}",
                       "pass": clifford_relations_hold(dim // 2, bool(dim % 2))})
    return _report("4:clifford_oracle", checks)


def criterion_theorem1() -> Report:
    checks = []
    for kind in FOLDINGS:
        spec, parts = folding_embedding(kind)
        rep = verify_theorem1(spec, parts)
        tgt = spec.target
        factors = [decompose(tgt, spin0_character(tgt, p)) for p in parts]
        if folding_case(kind).part_kinds == ("two_theta_s",):
            expected = [[(wadd(tgt.rho, wscale(2, tgt.rho_s)), 1)]]
        elif kind == "D4_to_G2":
            expected = [[(tgt.rho_s, 1), ((0, 0), 1)]] * 2
        else:
            expected = [[(tgt.rho_s, 1)]]
        pattern = factors == expected
        p4 = verify_prop4(kind).passed
        checks.append({"check": kind, "pass": rep.passed and pattern and p4,
                       "theorem": rep.passed, "factor_pattern": pattern, "closed_form": p4,
                       "lhs_hash": rep.lhs_hash})
    return _report("5:theorem1_foldings", checks)


def criterion_theorem2() -> Report:
    checks = []
    for kind in ("A3_to_C2", "A2_to_B1"):
        spec, parts = folding_embedding(kind)
        for i in range(spec.source.rank):
            mu = spec.source.fundamental_weight(i)
            rep = verify_theorem2(spec, parts, mu)
            checks.append({"check": rep.identity, "pass": rep.passed})
    return _report("6:theorem2_fundamental", checks)


def partitions(n: int, max_part: int):
    for parts in cartesian(range(max_part + 1), repeat=n):
        if all(x >= y for x, y in zip(parts, parts[1:])):
            yield parts


def criterion_prop3() -> Report:
    checks = []
    for n in (2, 3, 4):
        for mu in partitions(n, 2):
            rep = verify_prop3(n, mu)
            checks.append({"check": rep.identity, "pass": rep.passed,
                           "unimodal": all(f["symmetric_unimodal"] for f in rep.factors)})
    return _report("7:prop3_principal", checks)


def criterion_coprimary_table() -> Report:
    checks = []
    for t in RANK4_TYPES:
        rep = coprimary_check(root_system(t), "adjoint")
        checks.append({"check": rep.identity, "pass": rep.passed})
    for t in ("B2", "B3", "C2", "C3"):
        rep = coprimary_check(root_system(t), "theta_s")
        checks.append({"check": rep.identity, "pass": rep.passed})
    for t in ("A1", "B2"):
        rep = coprimary_check(root_system(t), "two_theta_s")
        checks.append({"check": rep.identity, "pass": rep.passed})
    return _report("8:coprimary_table", checks)


def criterion_affine_adjoint(K: int = 2) -> Report:
    rs = root_system("A1")
    spin = affine_spin0_character(rs, adjoint_character(rs), K)
    irr = affine_irreducible_character(rs, AffineWeight(rs.rho, rs.dual_coxeter_number), K)
    checks = [{"check": "level", "pass": spin.level == 2, "level": spin.level},
              {"check": "equals_V(rho_hat)", "pass": spin == irr}]
    for mu in (None, AffineWeight((0,), 1), AffineWeight((1,), 1)):
        rep = verify_prop6_7_8(rs, K, mu)
        checks.append({"check": rep.identity + (f":{mu}" if mu else ""), "pass": rep.passed})
    return _report(f"9:affine_adjoint_A1_K={K}", checks)


def criterion_affine_not_coprimary() -> Report:
    a1 = coprimary_check(root_system("A1"), "two_theta_s", 1)
    obs = a1.details.get("obstruction", {})
    # Lambda = 3 rho + 10 Lambda_0, Lambda' = 7 rho - delta + 10 Lambda_0,
    # difference alpha_0 - alpha_1
    exact = (obs.get("top") == {"finite": [3], "level": 10, "delta": 0}
             and obs.get("other") == {"finite": [7], "level": 10, "delta": -1}
             and obs.get("difference_in_simple_roots") == [1, -1])
    b2 = coprimary_check(root_system("B2"), "theta_s", 1)
    checks = [{"check": "A1:two_theta_s", "pass": a1.passed and exact, "obstruction": obs,
               "level": a1.details.get("level")},
              {"check": "B2:theta_s:K=1", "pass": b2.passed}]
    return _report("10:affine_not_coprimary", checks)


def criterion_dual_facts(K: int = 4) -> Report:
    checks = []
    for t in ("B2", "B3", "C3", "F4", "G2"):
        rep = dual_rootsystem_facts(root_system(t), K)
        checks.append({"check": rep.identity, "pass": rep.passed})
    return _report("11:dual_root_facts", checks)


DETERMINISM_COMMANDS = (
    ["roots", "--type", "F4", "--json"],
    ["char", "--type", "B3", "--weight", "1,0,1", "--json"],
    ["spin0", "--type", "B2", "--weight", "1,0", "--K", "2", "--json"],
    ["decompose", "--type", "A2", "--weight", "1,1", "--weight", "1,1", "--json"],
    ["restrict", "--folding", "D4_to_G2", "--weight", "0,1,0,0", "--json"],
    ["verify", "theorem1", "--folding", "D4_to_G2", "--json"],
    ["verify", "coprimary", "--type", "A1", "--case", "two_theta_s", "--K", "1", "--json"],
    ["verify", "prop678", "--type", "A1", "--K", "2", "--json"],
)


def criterion_determinism() -> Report:
    from .cli import run_captured

    checks = []
    for argv in DETERMINISM_COMMANDS:
        outputs = []
        for threads in (1, 1, 4):
            outputs.append(run_captured(argv, threads=threads))
        same = all(o == outputs[0] for o in outputs)
        checks.append({"check": " ".join(argv), "pass": same and outputs[0][0] == 0})
    return _report("12:determinism", checks)


def criteria(max_rank: int = 3, K: int = 2) -> list[tuple[str, Callable[[], Report]]]:
    return [
        ("1", criterion_denominators),
        ("2", lambda: criterion_characters(max_rank)),
        ("3", criterion_adjoint_spin),
        ("4", criterion_clifford),
        ("5", criterion_theorem1),
        ("6", criterion_theorem2),
        ("7", criterion_prop3),
        ("8", criterion_coprimary_table),
        ("9", lambda: criterion_affine_adjoint(K)),
        ("10", criterion_affine_not_coprimary),
        ("11", criterion_dual_facts),
        ("12", criterion_determinism),
    ]


def run_all(max_rank: int = 3, K: int = 2, include_determinism: bool = True,
            threads: int | None = None) -> list[Report]:
    jobs = [(k, f) for k, f in criteria(max_rank, K) if include_determinism or k != "12"]
    with ThreadPoolExecutor(max_workers=threads or thread_count()) as pool:
        futures = [pool.submit(f) for _, f in jobs]
        return [fut.result() for fut in futures]
