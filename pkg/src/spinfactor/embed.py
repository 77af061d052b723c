"""Subalgebra embeddings, character restriction and the factorization checks."""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .charalg import (
    FormalCharacter,
    adjoint_character,
    decompose,
    from_decomposition,
    irreducible_character,
    product,
)
from .errors import (
    BadPartition,
    BadRank,
    DecompositionMismatch,
    LargeComputation,
    NonIntegralImage,
    SpinfactorError,
    UnsupportedKind,
)
from .qpoly import QPolynomial, is_symmetric_unimodal
from .report import Report, compare
from .rootsys import RootSystem, Weight, format_weight, root_system, wadd, wscale
from .spin import DistinguishedCoweight, spin0_character

# V(rho) of the source has dimension 2^(positive roots); above this the
# check is gated behind allow_large.
LARGE_POSITIVE_ROOTS = 24


@dataclass(frozen=True)
class EmbeddingSpec:
    """Linear map from source Dynkin labels to target Dynkin labels.

    Row ``t`` of ``restriction`` expresses target simple coroot ``t`` in the
    source simple coroots, so the image of a weight is ``restriction @ w``.
    """

    name: str
    source: RootSystem
    target: RootSystem
    restriction: tuple[tuple, ...]
    d: DistinguishedCoweight
    orbits: tuple[tuple[int, ...], ...] | None = None
    zero_roots: int = field(default=0, compare=False)

    def __post_init__(self):
        if len(self.restriction) != self.target.rank or any(
                len(r) != self.source.rank for r in self.restriction):
            raise SpinfactorError(f"{self.name}: restriction matrix has the wrong shape")
        zero = 0
        for a in self.source.positive_roots:
            b = self.restrict_weight(a)
            if not any(b):
                zero += 1
                continue
            if self.d.pair(self.target, b) < 0:
                raise SpinfactorError(
                    f"{self.name}: root {format_weight(a)} restricts below zero")
        images = {self.restrict_weight(a) for a in self.source.simple_roots}
        missing = [a for a in self.target.simple_roots if a not in images]
        if missing:
            raise SpinfactorError(
                f"{self.name}: target simple root {format_weight(missing[0])} "
                "is not a restricted simple root")
        object.__setattr__(self, "zero_roots", zero)

    def restrict_weight(self, w: Weight) -> Weight:
        out = []
        for row in self.restriction:
            x = sum((Fraction(c) * y for c, y in zip(row, w)), Fraction(0))
            if x.denominator != 1:
                raise NonIntegralImage(f"{format_weight(w)} has a non-integral image")
            out.append(x.numerator)
        return tuple(out)


def restrict_character(spec: EmbeddingSpec, chi: FormalCharacter) -> FormalCharacter:
    if chi.rs != spec.source:
        raise SpinfactorError(f"character lives on {chi.rs.name}, not {spec.source.name}")
    terms: dict[Weight, int] = {}
    for w, m in chi.items():
        v = spec.restrict_weight(w)
        terms[v] = terms.get(v, 0) + m
    return FormalCharacter(spec.target, terms)


def identity_embedding(rs: RootSystem) -> EmbeddingSpec:
    rows = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    return EmbeddingSpec(f"identity:{rs.name}", rs, rs, rows, DistinguishedCoweight.default(rs))


@lru_cache(maxsize=None)
def principal_sl2_embedding(n: int) -> EmbeddingSpec:
    """Principal sl2 inside sl_n; the A1 label of a weight is its H-eigenvalue."""
    if n < 2:
        raise BadRank(f"principal embedding needs n >= 2, got {n}")
    src = root_system(f"A{n - 1}")
    tgt = root_system("A1")
    row = tuple(i * (n - i) for i in range(1, n))
    return EmbeddingSpec(f"principal_sl2:{n}", src, tgt, (row,), DistinguishedCoweight((1,)))


# ---------------------------------------------------------------------------
# foldings

@dataclass(frozen=True)
class FoldingCase:
    kind: str
    source: str
    target: str
    orbits: tuple[tuple[int, ...], ...]
    doubled: tuple[int, ...]
    part_kinds: tuple[str, ...]

    @property
    def order(self) -> int:
        return max(len(o) for o in self.orbits)


_KIND_RE = re.compile(r"^([A-G])(\d+)_to_([A-G])(\d+)$")


def folding_case(kind: str, n: int | None = None) -> FoldingCase:
    """Diagram-automorphism data for a folding named like ``A3_to_C2``.

    The family names ``A2n1_to_Cn``, ``Dn1_to_Bn`` and ``A2n_to_Bn`` take
    the parameter ``n`` separately.
    """
    families = {"A2n1_to_Cn": lambda n: f"A{2 * n - 1}_to_C{n}",
                "Dn1_to_Bn": lambda n: f"D{n + 1}_to_B{n}",
                "A2n_to_Bn": lambda n: f"A{2 * n}_to_B{n}"}
    if kind in families:
        if n is None:
            raise UnsupportedKind(f"{kind} needs a parameter n")
        kind = families[kind](n)
    m = _KIND_RE.match(kind)
    if not m:
        raise UnsupportedKind(f"unknown folding {kind!r}")
    s, sn, t, tn = m.group(1), int(m.group(2)), m.group(3), int(m.group(4))
    if s == "A" and t == "C" and sn == 2 * tn - 1 and tn >= 2:
        k = tn
        orbits = tuple((i, 2 * k - 2 - i) for i in range(k - 1)) + ((k - 1,),)
        return FoldingCase(kind, f"A{sn}", f"C{k}", orbits, (), ("theta_s",))
    if s == "D" and t == "B" and sn == tn + 1 and tn >= 2:
        k = tn
        orbits = tuple((i,) for i in range(k - 1)) + ((k - 1, k),)
        return FoldingCase(kind, f"D{sn}", f"B{k}", orbits, (), ("theta_s",))
    if s == "A" and t == "B" and sn == 2 * tn and tn >= 1:
        k = tn
        orbits = tuple((i, 2 * k - 1 - i) for i in range(k))
        return FoldingCase(kind, f"A{sn}", f"B{k}", orbits, (k - 1,), ("two_theta_s",))
    if kind == "E6_to_F4":
        return FoldingCase(kind, "E6", "F4", ((5,), (2,), (1, 3), (0, 4)), (), ("theta_s",))
    if kind == "D4_to_G2":
        return FoldingCase(kind, "D4", "G2", ((0, 2, 3), (1,)), (), ("theta_s", "theta_s"))
    raise UnsupportedKind(f"unsupported folding {kind!r}")


def folded_edges(case: FoldingCase) -> int:
    """Number of diagram edges joining two nodes of the same orbit."""
    cm = root_system(case.source).cartan.entries
    count = 0
    for orb in case.orbits:
        for i in orb:
            for j in orb:
                if i < j and cm[i][j] != 0:
                    count += 1
    return count


def _part_character(rs: RootSystem, kind: str) -> FormalCharacter:
    if kind == "theta_s":
        return irreducible_character(rs, rs.theta_s)
    return irreducible_character(rs, wscale(2, rs.theta_s))


def folding_embedding(kind: str, n: int | None = None
                      ) -> tuple[EmbeddingSpec, list[FormalCharacter]]:
    spec, parts = _folding_cached(folding_case(kind, n))
    return spec, list(parts)


@lru_cache(maxsize=None)
def _folding_cached(case: FoldingCase) -> tuple[EmbeddingSpec, tuple[FormalCharacter, ...]]:
    src = root_system(case.source)
    tgt = root_system(case.target)
    rows = []
    for t, orb in enumerate(case.orbits):
        factor = 2 if t in case.doubled else 1
        rows.append(tuple(factor if s in orb else 0 for s in range(src.rank)))
    spec = EmbeddingSpec(case.kind, src, tgt, tuple(rows),
                         DistinguishedCoweight.default(tgt), case.orbits)
    for t, orb in enumerate(case.orbits):
        for s in orb:
            if spec.restrict_weight(src.simple_roots[s]) != tgt.simple_roots[t]:
                raise DecompositionMismatch(
                    f"{case.kind}: source simple root {s + 1} does not fold onto "
                    f"target simple root {t + 1}")
    parts = [_part_character(tgt, k) for k in case.part_kinds]
    check_adjoint_split(spec, parts)
    return spec, tuple(parts)


def check_adjoint_split(spec: EmbeddingSpec, parts: Sequence[FormalCharacter]) -> None:
    """Restricted adjoint must equal adjoint plus the listed parts."""
    lhs = restrict_character(spec, adjoint_character(spec.source))
    rhs = adjoint_character(spec.target)
    for p in parts:
        rhs = rhs + p
    if spec.zero_roots:
        rhs = rhs + FormalCharacter.monomial(spec.target, (0,) * spec.target.rank,
                                             2 * spec.zero_roots)
    if lhs != rhs:
        raise DecompositionMismatch(
            f"{spec.name}: restricted adjoint decomposes as "
            f"{_fmt_decomposition(decompose(spec.target, lhs))}")


def _fmt_decomposition(parts) -> str:
    return " + ".join(f"{m}*V{format_weight(w)}" for w, m in parts)


def principal_parts(spec: EmbeddingSpec) -> list[FormalCharacter]:
    """Irreducible summands of the restricted adjoint beyond the adjoint."""
    rest = restrict_character(spec, adjoint_character(spec.source)) - \
        adjoint_character(spec.target)
    out = []
    for w, m in decompose(spec.target, rest):
        out.extend([irreducible_character(spec.target, w)] * m)
    return out


def embedding_by_name(name: str) -> tuple[EmbeddingSpec, list[FormalCharacter]]:
    m = re.match(r"^principal_sl2:(\d+)$", name)
    if m:
        spec = principal_sl2_embedding(int(m.group(1)))
        return spec, principal_parts(spec)
    return folding_embedding(name)


def _gate(spec: EmbeddingSpec, allow_large: bool):
    if not allow_large and spec.source.num_positive_roots > LARGE_POSITIVE_ROOTS:
        raise LargeComputation(
            f"{spec.name}: V(rho) of {spec.source.name} has dimension "
            f"2^{spec.source.num_positive_roots}; pass allow_large to run it")


def spin_factors(spec: EmbeddingSpec, parts: Sequence[FormalCharacter]) -> FormalCharacter:
    """prod Spin0(p_j), times 2^r for roots restricting to zero."""
    out = product([spin0_character(spec.target, p, spec.d) for p in parts], spec.target)
    return out.scale(2 ** spec.zero_roots)


def verify_theorem1(spec: EmbeddingSpec, parts: Sequence[FormalCharacter],
                    allow_large: bool = False) -> Report:
    check_adjoint_split(spec, parts)
    _gate(spec, allow_large)
    src, tgt = spec.source, spec.target
    lhs = restrict_character(spec, irreducible_character(src, src.rho))
    factors = spin_factors(spec, parts)
    rhs = irreducible_character(tgt, tgt.rho) * factors
    rep = compare(f"theorem1:{spec.name}", lhs, rhs)
    rep.details["spin_factors"] = [
        _fmt_decomposition(decompose(tgt, spin0_character(tgt, p, spec.d))) for p in parts]
    return rep


def verify_theorem2(spec: EmbeddingSpec, parts: Sequence[FormalCharacter], mu_tilde: Weight,
                    allow_large: bool = False) -> Report:
    check_adjoint_split(spec, parts)
    _gate(spec, allow_large)
    src, tgt = spec.source, spec.target
    mu_tilde = src.check_weight(mu_tilde)
    pieces = decompose(tgt, restrict_character(spec, irreducible_character(src, mu_tilde)))
    lhs = restrict_character(
        spec, irreducible_character(src, wadd(wscale(2, mu_tilde), src.rho)))
    doubled = from_decomposition(tgt, [(wadd(wscale(2, w), tgt.rho), m) for w, m in pieces])
    rhs = doubled * spin_factors(spec, parts)
    rep = compare(f"theorem2:{spec.name}:{format_weight(mu_tilde)}", lhs, rhs)
    rep.details["restricted_mu"] = _fmt_decomposition(pieces)
    return rep


def prop4_closed_form(case: FoldingCase) -> FormalCharacter:
    """[chi_{e(rho+rho_s)+rho_s} + (a-2) chi_0]^(a-1) for the folding case."""
    tgt = root_system(case.target)
    a = case.order
    e = folded_edges(case)
    hw = wadd(wscale(e, wadd(tgt.rho, tgt.rho_s)), tgt.rho_s)
    base = irreducible_character(tgt, hw) + FormalCharacter.one(tgt).scale(a - 2)
    return base ** (a - 1)


def verify_prop4(kind: str, n: int | None = None) -> Report:
    case = folding_case(kind, n)
    spec, parts = folding_embedding(kind, n)
    lhs = spin_factors(spec, parts)
    rhs = prop4_closed_form(case)
    return compare(f"prop4:{case.kind}", lhs, rhs,
                   order=case.order, folded_edges=folded_edges(case))


# ---------------------------------------------------------------------------
# principal specialization

def _check_partition(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if n < 1:
        raise BadPartition(f"number of variables must be positive, got {n}")
    if any(x < 0 for x in lam) or any(x < y for x, y in zip(lam, lam[1:])):
        raise BadPartition(f"{lam} is not a partition")
    if len(lam) > n:
        raise BadPartition(f"partition {lam} has more than {n} parts")
    return lam


def principal_specialization(lam: Sequence[int], n: int) -> QPolynomial:
    """Schur polynomial at x_i = q^(i-1), summed over semistandard tableaux."""
    lam = _check_partition(lam, n)

    @lru_cache(maxsize=None)
    def rest(r: int, above: tuple[int, ...]) -> QPolynomial:
        if r == len(lam):
            return QPolynomial.one()
        total = QPolynomial()
        for row in _rows(lam[r], above, n):
            total = total + rest(r + 1, row).shift(sum(row) - len(row))
        return total

    return rest(0, ())


def _rows(length: int, above: tuple[int, ...], n: int):
    """Weakly increasing rows in 1..n strictly below the row above."""
    def build(prefix: list[int]):
        c = len(prefix)
        if c == length:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 1
        if c < len(above):
            lo = max(lo, above[c] + 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from build(prefix)
            prefix.pop()
    yield from build([])


def partition_to_labels(lam: Sequence[int], n: int) -> Weight:
    lam = list(_check_partition(lam, n)) + [0] * n
    return tuple(lam[i] - lam[i + 1] for i in range(n - 1))


def principal_specialization_from_character(lam: Sequence[int], n: int) -> QPolynomial:
    """Same q-polynomial, from the sl_n character paired with H."""
    part = _check_partition(lam, n)
    if n == 1:
        return QPolynomial.one()
    spec = principal_sl2_embedding(n)
    chi = restrict_character(spec, irreducible_character(spec.source, partition_to_labels(part, n)))
    size = sum(part)
    out: dict[int, int] = {}
    for (k,), m in chi.items():
        e = ((n - 1) * size - k)
        if e % 2:
            raise AssertionError("odd principal grading")
        out[e // 2] = out.get(e // 2, 0) + m
    return QPolynomial(out)


def prop3_factors(n: int, mu: Sequence[int]) -> list[QPolynomial]:
    """The n-1 factors q^C(n,3)(1+q)S_mu(q^2) and w_1 .. w_{n-2}."""
    one_q = QPolynomial.from_list([1, 1])
    first = principal_specialization(mu, n).dilate(2) * one_q
    first = first.shift(comb(n, 3))
    out = [first]
    for k in range(1, n - 1):
        w = QPolynomial.one()
        for j in range(1, k + 2):
            w = w * (QPolynomial.one() + QPolynomial.monomial(j))
        out.append(w)
    return out


def verify_prop3(n: int, mu: Sequence[int]) -> Report:
    mu_t = _check_partition(mu, n)
    mu_full = list(mu_t) + [0] * (n - len(mu_t))
    big = [2 * m + (n - 1 - i) for i, m in enumerate(mu_full)]
    lhs = principal_specialization(big, n)
    factors = prop3_factors(n, mu_t)
    rhs = QPolynomial.one()
    for f in factors:
        rhs = rhs * f
    second = principal_specialization_from_character(big, n)
    verdicts = [{"poly": str(f), "symmetric_unimodal": is_symmetric_unimodal(f)}
                for f in factors]
    ok = lhs == rhs and second == lhs and all(v["symmetric_unimodal"] for v in verdicts)
    details = {"lhs": str(lhs), "rhs": str(rhs), "character_path_agrees": second == lhs}
    return Report(f"prop3:n={n}:mu={list(mu_full)}", ok, _qhash(lhs), _qhash(rhs),
                  None if lhs == rhs else {"lhs": str(lhs), "rhs": str(rhs)},
                  verdicts, details)


def _qhash(p: QPolynomial) -> str:
    return hashlib.sha256(str(p).encode()).hexdigest()
