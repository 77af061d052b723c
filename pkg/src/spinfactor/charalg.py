"""Formal characters: sparse integer-valued functions on the weight lattice."""

from __future__ import annotations

import hashlib
import json
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import NotACharacter, NotDominant, RootSystemMismatch
from .rootsys import RootSystem, Weight, format_weight, require_integral, wadd, wscale


class FormalCharacter:
    """Immutable finitely supported map ``Weight -> int`` on one root system."""

    __slots__ = ("rs", "_terms", "_hash")

    def __init__(self, rs: RootSystem, terms: Mapping[Weight, int] | None = None):
        self.rs = rs
        self._terms = {tuple(k): int(v) for k, v in (terms or {}).items() if v}
        self._hash = None

    @classmethod
    def monomial(cls, rs: RootSystem, w: Weight, coeff: int = 1) -> "FormalCharacter":
        return cls(rs, {tuple(w): coeff})

    @classmethod
    def one(cls, rs: RootSystem) -> "FormalCharacter":
        return cls(rs, {(0,) * rs.rank: 1})

    @property
    def terms(self) -> Mapping[Weight, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, w: Weight) -> int:
        return self._terms.get(tuple(w), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def dim(self) -> int:
        return sum(self._terms.values())

    def _check(self, other: "FormalCharacter"):
        if self.rs != other.rs:
            raise RootSystemMismatch(f"{self.rs.name} vs {other.rs.name}")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return FormalCharacter(self.rs, out)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter(self.rs, {k: -v for k, v in self._terms.items()})

    def scale(self, c: int) -> "FormalCharacter":
        return FormalCharacter(self.rs, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "FormalCharacter":
        out = FormalCharacter.one(self.rs)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, FormalCharacter) and self.rs == other.rs
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rs, frozenset(self._terms.items())))
        return self._hash

    def shift(self, w: Weight) -> "FormalCharacter":
        return FormalCharacter(self.rs, {wadd(k, w): v for k, v in self._terms.items()})

    def dual(self) -> "FormalCharacter":
        return FormalCharacter(self.rs, {tuple(-x for x in k): v for k, v in self._terms.items()})

    def is_self_dual(self) -> bool:
        return all(self._terms.get(tuple(-x for x in k)) == v for k, v in self._terms.items())

    def is_w_invariant(self) -> bool:
        # invariance under the simple reflections generates invariance under W
        rs = self.rs
        for k, v in self._terms.items():
            for i in range(rs.rank):
                if k[i] and self._terms.get(rs.reflect(i, k)) != v:
                    return False
        return True

    def dominant_part(self) -> dict[Weight, int]:
        return {k: v for k, v in self._terms.items() if all(x >= 0 for x in k)}

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        rs = self.rs
        return sorted(self._terms.items(), key=lambda kv: (rs.height(kv[0]), kv[0]))

    def to_json_obj(self) -> dict:
        return {"rs": self.rs.name,
                "terms": [[[_json_num(x) for x in k], v] for k, v in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    def __repr__(self):
        body = " + ".join(f"{v}*e{format_weight(k)}" for k, v in self.sorted_terms()[:8])
        more = " + ..." if len(self._terms) > 8 else ""
        return f"FormalCharacter({self.rs.name}: {body or '0'}{more})"


def _json_num(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


def character_from_json(rs: RootSystem, obj: Mapping) -> FormalCharacter:
    terms: dict[Weight, int] = {}
    for coords, coeff in obj["terms"]:
        w = rs.check_weight([Fraction(c) for c in coords])
        terms[w] = terms.get(w, 0) + int(coeff)
    return FormalCharacter(rs, terms)


# ---------------------------------------------------------------------------
# arithmetic

def multiply(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    a._check(b)
    return FormalCharacter(a.rs, kernels.convolve(a._terms, b._terms))


def product(chars: Sequence[FormalCharacter], rs: RootSystem) -> FormalCharacter:
    """Balanced product, so the convolutions stay large and few."""
    items = list(chars)
    if not items:
        return FormalCharacter.one(rs)
    while len(items) > 1:
        nxt = [multiply(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


def square_weights(a: FormalCharacter) -> FormalCharacter:
    return FormalCharacter(a.rs, {wscale(2, k): v for k, v in a.items()})


def binomial_factor(rs: RootSystem, beta: Weight, sign: int, power: int) -> FormalCharacter:
    """(1 + sign*e^beta)^power."""
    terms = {}
    for k in range(power + 1):
        w = wscale(k, beta)
        terms[w] = terms.get(w, 0) + comb(power, k) * sign ** k
    return FormalCharacter(rs, terms)


def expand_product(rs: RootSystem, prefactor: Weight,
                   factors: Iterable[tuple[Weight, int, int]]) -> FormalCharacter:
    """e^prefactor * prod (1 + sign*e^beta)^power over (beta, sign, power)."""
    parts = [binomial_factor(rs, beta, sign, power) for beta, sign, power in factors if power]
    return product(parts, rs).shift(tuple(prefactor))


# ---------------------------------------------------------------------------
# Weyl group sums

def skew_symmetrizer(rs: RootSystem, mu: Weight) -> FormalCharacter:
    mu = require_integral(rs.check_weight(mu), "mu")
    dom, sign, regular = rs.dominant_representative(mu)
    if not regular:
        return FormalCharacter(rs)
    return FormalCharacter(rs, {w: sign * s for w, s in rs.orbit_signs(dom).items()})


def orbit_sum(rs: RootSystem, w: Weight, coeff: int = 1) -> dict[Weight, int]:
    return {x: coeff for x in rs.orbit_signs(w)}


def _require_dominant(rs: RootSystem, lam: Weight) -> Weight:
    lam = require_integral(rs.check_weight(lam), "highest weight")
    if not rs.is_dominant(lam):
        raise NotDominant(f"{format_weight(lam)} is not dominant")
    return lam


@lru_cache(maxsize=4096)
def dominant_multiplicities(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), by Freudenthal's formula.

    Returned dict is shared through the cache; callers must not mutate it.
    """
    lam = _require_dominant(rs, lam)
    positive = rs.positive_roots
    gram = rs.gram_int

    def ip(u, v):
        return sum(u[i] * sum(gram[i][j] * v[j] for j in range(len(v)))
                   for i in range(len(u)) if u[i])

    # dominant weights below lam, grouped by depth
    depth = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in positive:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in depth and all(x >= 0 for x in nu):
                depth[nu] = depth[mu] + 1
                queue.append(nu)
    height = {mu: rs.height(tuple(x - y for x, y in zip(lam, mu))) for mu in depth}
    order = sorted(depth, key=lambda m: (height[m], m))

    rho = rs.rho
    lr = tuple(x + y for x, y in zip(lam, rho))
    top = ip(lr, lr)
    mult: dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        total = 0
        for a in positive:
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, a))
                dom, _, _ = rs.dominant_representative(nu)
                m = mult.get(dom)
                if m is None:
                    break
                total += m * ip(nu, a)
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = top - ip(mr, mr)
        val = Fraction(2 * total, den)
        if val.denominator != 1:
            raise AssertionError(f"non-integral multiplicity at {mu}")
        if val:
            mult[mu] = int(val)
    return mult


def irreducible_character(rs: RootSystem, lam: Weight) -> FormalCharacter:
    return _irreducible_cached(rs, _require_dominant(rs, lam))


@lru_cache(maxsize=1024)
def _irreducible_cached(rs: RootSystem, lam: Weight) -> FormalCharacter:
    terms: dict[Weight, int] = {}
    for mu, m in dominant_multiplicities(rs, lam).items():
        for w in rs.orbit_signs(mu):
            terms[w] = m
    return FormalCharacter(rs, terms)


@lru_cache(maxsize=None)
def _coroot_coords(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    out = []
    for r, c in zip(rs.positive_roots, rs.positive_root_coords):
        n2 = rs.norm2(r)
        out.append(tuple(Fraction(ci) * 2 * rs.half_lengths[i] / n2 for i, ci in enumerate(c)))
    return tuple(out)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    lam = _require_dominant(rs, lam)
    num = Fraction(1)
    for cc in _coroot_coords(rs):
        num *= sum((x + 1) * c for x, c in zip(lam, cc)) / sum(cc)
    if num.denominator != 1:
        raise AssertionError("non-integral Weyl dimension")
    return num.numerator


def verify_weyl_character(rs: RootSystem, lam: Weight, chi: FormalCharacter) -> bool:
    lam = rs.check_weight(lam)
    return multiply(chi, skew_symmetrizer(rs, rs.rho)) == \
        skew_symmetrizer(rs, wadd(lam, rs.rho))


def denominator_product(rs: RootSystem) -> FormalCharacter:
    """e^rho * prod over positive roots of (1 - e^-alpha)."""
    return expand_product(rs, rs.rho, [(tuple(-x for x in a), -1, 1) for a in rs.positive_roots])


def denominator_check(rs: RootSystem) -> bool:
    return denominator_product(rs) == skew_symmetrizer(rs, rs.rho)


def _decompose_key(rs: RootSystem, w: Weight):
    return (rs.height(w), w)


def decompose(rs: RootSystem, chi: FormalCharacter) -> list[tuple[Weight, int]]:
    """Irreducible constituents, highest first, as (highest weight, multiplicity)."""
    if chi.rs != rs:
        raise RootSystemMismatch(f"{chi.rs.name} vs {rs.name}")
    if not chi.is_w_invariant():
        raise NotACharacter("character is not Weyl-invariant")
    remaining = chi.dominant_part()
    out = []
    while remaining:
        lam = max(remaining, key=lambda w: _decompose_key(rs, w))
        c = remaining[lam]
        if c < 0:
            raise NotACharacter(f"negative multiplicity {c} at {format_weight(lam)}")
        if any(not isinstance(x, int) for x in lam):
            raise NotACharacter(f"non-integral weight {format_weight(lam)}")
        out.append((lam, c))
        for mu, m in dominant_multiplicities(rs, lam).items():
            v = remaining.get(mu, 0) - c * m
            if v:
                remaining[mu] = v
            else:
                remaining.pop(mu, None)
    return out


def from_decomposition(rs: RootSystem, parts: Iterable[tuple[Weight, int]]) -> FormalCharacter:
    total = FormalCharacter(rs)
    for lam, m in parts:
        total = total + irreducible_character(rs, lam).scale(m)
    return total


def adjoint_character(rs: RootSystem) -> FormalCharacter:
    return irreducible_character(rs, rs.theta)
