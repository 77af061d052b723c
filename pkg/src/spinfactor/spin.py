"""Spin characters of orthogonal representations and a Clifford-algebra oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .charalg import FormalCharacter, decompose, expand_product
from .errors import (
    NonIntegralLambda,
    NotACharacter,
    NotSelfDual,
    SpinfactorError,
    TooLarge,
    ZeroPairing,
)
from .rootsys import RootSystem, Weight, format_weight, is_integral, wscale

ORACLE_MAX_DIM = 24


@dataclass(frozen=True)
class DistinguishedCoweight:
    """Coweight d given by its values d_i = alpha_i(d) on the simple roots.

    A weight pairs with d through its simple-root coordinates, so the
    default (all ones) is rho-check and the pairing is the height.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or any(int(v) != v or v <= 0 for v in self.values):
            raise SpinfactorError("distinguished coweight needs positive integer values")

    @classmethod
    def default(cls, rs: RootSystem) -> "DistinguishedCoweight":
        return cls(tuple(rs.d_default))

    def pair(self, rs: RootSystem, w: Weight):
        if len(self.values) != rs.rank:
            raise SpinfactorError("coweight rank does not match the root system")
        return rs.pair_d(w, self.values)


def _coweight(rs: RootSystem, d) -> DistinguishedCoweight:
    if d is None:
        return DistinguishedCoweight.default(rs)
    if isinstance(d, DistinguishedCoweight):
        return d
    return DistinguishedCoweight(tuple(d))


def check_orthogonal_candidate(rs: RootSystem, chi: FormalCharacter) -> bool:
    """Self-duality, the weight-level shadow of an invariant symmetric form."""
    decompose(rs, chi)
    return chi.is_self_dual()


def positive_weights(rs: RootSystem, chi: FormalCharacter, d=None) -> list[tuple[Weight, int]]:
    """Weights of chi pairing positively with d, in serialization order."""
    d = _coweight(rs, d)
    out = []
    for w, m in chi.sorted_terms():
        if m < 0:
            raise NotACharacter(f"negative multiplicity at {format_weight(w)}")
        if not any(w):
            continue
        p = d.pair(rs, w)
        if p == 0:
            raise ZeroPairing(f"weight {format_weight(w)} pairs to zero with d")
        if p > 0:
            out.append((w, m))
    return out


def half_sum(rs: RootSystem, weights: Iterable[tuple[Weight, int]]) -> Weight:
    total = [Fraction(0)] * rs.rank
    for w, m in weights:
        for i, x in enumerate(w):
            total[i] += m * x
    lam = wscale(Fraction(1, 2), tuple(total))
    if not is_integral(lam):
        raise NonIntegralLambda(f"half-sum {format_weight(lam)} is not integral")
    return tuple(int(x) for x in lam)


def spin0_character(rs: RootSystem, chi: FormalCharacter, d=None) -> FormalCharacter:
    if not chi.is_self_dual():
        raise NotSelfDual("character is not invariant under weight negation")
    pos = positive_weights(rs, chi, d)
    lam = half_sum(rs, pos)
    return expand_product(rs, lam, [(tuple(-x for x in w), 1, m) for w, m in pos])


def spin_character(rs: RootSystem, chi: FormalCharacter, d=None) -> FormalCharacter:
    m0 = chi.coefficient((0,) * rs.rank)
    return spin0_character(rs, chi, d).scale(2 ** (m0 // 2))


def spin0_additivity_check(rs: RootSystem, chi1: FormalCharacter, chi2: FormalCharacter,
                           d=None) -> bool:
    lhs = spin0_character(rs, chi1 + chi2, d)
    return lhs == spin0_character(rs, chi1, d) * spin0_character(rs, chi2, d)


# ---------------------------------------------------------------------------
# Clifford oracle
#
# Basis vectors of the wedge space are bitmasks J over the positive index
# set.  Every generator acts monomially, so an operator is a pair of arrays
# (target index, coefficient) with coefficient 0 meaning "kills e_J".

class CliffordRelationError(AssertionError):
    pass


def _popcount_table(size: int) -> np.ndarray:
    table = np.zeros(size, dtype=np.int64)
    for b in range(max(size.bit_length() - 1, 0)):
        table += (np.arange(size) >> b) & 1
    return table


class WedgeModule:
    """Action of the Clifford generators on the exterior algebra of V+."""

    def __init__(self, npos: int, odd: bool):
        self.npos = npos
        self.odd = odd
        self.size = 1 << npos
        self.basis = np.arange(self.size, dtype=np.int64)
        self.pc = _popcount_table(self.size)

    def _above(self, b: int) -> np.ndarray:
        return self.pc[self.basis >> (b + 1)]

    def raising(self, i: int):
        """e_i for 1 <= i <= npos: wedge on the left."""
        bit = 1 << (i - 1)
        present = (self.basis & bit) != 0
        tgt = np.where(present, 0, self.basis | bit)
        coef = np.where(present, 0, 1 - 2 * (self._above(i - 1) & 1))
        return tgt, coef

    def lowering(self, i: int):
        """e_{-i}: contraction with weight 2 (-1)^{#j in J, j > i}."""
        bit = 1 << (i - 1)
        present = (self.basis & bit) != 0
        tgt = np.where(present, self.basis ^ bit, 0)
        coef = np.where(present, 2 * (1 - 2 * (self._above(i - 1) & 1)), 0)
        return tgt, coef

    def middle(self):
        return self.basis.copy(), 1 - 2 * (self.pc & 1)

    def generator(self, label: int):
        if label > 0:
            return self.raising(label)
        if label < 0:
            return self.lowering(-label)
        return self.middle()

    @staticmethod
    def compose(a, b):
        """a after b."""
        tgt = a[0][b[0]]
        coef = a[1][b[0]] * b[1]
        return tgt, coef

    def sum_is_scalar(self, p, q, scalar: int) -> bool:
        n = self.size
        keys = np.concatenate([self.basis * n + p[0], self.basis * n + q[0]])
        vals = np.concatenate([p[1], q[1]])
        keep = vals != 0
        keys, vals = keys[keep], vals[keep]
        uniq, inv = np.unique(keys, return_inverse=True)
        tot = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(tot, inv, vals)
        nz = tot != 0
        uniq, tot = uniq[nz], tot[nz]
        if scalar == 0:
            return len(uniq) == 0
        return (len(uniq) == n and np.array_equal(uniq, self.basis * n + self.basis)
                and bool(np.all(tot == scalar)))

    def labels(self) -> list[int]:
        out = list(range(1, self.npos + 1)) + [-i for i in range(1, self.npos + 1)]
        if self.odd:
            out.append(0)
        return out

    def check_relations(self) -> bool:
        """x y + y x = 2 Q(x, y) for every pair of generators."""
        labels = self.labels()
        ops = {l: self.generator(l) for l in labels}
        for x in labels:
            for y in labels:
                if x == 0 and y == 0:
                    expected = 2
                elif x != 0 and x == -y:
                    expected = 2
                else:
                    expected = 0
                xy = self.compose(ops[x], ops[y])
                yx = self.compose(ops[y], ops[x])
                if not self.sum_is_scalar(xy, yx, expected):
                    return False
        return True

    def cartan_eigenvalues(self, i: int) -> np.ndarray:
        """Eigenvalues of (e_i e_{-i} - e_{-i} e_i)/4, returned doubled as integers.

        The value is +1 on e_J when i is in J, so wedging with e_i raises the
        weight by beta_i.
        """
        up, down = self.raising(i), self.lowering(i)
        a = self.compose(down, up)
        b = self.compose(up, down)
        # both products are diagonal with exactly one of them nonzero per e_J
        if not (np.all((a[1] == 0) | (a[0] == self.basis))
                and np.all((b[1] == 0) | (b[0] == self.basis))):
            raise CliffordRelationError("Cartan element is not diagonal")
        twice = b[1] - a[1]
        if not np.all(np.abs(twice) == 2):
            raise CliffordRelationError("unexpected Cartan eigenvalue")
        return twice // 2


def clifford_relations_hold(npos: int, odd: bool) -> bool:
    return WedgeModule(npos, odd).check_relations()


def clifford_wedge_oracle(rs: RootSystem, weights, d=None,
                          check_relations: bool = True) -> FormalCharacter:
    """Character of the wedge space of V+ built from Clifford generators.

    ``weights`` is a FormalCharacter or a list of (weight, multiplicity).
    The weight of each wedge monomial is read off the diagonal action of the
    Cartan elements assembled from Clifford products.
    """
    if isinstance(weights, FormalCharacter):
        items = weights.sorted_terms()
    else:
        items = sorted(((tuple(w), m) for w, m in weights), key=lambda t: (rs.height(t[0]), t[0]))
    dval = _coweight(rs, d)
    pos: list[Weight] = []
    m0 = 0
    dim = 0
    for w, m in items:
        if m < 0:
            raise NotACharacter("negative multiplicity")
        dim += m
        if not any(w):
            m0 += m
            continue
        p = dval.pair(rs, w)
        if p == 0:
            raise ZeroPairing(f"weight {format_weight(w)} pairs to zero with d")
        if p > 0:
            pos.extend([tuple(w)] * m)
    if dim > ORACLE_MAX_DIM:
        raise TooLarge(f"dimension {dim} exceeds the oracle cap {ORACLE_MAX_DIM}")
    zero = (0,) * rs.rank
    pos.extend([zero] * (m0 // 2))
    if 2 * len(pos) + m0 % 2 != dim:
        raise NotSelfDual("weights do not split into opposite pairs")
    module = WedgeModule(len(pos), bool(m0 % 2))
    if check_relations and not module.check_relations():
        raise CliffordRelationError("Clifford relations fail")

    twice = np.zeros((module.size, rs.rank), dtype=object)
    for i, beta in enumerate(pos, start=1):
        ev = module.cartan_eigenvalues(i)
        for c in range(rs.rank):
            if beta[c]:
                twice[:, c] += ev * beta[c]
    terms: dict[Weight, int] = {}
    for row in twice:
        if any(x % 2 for x in row):
            raise NonIntegralLambda("wedge weights are not integral")
        w = tuple(int(x) // 2 for x in row)
        terms[w] = terms.get(w, 0) + 1
    return FormalCharacter(rs, terms)


def direct_sum(chars: Sequence[FormalCharacter]) -> FormalCharacter:
    total = chars[0]
    for c in chars[1:]:
        total = total + c
    return total
