"""Finite root systems built from generalized Cartan matrices.

Weights are tuples of Dynkin labels (pairings with the simple coroots).
Entries are ``int`` except for the rare half-integral intermediate, which is
stored as a ``Fraction``.  Simple root ``i`` is column ``i`` of the Cartan
matrix, where ``entries[i][j]`` is the pairing of simple root ``j`` with
simple coroot ``i``.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    NotFiniteType,
    NotGCM,
    NotIntegral,
    NotSymmetrizable,
    UnknownType,
    WeightLengthError,
)

Weight = tuple


# ---------------------------------------------------------------------------
# small exact linear algebra

def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotFiniteType("Cartan matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _normalize(x):
    """Collapse integral Fractions to int so equal weights hash equally."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def as_weight(values: Iterable) -> Weight:
    return tuple(_normalize(Fraction(v) if not isinstance(v, int) else v) for v in values)


def is_integral(w: Weight) -> bool:
    return all(isinstance(x, int) or x.denominator == 1 for x in w)


def require_integral(w: Weight, what: str = "weight") -> Weight:
    if not is_integral(w):
        raise NotIntegral(f"{what} {format_weight(w)} is not integral")
    return tuple(int(x) for x in w)


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wscale(k, a: Weight) -> Weight:
    return tuple(_normalize(k * x) for x in a)


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def format_weight(w: Weight) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


# ---------------------------------------------------------------------------
# Cartan matrices

class GeneralizedCartanMatrix:
    """Validated generalized Cartan matrix with its symmetrizing witness."""

    __slots__ = ("entries", "rank", "half_lengths")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = [list(r) for r in entries]
        n = len(rows)
        if n == 0:
            raise NotGCM("empty matrix")
        for r in rows:
            if len(r) != n:
                raise NotGCM("matrix is not square")
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise NotGCM(f"entry {x!r} is not an integer")
        for i in range(n):
            if rows[i][i] != 2:
                raise NotGCM(f"diagonal entry {i + 1} is {rows[i][i]}, expected 2")
            for j in range(n):
                if i == j:
                    continue
                if rows[i][j] > 0:
                    raise NotGCM(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise NotGCM(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                                 "are not simultaneously zero")
        self.entries: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        self.rank = n
        self.half_lengths = self._symmetrize()

    def _symmetrize(self) -> tuple[Fraction, ...]:
        # half_lengths[i] = (alpha_i, alpha_i)/2, so that a_ij * half_lengths[i]
        # is symmetric.  Each component is scaled so its shortest root has 1.
        a = self.entries
        n = self.rank
        hl: list[Fraction | None] = [None] * n
        for start in range(n):
            if hl[start] is not None:
                continue
            comp = [start]
            hl[start] = Fraction(1)
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(n):
                    if j != i and a[i][j] != 0:
                        val = hl[i] * a[i][j] / a[j][i]
                        if hl[j] is None:
                            hl[j] = val
                            comp.append(j)
                            queue.append(j)
                        elif hl[j] != val:
                            raise NotSymmetrizable("no symmetrizing witness exists")
            low = min(hl[i] for i in comp)
            for i in comp:
                hl[i] /= low
        return tuple(hl)

    def symmetrized(self) -> list[list[Fraction]]:
        return [[self.entries[i][j] * self.half_lengths[i] for j in range(self.rank)]
                for i in range(self.rank)]

    def is_finite_type(self) -> bool:
        b = self.symmetrized()
        return all(_det([row[:k] for row in b[:k]]) > 0 for k in range(1, self.rank + 1))

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.rank):
                if j not in seen and self.entries[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.rank

    def transpose(self) -> "GeneralizedCartanMatrix":
        return GeneralizedCartanMatrix([list(c) for c in zip(*self.entries)])

    def __eq__(self, other):
        return isinstance(other, GeneralizedCartanMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GeneralizedCartanMatrix({[list(r) for r in self.entries]})"


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def cartan_entries(letter: str, n: int) -> list[list[int]]:
    """Bourbaki-labelled Cartan matrix of an irreducible finite type."""
    letter = letter.upper()
    valid = {
        "A": n >= 1, "B": n >= 1, "C": n >= 1, "D": n >= 3,
        "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
    }
    if not valid.get(letter, False):
        raise UnknownType(f"unknown type {letter}{n}")
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        m[i][j] = aij
        m[j][i] = aji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2 and letter == "B":
            m[n - 1][n - 2] = -2
        if n >= 2 and letter == "C":
            m[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        # chain 1..n-1 with node n attached to node n-3 (E6: node 6 on node 3)
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 4, n - 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -3, -1)
    return m


def parse_type(name: str) -> tuple[str, int]:
    m = _TYPE_RE.match(name.strip())
    if not m:
        raise UnknownType(f"cannot parse type name {name!r}")
    return m.group(1).upper(), int(m.group(2))


def cartan_matrix(name: str) -> GeneralizedCartanMatrix:
    letter, n = parse_type(name)
    return GeneralizedCartanMatrix(cartan_entries(letter, n))


# ---------------------------------------------------------------------------
# root systems

class RootSystem:
    """Finite irreducible root system with the derived data used downstream.

    Squared lengths are normalized so short roots have length 2; in the
    simply laced case every root counts as short.
    """

    def __init__(self, cm: GeneralizedCartanMatrix, name: str | None = None):
        if not cm.is_finite_type():
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")
        if not cm.is_connected():
            raise NotFiniteType("only indecomposable Cartan matrices are supported")
        n = cm.rank
        a = cm.entries
        self.cartan = cm
        self.rank = n
        self.name = name or "cartan" + "".join(
            "[" + ",".join(str(x) for x in row) + "]" for row in a)
        self.half_lengths = cm.half_lengths
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(a[i][j] for i in range(n)) for j in range(n))
        self.cartan_inverse = _invert(a)
        # Gram matrix of fundamental weights: diag(half_lengths) * A^-1
        gram = [[cm.half_lengths[i] * self.cartan_inverse[i][j] for j in range(n)]
                for i in range(n)]
        den = 1
        for row in gram + self.cartan_inverse:
            for x in row:
                den = den * x.denominator // _gcd(den, x.denominator)
        self.gram = gram
        self.gram_scale = den
        self.gram_int = tuple(tuple(int(x * den) for x in row) for row in gram)
        self._inv_int = tuple(tuple(int(x * den) for x in row)
                              for row in self.cartan_inverse)

        roots = self._reflection_closure()
        positive = [r for r in roots if self._is_positive(r)]
        positive.sort(key=lambda r: (self.height(r), r))
        self.positive_roots: tuple[Weight, ...] = tuple(positive)
        self.positive_root_coords = tuple(
            tuple(int(x) for x in self.to_root_coords(r)) for r in positive)
        lengths = [self.norm2(r) for r in positive]
        top = max(lengths)
        self.simply_laced = top == 2
        self.lacing = int(top // 2)
        if self.simply_laced:
            self.short_positive_roots = self.positive_roots
            self.long_positive_roots: tuple[Weight, ...] = ()
        else:
            self.short_positive_roots = tuple(r for r, l in zip(positive, lengths) if l == 2)
            self.long_positive_roots = tuple(r for r, l in zip(positive, lengths) if l == top)
        self.short_simple = tuple(self.simply_laced or cm.half_lengths[i] == 1
                                  for i in range(n))

        self.rho: Weight = (1,) * n
        rho_s = [Fraction(0)] * n
        for r in self.short_positive_roots:
            for i in range(n):
                rho_s[i] += r[i]
        self.rho_s = require_integral(as_weight(x / 2 for x in rho_s), "rho_s")
        self.theta: Weight = positive[-1]
        self.theta_s: Weight = self.short_positive_roots[-1]
        self.theta_norm2 = self.norm2(self.theta)
        self.marks = tuple(int(x) for x in self.to_root_coords(self.theta))
        self.comarks = tuple(
            _int(m * 2 * cm.half_lengths[i] / self.theta_norm2)
            for i, m in enumerate(self.marks))
        self.coxeter_number = 1 + sum(self.marks)
        self.dual_coxeter_number = 1 + sum(self.comarks)
        self.d_default = (1,) * n
        self.num_positive_roots = len(positive)
        self.dimension = 2 * len(positive) + n

    # identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return f"RootSystem({self.name})"

    # construction helpers -------------------------------------------------
    def _reflection_closure(self) -> set[Weight]:
        seen = set(self.simple_roots)
        queue = deque(self.simple_roots)
        while queue:
            r = queue.popleft()
            for i in range(self.rank):
                s = self.reflect(i, r)
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        for r in seen:
            c = self.to_root_coords(r)
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise AssertionError("root with mixed-sign coordinates")
        return seen

    def _is_positive(self, r: Weight) -> bool:
        return all(x >= 0 for x in self.to_root_coords(r))

    # linear data ------------------------------------------------------------
    def check_weight(self, w: Sequence) -> Weight:
        if len(w) != self.rank:
            raise WeightLengthError(
                f"weight {format_weight(tuple(w))} has length {len(w)}, "
                f"expected {self.rank} for {self.name}")
        return as_weight(w)

    def to_root_coords(self, w: Weight) -> tuple:
        """Coordinates of ``w`` in the simple-root basis (exact)."""
        den = self.gram_scale
        return tuple(_normalize(Fraction(sum(c * x for c, x in zip(row, w)), den))
                     for row in self._inv_int)

    def height(self, w: Weight):
        """Pairing with the sum of fundamental coweights."""
        return _normalize(sum(self.to_root_coords(w), Fraction(0)))

    def pair_d(self, w: Weight, d: Sequence[int]):
        """Pairing of ``w`` with the coweight taking value d_i on simple root i."""
        return _normalize(sum((c * x for c, x in zip(self.to_root_coords(w), d)),
                              Fraction(0)))

    def inner(self, u: Weight, v: Weight):
        g = self.gram_int
        total = 0
        for i, x in enumerate(u):
            if x:
                row = g[i]
                total += x * sum(row[j] * y for j, y in enumerate(v) if y)
        return _normalize(Fraction(total) / self.gram_scale)

    def norm2(self, w: Weight):
        return self.inner(w, w)

    def coroot_pairing(self, w: Weight, root: Weight):
        """<w, root^vee> = 2 (w, root) / (root, root)."""
        return _normalize(2 * Fraction(self.inner(w, root)) / self.norm2(root))

    # Weyl group -------------------------------------------------------------
    def reflect(self, i: int, w: Weight) -> Weight:
        c = w[i]
        if not c:
            return w
        col = self.cartan.entries
        return tuple(_normalize(x - c * col[k][i]) for k, x in enumerate(w))

    def dominant_representative(self, w: Weight) -> tuple[Weight, int, bool]:
        sign = 1
        w = tuple(w)
        while True:
            for i, x in enumerate(w):
                if x < 0:
                    w = self.reflect(i, w)
                    sign = -sign
                    break
            else:
                return w, sign, all(x != 0 for x in w)

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def orbit_signs(self, w: Weight) -> dict[Weight, int]:
        """Orbit of ``w`` with the sign of a Weyl element reaching each point.

        Signs are well defined only for regular weights.
        """
        start, _, _ = self.dominant_representative(w)
        found = {start: 1}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            s = found[x]
            for i in range(self.rank):
                if x[i] > 0:
                    y = self.reflect(i, x)
                    if y not in found:
                        found[y] = -s
                        queue.append(y)
        return found

    def orbit(self, w: Weight) -> frozenset:
        return frozenset(self.orbit_signs(w))

    def weyl_group_order(self) -> int:
        return len(self.orbit_signs(self.rho))

    def root_order_leq(self, b: Weight, c: Weight) -> bool:
        diff = self.to_root_coords(wsub(c, b))
        return all(isinstance(x, int) and x >= 0 for x in diff)

    def dual(self) -> "RootSystem":
        return RootSystem(self.cartan.transpose(), name=_dual_name(self.name))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(j == i) for j in range(self.rank))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise AssertionError(f"expected an integer, got {x}")
    return x.numerator


def _dual_name(name: str) -> str:
    m = _TYPE_RE.match(name)
    if m and m.group(1) in "BC":
        return ("C" if m.group(1) == "B" else "B") + m.group(2)
    if m:
        return name
    return name + "^dual"


def build_root_system(cm: GeneralizedCartanMatrix, name: str | None = None) -> RootSystem:
    return RootSystem(cm, name)


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    """Root system of a named type such as ``"B3"``."""
    letter, n = parse_type(name)
    return RootSystem(GeneralizedCartanMatrix(cartan_entries(letter, n)), f"{letter}{n}")


BUILTIN_TYPES = tuple([f"A{n}" for n in range(1, 10)] + ["B2", "B3", "B4", "C2", "C3", "C4",
                                                          "D4", "G2", "F4"])


def weyl_reflect(rs: RootSystem, i: int, w: Weight) -> Weight:
    """Simple reflection with a 1-based index."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"reflection index {i} outside 1..{rs.rank}")
    return rs.reflect(i - 1, rs.check_weight(w))


def weyl_orbit(rs: RootSystem, w: Weight) -> frozenset:
    return rs.orbit(rs.check_weight(w))


def dominant_representative(rs: RootSystem, w: Weight) -> tuple[Weight, int, bool]:
    return rs.dominant_representative(rs.check_weight(w))


def root_order_leq(rs: RootSystem, b: Weight, c: Weight) -> bool:
    return rs.root_order_leq(rs.check_weight(b), rs.check_weight(c))
