"""Exact Laurent polynomials in one variable q."""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import ZeroPolynomial


class QPolynomial:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(v) for e, v in (coeffs or {}).items() if v}

    @classmethod
    def from_list(cls, coeffs: Sequence[int], low: int = 0) -> "QPolynomial":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QPolynomial":
        return cls({e: c})

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def window(self) -> list[int]:
        """Coefficients from the lowest to the highest exponent, zeros included."""
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(self.low(), self.high() + 1)]

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + QPolynomial({e: -v for e, v in other._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        out = QPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def dilate(self, k: int) -> "QPolynomial":
        """Substitute q -> q^k."""
        return QPolynomial({e * k: v for e, v in self._c.items()})

    def shift(self, m: int) -> "QPolynomial":
        return QPolynomial({e + m: v for e, v in self._c.items()})

    def evaluate(self, q: int) -> int:
        return sum(v * q ** e for e, v in self._c.items())

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and v == 1:
                parts.append(mono)
            elif mono and v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"QPolynomial({self})"


def is_symmetric_unimodal(p: QPolynomial) -> bool:
    """Palindromic over its support window and weakly rising then falling."""
    if not p:
        raise ZeroPolynomial("the zero polynomial has no support window")
    a = p.window()
    if a != a[::-1]:
        return False
    half = a[: (len(a) + 1) // 2]
    return all(x <= y for x, y in zip(half, half[1:]))
