"""Square and rectangular matrices with entries in an `Algebra`."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Algebra, AlgebraMismatch, Element, NotInvertible


class ShapeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Morphism:
    """A map between algebras.  ``anti`` marks anti-homomorphisms."""

    source: Algebra
    target: Algebra
    fn: Callable[[Element], Element]
    anti: bool = False
    name: str = ""

    def __call__(self, x: Element) -> Element:
        if x.algebra != self.source:
            raise AlgebraMismatch(f"{self.name or 'morphism'} expects {self.source}, got {x.algebra}")
        return self.fn(x)


class AlgebraMatrix:
    __slots__ = ("algebra", "entries")

    def __init__(self, algebra: Algebra, entries: Sequence[Sequence]):
        rows = []
        for r in entries:
            row = []
            for x in r:
                if isinstance(x, Element):
                    if x.algebra != algebra:
                        raise AlgebraMismatch(f"entry in {x.algebra}, matrix over {algebra}")
                    row.append(x)
                else:
                    row.append(algebra.scalar(x))
            rows.append(tuple(row))
        if rows and len({len(r) for r in rows}) != 1:
            raise ShapeMismatch("ragged rows")
        self.algebra = algebra
        self.entries = tuple(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    @classmethod
    def identity(cls, algebra: Algebra, n: int) -> "AlgebraMatrix":
        return cls(algebra, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, algebra: Algebra, r: int, c: int) -> "AlgebraMatrix":
        return cls(algebra, [[0] * c for _ in range(r)])

    @classmethod
    def diag(cls, algebra: Algebra, items: Sequence) -> "AlgebraMatrix":
        n = len(items)
        return cls(algebra, [[items[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def row(cls, algebra, items) -> "AlgebraMatrix":
        return cls(algebra, [list(items)])

    @classmethod
    def column(cls, algebra, items) -> "AlgebraMatrix":
        return cls(algebra, [[x] for x in items])

    def __getitem__(self, ij) -> Element:
        i, j = ij
        return self.entries[i][j]

    def _check(self, other: "AlgebraMatrix"):
        if other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra} vs {other.algebra}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return AlgebraMatrix(self.algebra, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return AlgebraMatrix(self.algebra, [[-a for a in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        self._check(other)
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = self.algebra.zero()
                for k in range(m):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return AlgebraMatrix(self.algebra, out)

    def __mul__(self, other):
        if isinstance(other, AlgebraMatrix):
            return self @ other
        if isinstance(other, (int, Fraction, Element)):
            return AlgebraMatrix(self.algebra, [[a * other for a in r] for r in self.entries])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Element)):
            return AlgebraMatrix(self.algebra, [[other * a for a in r] for r in self.entries])
        return NotImplemented

    def transpose(self) -> "AlgebraMatrix":
        n, m = self.shape
        return AlgebraMatrix(self.algebra, [[self.entries[i][j] for i in range(n)] for j in range(m)])

    T = property(transpose)

    def map(self, f, target: Algebra | None = None) -> "AlgebraMatrix":
        return matrix_map(f, self, target)

    def __eq__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return self.algebra == other.algebra and self.entries == other.entries

    def __hash__(self):
        return hash((self.algebra, self.entries))

    def diff(self, other: "AlgebraMatrix") -> list[tuple[int, int, Element, Element]]:
        """Entries where the two matrices disagree."""
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return [
            (i, j, a, b)
            for i, (r, s) in enumerate(zip(self.entries, other.entries))
            for j, (a, b) in enumerate(zip(r, s))
            if a != b
        ]

    def is_identity(self) -> bool:
        n, m = self.shape
        return n == m and self == AlgebraMatrix.identity(self.algebra, n)

    def to_lists(self) -> list[list[str]]:
        return [[str(a) for a in r] for r in self.entries]

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self.entries)
        return f"Matrix[{self.algebra.name}]({rows})"


def matrix_map(f, m: AlgebraMatrix, target: Algebra | None = None) -> AlgebraMatrix:
    """Apply f entrywise.  A `Morphism` is checked against the entry algebra."""
    if isinstance(f, Morphism):
        if f.source != m.algebra:
            raise AlgebraMismatch(f"morphism from {f.source}, matrix over {m.algebra}")
        target = f.target
    rows = [[f(a) for a in r] for r in m.entries]
    if target is None:
        target = rows[0][0].algebra if rows and rows[0] else m.algebra
    return AlgebraMatrix(target, rows)


def invert_matrix(m: AlgebraMatrix) -> AlgebraMatrix:
    """Gauss-Jordan inversion using unit pivots (c*g with g group-like).

    Works whenever each elimination step finds a unit among the remaining
    entries of its column; the result is verified on both sides.
    """
    n, k = m.shape
    if n != k:
        raise ShapeMismatch("inverse of a non-square matrix")
    alg = m.algebra
    a = [list(r) for r in m.entries]
    inv = [list(r) for r in AlgebraMatrix.identity(alg, n).entries]
    row_of: dict[int, int] = {}
    for _ in range(n):
        pivot = None
        for j in range(n):
            if j in row_of:
                continue
            for i in range(n):
                if i in row_of.values():
                    continue
                if a[i][j].is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            raise NotInvertible("no unit pivot available")
        i, j = pivot
        p_inv = a[i][j].inverse()
        a[i] = [p_inv * x for x in a[i]]
        inv[i] = [p_inv * x for x in inv[i]]
        for r in range(n):
            if r != i and a[r][j].terms:
                f = a[r][j]
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[i])]
        row_of[j] = i
    # row_of[j] = i means row i now holds the unit vector e_j
    rows = [inv[row_of[j]] for j in range(n)]
    result = AlgebraMatrix(alg, rows)
    if not (m @ result).is_identity() or not (result @ m).is_identity():
        raise NotInvertible("elimination did not produce a two-sided inverse")
    return result
