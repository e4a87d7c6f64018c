"""Bimodule-factorization structures (BFS).

A BFS bundles an algebra map rho: B -> M_n(A), a distinguished element e of
B, a row r and a column c over A such that rho(e) = c r.  It induces a
coproduct-like map Delta(b) = r rho(b) c on the algebra (K + B, dot_e) with
(l, b) . (l', b') = (l l', l b' + l' b + b e b').
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import Algebra, AlgebraMismatch, Element, linear_extension
from .magnus import Unbounded, at_least
from .matrix import AlgebraMatrix, invert_matrix, matrix_map


class MatrixRepresentation:
    """Algebra map B -> M_n(A) determined by images of basis letters.

    ``images`` maps (factor, letter code) to matrices, as for
    `word_homomorphism`; group algebras need images of inverse letters too.
    """

    def __init__(self, source: Algebra, target: Algebra, n: int, images: Mapping[tuple[int, int], AlgebraMatrix]):
        self.source, self.target, self.n = source, target, n
        self.images = dict(images)
        self._cache: dict = {}

    def on_key(self, key) -> AlgebraMatrix:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not any(key):
            m = AlgebraMatrix.identity(self.target, self.n)
        else:
            # peel the last letter of the last nonempty factor
            fi = max(i for i, w in enumerate(key) if w)
            rest = tuple(w[:-1] if i == fi else w for i, w in enumerate(key))
            m = self.on_key(rest) @ self.images[(fi, key[fi][-1])]
        self._cache[key] = m
        return m

    def __call__(self, b: Element) -> AlgebraMatrix:
        if b.algebra != self.source:
            raise AlgebraMismatch(f"representation of {self.source}, got {b.algebra}")
        acc = AlgebraMatrix.zeros(self.target, self.n, self.n)
        for k, c in b.terms.items():
            acc = acc + self.on_key(k) * c
        return acc


@dataclass
class FiltrationData:
    """Degree functions on B and A and generators of the first filtered piece of B."""

    degree_b: Callable[[Element], object]
    degree_a: Callable[[Element], object]
    f1_generators: Sequence[Element]


@dataclass
class GradingData:
    """Homogeneous generators of B in degree 1 (A is graded by monomial length)."""

    degree1_generators: Sequence[Element]


@dataclass
class BfsObject:
    name: str
    source: Algebra
    target: Algebra
    n: int
    rho: Callable[[Element], AlgebraMatrix]
    e: Element
    row: AlgebraMatrix
    col: AlgebraMatrix
    generators: Sequence[Element] = ()
    filtration: FiltrationData | None = None
    grading: GradingData | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.row.shape != (1, self.n) or self.col.shape != (self.n, 1):
            raise ValueError(f"row/col shapes {self.row.shape}, {self.col.shape} do not match rank {self.n}")
        if self.e.algebra != self.source:
            raise AlgebraMismatch("e must lie in the source algebra")


@dataclass
class CheckOutcome:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def check_factorization(o: BfsObject) -> CheckOutcome:
    """rho(e) == col . row, reporting differing entries on failure."""
    lhs = o.rho(o.e)
    rhs = o.col @ o.row
    bad = lhs.diff(rhs)
    return CheckOutcome(not bad, [(i, j, str(a), str(b)) for i, j, a, b in bad] or None)


def delta(o: BfsObject, b: Element) -> Element:
    return (o.row @ o.rho(b) @ o.col)[0, 0]


def delta_unital(o: BfsObject, lam, b: Element) -> Element:
    """Delta on K + B: the unit goes to 1."""
    return o.target.scalar(lam) + delta(o, b)


def dot_e(o: BfsObject, x: tuple, y: tuple) -> tuple:
    (l1, b1), (l2, b2) = x, y
    return (l1 * l2, b2.scale(l1) + b1.scale(l2) + b1 * o.e * b2)


def check_delta_multiplicative(o: BfsObject, x: tuple, y: tuple) -> CheckOutcome:
    """Delta(x . y) = Delta(x) Delta(y) on K + B."""
    l, b = dot_e(o, x, y)
    lhs = delta_unital(o, l, b)
    rhs = delta_unital(o, *x) * delta_unital(o, *y)
    return CheckOutcome(lhs == rhs, None if lhs == rhs else {"lhs": str(lhs), "rhs": str(rhs)})


@dataclass
class BimoduleIso:
    """Coordinates of an identification between two BFS.

    g: B -> B' and g_inv its inverse, f: A -> A' an algebra map, and P an
    invertible n x n matrix over A' with phi(v) = P f(v) on columns.
    """

    g: Callable[[Element], Element]
    g_inv: Callable[[Element], Element]
    f: Callable[[Element], Element]
    P: AlgebraMatrix
    source: Algebra
    target: Algebra


def pullback(o: BfsObject, iso: BimoduleIso, name: str | None = None) -> BfsObject:
    """Transport a BFS along an identification: rho' = P f(rho(g^-1 .)) P^-1,
    e' = g(e), row' = f(row) P^-1, col' = P f(col)."""
    P = iso.P
    P_inv = invert_matrix(P)
    tgt = iso.target

    def rho(b: Element) -> AlgebraMatrix:
        return P @ matrix_map(iso.f, o.rho(iso.g_inv(b)), tgt) @ P_inv

    return BfsObject(
        name=name or f"pullback({o.name})",
        source=iso.source,
        target=tgt,
        n=o.n,
        rho=rho,
        e=iso.g(o.e),
        row=matrix_map(iso.f, o.row, tgt) @ P_inv,
        col=P @ matrix_map(iso.f, o.col, tgt),
        generators=[iso.g(x) for x in o.generators],
    )


def _entries(m: AlgebraMatrix) -> Iterable[Element]:
    for r in m.entries:
        yield from r


def filtration_compliance(o: BfsObject) -> CheckOutcome:
    """e in F^1 B, col entries in F^1 A, rho(F^1 B) in M_n(F^1 A)."""
    fd = o.filtration
    if fd is None:
        raise ValueError(f"{o.name} carries no filtration data")
    problems = []
    if not at_least(fd.degree_b(o.e), 1):
        problems.append(("e", str(o.e)))
    for x in _entries(o.col):
        if not at_least(fd.degree_a(x), 1):
            problems.append(("col", str(x)))
    for b in fd.f1_generators:
        for x in _entries(o.rho(b)):
            if not at_least(fd.degree_a(x), 1):
                problems.append(("rho", str(b), str(x)))
    return CheckOutcome(not problems, problems or None)


def _homogeneous(x: Element, d: int) -> bool:
    return x.is_zero() or x.degrees() == {d}


def grading_compliance(o: BfsObject) -> CheckOutcome:
    """e in B_1, row entries in A_0, col entries in A_1, rho(B_1) in M_n(A_1)."""
    gd = o.grading
    if gd is None:
        raise ValueError(f"{o.name} carries no grading data")
    problems = []
    if not _homogeneous(o.e, 1):
        problems.append(("e", str(o.e)))
    for x in _entries(o.row):
        if not _homogeneous(x, 0):
            problems.append(("row", str(x)))
    for x in _entries(o.col):
        if not _homogeneous(x, 1):
            problems.append(("col", str(x)))
    for b in gd.degree1_generators:
        for x in _entries(o.rho(b)):
            if not _homogeneous(x, 1):
                problems.append(("rho", str(b), str(x)))
    return CheckOutcome(not problems, problems or None)


def representation_from_generators(source: Algebra, target: Algebra, n: int, gens: Mapping[str, AlgebraMatrix]) -> MatrixRepresentation:
    """Build a representation from images of named generators.

    For group algebras the inverse images must be supplied under the key
    ``name + "^-1"``.
    """
    images = {}
    for name, m in gens.items():
        base, inv = (name[:-3], True) if name.endswith("^-1") else (name, False)
        fi, gi = source.alphabet.locate(base)
        if source.kind == "group":
            images[(fi, -(gi + 1) if inv else gi + 1)] = m
        else:
            images[(fi, gi)] = m
    return MatrixRepresentation(source, target, n, images)


__all__ = [
    "BfsObject",
    "BimoduleIso",
    "CheckOutcome",
    "FiltrationData",
    "GradingData",
    "MatrixRepresentation",
    "Unbounded",
    "check_delta_multiplicative",
    "check_factorization",
    "delta",
    "delta_unital",
    "dot_e",
    "filtration_compliance",
    "grading_compliance",
    "linear_extension",
    "pullback",
    "representation_from_generators",
]
