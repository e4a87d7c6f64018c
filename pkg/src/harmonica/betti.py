"""Explicit Betti realization: rank-3 matrices over k[F2 x F2].

Notation: X_i stands for X_i (x) 1 and Y_i for 1 (x) X_i in V^B (x) V^B.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .algebra import VB, VB2, Alphabet, Element, GroupAlgebra, op, tensor_product
from .bfs import BfsObject, FiltrationData, MatrixRepresentation, delta
from .magnus import filtration_degree
from .matrix import AlgebraMatrix, invert_matrix, matrix_map

X0, X1 = VB.gen("X0"), VB.gen("X1")
_X0, _X1, _Y0, _Y1 = (VB2.gen(n) for n in ("X0", "X1", "Y0", "Y1"))
E_BETTI = X1 - 1


def _source_generators() -> dict[str, AlgebraMatrix]:
    Yc = _Y1**-1 * _Y0 * _Y1  # Y1^-1 Y0 Y1
    rho_x0 = AlgebraMatrix(VB2, [
        [_X0, 0, 0],
        [0, (1 - _X1) * _X0 + Yc, (1 - _X1) * _X0 * _X1],
        [0, _X0 - Yc * _X1**-1, _X0 * _X1],
    ])
    rho_x1 = AlgebraMatrix(VB2, [
        [(_X1 - 1) * _Y1 + 1, _Y1 * (1 - _Y1), 0],
        [1 - _X1, _Y1, 0],
        [0, 0, 1],
    ])
    return {"X0": rho_x0, "X1": rho_x1}


@lru_cache(maxsize=None)
def source_rho() -> MatrixRepresentation:
    """The source matrices for X0, X1 with inverse images derived by inversion."""
    gens = _source_generators()
    images = {}
    for i, name in enumerate(("X0", "X1")):
        images[(0, i + 1)] = gens[name]
        images[(0, -(i + 1))] = invert_matrix(gens[name])
    return MatrixRepresentation(VB, VB2, 3, images)


def _conjugator() -> tuple[AlgebraMatrix, AlgebraMatrix]:
    d = [_Y1, _X1, (_X0 * _X1) ** -1 * _Y1**-1 * _Y0 * _Y1]
    return AlgebraMatrix.diag(VB2, d), AlgebraMatrix.diag(VB2, [x.inverse() for x in d])


def rurho_composite(v: Element) -> AlgebraMatrix:
    """D^-1 . op(transpose(rho(op v))) . D, evaluated directly."""
    D, D_inv = _conjugator()
    m = source_rho()(op(v)).transpose()
    return D_inv @ matrix_map(op, m, VB2) @ D


@lru_cache(maxsize=None)
def rurho_table() -> MatrixRepresentation:
    images = {}
    for i in range(2):
        for s in (1, -1):
            images[(0, s * (i + 1))] = rurho_composite(VB.letter(0, i, s))
    return MatrixRepresentation(VB, VB2, 3, images)


def rurho(v: Element) -> AlgebraMatrix:
    """Multiplicative extension of the generator images."""
    return rurho_table()(v)


RUROW = AlgebraMatrix.row(VB2, [_Y1, -_X1 * _Y1, 0])
RUCOL = AlgebraMatrix.column(VB2, [_Y1**-1 * (_X1 - 1), _Y1**-1 * (1 - _Y1), 0])


def betti_object(truncation: int = 4) -> BfsObject:
    deg_b = lambda x: filtration_degree(x, truncation)
    return BfsObject(
        name="O^B_mat",
        source=VB,
        target=VB2,
        n=3,
        rho=rurho,
        e=E_BETTI,
        row=RUROW,
        col=RUCOL,
        generators=[X0, X1, X0**-1, X1**-1],
        filtration=FiltrationData(deg_b, deg_b, [X0 - 1, X1 - 1, X0**-1 - 1, X1**-1 - 1]),
    )


def delta_OB(b: Element) -> Element:
    return (RUROW @ rurho(b) @ RUCOL)[0, 0]


def convention_sum(f: Callable[[int], Element], p: int, q: int, zero: Element) -> Element:
    """sum_{k=p}^{q} f(k), extended by -f(p-1) - ... - f(q+1) when q < p-1."""
    acc = zero
    if q >= p:
        for k in range(p, q + 1):
            acc = acc + f(k)
    elif q < p - 1:
        for k in range(q + 1, p):
            acc = acc - f(k)
    return acc


def _gen_n(n: int) -> Element:
    return X0**n * (X1 - 1)


def delta_WB_generator(kind) -> Element:
    """Closed form on the generators X1^-1 (kind='inv_X1') and X0^n (X1-1)."""
    if kind == "inv_X1":
        return tensor_product(X1**-1, X1**-1, VB2)
    n = int(kind)
    g = _gen_n(n)
    head = tensor_product(g, VB.one(), VB2) + tensor_product(VB.one(), g, VB2)
    tail = convention_sum(lambda k: tensor_product(_gen_n(k), _gen_n(n - k), VB2), 1, n - 1, VB2.zero())
    return head - tail


# --- W^B membership ---------------------------------------------------------

def _strip_x1(word: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Split a word as rep . X1^k with rep not ending in X1^{+-1}."""
    k = 0
    w = list(word)
    while w and abs(w[-1]) == 2:
        k += 1 if w[-1] > 0 else -1
        w.pop()
    return tuple(w), k


@dataclass(frozen=True)
class WBDecomposition:
    member: bool
    constant: object = 0
    quotient: Element | None = None
    obstruction: object = None

    def recompose(self) -> Element:
        return self.quotient * (X1 - 1) + self.constant


def wb_membership_single(v: Element) -> WBDecomposition:
    if v.algebra != VB:
        raise TypeError("expects an element of V^B")
    cosets: dict = defaultdict(dict)
    for (w,), c in v.terms.items():
        rep, k = _strip_x1(w)
        cosets[rep][k] = c
    bad = {rep: sum(cs.values()) for rep, cs in cosets.items() if rep and sum(cs.values()) != 0}
    if bad:
        rep = min(bad, key=lambda r: (len(r), r))
        return WBDecomposition(False, obstruction=(VB.format_key((rep,)), bad[rep]))
    lam = sum(cosets.get((), {}).values()) if () in cosets else 0
    q_terms = {}
    for rep, cs in cosets.items():
        cs = dict(cs)
        if rep == ():
            cs[0] = cs.get(0, 0) - lam
        lo, hi = min(cs), max(cs)
        run = 0
        for j in range(lo, hi + 1):
            run -= cs.get(j, 0)
            if run:
                q_terms[(rep + ((2,) * j if j > 0 else (-2,) * (-j)),)] = run
    return WBDecomposition(True, lam, VB.element(q_terms))


@dataclass(frozen=True)
class WBTensorDecomposition:
    """v = c + A(X1-1) (x) 1 + 1 (x) B(X1-1) + C.((X1-1) (x) (X1-1))."""

    member: bool
    constant: object = 0
    left: Element | None = None
    right: Element | None = None
    both: Element | None = None
    obstruction: object = None

    def recompose(self) -> Element:
        e = X1 - 1
        return (
            VB2.scalar(self.constant)
            + tensor_product(self.left * e, VB.one(), VB2)
            + tensor_product(VB.one(), self.right * e, VB2)
            + self.both * tensor_product(e, e, VB2)
        )


def _slices(v: Element, side: int) -> dict:
    """Group a V^B (x) V^B element by the word of one side."""
    out: dict = defaultdict(dict)
    for (a, b), c in v.terms.items():
        if side == 1:
            out[b][(a,)] = c
        else:
            out[a][(b,)] = c
    return {k: VB.element(t) for k, t in out.items()}


def wb_membership_tensor(v: Element) -> WBTensorDecomposition:
    if v.algebra != VB2:
        raise TypeError("expects an element of V^B (x) V^B")
    # first factor: v = sum_y (lam_y + q_y (X1-1)) (x) y
    lam_part: dict = {}
    q_part = VB2.zero()
    for y, vy in _slices(v, 1).items():
        d = wb_membership_single(vy)
        if not d.member:
            return WBTensorDecomposition(False, obstruction=("left factor", d.obstruction))
        if d.constant:
            lam_part[(y,)] = d.constant
        q_part = q_part + tensor_product(d.quotient, VB.basis_element((y,)), VB2)
    d2 = wb_membership_single(VB.element(lam_part))
    if not d2.member:
        return WBTensorDecomposition(False, obstruction=("right factor", d2.obstruction))
    # q_part = sum_x x (x) u_x with each u_x in W^B
    left = VB.zero()
    both = VB2.zero()
    for x, ux in _slices(q_part, 0).items():
        d = wb_membership_single(ux)
        if not d.member:
            return WBTensorDecomposition(False, obstruction=("right factor", d.obstruction))
        left = left + VB.basis_element((x,)).scale(d.constant)
        both = both + tensor_product(VB.basis_element((x,)), d.quotient, VB2)
    return WBTensorDecomposition(True, d2.constant, left, d2.quotient, both)


def wb_membership(v: Element):
    return wb_membership_single(v) if v.algebra == VB else wb_membership_tensor(v)


def delta_W(w: Element) -> Element:
    """The coproduct on W^B: lam + v(X1-1) -> lam + Delta_OB(v)."""
    d = wb_membership_single(w)
    if not d.member:
        raise ValueError(f"{w} is not in W^B")
    return delta_OB(d.quotient) + d.constant


# --- coassociativity in triple tensors ---------------------------------------

VB3 = GroupAlgebra("VB3", Alphabet((("X0", "X1"), ("Y0", "Y1"), ("Z0", "Z1"))))


def _delta_on_slot(t: Element, slot: int) -> Element:
    """Apply delta_W to one tensor slot of a V^B (x) V^B element, landing in VB3."""
    acc = VB3.zero()
    for x, ux in _slices(t, 1 - slot).items():
        dx = delta_W(ux)
        for (a, b), c in dx.terms.items():
            key = (a, b, x) if slot == 0 else (x, a, b)
            acc = acc + VB3.basis_element(key).scale(c)
    return acc


def coassociativity_defect(w: Element) -> Element:
    """(Delta (x) id) Delta (w) - (id (x) Delta) Delta (w); zero when coassociative."""
    d = delta_W(w)
    return _delta_on_slot(d, 0) - _delta_on_slot(d, 1)
