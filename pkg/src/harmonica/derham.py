"""Explicit de Rham realization over the tensor algebra of f2 + f2, and the
graded comparison with the Betti object."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import VDR, VDR2, Alphabet, Element, TensorAlgebra, antipode, tensor_product
from .bfs import BfsObject, GradingData, MatrixRepresentation
from .betti import RUCOL, RUROW, X0, X1, delta_WB_generator, rurho
from .betti import delta_W as delta_WB
from .magnus import filtration_degree, gr_component, magnus
from .matrix import AlgebraMatrix, matrix_map

e0, e1 = VDR.gen("e0"), VDR.gen("e1")
_e0, _e1, _f0, _f1 = (VDR2.gen(n) for n in ("e0", "e1", "f0", "f1"))
_einf = -_e0 - _e1
E_DERHAM = e1


def _source_generators() -> dict[str, AlgebraMatrix]:
    rho_e0 = AlgebraMatrix(VDR2, [
        [_e0, 0, 0],
        [0, -_e1 + _f0, -_e1],
        [0, -_einf - _f0, -_einf],
    ])
    rho_e1 = AlgebraMatrix(VDR2, [
        [_e1, -_f1, 0],
        [-_e1, _f1, 0],
        [0, 0, 0],
    ])
    return {"e0": rho_e0, "e1": rho_e1}


@lru_cache(maxsize=None)
def source_rho() -> MatrixRepresentation:
    g = _source_generators()
    return MatrixRepresentation(VDR, VDR2, 3, {(0, 0): g["e0"], (0, 1): g["e1"]})


def rrho_composite(v: Element) -> AlgebraMatrix:
    """S(transpose(rho(S v))) entrywise."""
    return matrix_map(antipode, source_rho()(antipode(v)).transpose(), VDR2)


@lru_cache(maxsize=None)
def rrho_table() -> MatrixRepresentation:
    return MatrixRepresentation(VDR, VDR2, 3, {(0, i): rrho_composite(VDR.letter(0, i)) for i in range(2)})


def rrho(v: Element) -> AlgebraMatrix:
    return rrho_table()(v)


RROW = AlgebraMatrix.row(VDR2, [1, -1, 0])
RCOL = AlgebraMatrix.column(VDR2, [_e1, -_f1, 0])


def derham_object() -> BfsObject:
    return BfsObject(
        name="O^DR_mat",
        source=VDR,
        target=VDR2,
        n=3,
        rho=rrho,
        e=E_DERHAM,
        row=RROW,
        col=RCOL,
        generators=[e0, e1],
        grading=GradingData([e0, e1]),
    )


def delta_ODR(v: Element) -> Element:
    return (RROW @ rrho(v) @ RCOL)[0, 0]


def delta_WDR(n: int) -> Element:
    """Closed form on e0^n e1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    g = lambda k: e0**k * e1
    acc = tensor_product(g(n), VDR.one(), VDR2) + tensor_product(VDR.one(), g(n), VDR2)
    for k in range(n):
        acc = acc - tensor_product(g(k), g(n - k - 1), VDR2)
    return acc


def in_wdr(v: Element) -> bool:
    """K + V^DR e1: every non-constant monomial ends in e1."""
    return all(not w[0] or w[0][-1] == 1 for w in v.terms)


def delta_W(w: Element) -> Element:
    """Coproduct on W^DR: lam + v e1 -> lam + Delta_ODR(v)."""
    if not in_wdr(w):
        raise ValueError(f"{w} is not in W^DR")
    lam = w.constant()
    v = VDR.element(((k[0][:-1],), c) for k, c in w.terms.items() if k[0])
    return delta_ODR(v) + lam


VDR3 = TensorAlgebra("VDR3", Alphabet((("e0", "e1"), ("f0", "f1"), ("g0", "g1"))))


def coassociativity_defect(w: Element) -> Element:
    d = delta_W(w)
    acc = VDR3.zero()
    for (a, b), c in d.terms.items():
        for (p, q), c2 in delta_W(VDR.basis_element((a,))).terms.items():
            acc = acc + VDR3.basis_element((p, q, b)).scale(c * c2)
        for (p, q), c2 in delta_W(VDR.basis_element((b,))).terms.items():
            acc = acc - VDR3.basis_element((a, p, q)).scale(c * c2)
    return acc


# --- graded comparison with the Betti side -----------------------------------

@dataclass
class ComparisonReport:
    ok: bool = True
    items: list = field(default_factory=list)

    def add(self, label: str, got, want):
        same = got == want
        self.ok &= same
        self.items.append({"item": label, "ok": same, "got": str(got), "want": str(want)})


def gr_compare_betti(N: int = 4) -> ComparisonReport:
    """gr0(rurow) = rrow, gr1(rucol) = rcol, gr1(rurho(X_i - 1)) = rrho(e_i)."""
    if N < 2:
        raise ValueError("N must be >= 2")
    rep = ComparisonReport()
    for j in range(3):
        rep.add(f"row[{j}]", gr_component(RUROW[0, j], 0, N), RROW[0, j])
        rep.add(f"col[{j}]", gr_component(RUCOL[j, 0], 1, N), RCOL[j, 0])
    for gen, dr in ((X0, e0), (X1, e1)):
        b = rurho(gen - 1)
        d = rrho(dr)
        for i in range(3):
            for j in range(3):
                rep.add(f"rho({dr})[{i},{j}]", gr_component(b[i, j], 1, N), d[i, j])
    return rep


def gr_delta_compare(N: int = 4) -> ComparisonReport:
    """Degree-(n+1) Magnus component of Delta^{W,B}(X0^n (X1-1)) against
    Delta^{W,DR}(e0^n e1), 0 <= n <= N-1, read literally."""
    if N < 2:
        raise ValueError("N must be >= 2")
    rep = ComparisonReport()
    for n in range(N):
        got = magnus(delta_WB_generator(n), N).component(n + 1)
        rep.add(f"n={n}", got, delta_WDR(n))
    inv = delta_WB_generator("inv_X1")
    rep.add("inv_X1 degree 0", magnus(inv, N).component(0), VDR2.one())
    return rep


def betti_lift_of_generator(n: int) -> Element:
    """(X0 - 1)^n (X1 - 1): a W^B element whose leading class is e0^n e1."""
    return (X0 - 1) ** n * (X1 - 1)


def gr_delta_compare_lifted(N: int = 4) -> ComparisonReport:
    """gr of Delta^{W,B} on the lift (X0-1)^n (X1-1) of e0^n e1: the class in
    degree n+1 equals Delta^{W,DR}(e0^n e1)."""
    rep = ComparisonReport()
    for n in range(N):
        w = betti_lift_of_generator(n)
        d = delta_WB(w)
        deg = filtration_degree(d, N)
        rep.add(f"n={n} degree", deg, n + 1)
        rep.add(f"n={n}", magnus(d, N).component(n + 1), delta_WDR(n))
    return rep


__all__ = [
    "RCOL",
    "RROW",
    "ComparisonReport",
    "delta_ODR",
    "delta_W",
    "delta_WDR",
    "derham_object",
    "gr_compare_betti",
    "gr_delta_compare",
    "gr_delta_compare_lifted",
    "in_wdr",
    "rrho",
    "rrho_composite",
]
