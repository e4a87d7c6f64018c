import pytest
from hypothesis import given, strategies as st

from harmonica.algebra import VB, VDR, VDR2, tensor_product
from harmonica.derham import (
    RCOL,
    RROW,
    coassociativity_defect,
    delta_ODR,
    delta_W,
    delta_WDR,
    gr_compare_betti,
    gr_delta_compare_lifted,
    in_wdr,
    rrho,
    rrho_composite,
)
from harmonica.magnus import gr_component
from harmonica.betti import RUCOL, RUROW, rurho
from harmonica.matrix import AlgebraMatrix
from strategies import basis, homogeneous

e0, e1 = VDR.gen("e0"), VDR.gen("e1")
E0, E1, F0, F1 = (VDR2.gen(n) for n in ("e0", "e1", "f0", "f1"))
EINF = -E0 - E1
t = lambda a, b: tensor_product(a, b, VDR2)
one = VDR.one()


def test_rrho_generators_match_displays():
    assert rrho(e1) == AlgebraMatrix(VDR2, [[E1, -E1, 0], [-F1, F1, 0], [0, 0, 0]])
    assert rrho(e0) == AlgebraMatrix(VDR2, [[E0, 0, 0], [0, -E1 + F0, -EINF - F0], [0, -E1, -EINF]])


def test_factorization():
    assert rrho(e1) == RCOL @ RROW


def test_rrho_product_is_degree_two():
    m = rrho(e0 * e1)
    assert m == rrho(e0) @ rrho(e1)
    assert all(x.is_zero() or x.degrees() == {2} for r in m.entries for x in r)


@given(basis(VDR, 5))
def test_two_path_agreement(w):
    assert rrho(w) == rrho_composite(w)


def test_delta_examples():
    assert delta_ODR(one) == t(e1, one) + t(one, e1)
    assert delta_ODR(e0) == t(e0 * e1, one) + t(one, e0 * e1) - t(e1, e1)
    assert delta_ODR(e0**2) == t(e0**2 * e1, one) + t(one, e0**2 * e1) - t(e1, e0 * e1) - t(e0 * e1, e1)


def test_closed_form_examples_and_domain():
    assert delta_WDR(0) == t(e1, one) + t(one, e1)
    assert delta_WDR(1) == t(e0 * e1, one) + t(one, e0 * e1) - t(e1, e1)
    with pytest.raises(ValueError):
        delta_WDR(-1)


@pytest.mark.parametrize("n", range(9))
def test_delta_matches_closed_form(n):
    assert delta_ODR(e0**n) == delta_WDR(n)


@given(st.integers(0, 4).flatmap(lambda d: homogeneous(VDR, d)))
def test_delta_shifts_degree_by_one(v):
    d = v.degrees().pop()
    out = delta_ODR(v)
    assert out.is_zero() or out.degrees() == {d + 1}


@given(basis(VDR, 3), basis(VDR, 3))
def test_morphism_law_on_monomials(u, v):
    assert delta_ODR(u * e1 * v) == delta_ODR(u) * delta_ODR(v)


@pytest.mark.parametrize("n", range(5))
def test_coassociativity(n):
    assert coassociativity_defect(e0**n * e1).is_zero()


def test_wdr_membership_is_syntactic():
    assert in_wdr(e0 * e1 + 3)
    assert not in_wdr(e1 * e0)
    with pytest.raises(ValueError):
        delta_W(e0)
    assert delta_W(e0 * e1 + 2) == delta_ODR(e0) + 2


def test_graded_comparison_examples():
    Y1, X1 = RUCOL.algebra.gen("Y1"), RUCOL.algebra.gen("X1")
    assert gr_component(Y1**-1 * (X1 - 1), 1, 4) == E1
    entry = rurho(VB.gen("X0") - 1)[1, 1]
    assert gr_component(entry, 1, 4) == -E1 + F0
    assert [gr_component(RUROW[0, j], 0, 4) for j in range(3)] == [VDR2.scalar(1), VDR2.scalar(-1), VDR2.zero()]


@pytest.mark.parametrize("N", [2, 3, 4])
def test_graded_comparison_of_objects(N):
    rep = gr_compare_betti(N)
    assert rep.ok, [i for i in rep.items if not i["ok"]]


def test_graded_comparison_rejects_small_truncation():
    with pytest.raises(ValueError):
        gr_compare_betti(1)


def test_graded_delta_on_lifted_generators():
    rep = gr_delta_compare_lifted(4)
    assert rep.ok, [i for i in rep.items if not i["ok"]]
