import pytest
from hypothesis import given, strategies as st

from harmonica.algebra import VB, VB2, tensor_product
from harmonica.betti import (
    RUCOL,
    RUROW,
    coassociativity_defect,
    convention_sum,
    delta_OB,
    delta_W,
    delta_WB_generator,
    rurho,
    rurho_composite,
    wb_membership,
)
from harmonica.magnus import Unbounded, at_least, filtration_degree
from harmonica.matrix import AlgebraMatrix
from strategies import basis, elements, vb

X0, X1 = VB.gen("X0"), VB.gen("X1")
Xa, Xb, Ya, Yb = (VB2.gen(n) for n in ("X0", "X1", "Y0", "Y1"))
t = lambda a, b: tensor_product(a, b, VB2)
g = lambda n: X0**n * (X1 - 1)


def test_rurho_of_x0_minus_one_matches_the_display():
    want = AlgebraMatrix(VB2, [
        [Xa - 1, 0, 0],
        [0, (Xb * Yb) ** -1 * Ya * Yb - 1, (Xb * Yb) ** -1 * (1 - Xb**-1 * Xa**-1 * Ya) * Ya * Yb],
        [0, (Ya * Yb) ** -1 * Xa * (1 - Xb) * Ya * Yb, Xa - 1 + (1 - Xa * Xb**-1 * Xa**-1) * Yb**-1 * Ya * Yb],
    ])
    assert rurho(X0 - 1) == want


def test_rurho_of_x1_minus_one():
    got = rurho(X1 - 1)
    assert got == AlgebraMatrix(VB2, [[Xb - 1, Xb * (1 - Xb), 0], [1 - Yb, Xb * (Yb - 1), 0], [0, 0, 0]])
    assert got == RUCOL @ RUROW


def test_printed_corner_entry_is_inconsistent_with_factorization():
    # the corner entry X1 (X1 - 1) Y1^-1 cannot equal (rucol . rurow)[0, 0] = X1 - 1
    printed = Xb * (Xb - 1) * Yb**-1
    assert (RUCOL @ RUROW)[0, 0] != printed
    assert rurho(X1 - 1)[0, 0] != printed


def test_rurho_of_unit_is_identity():
    assert rurho(VB.one()).is_identity()


@given(basis(VB, 5))
def test_two_path_agreement(w):
    assert rurho(w) == rurho_composite(w)


@given(vb)
def test_rurho_entries_of_augmentation_ideal_have_degree_one(v):
    x = v * (X0 - 1)
    for row in rurho(x).entries:
        for e in row:
            assert at_least(filtration_degree(e, 3), 1)


def test_delta_of_x0_is_primitive_shape():
    assert delta_OB(X0) == t(g(1), VB.one()) + t(VB.one(), g(1))


def test_delta_of_unit():
    assert delta_OB(VB.one()) == t(X1, X1) - t(VB.one(), VB.one())


def test_delta_of_inverse_generator():
    assert -delta_OB(X1**-1) + 1 == t(X1**-1, X1**-1)


@pytest.mark.parametrize("n", range(-5, 6))
def test_delta_matches_closed_form(n):
    assert delta_OB(X0**n) == delta_WB_generator(n)


def test_closed_form_examples():
    assert delta_WB_generator("inv_X1") == t(X1**-1, X1**-1)
    assert delta_WB_generator(2) == t(g(2), VB.one()) + t(VB.one(), g(2)) - t(g(1), g(1))
    # sum_{k=1}^{-2} f(k) = -f(0) - f(-1)
    assert delta_WB_generator(-1) == t(g(-1), VB.one()) + t(VB.one(), g(-1)) + t(g(0), g(-1)) + t(g(-1), g(0))


def test_convention_sum():
    f = lambda k: VB.scalar(k)
    z = VB.zero()
    assert convention_sum(f, 1, 3, z) == 6
    assert convention_sum(f, 1, 0, z) == 0
    assert convention_sum(f, 1, -1, z) == 0  # -f(0)
    assert convention_sum(f, 1, -3, z) == 3  # -f(0) - f(-1) - f(-2)


def test_membership_examples():
    d = wb_membership(X1**-1)
    assert d.member and d.constant == 1 and d.quotient == -(X1**-1)
    assert not wb_membership(X0).member


@given(vb, st.integers(-5, 5))
def test_membership_roundtrip(v, lam):
    d = wb_membership(v * (X1 - 1) + lam)
    assert d.member and d.constant == lam and d.quotient == v
    assert d.recompose() == v * (X1 - 1) + lam


@given(vb)
def test_delta_lands_in_wb_tensor_wb(b):
    d = wb_membership(delta_OB(b))
    assert d.member
    assert d.recompose() == delta_OB(b)


def test_non_member_in_tensor_square():
    assert not wb_membership(t(X0, VB.one())).member


@pytest.mark.parametrize("w", [X1**-1] + [g(n) for n in range(-3, 4)], ids=str)
def test_coassociativity(w):
    assert coassociativity_defect(w).is_zero()


def test_delta_w_on_unit_and_generator():
    assert delta_W(VB.scalar(3)) == 3
    assert delta_W(g(0)) == delta_OB(VB.one())


@given(elements(VB, 2, 2), st.integers(0, 2))
def test_delta_raises_filtration(v, k):
    b = v * (X0 - 1) ** k
    N = 4
    db = filtration_degree(b, N)
    if isinstance(db, Unbounded) or db + 1 > N:
        return
    assert at_least(filtration_degree(delta_OB(b), N), db + 1)
