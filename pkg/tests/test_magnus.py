import pytest
from hypothesis import assume, given

from harmonica.algebra import VB, VB2, VDR, VDR2
from harmonica.magnus import Unbounded, at_least, filtration_degree, gr_component, leading_class, magnus
from strategies import basis, elements, vb2

X0, X1 = VB.gen("X0"), VB.gen("X1")
e0, e1 = VDR.gen("e0"), VDR.gen("e1")
N = 4


def test_generator_images():
    assert magnus(X0, N).body == 1 + e0
    assert magnus(X0**-1, N).body == 1 - e0 + e0**2 - e0**3 + e0**4
    assert magnus(X0**-1, 2).body == 1 - e0 + e0**2


def test_commutator_starts_in_degree_two():
    c = X0 * X1 * X0**-1 * X1**-1
    deg, cls = leading_class(c - 1, N)
    assert deg == 2
    assert cls == e0 * e1 - e1 * e0


def test_degrees_of_products_of_augmentation_elements():
    x = (X0 - 1) * (X1 - 1) * (X0**-1 - 1)
    assert filtration_degree(x, N) == 3
    assert gr_component(x, 3, N) == -(e0 * e1 * e0)


def test_unbounded_markers():
    assert filtration_degree(VB.zero(), N) is Unbounded.ZERO
    assert filtration_degree((X0 - 1) ** 5, N) is Unbounded.EXCEEDS
    assert at_least(Unbounded.EXCEEDS, 100)


def test_gr_component_requires_degree():
    with pytest.raises(ValueError):
        gr_component(X0, 1, N)
    with pytest.raises(ValueError):
        gr_component(X0 - 1, 5, N)


def test_tensor_square_factors_commute_in_graded():
    X, Y = VB2.gen("X1"), VB2.gen("Y1")
    assert magnus(X * Y - 1, N).component(2) == VDR2.gen("e1") * VDR2.gen("f1")


@given(vb2, vb2)
def test_magnus_is_multiplicative(a, b):
    assert magnus(a * b, N).body == (magnus(a, N).body * magnus(b, N).body).truncate(N)


@given(basis(VB2, 3), basis(VB2, 3))
def test_degree_one_identities(g, h):
    one = lambda x: magnus(x, N).component(1)
    assert magnus(g, N).component(0) == 1
    assert one(g * h - 1) == one(g - 1) + one(h - 1)
    assert one(g.inverse() - 1) == -one(g - 1)


@given(elements(VB2, 2, 2), elements(VB2, 2, 2), basis(VB2, 2), basis(VB2, 2))
def test_filtration_degree_is_superadditive(a, b, g, h):
    a, b = a * (g - 1), b * (h - 1)
    da, db = filtration_degree(a, N), filtration_degree(b, N)
    assume(not isinstance(da, Unbounded) and not isinstance(db, Unbounded) and da + db <= N)
    assert at_least(filtration_degree(a * b, N), da + db)
