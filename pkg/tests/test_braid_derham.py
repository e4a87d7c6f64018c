import pytest
from hypothesis import assume, given, strategies as st

from harmonica import braid_betti as bb, braid_derham as bd
from harmonica.algebra import VDR, VDR2, antipode
from harmonica.derham import rrho
from harmonica.magnus import Unbounded
from strategies import basis, elements, homogeneous, p5, up5

UP5 = bd.UP5
t15, t25, t35 = bd.T_GENS
e0, e1 = bd.u_e0, bd.u_e1
br = bd.bracket


def test_derivations_read_from_theta():
    assert e0 * t15 - t15 * e0 == 0
    assert e0 * t25 - t25 * e0 == br(t25, t35)
    assert e0 * t35 - t35 * e0 == br(t35, t25)
    assert e1 * t15 - t15 * e1 == br(t15, t25)
    assert e1 * t25 - t25 * e1 == br(t25, t15)
    assert e1 * t35 - t35 * e1 == 0


def test_e0_times_t25_normal_form():
    assert e0 * t25 == t25 * t35 + t25 * e0 - t35 * t25


@given(up5, up5, up5)
def test_twisted_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(up5, up5)
def test_antipode_is_an_antiautomorphism(a, b):
    assert antipode(a * b) == antipode(b) * antipode(a)
    assert antipode(antipode(a)) == a


def test_antipode_negates_generators():
    for x in (t15, t25, t35, e0, e1):
        assert antipode(x) == -x


def test_definitions_and_relators_vanish():
    assert all(v.is_zero() for v in bd.definition_defects().values())
    assert all(v.is_zero() for v in bd.infinitesimal_relators().values())


def test_named_t_generators():
    assert UP5.gen("t12") == e1 and UP5.gen("t23") == e0
    g = bd.infinitesimal_generators()
    assert t35 == -(g["t13"] + g["t23"] + g["t34"])


@pytest.mark.parametrize("which", ["pr1", "pr2", "pr5"])
def test_projection_table(which):
    for n, v in bd.infinitesimal_generators().items():
        assert bd.u_project(which, v) == bd.LIE_PR_TABLE[which][n]


def test_pr12_of_t25():
    assert bd.u_project("pr12", t25) == VDR2.gen("e1")


@given(up5, up5)
def test_projections_are_multiplicative(a, b):
    for which in ("pr1", "pr2", "pr5", "pr12"):
        assert bd.u_project(which, a * b) == bd.u_project(which, a) * bd.u_project(which, b)


@given(elements(VDR, 3))
def test_section_splits_pr5(v):
    assert bd.u_project("pr5", bd.u_ell(v)) == v


@given(up5, up5, up5)
def test_lie_decomposition_roundtrip(a, b, c):
    k = bd.lie_recompose((a, b, c))
    assert bd.lie_decompose(k) == (a, b, c)


def test_lie_decompose_rejects_non_kernel():
    with pytest.raises(bd.NotInKernel):
        bd.lie_decompose(e0)


@given(elements(UP5, 2, 2), elements(UP5, 2, 2))
def test_lie_rvarpi_is_multiplicative(a, b):
    assert bd.lie_rvarpi(a * b) == bd.lie_rvarpi(a) @ bd.lie_rvarpi(b)


@given(up5)
def test_lie_rvarpi_via_varpi(p):
    assert bd.lie_rvarpi_via_varpi(p) == bd.lie_rvarpi(p)


@given(elements(UP5, 2, 2), elements(UP5, 2, 2))
def test_lie_varpi_is_multiplicative(a, b):
    assert bd.lie_varpi(a * b) == bd.lie_varpi(a) @ bd.lie_varpi(b)


def test_geometric_rrho_on_generators():
    for v in (VDR.gen("e0"), VDR.gen("e1")):
        assert bd.rrho_geometric(v) == rrho(v)


@given(basis(VDR, 3))
def test_geometric_rrho_on_monomials(w):
    assert bd.rrho_geometric(w) == rrho(w)


@st.composite
def filtered_p5(draw):
    x = draw(p5)
    for _ in range(draw(st.integers(0, 2))):
        x = x * (draw(basis(bb.P5, 2)) - 1)
    return x


@given(filtered_p5(), filtered_p5())
def test_twisted_product_is_graded_product(a, b):
    N = 4
    da, db = bb.p5_filtration_degree(a, N), bb.p5_filtration_degree(b, N)
    assume(not isinstance(da, Unbounded) and not isinstance(db, Unbounded) and da + db <= N)
    lhs = bd.as_up5(bb.p5_gr_component(a * b, da + db, N))
    rhs = bd.as_up5(bb.p5_gr_component(a, da, N)) * bd.as_up5(bb.p5_gr_component(b, db, N))
    assert lhs == rhs


@given(p5)
def test_graded_classes_of_kernel_elements(p):
    N = 4
    k = p - bb.ell(bb.project("pr5", p))
    d = bb.p5_filtration_degree(k, N)
    assume(not isinstance(d, Unbounded))
    assert bd.u_project("pr5", bd.as_up5(bb.p5_gr_component(k, d, N))).is_zero()


def test_mdr_to_gr_mb_on_generators():
    for i in range(3):
        m = [VDR2.one() if j == i else VDR2.zero() for j in range(3)]
        r = bd.mdr_to_gr_mb(m, 4)
        assert r.agrees and r.degree == 1


def _mdr(d):
    return st.lists(homogeneous(VDR2, d), min_size=3, max_size=3)


@given(st.integers(0, 3).flatmap(_mdr))
def test_mdr_to_gr_mb_on_random_elements(m):
    r = bd.mdr_to_gr_mb(m, 4)
    assert r.agrees, (r.degree, [str(x) for x in r.coordinates])


@given(st.integers(0, 2).flatmap(_mdr), homogeneous(VDR2, 1))
def test_actions_compatible(m, a):
    for i in (0, 1):
        assert bd.left_action_compatible(i, m, 4)
    assert bd.right_action_compatible(m, a, 4)


def test_mdr_to_gr_mb_domain():
    with pytest.raises(ValueError):
        bd.mdr_to_gr_mb([VDR2.gen("e0") ** 4, VDR2.zero(), VDR2.zero()], 4)
    with pytest.raises(ValueError):
        bd.mdr_to_gr_mb([VDR2.gen("e0"), VDR2.one(), VDR2.zero()], 4)
