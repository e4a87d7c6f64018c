import pytest
from hypothesis import given, strategies as st

from harmonica import braid_betti as bb
from harmonica.algebra import VB, VB2, op, reduce_word
from harmonica.betti import RUCOL, RUROW, rurho
from harmonica.magnus import Unbounded, at_least
from strategies import basis, elements, p5, vb, vb2, words

P5 = bb.P5
X0, X1 = VB.gen("X0"), VB.gen("X1")
G = bb.k4_generators()


def kernel_elements():
    return p5.map(lambda p: p - bb.ell(bb.project("pr5", p)))


def test_normal_form_of_x13():
    assert G["x13"] == P5.basis_element(((-3, -2, -1), (-2, -1)))


def test_x13_is_the_unique_relator_compatible_candidate():
    cands = list(bb._x13_candidates(6))
    assert len(cands) == 6
    assert [bb.relators_hold(bb._k4_from_x13(c)) for c in cands].count(True) == 1


def test_all_relators_hold():
    bad = {k: str(v) for k, v in bb.k4_relators(G).items() if v != P5.one()}
    assert not bad


def test_theta_inverses():
    t = bb.theta_table()
    assert t[-1] == ((1,), (2, 3, 2, -3, -2), (2, 3, -2))
    assert t[-2] == ((1, 2, 1, -2, -1), (1, 2, -1), (3,))
    for code in (1, 2, -1, -2):
        for g in (1, 2, 3):
            assert bb.apply_substitution(t[code], t[-code][g - 1]) == (g,)


def test_theta_is_trivial_on_abelianization():
    for images in bb.theta_table().values():
        for g, w in enumerate(images, 1):
            for j in (1, 2, 3):
                assert sum(1 if x == j else -1 if x == -j else 0 for x in w) == (j == g)


@given(words(2, 4), words(2, 4), words(3, 4))
def test_theta_is_an_action(h1, h2, u):
    assert bb.theta(reduce_word(h1 + h2), u) == bb.theta(h1, bb.theta(h2, u))


@given(p5, p5, p5)
def test_semidirect_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(basis(P5, 3))
def test_semidirect_inverse(g):
    assert g * g.inverse() == P5.one() == g.inverse() * g


def test_section_relations():
    # l(X_i) acts on x_i5 by conjugation: l(h) u l(h)^-1 = Theta_h(u)
    for h, code in ((bb.L_X0, 1), (bb.L_X1, 2)):
        for i, x in enumerate(bb.F3_GENS):
            assert h * x * h.inverse() == bb.f3_element(bb.theta_table()[code][i])


@pytest.mark.parametrize("which", ["pr1", "pr2", "pr5"])
def test_projection_table_reproduced(which):
    for n in bb.K4_NAMES:
        assert bb.project(which, G[n]) == bb.PR_TABLE[which][n]


@given(p5, p5)
def test_projections_are_multiplicative(a, b):
    for which in ("pr1", "pr2", "pr5", "pr12"):
        assert bb.project(which, a * b) == bb.project(which, a) * bb.project(which, b)


@given(vb)
def test_section_splits_pr5(v):
    assert bb.project("pr5", bb.ell(v)) == v


def test_pr12_witnesses():
    for name, w in bb.pr12_witnesses().items():
        assert bb.project("pr12", w) == VB2.gen(name)


@given(vb2)
def test_lift_is_a_section_of_pr12(a):
    assert bb.project("pr12", bb.lift_vb2(a)) == a


@given(kernel_elements())
def test_fox_roundtrip(k):
    q = bb.fox_decompose(k)
    assert bb.recompose(q) == k
    assert bb.recompose_right(bb.fox_decompose_right(k)) == k


@given(elements(P5, 2, 2), elements(P5, 2, 2), elements(P5, 2, 2))
def test_fox_decomposition_is_unique(a, b, c):
    assert bb.fox_decompose(bb.recompose((a, b, c))) == (a, b, c)


def test_fox_rejects_non_kernel():
    with pytest.raises(bb.NotInKernel):
        bb.fox_decompose(bb.L_X0)
    assert bb.fox_decompose(bb.x15 - 1) == (P5.one(), P5.zero(), P5.zero())


@given(elements(P5, 2, 2), elements(P5, 2, 2))
def test_rvarpi_is_multiplicative(p, q):
    assert bb.rvarpi(p * q) == bb.rvarpi(p) @ bb.rvarpi(q)


@given(elements(P5, 3, 2))
def test_rvarpi_via_varpi(p):
    assert bb.rvarpi_via_varpi(p) == bb.rvarpi(p)


def test_geometric_rurho_on_generators():
    for v in (X0, X1, X0 - 1, X1 - 1, X0**-1, X1**-1):
        assert bb.rurho_geometric(v) == rurho(v)


@given(basis(VB, 4))
def test_geometric_rurho_on_words(w):
    assert bb.rurho_geometric(w) == rurho(w)


@given(vb, vb2, vb2, vb2)
def test_left_action_two_routes(v, a, b, c):
    m = bb.MBElement.of(a, b, c)
    assert bb.mb_left_action(v, m) == bb.mb_left_action_geometric(v, m)


@given(vb2, vb2, vb2)
def test_action_of_e_factors(a, b, c):
    m = bb.MBElement.of(a, b, c)
    assert bb.mb_left_action(X1 - 1, m).column() == RUCOL @ (RUROW @ m.column())


@given(vb2, vb2, vb2)
def test_coordinate_roundtrip(a, b, c):
    m = bb.MBElement.of(a, b, c)
    assert bb.kernel_to_mb(bb.mb_to_kernel(m)) == m


@st.composite
def filtered_vb2(draw, degree):
    x = draw(elements(VB2, 2, 2).filter(bool))
    for _ in range(degree):
        x = x * (draw(basis(VB2, 2).filter(lambda g: g != VB2.one())) - 1)
    return x


@given(st.integers(1, 4).flatmap(lambda a: st.tuples(st.just(a), st.lists(filtered_vb2(a - 1), min_size=3, max_size=3))))
def test_filtration_shift(args):
    a, coords = args
    m = bb.MBElement(tuple(coords))
    got = bb.mb_filtration_degree(m, 4)
    assert at_least(got, a)
    assert bb.p5_filtration_degree(bb.mb_to_kernel(m), 4) == got


@given(kernel_elements())
def test_fox_coordinates_lose_at_most_one_degree(k):
    d = bb.p5_filtration_degree(k, 4)
    if isinstance(d, Unbounded):
        return
    for q in bb.fox_decompose(k):
        assert q.is_zero() or at_least(bb.p5_filtration_degree(q, 4), d - 1)


def test_op_on_semidirect_product_is_antimultiplicative():
    a, b = G["x13"] + 2 * bb.x25, G["x24"] - bb.L_X1
    assert op(a * b) == op(b) * op(a)
