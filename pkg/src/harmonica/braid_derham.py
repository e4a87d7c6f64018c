"""U(p5) as the twisted tensor product U(f3) (x) U(f2).

Normal-form keys are ((t-monomial), (e-monomial)) meaning T . E, with
e_i t = t e_i + delta_i(t) for the derivations delta_i read off from the
group-side action Theta via the Magnus expansion.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .algebra import GRADED, VB2, VDR, VDR2, Alphabet, Element, GroupAlgebra, TensorAlgebra, tensor_homomorphism
from .bfs import MatrixRepresentation
from .braid_betti import (
    F3_GENS,
    GR_P5,
    P5,
    lift_vb2,
    p5_filtration_degree,
    p5_gr_component,
    theta_table,
)
from .betti import rurho, X0, X1
from .derham import rrho
from .magnus import magnus
from .matrix import AlgebraMatrix, matrix_map

T_NAMES = ("t15", "t25", "t35")
F3_TENSOR = TensorAlgebra("Uf3", Alphabet((T_NAMES,)))
F3_GROUP = GroupAlgebra("F3", Alphabet((("x15", "x25", "x35"),)))
GRADED[F3_GROUP] = F3_TENSOR


class DerivationMismatch(RuntimeError):
    pass


@lru_cache(maxsize=None)
def derivation_table() -> dict[int, tuple[dict, ...]]:
    """delta_i(t_j) as {t-monomial: coeff}, from degree 2 of Magnus(Theta_{X_i}(x_j5)).

    Aborts if the degree-1 part of Theta changes anything (abelianized
    Theta must be the identity) or if the degree-2 part is not a Lie element
    of the expected shape.
    """
    table = theta_table()
    out = {}
    for i, code in ((0, 1), (1, 2)):
        per = []
        for j in range(3):
            img = F3_GROUP.basis_element((table[code][j],))
            series = magnus(img, 2, F3_TENSOR).body
            if series.homogeneous_part(1) != F3_TENSOR.letter(0, j):
                raise DerivationMismatch(f"Theta_X{i} changes x{j + 1}5 in degree 1")
            d2 = series.homogeneous_part(2)
            # a Lie element of degree 2 is a multiple of commutators: symmetric part vanishes
            for (w,), c in d2.terms.items():
                if d2.terms.get((w[::-1],), 0) != -c:
                    raise DerivationMismatch(f"delta_e{i}(t{j + 1}5) = {d2} is not a bracket")
            per.append({w: c for (w,), c in d2.terms.items()})
        out[i] = tuple(per)
    return out


def _delta_word(i: int, t: tuple[int, ...]) -> dict:
    """Leibniz extension of delta_i to a t-monomial."""
    d = derivation_table()[i]
    out: dict = defaultdict(int)
    for p, x in enumerate(t):
        for w, c in d[x].items():
            out[t[:p] + w + t[p + 1:]] += c
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=200_000)
def _commute(E: tuple[int, ...], T: tuple[int, ...]) -> tuple:
    """E . T rewritten as sum of T' . E'."""
    if not E:
        return (((T, ()), 1),)
    if not T:
        return ((((), E), 1),)
    *rest, i = E
    rest = tuple(rest)
    out: dict = defaultdict(int)
    for (t2, e2), c in _commute(rest, T):
        out[(t2, e2 + (i,))] += c
    for t3, c in _delta_word(i, T).items():
        for k, c2 in _commute(rest, t3):
            out[k] += c * c2
    return tuple((k, c) for k, c in out.items() if c)


class UP5Algebra(TensorAlgebra):
    def mul_keys(self, a, b):
        (t1, e1), (t2, e2) = a, b
        if not e1:
            return (t1 + t2, e2)
        out: dict = defaultdict(int)
        for (t, e), c in _commute(e1, t2):
            out[(t1 + t, e + e2)] += c
        return out

    def antipode(self, x: Element) -> Element:
        acc = self.zero()
        for (t, e), c in x.terms.items():
            sign = -1 if (len(t) + len(e)) % 2 else 1
            acc = acc + (self.basis_element(((), e[::-1])) * self.basis_element((t[::-1], ()))).scale(sign * c)
        return acc


UP5 = UP5Algebra("UP5", Alphabet((T_NAMES, ("e0", "e1"))))
t15, t25, t35 = (UP5.gen(n) for n in T_NAMES)
u_e0, u_e1 = UP5.gen("e0"), UP5.gen("e1")
T_GENS = (t15, t25, t35)


def up5_multiply(a: Element, b: Element) -> Element:
    return a * b


def u_ell(v: Element) -> Element:
    """Section U(f2) -> U(p5): e0 -> t23, e1 -> t12."""
    return v.map_keys(lambda k: ((), k[0]), UP5)


def bracket(a: Element, b: Element) -> Element:
    return a * b - b * a


# t_ij in normal form: t12 = e1, t23 = e0, the rest solved from the
# definitions of t15, t25, t35 and the vanishing of the central element
def infinitesimal_generators() -> dict[str, Element]:
    return {
        "t12": u_e1,
        "t23": u_e0,
        "t24": -u_e1 - u_e0 - t25,
        "t34": t25 + t15 + u_e1,
        "t13": -t35 - u_e0 - t25 - t15 - u_e1,
        "t14": t35 + u_e0 + t25,
    }


for _name in ("t12", "t13", "t14", "t23", "t24", "t34"):
    UP5.extra_generators[_name] = (lambda n: lambda: infinitesimal_generators()[n])(_name)

T5_DEFINITIONS = {"t15": ("t12", "t13", "t14"), "t25": ("t12", "t23", "t24"), "t35": ("t13", "t23", "t34")}


def definition_defects() -> dict[str, Element]:
    """t_i5 + (sum of its defining t_ij), and the central element; all must vanish."""
    g = infinitesimal_generators()
    out = {n: UP5.gen(n) + sum((g[p] for p in parts), UP5.zero()) for n, parts in T5_DEFINITIONS.items()}
    out["z4"] = sum(g.values(), UP5.zero())
    return out


def infinitesimal_relators() -> dict[str, Element]:
    g = infinitesimal_generators()
    rel = {}
    for i, j, k in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)):
        a, b, c = g[f"t{i}{j}"], g[f"t{i}{k}"], g[f"t{j}{k}"]
        rel[f"[t{i}{j},t{i}{k}+t{j}{k}]"] = bracket(a, b + c)
        rel[f"[t{i}{k},t{i}{j}+t{j}{k}]"] = bracket(b, a + c)
        rel[f"[t{j}{k},t{i}{j}+t{i}{k}]"] = bracket(c, a + b)
    rel["[t12,t34]"] = bracket(g["t12"], g["t34"])
    rel["[t13,t24]"] = bracket(g["t13"], g["t24"])
    rel["[t14,t23]"] = bracket(g["t14"], g["t23"])
    return rel


# --- projections ----------------------------------------------------------------

def _v(*names) -> Element:
    return sum((VDR.gen(n) for n in names), VDR.zero())


_EINF = -_v("e0") - _v("e1")
LIE_PR_TABLE = {
    "pr1": {"t12": VDR.zero(), "t13": VDR.zero(), "t14": VDR.zero(), "t23": _v("e0"), "t24": _EINF, "t34": _v("e1")},
    "pr2": {"t12": VDR.zero(), "t13": _EINF, "t14": _v("e0"), "t23": VDR.zero(), "t24": VDR.zero(), "t34": _v("e1")},
    "pr5": {"t12": _v("e1"), "t13": _EINF, "t14": _v("e0"), "t23": _v("e0"), "t24": _EINF, "t34": _v("e1")},
}


@lru_cache(maxsize=None)
def u_pr_generator_images(which: str) -> dict[str, Element]:
    t = LIE_PR_TABLE[which]
    out = {n: -sum((t[p] for p in parts), VDR.zero()) for n, parts in T5_DEFINITIONS.items()}
    out["e0"] = t["t23"]
    out["e1"] = t["t12"]
    return out


def _to_left(x: Element) -> Element:
    return x.map_keys(lambda k: (k[0], ()), VDR2)


def _to_right(x: Element) -> Element:
    return x.map_keys(lambda k: ((), k[0]), VDR2)


@lru_cache(maxsize=None)
def _u_pr_hom(which: str):
    if which == "pr12":
        a, b = u_pr_generator_images("pr1"), u_pr_generator_images("pr2")
        imgs = {n: _to_left(a[n]) + _to_right(b[n]) for n in a}
        target = VDR2
    else:
        imgs = u_pr_generator_images(which)
        target = VDR
    images = {}
    for fi, names in enumerate((T_NAMES, ("e0", "e1"))):
        for gi, n in enumerate(names):
            images[(fi, gi)] = imgs[n]
    return tensor_homomorphism(images, target)


def u_project(which: str, a: Element) -> Element:
    if a.algebra != UP5:
        raise TypeError("u_project expects an element of U(p5)")
    if which not in ("pr1", "pr2", "pr5", "pr12"):
        raise ValueError(f"unknown projection {which}")
    return _u_pr_hom(which)(a)


# --- Lie-side varpi ---------------------------------------------------------------

class NotInKernel(ValueError):
    pass


def lie_decompose(k: Element) -> tuple[Element, Element, Element]:
    """p with k = sum_i t_i5 p_i; k must lie in the kernel of U(pr5)."""
    acc = [defaultdict(int), defaultdict(int), defaultdict(int)]
    for (t, e), c in k.terms.items():
        if not t:
            raise NotInKernel(f"{k} is not in the kernel of U(pr5)")
        acc[t[0]][(t[1:], e)] += c
    return tuple(UP5.element(a) for a in acc)


def lie_recompose(p: Sequence[Element]) -> Element:
    return sum((t * pi for t, pi in zip(T_GENS, p)), UP5.zero())


def lie_rvarpi(p: Element) -> AlgebraMatrix:
    """p t_j5 = sum_i t_i5 b_ij(p)."""
    cols = [lie_decompose(p * t) for t in T_GENS]
    return AlgebraMatrix(UP5, [[cols[j][i] for j in range(3)] for i in range(3)])


@lru_cache(maxsize=None)
def lie_varpi_table() -> MatrixRepresentation:
    """t_i5 p = sum_j a_ij(p) t_j5, on generators.

    t_i t_k is already in that form; t_i e_k = e_k t_i - delta_k(t_i) and
    delta_k(t_i) is a combination of monomials t_a t_b.
    """
    images = {}
    for k in range(3):
        images[(0, k)] = AlgebraMatrix(UP5, [[T_GENS[i] if j == k else 0 for j in range(3)] for i in range(3)])
    d = derivation_table()
    for k, ek in enumerate((u_e0, u_e1)):
        rows = []
        for i in range(3):
            row = [ek if j == i else UP5.zero() for j in range(3)]
            for w, c in d[k][i].items():
                a, b = w
                row[b] = row[b] - T_GENS[a].scale(c)
            rows.append(row)
        images[(1, k)] = AlgebraMatrix(UP5, rows)
    return MatrixRepresentation(UP5, UP5, 3, images)


def lie_varpi(p: Element) -> AlgebraMatrix:
    return lie_varpi_table()(p)


def lie_rvarpi_via_varpi(p: Element) -> AlgebraMatrix:
    """M3(S) . transpose . varpi . S."""
    S = UP5.antipode
    return matrix_map(S, lie_varpi(S(p)).transpose(), UP5)


def rrho_geometric(v: Element) -> AlgebraMatrix:
    """M3(U(pr12)) . lie_rvarpi . U(l)."""
    return matrix_map(lambda a: u_project("pr12", a), lie_rvarpi(u_ell(v)), VDR2)


# --- graded comparison -------------------------------------------------------------

def as_up5(x: Element) -> Element:
    """Reinterpret a Magnus image in t/e letters as a U(p5) normal form."""
    if x.algebra != GR_P5:
        raise TypeError("expects a graded P5* component")
    return UP5.element(x.terms)


def lift_vdr2(a: Element) -> Element:
    """Preimage under the Magnus identification: e -> X - 1, f -> Y - 1."""
    gens = [[VB2.gen("X0") - 1, VB2.gen("X1") - 1], [VB2.gen("Y0") - 1, VB2.gen("Y1") - 1]]
    acc = VB2.zero()
    for key, c in a.terms.items():
        term = VB2.one()
        for fi, w in enumerate(key):
            for x in w:
                term = term * gens[fi][x]
        acc = acc + term.scale(c)
    return acc


@dataclass
class GrMBData:
    degree: object
    coordinates: tuple
    agrees: bool
    details: list = field(default_factory=list)


def _homogeneous_degree(m: Sequence[Element]) -> int:
    degs = set()
    for a in m:
        degs |= a.degrees()
    if len(degs) != 1:
        raise ValueError("M^DR coordinates must be homogeneous of one degree")
    return degs.pop()


def mdr_to_gr_mb(m: Sequence[Element], N: int) -> GrMBData:
    """Send sum_i t_i5 (x) a_i to gr(M^B) through the Betti geometry.

    Each a_i is lifted to alpha_i in V^B (x) V^B with leading class a_i, the
    kernel element sum_i (x_i5 - 1) L(alpha_i) is formed in k[P5*], and its
    leading Magnus class is decomposed in U(p5) and projected by U(pr12).
    The result must reproduce (a_1, a_2, a_3).
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    d = _homogeneous_degree(m)
    if d + 1 > N:
        raise ValueError(f"degree {d + 1} exceeds truncation {N}")
    alphas = [lift_vdr2(a) for a in m]
    k = sum(((x - 1) * lift_vb2(al) for x, al in zip(F3_GENS, alphas)), P5.zero())
    deg = p5_filtration_degree(k, N)
    cls = as_up5(p5_gr_component(k, d + 1, N))
    coords = tuple(u_project("pr12", p) for p in lie_decompose(cls))
    return GrMBData(deg, coords, deg == d + 1 and coords == tuple(m))


def left_action_compatible(i: int, m: Sequence[Element], N: int) -> bool:
    """rrho(e_i) a equals the next graded piece of rurho(X_i - 1) alpha."""
    d = _homogeneous_degree(m)
    alpha = AlgebraMatrix.column(VB2, [lift_vdr2(a) for a in m])
    b = rurho((X0, X1)[i] - 1) @ alpha
    dr = rrho((VDR.gen("e0"), VDR.gen("e1"))[i]) @ AlgebraMatrix.column(VDR2, list(m))
    return all(magnus(b[r, 0], N).component(d + 1) == dr[r, 0] for r in range(3))


def right_action_compatible(m: Sequence[Element], a: Element, N: int) -> bool:
    """Coordinates times a lift of a have leading class (a_i a)."""
    d = _homogeneous_degree(m)
    da = _homogeneous_degree([a])
    la = lift_vdr2(a)
    return all(magnus(lift_vdr2(x) * la, N).component(d + da) == x * a for x in m)

