"""The group algebra of P5* = K4 / center through its semidirect normal form.

Every element of P5* is uniquely u . l(h) with u in the free group F3 on
x15, x25, x35 and h in F2 = <X0, X1>, where l(X0) = x23 and l(X1) = x12.
The product is (u, h)(u', h') = (u . Theta_h(u'), h h') with Theta_h the
conjugation action of l(h) on F3.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import (
    GRADED,
    VB,
    VB2,
    Alphabet,
    Element,
    GroupAlgebra,
    TensorAlgebra,
    invert_word,
    op,
    reduce_word,
    word_homomorphism,
)
from .betti import rurho
from .magnus import Unbounded, filtration_degree, magnus
from .matrix import AlgebraMatrix, matrix_map

F3_NAMES = ("x15", "x25", "x35")
K4_NAMES = ("x12", "x13", "x14", "x23", "x24", "x34")

# Theta_{X0}, Theta_{X1} on x15, x25, x35 (letters 1, 2, 3; negative = inverse)
THETA_FORWARD = {
    1: ((1,), (-3, 2, 3), (-3, -2, 3, 2, 3)),
    2: ((-2, 1, 2), (-2, -1, 2, 1, 2), (3,)),
}


def apply_substitution(images: Sequence[tuple[int, ...]], word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        out.extend(images[x - 1] if x > 0 else invert_word(images[-x - 1]))
    return reduce_word(out)


def _reduced_words(letters: int, max_len: int):
    """Reduced words over a free group of the given rank, by length."""
    alphabet = [i for g in range(1, letters + 1) for i in (g, -g)]
    yield ()
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in alphabet:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        yield from nxt
        frontier = nxt


def _invert_automorphism(images, max_conj: int = 4):
    """Inverse of an automorphism of F3 that sends each generator to a
    conjugate, found by searching conjugators c with theta(c^-1 x c) = x."""
    result = []
    for g in (1, 2, 3):
        found = None
        for c in _reduced_words(3, max_conj):
            cand = reduce_word(invert_word(c) + (g,) + c)
            if apply_substitution(images, cand) == (g,):
                found = cand
                break
        if found is None:
            raise RuntimeError(f"no conjugator of length <= {max_conj} inverts generator {g}")
        result.append(found)
    # composition must be the identity both ways
    for g in (1, 2, 3):
        assert apply_substitution(images, result[g - 1]) == (g,)
        assert apply_substitution(result, images[g - 1]) == (g,)
    return tuple(result)


@lru_cache(maxsize=None)
def theta_table() -> dict[int, tuple[tuple[int, ...], ...]]:
    """Images of x15, x25, x35 under Theta of X0^{+-1}, X1^{+-1}."""
    table = dict(THETA_FORWARD)
    for code, images in THETA_FORWARD.items():
        table[-code] = _invert_automorphism(images)
    return table


@lru_cache(maxsize=500_000)
def theta(h: tuple[int, ...], u: tuple[int, ...]) -> tuple[int, ...]:
    """Theta_h(u) = l(h) u l(h)^-1 for h in F2, u in F3."""
    if not h or not u:
        return u
    table = theta_table()
    return apply_substitution(table[h[0]], theta(h[1:], u))


class P5Algebra(GroupAlgebra):
    """k[P5*] on normal-form keys ((F3 word), (F2 word))."""

    def mul_keys(self, a, b):
        (u, h), (u2, h2) = a, b
        return (reduce_word(u + theta(h, u2)), reduce_word(h + h2))

    def inverse_key(self, key):
        u, h = key
        hi = invert_word(h)
        return (theta(hi, invert_word(u)), hi)


P5 = P5Algebra("P5", Alphabet((F3_NAMES, ("X0", "X1"))))
GR_P5 = TensorAlgebra("grP5", Alphabet((("t15", "t25", "t35"), ("e0", "e1"))))
GRADED[P5] = GR_P5

x15, x25, x35 = (P5.gen(n) for n in F3_NAMES)
L_X0, L_X1 = P5.gen("X0"), P5.gen("X1")
F3_GENS = (x15, x25, x35)


def f3_element(word: tuple[int, ...]) -> Element:
    return P5.basis_element((word, ()))


def ell(v: Element) -> Element:
    """Section F2 -> P5*: X0 -> x23, X1 -> x12."""
    return v.map_keys(lambda k: ((), k[0]), P5)


# --- projection table ---------------------------------------------------------

def _vb(*letters: str) -> Element:
    e = VB.one()
    for s in letters:
        name, _, p = s.partition("^")
        e = e * VB.gen(name) ** int(p or 1)
    return e


PR_TABLE = {
    "pr1": {"x12": _vb(), "x13": _vb(), "x14": _vb(), "x23": _vb("X0"), "x24": _vb("X0^-1", "X1^-1"), "x34": _vb("X1")},
    "pr2": {"x12": _vb(), "x13": _vb("X1^-1", "X0^-1"), "x14": _vb("X0"), "x23": _vb(), "x24": _vb(), "x34": _vb("X1")},
    "pr5": {
        "x12": _vb("X1"),
        "x13": _vb("X1^-1", "X0^-1"),
        "x14": _vb("X0"),
        "x23": _vb("X0"),
        "x24": _vb("X0^-1", "X1^-1"),
        "x34": _vb("X1"),
    },
}

# x_{i5} as words in K4 generators
X5_DEFINITIONS = {
    "x15": ("x12", "x13", "x14"),
    "x25": ("x12", "x23", "x24"),
    "x35": ("x13", "x23", "x34"),
}


@lru_cache(maxsize=None)
def pr_generator_images(which: str) -> dict[str, Element]:
    """Images of x15, x25, x35, X0, X1 composed from the K4 table."""
    t = PR_TABLE[which]
    out = {}
    for name, parts in X5_DEFINITIONS.items():
        prod = VB.one()
        for p in parts:
            prod = prod * t[p]
        out[name] = prod.inverse()
    out["X0"] = t["x23"]
    out["X1"] = t["x12"]
    return out


@lru_cache(maxsize=None)
def _pr_hom(which: str):
    imgs = pr_generator_images(which)
    images = {}
    for fi, names in enumerate((F3_NAMES, ("X0", "X1"))):
        for gi, name in enumerate(names):
            images[(fi, gi + 1)] = imgs[name]
            images[(fi, -(gi + 1))] = imgs[name].inverse()
    return word_homomorphism(images, VB)


def project(which: str, a: Element) -> Element:
    """pr1, pr2, pr5 into V^B; pr12 into V^B (x) V^B."""
    if a.algebra != P5:
        raise TypeError("project expects an element of k[P5*]")
    if which == "pr12":
        f1, f2 = _pr_hom("pr1"), _pr_hom("pr2")
        acc = VB2.zero()
        for k, c in a.terms.items():
            b = P5.basis_element(k)
            (k1,) = f1(b).terms
            (k2,) = f2(b).terms
            acc = acc + VB2.basis_element((k1[0], k2[0])).scale(c)
        return acc
    if which not in PR_TABLE:
        raise ValueError(f"unknown projection {which}")
    return _pr_hom(which)(a)


# --- K4 generators in normal form ----------------------------------------------

def _x13_candidates(max_len: int):
    """F3 parts u with (u, (X0 X1)^-1) projecting to the table values of x13."""
    h = (-2, -1)
    want1, want2 = PR_TABLE["pr1"]["x13"], PR_TABLE["pr2"]["x13"]
    for u in _reduced_words(3, max_len):
        cand = P5.basis_element((u, h))
        if project("pr1", cand) == want1 and project("pr2", cand) == want2:
            yield cand


def _k4_from_x13(x13: Element) -> dict[str, Element]:
    x12, x23 = L_X1, L_X0
    g = {"x12": x12, "x23": x23, "x13": x13}
    g["x14"] = x13.inverse() * x12.inverse() * x15.inverse()
    g["x24"] = x23.inverse() * x12.inverse() * x25.inverse()
    g["x34"] = x23.inverse() * x13.inverse() * x35.inverse()
    return g


def k4_relators(g: dict[str, Element]) -> dict[str, Element]:
    """Defining relators of K4 and the central element, each of which must be 1."""
    comm = lambda a, b: a * b * a.inverse() * b.inverse()
    rel = {}
    for i, j, k in itertools.combinations((1, 2, 3, 4), 3):
        a, b, c = g[f"x{i}{j}"], g[f"x{i}{k}"], g[f"x{j}{k}"]
        w = a * b * c
        for name, y in ((f"x{i}{j}", a), (f"x{i}{k}", b), (f"x{j}{k}", c)):
            rel[f"[x{i}{j}x{i}{k}x{j}{k},{name}]"] = comm(w, y)
    rel["[x12,x34]"] = comm(g["x12"], g["x34"])
    rel["[x13,x12^-1x24x12]"] = comm(g["x13"], g["x12"].inverse() * g["x24"] * g["x12"])
    rel["[x14,x23]"] = comm(g["x14"], g["x23"])
    rel["omega4"] = g["x12"] * g["x13"] * g["x23"] * g["x14"] * g["x24"] * g["x34"]
    return rel


def relators_hold(g: dict[str, Element]) -> bool:
    return all(r == P5.one() for r in k4_relators(g).values())


@lru_cache(maxsize=None)
def k4_generators() -> dict[str, Element]:
    """Normal forms of the six K4 generators.

    x12, x23 come from the section, x14, x24, x34 from the definitions of
    the x_{i5}; x13 is the shortest candidate matching the projection table
    for which every relator of the presentation holds.
    """
    for cand in _x13_candidates(6):
        g = _k4_from_x13(cand)
        if relators_hold(g):
            return g
    raise RuntimeError("no normal form for x13 satisfies the K4 relators")


def _k4_factory(name):
    return lambda: k4_generators()[name]


for _n in K4_NAMES:
    if _n not in ("x12", "x23"):
        P5.extra_generators[_n] = _k4_factory(_n)
P5.extra_generators["x12"] = lambda: L_X1
P5.extra_generators["x23"] = lambda: L_X0


# --- Fox calculus on the kernel of pr5 ----------------------------------------

class NotInKernel(ValueError):
    pass


def in_kernel_pr5(k: Element) -> bool:
    return project("pr5", k).is_zero()


def _left_fox(u: tuple[int, ...]) -> list[dict]:
    """u - 1 = sum_i (x_i - 1) D_i(u); D_i(u) as {F3 word: coeff}."""
    out = [dict(), dict(), dict()]
    for p, x in enumerate(u):
        g = abs(x) - 1
        suffix = u[p + 1:] if x > 0 else u[p:]
        sign = 1 if x > 0 else -1
        out[g][suffix] = out[g].get(suffix, 0) + sign
    return out


def _right_fox(u: tuple[int, ...]) -> list[dict]:
    """u - 1 = sum_j R_j(u) (x_j - 1)."""
    out = [dict(), dict(), dict()]
    for p, x in enumerate(u):
        g = abs(x) - 1
        prefix = u[:p] if x > 0 else u[: p + 1]
        sign = 1 if x > 0 else -1
        out[g][prefix] = out[g].get(prefix, 0) + sign
    return out


def fox_decompose(k: Element) -> tuple[Element, Element, Element]:
    """q with k = sum_i (x_i5 - 1) q_i, for k in the kernel of pr5."""
    if not in_kernel_pr5(k):
        raise NotInKernel(f"{k} is not in the kernel of pr5")
    acc = [dict(), dict(), dict()]
    for (u, h), c in k.terms.items():
        for i, d in enumerate(_left_fox(u)):
            for w, s in d.items():
                key = (w, h)
                acc[i][key] = acc[i].get(key, 0) + c * s
    return tuple(P5.element(a) for a in acc)


def fox_decompose_right(k: Element) -> tuple[Element, Element, Element]:
    """p with k = sum_j p_j (x_j5 - 1), for k in the kernel of pr5."""
    if not in_kernel_pr5(k):
        raise NotInKernel(f"{k} is not in the kernel of pr5")
    acc = [P5.zero(), P5.zero(), P5.zero()]
    for (u, h), c in k.terms.items():
        lh = P5.basis_element(((), h))
        w = theta(invert_word(h), u)
        for j, d in enumerate(_right_fox(w)):
            if d:
                acc[j] = acc[j] + lh * P5.element(((v, ()), s) for v, s in d.items()).scale(c)
    return tuple(acc)


def recompose(q: Sequence[Element]) -> Element:
    return sum(((x - 1) * qi for x, qi in zip(F3_GENS, q)), P5.zero())


def recompose_right(p: Sequence[Element]) -> Element:
    return sum((pi * (x - 1) for x, pi in zip(F3_GENS, p)), P5.zero())


def rvarpi(p: Element) -> AlgebraMatrix:
    """p (x_j5 - 1) = sum_i (x_i5 - 1) b_ij(p)."""
    cols = [fox_decompose(p * (x - 1)) for x in F3_GENS]
    return AlgebraMatrix(P5, [[cols[j][i] for j in range(3)] for i in range(3)])


def varpi(p: Element) -> AlgebraMatrix:
    """(x_i5 - 1) p = sum_j a_ij(p) (x_j5 - 1)."""
    rows = [fox_decompose_right((x - 1) * p) for x in F3_GENS]
    return AlgebraMatrix(P5, [list(r) for r in rows])


def rvarpi_via_varpi(p: Element) -> AlgebraMatrix:
    """Ad_{diag(x15,x25,x35)^-1} . op . transpose . varpi . op."""
    D = AlgebraMatrix.diag(P5, list(F3_GENS))
    D_inv = AlgebraMatrix.diag(P5, [x.inverse() for x in F3_GENS])
    return D_inv @ matrix_map(op, varpi(op(p)).transpose(), P5) @ D


def rurho_geometric(v: Element) -> AlgebraMatrix:
    """M3(pr12) . rvarpi . l."""
    return matrix_map(lambda a: project("pr12", a), rvarpi(ell(v)), VB2)


# --- the bimodule M^B in coordinates -------------------------------------------

@dataclass(frozen=True)
class MBElement:
    coords: tuple[Element, Element, Element]

    def __post_init__(self):
        if len(self.coords) != 3 or any(c.algebra != VB2 for c in self.coords):
            raise TypeError("M^B coordinates are three elements of V^B (x) V^B")

    @classmethod
    def of(cls, *coords) -> "MBElement":
        return cls(tuple(c if isinstance(c, Element) else VB2.scalar(c) for c in coords))

    def column(self) -> AlgebraMatrix:
        return AlgebraMatrix.column(VB2, self.coords)

    def right_act(self, a: Element) -> "MBElement":
        return MBElement(tuple(c * a for c in self.coords))

    def __add__(self, other):
        return MBElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def mb_left_action(v: Element, m: MBElement) -> MBElement:
    """Coordinates multiplied by rurho(v)."""
    col = rurho(v) @ m.column()
    return MBElement(tuple(col[i, 0] for i in range(3)))


def mb_left_action_geometric(v: Element, m: MBElement) -> MBElement:
    """l(v)(x_i5 - 1) decomposed by Fox calculus, then projected by pr12."""
    lv = ell(v)
    out = [VB2.zero(), VB2.zero(), VB2.zero()]
    for i, x in enumerate(F3_GENS):
        if m.coords[i].is_zero():
            continue
        q = fox_decompose(lv * (x - 1))
        for k in range(3):
            out[k] = out[k] + project("pr12", q[k]) * m.coords[i]
    return MBElement(tuple(out))


def mb_filtration_degree(m: MBElement, N: int):
    """1 + the least Magnus filtration degree among the coordinates."""
    degs = [filtration_degree(c, N) for c in m.coords if not c.is_zero()]
    if not degs:
        return Unbounded.ZERO
    finite = [d for d in degs if not isinstance(d, Unbounded)]
    if not finite:
        return Unbounded.EXCEEDS
    d = 1 + min(finite)
    return d if d <= N else Unbounded.EXCEEDS


# --- lifting V^B (x) V^B into k[P5*] --------------------------------------------

@lru_cache(maxsize=None)
def pr12_witnesses() -> dict[str, Element]:
    """Elements of P5* projecting to X0 (x) 1, X1 (x) 1, 1 (x) X0, 1 (x) X1."""
    g = k4_generators()
    return {
        "X0": g["x23"],
        "X1": g["x34"] * g["x13"] * g["x14"],
        "Y0": g["x14"],
        "Y1": g["x23"] * g["x24"] * g["x34"],
    }


@lru_cache(maxsize=None)
def _lift_homs():
    w = pr12_witnesses()
    hx = word_homomorphism({(0, 1): w["X0"], (0, -1): w["X0"].inverse(), (0, 2): w["X1"], (0, -2): w["X1"].inverse()}, P5)
    hy = word_homomorphism({(0, 1): w["Y0"], (0, -1): w["Y0"].inverse(), (0, 2): w["Y1"], (0, -2): w["Y1"].inverse()}, P5)
    return hx, hy


def lift_vb2(a: Element) -> Element:
    """Filtered linear section of pr12: x (x) y -> L(x) L'(y) with L, L' homomorphisms."""
    hx, hy = _lift_homs()
    acc = P5.zero()
    for (wx, wy), c in a.terms.items():
        acc = acc + (hx(VB.basis_element((wx,))) * hy(VB.basis_element((wy,)))).scale(c)
    return acc


def mb_to_kernel(m: MBElement) -> Element:
    """A kernel element sum_i (x_i5 - 1) L(a_i) representing m."""
    return sum(((x - 1) * lift_vb2(a) for x, a in zip(F3_GENS, m.coords)), P5.zero())


def kernel_to_mb(k: Element) -> MBElement:
    q = fox_decompose(k)
    return MBElement(tuple(project("pr12", qi) for qi in q))


def p5_filtration_degree(a: Element, N: int):
    """Degree in the augmentation filtration of k[P5*] through the F3 x F2 split."""
    return filtration_degree(a, N, GR_P5)


def p5_gr_component(a: Element, d: int, N: int) -> Element:
    return magnus(a, N, GR_P5).component(d)
