"""Registry of verification checks, grouped into suites.

Each check takes a `Config` and returns a `CheckOutcome`; randomness comes
from a generator seeded by (seed, check id) so results do not depend on
which other checks run or in what order.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import betti, braid_betti as bb, braid_derham as bd, derham
from .algebra import VB, VB2, VDR, VDR2, Element, op, serialize, tensor_product
from .bfs import (
    BimoduleIso,
    BfsObject,
    CheckOutcome,
    check_delta_multiplicative,
    check_factorization,
    delta,
    filtration_compliance,
    grading_compliance,
    pullback,
)
from .magnus import Unbounded, at_least, filtration_degree, magnus
from .matrix import AlgebraMatrix
from .parse import parse
from .sampling import (
    random_group_element,
    random_tensor_element,
    random_vb,
    random_vb2,
    random_vb_monomial,
    random_vdr,
    random_vdr2,
    random_vdr_monomial,
    random_word,
)


@dataclass(frozen=True)
class Config:
    truncation: int = 4
    seed: int = 0
    samples: int = 100


@dataclass(frozen=True)
class Check:
    check_id: str
    ref: str
    suites: tuple[str, ...]
    runner: Callable[[Config], CheckOutcome]

    def rng(self, cfg: Config) -> random.Random:
        return random.Random(f"{cfg.seed}:{self.check_id}")


REGISTRY: dict[str, Check] = {}


def check(check_id: str, ref: str, *suites: str):
    def wrap(fn):
        if check_id in REGISTRY:
            raise ValueError(f"duplicate check id {check_id}")
        REGISTRY[check_id] = Check(check_id, ref, suites, fn)
        return fn

    return wrap


def _rng(check_id: str, cfg: Config) -> random.Random:
    return REGISTRY[check_id].rng(cfg)


def _first_failure(items, test) -> CheckOutcome:
    for x in items:
        w = test(x)
        if w is not None:
            return CheckOutcome(False, w)
    return CheckOutcome(True)


# --- factorization -----------------------------------------------------------------

@check("factorization.betti", "Betti factorization: rurho(X1 - 1) = rucol . rurow", "factorization", "betti")
def _(cfg):
    return check_factorization(betti.betti_object(cfg.truncation))


@check("factorization.derham", "de Rham factorization: rrho(e1) = rcol . rrow", "factorization", "derham")
def _(cfg):
    return check_factorization(derham.derham_object())


# --- Betti explicit object ------------------------------------------------------------

@check("betti.inverse_images", "source matrices of X_i^-1 invert those of X_i", "betti")
def _(cfg):
    rep = betti.source_rho()
    for i in (1, 2):
        if not (rep.images[(0, i)] @ rep.images[(0, -i)]).is_identity():
            return CheckOutcome(False, f"generator {i}")
    for x in (betti.X0, betti.X1):
        if not (betti.rurho(x) @ betti.rurho(x.inverse())).is_identity():
            return CheckOutcome(False, f"rurho({x})")
    return CheckOutcome(True)


@check("betti.two_path", "rurho from generator images equals the op/transpose/conjugation composite", "betti")
def _(cfg):
    rng = _rng("betti.two_path", cfg)
    samples = [random_vb_monomial(rng, 5) for _ in range(cfg.samples // 5 or 1)]
    samples += [random_vb(rng, 5) for _ in range(5)]
    return _first_failure(samples, lambda v: None if betti.rurho(v) == betti.rurho_composite(v) else str(v))


@check("betti.delta_theorem", "Delta_OB(X0^n) = Delta^{W,B}(X0^n (X1 - 1)), -5 <= n <= 5", "betti")
def _(cfg):
    def t(n):
        got = betti.delta_OB(betti.X0**n)
        want = betti.delta_WB_generator(n)
        return None if got == want else {"n": n, "got": str(got), "want": str(want)}

    return _first_failure(range(-5, 6), t)


@check("betti.delta_inverse", "-Delta_OB(X1^-1) + 1 = X1^-1 (x) X1^-1", "betti")
def _(cfg):
    got = -betti.delta_OB(betti.X1**-1) + 1
    want = betti.delta_WB_generator("inv_X1")
    return CheckOutcome(got == want, None if got == want else str(got))


@check("betti.image_in_wb", "Delta_OB lands in W^B (x) W^B", "betti")
def _(cfg):
    rng = _rng("betti.image_in_wb", cfg)

    def t(b):
        d = betti.wb_membership(betti.delta_OB(b))
        if not d.member:
            return {"b": str(b), "obstruction": str(d.obstruction)}
        if d.recompose() != betti.delta_OB(b):
            return {"b": str(b), "recompose": "mismatch"}
        return None

    return _first_failure([random_vb(rng, 4) for _ in range(max(cfg.samples // 5, 1))], t)


def _morphism_law(o: BfsObject, sampler, n: int) -> CheckOutcome:
    def t(pair):
        x, y = pair
        out = check_delta_multiplicative(o, x, y)
        return None if out.ok else {"b": str(x[1]), "b'": str(y[1]), **out.witness}

    return _first_failure([sampler() for _ in range(n)], t)


@check("betti.morphism_law", "Delta(b . e . b') = Delta(b) Delta(b') for the Betti object", "betti")
def _(cfg):
    rng = _rng("betti.morphism_law", cfg)
    o = betti.betti_object(cfg.truncation)
    pick = lambda: (rng.choice((0, 1, -2)), random_vb(rng, 3, 2))
    return _morphism_law(o, lambda: (pick(), pick()), cfg.samples)


@check("betti.coassociativity", "coassociativity on X1^-1 and X0^n (X1 - 1), |n| <= 3", "betti")
def _(cfg):
    gens = [betti.X1**-1] + [betti.X0**n * (betti.X1 - 1) for n in range(-3, 4)]
    return _first_failure(gens, lambda w: None if betti.coassociativity_defect(w).is_zero() else str(w))


@check("betti.filtration", "Delta_OB raises the filtration degree by at least one", "betti")
def _(cfg):
    rng = _rng("betti.filtration", cfg)
    N = cfg.truncation

    def t(b):
        db = filtration_degree(b, N)
        if isinstance(db, Unbounded) or db + 1 > N:
            return None
        dd = filtration_degree(betti.delta_OB(b), N)
        return None if at_least(dd, db + 1) else {"b": str(b), "deg b": db, "deg Delta": str(dd)}

    samples = [(betti.X0 - 1) ** rng.randint(0, 2) * random_vb(rng, 3) for _ in range(max(cfg.samples // 4, 1))]
    return _first_failure(samples, t)


@check("betti.filtration_compliance", "e, col and rho(F^1) lie in F^1 for the Betti object", "betti", "bfs")
def _(cfg):
    return filtration_compliance(betti.betti_object(cfg.truncation))


# --- de Rham explicit object ---------------------------------------------------------------

@check("derham.two_path", "rrho from generator images equals S . transpose . rho . S", "derham")
def _(cfg):
    rng = _rng("derham.two_path", cfg)
    samples = [random_vdr_monomial(rng, 5) for _ in range(max(cfg.samples // 5, 1))] + [random_vdr(rng, 4) for _ in range(5)]
    return _first_failure(samples, lambda v: None if derham.rrho(v) == derham.rrho_composite(v) else str(v))


@check("derham.delta_theorem", "Delta_ODR(e0^n) = Delta^{W,DR}(e0^n e1), 0 <= n <= 8", "derham")
def _(cfg):
    def t(n):
        got = derham.delta_ODR(derham.e0**n)
        return None if got == derham.delta_WDR(n) else {"n": n, "got": str(got)}

    return _first_failure(range(9), t)


@check("derham.morphism_law", "Delta(u e1 v) = Delta(u) Delta(v) for the de Rham object", "derham")
def _(cfg):
    rng = _rng("derham.morphism_law", cfg)
    o = derham.derham_object()
    pick = lambda: (rng.choice((0, 1)), random_vdr_monomial(rng, 3))
    return _morphism_law(o, lambda: (pick(), pick()), cfg.samples)


@check("derham.coassociativity", "coassociativity on e0^n e1, n <= 4", "derham")
def _(cfg):
    gens = [derham.e0**n * derham.e1 for n in range(5)]
    return _first_failure(gens, lambda w: None if derham.coassociativity_defect(w).is_zero() else str(w))


@check("derham.grading", "Delta_ODR sends degree n to degree n + 1", "derham", "bfs")
def _(cfg):
    rng = _rng("derham.grading", cfg)
    g = grading_compliance(derham.derham_object())
    if not g.ok:
        return g

    def t(v):
        d = v.degrees().pop()
        out = derham.delta_ODR(v)
        return None if out.is_zero() or out.degrees() == {d + 1} else {"v": str(v), "out": str(out)}

    return _first_failure([random_vdr(rng, 0, 3, degree=rng.randint(0, 4)) for _ in range(20)], t)


# --- graded comparison ------------------------------------------------------------------------

def _report_outcome(rep) -> CheckOutcome:
    bad = [i for i in rep.items if not i["ok"]]
    return CheckOutcome(rep.ok, bad or None)


@check("gr.objects", "gr of the Betti object equals the de Rham object", "gr")
def _(cfg):
    return _report_outcome(derham.gr_compare_betti(cfg.truncation))


@check("gr.delta_literal", "degree-(n+1) Magnus component of Delta^{W,B}(X0^n (X1 - 1)) vs Delta^{W,DR}(e0^n e1)", "gr")
def _(cfg):
    return _report_outcome(derham.gr_delta_compare(cfg.truncation))


@check("gr.delta_lifted", "gr(Delta^{W,B}) on the lift (X0 - 1)^n (X1 - 1) of e0^n e1 equals Delta^{W,DR}", "gr")
def _(cfg):
    return _report_outcome(derham.gr_delta_compare_lifted(cfg.truncation))


@check("gr.magnus_multiplicative", "truncated Magnus expansion is multiplicative", "gr", "core")
def _(cfg):
    rng = _rng("gr.magnus_multiplicative", cfg)
    N = cfg.truncation

    def t(pair):
        a, b = pair
        lhs = magnus(a * b, N).body
        rhs = (magnus(a, N).body * magnus(b, N).body).truncate(N)
        return None if lhs == rhs else {"a": str(a), "b": str(b)}

    return _first_failure([(random_vb2(rng), random_vb2(rng)) for _ in range(max(cfg.samples // 4, 1))], t)


@check("gr.identities", "[g]_0 = 1, [g h - 1]_1 = [g - 1]_1 + [h - 1]_1, [g^-1 - 1]_1 = -[g - 1]_1", "gr", "core")
def _(cfg):
    rng = _rng("gr.identities", cfg)
    N = cfg.truncation
    g1 = lambda x: magnus(x, N).component(1)

    def t(pair):
        g, h = pair
        if magnus(g, N).component(0) != VDR2.one():
            return {"g": str(g), "fails": "[g]_0"}
        if g1(g * h - 1) != g1(g - 1) + g1(h - 1):
            return {"g": str(g), "h": str(h), "fails": "[gh - 1]_1"}
        if g1(g.inverse() - 1) != -g1(g - 1):
            return {"g": str(g), "fails": "[g^-1 - 1]_1"}
        k = random_group_element(rng, VB2, 3, 1)
        k = VB2.basis_element(next(iter(k.terms)))
        if g1(g * (h - 1) * k) != g1(h - 1):
            return {"g": str(g), "h": str(h), "fails": "[g (h - 1) k]_1"}
        return None

    mono = lambda: VB2.basis_element(next(iter(random_group_element(rng, VB2, 4, 1).terms)))
    return _first_failure([(mono(), mono()) for _ in range(max(cfg.samples // 4, 1))], t)


@check("core.parse_roundtrip", "parse . serialize is the identity", "core")
def _(cfg):
    rng = _rng("core.parse_roundtrip", cfg)
    samples = [random_vb(rng), random_vb2(rng), random_vdr(rng), random_vdr2(rng)]
    samples += [random_group_element(rng, bb.P5, 3, 3), random_tensor_element(rng, bd.UP5, 3, 3)]
    samples = samples * max(cfg.samples // 25, 1)
    return _first_failure(samples, lambda x: None if parse(serialize(x), x.algebra) == x else serialize(x))


# --- BFS framework ---------------------------------------------------------------------------

def _swap_factors(x: Element) -> Element:
    return x.map_keys(lambda k: (k[1], k[0]), VB2)


@check("bfs.pullback", "pullback along an identification preserves the coproduct and factorization", "bfs")
def _(cfg):
    o = betti.betti_object(cfg.truncation)
    X1, Y1 = VB2.gen("X1"), VB2.gen("Y1")
    P = AlgebraMatrix.diag(VB2, [Y1, X1 * Y1, VB2.one()])
    iso = BimoduleIso(g=lambda b: b, g_inv=lambda b: b, f=_swap_factors, P=P, source=VB, target=VB2)
    o2 = pullback(o, iso)
    f = check_factorization(o2)
    if not f.ok:
        return f
    rng = _rng("bfs.pullback", cfg)
    for _ in range(10):
        b = random_vb(rng, 3)
        if delta(o2, b) != _swap_factors(delta(o, b)):
            return CheckOutcome(False, str(b))
    return CheckOutcome(True)


@check("bfs.geometric_identification", "the geometric Betti bimodule in coordinates reproduces the explicit object", "bfs", "braid")
def _(cfg):
    o = betti.betti_object(cfg.truncation)
    geo = BfsObject("O^B_geo", VB, VB2, 3, bb.rurho_geometric, o.e, o.row, o.col)
    f = check_factorization(geo)
    if not f.ok:
        return f
    rng = _rng("bfs.geometric_identification", cfg)
    for _ in range(10):
        b = random_vb(rng, 3, 2)
        if delta(geo, b) != delta(o, b):
            return CheckOutcome(False, str(b))
    return CheckOutcome(True)


# --- braid, Betti side ------------------------------------------------------------------------------

@check("braid.relators", "every K4 relator and the central element are trivial in the normal form", "braid")
def _(cfg):
    bad = {k: str(v) for k, v in bb.k4_relators(bb.k4_generators()).items() if v != bb.P5.one()}
    return CheckOutcome(not bad, bad or None)


@check("braid.theta_inverse", "Theta_h . Theta_{h^-1} = id on generators", "braid")
def _(cfg):
    t = bb.theta_table()
    for code in (1, 2, -1, -2):
        for g in (1, 2, 3):
            if bb.apply_substitution(t[code], t[-code][g - 1]) != (g,):
                return CheckOutcome(False, {"h": code, "generator": g})
    return CheckOutcome(True)


@check("braid.theta_abelian", "abelianized Theta is the identity", "braid")
def _(cfg):
    t = bb.theta_table()
    for code, images in t.items():
        for g, w in enumerate(images, 1):
            exps = [sum((1 if x > 0 else -1) for x in w if abs(x) == j) for j in (1, 2, 3)]
            if exps != [1 if j == g else 0 for j in (1, 2, 3)]:
                return CheckOutcome(False, {"h": code, "generator": g, "exponents": exps})
    return CheckOutcome(True)


@check("braid.projection_table", "projections of the K4 generators match the table; pr5 . l = id", "braid")
def _(cfg):
    g = bb.k4_generators()
    for which in ("pr1", "pr2", "pr5"):
        for n in bb.K4_NAMES:
            if bb.project(which, g[n]) != bb.PR_TABLE[which][n]:
                return CheckOutcome(False, {"projection": which, "generator": n})
    rng = _rng("braid.projection_table", cfg)
    for _ in range(20):
        w = VB.basis_element((random_word(rng, 2, 6),))
        if bb.project("pr5", bb.ell(w)) != w:
            return CheckOutcome(False, str(w))
    return CheckOutcome(True)


@check("braid.pr12_witnesses", "x23, x34 x13 x14, x14, x23 x24 x34 project to X0, X1, Y0, Y1", "braid")
def _(cfg):
    w = bb.pr12_witnesses()
    bad = {k: str(bb.project("pr12", v)) for k, v in w.items() if bb.project("pr12", v) != VB2.gen(k)}
    return CheckOutcome(not bad, bad or None)


def random_p5(rng, max_len=3, terms=3) -> Element:
    return random_group_element(rng, bb.P5, max_len, terms)


def random_filtered_p5(rng, k: int) -> Element:
    """random_p5 times k factors (g - 1), g a random group element, so degree >= k."""
    x = random_p5(rng, 2, 2)
    for _ in range(k):
        g = bb.P5.basis_element(next(iter(random_group_element(rng, bb.P5, 3, 1).terms)))
        x = x * (g - 1)
    return x


def random_kernel(rng) -> Element:
    p = random_p5(rng)
    return p - bb.ell(bb.project("pr5", p))


@check("braid.fox_roundtrip", "Fox decomposition and recomposition are inverse", "braid")
def _(cfg):
    rng = _rng("braid.fox_roundtrip", cfg)

    def t(k):
        q = bb.fox_decompose(k)
        if bb.recompose(q) != k:
            return {"k": str(k)}
        if bb.fox_decompose(bb.recompose(q)) != q:
            return {"q": [str(x) for x in q]}
        p = bb.fox_decompose_right(k)
        if bb.recompose_right(p) != k:
            return {"k": str(k), "side": "right"}
        return None

    return _first_failure([random_kernel(rng) for _ in range(cfg.samples)], t)


@check("braid.rvarpi_multiplicative", "rvarpi(p q) = rvarpi(p) rvarpi(q)", "braid")
def _(cfg):
    rng = _rng("braid.rvarpi_multiplicative", cfg)

    def t(pair):
        p, q = pair
        return None if bb.rvarpi(p * q) == bb.rvarpi(p) @ bb.rvarpi(q) else {"p": str(p), "q": str(q)}

    return _first_failure([(random_p5(rng, 2, 2), random_p5(rng, 2, 2)) for _ in range(max(cfg.samples // 5, 1))], t)


@check("braid.rurho_geometric", "M3(pr12) . rvarpi . l = rurho on X0, X1 and random words", "braid")
def _(cfg):
    rng = _rng("braid.rurho_geometric", cfg)
    words = [betti.X0, betti.X1, betti.X0 - 1, betti.X1 - 1] + [random_vb_monomial(rng, 4) for _ in range(20)]
    return _first_failure(words, lambda v: None if bb.rurho_geometric(v) == betti.rurho(v) else str(v))


@check("braid.varpi_relation", "rvarpi = Ad_{diag(x_i5)^-1} . op . transpose . varpi . op", "braid")
def _(cfg):
    rng = _rng("braid.varpi_relation", cfg)
    return _first_failure(
        [random_p5(rng, 3, 2) for _ in range(20)],
        lambda p: None if bb.rvarpi_via_varpi(p) == bb.rvarpi(p) else str(p),
    )


@check("braid.mb_action", "left action on M^B: rurho on coordinates equals the geometric route", "braid")
def _(cfg):
    rng = _rng("braid.mb_action", cfg)

    def t(pair):
        v, m = pair
        a, b = bb.mb_left_action(v, m), bb.mb_left_action_geometric(v, m)
        return None if a == b else {"v": str(v), "m": str(m)}

    pairs = [(random_vb(rng, 3, 2), bb.MBElement.of(random_vb2(rng, 2, 2), random_vb2(rng, 2, 2), random_vb2(rng, 2, 2))) for _ in range(50)]
    out = _first_failure(pairs, t)
    if not out.ok:
        return out
    m = bb.MBElement.of(*(random_vb2(rng) for _ in range(3)))
    want = betti.RUCOL @ (betti.RUROW @ m.column())
    got = bb.mb_left_action(betti.X1 - 1, m).column()
    return CheckOutcome(got == want, None if got == want else "X1 - 1 acts as rucol . rurow")


def _random_filtered_triple(rng, a: int) -> tuple:
    """Coordinates with least filtration degree exactly a - 1."""
    coords = []
    for i in range(3):
        d = a - 1 if i == 0 else rng.randint(a - 1, a)
        x = VB2.one()
        for _ in range(d):
            x = x * (VB2.basis_element(next(iter(random_group_element(rng, VB2, 2, 1).terms))) - 1)
        coords.append(x * random_vb2(rng, 1, 1) if rng.random() < 0.5 else x)
    return tuple(coords)


@check("braid.mb_filtration", "F^{a-1}(V^B (x) V^B)^3 lands in F^a M^B with kernel degree 1 + min coordinate degree", "braid")
def _(cfg):
    rng = _rng("braid.mb_filtration", cfg)
    N = cfg.truncation

    def t(a):
        m = bb.MBElement(_random_filtered_triple(rng, a))
        if all(c.is_zero() for c in m.coords):
            return None
        k = bb.mb_to_kernel(m)
        got, kd = bb.mb_filtration_degree(m, N), bb.p5_filtration_degree(k, N)
        if not at_least(got, a) or got != kd:
            return {"a": a, "m": str(m), "mb degree": str(got), "kernel degree": str(kd)}
        if bb.kernel_to_mb(k) != m:
            return {"a": a, "m": str(m), "roundtrip": str(bb.kernel_to_mb(k))}
        if not isinstance(kd, Unbounded):
            for qi in bb.fox_decompose(k):
                if not qi.is_zero() and not at_least(bb.p5_filtration_degree(qi, N), kd - 1):
                    return {"a": a, "m": str(m), "fox coordinate": str(qi)}
        return None

    return _first_failure([1 + (i % N) for i in range(max(cfg.samples // 2, 1))], t)


@check("braid.appendix_superadditive", "degrees add under the F3 x F2 split and the product of k[P5*]", "braid")
def _(cfg):
    rng = _rng("braid.appendix_superadditive", cfg)
    N = cfg.truncation
    f3 = lambda: bb.f3_element(random_word(rng, 3, 3))
    f2 = lambda: bb.ell(VB.basis_element((random_word(rng, 2, 3),)))

    def aug_power(gen, k):
        x = bb.P5.one()
        for _ in range(k):
            x = x * (gen() - 1)
        return x

    for _ in range(max(cfg.samples // 5, 1)):
        n = rng.randint(1, 3)
        a = rng.randint(0, n)
        u, v = aug_power(f3, a), aug_power(f2, n - a)
        x = u * v
        if not x.is_zero() and not at_least(bb.p5_filtration_degree(x, N), n):
            return CheckOutcome(False, {"u": str(u), "v": str(v), "n": n})
        p, q = random_filtered_p5(rng, rng.randint(0, 2)), random_filtered_p5(rng, rng.randint(0, 2))
        dp, dq = bb.p5_filtration_degree(p, N), bb.p5_filtration_degree(q, N)
        if isinstance(dp, Unbounded) or isinstance(dq, Unbounded) or dp + dq > N:
            continue
        if not at_least(bb.p5_filtration_degree(p * q, N), dp + dq):
            return CheckOutcome(False, {"p": str(p), "q": str(q)})
    return CheckOutcome(True)


@check("braid.appendix_witness", "products of n augmentation generators have degree >= n and decompose accordingly", "braid")
def _(cfg):
    N = cfg.truncation
    g = bb.k4_generators()
    gens = list(g.values()) + list(bb.F3_GENS)
    words = [bb.P5.one()] + gens + [a * b for a, b in itertools.product(bb.F3_GENS + (bb.L_X0, bb.L_X1), repeat=2)]
    for n in (1, 2, 3):
        for combo in itertools.islice(itertools.product(gens, repeat=n), 0, 60):
            x = bb.P5.one()
            for h in combo:
                x = x * (h - 1)
            if not x.is_zero() and not at_least(bb.p5_filtration_degree(x, N), n):
                return CheckOutcome(False, {"n": n, "product of": [str(h) for h in combo]})
    for i, xi in enumerate(bb.F3_GENS):
        for w in words:
            for h in gens[:6]:
                k = (xi - 1) * (h - 1) * w
                d = bb.p5_filtration_degree(k, N)
                if not at_least(d, 2):
                    return CheckOutcome(False, {"x": str(xi), "w": str(w)})
                for qi in bb.fox_decompose(k):
                    if not qi.is_zero() and not at_least(bb.p5_filtration_degree(qi, N), 1):
                        return CheckOutcome(False, {"x": str(xi), "w": str(w), "q": str(qi)})
    return CheckOutcome(True)


@check("braid.gr_kernel", "graded classes of kernel elements lie in the kernel of U(pr5); gr(pr) = U(pr)", "braid", "braid-derham")
def _(cfg):
    rng = _rng("braid.gr_kernel", cfg)
    N = cfg.truncation
    for _ in range(max(cfg.samples // 5, 1)):
        k = random_kernel(rng)
        d = bb.p5_filtration_degree(k, N)
        if isinstance(d, Unbounded):
            continue
        cls = bd.as_up5(bb.p5_gr_component(k, d, N))
        if not bd.u_project("pr5", cls).is_zero():
            return CheckOutcome(False, {"k": str(k), "class": str(cls)})
        p = random_filtered_p5(rng, rng.randint(0, 2))
        dp = bb.p5_filtration_degree(p, N)
        if isinstance(dp, Unbounded):
            continue
        cp = bd.as_up5(bb.p5_gr_component(p, dp, N))
        for which, tgt in (("pr5", VDR), ("pr12", VDR2)):
            img = bb.project(which, p)
            want = magnus(img, N).component(dp) if not img.is_zero() else tgt.zero()
            if bd.u_project(which, cp) != want:
                return CheckOutcome(False, {"p": str(p), "projection": which})
    return CheckOutcome(True)


# --- braid, de Rham side ------------------------------------------------------------------------------

@check("up5.derivations", "derivations read from Theta: delta_e0(t25) = [t25, t35], delta_e1(t15) = [t15, t25], ...", "braid-derham")
def _(cfg):
    t15, t25, t35 = bd.T_GENS
    e0, e1 = bd.u_e0, bd.u_e1
    want = {
        (e0, t15): bd.UP5.zero(),
        (e0, t25): bd.bracket(t25, t35),
        (e0, t35): bd.bracket(t35, t25),
        (e1, t15): bd.bracket(t15, t25),
        (e1, t25): bd.bracket(t25, t15),
        (e1, t35): bd.UP5.zero(),
    }
    for (e, t), w in want.items():
        got = e * t - t * e
        if got != w:
            return CheckOutcome(False, {"e": str(e), "t": str(t), "got": str(got)})
    return CheckOutcome(True)


@check("up5.relators", "infinitesimal braid relations vanish in the twisted product", "braid-derham")
def _(cfg):
    bad = {k: str(v) for k, v in bd.infinitesimal_relators().items() if not v.is_zero()}
    bad.update({k: str(v) for k, v in bd.definition_defects().items() if not v.is_zero()})
    return CheckOutcome(not bad, bad or None)


@check("up5.projection_table", "U(pr) of the t_ij match the table; U(pr5) . l = id; U(pr) multiplicative", "braid-derham")
def _(cfg):
    g = bd.infinitesimal_generators()
    for which in ("pr1", "pr2", "pr5"):
        for n, v in g.items():
            if bd.u_project(which, v) != bd.LIE_PR_TABLE[which][n]:
                return CheckOutcome(False, {"projection": which, "generator": n})
    rng = _rng("up5.projection_table", cfg)
    for _ in range(20):
        w = random_vdr_monomial(rng, 4)
        if bd.u_project("pr5", bd.u_ell(w)) != w:
            return CheckOutcome(False, str(w))
        a, b = random_tensor_element(rng, bd.UP5, 2, 2), random_tensor_element(rng, bd.UP5, 2, 2)
        for which in ("pr1", "pr2", "pr5", "pr12"):
            if bd.u_project(which, a * b) != bd.u_project(which, a) * bd.u_project(which, b):
                return CheckOutcome(False, {"a": str(a), "b": str(b), "projection": which})
    return CheckOutcome(True)


@check("up5.gr_consistency", "the twisted product is the graded product of k[P5*]", "braid-derham")
def _(cfg):
    rng = _rng("up5.gr_consistency", cfg)
    N = cfg.truncation
    for _ in range(max(cfg.samples // 4, 1)):
        a, b = random_filtered_p5(rng, rng.randint(0, 2)), random_filtered_p5(rng, rng.randint(0, 2))
        da, db = bb.p5_filtration_degree(a, N), bb.p5_filtration_degree(b, N)
        if isinstance(da, Unbounded) or isinstance(db, Unbounded) or da + db > N:
            continue
        lhs = bd.as_up5(bb.p5_gr_component(a * b, da + db, N))
        rhs = bd.as_up5(bb.p5_gr_component(a, da, N)) * bd.as_up5(bb.p5_gr_component(b, db, N))
        if lhs != rhs:
            return CheckOutcome(False, {"a": str(a), "b": str(b), "gr(ab)": str(lhs), "product": str(rhs)})
    return CheckOutcome(True)


@check("up5.lie_roundtrip", "decomposition in the free module on t_i5 roundtrips; lie_rvarpi multiplicative", "braid-derham")
def _(cfg):
    rng = _rng("up5.lie_roundtrip", cfg)
    for _ in range(cfg.samples):
        p = [random_tensor_element(rng, bd.UP5, 2, 2) for _ in range(3)]
        k = bd.lie_recompose(p)
        if bd.lie_recompose(bd.lie_decompose(k)) != k or bd.lie_decompose(k) != tuple(p):
            return CheckOutcome(False, [str(x) for x in p])
    for _ in range(max(cfg.samples // 5, 1)):
        a, b = random_tensor_element(rng, bd.UP5, 2, 2), random_tensor_element(rng, bd.UP5, 2, 2)
        if bd.lie_rvarpi(a * b) != bd.lie_rvarpi(a) @ bd.lie_rvarpi(b):
            return CheckOutcome(False, {"a": str(a), "b": str(b)})
    return CheckOutcome(True)


@check("up5.rrho_geometric", "M3(U(pr12)) . lie_rvarpi . U(l) = rrho on e0, e1 and random monomials", "braid-derham")
def _(cfg):
    rng = _rng("up5.rrho_geometric", cfg)
    words = [derham.e0, derham.e1] + [random_vdr_monomial(rng, 3) for _ in range(20)]
    return _first_failure(words, lambda v: None if bd.rrho_geometric(v) == derham.rrho(v) else str(v))


@check("up5.varpi_relation", "lie_rvarpi = M3(S) . transpose . lie_varpi . S", "braid-derham")
def _(cfg):
    rng = _rng("up5.varpi_relation", cfg)
    return _first_failure(
        [random_tensor_element(rng, bd.UP5, 3, 3) for _ in range(20)],
        lambda p: None if bd.lie_rvarpi_via_varpi(p) == bd.lie_rvarpi(p) else str(p),
    )


def _random_mdr(rng, degree: int) -> list:
    out = [random_vdr2(rng, 0, 2, degree=degree) if rng.random() < 0.8 else VDR2.zero() for _ in range(3)]
    if all(x.is_zero() for x in out):
        out[0] = random_vdr2(rng, 0, 1, degree=degree)
    return out


@check("up5.mdr_to_gr_mb", "M^DR -> gr(M^B) agrees with the Betti geometry on generators and random elements", "braid-derham")
def _(cfg):
    rng = _rng("up5.mdr_to_gr_mb", cfg)
    N = cfg.truncation
    units = [[VDR2.one() if j == i else VDR2.zero() for j in range(3)] for i in range(3)]
    samples = units + [_random_mdr(rng, rng.randint(0, N - 1)) for _ in range(20)]

    def t(m):
        r = bd.mdr_to_gr_mb(m, N)
        if not r.agrees:
            return {"m": [str(x) for x in m], "degree": str(r.degree), "got": [str(x) for x in r.coordinates]}
        d = bd._homogeneous_degree(m)
        if d + 2 <= N:
            for i in (0, 1):
                if not bd.left_action_compatible(i, m, N):
                    return {"m": [str(x) for x in m], "left action": i}
            a = random_vdr2(rng, 0, 1, degree=1)
            if not bd.right_action_compatible(m, a, N):
                return {"m": [str(x) for x in m], "right action": str(a)}
        return None

    return _first_failure(samples, t)


def suites() -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for c in REGISTRY.values():
        for s in c.suites:
            out.setdefault(s, []).append(c.check_id)
    out["all"] = list(REGISTRY)
    return {k: sorted(v) for k, v in out.items()}


_ = tensor_product, op  # re-exported helpers for scripts
