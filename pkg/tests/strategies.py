"""Hypothesis strategies for elements of the standard algebras."""
from __future__ import annotations

from hypothesis import strategies as st

from harmonica.algebra import VB, VB2, VDR, VDR2, Algebra, reduce_word
from harmonica.braid_betti import P5
from harmonica.braid_derham import UP5

coeffs = st.integers(-3, 3).filter(bool)


def words(rank: int, max_len: int = 4):
    letters = st.sampled_from([s * i for i in range(1, rank + 1) for s in (1, -1)])
    return st.lists(letters, max_size=max_len).map(reduce_word)


def monomials(rank: int, max_len: int = 3):
    return st.lists(st.integers(0, rank - 1), max_size=max_len).map(tuple)


def _keys(alg: Algebra, max_len: int):
    ranks = [len(f) for f in alg.alphabet.factors]
    part = words if alg.kind == "group" else monomials
    return st.tuples(*(part(r, max_len) for r in ranks))


def elements(alg: Algebra, max_len: int = 3, max_terms: int = 3):
    return st.dictionaries(_keys(alg, max_len), coeffs, max_size=max_terms).map(alg.element)


def basis(alg: Algebra, max_len: int = 4):
    return _keys(alg, max_len).map(alg.basis_element)


def homogeneous(alg: Algebra, degree: int, max_terms: int = 3):
    ranks = [len(f) for f in alg.alphabet.factors]

    @st.composite
    def key(draw):
        cuts = sorted(draw(st.integers(0, degree)) for _ in range(len(ranks) - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        return tuple(tuple(draw(st.integers(0, r - 1)) for _ in range(s)) for r, s in zip(ranks, sizes))

    return st.dictionaries(key(), coeffs, min_size=1, max_size=max_terms).map(alg.element)


vb = elements(VB)
vb2 = elements(VB2, 2)
vdr = elements(VDR)
vdr2 = elements(VDR2, 2)
p5 = elements(P5, 2, 2)
up5 = elements(UP5, 2, 2)
