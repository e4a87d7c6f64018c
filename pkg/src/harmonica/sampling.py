"""Seeded random elements for property checks."""
from __future__ import annotations

import random

from .algebra import VB, VB2, VDR, VDR2, Algebra, Element, reduce_word

COEFFS = (-3, -2, -1, 1, 2, 3)


def random_word(rng: random.Random, rank: int, max_len: int) -> tuple[int, ...]:
    n = rng.randint(0, max_len)
    w: list[int] = []
    while len(w) < n:
        x = rng.choice([g for i in range(1, rank + 1) for g in (i, -i)])
        if w and w[-1] == -x:
            continue
        w.append(x)
    return reduce_word(w)


def random_monomial(rng: random.Random, rank: int, max_len: int, exact: int | None = None) -> tuple[int, ...]:
    n = exact if exact is not None else rng.randint(0, max_len)
    return tuple(rng.randrange(rank) for _ in range(n))


def random_group_element(rng: random.Random, alg: Algebra, max_len: int = 4, terms: int = 3) -> Element:
    ranks = [len(f) for f in alg.alphabet.factors]
    out = {}
    for _ in range(rng.randint(1, terms)):
        key = tuple(random_word(rng, r, max_len) for r in ranks)
        out[key] = out.get(key, 0) + rng.choice(COEFFS)
    return alg.element(out)


def random_tensor_element(rng: random.Random, alg: Algebra, max_len: int = 3, terms: int = 3, degree: int | None = None) -> Element:
    """Random element; homogeneous of the given total degree when requested."""
    ranks = [len(f) for f in alg.alphabet.factors]
    out = {}
    for _ in range(rng.randint(1, terms)):
        if degree is None:
            key = tuple(random_monomial(rng, r, max_len) for r in ranks)
        else:
            cuts = sorted(rng.randint(0, degree) for _ in range(len(ranks) - 1))
            sizes = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
            key = tuple(random_monomial(rng, r, 0, s) for r, s in zip(ranks, sizes))
        out[key] = out.get(key, 0) + rng.choice(COEFFS)
    return alg.element(out)


def random_vb(rng, max_len=5, terms=3) -> Element:
    return random_group_element(rng, VB, max_len, terms)


def random_vb2(rng, max_len=3, terms=3) -> Element:
    return random_group_element(rng, VB2, max_len, terms)


def random_vdr(rng, max_len=3, terms=3, degree=None) -> Element:
    return random_tensor_element(rng, VDR, max_len, terms, degree)


def random_vdr2(rng, max_len=2, terms=3, degree=None) -> Element:
    return random_tensor_element(rng, VDR2, max_len, terms, degree)


def random_vb_monomial(rng, max_len=4) -> Element:
    return VB.basis_element((random_word(rng, 2, max_len),))


def random_vdr_monomial(rng, max_len=3, exact=None) -> Element:
    return VDR.basis_element((random_monomial(rng, 2, max_len, exact),))
