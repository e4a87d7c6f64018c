"""Truncated Magnus expansion and the augmentation filtration.

X -> 1 + e and X^-1 -> sum_k (-e)^k, applied factor by factor; letters of
different factors commute, so the image of a key is the product of the
per-factor series.  Powers of the augmentation ideal correspond to the
degree filtration on the image, which makes filtration degrees and graded
components computable exactly below a truncation order N.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .algebra import GRADED, Algebra, Element, norm_scalar


class Unbounded(enum.Enum):
    """Filtration degrees that are not a finite number below the truncation."""

    ZERO = "zero"  # the element is 0: every F^n contains it
    EXCEEDS = "exceeds"  # nonzero but its Magnus image vanishes below N+1

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MagnusSeries:
    truncation: int
    body: Element

    def component(self, n: int) -> Element:
        if n > self.truncation:
            raise ValueError(f"degree {n} is beyond truncation {self.truncation}")
        return self.body.homogeneous_part(n)


def graded_algebra(alg: Algebra) -> Algebra:
    try:
        return GRADED[alg]
    except KeyError:
        raise TypeError(f"no Magnus target registered for {alg}") from None


@lru_cache(maxsize=200_000)
def _word_series(word: tuple[int, ...], n: int) -> tuple:
    """Magnus image of a single-factor reduced word, degrees <= n."""
    acc: dict = {(): 1}
    for x in word:
        g = abs(x) - 1
        nxt: dict = defaultdict(int)
        for mono, c in acc.items():
            nxt[mono] += c
            room = n - len(mono)
            if x > 0:
                if room >= 1:
                    nxt[mono + (g,)] += c
            else:
                sign = -1
                for k in range(1, room + 1):
                    nxt[mono + (g,) * k] += sign * c
                    sign = -sign
        acc = {m: c for m, c in nxt.items() if c}
    return tuple(acc.items())


@lru_cache(maxsize=200_000)
def _key_series(key: tuple, n: int) -> tuple:
    acc: dict = {(): 1}
    for w in key:
        ws = _word_series(w, n)
        nxt: dict = defaultdict(int)
        for prefix, c in acc.items():
            used = sum(len(p) for p in prefix)
            for mono, d in ws:
                if used + len(mono) <= n:
                    nxt[prefix + (mono,)] += c * d
        acc = {m: c for m, c in nxt.items() if c}
    return tuple(acc.items())


def magnus(a: Element, n: int, target: Algebra | None = None) -> MagnusSeries:
    """Magnus image of a group-algebra element truncated above degree n."""
    if n < 0:
        raise ValueError("truncation must be >= 0")
    if a.algebra.kind != "group":
        raise TypeError("magnus is defined on group algebras")
    tgt = target or graded_algebra(a.algebra)
    out: dict = defaultdict(int)
    for k, c in a.terms.items():
        for mono, d in _key_series(k, n):
            out[mono] += c * d
    return MagnusSeries(n, tgt.element((m, norm_scalar(c)) for m, c in out.items() if c))


def filtration_degree(a: Element, n: int, target: Algebra | None = None):
    """Largest d with a in F^d (d <= n), or an `Unbounded` marker."""
    if a.is_zero():
        return Unbounded.ZERO
    body = magnus(a, n, target).body
    if body.is_zero():
        return Unbounded.EXCEEDS
    return min(body.degrees())


def at_least(deg, d: int) -> bool:
    """Whether a filtration degree (possibly unbounded) is >= d."""
    return isinstance(deg, Unbounded) or deg >= d


def gr_component(a: Element, d: int, n: int, target: Algebra | None = None) -> Element:
    """Class of a in F^d / F^(d+1), as a homogeneous degree-d element."""
    if d > n:
        raise ValueError(f"degree {d} is beyond truncation {n}")
    deg = filtration_degree(a, n, target)
    if not at_least(deg, d):
        raise ValueError(f"element has filtration degree {deg} < {d}")
    return magnus(a, n, target).component(d)


def leading_class(a: Element, n: int, target: Algebra | None = None):
    """(degree, class) of the lowest nonvanishing Magnus component."""
    deg = filtration_degree(a, n, target)
    if isinstance(deg, Unbounded):
        return deg, None
    return deg, magnus(a, n, target).component(deg)
