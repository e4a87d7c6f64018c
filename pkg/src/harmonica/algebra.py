"""Exact noncommutative algebras with rational coefficients.

Two families of basis are supported, both over a product alphabet whose
factors commute with each other:

* group algebras of products of free groups (basis = reduced words), and
* tensor algebras of products of free monoids (basis = monomials).

A basis key is a tuple with one entry per factor.  In a group algebra each
entry is a reduced word encoded as a tuple of nonzero ints, ``i+1`` for the
i-th generator of that factor and ``-(i+1)`` for its inverse.  In a tensor
algebra each entry is a tuple of generator indices.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


class AlgebraMismatch(TypeError):
    """Operands live in different algebras."""


class NotInvertible(ValueError):
    pass


def norm_scalar(c) -> Scalar:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"not an exact scalar: {c!r}")


def format_scalar(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Alphabet:
    factors: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        names = [n for f in self.factors for n in f]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")

    def locate(self, name: str) -> tuple[int, int]:
        for fi, f in enumerate(self.factors):
            if name in f:
                return fi, f.index(name)
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for f in self.factors for n in f)


def reduce_word(word: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(word))


def run_length(word: Iterable[int]) -> list[tuple[int, int]]:
    """Group a letter sequence into (letter, multiplicity) runs."""
    runs: list[list[int]] = []
    for x in word:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return [(a, b) for a, b in runs]


class Algebra:
    """Common machinery; subclasses define the basis and its product."""

    kind = "abstract"

    def __init__(self, name: str, alphabet: Alphabet):
        self.name = name
        self.alphabet = alphabet
        self.extra_generators: dict[str, Callable[[], "Element"]] = {}
        offs, total = [], 0
        for f in alphabet.factors:
            offs.append(total)
            total += len(f)
        self._offsets = tuple(offs)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # --- construction -------------------------------------------------
    def element(self, terms: Mapping | Iterable = ()) -> "Element":
        acc: dict = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] += c
        return Element(self, {k: norm_scalar(c) for k, c in acc.items() if c != 0})

    def zero(self) -> "Element":
        return Element(self, {})

    def unit_key(self):
        return tuple(() for _ in self.alphabet.factors)

    def one(self) -> "Element":
        return Element(self, {self.unit_key(): 1})

    def scalar(self, c) -> "Element":
        c = norm_scalar(c)
        return Element(self, {self.unit_key(): c} if c else {})

    def gen(self, name: str) -> "Element":
        if name in self.extra_generators:
            return self.extra_generators[name]()
        fi, gi = self.alphabet.locate(name)
        return self.letter(fi, gi)

    def letter(self, factor: int, index: int, power: int = 1) -> "Element":
        raise NotImplementedError

    def generator_names(self) -> tuple[str, ...]:
        return self.alphabet.names + tuple(self.extra_generators)

    def basis_element(self, key) -> "Element":
        return Element(self, {key: 1})

    # --- basis level --------------------------------------------------
    def key_degree(self, key) -> int:
        return sum(len(w) for w in key)

    def sort_key(self, key):
        """Length-lex over the global alphabet; an inverse sorts after its generator."""
        offs = self._offsets
        flat = tuple((offs[fi] + abs(x), x < 0) for fi, w in enumerate(key) for x in w)
        return (self.key_degree(key), flat)

    def mul_keys(self, a, b):
        """Return a key (monomial product) or a mapping key -> coefficient."""
        raise NotImplementedError

    def format_key(self, key) -> str:
        atoms = []
        for fi, w in enumerate(key):
            names = self.alphabet.factors[fi]
            atoms.extend(self._format_factor(names, w))
        return " ".join(atoms)

    def _format_factor(self, names, word) -> list[str]:
        raise NotImplementedError

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and type(other) is type(self)
            and other.name == self.name
            and other.alphabet == self.alphabet
        )

    def __hash__(self):
        return hash((type(self).__name__, self.name, self.alphabet))


class GroupAlgebra(Algebra):
    """k[F_a x F_b x ...]; basis keys are tuples of reduced words."""

    kind = "group"

    def letter(self, factor, index, power=1):
        code = index + 1 if power > 0 else -(index + 1)
        w = (code,) * abs(power)
        key = tuple(w if i == factor else () for i in range(len(self.alphabet.factors)))
        return self.basis_element(key)

    def mul_keys(self, a, b):
        return tuple(reduce_word(x + y) for x, y in zip(a, b))

    def inverse_key(self, key):
        return tuple(invert_word(w) for w in key)

    def word_key(self, letters: Iterable[tuple[str, int]]):
        """Key of the product of (name, exponent) pairs."""
        e = self.one()
        for name, p in letters:
            e = e * self.gen(name) ** p
        (k,) = e.terms
        return k

    def _format_factor(self, names, word):
        out = []
        for x, m in run_length(word):
            n = names[abs(x) - 1]
            p = m if x > 0 else -m
            out.append(n if p == 1 else f"{n}^{p}")
        return out


class TensorAlgebra(Algebra):
    """Tensor algebra of a product of free monoids; basis keys are monomials."""

    kind = "tensor"

    def letter(self, factor, index, power=1):
        if power < 0:
            raise NotInvertible("tensor algebra generators are not invertible")
        w = (index,) * power
        key = tuple(w if i == factor else () for i in range(len(self.alphabet.factors)))
        return self.basis_element(key)

    def mul_keys(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sort_key(self, key):
        offs = self._offsets
        return (self.key_degree(key), tuple(offs[fi] + x for fi, w in enumerate(key) for x in w))

    def _format_factor(self, names, word):
        out = []
        for x, m in run_length(word):
            out.append(names[x] if m == 1 else f"{names[x]}^{m}")
        return out


class Element:
    """An immutable finite linear combination of basis keys."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: Algebra, terms: dict):
        self.algebra = algebra
        self.terms = terms
        self._hash = None

    # --- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise AlgebraMismatch(f"{self.algebra} vs {other.algebra}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = norm_scalar(v)
            else:
                out.pop(k, None)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Element":
        c = norm_scalar(c)
        if c == 0:
            return self.algebra.zero()
        return Element(self.algebra, {k: norm_scalar(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        other = self._coerce(other)
        alg = self.algebra
        out: dict = defaultdict(int)
        mul = alg.mul_keys
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                r = mul(k1, k2)
                if isinstance(r, tuple):
                    out[r] += c1 * c2
                else:
                    for k, c in r.items():
                        out[k] += c1 * c2 * c
        return Element(alg, {k: norm_scalar(c) for k, c in out.items() if c != 0})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Element":
        """Inverse of a unit c*g (g group-like)."""
        alg = self.algebra
        if len(self.terms) != 1 or not hasattr(alg, "inverse_key"):
            raise NotInvertible(f"{self} is not a unit")
        ((k, c),) = self.terms.items()
        return Element(alg, {alg.inverse_key(k): norm_scalar(Fraction(1) / Fraction(c))})

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and hasattr(self.algebra, "inverse_key")

    # --- comparison / inspection ---------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self.algebra.sort_key(kv[0]))

    def constant(self) -> Scalar:
        return self.terms.get(self.algebra.unit_key(), 0)

    def augmentation(self) -> Scalar:
        """Sum of coefficients (group algebras) or constant term (tensor algebras)."""
        if self.algebra.kind == "group":
            return norm_scalar(sum(self.terms.values()))
        return self.constant()

    def degrees(self) -> set[int]:
        return {self.algebra.key_degree(k) for k in self.terms}

    def homogeneous_part(self, d: int) -> "Element":
        kd = self.algebra.key_degree
        return Element(self.algebra, {k: c for k, c in self.terms.items() if kd(k) == d})

    def truncate(self, n: int) -> "Element":
        kd = self.algebra.key_degree
        return Element(self.algebra, {k: c for k, c in self.terms.items() if kd(k) <= n})

    def map_keys(self, fn: Callable, target: Algebra | None = None) -> "Element":
        return (target or self.algebra).element((fn(k), c) for k, c in self.terms.items())

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"{self.algebra.name}[{serialize(self)}]"


def serialize(x: Element) -> str:
    """Canonical text: length-lex term order, p/q coefficients, gen^exp atoms."""
    if not x.terms:
        return "0"
    parts = []
    for k, c in x.sorted_terms():
        body = x.algebra.format_key(k)
        sign = "-" if c < 0 else "+"
        a = abs(Fraction(c))
        if not body:
            txt = format_scalar(a)
        elif a == 1:
            txt = body
        else:
            txt = f"{format_scalar(a)} {body}"
        parts.append((sign, txt))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, t in parts[1:]:
        out += f" {s} {t}"
    return out


def linear_extension(fn: Callable, target: Algebra) -> Callable[[Element], Element]:
    """Extend a basis-key map (key -> Element of target) linearly."""

    def apply(x: Element) -> Element:
        acc = target.zero()
        for k, c in x.terms.items():
            acc = acc + fn(k).scale(c)
        return acc

    return apply


def word_homomorphism(images: Mapping[tuple[int, int], Element], target: Algebra):
    """Algebra map on a group algebra given images of (factor, signed-letter)."""
    cache: dict = {}

    def on_key(key):
        if key in cache:
            return cache[key]
        acc = target.one()
        for fi, w in enumerate(key):
            for x in w:
                acc = acc * images[(fi, x)]
        cache[key] = acc
        return acc

    return linear_extension(on_key, target)


def tensor_homomorphism(images: Mapping[tuple[int, int], Element], target: Algebra):
    """Algebra map on a tensor algebra given images of (factor, letter)."""
    cache: dict = {}

    def on_key(key):
        if key in cache:
            return cache[key]
        acc = target.one()
        for fi, w in enumerate(key):
            for x in w:
                acc = acc * images[(fi, x)]
        cache[key] = acc
        return acc

    return linear_extension(on_key, target)


# --- involutions ----------------------------------------------------------

def op(x: Element) -> Element:
    """Linear anti-automorphism of a group algebra sending g to g^-1."""
    alg = x.algebra
    if alg.kind != "group":
        raise AlgebraMismatch("op is defined on group algebras")
    return Element(alg, _invert_terms(alg, x.terms))


def _invert_terms(alg, terms):
    out: dict = defaultdict(int)
    for k, c in terms.items():
        out[alg.inverse_key(k)] += c
    return {k: c for k, c in out.items() if c}


def antipode(x: Element) -> Element:
    """Antipode of a tensor algebra: reverse each monomial, sign (-1)^degree."""
    alg = x.algebra
    if hasattr(alg, "antipode"):
        return alg.antipode(x)
    if alg.kind != "tensor":
        raise AlgebraMismatch("antipode is defined on tensor algebras")
    out = {}
    for k, c in x.terms.items():
        rk = tuple(tuple(reversed(w)) for w in k)
        out[rk] = -c if alg.key_degree(k) % 2 else c
    return Element(alg, out)


# --- standard algebras ----------------------------------------------------

VB = GroupAlgebra("VB", Alphabet((("X0", "X1"),)))
VB2 = GroupAlgebra("VB2", Alphabet((("X0", "X1"), ("Y0", "Y1"))))
VDR = TensorAlgebra("VDR", Alphabet((("e0", "e1"),)))
VDR2 = TensorAlgebra("VDR2", Alphabet((("e0", "e1"), ("f0", "f1"))))

# Magnus targets: the graded counterpart of each group algebra
GRADED = {VB: VDR, VB2: VDR2}


def tensor_left(x: Element, target: Algebra) -> Element:
    """a -> a (x) 1 for a single-factor algebra into its square."""
    return x.map_keys(lambda k: (k[0], ()), target)


def tensor_right(x: Element, target: Algebra) -> Element:
    """a -> 1 (x) a."""
    return x.map_keys(lambda k: ((), k[0]), target)


def tensor_product(a: Element, b: Element, target: Algebra) -> Element:
    """a (x) b for a, b in the same single-factor algebra."""
    return target.element(((ka[0], kb[0]), ca * cb) for ka, ca in a.terms.items() for kb, cb in b.terms.items())


def e_infinity() -> Element:
    return -VDR.gen("e0") - VDR.gen("e1")


VDR.extra_generators["einf"] = e_infinity
VDR2.extra_generators["einf"] = lambda: -VDR2.gen("e0") - VDR2.gen("e1")
VDR2.extra_generators["finf"] = lambda: -VDR2.gen("f0") - VDR2.gen("f1")
