"""Graded-commutative algebras over F2 with polynomial and exterior generators.

An :class:`Element` is a set of monomials (coefficients are implicit, all
equal to 1).  Monomials are exponent tuples in the declared generator order.
Terms are kept sorted leading-term first in graded-lex order: higher total
degree first, then lexicographically larger exponent tuples first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

POLYNOMIAL = "polynomial"
EXTERIOR = "exterior"

Monomial = tuple  # tuple[int, ...], one exponent per generator


class AlgebraMismatch(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int
    kind: str = POLYNOMIAL

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name!r} must have degree >= 1")
        if self.kind not in (POLYNOMIAL, EXTERIOR):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", self.name):
            raise ValueError(f"bad generator name {self.name!r}")


class AlgebraSpec:
    """Ordered generator list; the order is the monomial tie-break order."""

    def __init__(self, generators: Sequence[GeneratorSpec]):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.generators = gens
        self.names = tuple(names)
        self.degrees = tuple(g.degree for g in gens)
        self.exterior = tuple(g.kind == EXTERIOR for g in gens)
        self.index = {n: i for i, n in enumerate(names)}
        self._hash = hash(gens)

    @classmethod
    def polynomial(cls, names: Sequence[str], degree: int = 1) -> "AlgebraSpec":
        return cls([GeneratorSpec(n, degree) for n in names])

    @classmethod
    def build(cls, *specs: tuple) -> "AlgebraSpec":
        """``AlgebraSpec.build(("x", 1), ("e", 1, "exterior"))``."""
        return cls([GeneratorSpec(*s) for s in specs])

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraSpec) and self.generators == other.generators

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{g.name}:{g.degree}{'e' if g.kind == EXTERIOR else ''}" for g in self.generators]
        return f"AlgebraSpec({', '.join(parts)})"

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def degree_of(self, m: Monomial) -> int:
        return sum(a * d for a, d in zip(m, self.degrees))

    def zero(self) -> "Element":
        return Element(self, ())

    def one(self) -> "Element":
        return Element(self, ((0,) * self.ngens,))

    def gen(self, name: str) -> "Element":
        e = [0] * self.ngens
        e[self.index[name]] = 1
        return Element(self, (tuple(e),))

    def gens(self) -> list["Element"]:
        return [self.gen(n) for n in self.names]

    def monomial(self, m: Monomial) -> "Element":
        return Element(self, (tuple(m),))

    def element(self, terms: Iterable[Monomial]) -> "Element":
        """Element from monomials; repeated monomials cancel in pairs."""
        acc: set = set()
        for t in terms:
            t = tuple(t)
            if len(t) != self.ngens:
                raise ValueError(f"monomial {t} has wrong length for {self}")
            if any(a > 1 for a, ext in zip(t, self.exterior) if ext) or min(t, default=0) < 0:
                raise ValueError(f"invalid exponents {t}")
            acc ^= {t}
        return Element._canonical(self, acc)

    def parse(self, text: str) -> "Element":
        return parse_element(self, text)


def _order_key(alg: AlgebraSpec, m: Monomial):
    return (alg.degree_of(m), m)


class Element:
    """An element of a graded-commutative F2-algebra (immutable)."""

    __slots__ = ("alg", "terms", "_set")

    def __init__(self, alg: AlgebraSpec, terms: tuple):
        self.alg = alg
        self.terms = terms
        self._set = None

    @staticmethod
    def _canonical(alg: AlgebraSpec, terms) -> "Element":
        degs = alg.degrees
        ordered = sorted(terms, key=lambda m: (sum(a * d for a, d in zip(m, degs)), m), reverse=True)
        return Element(alg, tuple(ordered))

    @property
    def termset(self) -> frozenset:
        if self._set is None:
            self._set = frozenset(self.terms)
        return self._set

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.alg, self.terms))

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.alg != self.alg:
            raise AlgebraMismatch(f"operands live in different algebras: {self.alg} vs {getattr(other, 'alg', other)}")

    # grading ----------------------------------------------------------------
    def degrees(self) -> set[int]:
        return {self.alg.degree_of(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        degs = self.degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"element with degrees {sorted(degs)} has no single degree")
        return next(iter(degs))

    def component(self, d: int) -> "Element":
        return Element(self.alg, tuple(m for m in self.terms if self.alg.degree_of(m) == d))

    def truncate(self, max_degree: int) -> "Element":
        return Element(self.alg, tuple(m for m in self.terms if self.alg.degree_of(m) <= max_degree))

    # ring operations --------------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element._canonical(self.alg, self.termset ^ other.termset)

    __sub__ = __add__

    def __mul__(self, other: "Element") -> "Element":
        return self.mul(other)

    def mul(self, other: "Element", max_degree: int | None = None) -> "Element":
        self._check(other)
        alg = self.alg
        ext = [i for i, e in enumerate(alg.exterior) if e]
        degs = alg.degrees
        acc: set = set()
        for a in self.terms:
            da = sum(x * d for x, d in zip(a, degs))
            for b in other.terms:
                if max_degree is not None and da + sum(x * d for x, d in zip(b, degs)) > max_degree:
                    continue
                if any(a[i] and b[i] for i in ext):
                    continue  # square-zero generator collides
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Element._canonical(alg, acc)

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative power")
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def square(self) -> "Element":
        """Frobenius square: in characteristic 2 only squares of terms survive."""
        alg = self.alg
        out = []
        for m in self.terms:
            if any(a and e for a, e in zip(m, alg.exterior)):
                continue
            out.append(tuple(2 * a for a in m))
        return Element._canonical(alg, out)


def ring_add(a: Element, b: Element) -> Element:
    return a + b


def ring_mul(a: Element, b: Element, max_degree: int | None = None) -> Element:
    return a.mul(b, max_degree)


# ---------------------------------------------------------------------------
# Degreewise bases and vectors


@lru_cache(maxsize=None)
def _basis(alg: AlgebraSpec, d: int) -> tuple:
    degs = alg.degrees
    ext = alg.exterior
    out: list = []

    def rec(i: int, remaining: int, prefix: list) -> None:
        if i == len(degs):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        top = 1 if ext[i] else remaining // degs[i]
        top = min(top, remaining // degs[i])
        for a in range(top, -1, -1):
            prefix.append(a)
            rec(i + 1, remaining - a * degs[i], prefix)
            prefix.pop()

    rec(0, d, [])
    # descending lexicographic order == graded-lex with larger monomials first
    return tuple(out)


def monomial_basis(alg: AlgebraSpec, d: int) -> tuple:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return _basis(alg, d)


@lru_cache(maxsize=None)
def basis_index(alg: AlgebraSpec, d: int) -> dict:
    return {m: i for i, m in enumerate(_basis(alg, d))}


def vectorize(a: Element, d: int) -> np.ndarray:
    """0/1 vector of a homogeneous element over ``monomial_basis(alg, d)``."""
    idx = basis_index(a.alg, d)
    vec = np.zeros(len(idx), dtype=np.uint8)
    try:
        pos = [idx[m] for m in a.terms]
    except KeyError:
        raise NotHomogeneous(f"element is not homogeneous of degree {d}") from None
    vec[pos] = 1
    return vec


def devectorize(alg: AlgebraSpec, vec, d: int) -> Element:
    basis = _basis(alg, d)
    vec = np.asarray(vec)
    if vec.shape != (len(basis),):
        raise ValueError(f"vector length {vec.shape} does not match basis size {len(basis)}")
    # basis order is already the canonical term order
    return Element(alg, tuple(basis[i] for i in np.flatnonzero(vec)))


# ---------------------------------------------------------------------------
# Homomorphisms


class AlgebraMap:
    """Ring homomorphism defined by the images of the source generators."""

    def __init__(self, source: AlgebraSpec, target: AlgebraSpec, images: Mapping[str, Element]):
        missing = set(source.names) - set(images)
        if missing:
            raise ValueError(f"no image given for generators {sorted(missing)}")
        self.source = source
        self.target = target
        self.images = {}
        for g in source.generators:
            img = images[g.name]
            if img.alg != target:
                raise AlgebraMismatch(f"image of {g.name} is not in the target algebra")
            if img and (not img.is_homogeneous() or img.degree != g.degree):
                raise NotHomogeneous(f"image of {g.name} must be homogeneous of degree {g.degree}")
            if g.kind == EXTERIOR and img * img:
                raise ValueError(f"image of exterior generator {g.name} does not square to zero")
            self.images[g.name] = img
        self._gen_images = [self.images[n] for n in source.names]
        self._powers: dict = {}

    @classmethod
    def identity(cls, alg: AlgebraSpec) -> "AlgebraMap":
        return cls(alg, alg, {n: alg.gen(n) for n in alg.names})

    def _power(self, i: int, k: int) -> Element:
        key = (i, k)
        if key not in self._powers:
            self._powers[key] = self._gen_images[i] ** k
        return self._powers[key]

    def __call__(self, a: Element) -> Element:
        return apply_map(self, a)


def apply_map(f: AlgebraMap, a: Element, max_degree: int | None = None) -> Element:
    if a.alg != f.source:
        raise AlgebraMismatch("element is not in the source algebra of the map")
    acc: set = set()
    for m in a.terms:
        img = f.target.one()
        for i, k in enumerate(m):
            if k:
                img = img.mul(f._power(i, k), max_degree)
                if not img:
                    break
        acc ^= img.termset
    return Element._canonical(f.target, acc)


# ---------------------------------------------------------------------------
# Text form: "x1^2*x2 + x3^3"


def format_monomial(alg: AlgebraSpec, m: Monomial) -> str:
    parts = []
    for name, a in zip(alg.names, m):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


def format_element(a: Element) -> str:
    if not a.terms:
        return "0"
    return " + ".join(format_monomial(a.alg, m) for m in a.terms)


_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)(?:\^(\d+))?$")


def parse_element(alg: AlgebraSpec, text: str) -> Element:
    text = text.strip()
    if text in ("", "0"):
        return alg.zero()
    terms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        exps = [0] * alg.ngens
        if chunk != "1":
            for factor in chunk.split("*"):
                factor = factor.strip()
                mt = _FACTOR.match(factor)
                if not mt or mt.group(1) not in alg.index:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                exps[alg.index[mt.group(1)]] += int(mt.group(2) or 1)
        if any(exps[i] > 1 for i, e in enumerate(alg.exterior) if e):
            terms.append(None)  # a repeated exterior generator kills the term
            continue
        terms.append(tuple(exps))
    return alg.element(t for t in terms if t is not None)


def monomials_of_degree(names_degrees: Sequence[tuple[str, int]], d: int) -> list[dict]:
    """Exponent dicts ``{name: k}`` with sum k*deg == d, for named-class products."""
    out = []
    names = [n for n, _ in names_degrees]
    degs = [g for _, g in names_degrees]
    ranges = [range(d // g + 1) for g in degs]
    for exps in product(*ranges):
        if sum(e * g for e, g in zip(exps, degs)) == d:
            out.append(dict(zip(names, exps)))
    return out
