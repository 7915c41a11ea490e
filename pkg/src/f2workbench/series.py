"""Rational generating functions with (1 - t^a) denominators.

A RationalSeries is numerator / prod(1 - t^a); expansion is exact integer
convolution.  StructureTheorem combines several series with integer
multiplicities and checks that the result is a dimension count.
"""

from __future__ import annotations

import ast
import csv
import io
import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class NegativeDimension(ArithmeticError):
    def __init__(self, name: str, degree: int, value: int, partials: Sequence[tuple[str, int]]):
        detail = ", ".join(f"{label}: {v}" for label, v in partials)
        super().__init__(f"{name}: coefficient {value} < 0 in degree {degree} ({detail})")
        self.degree = degree
        self.value = value
        self.partials = list(partials)


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple[tuple[int, int], ...]
    denominator: tuple[int, ...]

    def __init__(self, numerator: Mapping[int, int] | Iterable[tuple[int, int]] = ((0, 1),), denominator: Iterable[int] = ()):
        items = numerator.items() if isinstance(numerator, Mapping) else numerator
        num: Counter = Counter()
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent in numerator")
            num[int(e)] += int(c)
        den = tuple(sorted(int(a) for a in denominator))
        if any(a <= 0 for a in den):
            raise ValueError("denominator factors must be positive")
        object.__setattr__(self, "numerator", tuple(sorted((e, c) for e, c in num.items() if c)))
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_terms(cls, exponents: Iterable[int], denominator: Iterable[int] = ()) -> "RationalSeries":
        return cls([(e, 1) for e in exponents], denominator)

    def expand(self, n_max: int) -> list[int]:
        return expand(self, n_max)

    def scale(self, k: int) -> "RationalSeries":
        return RationalSeries([(e, k * c) for e, c in self.numerator], self.denominator)

    def times_poly(self, poly: Mapping[int, int]) -> "RationalSeries":
        out: Counter = Counter()
        for e, c in self.numerator:
            for f, b in poly.items():
                out[e + f] += c * b
        return RationalSeries(out, self.denominator)

    def __neg__(self) -> "RationalSeries":
        return self.scale(-1)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        """Sum over the least common multiset of denominator factors."""
        mine, theirs = Counter(self.denominator), Counter(other.denominator)
        common = mine | theirs
        a = _raise_denominator(self, common - mine)
        b = _raise_denominator(other, common - theirs)
        num = Counter(dict(a.numerator))
        for e, c in b.numerator:
            num[e] += c
        return RationalSeries(num, a.denominator)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def to_literal(self) -> str:
        return f"num: {list(self.numerator)} den: {list(self.denominator)}"

    def __str__(self) -> str:
        num = " + ".join(_term(e, c) for e, c in self.numerator) or "0"
        den = "".join(f"(1-t^{a})" for a in self.denominator)
        return f"({num})/({den})" if den else f"({num})"


def _term(e: int, c: int) -> str:
    mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
    if c == 1:
        return mono
    return f"{c}" if e == 0 else f"{c}*{mono}"


def _raise_denominator(s: RationalSeries, extra: Counter) -> RationalSeries:
    poly: dict[int, int] = {0: 1}
    for a, k in extra.items():
        for _ in range(k):
            nxt: Counter = Counter()
            for e, c in poly.items():
                nxt[e] += c
                nxt[e + a] -= c
            poly = dict(nxt)
    out = s.times_poly(poly)
    return RationalSeries(out.numerator, list(s.denominator) + list(extra.elements()))


def expand(s: RationalSeries, n_max: int) -> list[int]:
    """Exact Taylor coefficients of s through t^n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    coeffs = [0] * (n_max + 1)
    for e, c in s.numerator:
        if e <= n_max:
            coeffs[e] += c
    for a in s.denominator:
        for i in range(a, n_max + 1):
            coeffs[i] += coeffs[i - a]
    return coeffs


# ---------------------------------------------------------------------------
# dimension tables


@dataclass(frozen=True)
class DimTable:
    name: str
    n_min: int
    dims: tuple[int, ...]

    def __init__(self, name: str, dims: Sequence[int], n_min: int = 0):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "n_min", n_min)
        object.__setattr__(self, "dims", tuple(int(x) for x in dims))
        if any(x < 0 for x in self.dims):
            raise ValueError(f"{name}: dimensions must be non-negative")

    @property
    def degrees(self) -> list[int]:
        return list(range(self.n_min, self.n_min + len(self.dims)))

    def __getitem__(self, degree: int) -> int:
        i = degree - self.n_min
        if not 0 <= i < len(self.dims):
            raise KeyError(degree)
        return self.dims[i]

    def as_dict(self) -> dict:
        return {"name": self.name, "degrees": self.degrees, "dims": list(self.dims)}

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_json(cls, text: str) -> "DimTable":
        data = json.loads(text)
        degrees = data["degrees"]
        if degrees and degrees != list(range(degrees[0], degrees[0] + len(degrees))):
            raise ValueError("degrees must be consecutive")
        if len(degrees) != len(data["dims"]):
            raise ValueError("degrees and dims differ in length")
        return cls(data["name"], data["dims"], degrees[0] if degrees else 0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "dim"])
        w.writerows(zip(self.degrees, self.dims))
        return buf.getvalue()

    @classmethod
    def from_csv(cls, name: str, text: str) -> "DimTable":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["degree", "dim"]:
            raise ValueError("expected header degree,dim")
        body = [(int(a), int(b)) for a, b in rows[1:]]
        n_min = body[0][0] if body else 0
        return cls(name, [b for _, b in body], n_min)


@dataclass(frozen=True)
class Mismatch:
    degree: int
    left: int
    right: int

    def as_dict(self) -> dict:
        return {"degree": self.degree, "left": self.left, "right": self.right}


def compare(a: DimTable, b: DimTable) -> list[Mismatch]:
    """Degrees in the common range where the two tables disagree."""
    lo = max(a.n_min, b.n_min)
    hi = min(a.n_min + len(a.dims), b.n_min + len(b.dims))
    if lo >= hi:
        raise ValueError(f"tables {a.name} and {b.name} do not overlap")
    return [Mismatch(d, a[d], b[d]) for d in range(lo, hi) if a[d] != b[d]]


# ---------------------------------------------------------------------------
# structure theorems


@dataclass(frozen=True)
class StructureTheorem:
    name: str
    terms: tuple[tuple[int, str, RationalSeries], ...]

    def __init__(self, name: str, terms: Iterable[tuple[int, str, RationalSeries]]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "terms", tuple(terms))

    def closed_form(self) -> RationalSeries:
        total = RationalSeries({}, ())
        for k, _, s in self.terms:
            total = total + s.scale(k)
        return total


def combine(st: StructureTheorem, n_max: int, n_min: int = 0) -> DimTable:
    """Signed sum of the term expansions; every coefficient must be >= 0."""
    parts = [(k, label, expand(s, n_max)) for k, label, s in st.terms]
    dims = []
    for d in range(n_max + 1):
        value = sum(k * c[d] for k, _, c in parts)
        if value < 0:
            raise NegativeDimension(st.name, d, value, [(f"{k}*{label}", k * c[d]) for k, label, c in parts])
        dims.append(value)
    return DimTable(st.name, dims[n_min:], n_min)


def series_table(name: str, s: RationalSeries, n_max: int, n_min: int = 0) -> DimTable:
    return DimTable(name, expand(s, n_max)[n_min:], n_min)


# ---------------------------------------------------------------------------
# literal syntax: "num: [(0,1),(18,1)] den: [8,12]"

_LITERAL = re.compile(r"^\s*num:\s*(\[.*?\])\s*den:\s*(\[.*?\])\s*$")


def parse_series(text: str) -> RationalSeries:
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"not a series literal: {text!r}")
    try:
        num = ast.literal_eval(m.group(1))
        den = ast.literal_eval(m.group(2))
    except (ValueError, SyntaxError) as exc:
        raise ValueError(f"malformed series literal: {text!r}") from exc
    if not all(isinstance(p, tuple) and len(p) == 2 for p in num):
        raise ValueError("numerator must be a list of (exponent, coefficient) pairs")
    return RationalSeries(num, den)


# ---------------------------------------------------------------------------
# registry

DICKSON_DEN = (8, 12, 14, 15)
PAIR_DEN = (8, 12)

DICKSON = RationalSeries({0: 1}, DICKSON_DEN)
A6_INVARIANTS = RationalSeries.from_terms([0, 9, 15, 24], [3, 5, 8, 12])
A7_INVARIANTS = RationalSeries.from_terms([0, 18, 20, 21, 24, 25, 27, 45], DICKSON_DEN)
# the same ring with the module generator in degree 27 dropped
A7_WITHOUT_27 = RationalSeries.from_terms([0, 18, 20, 21, 24, 25, 45], DICKSON_DEN)
PSU_RADICAL = RationalSeries.from_terms([2, 7, 11, 14], PAIR_DEN)
PSU_DOUBLED = RationalSeries.from_terms([0, 3, 15, 18], PAIR_DEN)
BOCKSTEIN_A6 = RationalSeries.from_terms([0, 3, 15, 18], PAIR_DEN)
MCL_RADICAL = RationalSeries.from_terms([7, 11], PAIR_DEN)
MCL_DOUBLED = RationalSeries.from_terms([0, 18], PAIR_DEN)
LY_THIRD = RationalSeries.from_terms([1, 8, 12, 19], [1, 8, 12])

PSU_QUOTIENT = StructureTheorem("psu-quotient", [(2, "A6", A6_INVARIANTS), (-1, "doubled", PSU_DOUBLED)])
PSU_COHOMOLOGY = StructureTheorem(
    "psu-cohomology", [(1, "radical", PSU_RADICAL), (2, "A6", A6_INVARIANTS), (-1, "doubled", PSU_DOUBLED)]
)
MCL_COHOMOLOGY = StructureTheorem(
    "mcl-cohomology", [(1, "radical", MCL_RADICAL), (2, "A7", A7_INVARIANTS), (-1, "doubled", MCL_DOUBLED)]
)
LY_NORMALIZER = StructureTheorem(
    "ly-normalizer", [(1, "McL radical", MCL_RADICAL), (1, "A7", A7_INVARIANTS), (1, "extension", LY_THIRD)]
)

# single-fraction form of the McL Poincare series
MCL_CLOSED = StructureTheorem(
    "mcl-closed-form",
    [
        (2, "A7", A7_INVARIANTS),
        # (t^7 - 1)(1 - t^11) / ((1 - t^8)(1 - t^12))
        (1, "correction", RationalSeries({7: 1, 0: -1, 18: -1, 11: 1}, PAIR_DEN)),
    ],
)

PSU_PRINTED = (1, 0, 0, 1, 0, 2, 2, 0, 3, 4, 2, 3, 5, 4, 6, 8, 5, 10, 11, 7, 15, 16, 12, 18, 22)

SERIES = {
    "dickson": DICKSON,
    "a6-invariants": A6_INVARIANTS,
    "a7-invariants": A7_INVARIANTS,
    "a7-without-27": A7_WITHOUT_27,
    "psu-radical": PSU_RADICAL,
    "psu-doubled": PSU_DOUBLED,
    "bockstein-a6": BOCKSTEIN_A6,
    "mcl-radical": MCL_RADICAL,
    "mcl-doubled": MCL_DOUBLED,
    "ly-third": LY_THIRD,
}

COMBINATIONS = {st.name: st for st in (PSU_QUOTIENT, PSU_COHOMOLOGY, MCL_COHOMOLOGY, LY_NORMALIZER, MCL_CLOSED)}
