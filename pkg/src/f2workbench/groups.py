"""Matrices over F2, matrix groups by generators, and subgroup discovery."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from math import prod
from pathlib import Path
from typing import Sequence


class NotInvertible(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class GF2Matrix:
    """An n x n matrix over F2.

    ``rows[i]`` read as an n-digit binary number is row i, so entry (i, j)
    is bit ``n - 1 - j``.  Ordering and hashing follow ``key``, the n*n-bit
    row-major pattern read as a binary number.
    """

    key: int
    n: int = field(compare=False)

    @classmethod
    def from_rows(cls, rows: Sequence[int], n: int | None = None) -> "GF2Matrix":
        n = len(rows) if n is None else n
        key = 0
        for r in rows:
            key = (key << n) | (r & ((1 << n) - 1))
        return cls(key, n)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        n = len(entries)
        return cls.from_rows([int("".join(str(int(b) & 1) for b in row), 2) for row in entries], n)

    @classmethod
    def from_text(cls, lines: Sequence[str]) -> "GF2Matrix":
        return cls.from_entries([[int(c) for c in ln.strip()] for ln in lines])

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls.from_rows([1 << (n - 1 - i) for i in range(n)], n)

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "GF2Matrix":
        """Matrix sending x_j to x_{perm[j]} (a 1 at row perm[j], column j)."""
        n = len(perm)
        entries = [[0] * n for _ in range(n)]
        for j, i in enumerate(perm):
            entries[i][j] = 1
        return cls.from_entries(entries)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "GF2Matrix":
        """Identity plus a 1 at (i, j): the substitution x_j -> x_j + x_i."""
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        m[i][j] ^= 1
        return cls.from_entries(m)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        n = self.n
        mask = (1 << n) - 1
        return tuple((self.key >> (n * (n - 1 - i))) & mask for i in range(n))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.n - 1 - j)) & 1

    def entries(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def column(self, j: int) -> tuple[int, ...]:
        """Coefficients of the image of x_j: g.x_j = sum_i g[i][j] x_i."""
        return tuple(self.entry(i, j) for i in range(self.n))

    @cached_property
    def weight(self) -> int:
        return bin(self.key).count("1")

    def to_text(self) -> list[str]:
        return [format(r, f"0{self.n}b") for r in self.rows]

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        n = self.n
        orows = other.rows
        out = 0
        for r in self.rows:
            acc = 0
            k = n - 1
            while r:
                if r & 1:
                    acc ^= orows[k]
                r >>= 1
                k -= 1
            out = (out << n) | acc
        return GF2Matrix(out, n)

    def rank(self) -> int:
        rows = list(self.rows)
        rank = 0
        for bit in reversed(range(self.n)):
            piv = next((i for i in range(rank, len(rows)) if rows[i] >> bit & 1), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for i in range(len(rows)):
                if i != rank and rows[i] >> bit & 1:
                    rows[i] ^= rows[rank]
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def inverse(self) -> "GF2Matrix":
        n = self.n
        rows = [(r << n) | (1 << (n - 1 - i)) for i, r in enumerate(self.rows)]
        for c in range(n):
            bit = 2 * n - 1 - c
            piv = next((i for i in range(c, n) if rows[i] >> bit & 1), None)
            if piv is None:
                raise NotInvertible("matrix is singular")
            rows[c], rows[piv] = rows[piv], rows[c]
            for i in range(n):
                if i != c and rows[i] >> bit & 1:
                    rows[i] ^= rows[c]
        return GF2Matrix.from_rows([r & ((1 << n) - 1) for r in rows], n)

    def conjugate(self, x: "GF2Matrix") -> "GF2Matrix":
        """x * self * x^-1."""
        return x * self * x.inverse()

    def is_permutation(self) -> bool:
        return all(bin(r).count("1") == 1 for r in self.rows) and self.is_invertible()


def gl_order(n: int) -> int:
    return prod(2**n - 2**i for i in range(n))


def standard_gl_generators(n: int) -> list[GF2Matrix]:
    """A transvection and an n-cycle of coordinates; together they generate GL_n(2)."""
    if n == 1:
        return [GF2Matrix.identity(1)]
    cycle = GF2Matrix.permutation([(j + 1) % n for j in range(n)])
    return [GF2Matrix.elementary(n, 0, 1), cycle]


def _bfs(gens: Sequence[GF2Matrix], limit: int | None = None) -> set[GF2Matrix] | None:
    n = gens[0].n
    seen = {GF2Matrix.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        return None
        frontier = nxt
    return seen


class MatrixGroup:
    """A subgroup of GL_n(2) given by generators, with optional enumeration."""

    def __init__(self, generators: Sequence[GF2Matrix], elements: Sequence[GF2Matrix] | None = None, name: str = ""):
        gens = list(generators)
        if not gens:
            raise ValueError("a group needs at least one generator")
        n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError("generators of different sizes")
            if not g.is_invertible():
                raise NotInvertible(f"generator {g.to_text()} is not invertible")
        self.n = n
        self.generators = tuple(gens)
        self.name = name
        self._elements = tuple(sorted(elements)) if elements is not None else None
        self._working = None

    def __repr__(self) -> str:
        order = self._elements and len(self._elements)
        return f"MatrixGroup({self.name or 'unnamed'}, n={self.n}, gens={len(self.generators)}, order={order})"

    @property
    def elements(self) -> tuple[GF2Matrix, ...]:
        if self._elements is None:
            self._elements = tuple(sorted(_bfs(self.generators)))
        return self._elements

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GF2Matrix) -> bool:
        return g in self.element_set

    def conjugate(self, x: GF2Matrix) -> "MatrixGroup":
        xi = x.inverse()
        elems = None if self._elements is None else [x * g * xi for g in self._elements]
        return MatrixGroup([x * g * xi for g in self.generators], elems, self.name)

    def permutation_subgroup(self) -> list[GF2Matrix]:
        return [g for g in self.elements if g.is_permutation()]

    def working_generators(self) -> tuple[list[GF2Matrix], list[GF2Matrix]]:
        if self._working is None:
            self._working = self._find_working_generators()
        return self._working

    def _find_working_generators(self) -> tuple[list[GF2Matrix], list[GF2Matrix]]:
        """(permutation part, sparse extras) generating the whole group.

        The permutation part is every permutation matrix in the group; extras
        are added lightest-first until the generated group is everything.
        """
        perms = self.permutation_subgroup()
        target = self.order
        current = len(_bfs(perms)) if perms else 1
        extras: list[GF2Matrix] = []
        if current == target:
            return perms, extras
        span = _bfs(perms) if perms else {GF2Matrix.identity(self.n)}
        for g in sorted(self.elements, key=lambda m: (m.weight, m.key)):
            if g in span:
                continue
            extras.append(g)
            span = _bfs(perms + extras)
            if len(span) == target:
                break
        return perms, extras


def closure(gens: Sequence[GF2Matrix], limit: int | None = None) -> MatrixGroup | None:
    """Breadth-first closure; returns None if more than ``limit`` elements appear."""
    for g in gens:
        if not g.is_invertible():
            raise NotInvertible(f"generator {g.to_text()} is not invertible")
    elems = _bfs(gens, limit)
    if elems is None:
        return None
    n = gens[0].n
    if gl_order(n) % len(elems):
        raise AssertionError("group order does not divide |GL_n(2)|")
    return MatrixGroup(gens, elems)


def general_linear_group(n: int) -> MatrixGroup:
    g = closure(standard_gl_generators(n))
    g.name = f"GL{n}(2)"
    return g


# ---------------------------------------------------------------------------
# simplicity certificate


def conjugacy_classes(group: MatrixGroup) -> list[list[GF2Matrix]]:
    gens = group.generators
    inv = [g.inverse() for g in gens]
    seen: set = set()
    classes = []
    for x in group.elements:
        if x in seen:
            continue
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, gi in zip(gens, inv):
                    z = g * y * gi
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        seen |= cls
        classes.append(sorted(cls))
    return classes


def normal_closure_order(group: MatrixGroup, x: GF2Matrix) -> int:
    gens_g = group.generators
    inv = [g.inverse() for g in gens_g]
    ngens = [x]
    span = _bfs(ngens)
    changed = True
    while changed and len(span) < group.order:
        changed = False
        for y in list(ngens):
            for g, gi in zip(gens_g, inv):
                z = g * y * gi
                if z not in span:
                    ngens.append(z)
                    span = _bfs(ngens)
                    changed = True
    return len(span)


def is_simple(group: MatrixGroup) -> bool:
    """Every nontrivial conjugacy class generates the whole group."""
    ident = GF2Matrix.identity(group.n)
    for cls in conjugacy_classes(group):
        if cls[0] == ident:
            continue
        if normal_closure_order(group, cls[0]) != group.order:
            return False
    return True


# ---------------------------------------------------------------------------
# fixtures


def fixture_dir() -> Path:
    env = os.environ.get("F2WB_FIXTURE_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


def format_group_fixture(gens: Sequence[GF2Matrix], comment: str = "") -> str:
    n = gens[0].n
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"{n} {len(gens)}")
    for g in gens:
        lines.extend(g.to_text())
    return "\n".join(lines) + "\n"


def parse_group_fixture(text: str) -> list[GF2Matrix]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty group fixture")
    n, k = map(int, lines[0].split())
    body = lines[1:]
    if len(body) != n * k:
        raise ValueError(f"expected {n * k} matrix lines, found {len(body)}")
    gens = []
    for b in range(k):
        block = body[b * n : (b + 1) * n]
        if any(len(r) != n or set(r) - {"0", "1"} for r in block):
            raise ValueError(f"malformed matrix block {b}")
        gens.append(GF2Matrix.from_text(block))
    return gens


class FixtureMissing(FileNotFoundError):
    pass


def load_group(name: str, directory: Path | None = None) -> MatrixGroup:
    path = (directory or fixture_dir()) / f"{name}.txt"
    if not path.exists():
        raise FixtureMissing(f"group fixture {path} not found; run `f2wb discover --seed S` to create it")
    gens = parse_group_fixture(path.read_text())
    return MatrixGroup(gens, name=name.upper())


# ---------------------------------------------------------------------------
# discovery of A7 and A6 inside GL4(2)


@dataclass
class DiscoveryResult:
    a7: MatrixGroup
    a6: MatrixGroup
    tries: int
    seed: int


def _random_subgroup(pool: Sequence[GF2Matrix], order: int, rng: random.Random, budget: int) -> tuple[MatrixGroup, int]:
    for attempt in range(1, budget + 1):
        a, b = rng.choice(pool), rng.choice(pool)
        grp = closure([a, b], limit=order)
        if grp is None or grp.order != order:
            continue
        if is_simple(grp):
            return grp, attempt
    raise SearchExhausted(f"no simple subgroup of order {order} found in {budget} tries")


def _perm_score(group: MatrixGroup, x: GF2Matrix, perms: Sequence[GF2Matrix]) -> int:
    # number of permutation matrices P with x^-1 P x in group
    xi = x.inverse()
    s = group.element_set
    return sum(1 for p in perms if xi * p * x in s)


def find_alternating_subgroups(seed: int = 0, budget: int = 2000, gate=None) -> DiscoveryResult:
    """Random search for simple subgroups of orders 2520 and 360 in GL4(2).

    The only simple groups of these orders are A7 and A6.  The pair found is
    conjugated so that the A6 (then the A7) contains as many coordinate
    permutations as possible; ``gate(a6)`` may reject an A6 candidate.
    """
    gl = general_linear_group(4)
    rng = random.Random(seed)
    a7, t7 = _random_subgroup(gl.elements, 2520, rng, budget)
    tries = t7
    while True:
        a6, t6 = _random_subgroup(a7.elements, 360, rng, budget)
        tries += t6
        if gate is None or gate(a6):
            break
        if tries > budget:
            raise SearchExhausted(f"A6 gate rejected every candidate for seed {seed}")
    perms = [GF2Matrix.permutation(p) for p in permutations(range(4))]
    best = max(gl.elements, key=lambda x: (_perm_score(a6, x, perms), _perm_score(a7, x, perms), -x.key))
    a7c, a6c = a7.conjugate(best), a6.conjugate(best)
    a7c.name, a6c.name = "A7", "A6"
    return DiscoveryResult(a7c, a6c, tries, seed)


def write_fixtures(result: DiscoveryResult, directory: Path | None = None) -> list[Path]:
    directory = directory or fixture_dir()
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name, grp in (("a7", result.a7), ("a6", result.a6)):
        path = directory / f"{name}.txt"
        comment = f"{name.upper()} inside GL4(2), order {grp.order}, seed {result.seed}"
        path.write_text(format_group_fixture(grp.generators, comment))
        out.append(path)
    return out
