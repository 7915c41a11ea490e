"""Invariants of matrix groups acting on F2[x_1..x_n].

Action convention: a matrix g sends x_j to sum_i g[i][j] x_i, extended
multiplicatively.  With this convention rho(gh) = rho(g) rho(h).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

import numpy as np

from .f2alg import AlgebraMap, AlgebraSpec, Element, devectorize, monomial_basis
from .gf2la import BitMatrix, Subspace, intersect, kernel, left_kernel, vstack
from .groups import GF2Matrix, MatrixGroup, general_linear_group
from .packed import PackedRing

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def poly_algebra(n: int) -> AlgebraSpec:
    """F2[x1..xn] with every generator in degree 1."""
    return AlgebraSpec.polynomial([f"x{i + 1}" for i in range(n)])


@lru_cache(maxsize=64)
def packed_ring(n: int, d: int) -> PackedRing:
    return PackedRing(poly_algebra(n), max(d, 1))


def substitution(g: GF2Matrix, alg: AlgebraSpec | None = None) -> AlgebraMap:
    alg = alg or poly_algebra(g.n)
    gens = alg.gens()
    images = {}
    for j, name in enumerate(alg.names):
        img = alg.zero()
        for i, c in enumerate(g.column(j)):
            if c:
                img = img + gens[i]
        images[name] = img
    return AlgebraMap(alg, alg, images)


def act(g: GF2Matrix, a: Element) -> Element:
    """g . a for a homogeneous polynomial a (fast packed path)."""
    if not a:
        return a
    d = a.degree
    ring = packed_ring(g.n, d)
    columns = [g.column(j) for j in range(g.n)]
    value = 0
    for m in a.terms:
        p = 1
        for j, k in enumerate(m):
            if k:
                p = ring.mul_linear_power(p, columns[j], k)
        value ^= p
    return ring.to_element(value, d)


def action_on_degree(g: GF2Matrix, d: int) -> BitMatrix:
    """Matrix of g on the degree-d monomials; column m holds the image of m."""
    ring = packed_ring(g.n, d)
    images = ring.images([g.column(j) for j in range(g.n)], d)
    return ring.to_bitmatrix(images, d).transpose()


def fixed_space_stacked(mats: Sequence[BitMatrix]) -> Subspace:
    """Common fixed vectors: kernel of the stacked blocks (rho(g) - I)."""
    n = mats[0].cols
    ident = BitMatrix.identity(n)
    return kernel(vstack([m + ident for m in mats]))


# ---------------------------------------------------------------------------
# fixed spaces through permutation orbit sums


def _orbit_ids(basis: Sequence[tuple], perms: Sequence[GF2Matrix]) -> tuple[np.ndarray, int]:
    index = {m: i for i, m in enumerate(basis)}
    maps = []
    for p in perms:
        # x_j -> x_{pi(j)}: new exponent at pi(j) is the old exponent at j
        pi = [next(i for i in range(p.n) if p.entry(i, j)) for j in range(p.n)]
        maps.append(pi)
    ids = np.full(len(basis), -1, dtype=np.int64)
    count = 0
    for i, m in enumerate(basis):
        if ids[i] >= 0:
            continue
        for pi in maps:
            img = [0] * len(m)
            for j, a in enumerate(m):
                img[pi[j]] = a
            ids[index[tuple(img)]] = count
        ids[i] = count
        count += 1
    return ids, count


def invariant_basis(group: MatrixGroup, d: int) -> Subspace:
    """Degree-d polynomials fixed by the whole group, over ``monomial_basis``.

    Fixed-by-group equals fixed-by-generators.  The generating set used is
    every coordinate permutation in the group (whose fixed vectors are orbit
    sums) plus a few low-weight extra elements; the extras are imposed on
    the orbit-sum space by one left-kernel computation.
    """
    n = group.n
    alg = poly_algebra(n)
    basis = monomial_basis(alg, d)
    N = len(basis)
    perms, extras = group.working_generators()
    ids, k = _orbit_ids(basis, perms) if perms else (np.arange(N), N)
    orbit_rows = np.zeros((k, N), dtype=np.uint8)
    orbit_rows[ids, np.arange(N)] = 1
    orbits = BitMatrix.from_dense(orbit_rows)
    if not extras or d == 0:
        return Subspace.span(orbits)
    ring = packed_ring(n, d)
    pos = ring.positions(d)
    blocks = []
    for g in extras:
        images = ring.images([g.column(j) for j in range(n)], d)
        acc = [0] * k
        for i, img in enumerate(images):
            acc[ids[i]] ^= img ^ (1 << int(pos[i]))
        blocks.append(ring.to_bits(acc, d))
    deltas = BitMatrix.from_dense(np.concatenate(blocks, axis=1))
    combos = left_kernel(deltas)
    if combos.dim == 0:
        return Subspace.zero(N)
    return Subspace.span(combos.basis @ orbits)


class InvariantRing:
    """Per-degree cache of invariant spaces of one group."""

    def __init__(self, group: MatrixGroup):
        self.group = group
        self.n = group.n
        self.alg = poly_algebra(group.n)
        self._spaces: dict[int, Subspace] = {}

    def space(self, d: int) -> Subspace:
        if d not in self._spaces:
            self._spaces[d] = invariant_basis(self.group, d)
            log.debug("%s: degree %d invariants have dimension %d", self.group.name, d, self._spaces[d].dim)
        return self._spaces[d]

    def dim(self, d: int) -> int:
        return self.space(d).dim

    def dims(self, n_max: int, n_min: int = 0) -> list[int]:
        return [self.dim(d) for d in range(n_min, n_max + 1)]

    def elements(self, d: int) -> list[Element]:
        return [devectorize(self.alg, v, d) for v in self.space(d).vectors()]


# ---------------------------------------------------------------------------
# Dickson invariants and symmetric sums


def dickson(n: int) -> list[Element]:
    """Coefficients of X^(2^i), i = n-1..0, in X * prod_{v != 0} (X + l_v)."""
    if n < 1:
        raise ValueError("n must be positive")
    alg = poly_algebra(n)
    gens = alg.gens()
    coeffs = [alg.zero(), alg.one()]  # the polynomial X
    for v in product((0, 1), repeat=n):
        if not any(v):
            continue
        lv = alg.zero()
        for c, x in zip(v, gens):
            if c:
                lv = lv + x
        new = [alg.zero()] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] + lv * c
        coeffs = new
    return [coeffs[2**i] for i in range(n - 1, -1, -1)]


def verify_dickson(n: int, elements: Sequence[Element] | None = None) -> bool:
    gl = general_linear_group(n)
    elements = dickson(n) if elements is None else elements
    return all(act(g, e) == e for g in gl.generators for e in elements)


def perm_orbit_sum(m: Sequence[int]) -> Element:
    """Sum of the distinct coordinate permutations of a monomial."""
    alg = poly_algebra(len(m))
    return alg.element(set(permutations(tuple(m))))


def restrict(a: Element, keep: Iterable[int]) -> Element:
    """Set x_i = 0 for every 1-based index i outside ``keep``.

    The result lives in F2 on the kept variables, in their original order.
    """
    keep = sorted(set(keep))
    n = a.alg.ngens
    if not keep or keep[0] < 1 or keep[-1] > n:
        raise ValueError(f"indices must lie in 1..{n}")
    kept = [i - 1 for i in keep]
    dropped = [i for i in range(n) if i not in kept]
    target = AlgebraSpec.polynomial([a.alg.names[i] for i in kept])
    terms = [tuple(m[i] for i in kept) for m in a.terms if not any(m[i] for i in dropped)]
    return target.element(terms)


# ---------------------------------------------------------------------------
# named classes


class ExtractionError(RuntimeError):
    pass


@dataclass
class NamedClassTable:
    profile: str
    classes: dict[str, tuple[int, Element]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __getitem__(self, name: str) -> Element:
        return self.classes[name][1]

    def __contains__(self, name: str) -> bool:
        return name in self.classes

    def degree(self, name: str) -> int:
        return self.classes[name][0]

    def add(self, name: str, element: Element) -> None:
        self.classes[name] = (element.degree, element)

    def to_text(self) -> str:
        return "".join(f"{name} {deg} {el}\n" for name, (deg, el) in self.classes.items())

    @classmethod
    def from_text(cls, profile: str, text: str, alg: AlgebraSpec) -> "NamedClassTable":
        table = cls(profile)
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, deg, body = line.split(" ", 2)
            el = alg.parse(body)
            if el.degree != int(deg):
                raise ValueError(f"class {name} declared degree {deg} but has degree {el.degree}")
            table.classes[name] = (int(deg), el)
        return table


A6_DEGREES = {"w3": 3, "gamma5": 5, "d8": 8, "d12": 12, "d14": 14, "d15": 15, "gamma9": 9, "b15": 15}
A7_DEGREES = {"d8": 8, "d12": 12, "d14": 14, "d15": 15, "x18": 18, "x20": 20, "x21": 21, "x24": 24, "x25": 25, "x27": 27, "x45": 45}


class _Products:
    """Products of named classes, computed in a packed ring."""

    def __init__(self, n: int, max_degree: int):
        self.ring = packed_ring(n, max_degree)
        self.alg = poly_algebra(n)
        self.cache: dict = {}

    def packed(self, el: Element) -> int:
        key = el.terms
        if key not in self.cache:
            self.cache[key] = self.ring.from_element(el)
        return self.cache[key]

    def monomial(self, factors: Sequence[tuple[Element, int]]) -> int:
        p = 1
        for el, k in factors:
            for _ in range(k):
                p = self.ring.mul(p, self.packed(el))
        return p

    def span(self, products: list[int], d: int) -> Subspace:
        N = len(monomial_basis(self.alg, d))
        if not products:
            return Subspace.zero(N)
        return Subspace.span(self.ring.to_bitmatrix(products, d))


def _exponent_vectors(degrees: Sequence[int], d: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(i: int, rem: int, prefix: list[int]) -> None:
        if i == len(degrees):
            if rem == 0:
                out.append(tuple(prefix))
            return
        for a in range(rem // degrees[i] + 1):
            prefix.append(a)
            rec(i + 1, rem - a * degrees[i], prefix)
            prefix.pop()

    rec(0, d, [])
    return out


def _vanishing_on_plane(space: Subspace, n: int, d: int, keep=(1, 2)) -> Subspace:
    """Vectors of ``space`` whose restriction to x_i = 0 (i not in keep) is zero."""
    if space.dim == 0:
        return space
    basis = monomial_basis(poly_algebra(n), d)
    dropped = [i for i in range(n) if i + 1 not in keep]
    cols = [k for k, m in enumerate(basis) if not any(m[i] for i in dropped)]
    if not cols:
        return space
    sub = space.basis.select_cols(cols)
    combos = left_kernel(sub)
    if combos.dim == 0:
        return Subspace.zero(space.ambient)
    return Subspace.span(combos.basis @ space.basis)


def _least_outside(space: Subspace, decomposable: Subspace, prefer: Subspace | None = None) -> np.ndarray | None:
    """Deterministic pick of a vector of ``space`` outside ``decomposable``.

    Each pool is reduced modulo its intersection with the decomposables; the
    reduced rows stay inside the pool and miss the decomposables.  The row
    with the smallest leading monomial is returned.  ``prefer`` is tried first.
    """
    for pool in ([prefer] if prefer is not None else []) + [space]:
        if pool.dim == 0:
            continue
        common = intersect(pool, decomposable) if decomposable.dim else Subspace.zero(pool.ambient)
        if common.dim == pool.dim:
            continue
        red = Subspace.span(common.reduce(pool.basis) if common.dim else pool.basis)
        return red.vectors()[-1]
    return None


def extract_named_classes(group: MatrixGroup, profile: str, max_degree: int | None = None, ring: InvariantRing | None = None) -> NamedClassTable:
    """Name the generators of the A6 or A7 invariant ring.

    A6: w3, gamma5 unique in their degrees, d8..d15 Dickson, gamma9 solving
    d14 = gamma5*gamma9 + w3^2*d8 + w3^3*gamma5, b15 outside the subalgebra
    of the others.  A7: d8..d15 Dickson, then x18..x45 outside the span of
    Dickson multiples of the lower generators, preferring representatives
    that vanish on the plane x3 = x4 = 0.
    """
    profile = profile.upper()
    ring = ring or InvariantRing(group)
    n = group.n
    alg = poly_algebra(n)
    d8, d12, d14, d15 = dickson(n)
    table = NamedClassTable(profile)
    degrees = A6_DEGREES if profile == "A6" else A7_DEGREES if profile == "A7" else None
    if degrees is None:
        raise ValueError(f"unknown profile {profile!r}")
    top = max(degrees.values()) if max_degree is None else max_degree
    prods = _Products(n, max(top, 15))

    def vec_element(v, d):
        return devectorize(alg, v, d)

    if profile == "A6":
        for name, d in (("w3", 3), ("gamma5", 5)):
            sp = ring.space(d)
            if sp.dim != 1:
                raise ExtractionError(f"{name}: expected a unique invariant in degree {d}, found dimension {sp.dim}")
            table.add(name, vec_element(sp.vectors()[0], d))
        for name, el in zip(("d8", "d12", "d14", "d15"), (d8, d12, d14, d15)):
            table.add(name, el)
        w3, g5 = table["w3"], table["gamma5"]
        target = d14 + w3 * w3 * d8 + w3 * w3 * w3 * g5
        sp9 = ring.space(9)
        solutions = []
        for coeffs in product((0, 1), repeat=sp9.dim):
            if not any(coeffs):
                continue
            v = np.bitwise_xor.reduce(sp9.vectors()[np.flatnonzero(coeffs)], axis=0)
            cand = vec_element(v, 9)
            if g5 * cand == target:
                solutions.append(cand)
        table.notes.append(f"degree-9 invariants: dimension {sp9.dim}; relation solutions: {len(solutions)}")
        if len(solutions) != 1:
            raise ExtractionError(f"gamma9: expected exactly one solution of the d14 relation, found {len(solutions)} (dim {sp9.dim})")
        table.add("gamma9", solutions[0])
        if top >= 15:
            gens = [(table[nm], table.degree(nm)) for nm in ("w3", "gamma5", "d8", "d12", "gamma9")]
            products = [
                prods.monomial([(el, k) for (el, _), k in zip(gens, exps) if k])
                for exps in _exponent_vectors([g for _, g in gens], 15)
            ]
            dec = prods.span(products, 15)
            sp15 = ring.space(15)
            table.notes.append(f"degree-15 invariants: dimension {sp15.dim}; decomposables {dec.dim}")
            v = _least_outside(sp15, dec)
            if v is None:
                raise ExtractionError(f"b15: every degree-15 invariant is decomposable (dimension {sp15.dim})")
            table.add("b15", vec_element(v, 15))
        return table

    for name, el in zip(("d8", "d12", "d14", "d15"), (d8, d12, d14, d15)):
        table.add(name, el)
    dickson_degs = [8, 12, 14, 15]
    module_gens: list[tuple[Element, int]] = [(alg.one(), 0)]
    for name in ("x18", "x20", "x21", "x24", "x25", "x27", "x45"):
        d = degrees[name]
        if d > top:
            break
        products = []
        for gen_el, gd in module_gens:
            for exps in _exponent_vectors(dickson_degs, d - gd):
                factors = [(el, k) for el, k in zip((d8, d12, d14, d15), exps) if k]
                p = prods.monomial(factors)
                if gd:
                    p = prods.ring.mul(p, prods.packed(gen_el))
                products.append(p)
        dec = prods.span(products, d)
        sp = ring.space(d)
        table.notes.append(f"degree-{d} invariants: dimension {sp.dim}; Dickson-module span {dec.dim}")
        prefer = _vanishing_on_plane(sp, n, d)
        v = _least_outside(sp, dec, prefer)
        if v is None:
            raise ExtractionError(f"{name}: no invariant outside the decomposables in degree {d} (dimension {sp.dim})")
        el = vec_element(v, d)
        table.add(name, el)
        module_gens.append((el, d))
    return table
