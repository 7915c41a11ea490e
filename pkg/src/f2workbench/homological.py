"""Ext over exterior algebras, presented algebras, and page homology.

Three independent pieces live here:

* a Koszul-complex Ext computation for modules over an exterior algebra
  on generators y_j of fiber degree f_j (total degree of lambda_j is f_j + 1);
* degreewise bases of finitely presented graded-commutative algebras and the
  homology of a Leibniz differential on them;
* Sq^1 homology of a matrix group's invariant ring, and the symbolic
  coproduct identities on the torus algebra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .f2alg import AlgebraMap, AlgebraSpec, Element, GeneratorSpec, monomial_basis, vectorize
from .gf2la import BitMatrix, ComplexError, Subspace, homology_dim, join, kernel, rank
from .groups import MatrixGroup
from .invariants import InvariantRing
from .series import DimTable
from .steenrod import sq1_rows


# ---------------------------------------------------------------------------
# page tables


@dataclass
class PageTable:
    """Dimensions per total degree, optionally split by filtration s."""

    name: str
    n_min: int
    dims: list[int]
    bigraded: dict[tuple[int, int], int] = field(default_factory=dict)  # (s, n) -> dim
    reps: dict[int, list[str]] = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return list(range(self.n_min, self.n_min + len(self.dims)))

    def __getitem__(self, n: int) -> int:
        return self.dims[n - self.n_min]

    def table(self) -> DimTable:
        return DimTable(self.name, self.dims, self.n_min)

    def as_dict(self) -> dict:
        return {"name": self.name, "degrees": self.degrees, "dims": list(self.dims)}

    def to_json(self) -> str:
        data = self.as_dict()
        if self.bigraded:
            data["bigraded"] = [[s, n, d] for (s, n), d in sorted(self.bigraded.items())]
        return json.dumps(data)

    def to_csv(self) -> str:
        return self.table().to_csv()

    def chart(self) -> str:
        """Text grid: one column per total degree, one row per filtration."""
        cols = self.degrees
        width = max(3, *(len(str(n)) + 1 for n in cols))
        head = "s\\n".ljust(5) + "".join(str(n).rjust(width) for n in cols)
        lines = [head]
        if self.bigraded:
            for s in sorted({s for s, _ in self.bigraded}, reverse=True):
                cells = []
                for n in cols:
                    d = self.bigraded.get((s, n), 0)
                    cells.append(("." if d == 0 else str(d)).rjust(width))
                lines.append(str(s).ljust(5) + "".join(cells))
            lines.append("-" * len(head))
        lines.append("dim".ljust(5) + "".join(str(d).rjust(width) for d in self.dims))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Koszul complex


class ModuleError(ValueError):
    pass


Label = Hashable


class KoszulModule:
    """A finite graded module over an exterior algebra E(y_1..y_k).

    ``actions[j]`` maps a basis label to the label y_j sends it to (labels
    absent from the map are sent to zero).  Every action must raise the
    internal degree by its fiber degree, square to zero and commute with
    the others on the truncated basis; this is checked at construction.
    """

    def __init__(
        self,
        lambda_gens: Sequence[tuple[str, int]],
        labels: Iterable[Label],
        degree: Callable[[Label], int],
        actions: Sequence[Mapping[Label, Label]],
        formatter: Callable[[Label], str] = str,
        complete_through: int | None = -1,
    ):
        self.lambda_gens = tuple(lambda_gens)
        if len(actions) != len(self.lambda_gens):
            raise ModuleError("one action map per exterior generator is required")
        self.labels = tuple(labels)
        self.degree = degree
        self.format_label = formatter
        self.actions = [dict(a) for a in actions]
        self.by_degree: dict[int, list[Label]] = {}
        for lab in self.labels:
            self.by_degree.setdefault(degree(lab), []).append(lab)
        # labels are complete up to this internal degree (None: no truncation)
        self.t_max = max(self.by_degree, default=0) if complete_through == -1 else complete_through
        known = set(self.labels)
        for j, (name, f) in enumerate(self.lambda_gens):
            for src, dst in self.actions[j].items():
                if src not in known:
                    raise ModuleError(f"{name} acts on unknown label {formatter(src)}")
                if dst in known and degree(dst) != degree(src) + f:
                    raise ModuleError(f"{name}: {formatter(src)} -> {formatter(dst)} does not raise degree by {f}")
        # drop images that fall outside the truncation
        for act in self.actions:
            for src in [s for s, d in act.items() if d not in known]:
                del act[src]
        self._verify()
        self.preimages = []
        for act in self.actions:
            inv: dict = {}
            for src, dst in act.items():
                inv.setdefault(dst, []).append(src)
            self.preimages.append(inv)

    def act(self, j: int, label: Label) -> Label | None:
        return self.actions[j].get(label)

    def _verify(self) -> None:
        k = len(self.actions)
        for lab in self.labels:
            for i in range(k):
                for j in range(i, k):
                    a = self.act(i, lab)
                    a = None if a is None else self.act(j, a)
                    b = self.act(j, lab)
                    b = None if b is None else self.act(i, b)
                    if i == j and a is not None:
                        name = self.lambda_gens[i][0]
                        raise ModuleError(f"{name} does not square to zero on {self.format_label(lab)}")
                    if a != b:
                        ni, nj = self.lambda_gens[i][0], self.lambda_gens[j][0]
                        raise ModuleError(f"{ni} and {nj} do not commute on {self.format_label(lab)}")

    @classmethod
    def trivial(cls, lambda_gens: Sequence[tuple[str, int]]) -> "KoszulModule":
        return cls(lambda_gens, [()], lambda _: 0, [{} for _ in lambda_gens], lambda _: "1", None)


EM_LAMBDAS = (("e", 1), ("d*", 2), ("(d^2)*", 4))
EM_LAMBDA_NAMES = ("l2", "l3", "l5")
EM_DEGREES = (4, 6, 3, 5, 7)  # b4, b6, x3, x5, x7
EM_NAMES = ("b4", "b6", "x3", "x5", "x7")


def em_label_degree(label: tuple) -> int:
    return sum(a * d for a, d in zip(label, EM_DEGREES))


def format_em_label(label: tuple) -> str:
    parts = []
    for name, a in zip(EM_NAMES, label):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "(" + ("*".join(parts) or "1") + ")*"


def build_em_module(t_max: int, extended: bool = False) -> KoszulModule:
    """Duals of b4^a b6^b x3^i x5^j x7^k (degree <= t_max) with the three actions.

    e:       (b4^a b6^j)*     -> (b4^a b6^(j-1) x7)*   (pure b6 powers only)
    d*:      (x5 theta)*      -> (x7 theta)*
    (d^2)*:  (x3 tau)*        -> (x7 tau)*

    ``extended`` lets e act on every label without x7:
    (b6^j theta)* -> (b6^(j-1) x7 theta)*.  b4 is a passive tensor factor.
    """
    labels = []
    for a in range(t_max // 4 + 1):
        for b in range((t_max - 4 * a) // 6 + 1):
            for e3, e5, e7 in product((0, 1), repeat=3):
                lab = (a, b, e3, e5, e7)
                if em_label_degree(lab) <= t_max:
                    labels.append(lab)
    act_e, act_d, act_d2 = {}, {}, {}
    for lab in labels:
        a, b, e3, e5, e7 = lab
        if b >= 1 and not e7 and (extended or not (e3 or e5)):
            act_e[lab] = (a, b - 1, e3, e5, 1)
        if e5 and not e7:
            act_d[lab] = (a, b, e3, 0, 1)
        if e3 and not e7:
            act_d2[lab] = (a, b, 0, e5, 1)
    return KoszulModule(EM_LAMBDAS, labels, em_label_degree, [act_e, act_d, act_d2], format_em_label, t_max)


def _compositions(s: int, k: int) -> list[tuple[int, ...]]:
    if k == 1:
        return [(s,)]
    return [(i,) + rest for i in range(s, -1, -1) for rest in _compositions(s - i, k - 1)]


class KoszulComplex:
    """(module duals) tensor F2[lambda_1..lambda_k], bigraded by (s, t)."""

    def __init__(self, module: KoszulModule, lambda_names: Sequence[str] | None = None):
        self.m = module
        self.k = len(module.lambda_gens)
        self.f = [f for _, f in module.lambda_gens]
        self.lambda_names = tuple(lambda_names or [f"l{f + 1}" for f in self.f])
        self._bases: dict = {}

    def basis(self, s: int, t: int) -> list[tuple[Label, tuple[int, ...]]]:
        key = (s, t)
        if key not in self._bases:
            out = []
            if s >= 0:
                for alpha in _compositions(s, self.k):
                    rest = t - sum(a * f for a, f in zip(alpha, self.f))
                    if rest < 0:
                        continue
                    if self.m.t_max is not None and rest > self.m.t_max:
                        raise ModuleError(f"module truncated at t={self.m.t_max}, degree {rest} requested")
                    for lab in self.m.by_degree.get(rest, []):
                        out.append((lab, alpha))
            self._bases[key] = out
        return self._bases[key]

    def delta(self, s: int, t: int) -> BitMatrix:
        """delta: C^{s,t} -> C^{s+1,t}, column convention.

        delta(L* lambda^alpha) = sum_j sum_{psi : y_j psi = L} psi* lambda_j lambda^alpha.
        """
        src = self.basis(s, t)
        dst = self.basis(s + 1, t)
        index = {b: i for i, b in enumerate(dst)}
        dense = np.zeros((len(dst), len(src)), dtype=np.uint8)
        for c, (lab, alpha) in enumerate(src):
            for j in range(self.k):
                for psi in self.m.preimages[j].get(lab, ()):
                    beta = list(alpha)
                    beta[j] += 1
                    dense[index[(psi, tuple(beta))], c] ^= 1
        return BitMatrix.from_dense(dense) if dense.size else BitMatrix(len(dst), len(src))

    def format_cochain(self, vec: np.ndarray, s: int, t: int) -> str:
        terms = []
        for i in np.flatnonzero(vec):
            lab, alpha = self.basis(s, t)[i]
            lam = "*".join(
                name if a == 1 else f"{name}^{a}" for name, a in zip(self.lambda_names, alpha) if a
            )
            terms.append((lam + "*" if lam else "") + self.m.format_label(lab))
        return " + ".join(terms) or "0"

    def homology(self, s: int, t: int, with_reps: bool = False) -> tuple[int, list[str]]:
        f = self.delta(s - 1, t) if s > 0 else BitMatrix(len(self.basis(0, t)), 0)
        g = self.delta(s, t)
        dim = homology_dim(f, g)
        reps: list[str] = []
        if with_reps and dim:
            cycles = kernel(g)
            bounds = Subspace.span(f.transpose()) if f.cols else Subspace.zero(cycles.ambient)
            classes = Subspace.span(bounds.reduce(cycles.basis)) if bounds.dim else cycles
            reps = [self.format_cochain(v, s, t) for v in classes.vectors()]
        return dim, reps


def koszul_ext(module: KoszulModule, n_max: int, lambda_names: Sequence[str] | None = None, with_reps: bool = False) -> PageTable:
    """Ext over the exterior algebra, by total degree n = s + t, for n <= n_max."""
    if module.t_max is not None and module.t_max < n_max:
        raise ModuleError(f"module truncated at t={module.t_max} < n_max={n_max}")
    cx = KoszulComplex(module, lambda_names)
    dims = []
    bigraded = {}
    reps: dict[int, list[str]] = {}
    for n in range(n_max + 1):
        total = 0
        for s in range(n + 1):
            t = n - s
            dim, r = cx.homology(s, t, with_reps)
            if dim:
                bigraded[(s, n)] = dim
                if r:
                    reps.setdefault(n, []).extend(r)
            total += dim
        dims.append(total)
    return PageTable("koszul-ext", 0, dims, bigraded, reps)


# ---------------------------------------------------------------------------
# presented algebras


class IllDefined(ValueError):
    pass


@dataclass
class PresentedAlgebra:
    """free / (relations), with an optional filtration weight per generator."""

    free: AlgebraSpec
    relations: list[Element]
    weights: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        for r in self.relations:
            if r.alg != self.free:
                raise ValueError("relation does not live in the free algebra")
            if not r or not r.is_homogeneous():
                raise ValueError(f"relation {r} is not homogeneous")
        self._weight = tuple(self.weights.get(n, 0) for n in self.free.names)
        for r in self.relations:
            if len({self.weight(m) for m in r.terms}) != 1:
                raise ValueError(f"relation {r} is not homogeneous for the filtration")
        self._slices: dict = {}

    def weight(self, m) -> int:
        return sum(a * w for a, w in zip(m, self._weight))

    def slice_basis(self, n: int, s: int | None = None) -> list[tuple]:
        basis = monomial_basis(self.free, n)
        if s is None:
            return list(basis)
        return [m for m in basis if self.weight(m) == s]

    def filtrations(self, n: int) -> list[int]:
        return sorted({self.weight(m) for m in monomial_basis(self.free, n)})

    def ideal(self, n: int, s: int | None = None) -> Subspace:
        """Degree-n (filtration-s) part of the ideal, over slice_basis(n, s)."""
        key = (n, s)
        if key not in self._slices:
            basis = self.slice_basis(n, s)
            index = {m: i for i, m in enumerate(basis)}
            rows = []
            for r in self.relations:
                dr = r.degree
                wr = self.weight(r.terms[0])
                if dr > n:
                    continue
                for m in monomial_basis(self.free, n - dr):
                    if s is not None and wr + self.weight(m) != s:
                        continue
                    prod_ = r * self.free.monomial(m)
                    if not prod_:
                        continue
                    row = np.zeros(len(basis), dtype=np.uint8)
                    row[[index[t] for t in prod_.terms]] = 1
                    rows.append(row)
            if rows:
                self._slices[key] = Subspace.span(BitMatrix.from_dense(np.array(rows)))
            else:
                self._slices[key] = Subspace.zero(len(basis))
        return self._slices[key]


@dataclass
class QuotientSlice:
    monomials: list[tuple]
    ideal: Subspace
    standard: list[int]  # non-pivot monomials, a basis of the quotient

    @property
    def dim(self) -> int:
        return len(self.standard)


def algebra_basis(p: PresentedAlgebra, n: int, s: int | None = None) -> QuotientSlice:
    """Degree-n slice of the quotient with RREF-canonical coset representatives."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    mons = p.slice_basis(n, s)
    ideal = p.ideal(n, s)
    pivots = set(ideal.pivots)
    return QuotientSlice(mons, ideal, [i for i in range(len(mons)) if i not in pivots])


def quotient_dims(p: PresentedAlgebra, n_max: int) -> PageTable:
    dims, bigraded = [], {}
    for n in range(n_max + 1):
        total = 0
        for s in p.filtrations(n):
            d = algebra_basis(p, n, s).dim
            if d:
                bigraded[(s, n)] = d
            total += d
        dims.append(total)
    return PageTable("presented", 0, dims, bigraded)


@dataclass
class DifferentialSpec:
    """Leibniz differential of total degree +1 (and filtration +shift)."""

    images: dict[str, Element]
    shift: int = 0

    def image(self, alg: AlgebraSpec, name: str) -> Element:
        return self.images.get(name, alg.zero())

    def check(self, p: PresentedAlgebra) -> None:
        for g in p.free.generators:
            img = self.image(p.free, g.name)
            if img.alg != p.free:
                raise ValueError(f"image of {g.name} is not in the free algebra")
            if img and (not img.is_homogeneous() or img.degree != g.degree + 1):
                raise ValueError(f"image of {g.name} must be homogeneous of degree {g.degree + 1}")
            if img and any(p.weight(m) != p.weight(p.free.gen(g.name).terms[0]) + self.shift for m in img.terms):
                raise ValueError(f"image of {g.name} does not shift the filtration by {self.shift}")

    def apply_monomial(self, alg: AlgebraSpec, m: tuple) -> Element:
        # d(x^a) = a x^(a-1) dx: only odd exponents survive in characteristic 2
        out = alg.zero()
        for i, a in enumerate(m):
            if a % 2 == 0:
                continue
            img = self.image(alg, alg.names[i])
            if not img:
                continue
            rest = list(m)
            rest[i] -= 1
            out = out + alg.monomial(tuple(rest)) * img
        return out

    def apply(self, a: Element) -> Element:
        out = a.alg.zero()
        for m in a.terms:
            out = out + self.apply_monomial(a.alg, m)
        return out


def _differential_matrix(p: PresentedAlgebra, d: DifferentialSpec, n: int, s: int | None) -> BitMatrix:
    """Rows: d of each slice monomial, over slice_basis(n+1, s+shift)."""
    src = p.slice_basis(n, s)
    s2 = None if s is None else s + d.shift
    dst = p.slice_basis(n + 1, s2)
    index = {m: i for i, m in enumerate(dst)}
    dense = np.zeros((len(src), len(dst)), dtype=np.uint8)
    for r, m in enumerate(src):
        img = d.apply_monomial(p.free, m)
        for t in img.terms:
            dense[r, index[t]] = 1
    return BitMatrix.from_dense(dense) if dense.size else BitMatrix(len(src), len(dst))


def check_well_defined(p: PresentedAlgebra, d: DifferentialSpec, n_max: int, graded: bool = True) -> None:
    """d(ideal_n) lies in ideal_(n+1) for n <= n_max; raises IllDefined otherwise."""
    d.check(p)
    for r in p.relations:
        dr = d.apply(r)
        n = r.degree + 1
        if n <= n_max + 1 and dr:
            vec = BitMatrix.from_dense(vectorize(dr, n)[None, :])
            if not p.ideal(n).contains(vec):
                raise IllDefined(f"d({r}) = {dr} is not in the ideal (degree {n})")
    for n in range(n_max + 1):
        for s in (p.filtrations(n) if graded else [None]):
            ideal = p.ideal(n, s)
            if ideal.dim == 0:
                continue
            dmat = _differential_matrix(p, d, n, s)
            img = ideal.basis @ dmat
            s2 = None if s is None else s + d.shift
            target = p.ideal(n + 1, s2)
            if not img.is_zero() and not target.contains(img):
                raise IllDefined(f"the differential does not preserve the ideal in degree {n}")


def page_homology(p: PresentedAlgebra, d: DifferentialSpec, n_max: int, n_min: int = 0, with_reps: bool = False) -> PageTable:
    """Homology of d on the quotient, per total degree (split by filtration)."""
    check_well_defined(p, d, n_max)
    dims, bigraded, reps = [], {}, {}
    for n in range(n_min, n_max + 1):
        total = 0
        for s in p.filtrations(n):
            h, r = _slice_homology(p, d, n, s, with_reps)
            if h:
                bigraded[(s, n)] = h
                reps.setdefault(n, []).extend(r)
            total += h
        dims.append(total)
    return PageTable("page-homology", n_min, dims, bigraded, reps)


def _slice_homology(p: PresentedAlgebra, d: DifferentialSpec, n: int, s: int, with_reps: bool) -> tuple[int, list[str]]:
    mons = p.slice_basis(n, s)
    if not mons:
        return 0, []
    # cycles: v with d(v) in the ideal of the target slice
    target_ideal = p.ideal(n + 1, s + d.shift)
    dmat = _differential_matrix(p, d, n, s)
    if dmat.cols:
        residues = target_ideal.reduce(dmat) if target_ideal.dim else dmat
        cycles = kernel(residues.transpose())
    else:
        cycles = Subspace.full(len(mons))
    # boundaries: ideal plus d of the previous slice
    bound = p.ideal(n, s)
    if n >= 1 and s - d.shift >= 0:
        prev = p.slice_basis(n - 1, s - d.shift)
        if prev:
            img = _differential_matrix(p, d, n - 1, s - d.shift)
            if not img.is_zero():
                bound = join(bound, Subspace.span(img))
    if bound.dim and not cycles.contains(bound.basis):
        raise ComplexError(0)
    h = cycles.dim - bound.dim
    reps: list[str] = []
    if with_reps and h:
        classes = Subspace.span(bound.reduce(cycles.basis)) if bound.dim else cycles
        for v in classes.vectors():
            terms = [Element(p.free, (mons[i],)) for i in np.flatnonzero(v)]
            el = p.free.zero()
            for t in terms:
                el = el + t
            reps.append(str(el))
    return h, reps


# the E2 algebra: F2[l2, l3, l5, b4, b6] (x) E(x3, x5) / (l2*b6 + l3*x5 + l5*x3)

def em_presented_algebra() -> PresentedAlgebra:
    free = AlgebraSpec(
        [
            GeneratorSpec("l2", 2),
            GeneratorSpec("l3", 3),
            GeneratorSpec("l5", 5),
            GeneratorSpec("b4", 4),
            GeneratorSpec("b6", 6),
            GeneratorSpec("x3", 3, "exterior"),
            GeneratorSpec("x5", 5, "exterior"),
        ]
    )
    rel = free.parse("l2*b6 + l3*x5 + l5*x3")
    return PresentedAlgebra(free, [rel], {"l2": 1, "l3": 1, "l5": 1})


def em_d2(p: PresentedAlgebra) -> DifferentialSpec:
    f = p.free
    return DifferentialSpec(
        {"x3": f.parse("l2^2"), "b4": f.parse("l2*l3"), "x5": f.zero(), "b6": f.parse("l2*l5")},
        shift=2,
    )


def polynomial_counts(degrees: Sequence[int], n_max: int) -> list[int]:
    """Number of monomials per degree in a polynomial ring (independent count)."""
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for g in degrees:
        for i in range(g, n_max + 1):
            counts[i] += counts[i - g]
    return counts


# ---------------------------------------------------------------------------
# Sq^1 homology of invariant rings


class EquivarianceError(AssertionError):
    pass


def sq1_homology(group: MatrixGroup, n_max: int, ring: InvariantRing | None = None) -> DimTable:
    """dim ker Sq^1 / im Sq^1 inside the invariant ring, degrees 0..n_max."""
    ring = ring or InvariantRing(group)
    alg = ring.alg
    ranks = []
    for d in range(n_max + 1):
        space = ring.space(d)
        if space.dim == 0:
            ranks.append(0)
            continue
        images = BitMatrix.from_dense(sq1_rows(alg, space.vectors(), d))
        if not images.is_zero() and not ring.space(d + 1).contains(images):
            raise EquivarianceError(f"Sq^1 leaves the invariant ring in degree {d}")
        ranks.append(rank(images))
    dims = [ring.dim(d) - ranks[d] - (ranks[d - 1] if d else 0) for d in range(n_max + 1)]
    return DimTable(f"sq1-homology-{group.name or 'group'}", dims)


# ---------------------------------------------------------------------------
# coproduct identities on the torus algebra


def torus_algebra(n: int = 3) -> AlgebraSpec:
    gens = [GeneratorSpec("d", 2)] + [GeneratorSpec(f"d{i}", 2) for i in range(1, n + 1)]
    gens += [GeneratorSpec("e", 1, "exterior")] + [GeneratorSpec(f"e{i}", 1, "exterior") for i in range(1, n + 1)]
    return AlgebraSpec(gens)


def elementary_symmetric(xs: Sequence[Element], k: int) -> Element:
    alg = xs[0].alg
    out = alg.zero()
    from itertools import combinations

    for combo in combinations(xs, k):
        term = alg.one()
        for x in combo:
            term = term * x
        out = out + term
    return out


@dataclass
class IdentityCheck:
    name: str
    lhs: Element
    rhs: Element

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def difference(self) -> Element:
        return self.lhs + self.rhs

    def as_dict(self) -> dict:
        return {"identity": self.name, "holds": self.holds, "difference": str(self.difference())}


@dataclass
class TorusClasses:
    alg: AlgebraSpec
    classes: dict[str, Element]
    derived: dict[str, Element]


def su4_torus_classes() -> TorusClasses:
    """b4, b6, b8, x3, x5, x7 in the 3-variable torus algebra.

    ``classes`` holds the explicit three-variable expressions; ``derived``
    recomputes them from the four-variable symmetric functions by the
    substitution e4 -> e1+e2+e3, d4 -> d1+d2+d3.
    """
    t3 = torus_algebra(3)
    d = [t3.gen(f"d{i}") for i in (1, 2, 3)]
    e = [t3.gen(f"e{i}") for i in (1, 2, 3)]
    s1, s2, s3 = (elementary_symmetric(d, k) for k in (1, 2, 3))
    d1, d2, d3 = d
    e1, e2, e3 = e
    explicit = {
        "b4": s2 + s1 * s1,
        "b6": s3 + s1 * s2,
        "b8": s3 * s1,
        "x3": e1 * (d2 + d3) + e2 * (d1 + d3) + e3 * (d1 + d2),
        "x5": e1 * (d2 * d2 + d3 * d3) + e2 * (d1 * d1 + d3 * d3) + e3 * (d1 * d1 + d2 * d2),
        "x7": e1 * d2 * d3 * (d2 + d3) + e2 * d1 * d3 * (d1 + d3) + e3 * d1 * d2 * (d1 + d2),
    }

    t4 = torus_algebra(4)
    D = [t4.gen(f"d{i}") for i in (1, 2, 3, 4)]
    E = [t4.gen(f"e{i}") for i in (1, 2, 3, 4)]
    S = [None] + [elementary_symmetric(D, k) for k in (1, 2, 3, 4)]

    def others(i: int) -> list[Element]:
        return [D[j] for j in range(4) if j != i]

    ext = {
        "x3": sum((E[i] * elementary_symmetric(others(i), 1) for i in range(4)), t4.zero()),
        "x5": sum((E[i] * elementary_symmetric(others(i), 2) for i in range(4)), t4.zero()),
        "x7": sum((E[i] * elementary_symmetric(others(i), 3) for i in range(4)), t4.zero()),
    }
    images = {name: t3.gen(name) for name in ("d", "e", "d1", "d2", "d3", "e1", "e2", "e3")}
    images["d4"] = d1 + d2 + d3
    images["e4"] = e1 + e2 + e3
    restrict = AlgebraMap(t4, t3, images)
    derived = {"b4": restrict(S[2]), "b6": restrict(S[3]), "b8": restrict(S[4])}
    derived.update({k: restrict(v) for k, v in ext.items()})
    return TorusClasses(t3, explicit, derived)


def central_multiplication(alg: AlgebraSpec) -> AlgebraMap:
    """e_i -> e_i + e, d_i -> d_i + d; d and e fixed."""
    images = {}
    for name in alg.names:
        g = alg.gen(name)
        if name[0] in "de" and len(name) > 1:
            images[name] = g + alg.gen(name[0])
        else:
            images[name] = g
    return AlgebraMap(alg, alg, images)


def verify_coproduct_identities() -> list[IdentityCheck]:
    """The coproduct images of b4, b6, b8, x3, x5, x7 and of b8^2."""
    tc = su4_torus_classes()
    alg = tc.alg
    c = tc.classes
    psi = central_multiplication(alg)
    d, e = alg.gen("d"), alg.gen("e")
    b4, b6, b8, x3, x5, x7 = (c[k] for k in ("b4", "b6", "b8", "x3", "x5", "x7"))
    checks = [IdentityCheck(f"{k} explicit = restricted symmetric form", c[k], tc.derived[k]) for k in c]
    checks += [
        IdentityCheck("psi(b4) = b4", psi(b4), b4),
        IdentityCheck("psi(b6) = b6", psi(b6), b6),
        IdentityCheck("psi(x3) = x3", psi(x3), x3),
        IdentityCheck("psi(x5) = x5", psi(x5), x5),
        IdentityCheck("psi(b8) = d^4 + d^2*b4 + d*b6 + b8", psi(b8), d**4 + d * d * b4 + d * b6 + b8),
        IdentityCheck("psi(x7) = x7 + d^2*x3 + d*x5 + e*b6", psi(x7), x7 + d * d * x3 + d * x5 + e * b6),
        IdentityCheck(
            "psi(b8^2) = d^8 + d^4*b4^2 + d^2*b6^2 + b8^2",
            psi(b8 * b8),
            d**8 + d**4 * b4 * b4 + d * d * b6 * b6 + b8 * b8,
        ),
    ]
    return checks


verify_lemma31 = verify_coproduct_identities  # name used by the scenario interface
