"""Named verification scenarios and their reports."""

from __future__ import annotations

import csv
import io
import json
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import series as S
from .f2alg import AlgebraMap, AlgebraSpec, Element, GeneratorSpec
from .groups import (
    FixtureMissing,
    MatrixGroup,
    find_alternating_subgroups,
    fixture_dir,
    general_linear_group,
    is_simple,
    load_group,
    write_fixtures,
)
from .homological import (
    build_em_module,
    central_multiplication,
    em_d2,
    em_presented_algebra,
    koszul_ext,
    page_homology,
    quotient_dims,
    su4_torus_classes,
    sq1_homology,
    EM_LAMBDA_NAMES,
)
from .invariants import (
    InvariantRing,
    NamedClassTable,
    act,
    dickson,
    extract_named_classes,
    poly_algebra,
    restrict,
)
from .series import DimTable, RationalSeries, compare, parse_series
from .steenrod import sq

PASS, FAIL = "PASS", "FAIL"


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    name: str
    holds: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.name, "holds": self.holds, "detail": self.detail}


@dataclass
class Report:
    scenario: str
    anchors: list[str]
    tables: list[DimTable] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    charts: list[str] = field(default_factory=list)
    elapsed_ms: int | None = None

    @property
    def verdict(self) -> str:
        return PASS if not self.mismatches else FAIL

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def compare_tables(self, computed: DimTable, expected: DimTable) -> None:
        self.tables += [computed, expected]
        for m in compare(computed, expected):
            self.mismatches.append(
                {"table": computed.name, "degree": m.degree, "computed": m.left, "expected": m.right}
            )

    def check(self, name: str, holds: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(holds), detail))
        if not holds:
            self.mismatches.append({"check": name, "detail": detail})
        return bool(holds)

    def as_dict(self, timing: bool = False) -> dict:
        return {
            "scenario": self.scenario,
            "verdict": self.verdict,
            "anchors": list(self.anchors),
            "tables": [t.as_dict() for t in self.tables],
            "checks": [c.as_dict() for c in self.checks],
            "notes": list(self.notes),
            "mismatches": list(self.mismatches),
            "elapsed_ms": self.elapsed_ms if timing else None,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# scenario: {self.scenario}\n# verdict: {self.verdict}\n")
        for t in self.tables:
            buf.write(f"# table: {t.name}\n")
            buf.write(t.to_csv())
        if self.checks:
            buf.write("# checks\n")
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["check", "holds"])
            for c in self.checks:
                w.writerow([c.name, "yes" if c.holds else "no"])
        return buf.getvalue()

    def to_text(self, timing: bool = False) -> str:
        lines = [f"scenario: {self.scenario}", f"verdict:  {self.verdict}"]
        lines += [f"anchor:   {a}" for a in self.anchors]
        for t in self.tables:
            lines.append(f"table {t.name} (degrees {t.n_min}..{t.n_min + len(t.dims) - 1}):")
            lines.append("  " + " ".join(str(d) for d in t.dims))
        for c in self.checks:
            lines.append(f"  [{'ok' if c.holds else 'FAILED'}] {c.name}" + (f"  ({c.detail})" if c.detail and not c.holds else ""))
        for chart in self.charts:
            lines.append(chart.rstrip("\n"))
        lines += [f"note: {n}" for n in self.notes]
        for m in self.mismatches:
            lines.append("mismatch: " + ", ".join(f"{k}={v}" for k, v in m.items()))
        if timing and self.elapsed_ms is not None:
            lines.append(f"elapsed:  {self.elapsed_ms} ms")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str, timing: bool = False) -> str:
        if fmt == "json":
            return self.to_json(timing)
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text(timing)
        raise ValueError(f"unknown format {fmt!r}")

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        missing = {"scenario", "verdict", "anchors", "tables", "mismatches", "elapsed_ms"} - set(data)
        if missing:
            raise ValueError(f"report is missing keys {sorted(missing)}")
        rep = cls(data["scenario"], data["anchors"])
        rep.tables = [DimTable.from_json(json.dumps(t)) for t in data["tables"]]
        rep.checks = [Check(c["check"], c["holds"], c.get("detail", "")) for c in data.get("checks", [])]
        rep.notes = list(data.get("notes", []))
        rep.mismatches = list(data["mismatches"])
        rep.elapsed_ms = data["elapsed_ms"]
        if rep.verdict != data["verdict"]:
            raise ValueError("verdict does not agree with the mismatch list")
        return rep


# ---------------------------------------------------------------------------
# fixtures


class Targets:
    """``key = value`` reference file."""

    def __init__(self, values: dict[str, str]):
        self.values = values

    @classmethod
    def load(cls, directory: Path | None = None) -> "Targets":
        path = (directory or fixture_dir()) / "targets.txt"
        if not path.exists():
            raise FixtureMissing(f"target file {path} not found")
        return cls(parse_key_values(path.read_text()))

    def __getitem__(self, key: str) -> str:
        if key not in self.values:
            raise KeyError(f"target {key!r} missing from targets.txt")
        return self.values[key]

    def ints(self, key: str) -> list[int]:
        return [int(x) for x in self[key].replace(" ", "").split(",") if x]

    def series(self, key: str) -> RationalSeries:
        return parse_series_sum(self[key])

    def names(self, key: str) -> list[str]:
        return [x.strip() for x in self[key].split(",") if x.strip()]

    def arrows(self, key: str) -> list[tuple[str, str]]:
        out = []
        for chunk in self[key].split(","):
            lhs, rhs = chunk.split("->")
            out.append((lhs.strip(), rhs.strip()))
        return out

    def prefixed(self, prefix: str) -> list[str]:
        keys = sorted((k for k in self.values if k.startswith(prefix)), key=lambda k: int(k.rsplit(".", 1)[1]))
        return [self.values[k] for k in keys]


def parse_key_values(text: str) -> dict[str, str]:
    out = {}
    for no, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"line {no}: expected 'key = value'")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def parse_series_sum(text: str) -> RationalSeries:
    total = RationalSeries({}, ())
    for part in text.split(";"):
        part = part.strip()
        k = 1
        if "*" in part.split("num:")[0]:
            head, part = part.split("*", 1)
            k = int(head)
        total = total + parse_series(part.strip()).scale(k)
    return total


def class_fixture_path(profile: str, directory: Path | None = None) -> Path:
    return (directory or fixture_dir()) / f"{profile.lower()}_classes.txt"


def write_class_fixture(table: NamedClassTable, directory: Path | None = None) -> Path:
    path = class_fixture_path(table.profile, directory)
    header = f"# named invariants of {table.profile}; one 'name degree element' per line\n"
    path.write_text(header + table.to_text())
    return path


class Context:
    """Per-run caches: fixture directory, targets, groups, invariant rings."""

    def __init__(self, directory: Path | None = None):
        self.directory = Path(directory) if directory else fixture_dir()
        self._targets: Targets | None = None
        self._groups: dict[str, MatrixGroup] = {}
        self._rings: dict[str, InvariantRing] = {}
        self._classes: dict[str, NamedClassTable] = {}

    @property
    def targets(self) -> Targets:
        if self._targets is None:
            self._targets = Targets.load(self.directory)
        return self._targets

    def group(self, name: str) -> MatrixGroup:
        if name not in self._groups:
            if name == "gl4":
                self._groups[name] = general_linear_group(4)
            else:
                self._groups[name] = load_group(name, self.directory)
        return self._groups[name]

    def ring(self, name: str) -> InvariantRing:
        if name not in self._rings:
            self._rings[name] = InvariantRing(self.group(name))
        return self._rings[name]

    def classes(self, profile: str) -> NamedClassTable:
        """Named classes from the fixture file, or extracted if it is absent."""
        if profile not in self._classes:
            path = class_fixture_path(profile, self.directory)
            if path.exists():
                self._classes[profile] = NamedClassTable.from_text(profile, path.read_text(), poly_algebra(4))
            else:
                self._classes[profile] = extract_named_classes(self.group(profile.lower()), profile, ring=self.ring(profile.lower()))
        return self._classes[profile]


# ---------------------------------------------------------------------------
# scenarios


@dataclass(frozen=True)
class Scenario:
    name: str
    anchor: str
    tier: str
    default_degree: int | None
    runner: Callable[["Context", Report, int | None, int], None]
    summary: str


REGISTRY: dict[str, Scenario] = {}


def scenario(name: str, anchor: str, tier: str = "fast", default_degree: int | None = None, summary: str = ""):
    def wrap(fn):
        REGISTRY[name] = Scenario(name, anchor, tier, default_degree, fn, summary or (fn.__doc__ or "").strip())
        return fn

    return wrap


def _series_target(ctx: Context, key: str, name: str, n_max: int, n_min: int = 0) -> DimTable:
    return S.series_table(name, ctx.targets.series(key), n_max, n_min)


def _invariant_dims(ctx: Context, rep: Report, group: str, key: str, n_max: int) -> list[int]:
    ring = ctx.ring(group)
    computed = DimTable(f"{group}-fixed-dims", ring.dims(n_max))
    rep.compare_tables(computed, _series_target(ctx, key, "expected", n_max))
    return list(computed.dims)


@scenario("dickson-series", "GL4(2) invariants form the Dickson algebra on degrees 8, 12, 14, 15", default_degree=30)
def _dickson_series(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """GL4(2) fixed-space dimensions against the Dickson series."""
    _invariant_dims(ctx, rep, "gl4", "dickson-series.series", n_max)
    gens = dickson(4)
    degrees = [g.degree for g in gens]
    rep.check("dickson(4) degrees", degrees == ctx.targets.ints("dickson-series.degrees"), f"got {degrees}")
    gl = ctx.group("gl4")
    fixed = all(act(g, e) == e for g in gl.generators for e in gens)
    rep.check("dickson(4) fixed by GL4(2) generators", fixed)


@scenario("a6-invariants", "A6 invariants: module over F2[w3, gamma5, d8, d12] on 1, gamma9, b15, gamma9*b15", default_degree=40)
def _a6_invariants(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """A6 fixed-space dimensions against the A6 invariant series."""
    _invariant_dims(ctx, rep, "a6", "a6-invariants.series", n_max)


@scenario(
    "a7-invariants",
    "A7 invariants: free over the Dickson algebra on 1, x18, x20, x21, x24, x25, x27, x45",
    tier="slow",
    default_degree=46,
)
def _a7_invariants(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """A7 fixed-space dimensions; decides whether the degree-27 generator exists."""
    dims = _invariant_dims(ctx, rep, "a7", "a7-invariants.series", n_max)
    alt = S.expand(ctx.targets.series("a7-invariants.alternative"), n_max)
    eight = S.expand(ctx.targets.series("a7-invariants.series"), n_max)
    if n_max >= 27:
        verdict = "present" if dims == eight else ("absent" if dims == alt else "undecided")
        rep.notes.append(f"module generator in degree 27: {verdict} (dim {dims[27]} in degree 27)")
    if n_max >= 45:
        rep.notes.append(f"degree 45: dim {dims[45]}, series with x45 predicts {eight[45]}")


@scenario("lemma-3-1", "coproduct of the central Z/4 multiplication on the SU4(3) generators", default_degree=None)
def _coproduct_identities(ctx: Context, rep: Report, n_max: int | None, seed: int) -> None:
    """Symbolic coproduct identities on the maximal torus."""
    tc = su4_torus_classes()
    alg = tc.alg
    for k in tc.classes:
        rep.check(f"{k}: explicit form = restricted symmetric form", tc.classes[k] == tc.derived[k])
    # the right-hand sides are written over d, e and the SU4(3) generators
    names = AlgebraSpec(
        [GeneratorSpec("d", 2), GeneratorSpec("e", 1, "exterior")]
        + [GeneratorSpec(n, int(n[1:])) for n in ("b4", "b6", "b8")]
        + [GeneratorSpec(n, int(n[1:]), "exterior") for n in ("x3", "x5", "x7")]
    )
    to_torus = AlgebraMap(names, alg, {"d": alg.gen("d"), "e": alg.gen("e"), **tc.classes})
    psi = central_multiplication(alg)
    for line in ctx.targets.prefixed("lemma-3-1.identity."):
        lhs_text, rhs_text = (x.strip() for x in line.split("->"))
        lhs = to_torus(names.parse(lhs_text))
        rhs = to_torus(names.parse(rhs_text))
        image = psi(lhs)
        diff = image + rhs
        rep.check(f"psi({lhs_text}) = {rhs_text}", not diff, f"difference {diff}")


@scenario("em-e2", "E2 = F2[b4] (x) F2[b6, x3, x5, l2, l3, l5] / (x3^2, x5^2, l2*b6 + l3*x5 + l5*x3)", default_degree=14)
def _em_e2(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Koszul-complex Ext against the presented E2 algebra."""
    presented = quotient_dims(em_presented_algebra(), n_max)
    literal = koszul_ext(build_em_module(n_max), n_max, EM_LAMBDA_NAMES)
    reading = "literal"
    table = literal
    if presented.dims != literal.dims:
        table = koszul_ext(build_em_module(n_max, extended=True), n_max, EM_LAMBDA_NAMES)
        reading = "extended" if table.dims == presented.dims else "neither"
        rep.notes.append(f"literal reading disagrees at degrees {[m.degree for m in compare(literal.table(), presented.table())]}")
    rep.notes.append(f"module action reading: {reading}")
    rep.compare_tables(DimTable("koszul-ext", table.dims), DimTable("presented", presented.dims))
    for n, v in _pairs(ctx.targets["em-e2.spot"]):
        if n <= n_max:
            rep.check(f"dim E2 in degree {n} = {v}", presented.dims[n] == v, f"got {presented.dims[n]}")
    rep.charts.append("Koszul Ext by filtration s:\n" + literal.chart())


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in text.split(","):
        a, b = chunk.split(":")
        out.append((int(a), int(b)))
    return out


@scenario("em-e3", "d2 on E2: x3 -> l2^2, b4 -> l2*l3, x5 -> 0, b6 -> l2*l5; two classes in degree 5", default_degree=8)
def _em_e3(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Page homology of d2 against the degree table from the structure theorem."""
    p = em_presented_algebra()
    e3 = page_homology(p, em_d2(p), n_max, with_reps=True)
    target = ctx.targets.ints("em-e3.dims")
    top = min(n_max, len(target) - 1)
    rep.compare_tables(DimTable("e3", e3.dims[: top + 1]), DimTable("expected", target[: top + 1]))
    psu = S.combine(S.PSU_COHOMOLOGY, top)
    rep.compare_tables(DimTable("e3-vs-psu-series", e3.dims[: top + 1]), DimTable("psu-cohomology", psu.dims))
    if n_max >= 5:
        rep.check("two classes in degree 5", e3.dims[5] == 2, f"got {e3.dims[5]}")
    rep.charts.append("E3 by filtration s:\n" + e3.chart())
    for n in sorted(e3.reps):
        rep.notes.append(f"degree {n}: " + ", ".join(e3.reps[n]))


@scenario("psu-expansion", "Taylor expansion of twice the A6 series minus the double-image series", default_degree=24)
def _psu_expansion(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """2*A6 - D against the printed Taylor coefficients."""
    printed = ctx.targets.ints("psu-expansion.coefficients")
    top = min(n_max, len(printed) - 1)
    computed = S.combine(S.PSU_QUOTIENT, top)
    rep.compare_tables(DimTable("2A-D", computed.dims), DimTable("printed", printed[: top + 1]))


@scenario("bockstein-a6", "Sq^1 homology of the A6 invariants is F2[d8, d12](1, w3, b15, w3*b15)", default_degree=30)
def _bockstein_a6(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Sq^1 homology of the A6 invariant ring against its series."""
    ring = ctx.ring("a6")
    computed = sq1_homology(ring.group, n_max, ring)
    rep.compare_tables(DimTable("sq1-homology", computed.dims), _series_target(ctx, "bockstein-a6.series", "expected", n_max))
    bounded = all(h <= ring.dim(d) for d, h in enumerate(computed.dims))
    rep.check("homology bounded by invariant dimensions", bounded)


def _named(ctx: Context) -> tuple[AlgebraSpec, dict[str, Element]]:
    """All named classes of both profiles, as one symbol algebra plus values."""
    values: dict[str, Element] = {}
    degrees: dict[str, int] = {}
    for profile in ("A6", "A7"):
        table = ctx.classes(profile)
        for name, (deg, el) in table.classes.items():
            values[name] = el
            degrees[name] = deg
    symbols = AlgebraSpec([GeneratorSpec(n, degrees[n]) for n in sorted(values)])
    return symbols, values


def _evaluate(symbols: AlgebraSpec, values: dict[str, Element], text: str) -> Element:
    alg = poly_algebra(4)
    return AlgebraMap(symbols, alg, values)(symbols.parse(text))


def _group_check(rep: Report, ctx: Context, profile: str, names: list[str]) -> None:
    table = ctx.classes(profile)
    group = ctx.group(profile.lower())
    for n in names:
        if n in table and n not in ("d8", "d12", "d14", "d15"):
            fixed = all(act(g, table[n]) == table[n] for g in group.generators)
            rep.check(f"{n} is {profile}-invariant", fixed)


@scenario("sq1-identities", "Sq^1 d14 = d15, Sq^1 x20 = x21, Sq^1 x24 = x25, Sq^1 gamma5 = w3^2, Sq^1 gamma9 = gamma5^2")
def _sq1_identities(ctx: Context, rep: Report, n_max: int | None, seed: int) -> None:
    """Sq^1 identities on the extracted named classes."""
    symbols, values = _named(ctx)
    for lhs, rhs in ctx.targets.arrows("sq1-identities.pairs"):
        left = sq(1, _evaluate(symbols, values, lhs))
        right = _evaluate(symbols, values, rhs)
        rep.check(f"Sq^1({lhs}) = {rhs}", left == right and bool(left), f"difference has {len(left + right)} terms")
    _group_check(rep, ctx, "A6", ["w3", "gamma5", "gamma9"])
    _group_check(rep, ctx, "A7", ["x20", "x21", "x24", "x25"])


@scenario("d14-relation", "d14 = gamma5*gamma9 + w3^2*d8 + w3^3*gamma5 in the A6 invariants")
def _d14_relation(ctx: Context, rep: Report, n_max: int | None, seed: int) -> None:
    """The degree-14 Dickson invariant in terms of the A6 generators."""
    symbols, values = _named(ctx)
    lhs, rhs = ctx.targets.arrows("d14-relation.identity")[0]
    left, right = _evaluate(symbols, values, lhs), _evaluate(symbols, values, rhs)
    rep.check(f"{lhs} = {rhs}", left == right, f"difference has {len(left + right)} terms")
    rep.check("d14 is the Dickson invariant", values["d14"] == dickson(4)[2])
    _group_check(rep, ctx, "A6", ["w3", "gamma5", "gamma9"])


@scenario("restriction-22", "x20, x21, x24, x25 restrict to zero on the rank-2 subgroup dual to x1, x2")
def _restriction(ctx: Context, rep: Report, n_max: int | None, seed: int) -> None:
    """Named A7 generators vanish under x3, x4 -> 0."""
    table = ctx.classes("A7")
    keep = ctx.targets.ints("restriction-22.keep")
    for n in ctx.targets.names("restriction-22.classes"):
        r = restrict(table[n], keep)
        rep.check(f"{n} restricts to 0", not r and bool(table[n]), f"restriction {r}")
    _group_check(rep, ctx, "A7", ctx.targets.names("restriction-22.classes"))


@scenario("mcl-series", "McL Poincare series: radical + 2 * A7 invariants - doubled part, against its closed form", default_degree=40)
def _mcl_series(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Three-term combination against the single-fraction Poincare series."""
    combined = S.combine(S.MCL_COHOMOLOGY, n_max)
    closed = S.series_table("closed-form", ctx.targets.series("mcl-series.closed"), n_max)
    rep.compare_tables(DimTable("combined", combined.dims), closed)


@scenario("mcl-connectivity", "H^i(McL) vanishes for 1 <= i <= 6 and is F2 in degrees 7 and 8", default_degree=8)
def _mcl_connectivity(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Low-degree values of the McL series."""
    combined = S.combine(S.MCL_COHOMOLOGY, max(n_max, 8))
    rep.tables.append(DimTable("mcl", combined.dims))
    for d in ctx.targets.ints("mcl-connectivity.zero"):
        rep.check(f"dim H^{d} = 0", combined.dims[d] == 0, f"got {combined.dims[d]}")
    for d in ctx.targets.ints("mcl-connectivity.one"):
        rep.check(f"dim H^{d} = 1", combined.dims[d] == 1, f"got {combined.dims[d]}")


@scenario("ly-n-series", "N = 3.McL.2 in Ly: McL radical + A7 invariants + F2[d8, d12, e](1, a7, a11, x18)e", default_degree=20)
def _ly_n_series(ctx: Context, rep: Report, n_max: int, seed: int) -> None:
    """Three-summand table: non-negative, additive, one class in degree 1."""
    try:
        combined = S.combine(S.LY_NORMALIZER, n_max)
    except S.NegativeDimension as exc:
        rep.check("non-negative coefficients", False, str(exc))
        return
    rep.check("non-negative coefficients", True)
    closed = S.series_table("closed-form", S.LY_NORMALIZER.closed_form(), n_max)
    rep.compare_tables(DimTable("summands", combined.dims), closed)
    want = int(ctx.targets["ly-n-series.degree-1"])
    rep.check(f"dim in degree 1 = {want}", n_max >= 1 and combined.dims[1] == want, f"got {combined.dims[1] if n_max >= 1 else None}")


def _a6_gate(group: MatrixGroup) -> bool:
    return InvariantRing(group).dim(3) == 1


@scenario("discover-subgroups", "A6 is unique up to conjugacy in A8 = GL4(2); any copy will do", tier="slow")
def _discover(ctx: Context, rep: Report, n_max: int | None, seed: int) -> None:
    """Seeded search for A7 > A6 in GL4(2), compared with the fixtures."""
    result = find_alternating_subgroups(seed, gate=_a6_gate)
    rep.check("A7 order 2520", result.a7.order == 2520, f"got {result.a7.order}")
    rep.check("A6 order 360", result.a6.order == 360, f"got {result.a6.order}")
    rep.check("A6 inside A7", all(g in result.a7 for g in result.a6.generators))
    rep.check("A7 simple", is_simple(result.a7))
    rep.check("A6 simple", is_simple(result.a6))
    rep.check("A6 degree-3 invariants have dimension 1", _a6_gate(result.a6))
    rep.notes.append(f"seed {seed}: {result.tries} random pairs tried")
    for name, grp in (("a7", result.a7), ("a6", result.a6)):
        path = ctx.directory / f"{name}.txt"
        if not path.exists():
            rep.notes.append(f"no {name} fixture to compare with")
            continue
        same = ctx.group(name).element_set == grp.element_set
        if fixture_seed(path.read_text()) == seed:
            rep.check(f"{name} fixture reproduced from seed {seed}", same)
        else:
            rep.notes.append(f"{name} fixture {'reproduced' if same else 'is another conjugate (different seed)'}")


def fixture_seed(text: str) -> int | None:
    m = re.search(r"seed (\d+)", text)
    return int(m.group(1)) if m else None


def discover_and_write(seed: int, directory: Path | None = None) -> list[Path]:
    """Run discovery and write group and named-class fixtures."""
    result = find_alternating_subgroups(seed, gate=_a6_gate)
    paths = write_fixtures(result, directory)
    for profile, grp in (("A6", result.a6), ("A7", result.a7)):
        paths.append(write_class_fixture(extract_named_classes(grp, profile), directory))
    return paths


# ---------------------------------------------------------------------------
# running


class UnknownScenario(KeyError):
    def __init__(self, name: str):
        super().__init__(f"unknown scenario {name!r}; valid names: {', '.join(REGISTRY)}")


def run_scenario(name: str, max_degree: int | None = None, seed: int = 0, ctx: Context | None = None) -> Report:
    if name not in REGISTRY:
        raise UnknownScenario(name)
    sc = REGISTRY[name]
    ctx = ctx or Context()
    rep = Report(name, [sc.anchor])
    n_max = max_degree if max_degree is not None else sc.default_degree
    start = time.perf_counter()
    try:
        sc.runner(ctx, rep, n_max, seed)
    except FixtureMissing:
        raise
    except Exception as exc:  # a crash is a failed verification, reported as such
        rep.mismatches.append({"error": f"{type(exc).__name__}: {exc}"})
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def list_scenarios() -> list[tuple[str, str, str]]:
    return [(s.name, s.anchor, s.tier) for s in REGISTRY.values()]


def tier(name: str) -> list[str]:
    return [s.name for s in REGISTRY.values() if s.tier == name]
