"""Deza classification of planar regular graphs, type prediction, and suites."""

from __future__ import annotations

import csv
import io
import math
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

from . import fixtures as fx
from .analysis import (
    face_stats,
    four_cycle_witness,
    is_k_connected,
    k2r_witness,
    prop30_report,
    prop1223_report,
    square_pyramid_witness,
    type_profile,
)
from .errors import (
    ExceptionalInput,
    NotPlanar,
    NotRegular,
    NotRegularPolyhedron,
    PolydezaError,
    UnknownSuite,
)
from .graph import AbstractGraph, PlaneGraph, canonical_code, dual, embed
from .transforms import (
    SquarePyramid,
    TDecomposition,
    line_graph,
    medial,
    medial_preimage,
    t_construct,
    t_decompose,
)

SCHEMA_VERSION = 1

TABLE1_TYPES = {
    "tetrahedron": frozenset({2}),
    "cubic-no-quadrangular-faces": frozenset({0, 1}),
    "quartic-no-4-cycles": frozenset({0, 1}),
}
EXCEPTIONAL_TYPES = {
    "cube": frozenset({0, 2}),
    "octahedron": frozenset({2, 4}),
    "square-antiprism": frozenset({1, 2}),
    "nine-vertex-quartic": frozenset({1, 2}),
    "icosahedron": frozenset({0, 2}),
}
TABLE2_TYPES = {
    "K1-union": frozenset({0}),
    "K2-union": frozenset({0}),
    "K3": frozenset({1}),
    "cycle-union-no-C4": frozenset({0, 1}),
    "C4-union": frozenset({0, 2}),
    "tetrahedron-cube-union": frozenset({0, 2}),
    "icosahedron-union": frozenset({0, 2}),
    "cubic-no-4-cycles": frozenset({0, 1}),
    "quartic-no-4-cycles": frozenset({0, 1}),
}


def _abstract(g) -> AbstractGraph:
    return g.to_abstract() if isinstance(g, PlaneGraph) else g


def _type_set(g: AbstractGraph) -> frozenset[int]:
    if g.n < 2:
        return frozenset({0})
    return type_profile(g).a_set


def is_deza(g) -> tuple[int, int] | None:
    """``(lambda, mu)`` for a regular graph with at most two common-neighbour counts."""
    g = _abstract(g)
    if g.n == 0 or g.regularity() is None:
        return None
    a = _type_set(g)
    if len(a) > 2:
        return None
    return min(a), max(a)


@dataclass(frozen=True)
class DezaClass:
    """``kind`` is ``table1``, ``table2``, ``exceptional``, ``unmatched`` or ``not_deza``."""

    kind: str
    row: str | None
    lambda_mu: tuple[int, int] | None

    @property
    def is_deza(self) -> bool:
        return self.kind != "not_deza"

    def expected_type(self) -> frozenset[int] | None:
        table = {"table1": TABLE1_TYPES, "table2": TABLE2_TYPES, "exceptional": EXCEPTIONAL_TYPES}
        return table.get(self.kind, {}).get(self.row)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "row": self.row,
            "lambda_mu": list(self.lambda_mu) if self.lambda_mu else None,
        }


def _plane(g) -> PlaneGraph | None:
    if isinstance(g, PlaneGraph):
        return g
    return embed(g, max_n=max(g.n, 24))


def classify_planar_regular(g) -> DezaClass:
    """Table row of a planar regular graph, or ``not_deza``."""
    G = _abstract(g)
    r = G.regularity()
    if r is None:
        raise NotRegular("graph is not regular")
    if G.n and not nx.is_planar(G.to_networkx()):
        raise NotPlanar("graph is not planar")
    lm = is_deza(G)
    if lm is None:
        return DezaClass("not_deza", None, None)
    if G.n >= 4 and is_k_connected(G, 3):
        pg = _plane(g)
        name = fx.exceptional_name(pg)
        if name is not None:
            return DezaClass("exceptional", name, lm)
        if fx.is_tetrahedron(G):
            return DezaClass("table1", "tetrahedron", lm)
        if r == 3 and 4 not in pg.face_lengths() and G.n % 2 == 0 and G.n >= 10:
            return DezaClass("table1", "cubic-no-quadrangular-faces", lm)
        if r == 4 and four_cycle_witness(G) is None and G.n >= 30:
            return DezaClass("table1", "quartic-no-4-cycles", lm)
        return DezaClass("unmatched", None, lm)
    comps = [G.induced(c) for c in G.components()]
    if r == 0:
        return DezaClass("table2", "K1-union", lm)
    if r == 1:
        return DezaClass("table2", "K2-union", lm)
    if r == 2:
        lengths = [c.n for c in comps]
        if lengths == [3]:
            return DezaClass("table2", "K3", lm)
        if all(k == 4 for k in lengths):
            return DezaClass("table2", "C4-union", lm)
        if 4 not in lengths:
            return DezaClass("table2", "cycle-union-no-C4", lm)
        return DezaClass("unmatched", None, lm)
    if r == 3:
        if all(_is_tetra_or_cube(c) for c in comps):
            return DezaClass("table2", "tetrahedron-cube-union", lm)
        if four_cycle_witness(G) is None:
            return DezaClass("table2", "cubic-no-4-cycles", lm)
    if r == 4 and four_cycle_witness(G) is None:
        return DezaClass("table2", "quartic-no-4-cycles", lm)
    if r == 5 and all(fx.exceptional_name(c) == "icosahedron" for c in comps):
        return DezaClass("table2", "icosahedron-union", lm)
    return DezaClass("unmatched", None, lm)


def _is_tetra_or_cube(c: AbstractGraph) -> bool:
    return fx.is_tetrahedron(c) or fx.exceptional_name(c) == "cube"


# type prediction -----------------------------------------------------------

R5_TYPES = (
    frozenset({0, 1, 2}),
    frozenset({0, 1, 2, 3}),
    frozenset({0, 1, 2, 4}),
    frozenset({0, 1, 2, 3, 4}),
)


@dataclass(frozen=True)
class TypePrediction:
    r: int
    options: tuple[frozenset[int], ...]
    reason: str

    def admits(self, a: Iterable[int]) -> bool:
        return frozenset(a) in self.options

    def as_list(self) -> list[list[int]]:
        return [sorted(o) for o in self.options]


def predict_type_regular(g, r: int | None = None) -> TypePrediction:
    """Admissible types of a regular polyhedron from its 4-cycle structure."""
    G = _abstract(g)
    reg = G.regularity()
    if reg is None or (r is not None and reg != r) or reg not in (3, 4, 5):
        raise NotRegularPolyhedron(f"expected a 3-, 4- or 5-regular polyhedron (degree {reg})")
    pg = _plane(g)
    if pg is None or not pg.is_polyhedral():
        raise NotRegularPolyhedron("graph is not a polyhedron")
    if fx.is_tetrahedron(G):
        raise ExceptionalInput("tetrahedron")
    name = fx.exceptional_name(pg)
    if name is not None:
        raise ExceptionalInput(name)
    if reg == 3:
        if 4 in pg.face_lengths():
            return TypePrediction(3, (frozenset({0, 1, 2}),), "quadrangular face")
        return TypePrediction(3, (frozenset({0, 1}),), "no quadrangular face")
    if reg == 4:
        if four_cycle_witness(G) is None:
            return TypePrediction(4, (frozenset({0, 1}),), "no 4-cycle")
        if k2r_witness(G, 3) is None:
            return TypePrediction(4, (frozenset({0, 1, 2}),), "4-cycle, no K(2,3)")
        return TypePrediction(4, (frozenset({0, 1, 2, 3}),), "contains K(2,3)")
    return TypePrediction(5, R5_TYPES, "5-regular family")


# reports ------------------------------------------------------------------

def code_hex(g) -> str:
    if isinstance(g, PlaneGraph):
        return canonical_code(g).hex()
    from .codecs import encode_graph6

    return "g6:" + encode_graph6(g)


def graph_record(g) -> dict:
    """JSON record: code, sizes, regularity, type, girth, face statistics, class."""
    G = _abstract(g)
    rec = {
        "code": code_hex(g),
        "n": G.n,
        "q": G.q,
        "regular_r": G.regularity(),
        "type_A": sorted(_type_set(G)) if G.n else [],
    }
    if isinstance(g, PlaneGraph):
        st = face_stats(g)
        rec["f"] = g.f
        rec["girth"] = None if st.girth == math.inf else st.girth
        rec["stats"] = st.as_dict()
    else:
        from .analysis import girth

        gi = girth(G)
        rec["f"] = None
        rec["girth"] = None if gi == math.inf else gi
        rec["stats"] = None
    preds = {}
    if rec["regular_r"] is not None and (G.n == 0 or nx.is_planar(G.to_networkx())):
        preds["deza_class"] = classify_planar_regular(g).as_dict()
        try:
            preds["predicted_type"] = predict_type_regular(g).as_list()
        except PolydezaError as exc:
            preds["predicted_type"] = None
            preds["prediction_skipped"] = type(exc).__name__
    rec["predicate_results"] = preds
    return rec


@dataclass
class SuiteReport:
    suite: str
    population: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(self, g, expected, observed, label: str = ""):
        self.violations.append(
            {"code": code_hex(g), "label": label, "expected": expected, "observed": observed}
        )

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "population": self.population,
            "checked": self.checked,
            "passed": self.passed,
            "violations": sorted(self.violations, key=lambda v: v["code"]),
            "notes": self.notes,
        }


# suites --------------------------------------------------------------------

def _regular_polyhedron(g) -> int | None:
    """Degree of a regular polyhedron, else ``None``."""
    if not isinstance(g, PlaneGraph):
        return None
    r = g.to_abstract().regularity()
    if r is None or not g.is_polyhedral():
        return None
    return r


def _is_octahedron(g) -> bool:
    return isinstance(g, PlaneGraph) and g.n == 6 and fx.exceptional_name(g) == "octahedron"


def _suite_thm35r(pop, rep):
    for label, g in pop:
        r = _regular_polyhedron(g)
        if r not in (3, 4, 5):
            continue
        try:
            pred = predict_type_regular(g)
        except ExceptionalInput:
            continue
        rep.checked += 1
        a = type_profile(g).a_set
        if not pred.admits(a):
            rep.add_violation(g, pred.as_list(), sorted(a), label)


def h_conditions_4r(h: PlaneGraph) -> bool:
    """No degree-4 vertex, no quadrangular face, no degree-3 vertex on a triangle."""
    if any(len(r) == 4 for r in h.rot) or 4 in h.face_lengths():
        return False
    for v, r in enumerate(h.rot):
        if len(r) == 3 and any(len(h.faces[h.face_of(v, w)]) == 3 for w in r):
            return False
    return True


def _suite_thm4r(pop, rep):
    forward = converse = 0
    for label, g in pop:
        if not isinstance(g, PlaneGraph) or not g.is_polyhedral():
            continue
        if h_conditions_4r(g):
            forward += 1
            rep.checked += 1
            m = medial(g)
            if four_cycle_witness(m.to_abstract()) is not None:
                rep.add_violation(g, "medial has no 4-cycle", "4-cycle found", label)
                continue
            if len(type_profile(m).a_set) > 2:
                rep.add_violation(g, "medial is Deza", sorted(type_profile(m).a_set), label)
            pair = medial_preimage(m)
            want = sorted([canonical_code(g), canonical_code(dual(g))])
            got = None if pair is None else sorted(canonical_code(h) for h in pair)
            if got != want:
                rep.add_violation(g, "preimage = {H, H*}", "none" if got is None else "mismatch", label)
        if _regular_polyhedron(g) == 4 and fx.exceptional_name(g) is None:
            if is_deza(g) is not None:
                converse += 1
                rep.checked += 1
                pair = medial_preimage(g)
                if pair is None or not h_conditions_4r(pair[0]):
                    rep.add_violation(g, "medial of a qualifying H", "no such H", label)
    rep.notes.update(forward_checked=forward, converse_checked=converse)


def _suite_thm4max(pop, rep):
    for label, g in pop:
        if _regular_polyhedron(g) != 3:
            continue
        st = face_stats(g)
        if st.girth != 5:
            continue
        rep.checked += 1
        L = line_graph(g)
        m = medial(g)
        if L != m.to_abstract():
            rep.add_violation(g, "line graph = medial graph", "differ", label)
            continue
        if L.regularity() != 4 or not m.is_polyhedral():
            rep.add_violation(g, "quartic polyhedron", "not", label)
            continue
        if is_deza(L) is None:
            rep.add_violation(g, "Deza", sorted(type_profile(L).a_set), label)
        ms = face_stats(m)
        if 3 * ms.fi(3) != 2 * ms.f - 4:
            rep.add_violation(g, f"3 f3 = 2f - 4 = {2 * ms.f - 4}", 3 * ms.fi(3), label)


def h_conditions_4min(h: PlaneGraph) -> bool:
    st = face_stats(h)
    if st.pi(3) + st.pi(5) != st.p or st.fi(3) + st.fi(5) != st.f:
        return False
    if 2 * (st.pi(3) + st.fi(3)) != st.q + 10:
        return False
    for v, r in enumerate(h.rot):
        if len(r) == 3 and any(len(h.faces[h.face_of(v, w)]) != 5 for w in r):
            return False
    return True


def _suite_prop4min(pop, rep):
    found = []
    for label, g in pop:
        if not isinstance(g, PlaneGraph) or not g.is_polyhedral():
            continue
        m = medial(g)
        if fx.exceptional_name(m) is not None:
            continue
        rep.checked += 1
        left = h_conditions_4min(g)
        ms = face_stats(m)
        right = is_deza(m) is not None and 2 * ms.fi(3) == ms.f + 8
        if left:
            found.append(f"{label}:n={g.n}")
        if left != right:
            rep.add_violation(g, f"H-conditions ({left}) iff minimal Deza medial", right, label)
    rep.notes["qualifying_H"] = found


def _suite_prop0123(pop, rep):
    pyramids = decomposed = 0
    for label, g in pop:
        if _regular_polyhedron(g) != 4:
            continue
        a = type_profile(g).a_set
        if a != frozenset({0, 1, 2, 3}):
            continue
        rep.checked += 1
        if medial_preimage(g) is not None:
            rep.add_violation(g, "not a medial graph", "medial preimage found", label)
        try:
            res = t_decompose(g)
        except PolydezaError as exc:
            rep.add_violation(g, "square pyramid or T-decomposition", str(exc), label)
            continue
        if isinstance(res, SquarePyramid):
            pyramids += 1
            if square_pyramid_witness(g) is None:
                rep.add_violation(g, "square pyramid", "none", label)
            continue
        decomposed += 1
        assert isinstance(res, TDecomposition)
        rebuilt = t_construct(res.site1, res.site2)
        if canonical_code(rebuilt) != canonical_code(g):
            rep.add_violation(g, "T(G1, G2) = G", "rebuilt graph differs", label)
    rep.notes.update(square_pyramid=pyramids, decomposed=decomposed)


def _suite_prop1(pop, rep):
    rows = Counter()
    for label, g in pop:
        G = _abstract(g)
        if G.regularity() is None:
            continue
        rep.checked += 1
        cls = classify_planar_regular(g)
        rows[cls.row or cls.kind] += 1
        if cls.is_deza != (is_deza(G) is not None):
            rep.add_violation(g, "classification agrees with is_deza", cls.kind, label)
        if cls.kind == "unmatched":
            rep.add_violation(g, "a table row", f"Deza {sorted(_type_set(G))} with no row", label)
        elif cls.is_deza and cls.expected_type() != _type_set(G):
            rep.add_violation(g, sorted(cls.expected_type()), sorted(_type_set(G)), label)
    rep.notes["rows"] = dict(sorted(rows.items()))


def _suite_lemma0a(pop, rep):
    for label, g in pop:
        G = _abstract(g)
        r = G.regularity()
        if r is None or G.n <= r * r + 1:
            continue
        rep.checked += 1
        if 0 not in _type_set(G):
            rep.add_violation(g, "0 in A", sorted(_type_set(G)), label)


def _suite_lemma2a(pop, rep):
    for label, g in pop:
        G = _abstract(g)
        if G.n < 2:
            continue
        rep.checked += 1
        has2 = 2 in _type_set(G)
        has4 = four_cycle_witness(G) is not None
        if has2 != has4:
            rep.add_violation(g, f"2 in A iff 4-cycle ({has4})", has2, label)


def _suite_lemma0123(pop, rep):
    for label, g in pop:
        r = _regular_polyhedron(g)
        if r is None or _is_octahedron(g):
            continue
        rep.checked += 1
        top = type_profile(g).max_common
        if top > r - 1:
            rep.add_violation(g, f"max A <= {r - 1}", top, label)


def _suite_prop1a(pop, rep):
    skip = {"cube", "octahedron", "icosahedron"}
    for label, g in pop:
        r = _regular_polyhedron(g)
        if r is None or fx.is_tetrahedron(g.to_abstract()) or fx.exceptional_name(g) in skip:
            continue
        rep.checked += 1
        if 1 not in type_profile(g).a_set:
            rep.add_violation(g, "1 in A", sorted(type_profile(g).a_set), label)


def _suite_cor1(pop, rep):
    excluded = medial_checked = five_checked = 0
    for label, g in pop:
        r = _regular_polyhedron(g)
        if r in (3, 4, 5):
            if _is_octahedron(g):
                excluded += 1
            else:
                rep.checked += 1
                if k2r_witness(g, r) is not None:
                    rep.add_violation(g, f"no K(2,{r})", k2r_witness(g, r), label)
        if isinstance(g, PlaneGraph) and g.is_polyhedral() and g.q <= 150:
            m = medial(g)
            if not _is_octahedron(m):
                medial_checked += 1
                rep.checked += 1
                if k2r_witness(m, 3) is not None:
                    rep.add_violation(g, "medial graph has no K(2,3)", "K(2,3) found", label)
        if _abstract(g).regularity() == 5:
            five_checked += 1
            rep.checked += 1
            if four_cycle_witness(_abstract(g)) is None:
                rep.add_violation(g, "5-regular planar graph has a 4-cycle", "none", label)
    rep.notes.update(
        octahedron_excluded=excluded, medial_checked=medial_checked, five_regular_checked=five_checked
    )


def _suite_lemma_tec(pop, rep):
    for label, g in pop:
        if _regular_polyhedron(g) != 5:
            continue
        rep.checked += 1
        if 0 not in type_profile(g).a_set:
            rep.add_violation(g, "0 in A", sorted(type_profile(g).a_set), label)


def _suite_prop30(pop, rep):
    tight, skipped = [], []
    for label, g in pop:
        if not isinstance(g, PlaneGraph) or g.to_abstract().regularity() != 5:
            continue
        try:
            r = prop30_report(g)
        except PolydezaError as exc:
            skipped.append(f"{label}: {exc}")
            continue
        rep.checked += 1
        if not r.holds:
            rep.add_violation(g, "q2 >= 15 + q/2 + q0 >= 30", [r.q2, r.middle], label)
        if r.tight:
            tight.append(label)
    rep.notes.update(tight=tight, precondition_skipped=skipped)


def _suite_prop1223(pop, rep):
    tight, lower_checked, with_quads = [], 0, []
    for label, g in pop:
        if _regular_polyhedron(g) != 4:
            continue
        st = face_stats(g)
        rep.checked += 1
        if st.fi(4) == 0:
            lower_checked += 1
            if 2 * st.fi(3) < st.f + 8:
                rep.add_violation(g, "f3 >= f/2 + 4", [st.fi(3), st.f], label)
        elif 2 * st.fi(3) < st.f + 8:
            # the lower bound is derived assuming no quadrangles
            with_quads.append(label)
        if is_deza(g) is None or fx.exceptional_name(g) is not None:
            continue
        r = prop1223_report(g)
        if not r.holds:
            rep.add_violation(g, "f3 and q1 bounds", [r.f3, r.f, r.q1, r.q], label)
        if r.f3_lower_tight and r.f3_upper_tight and r.q1_tight:
            tight.append(label)
    rep.notes.update(
        all_bounds_tight=tight,
        lower_bound_checked=lower_checked,
        lower_bound_fails_with_quadrangles=with_quads,
    )


def _suite_census(pop, rep):
    deza, small = [], Counter()
    for label, g in pop:
        if _regular_polyhedron(g) != 4:
            continue
        rep.checked += 1
        if g.n <= 9:
            small[g.n] += 1
        if is_deza(g) is None:
            continue
        name = fx.exceptional_name(g)
        deza.append({"n": g.n, "name": name, "type": sorted(type_profile(g).a_set)})
        if name is None and g.n < 30:
            rep.add_violation(g, "no non-exceptional quartic Deza graph below order 30", g.n, label)
    rep.notes.update(deza=deza, deza_count=len(deza), order_le_9_census=dict(sorted(small.items())))


def _suite_generators(pop, rep):
    from .generate import gen_cubic_polyhedra, gen_quartic_polyhedra
    from .oracle import ORACLE_CAP, oracle_regular_planar

    bound = pop.bound if pop.bound is not None else 13
    top4, top3 = min(bound, ORACLE_CAP[4]), min(bound, ORACLE_CAP[3])
    gen4 = Counter(g.n for g in gen_quartic_polyhedra(top4, pop.threads))
    gen3 = Counter(g.n for g in gen_cubic_polyhedra(top3, 3, pop.threads))
    rows = []
    for r, top, gen, lo in ((4, top4, gen4, 6), (3, top3, gen3, 4)):
        for n in range(lo, top + 1):
            if (r * n) % 2:
                continue
            want = len(oracle_regular_planar(r, n))
            rep.checked += 1
            rows.append({"r": r, "n": n, "generated": gen[n], "oracle": want})
            if gen[n] != want:
                rep.violations.append(
                    {"code": f"r={r},n={n}", "label": "count", "expected": want, "observed": gen[n]}
                )
    rep.notes["counts"] = rows


SUITES = {
    "thm35r": _suite_thm35r,
    "thm4r": _suite_thm4r,
    "thm4max": _suite_thm4max,
    "prop4min": _suite_prop4min,
    "prop0123": _suite_prop0123,
    "prop1": _suite_prop1,
    "lemma0A": _suite_lemma0a,
    "lemma2A": _suite_lemma2a,
    "lemma0123": _suite_lemma0123,
    "prop1A": _suite_prop1a,
    "cor1": _suite_cor1,
    "lemma_tec": _suite_lemma_tec,
    "prop30": _suite_prop30,
    "prop1223": _suite_prop1223,
    "census": _suite_census,
    "generators": _suite_generators,
}


def run_suite(name: str, population) -> SuiteReport:
    """Run a named suite over a population.

    ``population`` is a spec string, a :class:`Population`, or any iterable
    of ``(label, graph)`` pairs.
    """
    from .populations import parse_population

    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    pop = parse_population(population) if isinstance(population, str) else population
    rep = SuiteReport(name, getattr(pop, "spec", "custom"))
    SUITES[name](pop, rep)
    return rep


# tables --------------------------------------------------------------------

def table_counts(pop) -> dict[tuple[int, str], int]:
    """Number of graphs per (order, table row) over a population."""
    counts: Counter = Counter()
    for _, g in pop:
        G = _abstract(g)
        if G.regularity() is None:
            continue
        cls = classify_planar_regular(g)
        counts[(G.n, cls.row or cls.kind)] += 1
    return dict(counts)


def table_csv(pop) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["order", "row", "count"])
    for (n, row), c in sorted(table_counts(pop).items()):
        w.writerow([n, row, c])
    return out.getvalue()
