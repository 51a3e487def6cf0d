"""Acceptance criteria 1 to 11, one test each.

Every test records a single ``criterion N: PASS|FAIL ...`` line; the lines
are printed together at the end of the run (see ``conftest.py``).
"""

import functools
import time
from collections import Counter

from polydeza import fixtures as fx
from polydeza.analysis import face_stats, four_cycle_witness, prop30_report, prop1223_report, type_profile
from polydeza.classify import run_suite
from polydeza.codecs import decode_graph6, encode_graph6, encode_planar_code_one, iter_planar_code
from polydeza.generate import gen_cubic_polyhedra, gen_quartic_polyhedra
from polydeza.graph import canonical_code
from polydeza.oracle import oracle_regular_planar
from polydeza.populations import clear_cache, parse_population
from polydeza.transforms import TDecomposition, face_sites, medial, medial_preimage, t_construct, t_decompose

RESULTS: dict[int, str] = {}


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                took = time.perf_counter() - start
                msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                RESULTS[number] = f"criterion {number:2d}: FAIL  {title} [{took:.1f}s] {msg}"
                raise
            took = time.perf_counter() - start
            RESULTS[number] = f"criterion {number:2d}: PASS  {title} [{took:.1f}s] {detail or ''}".rstrip()

        return run

    return wrap


@criterion(1, "Platonic type profiles")
def test_c01_platonic_types():
    want = {
        "tetrahedron": {2},
        "cube": {0, 2},
        "octahedron": {2, 4},
        "icosahedron": {0, 2},
        "dodecahedron": {0, 1},
    }
    start = time.perf_counter()
    got = {name: set(type_profile(fx.fixture(name)).a_set) for name in want}
    took = time.perf_counter() - start
    assert got == want, got
    assert took < 1.0, f"took {took:.2f}s"
    return f"{took * 1000:.0f} ms"


@criterion(2, "generator counts equal oracle counts")
def test_c02_generator_gate():
    quartic = Counter(g.n for g in gen_quartic_polyhedra(13))
    cubic = Counter(g.n for g in gen_cubic_polyhedra(14))
    rows = []
    for n in range(6, 14):
        rows.append((4, n, quartic[n], len(oracle_regular_planar(4, n))))
    for n in range(4, 15, 2):
        rows.append((3, n, cubic[n], len(oracle_regular_planar(3, n))))
    bad = [r for r in rows if r[2] != r[3]]
    assert not bad, bad
    return "quartic " + ",".join(str(r[2]) for r in rows if r[0] == 4) + "; cubic " + ",".join(
        str(r[2]) for r in rows if r[0] == 3)


@criterion(3, "type prediction on every quartic polyhedron of order <= 17")
def test_c03_thm35r_census():
    clear_cache()
    start = time.perf_counter()
    smoke = run_suite("thm35r", "quartic:13")
    smoke_time = time.perf_counter() - start
    assert smoke.passed, smoke.violations[:3]
    assert smoke_time <= 120, f"smoke tier took {smoke_time:.0f}s"
    full = run_suite("thm35r", "quartic:17")
    assert full.passed, full.violations[:3]
    assert full.checked == 2012 - 3
    return f"{full.checked} checked, 0 violations; smoke tier {smoke_time:.1f}s"


@criterion(4, "exactly three quartic Deza polyhedra of order <= 17")
def test_c04_exceptional_census():
    rep = run_suite("census", "quartic:17")
    deza = rep.notes["deza"]
    assert rep.passed, rep.violations[:3]
    assert sorted(d["n"] for d in deza) == [6, 8, 9], deza
    assert {d["name"] for d in deza} == {"octahedron", "square-antiprism", "nine-vertex-quartic"}
    return f"orders {[d['n'] for d in deza]} among {rep.checked}"


@criterion(5, "medial(dodecahedron) face statistics")
def test_c05_medial_dodecahedron():
    m = medial(fx.dodecahedron())
    st = face_stats(m)
    got = dict(p=st.p, q=st.q, f=st.f, f3=st.fi(3), f5=st.fi(5), q1=st.q1)
    assert got == dict(p=30, q=60, f=32, f3=20, f5=12, q1=60), got
    rep = prop1223_report(m)
    assert rep.f3_lower_tight and rep.f3_upper_tight
    assert 2 * st.fi(3) == st.f + 8 and 3 * st.fi(3) == 2 * st.f - 4
    return "p=30 q=60 f=32 f3=20 f5=12 q1=60, both f3 bounds tight"


@criterion(6, "line graphs of cubic girth-5 polyhedra of order <= 24")
def test_c06_thm4max():
    rep = run_suite("thm4max", "cubic-girth5:24")
    assert rep.passed, rep.violations[:3]
    assert rep.checked == 2
    return f"{rep.checked} checked, 0 violations"


@criterion(7, "medial round trip over hosts of order <= 14")
def test_c07_thm4r():
    rep = run_suite("thm4r", "hosts:14")
    assert rep.passed, rep.violations[:3]
    assert rep.notes["forward_checked"] >= 1
    return f"forward {rep.notes['forward_checked']}, converse {rep.notes['converse_checked']}, 0 violations"


@criterion(8, "T-construction round trip")
def test_c08_t_construction():
    g1, g2 = fx.fixture("nine-vertex-quartic"), fx.fixture("square-antiprism")
    g = t_construct(face_sites(g1)[0], face_sites(g2)[0])
    assert g.n == 20 and g.to_abstract().regularity() == 4 and g.is_polyhedral()
    assert type_profile(g).a_set == frozenset({0, 1, 2, 3})
    assert medial_preimage(g) is None
    res = t_decompose(g)
    assert isinstance(res, TDecomposition)
    assert {canonical_code(res.g1), canonical_code(res.g2)} == {canonical_code(g1), canonical_code(g2)}
    return "n=20, A={0,1,2,3}, hosts recovered, no medial preimage"


@criterion(9, "q2 >= 15 + q/2 + q0 >= 30 on the 5-regular fixtures")
def test_c09_prop30():
    ico = prop30_report(fx.icosahedron())
    parts = [f"icosahedron q2={ico.q2} middle={ico.middle:g} q0={ico.q0}"]
    ok = ico.q2 == 30 and ico.middle == 30 and ico.q0 == 0 and ico.tight
    for name in ("snub-cube", "snub-dodecahedron"):
        g = fx.fixture(name)
        rep = prop30_report(g, check_preconditions=False)
        cyc = four_cycle_witness(g.to_abstract()) is not None
        parts.append(f"{name} q2={rep.q2} middle={rep.middle:g} holds={rep.holds} 4-cycle={cyc}")
        ok = ok and rep.holds and cyc
    detail = "; ".join(parts)
    assert ok, detail
    return detail


POPULATION_10 = "polyhedra:13"


@criterion(10, "property suites over polyhedra of order <= 13 plus fixtures")
def test_c10_property_suites():
    pop = parse_population(POPULATION_10)
    out = []
    for suite in ("lemma2A", "lemma0A", "lemma0123", "prop1A", "cor1"):
        rep = run_suite(suite, pop)
        assert rep.passed, (suite, rep.violations[:3])
        out.append(f"{suite}={rep.checked}")
    return ", ".join(out)


@criterion(11, "codec golden round trip on the shipped manifest")
def test_c11_codec_golden():
    man = fx.shipped_manifest()
    assert set(man) == set(fx.FIXTURE_NAMES)
    for name, entry in man.items():
        data = fx.shipped_bytes(name)
        graphs = list(iter_planar_code(data))
        assert len(graphs) == 1
        (g,) = graphs
        assert b">>planar_code<<" + encode_planar_code_one(g) == data, name
        assert canonical_code(g).hex() == entry["canonical_code"], name
        assert canonical_code(fx.fixture(name)).hex() == entry["canonical_code"], name
        line = fx.shipped_bytes(name, "graph6_file").decode().strip()
        assert encode_graph6(decode_graph6(line)) == line, name
        assert decode_graph6(line) == g.to_abstract(), name
    return f"{len(man)} fixtures"
