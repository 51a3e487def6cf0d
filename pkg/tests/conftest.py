import pytest
from hypothesis import HealthCheck, settings

from polydeza import fixtures as fx
from polydeza.generate import gen_cubic_polyhedra, gen_quartic_polyhedra

settings.register_profile(
    "polydeza",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("polydeza")


@pytest.fixture(scope="session")
def corpus():
    """Fixtures plus small generated polyhedra, keyed by a readable label."""
    graphs = dict(fx.all_fixtures())
    for i, g in enumerate(gen_quartic_polyhedra(11)):
        graphs[f"quartic-{g.n}-{i}"] = g
    for i, g in enumerate(gen_cubic_polyhedra(10)):
        graphs[f"cubic-{g.n}-{i}"] = g
    return graphs


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines.items()):
        terminalreporter.write_line(line)
