import math

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from fuchsia.moebius import MoebiusMap
from fuchsia.monster import MonsterWindow

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _default_tolerance(monkeypatch):
    monkeypatch.delenv("FUCHSIA_TOLERANCE", raising=False)


finite = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


@st.composite
def sl2_maps(draw, bound=3.0):
    """Random PSL(2,R) elements with moderate entries."""
    a = draw(st.floats(min_value=0.2, max_value=bound))
    b = draw(st.floats(min_value=-bound, max_value=bound))
    c = draw(st.just(0.0) | st.floats(min_value=1e-3, max_value=bound) | st.floats(min_value=-bound, max_value=-1e-3))
    d = (1.0 + b * c) / a
    return MoebiusMap(a, b, c, d)


@st.composite
def uhp_points(draw):
    x = draw(st.floats(min_value=-5.0, max_value=5.0))
    y = draw(st.floats(min_value=0.05, max_value=5.0))
    return complex(x, y)


positive_sequences = st.lists(
    st.floats(min_value=1e-2, max_value=1e2), min_size=2, max_size=12
)


@st.composite
def windows(draw, start=None):
    a = draw(st.floats(min_value=-50.0, max_value=50.0)) if start is None else start
    gaps = [draw(st.floats(min_value=0.05, max_value=10.0)) for _ in range(4)]
    vals = [a]
    for g in gaps:
        vals.append(vals[-1] + g)
    return MonsterWindow(*vals)


def entries_close(m, entries, tol=1e-12):
    return all(math.isclose(x, y, rel_tol=tol, abs_tol=tol) for x, y in zip(m.entries, entries))


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name[5:8]} {name[9:].replace('_', ' ')}")
