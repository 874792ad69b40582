from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from reflex24.hquat import Quat
from reflex24.lattices import PHI

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=6)
quats = st.builds(Quat, small_fracs, small_fracs, small_fracs, small_fracs)
half_ints = st.integers(-8, 8)
hurwitz = st.builds(lambda a, b, c, d, odd: Quat(a, b, c, d) + (Quat.from_halves(1, 1, 1, 1) if odd else Quat(0)),
                    half_ints, half_ints, half_ints, half_ints, st.booleans())
units = st.sampled_from(PHI)


# --- acceptance summary: one line per criterion in the terminal report ---

_criteria: dict[int, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n = mark.args[0]
    _criteria[n] = _criteria.get(n, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _criteria[n] else 'FAIL'}")
