from itertools import permutations

import hypothesis
import pytest

from unitsums import full_unit_group, make_ring, nth_residue_subgroup

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")


def naive_p(elements, A, m, skip_identity=False):
    """Plain-Python sum over injective tuples; no tables, no numpy."""
    xs = [x for x in elements if not (skip_identity and x == 1)]
    total = 0
    for tup in permutations(xs, len(A)):
        term = 1
        for x, a in zip(tup, A):
            term = term * pow(x, a, m) % m
        total += term
    return total % m


@pytest.fixture(scope="session")
def units7():
    return full_unit_group(make_ring(7))


@pytest.fixture(scope="session")
def units9():
    return full_unit_group(make_ring(9))


@pytest.fixture(scope="session")
def units299():
    return full_unit_group(make_ring(299))


@pytest.fixture(scope="session")
def cubes13():
    return nth_residue_subgroup(make_ring(13), 3)


# -- acceptance summary ---------------------------------------------------------

_CRITERIA: list[tuple[str, str, float, list]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    status = "PASS" if rep.passed else "FAIL"
    _CRITERIA.append((marker.args[0], status, rep.duration, list(rep.user_properties)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, duration, props in _CRITERIA:
        extra = ", ".join(f"{k}={v}" for k, v in props)
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s){'  ' + extra if extra else ''}")
