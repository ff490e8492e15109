import pytest

from otarrange.arrmat import Arrangement, build_3tree
from otarrange.cli import catalog


@pytest.fixture(scope="session")
def A3():
    return catalog("A3")


@pytest.fixture(scope="session")
def X3():
    return catalog("X3")


@pytest.fixture(scope="session")
def X2():
    return catalog("X2")


@pytest.fixture(scope="session")
def nonfano():
    return catalog("nonFano")


@pytest.fixture(scope="session")
def pencil():
    # 3 concurrent lines in the plane
    return Arrangement([[1, 0], [0, 1], [1, 1]], name="pencil")


@pytest.fixture(scope="session")
def two_triangles():
    return build_3tree((1,))


def lines(n):
    """n distinct lines through the origin in the plane."""
    return Arrangement([[1, 0]] + [[k, 1] for k in range(n - 1)], name=f"lines:{n}")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
