import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from posetramsey import kernels
from posetramsey.core import GroundSet, Subposet

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def z4():
    return GroundSet(("1", "2", "x1", "x2"))


@pytest.fixture
def fig2b(z4):
    return Subposet.from_labels(z4, [[], ["1", "x1"], ["1", "2", "x1"], ["2", "x2"], ["1", "2", "x2"]])


@pytest.fixture
def shifted_square(z4):
    return Subposet.from_labels(z4, [["x1"], ["1", "x1"], ["2", "x1"], ["1", "2", "x1"]])


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.SUMMARY:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.SUMMARY, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
