import numpy as np
import pytest

from quatcross import oracle
from quatcross.quaternion import Quaternion


def q(t=0.0, x=0.0, y=0.0, z=0.0):
    return Quaternion(float(t), float(x), float(y), float(z))


def exact(p):
    """Exact rational value of a float quaternion."""
    return oracle.RationalQuaternion.from_quaternion(p)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cfg():
    return oracle.RandomConfig(seed=7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
