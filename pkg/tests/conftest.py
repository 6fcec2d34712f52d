import math

import numpy as np
import pytest

from aptqubit.model import BathSpec, QubitSpec, SymmetryClass
from aptqubit.presets import get_preset

H, PT, APT = SymmetryClass.HERMITIAN, SymmetryClass.PT_SYMMETRIC, SymmetryClass.ANTI_PT_SYMMETRIC
CLASSES = (H, PT, APT)


@pytest.fixture(scope="session")
def bath():
    return BathSpec(j0=1.0, mu=-0.5, wc=1.0, beta=0.5)


@pytest.fixture(scope="session")
def table_qubits():
    return get_preset("table1").qubits()


@pytest.fixture(scope="session")
def fig1_qubits():
    return get_preset("fig1").qubits()


@pytest.fixture(scope="session")
def fig6_qubits():
    return get_preset("fig6").qubits()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_qubit(rng, kind):
    """A random valid qubit of the given class, safely away from its exceptional point."""
    while True:
        alpha, delta, xi, theta = rng.uniform(-2, 2, size=4)
        try:
            q = QubitSpec(kind, alpha, delta, xi, theta)
        except Exception:
            continue
        if q.radicand > 1e-3:
            return q


def rel(a, b):
    return abs(a - b) / abs(b)


# One verdict line per acceptance criterion, repeated in the terminal summary so
# they are visible even when output capture is on.
ACCEPTANCE_LINES: list[str] = []


def report(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"{'PASS' if passed else 'FAIL'}  criterion {number:>2}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
