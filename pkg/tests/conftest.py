import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from braidloc import fixtures  # noqa: E402
from braidloc.gybe import GybOperator  # noqa: E402


@pytest.fixture(scope="session")
def case_op():
    return fixtures.load_case_study()


@pytest.fixture(scope="session")
def rzwg_op():
    return fixtures.load_rzwg()


@pytest.fixture(scope="session")
def sl3():
    return fixtures.load_sl3_level3()


def swap_operator(d=2):
    p = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            p[j * d + i, i * d + j] = 1
    return GybOperator(2, 1, d, p)


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / abs(np.diag(r)))


def perm_diag_operator(rng, d=2):
    """Unitary (2,1) solution ``P D`` with ``P`` the flip and ``D`` a random diagonal phase.

    ``c = P (x) diag(phi_ij)`` maps e_i(x)e_j to phi_ij e_j(x)e_i; this satisfies
    the Yang-Baxter equation for any phases.
    """
    phases = np.exp(2j * np.pi * rng.random((d, d)))
    c = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            c[j * d + i, i * d + j] = phases[i, j]
    return GybOperator(2, 1, d, c)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[k])
