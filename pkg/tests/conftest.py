import numpy as np
import pytest

from streamdmd import (
    KuramotoConfig,
    OscillatoryConfig,
    kuramoto_trajectory,
    oscillatory_trajectory,
    stream_from_trajectory,
)


@pytest.fixture(scope="session")
def oscillatory():
    return oscillatory_trajectory(OscillatoryConfig())


@pytest.fixture(scope="session")
def kuramoto():
    return kuramoto_trajectory(KuramotoConfig())


@pytest.fixture(scope="session")
def oscillatory_pairs(oscillatory):
    return stream_from_trajectory(oscillatory).pairs()


@pytest.fixture(scope="session")
def kuramoto_pairs(kuramoto):
    return stream_from_trajectory(kuramoto).pairs()


def random_linear_system(seed):
    """Trajectory of a random linear map confined to a random subspace.

    Returns ``(T, r)`` with ``r >= rank`` of the trajectory, so no
    compression is ever needed.
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    d = int(rng.integers(1, n + 1))
    k = int(rng.integers(2, 21))
    A = rng.standard_normal((d, d))
    A *= rng.uniform(0.5, 1.0) / np.abs(np.linalg.eigvals(A)).max()
    E = np.linalg.qr(rng.standard_normal((n, d)))[0]
    z = [rng.standard_normal(d)]
    for _ in range(k):
        z.append(A @ z[-1])
    return E @ np.array(z).T, max(2, d)


def nonzero(evals, scale):
    evals = np.asarray(evals)
    return evals[np.abs(evals) > 1e-6 * scale]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in test_acceptance.RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
