import numpy as np
import pytest

from streamdmd.systems import (
    KuramotoConfig,
    OscillatoryConfig,
    kuramoto_phases,
    kuramoto_trajectory,
    oscillatory_trajectory,
)


def test_oscillatory_protocol_shape(oscillatory):
    assert oscillatory.shape == (100, 1201)


def test_oscillatory_t0_column():
    cfg = OscillatoryConfig(n=7, seed=3)
    rng = np.random.default_rng(3)
    v1, v2, v3, v4 = (rng.standard_normal(7) for _ in range(4))
    np.testing.assert_array_equal(oscillatory_trajectory(cfg)[:, 0], v2 + v4)


def _rank(T):
    s = np.linalg.svd(T, compute_uv=False)
    return int(np.sum(s > 1e-8 * s[0]))


def test_oscillatory_rank(oscillatory):
    assert _rank(oscillatory) == 4


def test_oscillatory_printed_form_rank():
    assert _rank(oscillatory_trajectory(OscillatoryConfig(form="printed"))) == 2


@pytest.mark.parametrize("seed", range(5))
def test_oscillatory_rank_bound(seed):
    rng = np.random.default_rng(seed)
    f1, f2 = rng.uniform(0.5, 50, 2)
    assert _rank(oscillatory_trajectory(OscillatoryConfig(n=30, f1=f1, f2=f2, seed=seed))) <= 4


def test_oscillatory_nyquist_check():
    with pytest.raises(ValueError):
        OscillatoryConfig(f1=60.0)


def test_kuramoto_uncoupled_closed_form():
    cfg = KuramotoConfig(n=1, coupling=0.0, damping=0.0, duration=1.0, seed=0)
    T = kuramoto_trajectory(cfg, omega=[np.pi], theta0=[0.3])
    t = np.arange(121) / 120
    np.testing.assert_allclose(T[0], np.sin(0.3 + np.pi * t), atol=1e-8)


def test_kuramoto_identical_oscillators_stay_locked():
    cfg = KuramotoConfig(n=2, duration=2.0)
    th = kuramoto_phases(cfg, omega=[2.7, 2.7], theta0=[1.0, 1.0])
    np.testing.assert_array_equal(th[0], th[1])


def test_kuramoto_protocol(kuramoto):
    assert kuramoto.shape == (100, 1201)
    assert np.all(np.abs(kuramoto) <= 1.0)


def test_kuramoto_damping_slows_phase():
    cfg0 = KuramotoConfig(n=1, damping=0.0, duration=1.0)
    cfg1 = KuramotoConfig(n=1, damping=0.9, duration=1.0)
    p0 = kuramoto_phases(cfg0, omega=[3.0], theta0=[0.0])[0, -1]
    p1 = kuramoto_phases(cfg1, omega=[3.0], theta0=[0.0])[0, -1]
    np.testing.assert_allclose([p0, p1], [3.0, 3.0 / 1.9], atol=1e-12)


@pytest.mark.parametrize("n", [10, 100])
def test_kuramoto_rk4_self_consistency(n):
    a = kuramoto_phases(KuramotoConfig(n=n, duration=1.0))[:, -1]
    b = kuramoto_phases(KuramotoConfig(n=n, duration=1.0, substeps=2))[:, -1]
    assert np.abs(a - b).max() <= 1e-6


def test_determinism():
    cfg = KuramotoConfig(n=20, duration=1.0, seed=11)
    np.testing.assert_array_equal(kuramoto_trajectory(cfg), kuramoto_trajectory(cfg))
    ocfg = OscillatoryConfig(n=20, seed=11)
    np.testing.assert_array_equal(oscillatory_trajectory(ocfg), oscillatory_trajectory(ocfg))


def test_kuramoto_validation():
    with pytest.raises(ValueError):
        KuramotoConfig(damping=1.5)
    bad = np.ones((3, 3))
    with pytest.raises(ValueError):
        KuramotoConfig(n=3, adjacency=bad)
    A = np.zeros((3, 3))
    A[0, 1] = 1
    with pytest.raises(ValueError):
        KuramotoConfig(n=3, adjacency=A)


def test_kuramoto_custom_adjacency_decouples():
    A = np.zeros((2, 2))
    cfg = KuramotoConfig(n=2, adjacency=A, damping=0.0, duration=1.0)
    th = kuramoto_phases(cfg, omega=[2.5, 3.0], theta0=[0.0, 1.0])
    np.testing.assert_allclose(th[:, -1], [2.5, 4.0], atol=1e-12)
