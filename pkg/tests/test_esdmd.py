import json

import numpy as np
import pytest

from conftest import random_linear_system
from streamdmd import fit_batch, stream_from_trajectory
from streamdmd.esdmd import (
    EfficientStreamingDMD,
    esdmd_init,
    load_state,
    reduced_operator,
    save_state,
    state_from_dict,
    state_to_dict,
    update_basis,
)
from streamdmd.snapshots import SnapshotPair

e = np.eye(4)


def test_init_orthonormal_pair():
    s = esdmd_init(SnapshotPair(e[0], e[1], 1), r=3)
    np.testing.assert_array_equal(s.Q, e[:, :2])
    np.testing.assert_array_equal(s.G_X, np.diag([1.0, 0.0]))
    np.testing.assert_array_equal(s.G_Y, np.diag([0.0, 1.0]))
    np.testing.assert_array_equal(s.C, [[0.0, 0.0], [1.0, 0.0]])
    assert s.k == 1 and not s.new_direction


def test_init_collinear():
    x = np.array([1.0, 2.0, 2.0, 0.0])
    s = esdmd_init(SnapshotPair(x, 2 * x, 1), r=3)
    assert s.Q.shape == (4, 1)
    np.testing.assert_allclose(s.G_X, [[9.0]])
    np.testing.assert_allclose(s.G_Y, [[36.0]])
    np.testing.assert_allclose(s.C, [[18.0]])


def test_init_hand_qr():
    s = esdmd_init(SnapshotPair(np.array([1.0, 0.0]), np.array([1.0, 1.0]), 1), r=2)
    np.testing.assert_allclose(np.abs(s.Q), np.eye(2), atol=1e-15)
    signs = np.sign(np.diag(s.Q))
    np.testing.assert_allclose(s.Q.T @ [1.0, 0.0] * signs, [1.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(s.Q.T @ [1.0, 1.0] * signs, [1.0, 1.0], atol=1e-15)


def test_init_errors():
    with pytest.raises(ValueError):
        esdmd_init(SnapshotPair(np.zeros(2), np.ones(2), 1), r=2)
    with pytest.raises(ValueError):
        esdmd_init(SnapshotPair(np.ones(2), np.ones(2), 1), r=1)


def test_no_expansion_reuses_cache():
    s = esdmd_init(SnapshotPair(e[0], e[1], 1), r=3)
    cached = s.y_prev_projected
    Q = s.Q
    update_basis(s, SnapshotPair(e[1], e[0] + e[1], 2))
    assert s.Q is Q
    assert s.x_proj is cached
    assert not s.expanded and not s.new_direction


def test_third_direction_grows_without_compression():
    s = esdmd_init(SnapshotPair(e[0], e[1], 1), r=3)
    update_basis(s, SnapshotPair(e[1], e[2], 2))
    assert s.Q.shape == (4, 3)
    assert s.G_X.shape == s.G_Y.shape == s.C.shape == (3, 3)
    assert s.expanded and not s.compressed and not s.new_direction


def test_compression_caps_rank():
    s = esdmd_init(SnapshotPair(e[0], e[1], 1), r=2)
    update_basis(s, SnapshotPair(e[1], e[2], 2))
    assert s.Q.shape == (4, 2)
    assert s.compressed
    np.testing.assert_allclose(s.Q.T @ s.Q, np.eye(2), atol=1e-15)


def test_errors():
    s = esdmd_init(SnapshotPair(e[0], e[1], 1), r=3)
    with pytest.raises(ValueError):
        update_basis(s, SnapshotPair(np.ones(5), np.ones(5), 2))
    with pytest.raises(ValueError):
        update_basis(s, SnapshotPair(e[1], np.array([np.inf, 0, 0, 0]), 2))


def test_oscillatory_accumulators_match_batch(oscillatory_pairs, oscillatory):
    s = esdmd_init(oscillatory_pairs[0], 10)
    for p in oscillatory_pairs[1:]:
        update_basis(s, p)
    assert s.Q.shape[1] == 4
    X, Y = oscillatory[:, :-1], oscillatory[:, 1:]
    Q = s.Q
    np.testing.assert_allclose(s.C, Q.T @ Y @ X.T @ Q, atol=1e-8 * np.linalg.norm(X) * np.linalg.norm(Y))
    np.testing.assert_allclose(s.G_X, Q.T @ X @ X.T @ Q, atol=1e-8 * np.linalg.norm(X) ** 2)


def test_scalar_system():
    m = EfficientStreamingDMD(2)
    for x in (1.0, 0.5, 0.25):
        m.update([x], [0.5 * x])
    np.testing.assert_allclose(m.operator(), [[0.5]], atol=1e-15)


def test_identity_dynamics():
    rng = np.random.default_rng(5)
    m = EfficientStreamingDMD(4)
    x = rng.standard_normal(6)
    for _ in range(3):
        m.update(x, x)
    np.testing.assert_allclose(np.linalg.eigvals(m.operator()), 1.0, atol=1e-10)
    m2 = EfficientStreamingDMD(4)
    x = rng.standard_normal(6)
    m2.update(x, x)
    m2.update(x, x)
    np.testing.assert_allclose(np.linalg.eigvals(m2.operator()), 1.0, atol=1e-10)


def test_oscillatory_operator_matches_batch(oscillatory_pairs, oscillatory):
    m = EfficientStreamingDMD(10)
    for p in oscillatory_pairs:
        m.update_pair(p)
    b = fit_batch(oscillatory[:, :-1], oscillatory[:, 1:], 10)
    np.testing.assert_allclose(
        np.sort_complex(np.linalg.eigvals(m.operator())),
        np.sort_complex(np.linalg.eigvals(b.operator)),
        atol=1e-8,
    )


def test_cache_equals_fresh_projection(kuramoto_pairs):
    s = esdmd_init(kuramoto_pairs[0], 10)
    for p in kuramoto_pairs[1:200]:
        update_basis(s, p)
        if not s.expanded:
            np.testing.assert_array_equal(s.Q.T @ p.x, s.x_proj)


@pytest.mark.parametrize("seed", range(10))
def test_matches_sdmd_without_compression(seed):
    from streamdmd.sdmd import sdmd_init, sdmd_operator, sdmd_update

    T, r = random_linear_system(seed)
    pairs = stream_from_trajectory(T).pairs()
    a = esdmd_init(pairs[0], r)
    b = sdmd_init(pairs[0], r)
    for p in pairs[1:]:
        update_basis(a, p)
        sdmd_update(b, p)
    ea = np.linalg.eigvals(reduced_operator(a))
    eb = np.linalg.eigvals(sdmd_operator(b))
    scale = max(1.0, np.abs(ea).max())
    ea, eb = ea[np.abs(ea) > 1e-6 * scale], eb[np.abs(eb) > 1e-6 * scale]
    np.testing.assert_allclose(np.sort_complex(ea), np.sort_complex(eb), atol=1e-8)


def test_checkpoint_round_trip(tmp_path, kuramoto_pairs):
    s = esdmd_init(kuramoto_pairs[0], 10)
    for p in kuramoto_pairs[1:50]:
        update_basis(s, p)
    path = tmp_path / "state.json"
    save_state(path, s)
    blob = json.loads(path.read_text())
    assert blob["Q"]["shape"] == [100, 10]
    assert blob["Q"]["data"][1] == s.Q[1, 0]  # column-major
    r = load_state(path)
    for key in ("Q", "G_X", "G_Y", "C", "y_prev_projected"):
        np.testing.assert_array_equal(getattr(r, key), getattr(s, key))
    assert (r.k, r.max_rank, r.eps) == (s.k, s.max_rank, s.eps)
    for p in kuramoto_pairs[50:80]:
        update_basis(s, p)
        update_basis(r, p)
    np.testing.assert_array_equal(reduced_operator(r), reduced_operator(s))


def test_checkpoint_rejects_bad_payload(kuramoto_pairs):
    d = state_to_dict(esdmd_init(kuramoto_pairs[0], 10))
    with pytest.raises(ValueError):
        state_from_dict({**d, "format": "other"})
    d["C"] = {"shape": [3, 3], "data": [0.0] * 9}
    with pytest.raises(ValueError):
        state_from_dict(d)
