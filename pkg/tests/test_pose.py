"""Pose algebra checked against a dense 4x4 homogeneous-matrix oracle."""

import numpy as np
import pytest

from batchsim.errors import DimensionError
from batchsim.pose import PoseBatch, TransformMatrixBatch, quat_normalize


def random_poses(rng, n):
    p = rng.uniform(-2.0, 2.0, size=(n, 3))
    q = rng.normal(size=(n, 4))
    return PoseBatch(p, q)


def matrix_oracle(pose: PoseBatch) -> np.ndarray:
    """Independent homogeneous-matrix construction, element by element."""
    n = len(pose)
    out = np.zeros((n, 4, 4))
    for i in range(n):
        w, x, y, z = pose.q[i]
        r = np.array(
            [
                [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
                [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
                [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
            ]
        )
        out[i, :3, :3] = r
        out[i, :3, 3] = pose.p[i]
        out[i, 3, 3] = 1.0
    return out


class TestCompose:
    def test_identity_left_right(self):
        rng = np.random.default_rng(0)
        p = random_poses(rng, 32)
        eye = PoseBatch.identity(1)
        assert eye.compose(p).allclose(p, atol=1e-12)
        assert p.compose(eye).allclose(p, atol=1e-12)

    def test_inverse_gives_identity(self):
        rng = np.random.default_rng(1)
        p = random_poses(rng, 64)
        ident = p.compose(p.inverse())
        assert np.abs(ident.p).max() < 1e-9
        assert np.abs(ident.q - np.array([1.0, 0, 0, 0])).max() < 1e-9

    def test_matches_matrix_oracle_bulk(self):
        rng = np.random.default_rng(2)
        a = random_poses(rng, 10_000)
        b = random_poses(rng, 10_000)
        got = a.compose(b).to_matrix().matrices
        want = matrix_oracle(a) @ matrix_oracle(b)
        assert np.abs(got - want).max() < 1e-9

    def test_broadcast_singleton(self):
        rng = np.random.default_rng(3)
        one = random_poses(rng, 1)
        many = random_poses(rng, 17)
        batched = one.compose(many)
        for i in range(17):
            assert batched[i].allclose(one.compose(many[i]), atol=1e-12)

    def test_incompatible_sizes_error_names_both(self):
        rng = np.random.default_rng(4)
        with pytest.raises(DimensionError, match="3.*5|5.*3"):
            random_poses(rng, 3).compose(random_poses(rng, 5))

    def test_associativity_samples(self):
        rng = np.random.default_rng(5)
        a, b, c = (random_poses(rng, 100) for _ in range(3))
        lhs = a.compose(b).compose(c)
        rhs = a.compose(b.compose(c))
        assert np.abs(lhs.p - rhs.p).max() < 1e-9
        assert np.abs(lhs.q - rhs.q).max() < 1e-9

    def test_norm_drift_over_chained_composes(self):
        rng = np.random.default_rng(6)
        step = random_poses(rng, 4)
        acc = PoseBatch.identity(4)
        for _ in range(10_000):
            acc = acc.compose(step)
        norms = np.linalg.norm(acc.q, axis=1)
        assert np.abs(norms - 1.0).max() < 1e-9


class TestInverse:
    def test_identity(self):
        assert PoseBatch.identity(3).inverse().allclose(PoseBatch.identity(3), atol=0)

    def test_pure_translation(self):
        p = PoseBatch.from_pq(position=(1.0, 2.0, 3.0))
        inv = p.inverse()
        assert np.allclose(inv.p, [[-1.0, -2.0, -3.0]])
        assert np.allclose(inv.q, [[1.0, 0, 0, 0]])

    def test_worked_expression_matches_matrix_oracle(self):
        # (P1 P2)^-1 P1^-1 via quaternions vs the same expression on matrices.
        rng = np.random.default_rng(7)
        p1 = random_poses(rng, 10_000)
        p2 = random_poses(rng, 10_000)
        got = p1.compose(p2).inverse().compose(p1.inverse()).to_matrix().matrices
        m1, m2 = matrix_oracle(p1), matrix_oracle(p2)
        want = np.linalg.inv(m1 @ m2) @ np.linalg.inv(m1)
        assert np.abs(got - want).max() < 1e-9


class TestTransformPoints:
    def test_identity_leaves_points(self):
        pts = np.random.default_rng(8).normal(size=(4, 9, 3))
        out = PoseBatch.identity(4).transform_points(pts)
        assert np.array_equal(out, pts)

    def test_analytic_yaw(self):
        half = np.pi / 4
        yaw90 = PoseBatch.from_pq(quaternion=(np.cos(half), 0, 0, np.sin(half)))
        out = yaw90.transform_points(np.array([[[1.0, 0.0, 0.0]]]))
        assert np.abs(out - np.array([[[0.0, 1.0, 0.0]]])).max() < 1e-12

    def test_matches_matrix_oracle(self):
        rng = np.random.default_rng(9)
        poses = random_poses(rng, 200)
        pts = rng.normal(size=(200, 5, 3))
        got = poses.transform_points(pts)
        m = matrix_oracle(poses)
        want = np.einsum("nij,nkj->nki", m[:, :3, :3], pts) + m[:, None, :3, 3]
        assert np.abs(got - want).max() < 1e-9

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            PoseBatch.identity(3).transform_points(np.zeros((2, 4, 3)))


class TestMatrixRoundTrip:
    def test_identity_exact(self):
        eye = PoseBatch.identity(1)
        back = PoseBatch.from_matrix(eye.to_matrix().matrices)
        assert np.array_equal(back.p, eye.p)
        assert np.array_equal(back.q, eye.q)

    def test_half_turn_rotations(self):
        # w = 0 edge cases around each principal axis.
        for axis in range(3):
            q = np.zeros(4)
            q[axis + 1] = 1.0
            pose = PoseBatch.from_pq(quaternion=tuple(q))
            back = PoseBatch.from_matrix(pose.to_matrix().matrices)
            assert back.allclose(pose, atol=1e-9)

    def test_random_round_trip_bulk(self):
        rng = np.random.default_rng(10)
        poses = random_poses(rng, 10_000)
        back = PoseBatch.from_matrix(poses.to_matrix().matrices)
        assert np.abs(back.p - poses.p).max() < 1e-9
        assert np.abs(back.q - poses.q).max() < 1e-9

    def test_rejects_non_orthonormal(self):
        bad = np.eye(4)[None].copy()
        bad[0, 0, 0] = 1.1
        with pytest.raises(ValueError, match="orthonormal"):
            PoseBatch.from_matrix(bad)

    def test_canonical_sign(self):
        q = quat_normalize(np.array([[-0.5, 0.5, 0.5, 0.5]]))
        assert q[0, 0] >= 0.0
        # w = 0 tie falls through to x.
        q = quat_normalize(np.array([[0.0, -1.0, 0.0, 0.0]]))
        assert q[0, 1] > 0.0


class TestTransformMatrixBatch:
    def test_bottom_row_enforced(self):
        bad = np.eye(4)[None].copy()
        bad[0, 3, 0] = 0.5
        with pytest.raises(ValueError, match="bottom row"):
            TransformMatrixBatch(bad)

    def test_compose_and_inverse(self):
        rng = np.random.default_rng(11)
        a = random_poses(rng, 8).to_matrix()
        b = random_poses(rng, 8).to_matrix()
        want = a.matrices @ b.matrices
        assert np.allclose(a.compose(b).matrices, want)
        assert np.allclose(
            a.inverse().matrices @ a.matrices, np.tile(np.eye(4), (8, 1, 1)), atol=1e-12
        )
