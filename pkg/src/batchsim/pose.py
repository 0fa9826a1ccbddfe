"""Batched SE(3) poses with a method-chaining API.

A :class:`PoseBatch` holds N rigid transforms as positions (N, 3) in meters
plus unit quaternions (N, 4) in scalar-first (w, x, y, z) order.  All
operations are pure and return new batches; a batch of size 1 broadcasts
against any other batch size.  Quaternions are renormalized and sign
canonicalized (w >= 0, ties broken toward x >= 0, then y, then z) after
every operation so equality tests are well defined despite the quaternion
double cover.

Simulation math is float64 throughout; only renderer pixel buffers use
narrower types.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError


def _as_batch(a, last_dim: int, name: str) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 1:
        a = a[None, :]
    if a.ndim != 2 or a.shape[1] != last_dim:
        raise DimensionError(f"{name} must have shape (N, {last_dim}), got {a.shape}")
    return a


def quat_normalize(q: np.ndarray) -> np.ndarray:
    """Normalize quaternions and canonicalize sign (w >= 0, tie toward +x/+y/+z)."""
    q = q / np.linalg.norm(q, axis=-1, keepdims=True)
    # Cascaded sign rule: first nonzero of (w, x, y, z) is made positive.
    sign = np.zeros(q.shape[:-1])
    for k in range(4):
        undecided = sign == 0.0
        sign[undecided] = np.sign(q[undecided, k])
    sign[sign == 0.0] = 1.0
    return q * sign[..., None]


def quat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product of scalar-first quaternion arrays (broadcasting)."""
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def quat_conjugate(q: np.ndarray) -> np.ndarray:
    out = q.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def quat_rotate(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotate vectors v (..., 3) by unit quaternions q (..., 4)."""
    qv = q[..., 1:]
    w = q[..., 0:1]
    t = 2.0 * np.cross(qv, v)
    return v + w * t + np.cross(qv, t)


def quat_to_matrix(q: np.ndarray) -> np.ndarray:
    """Rotation matrices (..., 3, 3) from unit quaternions (..., 4)."""
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    xx, yy, zz = x * x, y * y, z * z
    xy, xz, yz = x * y, x * z, y * z
    wx, wy, wz = w * x, w * y, w * z
    m = np.empty(q.shape[:-1] + (3, 3))
    m[..., 0, 0] = 1.0 - 2.0 * (yy + zz)
    m[..., 0, 1] = 2.0 * (xy - wz)
    m[..., 0, 2] = 2.0 * (xz + wy)
    m[..., 1, 0] = 2.0 * (xy + wz)
    m[..., 1, 1] = 1.0 - 2.0 * (xx + zz)
    m[..., 1, 2] = 2.0 * (yz - wx)
    m[..., 2, 0] = 2.0 * (xz - wy)
    m[..., 2, 1] = 2.0 * (yz + wx)
    m[..., 2, 2] = 1.0 - 2.0 * (xx + yy)
    return m


def matrix_to_quat(m: np.ndarray) -> np.ndarray:
    """Unit quaternions (..., 4) from rotation matrices, stable near w = 0.

    Uses Shepperd's method: per matrix the largest of (trace, m00, m11, m22)
    selects the division-safe branch, so 180-degree rotations round-trip.
    """
    m = np.asarray(m, dtype=np.float64)
    batch = m.shape[:-2]
    q = np.empty(batch + (4,))
    t = np.einsum("...ii->...", m)
    cand = np.stack([t, m[..., 0, 0], m[..., 1, 1], m[..., 2, 2]], axis=-1)
    choice = np.argmax(cand, axis=-1)

    flat_m = m.reshape((-1, 3, 3))
    flat_q = q.reshape((-1, 4))
    flat_c = choice.reshape(-1)
    for i in range(flat_m.shape[0]):
        r = flat_m[i]
        c = flat_c[i]
        if c == 0:
            s = np.sqrt(1.0 + r[0, 0] + r[1, 1] + r[2, 2]) * 2.0
            flat_q[i] = [0.25 * s, (r[2, 1] - r[1, 2]) / s, (r[0, 2] - r[2, 0]) / s, (r[1, 0] - r[0, 1]) / s]
        elif c == 1:
            s = np.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2]) * 2.0
            flat_q[i] = [(r[2, 1] - r[1, 2]) / s, 0.25 * s, (r[0, 1] + r[1, 0]) / s, (r[0, 2] + r[2, 0]) / s]
        elif c == 2:
            s = np.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2]) * 2.0
            flat_q[i] = [(r[0, 2] - r[2, 0]) / s, (r[0, 1] + r[1, 0]) / s, 0.25 * s, (r[1, 2] + r[2, 1]) / s]
        else:
            s = np.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2]) * 2.0
            flat_q[i] = [(r[1, 0] - r[0, 1]) / s, (r[0, 2] + r[2, 0]) / s, (r[1, 2] + r[2, 1]) / s, 0.25 * s]
    return quat_normalize(q.reshape(batch + (4,)))


class TransformMatrixBatch:
    """N homogeneous 4x4 transforms; the dense oracle twin of :class:`PoseBatch`."""

    def __init__(self, matrices: np.ndarray, check: bool = True):
        m = np.asarray(matrices, dtype=np.float64)
        if m.ndim == 2:
            m = m[None]
        if m.ndim != 3 or m.shape[1:] != (4, 4):
            raise DimensionError(f"expected (N, 4, 4) matrices, got {m.shape}")
        if check:
            bottom = m[:, 3, :]
            if not np.array_equal(bottom, np.tile([0.0, 0.0, 0.0, 1.0], (m.shape[0], 1))):
                raise ValueError("bottom row must be exactly (0, 0, 0, 1)")
            r = m[:, :3, :3]
            err = np.abs(np.einsum("nij,nkj->nik", r, r) - np.eye(3))
            if err.max() > 1e-8:
                raise ValueError(f"rotation block not orthonormal (max error {err.max():.3e})")
        self.matrices = m

    def __len__(self) -> int:
        return self.matrices.shape[0]

    def compose(self, other: "TransformMatrixBatch") -> "TransformMatrixBatch":
        a, b = _broadcast_pair(self.matrices, other.matrices)
        return TransformMatrixBatch(np.matmul(a, b), check=False)

    def inverse(self) -> "TransformMatrixBatch":
        r = self.matrices[:, :3, :3]
        t = self.matrices[:, :3, 3]
        out = np.tile(np.eye(4), (len(self), 1, 1))
        rt = np.swapaxes(r, 1, 2)
        out[:, :3, :3] = rt
        out[:, :3, 3] = -np.einsum("nij,nj->ni", rt, t)
        return TransformMatrixBatch(out, check=False)

    def transform_points(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=np.float64)
        r = self.matrices[:, :3, :3]
        t = self.matrices[:, :3, 3]
        return np.einsum("nij,nkj->nki", r, pts) + t[:, None, :]


def _broadcast_pair(a: np.ndarray, b: np.ndarray):
    if a.shape[0] == b.shape[0]:
        return a, b
    if a.shape[0] == 1:
        return np.broadcast_to(a, (b.shape[0],) + a.shape[1:]), b
    if b.shape[0] == 1:
        return a, np.broadcast_to(b, (a.shape[0],) + b.shape[1:])
    raise DimensionError(f"incompatible batch sizes {a.shape[0]} and {b.shape[0]}")


class PoseBatch:
    """N rigid transforms (position + scalar-first unit quaternion).

    Immutable: the backing arrays are copied on construction and marked
    read-only, so batches are safe to share across threads.
    """

    __slots__ = ("p", "q")

    def __init__(self, positions, quaternions, _normalize: bool = True):
        p = _as_batch(positions, 3, "positions")
        q = _as_batch(quaternions, 4, "quaternions")
        if p.shape[0] != q.shape[0]:
            raise DimensionError(
                f"positions batch {p.shape[0]} != quaternions batch {q.shape[0]}"
            )
        if _normalize:
            q = quat_normalize(q)
        p = np.ascontiguousarray(p)
        q = np.ascontiguousarray(q)
        p.flags.writeable = False
        q.flags.writeable = False
        self.p = p
        self.q = q

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int = 1) -> "PoseBatch":
        p = np.zeros((n, 3))
        q = np.zeros((n, 4))
        q[:, 0] = 1.0
        return cls(p, q, _normalize=False)

    @classmethod
    def from_pq(cls, position=(0.0, 0.0, 0.0), quaternion=(1.0, 0.0, 0.0, 0.0)) -> "PoseBatch":
        """Single pose from a position 3-vector and scalar-first quaternion."""
        return cls(np.asarray(position, dtype=np.float64)[None, :],
                   np.asarray(quaternion, dtype=np.float64)[None, :])

    @classmethod
    def from_matrix(cls, matrices) -> "PoseBatch":
        """Build from (N, 4, 4) homogeneous transforms.

        The rotation block must be orthonormal within 1e-6.
        """
        m = np.asarray(matrices, dtype=np.float64)
        if m.ndim == 2:
            m = m[None]
        if m.ndim != 3 or m.shape[1:] != (4, 4):
            raise DimensionError(f"expected (N, 4, 4) matrices, got {m.shape}")
        r = m[:, :3, :3]
        err = np.abs(np.einsum("nij,nkj->nik", r, r) - np.eye(3)).max()
        if err > 1e-6:
            raise ValueError(f"rotation block not orthonormal within 1e-6 (error {err:.3e})")
        return cls(m[:, :3, 3], matrix_to_quat(r))

    # -- core algebra ------------------------------------------------------

    def __len__(self) -> int:
        return self.p.shape[0]

    def compose(self, other: "PoseBatch") -> "PoseBatch":
        """This pose applied after `other` in this frame: self then other locally.

        Matches the homogeneous matrix product ``self.to_matrix() @ other.to_matrix()``.
        Batch sizes must match or either side may be a singleton.
        """
        pa, pb = _broadcast_pair(self.p, other.p)
        qa, qb = _broadcast_pair(self.q, other.q)
        q = quat_mul(qa, qb)
        p = pa + quat_rotate(qa, pb)
        return PoseBatch(p, q)

    def __mul__(self, other: "PoseBatch") -> "PoseBatch":
        return self.compose(other)

    def inverse(self) -> "PoseBatch":
        qi = quat_conjugate(self.q)
        return PoseBatch(-quat_rotate(qi, self.p), qi)

    def transform_points(self, pts) -> np.ndarray:
        """Map points (N, K, 3) (or (K, 3) for a singleton batch) by R x + t."""
        pts = np.asarray(pts, dtype=np.float64)
        if pts.ndim == 2:
            pts = pts[None]
        if pts.ndim != 3 or pts.shape[2] != 3:
            raise DimensionError(f"points must have shape (N, K, 3), got {pts.shape}")
        if pts.shape[0] != len(self) and pts.shape[0] != 1 and len(self) != 1:
            raise DimensionError(
                f"points batch {pts.shape[0]} incompatible with pose batch {len(self)}"
            )
        r = quat_to_matrix(self.q)
        n = max(len(self), pts.shape[0])
        r = np.broadcast_to(r, (n, 3, 3))
        pts_b = np.broadcast_to(pts, (n,) + pts.shape[1:])
        t = np.broadcast_to(self.p, (n, 3))
        return np.einsum("nij,nkj->nki", r, pts_b) + t[:, None, :]

    def to_matrix(self) -> TransformMatrixBatch:
        m = np.tile(np.eye(4), (len(self), 1, 1))
        m[:, :3, :3] = quat_to_matrix(self.q)
        m[:, :3, 3] = self.p
        return TransformMatrixBatch(m, check=False)

    def rotation_matrix(self) -> np.ndarray:
        return quat_to_matrix(self.q)

    # -- utilities ---------------------------------------------------------

    def __getitem__(self, idx) -> "PoseBatch":
        p = np.atleast_2d(self.p[idx])
        q = np.atleast_2d(self.q[idx])
        return PoseBatch(p, q, _normalize=False)

    def allclose(self, other: "PoseBatch", atol: float = 1e-9) -> bool:
        """Equality up to tolerance; quaternion signs are already canonical."""
        return bool(
            np.allclose(self.p, other.p, atol=atol)
            and np.allclose(self.q, other.q, atol=atol)
        )

    def __repr__(self) -> str:
        return f"PoseBatch(n={len(self)})"


def stack_poses(poses) -> PoseBatch:
    """Concatenate a sequence of PoseBatch into one batch."""
    return PoseBatch(
        np.concatenate([x.p for x in poses], axis=0),
        np.concatenate([x.q for x in poses], axis=0),
        _normalize=False,
    )
