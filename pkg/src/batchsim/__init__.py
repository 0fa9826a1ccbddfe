"""batchsim: batched heterogeneous rigid-body simulation for robot learning.

The engine simulates N parallel environments that may each contain different
articulations and objects.  All state lives in padded batch buffers exposed
through object-oriented views, with batched controllers, a software
rasterizer, an evaluation-metric protocol, trajectory record/replay, a
throughput benchmark harness, and a PPO baseline on top.
"""

from .pose import PoseBatch, TransformMatrixBatch

__version__ = "0.1.0"

__all__ = ["PoseBatch", "TransformMatrixBatch", "__version__"]
