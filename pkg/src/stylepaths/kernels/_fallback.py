"""NumPy/pure-Python kernel implementations.

The convolutions are lowered to one GEMM over an im2col view; the warping
distance is the textbook dynamic program in plain Python. Signatures mirror
the compiled core exactly; inputs arrive validated and C-contiguous.
"""

from __future__ import annotations

import numpy as np


def _windows(x: np.ndarray, kernel: int, stride: int) -> np.ndarray:
    # (M, Ci, L, K) strided view over every kernel placement
    return np.lib.stride_tricks.sliding_window_view(x, kernel, axis=2)[:, :, ::stride, :]


def conv_fwd(x: np.ndarray, w: np.ndarray, stride: int) -> np.ndarray:
    m, ci, n = x.shape
    co, _, k = w.shape
    length = (n - k) // stride + 1
    cols = _windows(x, k, stride).transpose(0, 2, 1, 3).reshape(m * length, ci * k)
    y = cols @ w.reshape(co, ci * k).T
    return np.ascontiguousarray(y.reshape(m, length, co).transpose(0, 2, 1))


def conv_bwd_x(grad_y: np.ndarray, w: np.ndarray, stride: int, n: int) -> np.ndarray:
    m, co, length = grad_y.shape
    _, ci, k = w.shape
    cols = grad_y.transpose(0, 2, 1).reshape(m * length, co) @ w.reshape(co, ci * k)
    per_tap = cols.reshape(m, length, ci, k).transpose(0, 2, 1, 3)  # (M, Ci, L, K)
    grad_x = np.zeros((m, ci, n))
    for tap in range(k):
        # placements of tap `tap` never collide with each other for one tap
        grad_x[:, :, tap : tap + length * stride : stride] += per_tap[:, :, :, tap]
    return grad_x


def conv_bwd_w(grad_y: np.ndarray, x: np.ndarray, stride: int, kernel: int) -> np.ndarray:
    m, ci, _ = x.shape
    co, length = grad_y.shape[1], grad_y.shape[2]
    cols = _windows(x, kernel, stride).transpose(0, 2, 1, 3).reshape(m * length, ci * kernel)
    gw = grad_y.transpose(1, 0, 2).reshape(co, m * length) @ cols
    return gw.reshape(co, ci, kernel)


def dtw(a: np.ndarray, b: np.ndarray) -> float:
    sa = [float(v) for v in a]
    sb = [float(v) for v in b]
    nb = len(sb)
    inf = float("inf")
    prev = [inf] * nb
    for i, ai in enumerate(sa):
        cur = [0.0] * nb
        for j, bj in enumerate(sb):
            if i == 0 and j == 0:
                best = 0.0
            elif i == 0:
                best = cur[j - 1]
            elif j == 0:
                best = prev[j]
            else:
                best = min(prev[j], cur[j - 1], prev[j - 1])
            cur[j] = abs(ai - bj) + best
        prev = cur
    return prev[nb - 1]
