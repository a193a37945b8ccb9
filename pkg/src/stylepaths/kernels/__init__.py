"""Hot numerical kernels: a compiled core with a NumPy/Python fallback.

Three primitives cover every convolution in the package (the transposed
convolution is the adjoint map, so its forward pass reuses ``conv_bwd_x`` and
its weight gradient reuses ``conv_bwd_w`` with the roles of the arguments
swapped), plus the dynamic-programming warping distance used as the
path-matching yardstick.

The compiled extension is preferred automatically at import time; ``use()``
switches backends explicitly, which the parity tests and the benchmark rely
on. Both backends satisfy the same contracts and agree to ~1e-12 (summation
order differs). Within one selected backend, results are bit-reproducible.

Array conventions: float64 throughout; activations are (batch, channels,
length); conv weights are (out_channels, in_channels, kernel).
"""

from __future__ import annotations

import numpy as np

from . import _fallback

try:
    from . import _core  # compiled extension, built by setup.py

    _BACKENDS = {"compiled": _core, "fallback": _fallback}
    _active_name = "compiled"
except ImportError:  # pragma: no cover - exercised only in pure-Python installs
    _BACKENDS = {"fallback": _fallback}
    _active_name = "fallback"

_active = _BACKENDS[_active_name]


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def active_backend() -> str:
    return _active_name


def use(name: str) -> None:
    """Select a backend by name ('compiled' or 'fallback')."""
    global _active, _active_name
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active_name = name
    _active = _BACKENDS[name]


def _as_c3(a, name) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    if a.ndim != 3:
        raise ValueError(f"{name} must be 3-dimensional, got shape {a.shape}")
    return a


def conv_fwd(x: np.ndarray, w: np.ndarray, stride: int) -> np.ndarray:
    """Valid (no padding) strided correlation: y[m,o,j] = sum_ik x[m,i,j*S+k] w[o,i,k]."""
    x = _as_c3(x, "x")
    w = _as_c3(w, "w")
    m, ci, n = x.shape
    co, ci_w, k = w.shape
    if ci != ci_w:
        raise ValueError(f"channel mismatch: input has {ci}, weights expect {ci_w}")
    if n < k:
        raise ValueError(f"input length {n} shorter than kernel {k}")
    if (n - k) % stride != 0:
        raise ValueError(f"length {n} with kernel {k} not divisible by stride {stride}")
    return _active.conv_fwd(x, w, int(stride))


def conv_bwd_x(grad_y: np.ndarray, w: np.ndarray, stride: int, n: int) -> np.ndarray:
    """Adjoint of conv_fwd in its input: scatters grad_y back to length n."""
    grad_y = _as_c3(grad_y, "grad_y")
    w = _as_c3(w, "w")
    m, co, length = grad_y.shape
    co_w, ci, k = w.shape
    if co != co_w:
        raise ValueError(f"channel mismatch: grad has {co}, weights produce {co_w}")
    if (int(n) - k) // stride + 1 != length:
        raise ValueError(f"output length {length} inconsistent with n={n}, K={k}, S={stride}")
    return _active.conv_bwd_x(grad_y, w, int(stride), int(n))


def conv_bwd_w(grad_y: np.ndarray, x: np.ndarray, stride: int, kernel: int) -> np.ndarray:
    """Adjoint of conv_fwd in its weights: gw[o,i,k] = sum_mj grad_y[m,o,j] x[m,i,j*S+k]."""
    grad_y = _as_c3(grad_y, "grad_y")
    x = _as_c3(x, "x")
    if grad_y.shape[0] != x.shape[0]:
        raise ValueError("batch size mismatch between grad_y and x")
    m, ci, n = x.shape
    length = grad_y.shape[2]
    if (n - int(kernel)) // stride + 1 != length:
        raise ValueError(f"output length {length} inconsistent with n={n}, K={kernel}, S={stride}")
    return _active.conv_bwd_w(grad_y, x, int(stride), int(kernel))


def dtw(a: np.ndarray, b: np.ndarray) -> float:
    """Full-window warping distance with absolute-difference local cost."""
    a = np.ascontiguousarray(a, dtype=np.float64).ravel()
    b = np.ascontiguousarray(b, dtype=np.float64).ravel()
    if a.size == 0 or b.size == 0:
        raise ValueError("dtw requires non-empty sequences")
    return float(_active.dtw(a, b))
