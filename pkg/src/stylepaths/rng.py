"""Seeded random streams shared by every stochastic operation in the package.

All randomness is drawn from Philox4x64 counter-based bit generators keyed by
``numpy.random.SeedSequence([seed, stream, *indices])``, where ``stream`` is one
of the constants below. Standard normals are produced by the Box-Muller
transform applied to 53-bit uniforms on the open interval (0, 1). Both choices
are fixed here so that a (seed, stream, index) triple identifies the same
substream everywhere: per-path simulation noise, per-row corruption noise,
per-layer weight initialization, and per-row style-transfer starts are all
derived this way and are reproducible across runs of the same build.
"""

from __future__ import annotations

import numpy as np

# Stream identifiers. Values are arbitrary but frozen: changing them changes
# every derived random stream.
STREAM_SIM_RETURN = 1
STREAM_SIM_VOL = 2
STREAM_CORRUPT = 3
STREAM_WEIGHT_INIT = 4
STREAM_EPOCH = 5
STREAM_SHUFFLE = 6
STREAM_PICK = 7
STREAM_TRANSFER_INIT = 8
STREAM_TEST = 99

_INV_2_53 = float(2.0**-53)


def substream(seed: int, stream: int, *indices: int) -> np.random.Generator:
    """Generator for the (seed, stream, *indices) substream."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(stream), *[int(i) for i in indices]])
    return np.random.Generator(np.random.Philox(seed=ss))


def uniforms(gen: np.random.Generator, size) -> np.ndarray:
    """Uniform draws strictly inside (0, 1): (k + 0.5) / 2^53 for k < 2^53."""
    k = gen.integers(0, 1 << 53, size=size, dtype=np.uint64)
    return (k.astype(np.float64) + 0.5) * _INV_2_53


def normals(gen: np.random.Generator, size) -> np.ndarray:
    """Standard normal draws via Box-Muller on open-interval uniforms.

    Pairs are consumed in order; for odd counts the trailing draw of the last
    pair is discarded, so the stream position depends only on ceil(size/2).
    """
    shape = (size,) if np.isscalar(size) else tuple(size)
    count = int(np.prod(shape)) if shape else 1
    pairs = (count + 1) // 2
    u1 = uniforms(gen, pairs)
    u2 = uniforms(gen, pairs)
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    z = np.empty(2 * pairs)
    z[0::2] = r * np.cos(theta)
    z[1::2] = r * np.sin(theta)
    return z[:count].reshape(shape)
