"""Reproducible draws of Schwarz parameters.

Samples are produced in fixed-size blocks.  Block ``b`` of a run with seed
``s`` comes from ``PCG64(SeedSequence(s, spawn_key=(b,)))`` and consumes one
``(BLOCK_SIZE, 11)`` array of uniforms, so sample ``i`` depends only on
``(s, i)``.  That is what makes partitioned runs, prefix runs and serial runs
agree exactly.  PCG64 and SeedSequence are fixed, documented algorithms in
numpy and give the same stream on every platform.

Column layout of a block, one row per sample::

    0, 1    c1      (radius, angle); real mode uses column 0 as c1 itself
    2, 3    x
    4, 5    xi
    6, 7    y
    8, 9    eta
    10      boundary switch (used only with ``boundary_bias``)

Disk points use ``r = sqrt(u)``, ``angle = 2 pi v``, which is uniform on the
disk.
"""

from __future__ import annotations

import numpy as np

from .coeffs import SchwarzTuple

BLOCK_SIZE = 8192
N_COLUMNS = 11


def block_generator(seed: int, block: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(block),))
    return np.random.Generator(np.random.PCG64(seq))


def block_uniforms(seed: int, block: int) -> np.ndarray:
    return block_generator(seed, block).random((BLOCK_SIZE, N_COLUMNS))


def _disk(r_u, a_u):
    return np.sqrt(r_u) * np.exp(2j * np.pi * a_u)


def tuples_from_uniforms(u: np.ndarray, complex_c1: bool = False,
                         boundary_bias: bool = False) -> SchwarzTuple:
    """Map rows of uniforms to a batch of admissible tuples."""
    if complex_c1:
        c1 = _disk(u[:, 0], u[:, 1])
    else:
        c1 = u[:, 0].astype(complex)
    x = _disk(u[:, 2], u[:, 3])
    xi = _disk(u[:, 4], u[:, 5])
    y = _disk(u[:, 6], u[:, 7])
    eta = _disk(u[:, 8], u[:, 9])
    if boundary_bias:
        edge = u[:, 10] < 0.5
        x = np.where(edge, np.exp(2j * np.pi * u[:, 3]), x)
        y = np.where(edge, np.exp(2j * np.pi * u[:, 7]), y)
    return SchwarzTuple(c1, x, xi, y, eta)


def sample_range(seed: int, start: int, stop: int):
    """Yield ``(offset, uniforms)`` covering global sample indices ``[start, stop)``."""
    if stop <= start:
        return
    for b in range(start // BLOCK_SIZE, (stop - 1) // BLOCK_SIZE + 1):
        lo = max(start, b * BLOCK_SIZE)
        hi = min(stop, (b + 1) * BLOCK_SIZE)
        u = block_uniforms(seed, b)
        yield lo, u[lo - b * BLOCK_SIZE: hi - b * BLOCK_SIZE]
