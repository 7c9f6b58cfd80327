"""Slow reference implementations used to validate the fast paths in tests.

Not part of the public API.  Everything here is deliberately naive and
size-guarded: a dense linear-algebra Poisson solver and a definitional
DFT, each independent of the spectral code they cross-check.
"""

import numpy as np

from .core import as_image
from .decomposition import _check_boundary_image

MAX_DENSE_CELLS = 4096
MAX_NAIVE_CELLS = 1024


def laplacian_matrix(rows: int, cols: int) -> np.ndarray:
    """Dense periodic 5-point Laplacian on the row-major flattened grid.

    Symmetric, with zero row sums (the constants span its nullspace).
    Wrapped neighbors that coincide, as on a 2-wide axis, accumulate.
    """
    n = rows * cols
    L = np.zeros((n, n))
    for x in range(rows):
        for y in range(cols):
            i = x * cols + y
            L[i, i] -= 4.0
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                j = ((x + dx) % rows) * cols + (y + dy) % cols
                L[i, j] += 1.0
    return L


def dense_poisson_solve(b) -> np.ndarray:
    """Solve L s = b with the mean of s pinned to zero.

    The Laplacian is singular (constants in the nullspace), so the system
    is augmented with the constraint sum(s) = 0 and solved by least
    squares; with a zero-sum right-hand side the solution is unique.
    """
    a = _check_boundary_image(b)
    rows, cols = a.shape
    if rows * cols > MAX_DENSE_CELLS:
        raise ValueError(
            f"dense solve limited to {MAX_DENSE_CELLS} cells, got {rows * cols}"
        )
    L = laplacian_matrix(rows, cols)
    A = np.vstack([L, np.ones((1, rows * cols))])
    rhs = np.concatenate([a.ravel(), [0.0]])
    s, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    return s.reshape(rows, cols)


def naive_dft2(u) -> np.ndarray:
    """Definitional O((MN)^2) DFT, one output bin at a time."""
    a = as_image(u)
    rows, cols = a.shape
    if rows * cols > MAX_NAIVE_CELLS:
        raise ValueError(
            f"naive transform limited to {MAX_NAIVE_CELLS} cells, got {rows * cols}"
        )
    x = np.arange(rows)[:, None]
    y = np.arange(cols)[None, :]
    out = np.empty((rows, cols), dtype=np.complex128)
    for kx in range(rows):
        for ky in range(cols):
            phase = np.exp(-2j * np.pi * (kx * x / rows + ky * y / cols))
            out[kx, ky] = np.sum(a * phase)
    return out
