"""Classical edge-artifact treatments: window tapering and mirror symmetrization."""

import numpy as np

from .core import as_image, dft2

WINDOW_KINDS = ("hann", "flattop", "rectangular")

# Standard 5-term flat-top cosine series, symmetric form.  Unlike the other
# kinds this window is not confined to [0, 1]: its sidelobes dip to about
# -0.070 and the coefficient sum exceeds 1 by ~3e-9.
FLATTOP_COEFFS = (0.21557895, 0.41663158, 0.277263158, 0.083578947, 0.006947368)


def window1d(kind: str, length: int) -> np.ndarray:
    """One-dimensional window factor.

    ``hann`` is the symmetric raised cosine 0.5*(1 - cos(2*pi*n/(L-1)))
    with endpoints exactly zero; ``flattop`` the standard 5-term cosine
    series; ``rectangular`` all ones.
    """
    if kind not in WINDOW_KINDS:
        raise ValueError(f"unknown window kind {kind!r}; expected one of {WINDOW_KINDS}")
    if length < 2:
        raise ValueError(f"window length must be >= 2, got {length}")
    if kind == "rectangular":
        return np.ones(length)
    n = np.arange(length)
    if kind == "hann":
        return 0.5 * (1.0 - np.cos(2.0 * np.pi * n / (length - 1)))
    w = np.zeros(length)
    for k, a in enumerate(FLATTOP_COEFFS):
        w += (-1.0) ** k * a * np.cos(2.0 * np.pi * k * n / (length - 1))
    return w


def make_window(kind: str, rows: int, cols: int) -> np.ndarray:
    """Separable 2D window: outer product of the 1D factors for each axis."""
    return np.outer(window1d(kind, rows), window1d(kind, cols))


def windowed_dft(u, kind: str) -> np.ndarray:
    """DFT of the image after pointwise tapering by the chosen window.

    With the rectangular window this is identical to a plain dft2.  The
    taper suppresses the wrap-edge discontinuity at the cost of broadening
    every spectral peak and down-weighting content away from the image
    center.
    """
    a = as_image(u)
    w = make_window(kind, a.shape[0], a.shape[1])
    return dft2(w * a)


def symmetrize(u) -> np.ndarray:
    """Mirror the image about both axes into a (2M, 2N) tile.

    The output wraps continuously (its boundary image is exactly zero),
    but the added reflections introduce mirror peaks that do not exist in
    the source image's spectrum.
    """
    a = as_image(u)
    return np.block([[a, np.fliplr(a)], [np.flipud(a), np.flipud(np.fliplr(a))]])


def symmetrized_dft(u) -> np.ndarray:
    """DFT of the mirrored image; output size is (2M, 2N)."""
    return dft2(symmetrize(u))
