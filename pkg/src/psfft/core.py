"""Core 2D transforms and array validation.

Every spectrum in this package uses the same convention: the forward
transform is

    F[kx, ky] = sum_{x, y} u[x, y] * exp(-2j*pi*(kx*x/M + ky*y/N))

with no normalization, and the inverse carries the 1/(M*N) factor.  The
first array axis is x (rows, length M), the second is y (columns, length
N).  Images are real float64 arrays with M, N >= 2 and finite samples;
spectra are complex128 arrays of the same shape.  The spectrum of a real
image is Hermitian-symmetric: F[kx, ky] == conj(F[-kx mod M, -ky mod N]).
"""

import numpy as np

# Forward-transform counter, kept for cost-contract instrumentation in the
# test suite.  Only dft2 increments it.
_forward_transforms = 0


def forward_transform_count() -> int:
    """Number of forward DFTs executed since the last reset."""
    return _forward_transforms


def reset_forward_transform_count() -> None:
    global _forward_transforms
    _forward_transforms = 0


def as_image(u) -> np.ndarray:
    """Validate and coerce ``u`` to a float64 image array.

    Requires a real 2D array with both dimensions >= 2 and all samples
    finite.  Integer input converts losslessly to double; no rescaling is
    applied.
    """
    a = np.asarray(u)
    if np.iscomplexobj(a):
        raise ValueError("image must be real-valued")
    a = a.astype(np.float64, copy=False)
    if a.ndim != 2:
        raise ValueError(f"image must be 2D, got shape {a.shape}")
    if a.shape[0] < 2 or a.shape[1] < 2:
        raise ValueError(
            f"image must be at least 2x2, got {a.shape[0]}x{a.shape[1]}"
        )
    bad = ~np.isfinite(a)
    if bad.any():
        x, y = np.argwhere(bad)[0]
        raise ValueError(f"non-finite sample {a[x, y]!r} at index ({x}, {y})")
    return a


def as_spectrum(f) -> np.ndarray:
    """Validate and coerce ``f`` to a complex128 spectrum array."""
    a = np.asarray(f, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"spectrum must be 2D, got shape {a.shape}")
    bad = ~np.isfinite(a)
    if bad.any():
        x, y = np.argwhere(bad)[0]
        raise ValueError(f"non-finite sample {a[x, y]!r} at index ({x}, {y})")
    return a


def dft2(image) -> np.ndarray:
    """Forward 2D DFT of a real image (unnormalized, see module docstring)."""
    global _forward_transforms
    u = as_image(image)
    _forward_transforms += 1
    return np.fft.fft2(u)


def idft2(spectrum, imag_tol: float = 1e-10) -> np.ndarray:
    """Inverse 2D DFT, returning the real image the spectrum came from.

    The tiny imaginary residue left by a Hermitian-symmetric spectrum is
    discarded.  A residue above ``imag_tol * max|F|`` means the spectrum
    did not originate from a real image and raises ValueError instead of
    silently dropping it.
    """
    F = as_spectrum(spectrum)
    out = np.fft.ifft2(F)
    scale = np.max(np.abs(F))
    residue = np.max(np.abs(out.imag))
    if residue > imag_tol * scale:
        raise ValueError(
            f"spectrum is not Hermitian-symmetric: inverse transform has "
            f"imaginary residue {residue:.3e} (tolerance {imag_tol:.1e} * "
            f"max|F| = {imag_tol * scale:.3e})"
        )
    return np.ascontiguousarray(out.real)


def fftshift(spectrum) -> np.ndarray:
    """Relocate the zero-frequency bin to (M//2, N//2) for centered display."""
    return np.fft.fftshift(np.asarray(spectrum))
