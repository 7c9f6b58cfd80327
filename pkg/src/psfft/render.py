"""Spectrum display utilities: log renders, center crops, radial profiles,
and the on-axis artifact-energy metric used for before/after comparisons."""

import math
from dataclasses import dataclass

import numpy as np

from .core import as_spectrum

# Reported instead of -inf when the axis power is exactly zero.
METRIC_FLOOR_DB = -400.0

INTENSITY_KINDS = ("power", "magnitude")


@dataclass(frozen=True, eq=False)
class SpectrumRender:
    """Center-shifted, log-scaled view of a spectrum, normalized to [0, 1]."""

    values: np.ndarray
    eps_rel: float
    shifted: bool = True
    crop_frac: float | None = None

    @property
    def rows(self) -> int:
        return self.values.shape[0]

    @property
    def cols(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True, eq=False)
class RadialProfile:
    """Azimuthally binned spectral intensity vs frequency radius."""

    bin_edges: np.ndarray
    mean_intensity: np.ndarray
    counts: np.ndarray
    intensity: str = "power"

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])


def log_magnitude(spectrum, eps_rel: float = 1e-6) -> SpectrumRender:
    """Log-magnitude display image of a spectrum.

    Values are log10(|F| + eps_rel * max|F|), shifted so the zero-frequency
    bin sits at the array center, then min-max normalized to [0, 1].  The
    mapping is monotone in |F|.  An all-zero (or all-equal-magnitude)
    spectrum renders as all zeros.
    """
    if eps_rel <= 0.0:
        raise ValueError(f"eps_rel must be positive, got {eps_rel}")
    F = as_spectrum(spectrum)
    mag = np.abs(F)
    peak = mag.max()
    if peak == 0.0:
        return SpectrumRender(np.zeros(F.shape), eps_rel)
    v = np.fft.fftshift(np.log10(mag + eps_rel * peak))
    lo, hi = v.min(), v.max()
    if hi == lo:
        return SpectrumRender(np.zeros(F.shape), eps_rel)
    return SpectrumRender((v - lo) / (hi - lo), eps_rel)


def crop_center(render: SpectrumRender, frac: float) -> SpectrumRender:
    """Keep the central ``frac*rows x frac*cols`` region of a render.

    Fractional sizes round up, so the shifted DC pixel at (rows//2,
    cols//2) stays at the center index of the cropped array.
    """
    if not 0.0 < frac <= 1.0:
        raise ValueError(f"crop fraction must be in (0, 1], got {frac}")
    m, n = render.values.shape
    # small epsilon so exact products (0.5*64) are not inflated by fp dust
    out_m = math.ceil(frac * m - 1e-12)
    out_n = math.ceil(frac * n - 1e-12)
    if out_m < 1 or out_n < 1:
        raise ValueError(f"crop fraction {frac} leaves no pixels on {m}x{n}")
    r0 = m // 2 - out_m // 2
    c0 = n // 2 - out_n // 2
    vals = render.values[r0 : r0 + out_m, c0 : c0 + out_n].copy()
    return SpectrumRender(vals, render.eps_rel, render.shifted, frac)


def radial_profile(
    spectrum,
    nbins: int,
    intensity: str = "power",
    pixel_size: float | None = None,
) -> RadialProfile:
    """Azimuthal average of spectral intensity vs frequency radius.

    Every bin except the zero-frequency one is assigned to a radial bin by
    its Euclidean frequency radius sqrt(fx^2 + fy^2) in cycles/pixel (or
    cycles per unit length when ``pixel_size`` is given), using the aliased
    frequencies fx in [-1/2, 1/2).  The profile holds the per-bin mean of
    |F|^2 (``power``, the default) or |F| (``magnitude``); bins span
    [0, max radius] uniformly.
    """
    if nbins < 1:
        raise ValueError(f"nbins must be >= 1, got {nbins}")
    if intensity not in INTENSITY_KINDS:
        raise ValueError(
            f"unknown intensity {intensity!r}; expected one of {INTENSITY_KINDS}"
        )
    F = as_spectrum(spectrum)
    rows, cols = F.shape
    fx = np.fft.fftfreq(rows)[:, None]
    fy = np.fft.fftfreq(cols)[None, :]
    r = np.hypot(fx, fy)
    if pixel_size is not None:
        if pixel_size <= 0.0:
            raise ValueError(f"pixel_size must be positive, got {pixel_size}")
        r = r / pixel_size
    vals = np.abs(F)
    if intensity == "power":
        vals = vals * vals
    edges = np.linspace(0.0, r.max(), nbins + 1)

    r_flat = r.ravel()[1:]  # drop the DC bin (flat index 0)
    v_flat = vals.ravel()[1:]
    idx = np.digitize(r_flat, edges) - 1
    np.clip(idx, 0, nbins - 1, out=idx)
    counts = np.bincount(idx, minlength=nbins)
    sums = np.bincount(idx, weights=v_flat, minlength=nbins)
    mean = np.divide(
        sums, counts, out=np.zeros(nbins, dtype=np.float64), where=counts > 0
    )
    return RadialProfile(edges, mean, counts, intensity)


def axis_artifact_metric(spectrum, guard: int = 1) -> float:
    """Share (dB) of off-DC spectral power that sits on the frequency axes.

    10*log10 of the power in bins on the kx = 0 and ky = 0 lines, excluding
    the DC bin and every bin within ``guard`` of it, divided by the total
    off-DC power.  Lower is better; a spectrum with no axis power at all
    reports METRIC_FLOOR_DB.  The value is invariant under rescaling of the
    spectrum.  Raises when there is no off-DC power to normalize by.
    """
    if guard < 0:
        raise ValueError(f"guard must be >= 0, got {guard}")
    F = as_spectrum(spectrum)
    rows, cols = F.shape
    power = np.abs(F) ** 2
    total = power.sum() - power[0, 0]
    if total == 0.0:
        raise ValueError("spectrum has no off-DC power; metric undefined")
    dist_x = np.minimum(np.arange(rows), rows - np.arange(rows))
    dist_y = np.minimum(np.arange(cols), cols - np.arange(cols))
    axis = power[0, dist_y > guard].sum() + power[dist_x > guard, 0].sum()
    if axis == 0.0:
        return METRIC_FLOOR_DB
    return 10.0 * math.log10(axis / total)
