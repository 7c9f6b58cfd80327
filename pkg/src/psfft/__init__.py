"""Boundary-artifact-free 2D FFTs of lattice images.

The crisp way to get a clean diffractogram-style spectrum: decompose the
image into a periodic component (whose DFT is free of the cross-shaped
wrap-edge artifact) and a smooth component that soaks up the edge
mismatch.  Classical alternatives, window tapering and mirror
symmetrization, are included for comparison, along with render, radial
profile, and file I/O utilities plus a CLI (``psfft``).
"""

from .baselines import (
    FLATTOP_COEFFS,
    WINDOW_KINDS,
    make_window,
    symmetrize,
    symmetrized_dft,
    window1d,
    windowed_dft,
)
from .core import (
    as_image,
    as_spectrum,
    dft2,
    fftshift,
    forward_transform_count,
    idft2,
    reset_forward_transform_count,
)
from .decomposition import (
    Decomposition,
    boundary_image,
    decompose,
    ps_spectra,
    solve_smooth_spectrum,
)
from .io import load_image, read_sidecar, save_image, sidecar_path
from .render import (
    METRIC_FLOOR_DB,
    RadialProfile,
    SpectrumRender,
    axis_artifact_metric,
    crop_center,
    log_magnitude,
    radial_profile,
)
from .synthetic import LatticeSpec, generate, two_domain

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "FLATTOP_COEFFS",
    "LatticeSpec",
    "METRIC_FLOOR_DB",
    "RadialProfile",
    "SpectrumRender",
    "WINDOW_KINDS",
    "as_image",
    "as_spectrum",
    "axis_artifact_metric",
    "boundary_image",
    "crop_center",
    "decompose",
    "dft2",
    "fftshift",
    "forward_transform_count",
    "generate",
    "idft2",
    "load_image",
    "log_magnitude",
    "make_window",
    "ps_spectra",
    "radial_profile",
    "read_sidecar",
    "reset_forward_transform_count",
    "save_image",
    "sidecar_path",
    "solve_smooth_spectrum",
    "symmetrize",
    "symmetrized_dft",
    "two_domain",
    "window1d",
    "windowed_dft",
]
