"""Seeded synthetic lattice fixtures: cosine gratings plus ramps and noise.

Desk-scale stand-ins for atomic-resolution micrographs.  Integer-frequency
components (fx*M and fy*N integral) produce exact single-bin spectral
peaks, which makes them convenient exactness probes for the whole
transform pipeline.
"""

from dataclasses import dataclass

import numpy as np

NYQUIST = 0.5


@dataclass(frozen=True)
class LatticeSpec:
    """Deterministic recipe for a synthetic lattice image.

    ``components`` holds (fx, fy, amplitude, phase) tuples with frequencies
    in cycles/pixel; each contributes amplitude*cos(2*pi*(fx*x + fy*y) +
    phase).  ``ramp`` adds gx*x + gy*y, ``noise_sigma`` seeded Gaussian
    noise.  Identical specs generate identical images.
    """

    rows: int
    cols: int
    components: tuple[tuple[float, float, float, float], ...] = ()
    ramp: tuple[float, float] = (0.0, 0.0)
    noise_sigma: float = 0.0
    seed: int = 0

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "components": [list(c) for c in self.components],
            "ramp": list(self.ramp),
            "noise_sigma": self.noise_sigma,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LatticeSpec":
        return cls(
            rows=int(d["rows"]),
            cols=int(d["cols"]),
            components=tuple(tuple(float(v) for v in c) for c in d.get("components", ())),
            ramp=tuple(float(v) for v in d.get("ramp", (0.0, 0.0))),
            noise_sigma=float(d.get("noise_sigma", 0.0)),
            seed=int(d.get("seed", 0)),
        )


def _validate(spec: LatticeSpec) -> None:
    if spec.rows < 2 or spec.cols < 2:
        raise ValueError(f"lattice size must be at least 2x2, got {spec.rows}x{spec.cols}")
    for fx, fy, _amp, _phase in spec.components:
        for f in (fx, fy):
            if not 0.0 <= f <= NYQUIST:
                raise ValueError(
                    f"component frequency {f} outside [0, {NYQUIST}] (Nyquist)"
                )
    if len(spec.ramp) != 2:
        raise ValueError("ramp must be a (gx, gy) pair")
    if spec.noise_sigma < 0.0:
        raise ValueError(f"noise_sigma must be >= 0, got {spec.noise_sigma}")


def generate(spec: LatticeSpec) -> np.ndarray:
    """Render the spec to a float64 image: cosines + ramp + seeded noise."""
    _validate(spec)
    x = np.arange(spec.rows)[:, None]
    y = np.arange(spec.cols)[None, :]
    u = np.zeros((spec.rows, spec.cols))
    for fx, fy, amp, phase in spec.components:
        u += amp * np.cos(2.0 * np.pi * (fx * x + fy * y) + phase)
    gx, gy = spec.ramp
    u += gx * x + gy * y
    if spec.noise_sigma > 0.0:
        rng = np.random.default_rng(spec.seed)
        u += spec.noise_sigma * rng.standard_normal((spec.rows, spec.cols))
    return u


def two_domain(left: LatticeSpec, right: LatticeSpec, split_frac: float = 0.5) -> np.ndarray:
    """Stitch two lattices side by side along a sharp column boundary.

    Columns before ``split_frac * cols`` come from ``left``, the rest from
    ``right``.  A small split fraction confines the left lattice to a
    stripe at the image edge, the geometry where window tapering loses
    that domain's peaks.
    """
    if (left.rows, left.cols) != (right.rows, right.cols):
        raise ValueError("both domains must share the same size")
    if not 0.0 < split_frac < 1.0:
        raise ValueError(f"split_frac must be in (0, 1), got {split_frac}")
    cut = int(round(split_frac * left.cols))
    cut = min(max(cut, 1), left.cols - 1)
    out = generate(right)
    out[:, :cut] = generate(left)[:, :cut]
    return out
