"""Raster file I/O.

Raw float64 ("raw") plus a JSON sidecar is the lossless interchange
format; 8/16-bit PNG and 16-bit grayscale TIFF are convenience surfaces
with an explicit min-max mapping recorded in the file metadata.  The
sidecar lives next to the payload at ``<path>.json`` and holds
``{"rows", "cols", "byte_order": "little-endian", "pixel_size"?}``.
"""

import json
from pathlib import Path

import numpy as np
from PIL import Image
from PIL.PngImagePlugin import PngInfo

from .core import as_image

RAW_SUFFIXES = (".raw", ".f64")
FORMATS = ("png8", "png16", "tiff", "raw")

_GRAY_MODES = ("L", "I", "I;16")


def sidecar_path(path) -> Path:
    return Path(str(path) + ".json")


def read_sidecar(path) -> dict:
    """Parse the JSON sidecar belonging to a raw file."""
    sc = sidecar_path(path)
    if not sc.exists():
        raise ValueError(f"{path}: missing sidecar {sc}")
    with open(sc, encoding="utf-8") as fh:
        return json.load(fh)


def _infer_format(path: Path) -> str:
    suffix = path.suffix.lower()
    if suffix in RAW_SUFFIXES:
        return "raw"
    if suffix == ".png":
        return "png8"
    if suffix in (".tif", ".tiff"):
        return "tiff"
    raise ValueError(f"{path}: cannot infer format from suffix {suffix!r}")


def load_image(path) -> np.ndarray:
    """Load a grayscale raster file as a float64 image, without rescaling.

    Integer PNG/TIFF samples convert losslessly to double; color or
    multichannel input is rejected.  Raw files are read per their sidecar.
    """
    p = Path(path)
    if p.suffix.lower() in RAW_SUFFIXES:
        return _load_raw(p)
    with Image.open(p) as im:
        if im.mode not in _GRAY_MODES:
            raise ValueError(
                f"{p}: mode {im.mode!r} not supported; only single-channel "
                f"grayscale input is accepted"
            )
        arr = np.asarray(im)
    if arr.ndim != 2 or arr.shape[0] < 2 or arr.shape[1] < 2:
        raise ValueError(f"{p}: image must be at least 2x2, got shape {arr.shape}")
    return arr.astype(np.float64)


def _load_raw(p: Path) -> np.ndarray:
    meta = read_sidecar(p)
    try:
        rows, cols = int(meta["rows"]), int(meta["cols"])
    except KeyError as exc:
        raise ValueError(f"{p}: sidecar is missing {exc}") from exc
    if rows < 2 or cols < 2:
        raise ValueError(f"{p}: sidecar size {rows}x{cols} is below 2x2")
    byte_order = meta.get("byte_order", "little-endian")
    if byte_order != "little-endian":
        raise ValueError(f"{p}: unsupported byte_order {byte_order!r}")
    payload = p.read_bytes()
    if len(payload) != rows * cols * 8:
        raise ValueError(
            f"{p}: payload is {len(payload)} bytes but sidecar says "
            f"{rows}x{cols} float64 ({rows * cols * 8} bytes)"
        )
    return np.frombuffer(payload, dtype="<f8").reshape(rows, cols).astype(np.float64)


def save_image(image, path, fmt: str | None = None, pixel_size: float | None = None) -> None:
    """Write an image to disk.

    ``raw`` output is bit-exact float64 plus a sidecar.  Integer formats
    map min..max onto the full integer range (an all-equal image maps to
    0) and record the mapping as JSON in the file metadata.  When ``fmt``
    is None it is inferred from the suffix (.png -> png8, .tif -> tiff,
    .raw/.f64 -> raw); pass "png16" explicitly for 16-bit PNG.
    """
    a = as_image(image)
    p = Path(path)
    if fmt is None:
        fmt = _infer_format(p)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "raw":
        _save_raw(a, p, pixel_size)
    else:
        _save_integer(a, p, fmt)


def _save_raw(a: np.ndarray, p: Path, pixel_size: float | None) -> None:
    p.write_bytes(np.ascontiguousarray(a, dtype="<f8").tobytes())
    meta = {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "byte_order": "little-endian",
    }
    if pixel_size is not None:
        meta["pixel_size"] = float(pixel_size)
    sidecar_path(p).write_text(json.dumps(meta, sort_keys=True) + "\n", encoding="utf-8")


def _save_integer(a: np.ndarray, p: Path, fmt: str) -> None:
    lo, hi = float(a.min()), float(a.max())
    full = 255 if fmt == "png8" else 65535
    if hi > lo:
        scaled = np.rint((a - lo) / (hi - lo) * full)
    else:
        scaled = np.zeros_like(a)
    mapping = json.dumps({"min": lo, "max": hi}, sort_keys=True)
    if fmt == "png8":
        im = Image.fromarray(scaled.astype(np.uint8), mode="L")
        info = PngInfo()
        info.add_text("mapping", mapping)
        im.save(p, pnginfo=info)
    elif fmt == "png16":
        im = Image.fromarray(scaled.astype(np.uint16))
        info = PngInfo()
        info.add_text("mapping", mapping)
        im.save(p, pnginfo=info)
    else:
        im = Image.fromarray(scaled.astype(np.uint16))
        im.save(p, tiffinfo={270: mapping})
