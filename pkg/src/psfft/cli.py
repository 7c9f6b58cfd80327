"""Command-line interface.

Composes the library into file-to-file workflows: spectrum renders,
decomposition dumps, radial profiles, artifact metrics, method
comparisons, and synthetic fixture generation.  Exit codes: 0 success,
1 processing error, 2 usage error.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .baselines import symmetrized_dft, windowed_dft
from .core import dft2
from .decomposition import decompose, ps_spectra
from .io import load_image, read_sidecar, save_image
from .render import axis_artifact_metric, crop_center, log_magnitude, radial_profile
from .synthetic import LatticeSpec, generate

METHODS = ("raw", "ps", "hann", "flattop", "symmetrize")

# full double round-trip precision, so identical runs emit identical text
_FMT = "{:.17g}"


def _fnum(x: float) -> str:
    return _FMT.format(float(x))


def spectrum_for(method: str, image: np.ndarray) -> np.ndarray:
    if method == "raw":
        return dft2(image)
    if method == "ps":
        p_hat, _ = ps_spectra(image)
        return p_hat
    if method in ("hann", "flattop"):
        return windowed_dft(image, method)
    if method == "symmetrize":
        return symmetrized_dft(image)
    raise ValueError(f"unknown method {method!r}")


def _load(args) -> np.ndarray:
    image = load_image(args.input)
    if getattr(args, "pre_subtract_mean", False):
        image = image - image.mean()
    return image


def _pixel_size(path: str) -> float | None:
    p = Path(path)
    if p.suffix.lower() not in (".raw", ".f64"):
        return None
    try:
        value = read_sidecar(p).get("pixel_size")
    except (OSError, ValueError):
        return None
    return float(value) if value is not None else None


def cmd_fft(args) -> int:
    spec = spectrum_for(args.method, _load(args))
    render = log_magnitude(spec, eps_rel=args.eps)
    if args.crop is not None:
        render = crop_center(render, args.crop)
    save_image(render.values, args.output)
    return 0


def cmd_decompose(args) -> int:
    result = decompose(load_image(args.input))
    pixel_size = _pixel_size(args.input)
    save_image(result.periodic, args.out_p, fmt="raw", pixel_size=pixel_size)
    save_image(result.smooth, args.out_s, fmt="raw", pixel_size=pixel_size)
    return 0


def cmd_radial(args) -> int:
    spec = spectrum_for(args.method, load_image(args.input))
    profile = radial_profile(spec, args.bins, pixel_size=_pixel_size(args.input))
    lines = ["radius,mean_intensity,count"]
    for center, mean, count in zip(
        profile.centers, profile.mean_intensity, profile.counts
    ):
        lines.append(f"{_fnum(center)},{_fnum(mean)},{int(count)}")
    Path(args.output).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return 0


def cmd_metric(args) -> int:
    spec = spectrum_for(args.method, load_image(args.input))
    print(_fnum(axis_artifact_metric(spec, guard=args.guard)))
    return 0


def cmd_compare(args) -> int:
    image = load_image(args.input)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = ["method,metric_db"]
    for method in METHODS:
        spec = spectrum_for(method, image)
        save_image(log_magnitude(spec).values, outdir / f"spectrum_{method}.png")
        rows.append(f"{method},{_fnum(axis_artifact_metric(spec))}")
    (outdir / "metrics.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    result = decompose(image)
    pixel_size = _pixel_size(args.input)
    save_image(result.periodic, outdir / "periodic.raw", pixel_size=pixel_size)
    save_image(result.smooth, outdir / "smooth.raw", pixel_size=pixel_size)
    return 0


def cmd_generate(args) -> int:
    with open(args.spec, encoding="utf-8") as fh:
        spec = LatticeSpec.from_dict(json.load(fh))
    save_image(generate(spec), args.output, fmt="raw")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psfft",
        description="Boundary-artifact-free 2D FFTs of lattice images "
        "via periodic-plus-smooth decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_method(p):
        p.add_argument(
            "--method",
            choices=METHODS,
            required=True,
            help="spectrum to compute: plain DFT, periodic component, "
            "windowed DFT, or mirror-symmetrized DFT",
        )

    p = sub.add_parser("fft", help="write the log-magnitude render of a spectrum")
    p.add_argument("input", help="input image (png/tif/raw)")
    add_method(p)
    p.add_argument(
        "--pre-subtract-mean",
        action="store_true",
        help="subtract the image mean before transforming",
    )
    p.add_argument(
        "--crop", type=float, metavar="FRAC", help="keep the central FRAC of the render"
    )
    p.add_argument(
        "--eps",
        type=float,
        default=1e-6,
        metavar="EPSREL",
        help="relative floor for the log display (default 1e-6)",
    )
    p.add_argument("-o", dest="output", required=True, help="output render (png)")
    p.set_defaults(func=cmd_fft)

    p = sub.add_parser(
        "decompose", help="write periodic and smooth components as raw float64"
    )
    p.add_argument("input")
    p.add_argument("-o-p", dest="out_p", required=True, help="periodic component (.raw)")
    p.add_argument("-o-s", dest="out_s", required=True, help="smooth component (.raw)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("radial", help="write a radial intensity profile as CSV")
    p.add_argument("input")
    add_method(p)
    p.add_argument("--bins", type=int, required=True, metavar="K", help="number of radial bins")
    p.add_argument("-o", dest="output", required=True, help="output CSV")
    p.set_defaults(func=cmd_radial)

    p = sub.add_parser("metric", help="print the axis-artifact metric in dB")
    p.add_argument("input")
    add_method(p)
    p.add_argument(
        "--guard",
        type=int,
        default=1,
        metavar="G",
        help="bins around DC excluded from the axis lines (default 1)",
    )
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser(
        "compare", help="emit renders for all methods plus a metrics summary CSV"
    )
    p.add_argument("input")
    p.add_argument("-o", dest="output", required=True, help="output directory")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("generate", help="render a synthetic lattice spec to raw float64")
    p.add_argument("spec", help="lattice spec (JSON)")
    p.add_argument("-o", dest="output", required=True, help="output image (.raw)")
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except Exception as exc:  # CLI boundary: report and signal failure
        print(f"psfft: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
