import json

import numpy as np
import pytest
from PIL import Image

from psfft import load_image, log_magnitude, read_sidecar, save_image, sidecar_path

from conftest import random_image


class TestRawRoundTrip:
    def test_bit_identical(self, rng, tmp_path):
        u = random_image(rng, 9, 13, scale=1e6)
        path = tmp_path / "img.raw"
        save_image(u, path)
        back = load_image(path)
        assert np.array_equal(back, u)
        assert back.dtype == np.float64

    def test_sidecar_contents(self, rng, tmp_path):
        path = tmp_path / "img.raw"
        save_image(random_image(rng, 4, 6), path, pixel_size=0.135)
        meta = read_sidecar(path)
        assert meta == {
            "byte_order": "little-endian",
            "cols": 6,
            "pixel_size": 0.135,
            "rows": 4,
        }

    def test_zero_image(self, tmp_path):
        path = tmp_path / "zeros.raw"
        save_image(np.zeros((4, 4)), path)
        assert np.array_equal(load_image(path), np.zeros((4, 4)))

    def test_save_is_deterministic(self, rng, tmp_path):
        u = random_image(rng, 5, 5)
        p1, p2 = tmp_path / "a.raw", tmp_path / "b.raw"
        save_image(u, p1)
        save_image(u, p2)
        assert p1.read_bytes() == p2.read_bytes()
        assert sidecar_path(p1).read_text() == sidecar_path(p2).read_text()


class TestRawErrors:
    def test_payload_sidecar_mismatch(self, rng, tmp_path):
        path = tmp_path / "img.raw"
        save_image(random_image(rng, 4, 4), path)
        path.write_bytes(path.read_bytes()[:-8])  # drop one sample
        with pytest.raises(ValueError, match="payload"):
            load_image(path)

    def test_missing_sidecar(self, tmp_path):
        path = tmp_path / "naked.raw"
        path.write_bytes(b"\x00" * 32)
        with pytest.raises(ValueError, match="sidecar"):
            load_image(path)

    def test_degenerate_size_rejected(self, tmp_path):
        path = tmp_path / "thin.raw"
        path.write_bytes(b"\x00" * 8 * 5)
        sidecar_path(path).write_text(json.dumps({"rows": 1, "cols": 5}))
        with pytest.raises(ValueError):
            load_image(path)

    def test_unsupported_byte_order(self, tmp_path):
        path = tmp_path / "be.raw"
        path.write_bytes(b"\x00" * 32)
        sidecar_path(path).write_text(
            json.dumps({"rows": 2, "cols": 2, "byte_order": "big-endian"})
        )
        with pytest.raises(ValueError, match="byte_order"):
            load_image(path)


class TestPngAndTiff:
    def test_png16_loads_losslessly(self, tmp_path):
        path = tmp_path / "full.png"
        Image.fromarray(np.array([[0, 65535], [123, 456]], dtype=np.uint16)).save(path)
        u = load_image(path)
        assert np.array_equal(u, [[0.0, 65535.0], [123.0, 456.0]])

    def test_png8_loads_losslessly(self, tmp_path):
        path = tmp_path / "small.png"
        Image.fromarray(np.array([[0, 255], [7, 9]], dtype=np.uint8)).save(path)
        assert np.array_equal(load_image(path), [[0.0, 255.0], [7.0, 9.0]])

    def test_constant_image_maps_to_zero(self, tmp_path):
        path = tmp_path / "flat.png"
        save_image(np.full((4, 4), 37.5), path)
        assert np.array_equal(load_image(path), np.zeros((4, 4)))

    def test_min_max_mapping_recorded(self, rng, tmp_path):
        u = random_image(rng, 6, 6)
        path = tmp_path / "img.png"
        save_image(u, path)
        with Image.open(path) as im:
            mapping = json.loads(im.text["mapping"])
        assert mapping == {"min": float(u.min()), "max": float(u.max())}
        loaded = load_image(path)
        assert loaded.min() == 0.0 and loaded.max() == 255.0

    def test_render_of_single_bin_spectrum_to_png8(self, tmp_path):
        F = np.zeros((8, 8), dtype=complex)
        F[1, 2] = 3.0
        path = tmp_path / "render.png"
        save_image(log_magnitude(F).values, path)
        pix = load_image(path)
        assert np.count_nonzero(pix == 255.0) == 1
        assert np.count_nonzero(pix) == 1

    def test_png16_save_round_trip_resolution(self, rng, tmp_path):
        u = random_image(rng, 8, 8)
        path = tmp_path / "img16.png"
        save_image(u, path, fmt="png16")
        loaded = load_image(path)
        assert loaded.max() == 65535.0 and loaded.min() == 0.0

    def test_tiff_round_trip(self, rng, tmp_path):
        u = random_image(rng, 6, 9)
        path = tmp_path / "img.tif"
        save_image(u, path)
        loaded = load_image(path)
        assert loaded.shape == (6, 9)
        assert loaded.max() == 65535.0

    def test_color_input_rejected(self, tmp_path):
        path = tmp_path / "color.png"
        Image.fromarray(np.zeros((4, 4, 3), dtype=np.uint8)).save(path)
        with pytest.raises(ValueError, match="grayscale"):
            load_image(path)

    def test_too_small_image_rejected(self, tmp_path):
        path = tmp_path / "thin.png"
        Image.fromarray(np.zeros((1, 5), dtype=np.uint8)).save(path)
        with pytest.raises(ValueError):
            load_image(path)

    def test_unknown_suffix_rejected(self, rng, tmp_path):
        with pytest.raises(ValueError, match="suffix"):
            save_image(random_image(rng, 4, 4), tmp_path / "img.bmp")
