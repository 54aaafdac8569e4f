import numpy as np
import pytest
from numpy.testing import assert_array_equal
from PIL import Image

from hadamark.fileio import ImageFormatError, load_image, save_image


@pytest.fixture
def gray(rng):
    return rng.integers(0, 256, (9, 13)).astype(np.uint8)


@pytest.fixture
def color(rng):
    return rng.integers(0, 256, (9, 13, 3)).astype(np.uint8)


class TestPng:
    def test_gray_roundtrip(self, tmp_path, gray):
        p = str(tmp_path / "g.png")
        save_image(p, gray)
        assert_array_equal(load_image(p), gray)

    def test_color_roundtrip(self, tmp_path, color):
        p = str(tmp_path / "c.png")
        save_image(p, color)
        assert_array_equal(load_image(p), color)

    def test_palette_png_expands_to_rgb(self, tmp_path, color):
        p = str(tmp_path / "pal.png")
        Image.fromarray(color).convert("P", palette=Image.ADAPTIVE).save(p)
        out = load_image(p)
        assert out.shape == (9, 13, 3)
        assert out.dtype == np.uint8

    def test_rgba_rejected(self, tmp_path):
        p = str(tmp_path / "a.png")
        Image.new("RGBA", (4, 4)).save(p)
        with pytest.raises(ImageFormatError):
            load_image(p)

    def test_16bit_rejected(self, tmp_path):
        p = str(tmp_path / "deep.png")
        Image.fromarray(np.zeros((4, 4), dtype=np.uint16)).save(p)
        with pytest.raises(ImageFormatError):
            load_image(p)

    def test_garbage_bytes_raise_oserror(self, tmp_path):
        p = tmp_path / "x.png"
        p.write_bytes(b"not a png at all")
        with pytest.raises(OSError):
            load_image(str(p))


class TestPnm:
    def test_pgm_roundtrip(self, tmp_path, gray):
        p = str(tmp_path / "g.pgm")
        save_image(p, gray)
        assert_array_equal(load_image(p), gray)

    def test_ppm_roundtrip(self, tmp_path, color):
        p = str(tmp_path / "c.ppm")
        save_image(p, color)
        assert_array_equal(load_image(p), color)

    def test_written_bytes_are_canonical(self, tmp_path):
        p = tmp_path / "t.pgm"
        save_image(str(p), np.array([[0, 128], [255, 7]], dtype=np.uint8))
        assert p.read_bytes() == b"P5\n2 2\n255\n" + bytes([0, 128, 255, 7])

    def test_header_comments_and_whitespace(self, tmp_path):
        p = tmp_path / "c.pgm"
        p.write_bytes(b"P5 # magic\n# a comment line\n 2\t2 # dims\n255\n" + bytes(4))
        assert_array_equal(load_image(str(p)), np.zeros((2, 2), dtype=np.uint8))

    def test_pillow_reads_our_pnm(self, tmp_path, gray):
        p = str(tmp_path / "interop.pgm")
        save_image(p, gray)
        with Image.open(p) as img:
            assert_array_equal(np.asarray(img), gray)

    def test_ascii_pnm_rejected(self, tmp_path):
        p = tmp_path / "a.pgm"
        p.write_bytes(b"P2\n2 2\n255\n0 1 2 3\n")
        with pytest.raises(ImageFormatError):
            load_image(str(p))

    def test_16bit_pnm_rejected(self, tmp_path):
        p = tmp_path / "d.pgm"
        p.write_bytes(b"P5\n2 2\n65535\n" + bytes(8))
        with pytest.raises(ImageFormatError):
            load_image(str(p))

    def test_truncated_raster_rejected(self, tmp_path):
        p = tmp_path / "t.pgm"
        p.write_bytes(b"P5\n4 4\n255\n" + bytes(7))
        with pytest.raises(ImageFormatError):
            load_image(str(p))

    def test_malformed_header_rejected(self, tmp_path):
        p = tmp_path / "m.pgm"
        p.write_bytes(b"P5\n2 two\n255\n" + bytes(4))
        with pytest.raises(ImageFormatError):
            load_image(str(p))


class TestDispatch:
    def test_unknown_extension_rejected(self, tmp_path):
        p = tmp_path / "img.bmp"
        p.write_bytes(b"BM")
        with pytest.raises(ImageFormatError):
            load_image(str(p))

    def test_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_image(str(tmp_path / "absent.png"))

    def test_save_rejects_wrong_dtype(self, tmp_path):
        with pytest.raises(ValueError):
            save_image(str(tmp_path / "f.png"), np.zeros((4, 4)))

    def test_save_rejects_mismatched_pnm_kind(self, tmp_path, gray, color):
        with pytest.raises(ValueError):
            save_image(str(tmp_path / "g.ppm"), gray)
        with pytest.raises(ValueError):
            save_image(str(tmp_path / "c.pgm"), color)
