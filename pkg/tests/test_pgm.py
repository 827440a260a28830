"""Unit tests for the binary PGM codec."""

import os

import numpy as np
import pytest

from cmlcipher.cipher import Image
from cmlcipher.pgm import (
    MalformedHeaderError,
    PgmError,
    TruncatedPayloadError,
    UnsupportedMaxvalError,
    atomic_write_bytes,
    parse_pgm,
    read_pgm,
    serialize_pgm,
    write_pgm,
)

from conftest import golden_path


class TestParse:
    def test_minimal_file(self):
        img = parse_pgm(b"P5 1 1 255 \x07")
        assert img.width == 1 and img.height == 1
        assert img.pixels[0, 0] == 7

    def test_newline_separators(self):
        img = parse_pgm(b"P5\n2 1\n255\n\x01\x02")
        assert img.pixels.tolist() == [[1, 2]]

    def test_comment_between_tokens(self):
        plain = parse_pgm(b"P5\n2 1\n255\n\x01\x02")
        commented = parse_pgm(b"P5\n# a comment line\n2 # width read\n1\n255\n\x01\x02")
        assert commented == plain

    def test_comment_before_magic(self):
        with pytest.raises(MalformedHeaderError):
            # magic must come first; the file starts with a comment marker
            parse_pgm(b"# nope\nP5 1 1 255 \x00")

    def test_wrong_magic(self):
        with pytest.raises(MalformedHeaderError, match="P5"):
            parse_pgm(b"P2\n1 1\n255\n\x00")

    def test_truncated_payload_reports_counts(self):
        with pytest.raises(TruncatedPayloadError, match="2 bytes, expected 4"):
            parse_pgm(b"P5 2 2 255 \x01\x02")

    def test_truncated_error_carries_offset(self):
        data = b"P5 2 2 255 \x01\x02"
        with pytest.raises(TruncatedPayloadError) as err:
            parse_pgm(data)
        assert err.value.offset == len(data)

    def test_missing_raster(self):
        with pytest.raises(TruncatedPayloadError):
            parse_pgm(b"P5 1 1 255")

    def test_unsupported_maxval(self):
        with pytest.raises(UnsupportedMaxvalError, match="65535"):
            parse_pgm(b"P5 1 1 65535 \x00\x00")

    def test_non_numeric_dimension(self):
        with pytest.raises(MalformedHeaderError, match="width"):
            parse_pgm(b"P5 x 1 255 \x00")

    def test_zero_dimension(self):
        with pytest.raises(MalformedHeaderError, match="dimensions"):
            parse_pgm(b"P5 0 1 255 ")

    def test_trailing_bytes_ignored(self):
        img = parse_pgm(b"P5 1 1 255 \x09\n")
        assert img.pixels[0, 0] == 9

    def test_errors_are_pgm_errors(self):
        for bad in (b"", b"P5", b"P5 1", b"Q9 1 1 255 \x00"):
            with pytest.raises(PgmError):
                parse_pgm(bad)


class TestSerialize:
    def test_canonical_header(self):
        img = Image(2, 3, [10, 20, 30, 40, 50, 60])
        data = serialize_pgm(img)
        assert data == b"P5\n2 3\n255\n" + bytes([10, 20, 30, 40, 50, 60])

    def test_canonical_golden_file(self):
        with open(golden_path("canonical_2x3.pgm"), "rb") as fh:
            golden = fh.read()
        img = Image(2, 3, [10, 20, 30, 40, 50, 60])
        assert serialize_pgm(img) == golden


class TestRoundTrip:
    def test_random_images(self, tmp_path):
        rng = np.random.default_rng(8)
        for i in range(100):
            w = int(rng.integers(1, 40))
            h = int(rng.integers(1, 40))
            img = Image.random(rng, w, h)
            path = tmp_path / f"img_{i}.pgm"
            write_pgm(img, path)
            assert read_pgm(path) == img

    def test_large_image(self, tmp_path):
        rng = np.random.default_rng(9)
        img = Image.random(rng, 1024, 1024)
        path = tmp_path / "big.pgm"
        write_pgm(img, path)
        assert read_pgm(path) == img

    def test_photo_fixture_parses(self, photo):
        assert photo.width == 256 and photo.height == 256


class TestAtomicWrite:
    def test_no_partial_file_on_failure(self, tmp_path):
        target = tmp_path / "out.bin"

        class Boom:
            def __len__(self):
                return 4

            def __bytes__(self):
                raise RuntimeError("simulated serialization failure")

        with pytest.raises(TypeError):
            atomic_write_bytes(target, Boom())  # not bytes-like: fails mid-write
        assert not target.exists()
        assert list(tmp_path.iterdir()) == []  # temp file was cleaned up

    def test_overwrites_existing(self, tmp_path):
        target = tmp_path / "out.bin"
        atomic_write_bytes(target, b"first")
        atomic_write_bytes(target, b"second")
        assert target.read_bytes() == b"second"

    def test_regular_permissions(self, tmp_path):
        target = tmp_path / "out.bin"
        atomic_write_bytes(target, b"data")
        assert os.stat(target).st_mode & 0o777 == 0o644
