"""Binary PGM (P5) reader/writer.

Reader accepts any amount of header whitespace and ``#`` comment lines
between tokens, per the netpbm conventions, and reports parse failures
with the byte offset where they occurred.  Only maxval 255 is supported.

Writer emits the canonical form ``P5\\n<w> <h>\\n255\\n`` followed by the
raw raster, staged through a temp file and renamed so a failed write
never leaves a truncated output behind.
"""

from __future__ import annotations

import os
import tempfile

from .cipher import Image

__all__ = [
    "PgmError",
    "MalformedHeaderError",
    "TruncatedPayloadError",
    "UnsupportedMaxvalError",
    "read_pgm",
    "write_pgm",
    "parse_pgm",
    "serialize_pgm",
    "atomic_write_bytes",
]

_WHITESPACE = b" \t\r\n\v\f"


class PgmError(ValueError):
    """Base class for PGM format errors; carries the failing byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class MalformedHeaderError(PgmError):
    pass


class TruncatedPayloadError(PgmError):
    pass


class UnsupportedMaxvalError(PgmError):
    pass


def _skip_separators(data: bytes, pos: int) -> int:
    """Advance past whitespace and # comments (comments run to end of line)."""
    n = len(data)
    while pos < n:
        b = data[pos:pos + 1]
        if b in (b"#",):
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif b in _WHITESPACE and b:
            pos += 1
        else:
            break
    return pos


def _read_token(data: bytes, pos: int, what: str) -> tuple[bytes, int]:
    pos = _skip_separators(data, pos)
    if pos >= len(data):
        raise MalformedHeaderError(f"unexpected end of file while reading {what}", pos)
    start = pos
    n = len(data)
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _read_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _read_token(data, pos, what)
    if not token.isdigit():
        raise MalformedHeaderError(f"{what} is not a decimal integer: {token!r}", pos)
    return int(token), end


def parse_pgm(data: bytes) -> Image:
    """Parse a P5 image from bytes."""
    # the magic number must open the file; comments are only legal after it
    if data[:2] != b"P5":
        raise MalformedHeaderError(
            f"not a binary PGM (expected magic P5, got {data[:2]!r})", 0
        )
    pos = 2
    width, pos = _read_int(data, pos, "width")
    height, pos = _read_int(data, pos, "height")
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"invalid dimensions {width}x{height}", pos)
    if maxval != 255:
        raise UnsupportedMaxvalError(f"only maxval 255 is supported, got {maxval}", pos)
    if pos >= len(data):
        raise TruncatedPayloadError("missing raster separator after maxval", pos)
    if data[pos:pos + 1] not in _WHITESPACE:
        raise MalformedHeaderError("maxval must be followed by a single whitespace byte", pos)
    pos += 1
    expected = width * height
    raster = data[pos:pos + expected]
    if len(raster) < expected:
        raise TruncatedPayloadError(
            f"raster holds {len(raster)} bytes, expected {expected}", pos + len(raster)
        )
    # Bytes past the raster are ignored, as common netpbm tooling does.
    return Image(width, height, bytearray(raster))


def serialize_pgm(img: Image) -> bytes:
    """Canonical P5 serialization."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def read_pgm(path) -> Image:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_pgm(data)


def atomic_write_bytes(path, data: bytes) -> None:
    """Write via temp file + rename so failures never leave partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        os.fchmod(fd, 0o644)  # mkstemp defaults to 0600
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_pgm(img: Image, path) -> None:
    atomic_write_bytes(path, serialize_pgm(img))
