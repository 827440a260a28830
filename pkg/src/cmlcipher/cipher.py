"""Pixel diffusion: XOR the flattened image with the quantized mask streams.

Two modes ship:

* ``paper_literal`` -- the two-mask construction
  ``C_i = (K1_i XOR P_i) XOR (K2_i XOR P_i)``.  The plaintext cancels
  algebraically, so the ciphertext is independent of the image being
  encrypted.  The mode exists to demonstrate exactly that degeneracy; it
  cannot decrypt, and `decrypt` raises `LiteralModeError` with the
  explanation instead.

* ``repaired`` -- the minimal invertible fix:
  ``C_i = P_i XOR K1_i XOR K2_i``, an ordinary synchronous stream cipher
  over the combined mask bytes.  `decrypt_repaired` is its exact inverse.

Masks live in [0, m*n) and are reduced mod 256 before the XOR so they
match the 8-bit pixels.  Encrypting twice with one key yields the same
ciphertext: the scheme has no nonce, so never reuse a key for two images
you care about (classic two-time-pad caveat).

Scratch buffers that ever hold plaintext-derived bytes are zero-filled
before the functions return; pass your own `WorkBuffers` to observe it.
"""

from __future__ import annotations

import numpy as np

from .keystream import CipherKey, mask_arrays

__all__ = [
    "Image",
    "Ciphertext",
    "LiteralModeError",
    "WorkBuffers",
    "flatten",
    "unflatten",
    "encrypt",
    "decrypt",
    "encrypt_literal",
    "encrypt_repaired",
    "decrypt_repaired",
    "LITERAL_DEGENERACY_NOTE",
]

LITERAL_DEGENERACY_NOTE = (
    "paper-literal mode XORs both masks with the same plaintext pixel and\n"
    "then XORs the results together: (K1 ^ P) ^ (K2 ^ P) = K1 ^ K2.  The\n"
    "plaintext cancels, every image encrypts to the same bytes under a\n"
    "given key, and no decryption is possible.  Use the repaired mode for\n"
    "an invertible cipher."
)


class LiteralModeError(RuntimeError):
    """Raised when asked to decrypt in the non-invertible literal mode."""


class Image:
    """A width x height grid of 8-bit grayscale pixels (row-major)."""

    __slots__ = ("width", "height", "pixels")

    def __init__(self, width: int, height: int, pixels):
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        arr = np.asarray(pixels)
        if not np.issubdtype(arr.dtype, np.integer) and arr.dtype != np.uint8:
            raise ValueError(f"pixels must be integers, got dtype {arr.dtype}")
        if arr.size != width * height:
            raise ValueError(
                f"expected {width * height} pixels for {width}x{height}, got {arr.size}"
            )
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("pixel values must lie in [0, 255]")
        self.width = int(width)
        self.height = int(height)
        # astype always copies here, so the caller's buffer is never aliased
        self.pixels = arr.astype(np.uint8).reshape(height, width)

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and bool(np.array_equal(self.pixels, other.pixels))
        )

    def __repr__(self) -> str:
        return f"Image({self.width}x{self.height})"

    @classmethod
    def random(cls, rng: np.random.Generator, width: int, height: int) -> "Image":
        return cls(width, height, rng.integers(0, 256, size=height * width))


# Ciphertext has the same shape and invariants as a plain image.
Ciphertext = Image


class WorkBuffers:
    """Owner of the scratch arrays used during one cipher call.

    Every array registered via `take` is zero-filled by `wipe`, which the
    cipher functions call before returning.  Tests pass their own instance
    and then inspect `arrays` to verify nothing plaintext-derived survives.
    """

    def __init__(self):
        self._arrays: list[np.ndarray] = []
        self.wiped = False

    def take(self, arr: np.ndarray) -> np.ndarray:
        self._arrays.append(arr)
        return arr

    def wipe(self) -> None:
        for a in self._arrays:
            a.fill(0)
        self.wiped = True

    @property
    def arrays(self) -> tuple:
        return tuple(self._arrays)


def flatten(img: Image) -> np.ndarray:
    """Row-major linearization of the pixel grid (fresh uint8 copy)."""
    return img.pixels.reshape(-1).copy()


def unflatten(data, width: int, height: int) -> Image:
    """Inverse of `flatten`."""
    return Image(width, height, np.asarray(data, dtype=np.uint8))


def _mask_bytes(key: CipherKey, count: int, modulus: int, buffers: WorkBuffers):
    mx, my = mask_arrays(key, count, modulus)
    mxb = buffers.take((mx % 256).astype(np.uint8))
    myb = buffers.take((my % 256).astype(np.uint8))
    return mxb, myb


def encrypt_literal(img: Image, k: CipherKey, buffers: WorkBuffers | None = None) -> Ciphertext:
    """The two-mask construction, exactly as written: C = (K1^P) ^ (K2^P).

    Ciphertext is provably independent of ``img`` (see
    LITERAL_DEGENERACY_NOTE); kept for demonstration and analysis.
    """
    if k.cipher_mode != "paper_literal":
        raise ValueError(
            "encrypt_literal requires a key with cipher_mode='paper_literal' "
            "(use CipherKey.with_mode)"
        )
    wb = buffers if buffers is not None else WorkBuffers()
    try:
        count = img.pixel_count
        p = wb.take(flatten(img))
        mxb, myb = _mask_bytes(k, count, count, wb)
        e = wb.take(np.bitwise_xor(mxb, p))
        f = wb.take(np.bitwise_xor(myb, p))
        c = np.bitwise_xor(e, f)
        return Ciphertext(img.width, img.height, c)
    finally:
        wb.wipe()


def encrypt_repaired(img: Image, k: CipherKey, buffers: WorkBuffers | None = None) -> Ciphertext:
    """Invertible stream cipher: C = P XOR K1 XOR K2 (masks reduced mod 256)."""
    if k.cipher_mode != "repaired":
        raise ValueError(
            "encrypt_repaired requires a key with cipher_mode='repaired' "
            "(use CipherKey.with_mode)"
        )
    wb = buffers if buffers is not None else WorkBuffers()
    try:
        count = img.pixel_count
        p = wb.take(flatten(img))
        mxb, myb = _mask_bytes(k, count, count, wb)
        c = np.bitwise_xor(np.bitwise_xor(p, mxb), myb)
        return Ciphertext(img.width, img.height, c)
    finally:
        wb.wipe()


def decrypt_repaired(ct: Ciphertext, k: CipherKey, buffers: WorkBuffers | None = None) -> Image:
    """Exact inverse of `encrypt_repaired` (XOR is an involution)."""
    if k.cipher_mode != "repaired":
        raise ValueError(
            "decrypt_repaired requires a key with cipher_mode='repaired' "
            "(use CipherKey.with_mode)"
        )
    wb = buffers if buffers is not None else WorkBuffers()
    try:
        count = ct.pixel_count
        c = flatten(ct)
        mxb, myb = _mask_bytes(k, count, count, wb)
        p = wb.take(np.bitwise_xor(np.bitwise_xor(c, mxb), myb))
        return Image(ct.width, ct.height, p)  # Image copies; wipe is safe
    finally:
        wb.wipe()


def encrypt(img: Image, k: CipherKey) -> Ciphertext:
    """Encrypt according to the key's cipher_mode flag."""
    if k.cipher_mode == "paper_literal":
        return encrypt_literal(img, k)
    return encrypt_repaired(img, k)


def decrypt(ct: Ciphertext, k: CipherKey) -> Image:
    """Decrypt according to the key's cipher_mode flag.

    Literal mode refuses: the ciphertext carries no plaintext information.
    """
    if k.cipher_mode == "paper_literal":
        raise LiteralModeError(
            "cannot decrypt in paper-literal mode:\n" + LITERAL_DEGENERACY_NOTE
        )
    return decrypt_repaired(ct, k)
