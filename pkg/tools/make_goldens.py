#!/usr/bin/env python3
"""Regenerate the frozen test vectors under tests/data/golden/.

Run from the repository root after an intentional change to the stream
or file formats, then review the diff carefully: these files are the
determinism/regression oracles, so an unexpected change means the
implementation's output drifted.
"""

import os
import subprocess
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cmlcipher.cipher import Image, encrypt_repaired
from cmlcipher.keyfile import serialize_key, stream_is_healthy
from cmlcipher.keystream import CipherKey, mask_arrays, save_mask_file
from cmlcipher.maps import LogisticParams, MapParams
from cmlcipher.pgm import write_pgm

GOLDEN = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "golden")
DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

# The published demonstration key used by every frozen vector.
DEMO_KEY = CipherKey(
    x0=0.31415926535897931,
    y0=0.57735026918962576,
    p1=MapParams(a=1.25, n=3),
    p2=MapParams(a=2.5, n=3),
    lp=LogisticParams(r=3.99997, x0=0.45399049973954680),
    n_logistic=100,
    n_burn=200,
    eps_mode="fixed",
    cipher_mode="repaired",
)


def main() -> None:
    os.makedirs(GOLDEN, exist_ok=True)
    assert stream_is_healthy(DEMO_KEY), "demo key must pass the stream-health probe"

    with open(os.path.join(GOLDEN, "demo.key"), "w", encoding="utf-8", newline="") as fh:
        fh.write(serialize_key(DEMO_KEY))

    # 10-pair regression vector at the 256x256 modulus.
    mx, my = mask_arrays(DEMO_KEY, 10, 65536)
    save_mask_file(os.path.join(GOLDEN, "keystream_m65536_n10.txt"), mx, my, 65536)

    # 16-pair vector at the 4x4 modulus (used by the literal-mode check).
    mx, my = mask_arrays(DEMO_KEY, 16, 16)
    save_mask_file(os.path.join(GOLDEN, "keystream_m16_n16.txt"), mx, my, 16)

    # 8x8 ramp image, repaired-mode ciphertext.
    ramp = Image(8, 8, np.arange(64, dtype=np.uint8))
    write_pgm(encrypt_repaired(ramp, DEMO_KEY), os.path.join(GOLDEN, "ramp8_cipher.pgm"))

    # Canonical serialization of a small fixed image.
    fixed = Image(2, 3, [10, 20, 30, 40, 50, 60])
    write_pgm(fixed, os.path.join(GOLDEN, "canonical_2x3.pgm"))

    # Full analyze report for the bundled photo, via the real CLI.
    subprocess.run(
        [
            sys.executable, "-m", "cmlcipher.cli", "analyze",
            "--in", os.path.join(DATA, "photo_256.pgm"),
            "--pairs", "2000", "--sample-seed", "0",
            "--report", os.path.join(GOLDEN, "analyze_report.txt"),
        ],
        check=True,
        env={**os.environ, "PYTHONPATH": os.path.join(os.path.dirname(__file__), "..", "src")},
    )
    print("golden files regenerated under", os.path.abspath(GOLDEN))


if __name__ == "__main__":
    main()
