"""Command-line surface: keygen / encrypt / decrypt / analyze / diff / demo-flaw.

Every path is deterministic given the explicit seeds, and output files are
written atomically.  Exit codes: 0 success, 1 usage, 2 file-format error,
3 key error, 4 mode error (attempting to decrypt in literal mode).
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import __version__
from .analysis import (
    diff_report,
    histogram_csv,
    render_report,
    render_table,
    scatter_csv,
)
from .cipher import (
    LITERAL_DEGENERACY_NOTE,
    LiteralModeError,
    decrypt,
    encrypt,
    encrypt_literal,
)
from .keyfile import KeyFileError, generate_key, read_key, write_key
from .pgm import PgmError, atomic_write_bytes, read_pgm, write_pgm

__all__ = ["cli_main", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_KEY = 3
EXIT_MODE = 4

_MODE_FLAGS = {"literal": "paper_literal", "repaired": "repaired"}


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that signals usage errors instead of calling sys.exit(2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageExit()

    def exit(self, status=0, message=None):
        if message:
            sys.stderr.write(message)
        if status == 0:
            raise SystemExit(0)
        raise _UsageExit()


def _build_parser() -> _Parser:
    parser = _Parser(prog="cmlcipher", description=__doc__)
    parser.add_argument("--version", action="version", version=f"cmlcipher {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key file")
    p.add_argument("--out", required=True, help="key file to write")
    p.add_argument("--seed", type=int, default=None,
                   help="64-bit seed for a deterministic key (default: OS entropy)")

    p = sub.add_parser("encrypt", help="encrypt a PGM image")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="input", required=True, help="plaintext PGM")
    p.add_argument("--out", required=True, help="ciphertext PGM")
    p.add_argument("--mode", choices=sorted(_MODE_FLAGS), default=None,
                   help="override the key file's cipher mode")

    p = sub.add_parser("decrypt", help="decrypt a PGM image (repaired mode only)")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="input", required=True, help="ciphertext PGM")
    p.add_argument("--out", required=True, help="plaintext PGM")

    p = sub.add_parser("analyze", help="statistical report for one image")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--pairs", type=int, default=2000,
                   help="adjacent pixel pairs per direction (default 2000)")
    p.add_argument("--sample-seed", type=int, default=0,
                   help="seed for the pair sampler (default 0)")
    p.add_argument("--report", required=True, help="report file to write")
    p.add_argument("--csv-dir", default=None,
                   help="also drop histogram/scatter CSVs in this directory")

    p = sub.add_parser("diff", help="NPCR/UACI between two equal-sized images")
    p.add_argument("--a", dest="img_a", required=True)
    p.add_argument("--b", dest="img_b", required=True)
    p.add_argument("--npcr-def", choices=("standard", "paper"), default="standard",
                   help="NPCR convention (paper = count equal pixels)")

    p = sub.add_parser(
        "demo-flaw",
        help="encrypt two images in literal mode and show the ciphertexts match",
    )
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--in2", dest="input2", required=True)

    return parser


def _cmd_keygen(args) -> int:
    key = generate_key(seed=args.seed)
    write_key(key, args.out)
    print(f"wrote key to {args.out}")
    return EXIT_OK


def _cmd_encrypt(args) -> int:
    key = read_key(args.key)
    if args.mode is not None:
        key = key.with_mode(_MODE_FLAGS[args.mode])
    img = read_pgm(args.input)
    ct = encrypt(img, key)
    write_pgm(ct, args.out)
    print(f"encrypted {args.input} -> {args.out} ({key.cipher_mode} mode)")
    return EXIT_OK


def _cmd_decrypt(args) -> int:
    key = read_key(args.key)
    ct = read_pgm(args.input)
    img = decrypt(ct, key)
    write_pgm(img, args.out)
    print(f"decrypted {args.input} -> {args.out}")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    img = read_pgm(args.input)
    name = os.path.basename(args.input)
    report = render_report(img, name, n_pairs=args.pairs, seed=args.sample_seed)
    atomic_write_bytes(args.report, report.encode("utf-8"))
    if args.csv_dir is not None:
        os.makedirs(args.csv_dir, exist_ok=True)
        atomic_write_bytes(
            os.path.join(args.csv_dir, "histogram.csv"),
            histogram_csv(img).encode("utf-8"),
        )
        for direction in ("horizontal", "vertical", "diagonal"):
            try:
                csv = scatter_csv(img, direction, n_pairs=args.pairs, seed=args.sample_seed)
            except ValueError:
                continue
            atomic_write_bytes(
                os.path.join(args.csv_dir, f"scatter_{direction}.csv"),
                csv.encode("utf-8"),
            )
    print(render_table(img, name, n_pairs=args.pairs, seed=args.sample_seed), end="")
    print(f"wrote report to {args.report}")
    return EXIT_OK


def _cmd_diff(args) -> int:
    a = read_pgm(args.img_a)
    b = read_pgm(args.img_b)
    definition = "standard" if args.npcr_def == "standard" else "paper_inverted"
    try:
        rep = diff_report(a, b, definition)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    print(f"npcr_definition={rep.definition}")
    print(f"npcr_percent={rep.npcr_percent!r}")
    print(f"uaci_percent={rep.uaci_percent!r}")
    return EXIT_OK


def _cmd_demo_flaw(args) -> int:
    key = read_key(args.key).with_mode("paper_literal")
    img_a = read_pgm(args.input)
    img_b = read_pgm(args.input2)
    ct_a = encrypt_literal(img_a, key)
    ct_b = encrypt_literal(img_b, key)
    same_inputs = img_a == img_b
    if ct_a.width != ct_b.width or ct_a.height != ct_b.height:
        print("error: images must have equal dimensions for the demonstration",
              file=sys.stderr)
        return EXIT_FORMAT
    identical = bool(np.array_equal(ct_a.pixels, ct_b.pixels))
    print(f"plaintexts identical: {same_inputs}")
    print(f"ciphertexts identical: {identical}")
    if not identical:
        # Unreachable by construction; a failure here means the cipher broke.
        print("unexpected: literal-mode ciphertexts differ", file=sys.stderr)
        return EXIT_FORMAT
    print()
    print(LITERAL_DEGENERACY_NOTE)
    return EXIT_OK


_COMMANDS = {
    "keygen": _cmd_keygen,
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "analyze": _cmd_analyze,
    "diff": _cmd_diff,
    "demo-flaw": _cmd_demo_flaw,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit:
        return EXIT_USAGE
    except SystemExit as exc:          # --version / --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except LiteralModeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODE
    except KeyFileError as exc:
        print(f"key error: {exc}", file=sys.stderr)
        return EXIT_KEY
    except PgmError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
