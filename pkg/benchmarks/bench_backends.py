#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the pure-Python fallback.

Times the full mask-stream generation (the hot path behind encryption)
for a range of image sizes and prints per-step cost plus the speedup.

    python benchmarks/bench_backends.py [--repeats 5]
"""

import argparse
import statistics
import time

from cmlcipher._backend import available_backends, get_kernels

# demo-key-like parameters; the maps dominate, exact values hardly matter
ARGS = dict(
    x0=0.31415926535897931,
    y0=0.57735026918962576,
    eps0=0.0785,
    a1=1.25,
    n1=3,
    a2=2.5,
    n2=3,
    logistic_r=3.99997,
    eps_per_step=False,
    n_burn=200,
)

SIZES = [
    ("64 x 64", 4_096),
    ("256 x 256", 65_536),
    ("512 x 512", 262_144),
]


def time_backend(kernels, count: int, repeats: int) -> float:
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernels.generate_masks(
            ARGS["x0"], ARGS["y0"], ARGS["eps0"], ARGS["a1"], ARGS["n1"],
            ARGS["a2"], ARGS["n2"], ARGS["logistic_r"], ARGS["eps_per_step"],
            ARGS["n_burn"], count, count,
        )
        best.append(time.perf_counter() - t0)
    return statistics.median(best)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled extension not built; run `pip install -e .` first")

    header = f"{'image size':>12} {'pixels':>8}"
    for name in backends:
        header += f" {name + ' (ms)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for label, count in SIZES:
        row = f"{label:>12} {count:>8}"
        timings = {}
        for name in backends:
            t = time_backend(get_kernels(name), count, args.repeats)
            timings[name] = t
            row += f" {1e3 * t:>14.2f}"
        if len(timings) == 2:
            row += f" {timings['python'] / timings['compiled']:>8.1f}x"
        print(row)

    count = 65_536
    for name in backends:
        t = time_backend(get_kernels(name), count, args.repeats)
        steps = ARGS["n_burn"] + count
        print(f"{name}: {1e9 * t / steps:.0f} ns per lattice step")


if __name__ == "__main__":
    main()
