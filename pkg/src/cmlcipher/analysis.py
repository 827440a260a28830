"""Security-analysis battery: histogram, correlation, NPCR/UACI, key space.

All measurements are pure functions of their inputs plus an explicit
sampling seed, so reports regenerate byte-for-byte.  The adjacent-pixel
correlation follows the covariance/variance estimator form

    r = Cov(x, y) / (sqrt(D(x)) * sqrt(D(y))),   D(x) = mean((x - E(x))^2)

over n_pairs positions sampled uniformly with replacement.

NPCR conventions: the standard definition counts differing pixels.  The
inverted variant (which counts *equal* pixels, as some writeups define it)
is returned as the exact complement ``100 - standard`` so the two always
sum to exactly 100.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cipher import Image
from .prng import SplitMix64

__all__ = [
    "DIRECTIONS",
    "DegenerateVarianceError",
    "CorrelationReport",
    "DiffReport",
    "KeySpaceParam",
    "KeySpaceReport",
    "histogram",
    "mean_intensity",
    "chi_square_uniform",
    "correlation_coefficient",
    "adjacent_correlation",
    "npcr",
    "uaci",
    "diff_report",
    "keyspace_report",
    "render_report",
    "render_table",
    "histogram_csv",
    "scatter_csv",
]

# direction -> (row offset, column offset) of the paired neighbor
DIRECTIONS = {
    "horizontal": (0, 1),
    "vertical": (1, 0),
    "diagonal": (1, 1),
}

NPCR_DEFINITIONS = ("standard", "paper_inverted")

# Key-space accounting schema: which parameters carry key material and how
# many distinguishable values each contributes.  Real-valued parameters
# count 10^precision distinct states apiece.
REAL_KEY_PARAMS = ("x0", "y0", "a1", "a2", "logistic_r", "logistic_x0")
INT_KEY_RANGES = {
    "n1": (2, 2**12),
    "n2": (2, 2**12),
    "n_logistic": (1, 10**6),
    "n_burn": (1, 10**6),
}

PAPER_KEYSPACE_CLAIM_LOG2 = 302.0


class DegenerateVarianceError(ValueError):
    """Sampled pixels (or their neighbors) are constant; r is undefined."""


@dataclass(frozen=True)
class CorrelationReport:
    direction: str
    n_pairs: int
    r: float
    sampling_seed: int


@dataclass(frozen=True)
class DiffReport:
    npcr_percent: float
    uaci_percent: float
    definition: str = "standard"


@dataclass(frozen=True)
class KeySpaceParam:
    name: str
    kind: str           # "real" or "integer"
    cardinality_log2: float
    detail: str


@dataclass(frozen=True)
class KeySpaceReport:
    precision_exponent: int
    params: tuple
    total_log2: float
    paper_claim_log2: float = PAPER_KEYSPACE_CLAIM_LOG2

    @property
    def exceeds_paper_claim(self) -> bool:
        return self.total_log2 > self.paper_claim_log2


def histogram(img: Image) -> np.ndarray:
    """256-bin pixel-value counts; always sums to width*height."""
    return np.bincount(img.pixels.reshape(-1), minlength=256).astype(np.int64)


def mean_intensity(img: Image) -> float:
    """Arithmetic mean of all pixel values."""
    return float(img.pixels.mean(dtype=np.float64))


def chi_square_uniform(counts) -> float:
    """Chi-square statistic of 256-bin counts against the uniform law (255 dof)."""
    counts = np.asarray(counts, dtype=np.float64)
    expected = counts.sum() / counts.size
    return float(((counts - expected) ** 2 / expected).sum())


def correlation_coefficient(xs, ys) -> float:
    """Covariance-over-variances estimator; symmetric in its arguments."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    ex = xs.mean()
    ey = ys.mean()
    dx = ((xs - ex) ** 2).mean()
    dy = ((ys - ey) ** 2).mean()
    if dx == 0.0 or dy == 0.0:
        raise DegenerateVarianceError(
            "sampled pixel values are constant; correlation is undefined"
        )
    cov = ((xs - ex) * (ys - ey)).mean()
    return float(cov / (math.sqrt(dx) * math.sqrt(dy)))


def adjacent_correlation(
    img: Image, direction: str, n_pairs: int = 2000, seed: int = 0
) -> CorrelationReport:
    """Correlation of n_pairs adjacent-pixel pairs in one direction.

    Positions are sampled uniformly with replacement from the seeded
    deterministic generator; re-running with the same seed reproduces the
    exact report.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {sorted(DIRECTIONS)}, got {direction!r}")
    if n_pairs < 2:
        raise ValueError("need at least 2 pairs")
    dr, dc = DIRECTIONS[direction]
    rows = img.height - dr
    cols = img.width - dc
    if rows < 1 or cols < 1:
        raise ValueError(
            f"image {img.width}x{img.height} has no adjacent pairs in {direction}"
        )
    rng = SplitMix64(seed)
    px = img.pixels
    xs = np.empty(n_pairs, dtype=np.float64)
    ys = np.empty(n_pairs, dtype=np.float64)
    for i in range(n_pairs):
        r = rng.next_below(rows)
        c = rng.next_below(cols)
        xs[i] = px[r, c]
        ys[i] = px[r + dr, c + dc]
    r_val = correlation_coefficient(xs, ys)
    return CorrelationReport(direction=direction, n_pairs=n_pairs, r=r_val, sampling_seed=seed)


def _check_same_shape(c1: Image, c2: Image) -> None:
    if c1.width != c2.width or c1.height != c2.height:
        raise ValueError(
            f"image dimensions differ: {c1.width}x{c1.height} vs {c2.width}x{c2.height}"
        )


def npcr(c1: Image, c2: Image, definition: str = "standard") -> float:
    """Pixel change rate between two equal-sized images, in percent.

    standard: D=1 where pixels differ.  paper_inverted: D=1 where pixels
    are equal, returned as the exact complement of the standard value.
    """
    _check_same_shape(c1, c2)
    if definition not in NPCR_DEFINITIONS:
        raise ValueError(f"definition must be one of {NPCR_DEFINITIONS}, got {definition!r}")
    diff = int(np.count_nonzero(c1.pixels != c2.pixels))
    standard = 100.0 * diff / c1.pixel_count
    if definition == "paper_inverted":
        return 100.0 - standard
    return standard


def uaci(c1: Image, c2: Image) -> float:
    """Mean absolute pixel difference, normalized by 255, in percent."""
    _check_same_shape(c1, c2)
    diff = np.abs(c1.pixels.astype(np.int16) - c2.pixels.astype(np.int16))
    return float(diff.sum(dtype=np.float64)) / (c1.pixel_count * 255.0) * 100.0


def diff_report(c1: Image, c2: Image, definition: str = "standard") -> DiffReport:
    """NPCR and UACI between two equal-sized images, bundled."""
    return DiffReport(
        npcr_percent=npcr(c1, c2, definition),
        uaci_percent=uaci(c1, c2),
        definition=definition,
    )


def keyspace_report(precision_exponent: int = 14) -> KeySpaceReport:
    """Key-space size in bits under a 10^-precision distinguishability model.

    Six real parameters contribute log2(10^p) bits each; integer
    parameters contribute the log2 of their admissible range.  The total
    combines multiplicatively, i.e. additively in log2.  (Key spaces of
    independent components compose as products; a sum would be off by
    hundreds of orders of magnitude.)
    """
    if precision_exponent < 1:
        raise ValueError("precision_exponent must be >= 1")
    real_bits = precision_exponent * math.log2(10.0)
    params = []
    for name in REAL_KEY_PARAMS:
        params.append(
            KeySpaceParam(
                name=name,
                kind="real",
                cardinality_log2=real_bits,
                detail=f"10^{precision_exponent} states",
            )
        )
    for name, (lo, hi) in INT_KEY_RANGES.items():
        cardinality = hi - lo + 1
        params.append(
            KeySpaceParam(
                name=name,
                kind="integer",
                cardinality_log2=math.log2(cardinality),
                detail=f"range [{lo}, {hi}]",
            )
        )
    total = sum(p.cardinality_log2 for p in params)
    return KeySpaceReport(
        precision_exponent=precision_exponent,
        params=tuple(params),
        total_log2=total,
    )


# --- report rendering -------------------------------------------------------

def _fmt(x: float) -> str:
    """Shortest round-tripping decimal; identical across platforms."""
    return repr(float(x))


def render_report(
    img: Image,
    name: str,
    n_pairs: int = 2000,
    seed: int = 0,
    keyspace: KeySpaceReport | None = None,
) -> str:
    """Single-image analysis as machine-readable key=value lines."""
    counts = histogram(img)
    lines = [
        f"image={name}",
        f"width={img.width}",
        f"height={img.height}",
        f"mean_intensity={_fmt(mean_intensity(img))}",
        f"histogram_chi2_uniform={_fmt(chi_square_uniform(counts))}",
        f"histogram_min_count={int(counts.min())}",
        f"histogram_max_count={int(counts.max())}",
        f"correlation_pairs={n_pairs}",
        f"correlation_seed={seed}",
    ]
    for direction in ("horizontal", "vertical", "diagonal"):
        try:
            rep = adjacent_correlation(img, direction, n_pairs=n_pairs, seed=seed)
            lines.append(f"correlation_{direction}={_fmt(rep.r)}")
        except (DegenerateVarianceError, ValueError) as exc:
            lines.append(f"correlation_{direction}_error={exc}")
    ks = keyspace if keyspace is not None else keyspace_report()
    lines.append(f"keyspace_precision_exponent={ks.precision_exponent}")
    for p in ks.params:
        lines.append(f"keyspace_{p.name}_log2={_fmt(p.cardinality_log2)}")
    lines.append(f"keyspace_total_log2={_fmt(ks.total_log2)}")
    lines.append(f"keyspace_reference_claim_log2={_fmt(ks.paper_claim_log2)}")
    lines.append(f"keyspace_exceeds_reference_claim={str(ks.exceeds_paper_claim).lower()}")
    lines.append(
        "keyspace_note=component key spaces combine as a product"
        " (a sum in log2); reference texts sometimes misprint this as S1+S2"
    )
    return "\n".join(lines) + "\n"


def render_table(img: Image, name: str, n_pairs: int = 2000, seed: int = 0) -> str:
    """Human-oriented summary table for one image (stdout companion of
    `render_report`)."""
    counts = histogram(img)
    rows = [
        ("image", name),
        ("size", f"{img.width} x {img.height}"),
        ("mean intensity", f"{mean_intensity(img):.4f}"),
        ("chi-square vs uniform (255 dof)", f"{chi_square_uniform(counts):.2f}"),
    ]
    for direction in ("horizontal", "vertical", "diagonal"):
        try:
            rep = adjacent_correlation(img, direction, n_pairs=n_pairs, seed=seed)
            rows.append((f"correlation ({direction})", f"{rep.r:+.6f}"))
        except (DegenerateVarianceError, ValueError) as exc:
            rows.append((f"correlation ({direction})", f"n/a ({exc})"))
    ks = keyspace_report()
    rows.append(("key space (log2)", f"{ks.total_log2:.2f} bits"))
    width = max(len(label) for label, _ in rows)
    lines = [f"{label.ljust(width)}  {value}" for label, value in rows]
    return "\n".join(lines) + "\n"


def histogram_csv(img: Image) -> str:
    """Histogram as "bin,count" CSV for external plotting."""
    counts = histogram(img)
    lines = ["bin,count"]
    lines.extend(f"{i},{int(c)}" for i, c in enumerate(counts))
    return "\n".join(lines) + "\n"


def scatter_csv(img: Image, direction: str, n_pairs: int = 2000, seed: int = 0) -> str:
    """Adjacent-pair scatter data as "x,y" CSV (same sampler as the report)."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {sorted(DIRECTIONS)}, got {direction!r}")
    dr, dc = DIRECTIONS[direction]
    rows = img.height - dr
    cols = img.width - dc
    if rows < 1 or cols < 1:
        raise ValueError(f"image has no adjacent pairs in {direction}")
    rng = SplitMix64(seed)
    px = img.pixels
    lines = ["x,y"]
    for _ in range(n_pairs):
        r = rng.next_below(rows)
        c = rng.next_below(cols)
        lines.append(f"{int(px[r, c])},{int(px[r + dr, c + dc])}")
    return "\n".join(lines) + "\n"
