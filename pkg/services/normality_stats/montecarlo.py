"""
Monte Carlo estimates of cylinder measures under the Gauss-Nakada measure.

The measure has no closed form, so mu_h(C(w)) is estimated by Birkhoff
averages: Lebesgue-uniform seeds in F are pushed through a vectorised
float Gauss map, and the frequency of w along each orbit is averaged over
the seeds. Digits whose rounding falls within BOUNDARY_MARGIN of a
half-integer line cannot be trusted in double precision; those positions
are dropped from every window that touches them and counted as
boundary skips.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from config.settings import settings
from services.errors import NotRegular, PreconditionViolated
from services.gaussian_core import GaussianInt
from services.symbolic_shift import DigitSeq, Word, build_sofic_graph
from .constants import (
    BOUNDARY_MARGIN,
    DEFAULT_HISTOGRAM_BINS,
    DEFAULT_ORBIT_LENGTH,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    ZERO_GUARD,
)
from .frequencies import pattern_count

logging.basicConfig(level=getattr(logging, settings.LOG_LEVEL, logging.WARNING))
logger = logging.getLogger("hcf.stats")


# ============================================================================
# VECTORISED ORBITS
# ============================================================================

@dataclass
class OrbitBatch:
    """Digits of many float orbits: arrays of shape (samples, steps)."""

    re: np.ndarray
    im: np.ndarray
    valid: np.ndarray
    points: np.ndarray

    @property
    def boundary_skips(self) -> int:
        return int((~self.valid).sum())


def uniform_seeds(rng: np.random.Generator, samples: int) -> np.ndarray:
    """Lebesgue-uniform points of F = [-1/2, 1/2) x [-1/2, 1/2)."""
    return rng.uniform(-0.5, 0.5, samples) + 1j * rng.uniform(-0.5, 0.5, samples)


def float_orbits(z0: np.ndarray, steps: int, rng: np.random.Generator,
                 margin: float = BOUNDARY_MARGIN) -> OrbitBatch:
    """
    Run T(z) = 1/z - [1/z] on every starting point for the given number of steps.

    A point that reaches 0 is replaced by a fresh uniform seed and the
    digit at that position is marked invalid.
    """
    z = np.array(z0, dtype=np.complex128)
    shape = (z.shape[0], steps)
    re = np.zeros(shape, dtype=np.int64)
    im = np.zeros(shape, dtype=np.int64)
    valid = np.ones(shape, dtype=bool)
    points = np.zeros(shape, dtype=np.complex128)
    for k in range(steps):
        dead = np.abs(z) < ZERO_GUARD
        if dead.any():
            z[dead] = uniform_seeds(rng, int(dead.sum()))
        inv = 1.0 / z
        shifted_re = inv.real + 0.5
        shifted_im = inv.imag + 0.5
        a_re = np.floor(shifted_re)
        a_im = np.floor(shifted_im)
        near = (
            (shifted_re - a_re < margin) | (a_re + 1 - shifted_re < margin)
            | (shifted_im - a_im < margin) | (a_im + 1 - shifted_im < margin)
        )
        re[:, k] = a_re.astype(np.int64)
        im[:, k] = a_im.astype(np.int64)
        valid[:, k] = ~(near | dead)
        z = inv - (a_re + 1j * a_im)
        points[:, k] = z
    return OrbitBatch(re, im, valid, points)


def _window_hits(batch: OrbitBatch, w: Word) -> Tuple[np.ndarray, np.ndarray]:
    """Per-sample (matching windows, usable windows) for the pattern w."""
    k = len(w)
    width = batch.re.shape[1] - k + 1
    if width <= 0:
        zeros = np.zeros(batch.re.shape[0], dtype=np.int64)
        return zeros, zeros
    match = np.ones((batch.re.shape[0], width), dtype=bool)
    usable = np.ones_like(match)
    for t, a in enumerate(w):
        match &= batch.re[:, t:t + width] == a.re
        match &= batch.im[:, t:t + width] == a.im
        usable &= batch.valid[:, t:t + width]
    return (match & usable).sum(axis=1), usable.sum(axis=1)


# ============================================================================
# MEASURE ESTIMATES
# ============================================================================

@dataclass
class MeasureEstimate:
    """Estimate of mu_h of the cylinder of word, with its standard error."""

    word: Word
    estimate: float
    stderr: float
    samples: int
    boundary_skips: int = 0

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "estimate": self.estimate,
            "stderr": self.stderr,
            "samples": self.samples,
            "boundary_skips": self.boundary_skips,
        }


def _summarise(w: Word, hits: np.ndarray, usable: np.ndarray, skips: int) -> MeasureEstimate:
    keep = usable > 0
    freqs = hits[keep] / usable[keep]
    n = int(keep.sum())
    if n == 0:
        return MeasureEstimate(w, 0.0, math.inf, 0, skips)
    mean = float(freqs.sum() / n)
    stderr = float(freqs.std(ddof=1) / math.sqrt(n)) if n > 1 else math.inf
    return MeasureEstimate(w, mean, stderr, n, skips)


def _run(samples: int, orbit_len: int, rng_seed: int) -> OrbitBatch:
    if samples < 1 or orbit_len < 1:
        raise PreconditionViolated(f"samples and orbit length must be positive, got {samples} and {orbit_len}")
    rng = np.random.default_rng(rng_seed)
    return float_orbits(uniform_seeds(rng, samples), orbit_len, rng)


def estimate_measure(w, samples: int = DEFAULT_SAMPLES, orbit_len: int = DEFAULT_ORBIT_LENGTH,
                     rng_seed: int = DEFAULT_SEED) -> MeasureEstimate:
    """
    Estimate mu_h(C(w)) as the mean of per-seed frequencies of w.

    Args:
        w: a regular word
        samples: number of uniform seeds in F
        orbit_len: Gauss map steps per seed
        rng_seed: seed of the PCG64 generator

    Returns:
        MeasureEstimate, deterministic for fixed (samples, orbit_len, rng_seed)

    Raises:
        NotRegular: w has an empty open cylinder.
    """
    w = Word.from_json(w)
    if not build_sofic_graph().is_regular(w):
        raise NotRegular(f"{w} is not regular, its cylinder carries no measure")
    batch = _run(samples, orbit_len, rng_seed)
    hits, usable = _window_hits(batch, w)
    result = _summarise(w, hits, usable, batch.boundary_skips)
    logger.info(f"mu_h{w} ~ {result.estimate:.6f} +- {result.stderr:.6f} "
                f"({result.samples} seeds, {result.boundary_skips} boundary skips)")
    return result


def estimate_many(words: Iterable, samples: int = DEFAULT_SAMPLES, orbit_len: int = DEFAULT_ORBIT_LENGTH,
                  rng_seed: int = DEFAULT_SEED) -> List[MeasureEstimate]:
    """estimate_measure for several words on one shared batch of orbits."""
    words = [Word.from_json(w) for w in words]
    graph = build_sofic_graph()
    for w in words:
        if not graph.is_regular(w):
            raise NotRegular(f"{w} is not regular, its cylinder carries no measure")
    batch = _run(samples, orbit_len, rng_seed)
    return [_summarise(w, *_window_hits(batch, w), batch.boundary_skips) for w in words]


def estimate_level_one(samples: int = DEFAULT_SAMPLES, orbit_len: int = DEFAULT_ORBIT_LENGTH,
                       rng_seed: int = DEFAULT_SEED) -> Dict[GaussianInt, MeasureEstimate]:
    """Estimates of every level-1 cylinder the orbits visit, from one batch."""
    batch = _run(samples, orbit_len, rng_seed)
    seen = np.unique(np.stack([batch.re[batch.valid], batch.im[batch.valid]], axis=1), axis=0)
    out = {}
    for a_re, a_im in seen:
        b = GaussianInt(int(a_re), int(a_im))
        w = Word((b,))
        out[b] = _summarise(w, *_window_hits(batch, w), batch.boundary_skips)
    return out


# ============================================================================
# DIAGNOSTICS
# ============================================================================

def random_point_digits(length: int, rng_seed: int = DEFAULT_SEED) -> DigitSeq:
    """Digits of one Lebesgue-uniform point of F, from a float orbit."""
    batch = _run(1, length, rng_seed)
    digits = [GaussianInt(int(a), int(b)) for a, b in zip(batch.re[0], batch.im[0])]
    return DigitSeq.finite(digits, f"float orbit of a uniform point (seed {rng_seed})")


@dataclass
class NormalityRow:
    pattern: Word
    frequency: float
    estimate: MeasureEstimate
    z_score: float

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.to_json(),
            "frequency": self.frequency,
            "mu_h": self.estimate.estimate,
            "stderr": self.estimate.stderr,
            "z_score": self.z_score,
        }


def normality_report(x, patterns: Iterable, N: int, samples: int = DEFAULT_SAMPLES,
                     orbit_len: int = DEFAULT_ORBIT_LENGTH,
                     rng_seed: int = DEFAULT_SEED) -> List[NormalityRow]:
    """
    Compare empirical pattern frequencies of x with estimated mu_h.

    The z-score divides the gap by the combined Monte Carlo standard error
    and binomial error of a length-N frequency. Irregular patterns are
    reported with mu_h = 0.
    """
    patterns = [Word.from_json(w) for w in patterns]
    if not patterns:
        return []
    graph = build_sofic_graph()
    batch = _run(samples, orbit_len, rng_seed)
    rows = []
    for w in patterns:
        if graph.is_regular(w):
            est = _summarise(w, *_window_hits(batch, w), batch.boundary_skips)
        else:
            est = MeasureEstimate(w, 0.0, 0.0, 0, batch.boundary_skips)
        freq = pattern_count(x, w, N) / N
        spread = math.sqrt(est.stderr ** 2 + max(est.estimate * (1 - est.estimate), 1e-12) / N)
        rows.append(NormalityRow(w, freq, est, (freq - est.estimate) / spread))
    return rows


@dataclass
class OrbitHistogram:
    """Positions of T^n(z) over a bins x bins grid of F, and the digit chi-square."""

    counts: np.ndarray
    digit_counts: Dict[GaussianInt, int]
    chi_square: float
    steps: int
    boundary_skips: int = 0

    def to_json(self) -> dict:
        return {
            "grid": self.counts.tolist(),
            "digit_counts": [[b.to_json(), c] for b, c in sorted(self.digit_counts.items(), key=lambda kv: (kv[0].norm(), kv[0].re, kv[0].im))],
            "chi_square": self.chi_square,
            "steps": self.steps,
            "boundary_skips": self.boundary_skips,
        }


def orbit_histogram(z: complex, N: int, bins: int = DEFAULT_HISTOGRAM_BINS,
                    level_one: Optional[Dict[GaussianInt, MeasureEstimate]] = None,
                    rng_seed: int = DEFAULT_SEED) -> OrbitHistogram:
    """
    Bin the float orbit T(z), ..., T^N(z) over F and compare its digit
    counts with the level-1 estimates by a chi-square distance.
    """
    if bins < 1:
        raise PreconditionViolated(f"bins must be positive, got {bins}")
    rng = np.random.default_rng(rng_seed)
    batch = float_orbits(np.array([complex(z)]), N, rng)
    pts = batch.points[0]
    counts, _, _ = np.histogram2d(pts.real, pts.imag, bins=bins, range=[[-0.5, 0.5], [-0.5, 0.5]])
    valid = batch.valid[0]
    digit_counts: Dict[GaussianInt, int] = {}
    for a_re, a_im in zip(batch.re[0][valid], batch.im[0][valid]):
        b = GaussianInt(int(a_re), int(a_im))
        digit_counts[b] = digit_counts.get(b, 0) + 1
    if level_one is None:
        level_one = estimate_level_one(rng_seed=rng_seed)
    total = int(valid.sum())
    chi = 0.0
    for b, est in level_one.items():
        expected = total * est.estimate
        if expected > 0:
            chi += (digit_counts.get(b, 0) - expected) ** 2 / expected
    return OrbitHistogram(counts.astype(np.int64), digit_counts, chi, N, batch.boundary_skips)
