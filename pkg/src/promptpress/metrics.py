"""Scoring primitives for compression trials.

Everything in this module is a pure function over immutable inputs: byte
histograms, Shannon entropy, compression ratio, Levenshtein edit distance,
cosine similarity, the two combined effectiveness scores (exact and
semantic), cohort normalization, and the effective-token-limit projection.
All floating-point math is done in 64-bit; rounding happens only at
serialization time, never here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DegenerateCohort,
    DimensionMismatch,
    EmptyInput,
    InvalidRatio,
    ZeroVector,
)

# CR values are clamped into [CR_CLAMP, 1 - CR_CLAMP] before the log in the
# exact-reconstruction score; log(cr) is undefined for cr <= 0 and 0 for cr = 1.
CR_CLAMP = 1e-6

# Default floor for normalized edit distance inside the exact-reconstruction
# score; keeps lossless methods (ED = 0) finite and dominant.
DEFAULT_ED_EPSILON = 1e-3

# Strings shorter than this are scored with the plain two-row loop; longer
# ones go through the vectorized row scan (same recurrence, same results).
_VECTOR_THRESHOLD = 64


@dataclass(frozen=True)
class ByteDistribution:
    """Occurrence counts per byte value plus the total byte count."""

    counts: Mapping[int, int]
    total: int


@dataclass(frozen=True)
class EntropyScore:
    """Shannon entropy of a byte distribution.

    ``raw_bits`` is bits per symbol; ``normalized`` divides by
    log2(distinct_symbols) and is defined as 0.0 for single-symbol inputs.
    """

    raw_bits: float
    normalized: float
    distinct_symbols: int


@dataclass(frozen=True)
class CompressionRatio:
    """1 - compressed/original byte counts; negative means expansion."""

    value: float
    original_bytes: int
    compressed_bytes: int


@dataclass(frozen=True)
class EditDistance:
    """Levenshtein distance, raw and normalized by the longer length."""

    raw: int
    normalized: float


@dataclass(frozen=True)
class CosineScore:
    """Cosine similarity in [-1, 1] and the corresponding angle in degrees."""

    value: float
    angle_degrees: float


@dataclass(frozen=True)
class EreScore:
    """Exact-reconstruction effectiveness raw value plus clamp/floor flags."""

    value: float
    cr_clamped: bool
    ed_floored: bool


@dataclass(frozen=True)
class MetricVector:
    """The full per-trial score set.

    ``entropy`` is computed over the compressed bytes; ``ed`` and ``cs``
    compare the original text with the decompressed text. ``ere_raw`` and
    ``sre_raw`` stay unnormalized here; cohort normalization is applied only
    when a report is assembled.
    """

    entropy: EntropyScore
    cr: CompressionRatio
    ed: EditDistance
    cs: CosineScore
    ere_raw: float
    sre_raw: float


def byte_distribution(data: bytes) -> ByteDistribution:
    """Tally byte occurrences. Rejects empty input."""
    if len(data) == 0:
        raise EmptyInput("cannot build a byte distribution from empty data")
    counts: dict[int, int] = {}
    for b in data:
        counts[b] = counts.get(b, 0) + 1
    return ByteDistribution(counts=counts, total=len(data))


def shannon_entropy(dist: ByteDistribution) -> EntropyScore:
    """Entropy of a byte distribution in bits per symbol.

    raw_bits = -sum(P(x) * log2(P(x))) with P(x) = n_x / N. The normalized
    value divides by log2 of the distinct-symbol count so a uniform
    distribution scores 1.0; single-symbol inputs score 0.0 on both.
    """
    total = dist.total
    distinct = sum(1 for n in dist.counts.values() if n > 0)
    raw = 0.0
    for n in dist.counts.values():
        if n <= 0:
            continue
        p = n / total
        raw -= p * math.log2(p)
    if distinct < 2:
        return EntropyScore(raw_bits=0.0, normalized=0.0, distinct_symbols=distinct)
    return EntropyScore(
        raw_bits=raw,
        normalized=raw / math.log2(distinct),
        distinct_symbols=distinct,
    )


def compression_ratio(original_len: int, compressed_len: int) -> CompressionRatio:
    """1 - compressed/original. Both lengths must be positive."""
    if original_len <= 0:
        raise EmptyInput("original length must be positive")
    if compressed_len <= 0:
        raise EmptyInput("compressed length must be at least 1 byte")
    return CompressionRatio(
        value=1.0 - compressed_len / original_len,
        original_bytes=original_len,
        compressed_bytes=compressed_len,
    )


def _levenshtein_small(a: str, b: str) -> int:
    la, lb = len(a), len(b)
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        ca = a[i - 1]
        cur = [i] + [0] * lb
        for j in range(1, lb + 1):
            best = prev[j] + 1
            y = cur[j - 1] + 1
            if y < best:
                best = y
            z = prev[j - 1] + (ca != b[j - 1])
            if z < best:
                best = z
            cur[j] = best
        prev = cur
    return prev[lb]


def _levenshtein_vectorized(a: str, b: str) -> int:
    # Row-at-a-time Wagner-Fischer. The delete/substitute terms are plain
    # elementwise minima against the previous row; the insert term (a
    # left-neighbor dependency) is closed with a min-plus prefix scan:
    # row[j] = min_k<=j (cand[k] + (j - k)).
    s = np.frombuffer(a.encode("utf-32-le"), dtype=np.uint32)
    t = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    n = len(t)
    idx = np.arange(n + 1, dtype=np.int64)
    prev = idx.copy()
    for i in range(1, len(s) + 1):
        cost = (t != s[i - 1]).astype(np.int64)
        cand = np.empty(n + 1, dtype=np.int64)
        cand[0] = i
        np.minimum(prev[1:] + 1, prev[:-1] + cost, out=cand[1:])
        running = np.minimum.accumulate(cand - idx)
        prev = np.minimum(cand, running + idx)
    return int(prev[n])


def edit_distance(original: str, reconstructed: str) -> EditDistance:
    """Levenshtein distance with unit insert/delete/substitute costs.

    Normalized by max(len(original), len(reconstructed)); two empty strings
    normalize to 0.0.
    """
    la, lb = len(original), len(reconstructed)
    if la == 0 or lb == 0:
        raw = la or lb
    elif original == reconstructed:
        raw = 0
    elif max(la, lb) <= _VECTOR_THRESHOLD:
        raw = _levenshtein_small(original, reconstructed)
    else:
        raw = _levenshtein_vectorized(original, reconstructed)
    longest = max(la, lb)
    return EditDistance(raw=raw, normalized=(raw / longest) if longest else 0.0)


def cosine_similarity(a: Sequence[float], b: Sequence[float]) -> CosineScore:
    """Cosine of the angle between two vectors, clamped into [-1, 1]."""
    if len(a) != len(b) or len(a) == 0:
        raise DimensionMismatch(f"vector dimensions differ: {len(a)} vs {len(b)}")
    dot = 0.0
    mag_a = 0.0
    mag_b = 0.0
    for x, y in zip(a, b):
        dot += x * y
        mag_a += x * x
        mag_b += y * y
    if mag_a == 0.0 or mag_b == 0.0:
        raise ZeroVector("cosine similarity is undefined for zero-magnitude vectors")
    value = dot / (math.sqrt(mag_a) * math.sqrt(mag_b))
    value = max(-1.0, min(1.0, value))
    return CosineScore(value=value, angle_degrees=math.degrees(math.acos(value)))


def ere_raw(
    cr: CompressionRatio,
    ed: EditDistance,
    epsilon: float = DEFAULT_ED_EPSILON,
) -> EreScore:
    """Exact-reconstruction effectiveness, strictly positive.

    -1 / (ln(clamp(cr, CR_CLAMP, 1 - CR_CLAMP)) * max(ed_norm, epsilon)).
    The natural-log factor is negative for any in-range ratio, so the sign
    flip yields a positive score that grows with the ratio and shrinks with
    the edit distance. Out-of-range ratios (expansion, or ratios at/above 1)
    are clamped and flagged rather than rejected.
    """
    clamped = min(max(cr.value, CR_CLAMP), 1.0 - CR_CLAMP)
    floored = max(ed.normalized, epsilon)
    return EreScore(
        value=-1.0 / (math.log(clamped) * floored),
        cr_clamped=clamped != cr.value,
        ed_floored=floored != ed.normalized,
    )


def sre_raw(cr: CompressionRatio, cs: CosineScore) -> float:
    """Semantic-reconstruction effectiveness: compression ratio x cosine."""
    return cr.value * cs.value


def cohort_normalize(raws: Sequence[float], mode: str = "max-divide") -> list[float]:
    """Rescale a cohort of raw scores into [0, 1].

    max-divide puts the top scorer at exactly 1.0 and preserves ordering;
    min-max maps the range onto [0, 1] and sends constant cohorts to 1.0.
    """
    if not raws:
        raise DegenerateCohort("cannot normalize an empty cohort")
    if mode == "max-divide":
        top = max(raws)
        if top <= 0:
            raise DegenerateCohort("max-divide needs a positive cohort maximum")
        return [v / top for v in raws]
    if mode == "min-max":
        lo, hi = min(raws), max(raws)
        if hi == lo:
            return [1.0 for _ in raws]
        return [(v - lo) / (hi - lo) for v in raws]
    raise DegenerateCohort(f"unknown normalization mode: {mode!r}")


def effective_token_limit(base_limit: int, avg_cr: float) -> int:
    """Nominal token limit scaled by 1/(1 - avg_cr), rounded down."""
    if not 0.0 <= avg_cr < 1.0:
        raise InvalidRatio(f"average compression ratio out of [0, 1): {avg_cr}")
    return math.floor(base_limit / (1.0 - avg_cr))
