"""Probabilities, cumulative envelopes and half-mass intervals of triangle rows.

Every quantity is derived from the exact integer row; floats appear only at
the last step (Python's ``int / int`` is correctly rounded, so a probability
is never formed from a pre-rounded numerator).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

import numpy as np

from .triangles import Row, TriangleKind, max_index, nonlinear_row, pascal_row, row as make_row


@dataclass(frozen=True)
class DistributionSummary:
    kind: TriangleKind
    n: int
    probabilities: tuple[float, ...]
    mean: float
    variance: float
    modes: tuple[int, ...]


@dataclass(frozen=True)
class CentralInterval:
    lo: int
    hi: int
    mass: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class ExponentEstimate:
    kind: TriangleKind
    n: int
    base_length: int
    interval_width: int
    k: float
    # width / sqrt(n) for the linear triangle, width / n for the nonlinear one
    scale_coefficient: float


@dataclass(frozen=True)
class EnvelopeComparison:
    n: int
    rescale_factor: float
    sup_distance: float
    mean_abs_distance: float
    grid: tuple[float, ...]
    linear_envelope: tuple[float, ...]
    nonlinear_envelope: tuple[float, ...]


def _require_n(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be at least {least}, got {n}")


def exact_moments(r: Row) -> tuple[Fraction, Fraction]:
    """Mean and variance of the index under the row's normalized weights, exactly."""
    total = r.total
    s1 = sum(i * c for i, c in enumerate(r.coeffs))
    s2 = sum(i * i * c for i, c in enumerate(r.coeffs))
    mean = Fraction(s1, total)
    return mean, Fraction(s2, total) - mean * mean


def closed_form_moments(kind: TriangleKind, n: int) -> tuple[Fraction, Fraction]:
    if kind is TriangleKind.LINEAR:
        return Fraction(n, 2), Fraction(n, 4)
    return Fraction(n * (n + 1), 4), Fraction(n * (n + 1) * (2 * n + 1), 24)


def summarize(r: Row) -> DistributionSummary:
    denom = 1 << r.n
    probs = tuple(c / denom for c in r.coeffs)
    mean, var = exact_moments(r)
    top = max(r.coeffs)
    modes = tuple(i for i, c in enumerate(r.coeffs) if c == top)
    return DistributionSummary(r.kind, r.n, probs, float(mean), float(var), modes)


def distribution(kind: TriangleKind, n: int) -> DistributionSummary:
    _require_n(n, 1)
    return summarize(make_row(kind, n))


def envelope_of(r: Row) -> tuple[float, ...]:
    denom = 1 << r.n
    return tuple(s / denom for s in accumulate(r.coeffs))


def cumulative_envelope(kind: TriangleKind, n: int) -> tuple[float, ...]:
    _require_n(n, 1)
    return envelope_of(make_row(kind, n))


def half_mass_interval(r: Row) -> CentralInterval:
    """Smallest window centred on the row with exact mass at least ``2**(n-1)``.

    Even-length rows start from the two middle entries, odd-length rows from
    the single middle entry; the window then grows one index per side.
    """
    _require_n(r.n, 1)
    half = 1 << (r.n - 1)
    lo = r.last // 2
    hi = r.last - lo
    mass = sum(r.coeffs[lo:hi + 1])
    while mass < half:
        lo -= 1
        hi += 1
        mass += r.coeffs[lo] + r.coeffs[hi]
    return CentralInterval(lo, hi, mass)


def estimate_exponent(kind: TriangleKind, n: int) -> ExponentEstimate:
    _require_n(n, 4)
    width = half_mass_interval(make_row(kind, n)).width
    base = max_index(kind, n)
    k = math.log(width) / math.log(base)
    scale = width / math.sqrt(n) if kind is TriangleKind.LINEAR else width / n
    return ExponentEstimate(kind, n, base, width, k, scale)


def compare_envelopes(n: int) -> EnvelopeComparison:
    """Overlay the nonlinear sum envelope on the linear one after abscissa rescaling.

    The prefix sum through index ``i`` is the mass up to the right edge
    ``i + 1/2`` of that index's unit bin.  The nonlinear bin edges are divided
    by ``q_max / p_max = (n + 1) / 2`` and the resulting curve is linearly
    interpolated at the linear bin edges ``p + 1/2``.  Beyond its last edge
    the nonlinear curve is 1.
    """
    _require_n(n, 2)
    factor = max_index(TriangleKind.NONLINEAR, n) / max_index(TriangleKind.LINEAR, n)
    lin = np.array(envelope_of(pascal_row(n)))
    nonlin = np.array(envelope_of(nonlinear_row(n)))
    grid = np.arange(n + 1) + 0.5
    nonlin_edges = (np.arange(nonlin.size) + 0.5) / factor
    resampled = np.interp(grid, nonlin_edges, nonlin, left=0.0, right=1.0)
    diff = np.abs(lin - resampled)
    return EnvelopeComparison(
        n=n,
        rescale_factor=factor,
        sup_distance=float(diff.max()),
        mean_abs_distance=float(diff.mean()),
        grid=tuple(float(g) for g in grid),
        linear_envelope=tuple(float(v) for v in lin),
        nonlinear_envelope=tuple(float(v) for v in resampled),
    )
