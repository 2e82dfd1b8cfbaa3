"""Exact linear and nonlinear arithmetic triangles, their word tables and ray systems."""

from .config import EnumerationCapError, Limits
from .distributions import (
    CentralInterval,
    DistributionSummary,
    EnvelopeComparison,
    ExponentEstimate,
    compare_envelopes,
    cumulative_envelope,
    distribution,
    estimate_exponent,
    half_mass_interval,
)
from .trajectories import Link, LinkReport, System, TrajectoryPath, endpoint_classes, link_reports, realize_path
from .triangles import Row, TriangleKind, coefficient, nonlinear_row, pascal_row, row, row_iterator, triangle
from .words import (
    GroupedExpression,
    IndexKind,
    Word,
    grouped_expression,
    histogram,
    p_index,
    q_index,
    word_from_ordinal,
)

__version__ = "0.1.0"
