"""Rows of the linear (Pascal) and nonlinear arithmetic triangles.

The linear triangle is built with ``C(n, p) = C(n-1, p-1) + C(n-1, p)``, the
nonlinear one with ``[n, q] = [n-1, q] + [n-1, q-n]``; out-of-range terms are
zero in both.  ``[n, q]`` counts the subsets of ``{1, ..., n}`` whose elements
sum to ``q`` (partitions of ``q`` into distinct parts no larger than ``n``).

All coefficients are Python ints, so rows stay exact at any ``n``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .config import Limits


class TriangleKind(enum.Enum):
    LINEAR = "linear"
    NONLINEAR = "nonlinear"

    @classmethod
    def parse(cls, text: str) -> "TriangleKind":
        """Accept ``linear``/``nonlinear`` as well as the ``p``/``q`` shorthands."""
        key = text.strip().lower()
        aliases = {"linear": cls.LINEAR, "p": cls.LINEAR,
                   "nonlinear": cls.NONLINEAR, "q": cls.NONLINEAR}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown triangle kind {text!r}") from None


def max_index(kind: TriangleKind, n: int) -> int:
    """Largest valid index of row ``n``: ``n`` or ``n(n+1)/2``."""
    if kind is TriangleKind.LINEAR:
        return n
    return n * (n + 1) // 2


@dataclass(frozen=True)
class Row:
    kind: TriangleKind
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != max_index(self.kind, self.n) + 1:
            raise ValueError(
                f"{self.kind.value} row {self.n} must have "
                f"{max_index(self.kind, self.n) + 1} entries, got {len(self.coeffs)}"
            )

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def last(self) -> int:
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        return sum(self.coeffs)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


def _next_pascal(prev: list[int]) -> list[int]:
    return [a + b for a, b in zip(prev + [0], [0] + prev)]


def _next_nonlinear(prev: list[int], n: int) -> list[int]:
    # row n has n more entries than row n-1
    width = len(prev) + n
    out = prev + [0] * n
    for q in range(n, width):
        out[q] += prev[q - n]
    return out


def _step(kind: TriangleKind, prev: list[int], n: int) -> list[int]:
    if kind is TriangleKind.LINEAR:
        return _next_pascal(prev)
    return _next_nonlinear(prev, n)


def row_iterator(kind: TriangleKind, n_max: int) -> Iterator[Row]:
    """Yield rows ``0 .. n_max`` of one triangle, each built from its predecessor."""
    _check_n(n_max)
    cur = [1]
    yield Row(kind, 0, tuple(cur))
    for n in range(1, n_max + 1):
        cur = _step(kind, cur, n)
        yield Row(kind, n, tuple(cur))


def _build(kind: TriangleKind, n: int) -> Row:
    _check_n(n)
    cur = [1]
    for k in range(1, n + 1):
        cur = _step(kind, cur, k)
    return Row(kind, n, tuple(cur))


def pascal_row(n: int) -> Row:
    return _build(TriangleKind.LINEAR, n)


def nonlinear_row(n: int) -> Row:
    return _build(TriangleKind.NONLINEAR, n)


def row(kind: TriangleKind, n: int) -> Row:
    return _build(kind, n)


def coefficient(kind: TriangleKind, n: int, index: int) -> int:
    """Entry ``index`` of row ``n``; raises IndexError outside ``[0, max_index]``."""
    _check_n(n)
    hi = max_index(kind, n)
    if not 0 <= index <= hi:
        raise IndexError(
            f"index {index} out of range for {kind.value} row {n}: valid interval is [0, {hi}]"
        )
    return _build(kind, n).coeffs[index]


def triangle(kind: TriangleKind, n_max: int, limit: int | None = None) -> list[Row]:
    """Materialize rows ``0 .. n_max``. Refuses ``n_max`` above ``limit`` (default 64)."""
    if limit is None:
        limit = Limits().triangle_cap
    if n_max > limit:
        raise ValueError(
            f"full triangle up to n={n_max} exceeds the materialization limit {limit}; "
            "use row_iterator for large n"
        )
    return list(row_iterator(kind, n_max))
