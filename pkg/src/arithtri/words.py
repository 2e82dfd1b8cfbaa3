"""Table algorithm: enumerate words of (a+b)^n and tally their indices.

A word of length ``n`` over ``{A, B}`` is the binary expansion of its ordinal
``m`` (A=0, B=1, most significant letter first).  Its p-index is the number of
B letters.  Its q-index is the quasi-binary sum: the letter at position ``k``
(1-based from the left) contributes ``l = n - k + 1`` when it is B.  For the
bit ``j`` of ``m`` (LSB is ``j = 0``) that weight is simply ``j + 1``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .config import check_enum_cap
from .triangles import Row, TriangleKind, max_index

_CHUNK = 1 << 20


class IndexKind(enum.Enum):
    P = "p"
    Q = "q"

    @classmethod
    def parse(cls, text: str) -> "IndexKind":
        key = text.strip().lower()
        if key in ("p", "linear", "ptype"):
            return cls.P
        if key in ("q", "nonlinear", "qtype"):
            return cls.Q
        raise ValueError(f"unknown index/class kind {text!r}")

    @property
    def triangle(self) -> TriangleKind:
        return TriangleKind.LINEAR if self is IndexKind.P else TriangleKind.NONLINEAR


@dataclass(frozen=True, order=True)
class Word:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"word length must be nonnegative, got {self.n}")
        if not 0 <= self.m < (1 << self.n):
            raise ValueError(
                f"ordinal {self.m} out of range for length {self.n}: valid interval is "
                f"[0, {(1 << self.n) - 1}]"
            )

    @classmethod
    def from_letters(cls, letters: str) -> "Word":
        letters = letters.upper()
        if set(letters) - {"A", "B"}:
            raise ValueError(f"words use only the letters A and B, got {letters!r}")
        m = int(letters.replace("A", "0").replace("B", "1"), 2) if letters else 0
        return cls(len(letters), m)

    @property
    def letters(self) -> str:
        if self.n == 0:
            return ""
        return format(self.m, f"0{self.n}b").replace("0", "A").replace("1", "B")

    def bits(self) -> list[int]:
        """Letters as 0/1, first letter first."""
        return [(self.m >> (self.n - k)) & 1 for k in range(1, self.n + 1)]

    def complement(self) -> "Word":
        return Word(self.n, ((1 << self.n) - 1) ^ self.m)

    def __str__(self) -> str:
        return self.letters


def word_from_ordinal(n: int, m: int) -> Word:
    return Word(n, m)


def p_index(w: Word) -> int:
    return w.m.bit_count()


def q_index(w: Word) -> int:
    total = 0
    m = w.m
    weight = 1
    while m:
        if m & 1:
            total += weight
        m >>= 1
        weight += 1
    return total


def q_index_reversed(w: Word) -> int:
    """q-index under the mirrored convention: letter ``k`` weighs ``k``."""
    return sum(k for k, bit in enumerate(w.bits(), start=1) if bit)


def index_of(w: Word, kind: IndexKind) -> int:
    return p_index(w) if kind is IndexKind.P else q_index(w)


def iter_words(n: int) -> Iterator[Word]:
    for m in range(1 << n):
        yield Word(n, m)


def _chunk_indices(ms: np.ndarray, n: int, kind: IndexKind) -> np.ndarray:
    out = np.zeros_like(ms)
    for j in range(n):
        bit = (ms >> j) & 1
        out += bit if kind is IndexKind.P else bit * (j + 1)
    return out


def histogram(n: int, index_fn: IndexKind, cap: int | None = None) -> Row:
    """Exhaustive tally of p- or q-indices over all ``2**n`` words.

    Work is split into ordinal chunks and summed, so the result does not
    depend on chunking.
    """
    check_enum_cap(n, cap)
    kind = index_fn.triangle
    size = max_index(kind, n) + 1
    counts = np.zeros(size, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        ms = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        counts += np.bincount(_chunk_indices(ms, n, index_fn), minlength=size)
    return Row(kind, n, tuple(int(c) for c in counts))


@dataclass(frozen=True)
class WordClass:
    index: int
    members: tuple[Word, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class GroupedExpression:
    n: int
    class_kind: IndexKind
    classes: tuple[WordClass, ...]

    @property
    def multiplicities(self) -> list[int]:
        return [c.multiplicity for c in self.classes]

    def __getitem__(self, index: int) -> WordClass:
        for c in self.classes:
            if c.index == index:
                return c
        raise KeyError(index)

    def render(self) -> str:
        """Polynomial-style rendering, e.g. ``aaa + aab + aba + 2(abb) + ...``."""
        terms = []
        for c in self.classes:
            rep = c.members[0].letters.lower()
            terms.append(rep if c.multiplicity == 1 else f"{c.multiplicity}({rep})")
        return " + ".join(terms)


def grouped_expression(n: int, class_kind: IndexKind, cap: int | None = None) -> GroupedExpression:
    """Partition the ``2**n`` words into classes of equal p- or q-index."""
    check_enum_cap(n, cap)
    buckets: dict[int, list[Word]] = {}
    for w in iter_words(n):
        buckets.setdefault(index_of(w, class_kind), []).append(w)
    classes = tuple(WordClass(i, tuple(buckets[i])) for i in sorted(buckets))
    return GroupedExpression(n, class_kind, classes)
