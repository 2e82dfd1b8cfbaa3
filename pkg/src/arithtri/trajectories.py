"""Words realized as ray trajectories in two branching systems.

Angles are integer multiples of an elementary deflection; positions are
transverse lattice units.  Letter A deflects left (-1), B right (+1).

* Plain walk (Galton board): the step angle is the letter's deflection
  itself, so ``x_n = 2p - n``.
* Integrated walk: each passage changes the current angle by the deflection
  and the position accumulates the angle, giving ``x_n = 2q - n(n+1)/2``.

A link is the segment at step ``t`` identified by ``(t, x_{t-1}, theta_t)``.
Two trajectories share a link when these triples agree; in the integrated
walk they may reach the same link with different letters (e.g. ABBA and
BAAB on the final vertical link for n = 4).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .config import check_enum_cap
from .triangles import max_index, TriangleKind
from .words import Word, iter_words


class System(enum.Enum):
    PLAIN = "p"
    INTEGRATED = "q"

    @classmethod
    def parse(cls, text: str) -> "System":
        key = text.strip().lower()
        if key in ("p", "plain", "plainwalk", "linear"):
            return cls.PLAIN
        if key in ("q", "integrated", "integratedwalk", "nonlinear"):
            return cls.INTEGRATED
        raise ValueError(f"unknown ray system {text!r}")

    @property
    def triangle(self) -> TriangleKind:
        return TriangleKind.LINEAR if self is System.PLAIN else TriangleKind.NONLINEAR


@dataclass(frozen=True)
class TrajectoryPath:
    word: Word
    system: System
    angles: tuple[int, ...]
    positions: tuple[int, ...]

    @property
    def endpoint(self) -> int:
        return self.positions[-1]

    @property
    def endpoint_index(self) -> int:
        """Endpoint as a triangle index (p for the plain walk, q for the integrated one)."""
        return (self.endpoint + max_index(self.system.triangle, self.word.n)) // 2

    def links(self) -> list["Link"]:
        return [Link(t, self.positions[t - 1], self.angles[t - 1])
                for t in range(1, len(self.angles) + 1)]


@dataclass(frozen=True, order=True)
class Link:
    step: int
    start: int
    angle: int

    @property
    def end(self) -> int:
        return self.start + self.angle


@dataclass
class LinkReport:
    link: Link
    words: list[Word] = field(default_factory=list)
    labels: set[str] = field(default_factory=set)

    @property
    def ambiguous(self) -> bool:
        return len(self.labels) > 1

    @property
    def vertical(self) -> bool:
        return self.link.angle == 0


def realize_path(w: Word, system: System) -> TrajectoryPath:
    angles = []
    positions = [0]
    theta = 0
    for bit in w.bits():
        delta = 1 if bit else -1
        theta = delta if system is System.PLAIN else theta + delta
        angles.append(theta)
        positions.append(positions[-1] + theta)
    return TrajectoryPath(w, system, tuple(angles), tuple(positions))


def endpoint_index_to_lattice(index: int, n: int, system: System) -> int:
    return 2 * index - max_index(system.triangle, n)


def endpoint_classes(n: int, system: System, cap: int | None = None) -> dict[int, list[Word]]:
    """Group all words by the triangle index of their endpoint, ordered by index."""
    check_enum_cap(n, cap)
    classes: dict[int, list[Word]] = {}
    for w in iter_words(n):
        classes.setdefault(realize_path(w, system).endpoint_index, []).append(w)
    return dict(sorted(classes.items()))


def link_reports(n: int, system: System, cap: int | None = None) -> list[LinkReport]:
    """One report per distinct link, sorted by (step, start, angle)."""
    check_enum_cap(n, cap)
    reports: dict[Link, LinkReport] = {}
    for w in iter_words(n):
        path = realize_path(w, system)
        for link, letter in zip(path.links(), w.letters):
            rep = reports.get(link)
            if rep is None:
                rep = reports[link] = LinkReport(link)
            rep.words.append(w)
            rep.labels.add(letter)
    return [reports[k] for k in sorted(reports)]

