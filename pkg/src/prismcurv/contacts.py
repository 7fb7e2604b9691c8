"""Contact sequences: parsing, canonicalization, windowing and time binning.

A contact sequence is a list of undirected node-pair contacts with a
timestamp.  Text form is one contact per line, whitespace separated:

    t i j

with t a non-negative number and i, j non-negative integer node ids.
Trailing extra columns (metadata in some public datasets) are ignored,
lines starting with '#' and blank lines are skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, ParseError, SelfLoopError

Number = int | float


def _check_time(t: Number) -> Number:
    if isinstance(t, bool) or not isinstance(t, (int, float)):
        raise DomainError(f"timestamp must be a number, got {t!r}")
    if not math.isfinite(t):
        raise DomainError(f"timestamp must be finite, got {t!r}")
    if t < 0:
        raise DomainError(f"timestamp must be non-negative, got {t!r}")
    return t


@dataclass(frozen=True, order=True)
class ContactEvent:
    """One undirected contact, canonicalized so that i < j.

    Field order (t, i, j) makes the natural sort order chronological.
    """

    t: Number
    i: int
    j: int

    def __post_init__(self):
        _check_time(self.t)
        for node in (self.i, self.j):
            if isinstance(node, bool) or not isinstance(node, int):
                raise DomainError(f"node id must be an integer, got {node!r}")
            if node < 0:
                raise DomainError(f"node id must be non-negative, got {node!r}")
        if self.i == self.j:
            raise SelfLoopError(f"contact joins node {self.i} to itself")
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)


def _fmt_time(t: Number) -> str:
    return str(t) if isinstance(t, int) else repr(t)


@dataclass(frozen=True)
class ContactSequence:
    """Deduplicated contacts sorted by (t, i, j)."""

    events: tuple[ContactEvent, ...]

    @classmethod
    def from_events(cls, events: Iterable[ContactEvent]) -> "ContactSequence":
        return cls(tuple(sorted(set(events))))

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[ContactEvent]:
        return iter(self.events)

    @cached_property
    def nodes(self) -> frozenset[int]:
        return frozenset(v for e in self.events for v in (e.i, e.j))

    @cached_property
    def active_times(self) -> tuple[Number, ...]:
        return tuple(sorted({e.t for e in self.events}))

    def node_times(self, v: int) -> tuple[Number, ...]:
        """Sorted distinct times at which node v has at least one contact."""
        return tuple(sorted({e.t for e in self.events if v in (e.i, e.j)}))

    def window(self, t_start: Number, t_end: Number) -> "ContactSequence":
        """Keep contacts with t_start <= t < t_end, shifted to start at 0."""
        for bound in (t_start, t_end):
            if not isinstance(bound, (int, float)) or not math.isfinite(bound):
                raise DomainError(f"window bound must be finite, got {bound!r}")
        if t_start >= t_end:
            raise DomainError(f"empty window [{t_start}, {t_end})")
        kept = (
            ContactEvent(e.t - t_start, e.i, e.j)
            for e in self.events
            if t_start <= e.t < t_end
        )
        return ContactSequence.from_events(kept)

    def bin(self, width: Number) -> "ContactSequence":
        """Coarse-grain times into integer slices floor(t / width)."""
        if not isinstance(width, (int, float)) or not math.isfinite(width) or width <= 0:
            raise DomainError(f"bin width must be positive, got {width!r}")
        binned = (
            ContactEvent(int(math.floor(e.t / width)), e.i, e.j) for e in self.events
        )
        return ContactSequence.from_events(binned)

    def serialize(self) -> str:
        """Inverse of parse_contacts on canonicalized sequences."""
        return "".join(f"{_fmt_time(e.t)} {e.i} {e.j}\n" for e in self.events)


def _parse_number(tok: str) -> Number:
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        raise ValueError(f"not a number: {tok!r}") from None


def parse_contacts(text: str | Iterable[str]) -> ContactSequence:
    """Parse contact lines into a canonical ContactSequence.

    Raises ParseError for malformed lines, SelfLoopError / DomainError
    (annotated with the line number) for structurally invalid contacts.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    events = []
    for n, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 3:
            raise ParseError(f"expected 't i j', got {line!r}", line=n)
        try:
            t = _parse_number(parts[0])
            i = int(parts[1])
            j = int(parts[2])
        except ValueError as exc:
            raise ParseError(str(exc), line=n) from None
        try:
            events.append(ContactEvent(t, i, j))
        except DomainError as exc:
            raise type(exc)(f"line {n}: {exc}") from None
    return ContactSequence.from_events(events)
