"""Shortest 12-representants by adjacent swaps and merges.

The transformation runs two sweeps over a word in which every letter occurs
at most twice. The descending sweep (pivot n down to 1) pushes the first copy
of a doubled pivot to the right past smaller letters; the ascending sweep
(pivot 1 up to n) pushes the second copy to the left past larger letters.
Whenever the two copies meet, one is dropped. Each individual move is one of
the graph-preserving rewrites ``apply_rewrite_a`` / ``_b`` / ``_c``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from twelverep.errors import PreconditionViolated, TooManyOccurrences
from twelverep.words import Word, format_word


class Phase(enum.Enum):
    DESCENDING = "descending"
    ASCENDING = "ascending"


class TraceLevel(enum.Enum):
    NONE = "none"
    LENGTHS = "lengths"
    FULL = "full"


@dataclass(frozen=True)
class ShortenStep:
    """One move of the pivot letter.

    ``positions`` is ``(from, to)`` for a swap of adjacent cells and
    ``(position,)`` for the removal of a duplicate; both 1-based and relative
    to the word just before the step.
    """

    phase: Phase
    pivot: int
    action: str
    positions: tuple[int, ...]
    word_after: Optional[Word] = None

    def to_dict(self) -> dict:
        d = {
            "phase": self.phase.value,
            "pivot": self.pivot,
            "action": self.action,
            "position": self.positions[0],
        }
        if self.action == "swap":
            d["to"] = self.positions[1]
        return d


@dataclass(frozen=True)
class TraceRow:
    """Snapshot taken at the start of every iteration whose pivot occurs twice."""

    phase: Phase
    pivot: int
    length: int
    word: Optional[Word] = None

    def to_dict(self) -> dict:
        return {
            "phase": self.phase.value,
            "pivot": self.pivot,
            "length": self.length,
            "word": None if self.word is None else format_word(self.word),
        }


@dataclass
class ShortenTrace:
    input: Word
    output: Optional[Word] = None
    level: TraceLevel = TraceLevel.LENGTHS
    steps: list[ShortenStep] = field(default_factory=list)
    rows: list[TraceRow] = field(default_factory=list)
    after_descending: Optional[Word] = None

    @property
    def lengths(self) -> list[int]:
        return [r.length for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "input": format_word(self.input),
            "output": None if self.output is None else format_word(self.output),
            "level": self.level.value,
            "after_descending": None if self.after_descending is None else format_word(self.after_descending),
            "rows": [r.to_dict() for r in self.rows],
            "steps": [s.to_dict() for s in self.steps],
        }


def _check_at_most_twice(w: Word) -> list[int]:
    counts = [0] * (w.n + 1)
    for x in w.letters:
        counts[x] += 1
    over = [x for x in range(1, w.n + 1) if counts[x] > 2]
    if over:
        raise TooManyOccurrences(f"letters occurring three or more times: {over}")
    return counts


def shorten_with_trace(w: Word, trace_level: TraceLevel = TraceLevel.LENGTHS) -> tuple[Word, ShortenTrace]:
    counts = _check_at_most_twice(w)
    n = w.n
    s = list(w.letters)
    trace = ShortenTrace(input=w, level=trace_level)
    full = trace_level is TraceLevel.FULL
    keep_rows = trace_level is not TraceLevel.NONE

    def snap() -> Word:
        return Word(tuple(s), n)

    def row(phase: Phase, pivot: int) -> None:
        if keep_rows:
            trace.rows.append(TraceRow(phase, pivot, len(s), snap() if full else None))

    def step(phase: Phase, pivot: int, action: str, *positions: int) -> None:
        trace.steps.append(ShortenStep(phase, pivot, action, positions, snap() if full else None))

    # positions below are 0-based list indices; steps record them 1-based
    for i in range(n, 0, -1):
        if counts[i] != 2:
            continue
        row(Phase.DESCENDING, i)
        p = s.index(i)
        while s[p] > s[p + 1]:
            s[p], s[p + 1] = s[p + 1], s[p]
            step(Phase.DESCENDING, i, "swap", p + 1, p + 2)
            p += 1
        if s[p] == s[p + 1]:
            del s[p]
            counts[i] = 1
            step(Phase.DESCENDING, i, "remove", p + 1)
    trace.after_descending = snap()

    for j in range(1, n + 1):
        if counts[j] != 2:
            continue
        row(Phase.ASCENDING, j)
        q = len(s) - 1 - s[::-1].index(j)
        while s[q] < s[q - 1]:
            s[q], s[q - 1] = s[q - 1], s[q]
            step(Phase.ASCENDING, j, "swap", q + 1, q)
            q -= 1
        if s[q] == s[q - 1]:
            del s[q]
            counts[j] = 1
            step(Phase.ASCENDING, j, "remove", q + 1)

    out = snap()
    trace.output = out
    return out, trace


def shorten(w: Word) -> Word:
    """Return a shortest 12-representant of the graph represented by ``w``.

    ``w`` must use every letter at most twice. The result has length n + b
    where b is the number of bad vertices of the decoded graph.
    """
    return shorten_with_trace(w, TraceLevel.NONE)[0]


def replay(w: Word, steps: list[ShortenStep]) -> Word:
    s = list(w.letters)
    for st in steps:
        if st.action == "swap":
            a, b = st.positions
            if abs(a - b) != 1:
                raise PreconditionViolated(f"swap of non-adjacent positions {st.positions}")
            s[a - 1], s[b - 1] = s[b - 1], s[a - 1]
        elif st.action == "remove":
            (p,) = st.positions
            del s[p - 1]
        else:
            raise PreconditionViolated(f"unknown action {st.action!r}")
    return Word(tuple(s), w.n)


def first_successor_increases(w: Word) -> bool:
    """True iff every doubled letter is followed, at its first copy, by a larger letter."""
    seen: set[int] = set()
    doubled = {x for x in set(w.letters) if w.count(x) == 2}
    s = w.letters
    for p, x in enumerate(s):
        if x in doubled and x not in seen:
            seen.add(x)
            if p + 1 >= len(s) or not s[p + 1] > x:
                return False
    return True


def second_predecessor_decreases(w: Word) -> bool:
    """True iff every doubled letter is preceded, at its second copy, by a smaller letter."""
    seen: set[int] = set()
    s = w.letters
    for p, x in enumerate(s):
        if x in seen:
            if p == 0 or not s[p - 1] < x:
                return False
        seen.add(x)
    return True


def _two_positions(w: Word, letter: int) -> tuple[int, int]:
    where = [p for p, x in enumerate(w.letters, start=1) if x == letter]
    if len(where) != 2:
        raise PreconditionViolated(f"letter {letter} occurs {len(where)} times, not twice")
    return where[0], where[1]


def _swapped(w: Word, p: int, q: int) -> Word:
    s = list(w.letters)
    s[p - 1], s[q - 1] = s[q - 1], s[p - 1]
    return Word(tuple(s), w.n)


def apply_rewrite_a(w: Word, first_pos_of_i: int) -> Word:
    """``W1 i j W2 i W3 -> W1 j i W2 i W3`` when j < i and ``first_pos_of_i`` holds the first i."""
    p = first_pos_of_i
    if not 1 <= p < len(w):
        raise PreconditionViolated(f"position {p} has no successor")
    i = w[p]
    first, _ = _two_positions(w, i)
    if first != p:
        raise PreconditionViolated(f"position {p} is not the first occurrence of {i}")
    if not w[p + 1] < i:
        raise PreconditionViolated(f"letter after position {p} is not smaller than {i}")
    return _swapped(w, p, p + 1)


def apply_rewrite_b(w: Word, second_pos_of_i: int) -> Word:
    """``W1 i W2 j i W3 -> W1 i W2 i j W3`` when j > i and ``second_pos_of_i`` holds the second i."""
    q = second_pos_of_i
    if not 1 < q <= len(w):
        raise PreconditionViolated(f"position {q} has no predecessor")
    i = w[q]
    _, second = _two_positions(w, i)
    if second != q:
        raise PreconditionViolated(f"position {q} is not the second occurrence of {i}")
    if not w[q - 1] > i:
        raise PreconditionViolated(f"letter before position {q} is not larger than {i}")
    return _swapped(w, q - 1, q)


def apply_rewrite_c(w: Word, pos: int) -> Word:
    """``W1 i i W2 -> W1 i W2``; ``pos`` is the first of the two adjacent copies."""
    if not 1 <= pos < len(w) or w[pos] != w[pos + 1]:
        raise PreconditionViolated(f"positions {pos} and {pos + 1} do not hold equal letters")
    s = list(w.letters)
    del s[pos - 1]
    return Word(tuple(s), w.n)
