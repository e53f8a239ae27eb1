"""Words over [n]: parsing, formatting, decoding to graphs and verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from twelverep.errors import (
    AlphabetMismatch,
    IncompleteAlphabet,
    LetterOutOfRange,
    ParseError,
)
from twelverep.graph import LabeledGraph


@dataclass(frozen=True)
class Word:
    """A word over [n] in which every letter of [n] occurs at least once."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise LetterOutOfRange(f"alphabet size must be a positive integer, got {self.n!r}")
        for x in letters:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ParseError(f"letter {x!r} is not an integer")
            if not 1 <= x <= self.n:
                raise LetterOutOfRange(f"letter {x} outside [1, {self.n}]")
        missing = set(range(1, self.n + 1)) - set(letters)
        if missing:
            raise IncompleteAlphabet(f"letters missing from the word: {sorted(missing)}")

    @classmethod
    def of(cls, letters: Iterable[int], n: Optional[int] = None) -> "Word":
        letters = tuple(letters)
        return cls(letters, max(letters, default=0) if n is None else n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, pos: int) -> int:
        """1-based access, matching how positions are counted everywhere else."""
        if not 1 <= pos <= len(self.letters):
            raise IndexError(pos)
        return self.letters[pos - 1]

    def count(self, letter: int) -> int:
        return self.letters.count(letter)

    def max_occurrences(self) -> int:
        counts = [0] * (self.n + 1)
        for x in self.letters:
            counts[x] += 1
        return max(counts)

    def is_permutation(self) -> bool:
        return len(self.letters) == self.n

    def __str__(self) -> str:
        return format_word(self)


def format_word(w: Word, compact: Optional[bool] = None) -> str:
    """Digit string when the alphabet fits in single digits, space-separated otherwise."""
    if compact is None:
        compact = w.n <= 9
    if compact and w.n <= 9:
        return "".join(map(str, w.letters))
    return " ".join(map(str, w.letters))


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """Parse whitespace-separated integers, or a bare digit string such as ``8753532847616421``.

    A single token longer than one character is read digit by digit unless an
    alphabet size above 9 is given explicitly.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty word")
    if len(tokens) == 1 and len(tokens[0]) > 1 and (n is None or n <= 9):
        token = tokens[0]
        if not token.isdigit() or not token.isascii():
            raise ParseError(f"not a digit string: {token!r}")
        letters = [int(ch) for ch in token]
    else:
        letters = []
        for tok in tokens:
            try:
                letters.append(int(tok, 10))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}") from None
    for x in letters:
        if x < 1 or (n is not None and x > n):
            raise LetterOutOfRange(f"letter {x} outside [1, {n if n is not None else 'n'}]")
    return Word.of(letters, n)


@dataclass(frozen=True)
class OccurrenceIndex:
    """Ascending 1-based positions of each letter; ``positions[0]`` is unused."""

    positions: tuple[tuple[int, ...], ...]

    def of(self, letter: int) -> tuple[int, ...]:
        return self.positions[letter]

    def count(self, letter: int) -> int:
        return len(self.positions[letter])

    def first(self, letter: int) -> int:
        return self.positions[letter][0]

    def last(self, letter: int) -> int:
        return self.positions[letter][-1]


def occurrence_index(w: Word) -> OccurrenceIndex:
    pos: list[list[int]] = [[] for _ in range(w.n + 1)]
    for p, x in enumerate(w.letters, start=1):
        pos[x].append(p)
    return OccurrenceIndex(tuple(tuple(p) for p in pos))


def decode(w: Word) -> LabeledGraph:
    """The graph 12-represented by ``w``.

    For i < j, ij is an edge iff no i occurs before a j, i.e. last(j) < first(i).
    """
    first = [0] * (w.n + 1)
    last = [0] * (w.n + 1)
    for p, x in enumerate(w.letters, start=1):
        if not first[x]:
            first[x] = p
        last[x] = p
    edges = [
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(i + 1, w.n + 1)
        if last[j] < first[i]
    ]
    return LabeledGraph(w.n, tuple(edges))


def verify(w: Word, g: LabeledGraph) -> bool:
    if w.n != g.n:
        raise AlphabetMismatch(f"word is over [{w.n}] but graph has {g.n} vertices")
    return decode(w).edges == g.edges
