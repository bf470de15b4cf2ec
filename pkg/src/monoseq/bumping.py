"""Schensted double bumping: recording sequences and colour words.

Running Schensted's bumping algorithm for ascending subsequences and its
dual for descending subsequences simultaneously yields a single increasing
"recording sequence" whose entries carry an overline (ascending frontier),
an underline (descending frontier), or both.  Colour words abstract the
marks letterwise: R = overline only, B = underline only, P = both.
"Reddish" means R or P, "bluish" means B or P; the reddish count of a
board's colour word equals its longest ascending subsequence, the bluish
count its longest descending one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

ColourWord = str

RED = "R"
BLUE = "B"
PURPLE = "P"

# Lexicographic letter order used when enumerating words.
_ALPHABET = (BLUE, PURPLE, RED)

_BIT_CODES = {RED: "01", BLUE: "10", PURPLE: "00"}

# Compact 2-bits-per-letter packing used for memo keys on hot paths.
_PACK_CODE = {BLUE: 0, PURPLE: 1, RED: 2}
_PACK_LETTER = "BPR"

_RC_TABLE = str.maketrans("RB", "BR")


@dataclass(frozen=True)
class RecEntry:
    """One recording-sequence entry: a value plus its marks."""

    value: object
    overlined: bool
    underlined: bool

    @property
    def letter(self) -> str:
        if self.overlined and self.underlined:
            return PURPLE
        return RED if self.overlined else BLUE


@dataclass(frozen=True)
class RecordingSequence:
    """Increasing sequence of marked values maintained by double bumping."""

    entries: tuple[RecEntry, ...] = ()

    def values(self) -> tuple:
        return tuple(e.value for e in self.entries)

    def colour_word(self) -> ColourWord:
        return "".join(e.letter for e in self.entries)

    def insert(self, value) -> "RecordingSequence":
        return double_bump_step(self, value)

    def __len__(self) -> int:
        return len(self.entries)


def double_bump_step(rec: RecordingSequence, value) -> RecordingSequence:
    """Insert one value into a recording sequence.

    The value enters with both marks at its ordered position; the first
    overline strictly to its right and the first underline strictly to its
    left are removed, and entries left without any mark are dropped.
    """
    entries = list(rec.entries)
    for e in entries:
        if e.value == value:
            raise ValueError(f"value {value!r} already recorded")
    pos = 0
    while pos < len(entries) and entries[pos].value < value:
        pos += 1
    entries.insert(pos, RecEntry(value, True, True))
    for i in range(pos + 1, len(entries)):
        e = entries[i]
        if e.overlined:
            entries[i] = RecEntry(e.value, False, e.underlined)
            break
    for i in range(pos - 1, -1, -1):
        e = entries[i]
        if e.underlined:
            entries[i] = RecEntry(e.value, e.overlined, False)
            break
    return RecordingSequence(tuple(e for e in entries if e.overlined or e.underlined))


def double_bump(values: Iterable) -> RecordingSequence:
    """Left fold of double_bump_step over a sequence of distinct values."""
    values = list(values)
    if len(set(values)) != len(values):
        raise ValueError("values must be distinct")
    rec = RecordingSequence()
    for v in values:
        rec = double_bump_step(rec, v)
    return rec


def colour_of(values: Iterable) -> ColourWord:
    """Colour word of a sequence of distinct values."""
    return double_bump(values).colour_word()


def reddish(word: ColourWord) -> int:
    """Number of R or P letters (= longest ascending subsequence realized)."""
    return len(word) - word.count(BLUE)


def bluish(word: ColourWord) -> int:
    """Number of B or P letters (= longest descending subsequence realized)."""
    return len(word) - word.count(RED)


def _check_letters(word: ColourWord) -> None:
    for ch in word:
        if ch not in "RBP":
            raise ValueError(f"not a colour word: {word!r}")


def is_admissible(word: ColourWord) -> bool:
    """True iff the word can be produced by double bumping.

    Admissible words are the empty word together with the words that
    contain at least one P, do not begin with B, do not end with R and
    contain no RB factor.
    """
    _check_letters(word)
    if not word:
        return True
    return (
        PURPLE in word
        and not word.startswith(BLUE)
        and not word.endswith(RED)
        and "RB" not in word
    )


def enumerate_admissible(length: int) -> list[ColourWord]:
    """All admissible words of exactly the given length, in lexicographic
    order with B < P < R.  Counts follow the alternate Fibonacci numbers
    1, 3, 8, 21, 55, 144, ... for length 1, 2, 3, ...
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return [""]
    return [
        w
        for letters in product(_ALPHABET, repeat=length)
        if is_admissible(w := "".join(letters))
    ]


def binary_encode(word: ColourWord) -> str:
    """Letterwise binary code R -> 01, B -> 10, P -> 00.

    On admissible words the image never contains two consecutive 1s
    (that would need an RB factor), and decoding is exact.
    """
    _check_letters(word)
    return "".join(_BIT_CODES[ch] for ch in word)


def insert_purple(word: ColourWord, position: int) -> ColourWord:
    """Colour-level move operator: the effect of playing one more card.

    A P is inserted at the given letter gap (0..len); the first reddish
    letter strictly to its right loses its red tinge (an R is deleted, a P
    becomes B) and the first bluish letter strictly to its left loses its
    blue tinge (a B is deleted, a P becomes R).
    """
    if not is_admissible(word):
        raise ValueError(f"word not admissible: {word!r}")
    if not 0 <= position <= len(word):
        raise ValueError(f"position {position} out of range for {word!r}")
    letters = list(word)
    letters.insert(position, PURPLE)
    for i in range(position + 1, len(letters)):
        ch = letters[i]
        if ch != BLUE:
            if ch == RED:
                del letters[i]
            else:
                letters[i] = BLUE
            break
    for i in range(position - 1, -1, -1):
        ch = letters[i]
        if ch != RED:
            if ch == BLUE:
                del letters[i]
            else:
                letters[i] = RED
            break
    return "".join(letters)


def reverse_complement(word: ColourWord) -> ColourWord:
    """Order-reversal image of a word: swap R with B, then reverse."""
    return word.translate(_RC_TABLE)[::-1]


def pack_word(word: ColourWord) -> int:
    """Pack a word into an int, 2 bits per letter behind a sentinel bit."""
    v = 1
    for ch in word:
        v = (v << 2) | _PACK_CODE[ch]
    return v


def unpack_word(packed: int) -> ColourWord:
    """Inverse of pack_word."""
    out = []
    while packed > 1:
        out.append(_PACK_LETTER[packed & 3])
        packed >>= 2
    return "".join(reversed(out))
