"""Occurrence search for patterns with a single distinct variable."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import Pattern, Word
from ..errors import PatvarsError


@dataclass(frozen=True)
class OccurrenceList:
    """All ways a one-variable pattern occurs inside a word.

    Each item is ``(start, image_length)`` with a 1-indexed start position;
    the image content is forced by the first variable occurrence.
    """

    items: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


@lru_cache(maxsize=1 << 15)
def one_var_parts(symbols: tuple[int, ...]) -> tuple[tuple[bytes, ...], int]:
    """Terminal parts ``v1..vr`` around the variable occurrences, plus the count."""
    parts: list[bytes] = []
    current = bytearray()
    occurrences = 0
    for s in symbols:
        if s < 0:
            parts.append(bytes(current))
            current = bytearray()
            occurrences += 1
        else:
            current.append(s)
    parts.append(bytes(current))
    return tuple(parts), occurrences


def instance_end(parts: tuple[bytes, ...], w: bytes, start: int, length: int) -> int:
    """0-based end (exclusive) of the instance at ``start`` with the given
    image length, or -1 if the pattern does not occur there."""
    pos = start
    image = None
    first = True
    for i, t in enumerate(parts):
        if t:
            if w[pos : pos + len(t)] != t:
                return -1
            pos += len(t)
        if i == len(parts) - 1:
            break
        if first:
            image = w[pos : pos + length]
            if len(image) < length:
                return -1
            first = False
        elif w[pos : pos + length] != image:
            return -1
        pos += length
    return pos


def find_one_variable_occurrences(pattern: Pattern, word: Word) -> OccurrenceList:
    """All ``(start, image_length)`` pairs at which the pattern occurs in the word.

    The pattern must contain exactly one distinct variable; images are
    non-erasing.  Starts are 1-indexed and the result is sorted by
    ``(start, image_length)``.
    """
    if pattern.num_variables != 1:
        raise PatvarsError(
            "one-variable occurrence search requires exactly one distinct variable"
        )
    parts, occurrences = one_var_parts(pattern.symbols)
    terminal_total = sum(len(t) for t in parts)
    w = word.letters
    n = len(w)
    items: list[tuple[int, int]] = []
    for start in range(n):
        max_length = (n - start - terminal_total) // occurrences
        for length in range(1, max_length + 1):
            if instance_end(parts, w, start, length) >= 0:
                items.append((start + 1, length))
    return OccurrenceList(tuple(items))
