"""Linear-time matching of regular patterns by greedy factor placement."""

from __future__ import annotations

from functools import lru_cache

from ..core import Pattern, Word
from ..errors import WrongClassError
from .base import MatchResult, MatchStats, finish


@lru_cache(maxsize=1 << 16)
def decompose_alternating(symbols) -> tuple[bytes, tuple[tuple[int, bytes], ...]]:
    """Split a symbol sequence into ``t0, (var_1, t_1), ..., (var_v, t_v)``.

    Adjacent variables yield empty terminal parts; every variable occurrence
    is listed individually.
    """
    prefix = bytearray()
    i = 0
    m = len(symbols)
    while i < m and symbols[i] >= 0:
        prefix.append(symbols[i])
        i += 1
    pieces: list[tuple[int, bytes]] = []
    while i < m:
        vid = -symbols[i] - 1
        i += 1
        t = bytearray()
        while i < m and symbols[i] >= 0:
            t.append(symbols[i])
            i += 1
        pieces.append((vid, bytes(t)))
    return bytes(prefix), tuple(pieces)


def greedy_parts_match(prefix: bytes, pieces, w: bytes, stats: MatchStats) -> dict | None:
    """Greedy matcher on an alternating decomposition; images by variable id.

    Places each maximal terminal factor at its leftmost feasible position
    (reserving one character per preceding variable) and hands all slack to
    the last variable, which is optimal when every listed variable occurs
    once.  Returns None when there is no match.
    """
    n = len(w)
    stats.states += 1
    if not w.startswith(prefix):
        return None
    if not pieces:
        return {} if len(prefix) == n else None
    cur = len(prefix)
    images: dict[int, bytes] = {}
    last_vid, suffix = pieces[-1]
    for vid, t in pieces[:-1]:
        if not t:
            # Adjacent variables: give this one the minimal single character.
            cur += 1
            if cur > n:
                return None
            images[vid] = w[cur - 1 : cur]
            continue
        stats.candidates += 1
        pos = w.find(t, cur + 1)
        if pos < 0:
            return None
        images[vid] = w[cur:pos]
        cur = pos + len(t)
    end = n - len(suffix)
    if end < cur + 1:
        return None
    if suffix and w[end:] != suffix:
        return None
    images[last_vid] = w[cur:end]
    return images


def greedy_regular_match(symbols, w: bytes, stats: MatchStats) -> dict | None:
    prefix, pieces = decompose_alternating(symbols)
    return greedy_parts_match(prefix, pieces, w, stats)


def match_regular(pattern: Pattern, word: Word) -> MatchResult:
    """Match a pattern whose variables occur once each (non-erasing)."""
    counts = pattern.occurrence_counts()
    if any(c != 1 for c in counts):
        raise WrongClassError("wrong class: pattern is not regular")
    stats = MatchStats()
    images = greedy_regular_match(pattern.symbols, word.letters, stats)
    if images is None:
        return finish(pattern, word, None, "regular", stats)
    ordered = [images[vid] for vid in range(pattern.num_variables)]
    return finish(pattern, word, ordered, "regular", stats)
