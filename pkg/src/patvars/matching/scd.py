"""Matching for patterns with bounded scope coincidence degree."""

from __future__ import annotations

from functools import lru_cache

from ..core import Pattern, Word
from ..errors import ParameterTooLargeError, WrongClassError
from ..structure import scope_coincidence_degree
from .base import MatchResult, MatchStats, finish

MAX_SCD_PARAMETER = 4


@lru_cache(maxsize=1 << 15)
def _scd_plan(symbols: tuple[int, ...], num_vars: int):
    """One-variable blocks plus, per variable, its first and last block index."""
    m = len(symbols)
    prefix = bytearray()
    i = 0
    while i < m and symbols[i] >= 0:
        prefix.append(symbols[i])
        i += 1
    blocks: list[tuple[int, int, bytes]] = []
    while i < m:
        vid = -symbols[i] - 1
        count = 0
        while i < m and symbols[i] == -vid - 1:
            count += 1
            i += 1
        trailing = bytearray()
        while i < m and symbols[i] >= 0:
            trailing.append(symbols[i])
            i += 1
        blocks.append((vid, count, bytes(trailing)))

    first_block = [-1] * num_vars
    last_block = [0] * num_vars
    for t, (vid, _, _) in enumerate(blocks):
        if first_block[vid] < 0:
            first_block[vid] = t
        last_block[vid] = t

    # Minimal expansion (one character per variable occurrence) of the
    # pattern from block t onward.
    min_rest = [0] * (len(blocks) + 1)
    for t in range(len(blocks) - 1, -1, -1):
        _, count, trailing = blocks[t]
        min_rest[t] = min_rest[t + 1] + count + len(trailing)
    return bytes(prefix), tuple(blocks), first_block, last_block, min_rest


def match_scd(pattern: Pattern, word: Word, k: int) -> MatchResult:
    """Match a pattern whose scope coincidence degree is at most ``k``.

    Dynamic program over one-variable blocks; a state is the current word
    position together with the committed image of every variable that is
    still open (first occurrence consumed, last occurrence pending).  At
    most ``k`` variables are open at once, which bounds the state space.
    """
    if k > MAX_SCD_PARAMETER:
        raise ParameterTooLargeError()
    if scope_coincidence_degree(pattern) > k:
        raise WrongClassError(
            f"wrong class: scope coincidence degree exceeds {k}"
        )
    stats = MatchStats()
    w = word.letters
    n = len(w)
    prefix, blocks, first_block, last_block, min_rest = _scd_plan(
        pattern.symbols, pattern.num_variables
    )

    no_match = finish(pattern, word, None, "scd", stats)
    if not w.startswith(prefix):
        return no_match

    def check_power(pos: int, image: bytes, count: int) -> int:
        """Word position after ``count`` copies of ``image`` at ``pos``, or -1."""
        length = len(image)
        for _ in range(count):
            if w[pos : pos + length] != image:
                return -1
            pos += length
        return pos

    # state key: (position, tuple of (vid, image) open commitments sorted by
    # vid); value: full image assignment for witness reconstruction.
    states: dict[tuple, tuple] = {(len(prefix), ()): (None,) * pattern.num_variables}
    for t, (vid, count, trailing) in enumerate(blocks):
        next_states: dict[tuple, tuple] = {}
        budget_rest = min_rest[t + 1] + len(trailing)
        for (pos, open_images), assignment in sorted(states.items()):
            stats.states += 1
            open_map = dict(open_images)
            known = open_map.get(vid)
            if known is not None:
                candidates = [known]
            else:
                max_length = (n - pos - budget_rest) // count
                candidates = [
                    w[pos : pos + length] for length in range(1, max_length + 1)
                ]
            for image in candidates:
                stats.candidates += 1
                end = check_power(pos, image, count)
                if end < 0 or not w.startswith(trailing, end):
                    continue
                new_open = dict(open_map)
                new_assignment = list(assignment)
                new_assignment[vid] = image
                if last_block[vid] == t:
                    new_open.pop(vid, None)
                else:
                    new_open[vid] = image
                key = (end + len(trailing), tuple(sorted(new_open.items())))
                if key not in next_states:
                    next_states[key] = tuple(new_assignment)
        states = next_states
        if not states:
            return no_match

    for (pos, _), assignment in sorted(states.items()):
        if pos == n:
            return finish(pattern, word, list(assignment), "scd", stats)
    return no_match
