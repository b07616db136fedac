"""Matching for non-cross patterns by a left-to-right reachability DP."""

from __future__ import annotations

from functools import lru_cache

from ..core import Pattern, Word
from ..errors import WrongClassError
from ..structure import scope_coincidence_degree
from .base import MatchResult, MatchStats, finish
from .onevar import instance_end, one_var_parts


@lru_cache(maxsize=1 << 15)
def _noncross_plan(symbols: tuple[int, ...], num_vars: int):
    """Terminal separators and per-variable one-variable segments.

    In a non-cross pattern the variable scopes are disjoint intervals in id
    order, so the pattern factors as ``tau_0 seg_1 tau_1 ... seg_v tau_v``
    where ``seg_j`` spans all occurrences of variable ``j-1``.
    """
    first = {}
    last = {}
    for i, s in enumerate(symbols):
        if s < 0:
            first.setdefault(s, i)
            last[s] = i
    spans = [(first[-vid - 1], last[-vid - 1]) for vid in range(num_vars)]
    taus: list[bytes] = []
    segments = []
    prev_end = -1
    for lo, hi in spans:
        taus.append(bytes(s for s in symbols[prev_end + 1 : lo]))
        parts, occurrences = one_var_parts(symbols[lo : hi + 1])
        segments.append((parts, occurrences, sum(len(t) for t in parts)))
        prev_end = hi
    taus.append(bytes(s for s in symbols[prev_end + 1 :]))

    # Minimal expansion of everything from segment j onward.
    min_rest = [0] * (num_vars + 1)
    min_rest[num_vars] = len(taus[num_vars])
    for j in range(num_vars - 1, -1, -1):
        _, occ, term = segments[j]
        min_rest[j] = min_rest[j + 1] + len(taus[j]) + term + occ
    return taus, segments, min_rest


def match_non_cross(pattern: Pattern, word: Word) -> MatchResult:
    """Match a pattern with scope coincidence degree at most 1 (non-erasing).

    Maintains the set of word positions reachable after each variable's
    segment; segment transitions enumerate the image length anchored at each
    reachable position, and separators are matched exactly.
    """
    if scope_coincidence_degree(pattern) > 1:
        raise WrongClassError("wrong class: pattern is not non-cross")
    stats = MatchStats()
    w = word.letters
    n = len(w)
    num_vars = pattern.num_variables
    taus, segments, min_rest = _noncross_plan(pattern.symbols, num_vars)

    if not w.startswith(taus[0]):
        return finish(pattern, word, None, "noncross", stats)
    reachable = [len(taus[0])]
    parents: list[dict[int, tuple[int, int]]] = []
    for j, (parts, occurrences, term_total) in enumerate(segments):
        stage: dict[int, tuple[int, int]] = {}
        budget_rest = min_rest[j + 1]
        for pos in reachable:
            max_length = (n - pos - budget_rest - term_total) // occurrences
            for length in range(1, max_length + 1):
                stats.candidates += 1
                end = instance_end(parts, w, pos, length)
                if end >= 0 and end not in stage:
                    stage[end] = (pos, length)
        parents.append(stage)
        tau = taus[j + 1]
        if tau:
            reachable = sorted(
                p + len(tau) for p in stage if w[p : p + len(tau)] == tau
            )
        else:
            reachable = sorted(stage)
        stats.states += len(reachable)
        if not reachable:
            return finish(pattern, word, None, "noncross", stats)

    if n not in reachable:
        return finish(pattern, word, None, "noncross", stats)

    images: list[bytes] = [b""] * num_vars
    pos = n
    for j in range(num_vars - 1, -1, -1):
        pos -= len(taus[j + 1])
        prev, length = parents[j][pos]
        offset = prev + len(segments[j][0][0])
        images[j] = w[offset : offset + length]
        pos = prev
    return finish(pattern, word, images, "noncross", stats)
