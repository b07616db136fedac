"""Matching for patterns with a bounded number of repeated variables."""

from __future__ import annotations

from ..core import Pattern, Word
from ..errors import WrongClassError
from .base import MatchResult, MatchStats, finish
from .regular import decompose_alternating, greedy_parts_match


def _substitute(prefix: bytes, pieces, vid: int, image: bytes):
    """Replace every listed occurrence of ``vid`` by ``image``, merging the
    surrounding terminal parts."""
    terms = [prefix]
    kept_vars = []
    for v, t in pieces:
        if v == vid:
            terms[-1] = terms[-1] + image + t
        else:
            kept_vars.append(v)
            terms.append(t)
    return terms[0], tuple(zip(kept_vars, terms[1:]))


def match_repvar(pattern: Pattern, word: Word, k: int) -> MatchResult:
    """Match a pattern with at most ``k`` repeated variables (non-erasing).

    In any match the image of a repeated variable occurs in the word, so
    those images can be enumerated as factors of the word (deduplicated by
    value, shortest and lexicographically smallest first).  Substituting
    them leaves a pattern whose remaining variables occur once, finished by
    the greedy matcher.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    counts = pattern.occurrence_counts()
    repeated = [vid for vid, c in enumerate(counts) if c >= 2]
    if len(repeated) > k:
        raise WrongClassError(
            f"wrong class: more than {k} repeated variables"
        )
    stats = MatchStats()
    w = word.letters
    n = len(w)
    base_min = len(pattern.symbols)  # every symbol expands to at least one character
    start = decompose_alternating(pattern.symbols)
    images: dict[int, bytes] = {}

    def factor_candidates(count: int, slack: int):
        max_length = slack // count + 1
        for length in range(1, max_length + 1):
            seen = {w[i : i + length] for i in range(n - length + 1)}
            yield from sorted(seen)

    def assign(index: int, prefix: bytes, pieces, min_expansion: int) -> dict | None:
        stats.states += 1
        if index == len(repeated):
            return greedy_parts_match(prefix, pieces, w, stats)
        vid = repeated[index]
        count = counts[vid]
        for image in factor_candidates(count, n - min_expansion):
            stats.candidates += 1
            images[vid] = image
            rest = assign(
                index + 1,
                *_substitute(prefix, pieces, vid, image),
                min_expansion + count * (len(image) - 1),
            )
            if rest is not None:
                return rest
            del images[vid]
        return None

    residual = assign(0, start[0], start[1], base_min)
    if residual is None:
        return finish(pattern, word, None, "repvar", stats)
    ordered = [
        images[vid] if vid in images else residual[vid]
        for vid in range(pattern.num_variables)
    ]
    return finish(pattern, word, ordered, "repvar", stats)
