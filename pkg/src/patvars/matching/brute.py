"""Complete backtracking matcher; the reference the fast matchers are held to."""

from __future__ import annotations

from ..core import ERASING, Pattern, Word
from .base import DEFAULT_OPTIONS, MatchOptions, MatchResult, MatchStats, finish


def match_brute(
    pattern: Pattern, word: Word, options: MatchOptions = DEFAULT_OPTIONS
) -> MatchResult:
    """Decide matching by exhaustive backtracking over image lengths.

    Sound and complete in both modes and under injectivity.  The witness is
    canonical: the assignment vector minimal under (image length, then image
    content), with variables in id order.  Image contents never need to be
    enumerated because the first occurrence of a variable pins its image to
    a slice of the word.
    """
    syms = pattern.symbols
    w = word.letters
    n = len(w)
    m = len(syms)
    min_img = 0 if options.mode == ERASING else 1
    injective = options.injective

    # Minimal expansion length of each pattern suffix, unassigned variables
    # counted at the mode's minimum image length.
    min_suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        min_suffix[i] = min_suffix[i + 1] + (1 if syms[i] >= 0 else min_img)

    images: list = [None] * pattern.num_variables
    stats = MatchStats()

    def walk(pi: int, wi: int) -> bool:
        stats.states += 1
        while pi < m:
            s = syms[pi]
            if s >= 0:
                if wi < n and w[wi] == s:
                    pi += 1
                    wi += 1
                    continue
                return False
            img = images[-s - 1]
            if img is None:
                break
            length = len(img)
            if w[wi : wi + length] == img:
                pi += 1
                wi += length
                continue
            return False
        else:
            return wi == n
        vid = -syms[pi] - 1
        limit = n - wi - min_suffix[pi + 1]
        for length in range(min_img, limit + 1):
            candidate = w[wi : wi + length]
            if injective and candidate in images:
                continue
            stats.candidates += 1
            images[vid] = candidate
            if walk(pi + 1, wi + length):
                return True
            images[vid] = None
        return False

    if walk(0, 0):
        return finish(
            pattern, word, images, "brute", stats, options.mode, injective
        )
    return finish(pattern, word, None, "brute", stats)
