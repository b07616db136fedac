"""Matching algorithms and the class-dispatching front door.

``match`` inspects the pattern's structural class and routes to the fastest
applicable algorithm; every specialized matcher is also callable directly.
All specialized matchers handle the non-erasing case; erasing and injective
instances are served by the brute-force matcher.
"""

from __future__ import annotations

from functools import lru_cache

from ..core import NON_ERASING, Pattern, Word, primitive_root_of_sequence
from ..errors import AlphabetTooLargeError, WrongClassError
from ..structure import classify, locality_number, scope_coincidence_degree
from .base import (
    DEFAULT_OPTIONS,
    Algorithm,
    MatchOptions,
    MatchResult,
    MatchStats,
    finish,
)
from .brute import match_brute
from .local import MAX_LOCAL_PARAMETER, match_k_local
from .noncross import match_non_cross
from .onevar import OccurrenceList, find_one_variable_occurrences
from .regular import match_regular
from .repvar import match_repvar
from .scd import MAX_SCD_PARAMETER, match_scd

__all__ = [
    "MatchOptions",
    "MatchResult",
    "MatchStats",
    "OccurrenceList",
    "match",
    "match_brute",
    "match_regular",
    "match_non_cross",
    "match_scd",
    "match_repvar",
    "match_k_local",
    "match_repetition",
    "find_one_variable_occurrences",
    "DEFAULT_OPTIONS",
]


def _match_terminal_only(pattern: Pattern, word: Word) -> MatchResult:
    stats = MatchStats(states=1)
    if bytes(pattern.symbols) == word.letters:
        return finish(pattern, word, [], "terminal", stats)
    return finish(pattern, word, None, "terminal", stats)


@lru_cache(maxsize=1 << 16)
def _power_root_cached(symbols: tuple[int, ...], var_names: tuple[str, ...]):
    root, exponent = primitive_root_of_sequence(symbols)
    return Pattern(tuple(root), var_names), exponent


def pattern_power_root(pattern: Pattern) -> tuple[Pattern, int]:
    """Primitive root of the full symbol sequence: ``pattern == root ** exponent``."""
    return _power_root_cached(pattern.symbols, pattern.var_names)


def match_repetition(beta: Pattern, k: int, word: Word) -> MatchResult:
    """Match the pattern ``beta`` repeated ``k`` times against ``word``.

    The word must be a k-th power ``v^k`` and ``beta`` must match ``v``; the
    inner match is dispatched by class.
    """
    if k < 2:
        raise ValueError("repetition exponent must be at least 2")
    stats = MatchStats(states=1)
    full = Pattern(beta.symbols * k, beta.var_names)
    w = word.letters
    n = len(w)
    if n % k != 0:
        return finish(full, word, None, "repetition", stats)
    piece = w[: n // k]
    if piece * k != w:
        return finish(full, word, None, "repetition", stats)
    inner = match(beta, Word(piece))
    stats.merge(inner.statistics)
    if not inner.matched:
        return finish(full, word, None, "repetition", stats)
    images = [inner.witness.images[name].letters for name in beta.var_names]
    return finish(full, word, images, "repetition", stats)


def _forced(pattern: Pattern, word: Word, options: MatchOptions) -> MatchResult:
    algorithm = options.algorithm
    if algorithm == "brute":
        return match_brute(pattern, word, options)
    if options.injective:
        raise WrongClassError("injective matching requires the brute algorithm")
    if options.mode != NON_ERASING:
        raise WrongClassError("erasing matching requires the brute algorithm")
    if algorithm == "regular":
        return match_regular(pattern, word)
    if algorithm == "noncross":
        return match_non_cross(pattern, word)
    if algorithm == "scd":
        return match_scd(pattern, word, scope_coincidence_degree(pattern))
    if algorithm == "repvar":
        counts = pattern.occurrence_counts()
        return match_repvar(pattern, word, sum(1 for c in counts if c >= 2))
    if algorithm == "local":
        loc, witness = locality_number(pattern)
        return match_k_local(pattern, word, loc, witness)
    if algorithm == "repetition":
        root, exponent = pattern_power_root(pattern)
        if exponent < 2:
            raise WrongClassError("wrong class: pattern is not a repetition")
        return match_repetition(root, exponent, word)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def match(
    pattern: Pattern, word: Word, options: MatchOptions = DEFAULT_OPTIONS
) -> MatchResult:
    """Decide whether the pattern matches the word.

    With ``algorithm="auto"`` the pattern class picks the route: terminal
    equality, then regular, repvar (at most two repeated variables),
    non-cross, exact repetition peeling, bounded scope coincidence degree,
    k-locality, and finally brute force.  Erasing mode and injectivity
    always use brute force.  Witnesses are re-verified before returning.
    """
    if options.algorithm != "auto":
        return _forced(pattern, word, options)
    if options.mode != NON_ERASING or options.injective:
        return match_brute(pattern, word, options)
    if pattern.num_variables == 0:
        return _match_terminal_only(pattern, word)
    try:
        report = classify(pattern)
    except AlphabetTooLargeError:
        return match_brute(pattern, word, options)
    if report.is_regular:
        return match_regular(pattern, word)
    if report.num_repeated_variables <= 2:
        return match_repvar(pattern, word, report.num_repeated_variables)
    if report.is_non_cross:
        return match_non_cross(pattern, word)
    root, exponent = pattern_power_root(pattern)
    if exponent >= 2:
        return match_repetition(root, exponent, word)
    if report.scd <= 3:
        return match_scd(pattern, word, report.scd)
    if report.locality <= 2:
        return match_k_local(
            pattern, word, report.locality, report.locality_witness
        )
    return match_brute(pattern, word, options)
