"""Shared option and result types for the matching algorithms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from ..core import (
    NON_ERASING,
    Mode,
    Pattern,
    Substitution,
    Word,
    apply_substitution,
)

Algorithm = Literal[
    "auto", "brute", "regular", "noncross", "scd", "repvar", "local", "repetition"
]


@dataclass(frozen=True)
class MatchOptions:
    """Knobs for :func:`patvars.matching.match`.

    ``injective=True`` requires pairwise-distinct variable images and always
    routes to the brute-force matcher, as does erasing mode.
    """

    mode: Mode = NON_ERASING
    injective: bool = False
    algorithm: Algorithm = "auto"


DEFAULT_OPTIONS = MatchOptions()


@dataclass
class MatchStats:
    """Work counters: search states explored and candidate images tested."""

    states: int = 0
    candidates: int = 0

    def merge(self, other: "MatchStats") -> None:
        self.states += other.states
        self.candidates += other.candidates

    def to_json_dict(self) -> dict:
        return {"states": self.states, "candidates": self.candidates}


@dataclass(frozen=True)
class MatchResult:
    """Outcome of one matching run; a witness is present iff ``matched``."""

    matched: bool
    witness: Optional[Substitution]
    algorithm_used: str
    statistics: MatchStats

    def to_json_dict(self) -> dict:
        return {
            "matched": self.matched,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "algorithm": self.algorithm_used,
            "stats": self.statistics.to_json_dict(),
        }


def finish(
    pattern: Pattern,
    word: Word,
    images: Optional[list],
    algorithm: str,
    stats: MatchStats,
    mode: Mode = NON_ERASING,
    injective: bool = False,
) -> MatchResult:
    """Build a result, re-verifying any witness against the word.

    ``images`` is a list of image byte strings indexed by variable id, or
    None when unmatched.  Verification failure means a matcher bug, so it
    raises instead of returning an unsound result.
    """
    if images is None:
        return MatchResult(False, None, algorithm, stats)
    witness = Substitution(
        {name: Word(bytes(img)) for name, img in zip(pattern.var_names, images)},
        mode,
    )
    if apply_substitution(pattern, witness).letters != word.letters:
        raise RuntimeError(
            f"internal error: {algorithm} produced an invalid witness"
        )
    if injective and len(set(bytes(img) for img in images)) != len(images):
        raise RuntimeError(
            f"internal error: {algorithm} produced a non-injective witness"
        )
    return MatchResult(True, witness, algorithm, stats)
