"""Enumeration of maximal gapped repeats and gapped palindromes.

A gapped repeat is a factor ``u v u`` (arms ``u``, gap ``v``); a gapped
palindrome has the reversed arm ``u v u^R``.  An occurrence is alpha-gapped
when ``|uv| <= alpha |u|`` and maximal when the arms cannot be extended
together by one position in either available direction: repeats extend both
arms rightward or leftward (the gap slides), palindromes extend outward or
inward (the gap shrinks by two).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .core import Word

Kind = Literal["repeat", "palindrome"]


@dataclass(frozen=True)
class GappedOccurrence:
    """One maximal occurrence; ``start`` is 1-indexed, lengths in characters."""

    start: int
    arm_length: int
    gap_length: int
    kind: Kind

    def to_json_dict(self) -> dict:
        return {
            "start": self.start,
            "arm": self.arm_length,
            "gap": self.gap_length,
            "kind": self.kind,
        }


def _check_alpha(alpha: Fraction) -> Fraction:
    alpha = Fraction(alpha)
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return alpha


def find_maximal_gapped_repeats(word: Word, alpha) -> list[GappedOccurrence]:
    """All maximal alpha-gapped repeats, sorted by (start, arm, gap).

    Works per arm-start distance d: the longest-common-extension array along
    distance d pins, for every position, the unique maximal arm length, in
    O(n^2) overall.  Arm+gap never exceeds ``alpha * arm`` (checked in exact
    rational arithmetic).
    """
    alpha = _check_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    w = word.letters
    n = len(w)
    out: list[GappedOccurrence] = []
    for d in range(1, n):
        span = n - d
        # forward[i]: length of the longest common prefix of w[i:] and w[i+d:].
        forward = [0] * (span + 1)
        for i in range(span - 1, -1, -1):
            if w[i] == w[i + d]:
                forward[i] = forward[i + 1] + 1
        for s in range(span):
            f = forward[s]
            if f >= d:
                # Square u u with |u| = d; gap 0; never arm-extendable.
                if s + 2 * d <= n:
                    out.append(GappedOccurrence(s + 1, d, 0, "repeat"))
            elif f >= 1:
                # Arms of length exactly f; left-extendable iff the previous
                # diagonal position also matches.
                if s > 0 and w[s - 1] == w[s - 1 + d]:
                    continue
                if q * d <= p * f:
                    out.append(GappedOccurrence(s + 1, f, d - f, "repeat"))
    out.sort(key=lambda o: (o.start, o.arm_length, o.gap_length))
    return out


def find_maximal_gapped_palindromes(word: Word, alpha) -> list[GappedOccurrence]:
    """All maximal alpha-gapped palindromes, sorted by (start, arm, gap).

    For a fixed right-arm start position r the arm grows inward/outward
    around the boundary, so the mirrored longest-common-extension pins the
    maximal arm per (left-end, right-start) anti-diagonal.
    """
    alpha = _check_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    w = word.letters
    n = len(w)
    out: list[GappedOccurrence] = []
    # Parametrize by the inner boundary: e = left arm end (exclusive) and
    # r = right arm start.  The arm extends outward while w[e-1-t] == w[r+t];
    # growing outward keeps (e, r) fixed, so the mirror extension length
    # pins the unique maximal arm per boundary.  It satisfies the recurrence
    # M(e, r) = M(e-1, r+1) + 1 along anti-diagonals e + r = const.
    for c in range(1, 2 * n - 1):
        prev = 0
        e_lo = max(1, c - (n - 1))
        e_hi = min(n - 1, c // 2)  # e <= r
        for e in range(e_lo, e_hi + 1):
            r = c - e
            mirror = prev + 1 if w[e - 1] == w[r] else 0
            prev = mirror
            if mirror == 0:
                continue
            gap = r - e
            # Inward-extendable: the gap's outermost characters match and
            # there is room for the gap to shrink by two.
            if gap >= 2 and w[e] == w[r - 1]:
                continue
            if q * (mirror + gap) <= p * mirror:
                out.append(GappedOccurrence(e - mirror + 1, mirror, gap, "palindrome"))
    out.sort(key=lambda o: (o.start, o.arm_length, o.gap_length))
    return out
