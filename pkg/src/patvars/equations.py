"""Restricted word equations: recognizers, bounded search, one-variable solver.

An equation equates two patterns; a solution is a substitution making both
sides the same word.  General satisfiability is out of reach here: the
bounded solver is complete only up to an image-length bound, and the
one-variable solver is exact except in the balanced regime, where it
reports ``unknown-beyond-bound`` past a pragmatic search limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Literal, Optional

from .core import (
    ERASING,
    NON_ERASING,
    Mode,
    Pattern,
    Substitution,
    Word,
    apply_substitution,
    parse_pattern,
    variable_id,
)
from .errors import PatternSyntaxError, PatvarsError


@dataclass(frozen=True)
class Equation:
    """``lhs = rhs`` over a shared variable namespace.

    Sides are patterns; a side may be empty (written ``()``), which is only
    meaningful together with erasing substitutions.  Variable ids are dense
    over the concatenation lhs+rhs in order of first occurrence.
    """

    lhs: Pattern
    rhs: Pattern

    @property
    def var_names(self) -> tuple[str, ...]:
        return self.lhs.var_names

    def render(self) -> str:
        left = self.lhs.render() if len(self.lhs) else "()"
        right = self.rhs.render() if len(self.rhs) else "()"
        return f"{left}={right}"


def parse_equation(text: str) -> Equation:
    """Parse ``"<pattern>=<pattern>"``; ``()`` denotes an empty side."""
    if text.count("=") != 1:
        raise PatternSyntaxError("equation needs exactly one '='", 1)
    left_text, right_text = text.split("=")
    names: list[str] = []
    ids: dict[str, int] = {}
    sides: list[tuple[int, ...]] = []
    offset = 0
    for side_text in (left_text, right_text):
        if side_text == "()":
            sides.append(())
        else:
            try:
                side = parse_pattern(side_text)
            except PatternSyntaxError as err:
                raise PatternSyntaxError("bad equation side", err.position + offset) from err
            # Re-map variable ids into one namespace shared by both sides.
            remapped = []
            for s in side.symbols:
                if s < 0:
                    name = side.var_names[variable_id(s)]
                    if name not in ids:
                        ids[name] = len(names)
                        names.append(name)
                    remapped.append(-ids[name] - 1)
                else:
                    remapped.append(s)
            sides.append(tuple(remapped))
        offset += len(side_text) + 1
    all_names = tuple(names)
    return Equation(
        _shared_pattern(sides[0], all_names), _shared_pattern(sides[1], all_names)
    )


class _SharedPattern(Pattern):
    """Pattern whose variable ids are dense over an enclosing equation."""

    def __post_init__(self) -> None:  # ids may be sparse within one side
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be unique")


def _shared_pattern(symbols, names) -> Pattern:
    return _SharedPattern(tuple(symbols), tuple(names))


@dataclass(frozen=True)
class EquationClassReport:
    """Syntactic classes of an equation."""

    is_quadratic: bool
    is_regular_both_sides: bool
    is_regular_ordered: bool
    is_non_cross_both_sides: bool
    is_one_repeated_variable: bool

    def to_json_dict(self) -> dict:
        return {
            "isQuadratic": self.is_quadratic,
            "isRegularBothSides": self.is_regular_both_sides,
            "isRegularOrdered": self.is_regular_ordered,
            "isNonCrossBothSides": self.is_non_cross_both_sides,
            "isOneRepeatedVariable": self.is_one_repeated_variable,
        }


def _side_counts(side: Pattern, num_vars: int) -> list[int]:
    counts = [0] * num_vars
    for s in side.symbols:
        if s < 0:
            counts[variable_id(s)] += 1
    return counts


def _side_var_order(side: Pattern) -> list[int]:
    return [variable_id(s) for s in side.symbols if s < 0]


def _side_non_cross(side: Pattern) -> bool:
    order = _side_var_order(side)
    if not order:
        return True
    seen: list[int] = []
    for vid in order:
        if seen and seen[-1] == vid:
            continue
        if vid in seen:
            return False
        seen.append(vid)
    return True


def classify_equation(equation: Equation) -> EquationClassReport:
    """Quadratic / regular / regular-ordered / non-cross / one-repeated flags."""
    num_vars = len(equation.var_names)
    lhs_counts = _side_counts(equation.lhs, num_vars)
    rhs_counts = _side_counts(equation.rhs, num_vars)
    total = [a + b for a, b in zip(lhs_counts, rhs_counts)]
    quadratic = all(c <= 2 for c in total)
    regular_both = all(c <= 1 for c in lhs_counts) and all(c <= 1 for c in rhs_counts)
    lhs_order = _side_var_order(equation.lhs)
    rhs_order = _side_var_order(equation.rhs)
    shared = set(lhs_order) & set(rhs_order)
    ordered = regular_both and (
        [v for v in lhs_order if v in shared] == [v for v in rhs_order if v in shared]
    )
    return EquationClassReport(
        is_quadratic=quadratic,
        is_regular_both_sides=regular_both,
        is_regular_ordered=ordered and quadratic,
        is_non_cross_both_sides=_side_non_cross(equation.lhs)
        and _side_non_cross(equation.rhs),
        is_one_repeated_variable=sum(1 for c in total if c >= 2) <= 1,
    )


def _equation_alphabet(equation: Equation) -> list[int]:
    codes = {s for s in equation.lhs.symbols if s >= 0}
    codes |= {s for s in equation.rhs.symbols if s >= 0}
    return sorted(codes) if codes else [0]


def solve_bounded(
    equation: Equation, max_length: int, mode: Mode = NON_ERASING
) -> Optional[Substitution]:
    """Smallest solution with all image lengths at most ``max_length``.

    Backtracks over variables in id order, trying images by (length, then
    content) over the equation's terminal alphabet (falling back to ``a``
    for terminal-free equations), so the returned witness is the canonical
    minimal one.  Returns None when no solution exists within the bound.
    """
    if max_length < 0:
        raise ValueError("bound must be non-negative")
    names = equation.var_names
    alphabet = _equation_alphabet(equation)
    min_len = 0 if mode == ERASING else 1
    candidates: list[bytes] = []
    for length in range(min_len, max_length + 1):
        candidates.extend(
            bytes(combo) for combo in product(alphabet, repeat=length)
        )

    images: dict[str, Word] = {}

    def expand(side: Pattern) -> bytes:
        out = bytearray()
        for s in side.symbols:
            if s < 0:
                out += images[names[variable_id(s)]].letters
            else:
                out.append(s)
        return bytes(out)

    def backtrack(index: int) -> bool:
        if index == len(names):
            return expand(equation.lhs) == expand(equation.rhs)
        for candidate in candidates:
            images[names[index]] = Word(candidate)
            if backtrack(index + 1):
                return True
        images.pop(names[index], None)
        return False

    if backtrack(0):
        return Substitution(dict(images), mode)
    return None


OneVarStatus = Literal["sat", "unsat", "unknown-beyond-bound"]


@dataclass(frozen=True)
class OneVarVerdict:
    status: OneVarStatus
    witness: Optional[Substitution] = None
    bound: Optional[int] = None


def _try_length(equation: Equation, length: int, alphabet: list[int]) -> Optional[bytes]:
    """Solve the equation with the single variable pinned to ``length``.

    Expands both sides into position cells, unifies the variable's cells
    against terminals and each other, and fills unconstrained cells with the
    smallest letter.  Returns the image or None.
    """
    def cells(side: Pattern) -> list:
        out: list = []
        for s in side.symbols:
            if s < 0:
                out.extend(("x", i) for i in range(length))
            else:
                out.append(("t", s))
        return out

    left = cells(equation.lhs)
    right = cells(equation.rhs)
    if len(left) != len(right):
        return None
    value: list[Optional[int]] = [None] * length
    # Union-find over the variable's cells.
    parent = list(range(length))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pending = list(zip(left, right))
    for a, b in pending:
        if a[0] == "t" and b[0] == "t":
            if a[1] != b[1]:
                return None
        elif a[0] == "t":
            value_cell = find(b[1])
            if value[value_cell] is None:
                value[value_cell] = a[1]
            elif value[value_cell] != a[1]:
                return None
        elif b[0] == "t":
            value_cell = find(a[1])
            if value[value_cell] is None:
                value[value_cell] = b[1]
            elif value[value_cell] != b[1]:
                return None
        else:
            ra, rb = find(a[1]), find(b[1])
            if ra != rb:
                merged = value[ra] if value[ra] is not None else value[rb]
                if value[ra] is not None and value[rb] is not None and value[ra] != value[rb]:
                    return None
                parent[ra] = rb
                value[rb] = merged
    fill = alphabet[0]
    return bytes(
        value[find(i)] if value[find(i)] is not None else fill for i in range(length)
    )


def solve_one_variable(equation: Equation, mode: Mode = NON_ERASING) -> OneVarVerdict:
    """Decide an equation with exactly one distinct variable.

    With p and q occurrences of the variable on the two sides and terminal
    masses A and B, ``p != q`` forces the unique image length
    ``(B - A) / (p - q)``, which is simply tested.  The balanced case
    ``p == q`` requires ``A == B`` and is searched up to the bound
    ``2 (|lhs| + |rhs|)``; exhausting it yields ``unknown-beyond-bound``.
    """
    names = equation.var_names
    if len(names) != 1:
        raise PatvarsError("one-variable solver requires exactly one distinct variable")
    alphabet = _equation_alphabet(equation)
    p = sum(1 for s in equation.lhs.symbols if s < 0)
    q = sum(1 for s in equation.rhs.symbols if s < 0)
    a_mass = sum(1 for s in equation.lhs.symbols if s >= 0)
    b_mass = sum(1 for s in equation.rhs.symbols if s >= 0)
    min_len = 0 if mode == ERASING else 1

    def verdict_for(length: int) -> Optional[Substitution]:
        image = _try_length(equation, length, alphabet)
        if image is None:
            return None
        witness = Substitution({names[0]: Word(image)}, mode)
        return witness

    if p != q:
        diff, gap = b_mass - a_mass, p - q
        if diff % gap != 0:
            return OneVarVerdict("unsat")
        length = diff // gap
        if length < min_len:
            return OneVarVerdict("unsat")
        witness = verdict_for(length)
        return OneVarVerdict("sat", witness) if witness else OneVarVerdict("unsat")

    if a_mass != b_mass:
        return OneVarVerdict("unsat")
    bound = 2 * (len(equation.lhs) + len(equation.rhs))
    for length in range(min_len, bound + 1):
        witness = verdict_for(length)
        if witness is not None:
            return OneVarVerdict("sat", witness)
    return OneVarVerdict("unknown-beyond-bound", None, bound)


def check_solution(equation: Equation, substitution: Substitution) -> bool:
    """True if the substitution makes both sides the same word."""
    return (
        apply_substitution(equation.lhs, substitution).letters
        == apply_substitution(equation.rhs, substitution).letters
    )
