"""Patterns, words, substitutions, and elementary word combinatorics.

A pattern is a sequence of terminal symbols and variables; a word is a
sequence of terminals only.  Terminals are written ``[a-z0-9]`` in text form
and carried as integer codes ``0..35`` internally; every algorithm in the
package only ever compares codes for equality, so arbitrary integer
alphabets work throughout.  Variables are written ``[name]`` and are
numbered densely by first occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Mapping, Sequence

from .errors import NoVariablesError, PatternSyntaxError, SubstitutionError

TERMINAL_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789"
_CHAR_TO_CODE = {c: i for i, c in enumerate(TERMINAL_CHARS)}
_NAME_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"
)

Mode = Literal["erasing", "non-erasing"]

NON_ERASING: Mode = "non-erasing"
ERASING: Mode = "erasing"


def is_variable(symbol: int) -> bool:
    """True if a pattern symbol encodes a variable (negative) rather than a terminal."""
    return symbol < 0


def variable_symbol(var_id: int) -> int:
    """Encode variable number ``var_id`` as a pattern symbol."""
    return -var_id - 1


def variable_id(symbol: int) -> int:
    """Decode a variable pattern symbol back to its variable number."""
    return -symbol - 1


@dataclass(frozen=True)
class Variable:
    """A pattern variable: external name plus dense first-occurrence index."""

    name: str
    id: int


@dataclass(frozen=True)
class Word:
    """An immutable terminal word; possibly empty.

    ``letters`` holds one integer code per position.  Codes 0..35 render as
    ``[a-z0-9]``; other codes (e.g. graph vertices) are valid but have no
    text form.
    """

    letters: bytes

    @staticmethod
    def from_text(text: str) -> "Word":
        return parse_word(text)

    @staticmethod
    def from_codes(codes: Sequence[int]) -> "Word":
        return Word(bytes(codes))

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def render(self) -> str:
        if any(c >= len(TERMINAL_CHARS) for c in self.letters):
            raise ValueError("word contains codes outside the printable alphabet")
        return "".join(TERMINAL_CHARS[c] for c in self.letters)

    def __str__(self) -> str:
        return self.render()


EMPTY_WORD = Word(b"")


@dataclass(frozen=True)
class Pattern:
    """A sequence of terminals and variables.

    ``symbols`` mixes terminal codes (``>= 0``) and encoded variables
    (``< 0``); ``var_names`` lists variable names by id, which follow the
    order of first occurrence.  Patterns produced by :func:`parse_pattern`
    are never empty; the empty pattern exists only as an equation side.
    """

    symbols: tuple[int, ...]
    var_names: tuple[str, ...]

    def __post_init__(self) -> None:
        seen: list[int] = []
        for s in self.symbols:
            if s < 0:
                vid = variable_id(s)
                if vid >= len(self.var_names):
                    raise ValueError(f"variable id {vid} out of range")
                if vid not in seen:
                    seen.append(vid)
        if seen != list(range(len(self.var_names))):
            raise ValueError("variable ids must be dense and ordered by first occurrence")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be unique")

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def num_variables(self) -> int:
        return len(self.var_names)

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(Variable(name, i) for i, name in enumerate(self.var_names))

    def occurrence_counts(self) -> list[int]:
        """Number of occurrences of each variable, indexed by variable id."""
        counts = [0] * len(self.var_names)
        for s in self.symbols:
            if s < 0:
                counts[variable_id(s)] += 1
        return counts

    def terminal_codes(self) -> frozenset[int]:
        return frozenset(s for s in self.symbols if s >= 0)

    def render(self) -> str:
        parts = []
        for s in self.symbols:
            if s < 0:
                parts.append(f"[{self.var_names[variable_id(s)]}]")
            else:
                parts.append(TERMINAL_CHARS[s])
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


def parse_word(text: str) -> Word:
    """Parse a word over ``[a-z0-9]``; the empty string is the empty word."""
    codes = bytearray()
    for i, ch in enumerate(text):
        code = _CHAR_TO_CODE.get(ch)
        if code is None:
            raise PatternSyntaxError(f"illegal terminal character {ch!r}", i + 1)
        codes.append(code)
    return Word(bytes(codes))


def parse_pattern(text: str) -> Pattern:
    """Parse pattern text such as ``"[x1]ab[x2][x1]"``.

    A token is a single terminal from ``[a-z0-9]`` or a bracketed variable
    name matching ``[A-Za-z0-9_]+``.  Raises :class:`PatternSyntaxError`
    with the 1-indexed position of the offending character.
    """
    if not text:
        raise PatternSyntaxError("empty pattern", 1)
    symbols: list[int] = []
    ids: dict[str, int] = {}
    names: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "[":
            end = text.find("]", i + 1)
            if end == -1:
                raise PatternSyntaxError("unterminated variable bracket", i + 1)
            name = text[i + 1 : end]
            if not name:
                raise PatternSyntaxError("empty variable name", i + 1)
            for j, nch in enumerate(name):
                if nch not in _NAME_CHARS:
                    raise PatternSyntaxError(
                        f"illegal character {nch!r} in variable name", i + 2 + j
                    )
            vid = ids.get(name)
            if vid is None:
                vid = len(names)
                ids[name] = vid
                names.append(name)
            symbols.append(variable_symbol(vid))
            i = end + 1
        elif ch == "]":
            raise PatternSyntaxError("unmatched ']'", i + 1)
        else:
            code = _CHAR_TO_CODE.get(ch)
            if code is None:
                raise PatternSyntaxError(f"illegal terminal character {ch!r}", i + 1)
            symbols.append(code)
            i += 1
    return Pattern(tuple(symbols), tuple(names))


@dataclass(frozen=True)
class Substitution:
    """A mapping from variable names to words, erasing or non-erasing."""

    images: Mapping[str, Word]
    mode: Mode = NON_ERASING

    def image(self, name: str) -> Word:
        return self.images[name]

    def to_json_dict(self) -> dict[str, str]:
        return {name: word.render() for name, word in self.images.items()}


def apply_substitution(pattern: Pattern, substitution: Substitution) -> Word:
    """Replace every variable occurrence by its image, keeping terminals.

    Raises :class:`SubstitutionError` if an image is missing or if an image
    is empty in non-erasing mode.
    """
    by_id: list[bytes] = []
    for name in pattern.var_names:
        image = substitution.images.get(name)
        if image is None:
            raise SubstitutionError(f"missing image for variable {name!r}")
        if substitution.mode == NON_ERASING and len(image) == 0:
            raise SubstitutionError(f"empty image for variable {name!r} in non-erasing mode")
        by_id.append(image.letters)
    out = bytearray()
    for s in pattern.symbols:
        if s < 0:
            out += by_id[variable_id(s)]
        else:
            out.append(s)
    return Word(bytes(out))


def skeleton(pattern: Pattern) -> Pattern:
    """The subsequence of variable occurrences, with terminals removed."""
    symbols = tuple(s for s in pattern.symbols if s < 0)
    if not symbols:
        raise NoVariablesError()
    return Pattern(symbols, pattern.var_names)


@dataclass(frozen=True)
class OneVarBlock:
    """One maximal run ``variable^exponent`` followed by its terminal word."""

    variable: str
    exponent: int
    trailing: Word


@dataclass(frozen=True)
class OneVarBlockDecomposition:
    """``w0 . prod_i (z_i^{k_i} w_i)``: leading terminals, then the blocks."""

    w0: Word
    blocks: tuple[OneVarBlock, ...]

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)


def one_variable_blocks(pattern: Pattern) -> OneVarBlockDecomposition:
    """Split a pattern into maximal contiguous runs of a single variable.

    The number of blocks is minimal: two adjacent runs of the same variable
    are always separated by at least one terminal.
    """
    if pattern.num_variables == 0:
        raise NoVariablesError()
    syms = pattern.symbols
    i = 0
    w0 = bytearray()
    while i < len(syms) and syms[i] >= 0:
        w0.append(syms[i])
        i += 1
    blocks: list[OneVarBlock] = []
    while i < len(syms):
        var_sym = syms[i]
        count = 0
        while i < len(syms) and syms[i] == var_sym:
            count += 1
            i += 1
        trailing = bytearray()
        while i < len(syms) and syms[i] >= 0:
            trailing.append(syms[i])
            i += 1
        blocks.append(
            OneVarBlock(pattern.var_names[variable_id(var_sym)], count, Word(bytes(trailing)))
        )
    return OneVarBlockDecomposition(Word(bytes(w0)), tuple(blocks))


def border_table(seq: Sequence[int]) -> list[int]:
    """KMP failure function: ``table[i]`` is the longest proper border of ``seq[:i+1]``."""
    n = len(seq)
    table = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and seq[i] != seq[k]:
            k = table[k - 1]
        if seq[i] == seq[k]:
            k += 1
        table[i] = k
    return table


def period_of_sequence(seq: Sequence) -> int:
    """Smallest ``p`` such that ``seq[i] == seq[i+p]`` wherever both are defined."""
    if not seq:
        raise ValueError("empty sequence has no period")
    table = border_table(seq)
    return len(seq) - table[-1]


def period(word: Word) -> int:
    """Minimal period of a nonempty word."""
    if len(word) == 0:
        raise ValueError("empty word has no period")
    return period_of_sequence(word.letters)


def primitive_root_of_sequence(seq: Sequence) -> tuple[Sequence, int]:
    """Return ``(root, exponent)`` with ``root`` primitive and ``root**exponent == seq``.

    A word is a power of its minimal-period prefix exactly when that period
    divides the length.
    """
    p = period_of_sequence(seq)
    n = len(seq)
    if n % p == 0:
        return seq[:p], n // p
    return seq[:], 1


def primitive_root(word: Word) -> tuple[Word, int]:
    """Primitive root and maximal exponent of a nonempty word."""
    if len(word) == 0:
        raise ValueError("empty word has no primitive root")
    root, exponent = primitive_root_of_sequence(word.letters)
    return Word(bytes(root)), exponent


def scopes(pattern: Pattern) -> dict[str, tuple[int, int]]:
    """1-indexed (leftmost, rightmost) occurrence positions per variable name."""
    if pattern.num_variables == 0:
        raise NoVariablesError()
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, s in enumerate(pattern.symbols, start=1):
        if s < 0:
            vid = variable_id(s)
            first.setdefault(vid, pos)
            last[vid] = pos
    return {
        pattern.var_names[vid]: (first[vid], last[vid]) for vid in sorted(first)
    }
