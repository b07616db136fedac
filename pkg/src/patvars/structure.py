"""Structural parameters and class memberships of patterns.

The parameters computed here (scope coincidence degree, locality number,
one-variable block count, repeated-variable count, nesting flags) decide
which specialized matching algorithm applies to a pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .core import (
    NoVariablesError,
    Pattern,
    Word,
    one_variable_blocks,
    primitive_root_of_sequence,
    scopes,
    variable_id,
)
from .errors import AlphabetTooLargeError, InvalidMarkingError

MAX_EXACT_LOCALITY_SYMBOLS = 24

# A marking sequence is an ordering of the distinct symbols of the input:
# variable names for patterns, single-character strings for printable words,
# raw symbol values for anything else.
MarkingSequence = tuple

MarkableInput = Union[Pattern, Word, Sequence]


def _symbols_and_labels(target: MarkableInput) -> tuple[tuple, tuple]:
    """Normalize an input to (symbol sequence, one label per symbol)."""
    if isinstance(target, Pattern):
        syms = tuple(s for s in target.symbols if s < 0)
        if not syms:
            raise NoVariablesError()
        return syms, tuple(target.var_names[variable_id(s)] for s in syms)
    if isinstance(target, Word):
        seq = tuple(target.letters)
        if all(c < 36 for c in seq):
            text = target.render()
            return seq, tuple(text)
        return seq, seq
    seq = tuple(target)
    return seq, seq


def _distinct_in_order(seq: Sequence) -> list:
    seen: dict = {}
    for s in seq:
        if s not in seen:
            seen[s] = None
    return list(seen)


def _marked_block_count(seq: Sequence, marked: frozenset) -> int:
    """Number of maximal runs of positions whose symbol is in ``marked``."""
    blocks = 0
    inside = False
    for s in seq:
        if s in marked:
            if not inside:
                blocks += 1
                inside = True
        else:
            inside = False
    return blocks


def marking_number(target: MarkableInput, order: Sequence) -> int:
    """Maximal number of marked blocks over the stages of a marking sequence.

    Symbols are marked one at a time in the given order; after each stage the
    maximal runs of marked positions are counted, and the worst stage wins.
    """
    syms, labels = _symbols_and_labels(target)
    if not syms:
        raise ValueError("empty input has no marking number")
    label_to_sym = dict(zip(labels, syms))
    distinct = _distinct_in_order(syms)
    if len(order) != len(distinct) or {label_to_sym.get(o) for o in order} != set(distinct):
        raise InvalidMarkingError("marking sequence is not a permutation of the symbols")
    worst = 0
    marked: set = set()
    for label in order:
        marked.add(label_to_sym[label])
        worst = max(worst, _marked_block_count(syms, frozenset(marked)))
    return worst


@lru_cache(maxsize=1 << 16)
def _locality_core(seq: tuple) -> tuple[int, tuple[int, ...]]:
    """Exact locality via dynamic programming over subsets of the alphabet.

    ``f(S) = min over x in S of max(f(S - x), blocks(S))`` is correct because
    the block count after marking a set depends only on the set.  Returns the
    locality number and a witness order of dense symbol indices.
    """
    dense: dict = {}
    mapped = []
    for s in seq:
        idx = dense.get(s)
        if idx is None:
            idx = len(dense)
            dense[s] = idx
        mapped.append(idx)
    m = len(dense)
    if m > MAX_EXACT_LOCALITY_SYMBOLS:
        raise AlphabetTooLargeError()

    # blocks(S) == number of run ends: positions i with seq[i] in S and the
    # successor (if any) outside S.  end_total[a] counts all potential run
    # ends of symbol a; adj[a][b] counts places where a is followed by b != a.
    end_total = [0] * m
    adj = [[0] * m for _ in range(m)]
    n = len(mapped)
    for i, a in enumerate(mapped):
        if i + 1 == n:
            end_total[a] += 1
        else:
            b = mapped[i + 1]
            if b != a:
                end_total[a] += 1
                adj[a][b] += 1

    size = 1 << m
    blocks = [0] * size
    for s_mask in range(1, size):
        xbit = s_mask & -s_mask
        x = xbit.bit_length() - 1
        rest = s_mask ^ xbit
        cross = 0
        t = rest
        row = adj[x]
        while t:
            bbit = t & -t
            t ^= bbit
            b = bbit.bit_length() - 1
            cross += row[b] + adj[b][x]
        blocks[s_mask] = blocks[rest] + end_total[x] - cross

    f = [0] * size
    pick = [0] * size
    for s_mask in range(1, size):
        base = blocks[s_mask]
        best = None
        best_x = -1
        t = s_mask
        while t:
            xbit = t & -t
            t ^= xbit
            prev = f[s_mask ^ xbit]
            val = prev if prev > base else base
            if best is None or val < best:
                best = val
                best_x = xbit.bit_length() - 1
        f[s_mask] = best
        pick[s_mask] = best_x

    order_rev = []
    s_mask = size - 1
    while s_mask:
        x = pick[s_mask]
        order_rev.append(x)
        s_mask ^= 1 << x
    by_index = list(dense)
    witness = tuple(by_index[x] for x in reversed(order_rev))
    return f[size - 1], witness


def locality_number(target: MarkableInput) -> tuple[int, MarkingSequence]:
    """Minimal marking number over all marking sequences, with a witness.

    Patterns are reduced to their skeleton first (terminals are invisible to
    the marking process).  Inputs with more than
    ``MAX_EXACT_LOCALITY_SYMBOLS`` distinct symbols are refused.
    """
    syms, labels = _symbols_and_labels(target)
    if not syms:
        raise ValueError("empty input has no locality number")
    k, witness_syms = _locality_core(tuple(syms))
    sym_to_label = dict(zip(syms, labels))
    return k, tuple(sym_to_label[s] for s in witness_syms)


def is_k_local(pattern: MarkableInput, k: int) -> tuple[bool, MarkingSequence | None]:
    """Decide membership in the k-local class, returning a witness on success."""
    if k < 1:
        raise ValueError("k must be at least 1")
    loc, witness = locality_number(pattern)
    if loc <= k:
        return True, witness
    return False, None


@lru_cache(maxsize=1 << 16)
def _scd_of_symbols(symbols: tuple[int, ...]) -> int:
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, s in enumerate(symbols):
        if s < 0:
            first.setdefault(s, pos)
            last[s] = pos
    if not first:
        raise NoVariablesError()
    events: list[tuple[int, int]] = []
    for v, f in first.items():
        events.append((f, 1))
        events.append((last[v] + 1, -1))
    events.sort()
    depth = 0
    best = 0
    for _, delta in events:
        depth += delta
        if depth > best:
            best = depth
    return best


def scope_coincidence_degree(pattern: Pattern) -> int:
    """Maximum number of variables whose scopes share a common position."""
    return _scd_of_symbols(pattern.symbols)


def repeated_variables(pattern: Pattern) -> frozenset[str]:
    """Names of the variables with at least two occurrences."""
    if pattern.num_variables == 0:
        raise NoVariablesError()
    counts = pattern.occurrence_counts()
    return frozenset(
        name for name, c in zip(pattern.var_names, counts) if c >= 2
    )


def _has_alternation(syms: Sequence[int], x: int, y: int) -> bool:
    """True if the subsequence x, y, x, y occurs in ``syms``."""
    want = (x, y, x, y)
    state = 0
    for s in syms:
        if s == want[state]:
            state += 1
            if state == 4:
                return True
    return False


def _is_nested_symbols(syms: Sequence[int]) -> bool:
    """No two distinct variables are entwined (no xyxy or yxyx subsequence)."""
    counts: dict[int, int] = {}
    for s in syms:
        if s < 0:
            counts[s] = counts.get(s, 0) + 1
    repeated = [v for v, c in counts.items() if c >= 2]
    for i, x in enumerate(repeated):
        for y in repeated[i + 1 :]:
            if _has_alternation(syms, x, y) or _has_alternation(syms, y, x):
                return False
    return True


def _is_closely_entwined_symbols(syms: Sequence[int]) -> bool:
    """Every crossing x..y..x..y leaves no room between the inner y and x.

    For variables x != y, whenever the pattern factors as
    beta x gamma1 y gamma2 x gamma3 y delta with gamma2 free of x and y,
    gamma2 must be empty.  The inner pair (y-occurrence, next x-occurrence)
    is then adjacent in the merged occurrence list of x and y.
    """
    positions: dict[int, list[int]] = {}
    for i, s in enumerate(syms):
        if s < 0:
            positions.setdefault(s, []).append(i)
    repeated = [v for v, occ in positions.items() if len(occ) >= 2]
    for x in repeated:
        for y in repeated:
            if x == y:
                continue
            merged = sorted(positions[x] + positions[y])
            first_x = positions[x][0]
            last_y = positions[y][-1]
            for p, q in zip(merged, merged[1:]):
                if (
                    syms[p] == y
                    and syms[q] == x
                    and q > p + 1
                    and first_x < p
                    and last_y > q
                ):
                    return False
    return True


def _is_mildly_entwined_symbols(syms: Sequence[int]) -> bool:
    """Closely entwined, and the gap between consecutive equal variables is nested."""
    if not _is_closely_entwined_symbols(syms):
        return False
    positions: dict[int, list[int]] = {}
    for i, s in enumerate(syms):
        if s < 0:
            positions.setdefault(s, []).append(i)
    for occ in positions.values():
        for p, q in zip(occ, occ[1:]):
            if not _is_nested_symbols(syms[p + 1 : q]):
                return False
    return True


def _is_strongly_nested_symbols(syms: tuple[int, ...]) -> bool:
    """Inductive check: single-variable pieces, variable-disjoint splits, and
    wrapping one fresh variable (plus terminals) around a strongly nested core."""
    n = len(syms)
    positions: dict[int, list[int]] = {}
    for i, s in enumerate(syms):
        if s < 0:
            positions.setdefault(s, []).append(i)

    memo: dict[tuple[int, int], bool] = {}

    def distinct_vars(i: int, j: int) -> set[int]:
        return {s for s in syms[i:j] if s < 0}

    def sn(i: int, j: int) -> bool:
        key = (i, j)
        cached = memo.get(key)
        if cached is not None:
            return cached
        memo[key] = False  # guards against reentry; overwritten below
        vars_in = distinct_vars(i, j)
        if len(vars_in) <= 1:
            memo[key] = True
            return True
        result = False
        # Split into two variable-disjoint strongly nested parts.
        for mid in range(i + 1, j):
            if distinct_vars(i, mid) & distinct_vars(mid, j):
                continue
            if sn(i, mid) and sn(mid, j):
                result = True
                break
        if not result:
            # Wrap: one variable x confined to the borders, everything else
            # inside a strongly nested core.  Terminal padding never changes
            # the outcome, so the minimal core suffices.
            for x in vars_in:
                other = [
                    p for v, ps in positions.items() if v != x and v in vars_in
                    for p in ps if i <= p < j
                ]
                lo = min(other)
                hi = max(other) + 1
                if any(lo <= p < hi for p in positions[x]):
                    continue
                if sn(lo, hi):
                    result = True
                    break
        memo[key] = result
        return result

    return sn(0, n)


@dataclass(frozen=True)
class ClassFlags:
    is_regular: bool
    is_non_cross: bool
    is_nested: bool
    is_strongly_nested: bool
    is_closely_entwined: bool
    is_mildly_entwined: bool


def class_flags(pattern: Pattern) -> ClassFlags:
    """Membership flags for the structural pattern classes."""
    if pattern.num_variables == 0:
        raise NoVariablesError()
    counts = pattern.occurrence_counts()
    syms = pattern.symbols
    return ClassFlags(
        is_regular=all(c == 1 for c in counts),
        is_non_cross=scope_coincidence_degree(pattern) <= 1,
        is_nested=_is_nested_symbols(syms),
        is_strongly_nested=_is_strongly_nested_symbols(syms),
        is_closely_entwined=_is_closely_entwined_symbols(syms),
        is_mildly_entwined=_is_mildly_entwined_symbols(syms),
    )


@dataclass(frozen=True)
class ClassReport:
    """All structural parameters and class flags of one pattern."""

    num_variables: int
    num_repeated_variables: int
    num_one_var_blocks: int
    scd: int
    locality: int
    locality_witness: MarkingSequence
    is_regular: bool
    is_non_cross: bool
    is_nested: bool
    is_strongly_nested: bool
    is_closely_entwined: bool
    is_mildly_entwined: bool
    repetition_structure: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "numVariables": self.num_variables,
            "numRepeatedVariables": self.num_repeated_variables,
            "numOneVarBlocks": self.num_one_var_blocks,
            "scd": self.scd,
            "locality": self.locality,
            "localityWitness": list(self.locality_witness),
            "isRegular": self.is_regular,
            "isNonCross": self.is_non_cross,
            "isNested": self.is_nested,
            "isStronglyNested": self.is_strongly_nested,
            "isCloselyEntwined": self.is_closely_entwined,
            "isMildlyEntwined": self.is_mildly_entwined,
            "repetitionStructure": (
                list(self.repetition_structure) if self.repetition_structure else None
            ),
        }


@lru_cache(maxsize=1 << 17)
def _classify_cached(symbols: tuple[int, ...], var_names: tuple[str, ...]) -> ClassReport:
    pattern = Pattern(symbols, var_names)
    counts = pattern.occurrence_counts()
    loc, witness = locality_number(pattern)
    flags = class_flags(pattern)
    skel = tuple(s for s in symbols if s < 0)
    root, exponent = primitive_root_of_sequence(skel)
    repetition = (len(root), exponent) if exponent >= 2 else None
    return ClassReport(
        num_variables=pattern.num_variables,
        num_repeated_variables=sum(1 for c in counts if c >= 2),
        num_one_var_blocks=one_variable_blocks(pattern).num_blocks,
        scd=scope_coincidence_degree(pattern),
        locality=loc,
        locality_witness=witness,
        is_regular=flags.is_regular,
        is_non_cross=flags.is_non_cross,
        is_nested=flags.is_nested,
        is_strongly_nested=flags.is_strongly_nested,
        is_closely_entwined=flags.is_closely_entwined,
        is_mildly_entwined=flags.is_mildly_entwined,
        repetition_structure=repetition,
    )


def classify(pattern: Pattern) -> ClassReport:
    """Compute the full :class:`ClassReport` for a pattern with variables."""
    if pattern.num_variables == 0:
        raise NoVariablesError()
    return _classify_cached(pattern.symbols, pattern.var_names)
