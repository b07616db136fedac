"""Worker machinery for the exhaustive acceptance grids.

The heavy criteria sweep hundreds of millions of matcher calls, so the work
is chunked across processes.  Two exact symmetries cut the pair grid to a
quarter without losing exhaustiveness: every algorithm in the package is
equivariant under (a) any bijective renaming of the terminal alphabet
applied to pattern and word together, and (b) simultaneous reversal of
pattern and word.  Both only permute which symbol/position comparisons
happen, never their outcomes, so verdicts are preserved; it therefore
suffices to check one canonical representative per orbit.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from patvars.core import Pattern, Word
from patvars.equations import (
    Equation,
    _equation_alphabet,
    _shared_pattern,
    check_solution,
    solve_bounded,
)
from patvars.gapped import find_maximal_gapped_palindromes, find_maximal_gapped_repeats
from patvars.matching import (
    match,
    match_brute,
    match_k_local,
    match_non_cross,
    match_regular,
    match_repetition,
    match_repvar,
    match_scd,
    pattern_power_root,
)
from patvars.structure import classify, locality_number

import oracles

GRID_MAX_PATTERN = 8
GRID_MAX_VARS = 3
GRID_MAX_WORD = 10
TERMINALS = (0, 1)


# ---------------------------------------------------------------- criterion 2

def canonicalize_vars(symbols):
    remap, out = {}, []
    for s in symbols:
        if s < 0:
            if s not in remap:
                remap[s] = -len(remap) - 1
            out.append(remap[s])
        else:
            out.append(s)
    return tuple(out)


def swap_terminals(symbols):
    return tuple(1 - s if s >= 0 else s for s in symbols)


def pattern_transforms(symbols):
    """The four joint-symmetry images of a pattern, variable-canonicalized."""
    reverse = tuple(reversed(symbols))
    return (
        canonicalize_vars(symbols),
        canonicalize_vars(swap_terminals(symbols)),
        canonicalize_vars(reverse),
        canonicalize_vars(swap_terminals(reverse)),
    )


def word_transform(letters: bytes, transform: int) -> bytes:
    if transform == 1:
        return bytes(1 - b for b in letters)
    if transform == 2:
        return letters[::-1]
    if transform == 3:
        return bytes(1 - b for b in letters[::-1])
    return letters


def canonical_patterns(max_len=GRID_MAX_PATTERN, max_vars=GRID_MAX_VARS):
    """Every pattern over {a, b, x1..x3} with ids canonical, as symbol tuples."""
    symbols = list(TERMINALS) + [-v - 1 for v in range(max_vars)]
    out = []
    for n in range(1, max_len + 1):
        for tup in itertools.product(symbols, repeat=n):
            if canonicalize_vars(tup) == tup:
                out.append(tup)
    return out


def orbit_representatives(patterns):
    """Patterns minimal in their symmetry orbit, with their word stabilizer."""
    reps = []
    for syms in patterns:
        transforms = pattern_transforms(syms)
        if min(transforms) != syms:
            continue
        stabilizer = tuple(t for t, image in enumerate(transforms) if image == syms)
        reps.append((syms, stabilizer))
    return reps


ALL_WORDS = [
    bytes(t)
    for n in range(1, GRID_MAX_WORD + 1)
    for t in itertools.product(TERMINALS, repeat=n)
]


def grid_check_chunk(chunk):
    """Check one chunk of (symbols, stabilizer) grid entries.

    Returns (mismatch descriptions, per-algorithm call counts).
    """
    mismatches = []
    calls = {
        "brute": 0, "auto": 0, "regular": 0, "noncross": 0,
        "scd": 0, "repvar": 0, "local": 0, "repetition": 0,
    }
    for symbols, stabilizer in chunk:
        names = tuple(
            f"x{i+1}" for i in range(sum(1 for s in set(symbols) if s < 0))
        )
        pattern = Pattern(symbols, names)
        num_vars = pattern.num_variables
        language = oracles.language_slice(
            symbols, num_vars, GRID_MAX_WORD, TERMINALS
        )
        if num_vars:
            report = classify(pattern)
            root, exponent = pattern_power_root(pattern)
            local_ok = report.locality <= 3
        else:
            report = None
        for letters in ALL_WORDS:
            if len(stabilizer) > 1 and any(
                word_transform(letters, t) < letters for t in stabilizer
            ):
                continue
            word = Word(letters)
            expected = letters in language

            def record(name, got):
                calls[name] += 1
                if got != expected:
                    mismatches.append(
                        f"{name}: pattern={pattern.render()} word={letters!r} "
                        f"got={got} expected={expected}"
                    )

            record("brute", match_brute(pattern, word).matched)
            record("auto", match(pattern, word).matched)
            if report is None:
                continue
            if report.is_regular:
                record("regular", match_regular(pattern, word).matched)
            if report.is_non_cross:
                record("noncross", match_non_cross(pattern, word).matched)
            record("scd", match_scd(pattern, word, report.scd).matched)
            record(
                "repvar",
                match_repvar(pattern, word, report.num_repeated_variables).matched,
            )
            if local_ok:
                record(
                    "local",
                    match_k_local(
                        pattern, word, report.locality, report.locality_witness
                    ).matched,
                )
            if exponent >= 2:
                record("repetition", match_repetition(root, exponent, word).matched)
    return mismatches, calls


def grid_random_samples(count, seed):
    """Random larger instances: every applicable matcher vs brute force."""
    rng = random.Random(seed)
    mismatches = []
    for _ in range(count):
        n = rng.randint(2, 10)
        syms = []
        k = 0
        for _ in range(n):
            if rng.random() < 0.55 and k < 3:
                v = rng.randint(0, min(k, 2))
                k = max(k, v + 1)
                syms.append(-v - 1)
            elif k:
                syms.append(rng.choice(TERMINALS))
            else:
                syms.append(-1)
                k = 1
        symbols = canonicalize_vars(tuple(syms))
        names = tuple(f"x{i+1}" for i in range(k))
        pattern = Pattern(symbols, names)
        report = classify(pattern)
        root, exponent = pattern_power_root(pattern)
        length = rng.randint(1, 14)
        word = Word(bytes(rng.choice(TERMINALS) for _ in range(length)))
        expected = match_brute(pattern, word).matched
        got = {"auto": match(pattern, word).matched}
        if report.is_regular:
            got["regular"] = match_regular(pattern, word).matched
        if report.is_non_cross:
            got["noncross"] = match_non_cross(pattern, word).matched
        if report.scd <= 4:
            got["scd"] = match_scd(pattern, word, report.scd).matched
        got["repvar"] = match_repvar(pattern, word, report.num_repeated_variables).matched
        if report.locality <= 3:
            got["local"] = match_k_local(
                pattern, word, report.locality, report.locality_witness
            ).matched
        if exponent >= 2:
            got["repetition"] = match_repetition(root, exponent, word).matched
        for name, value in got.items():
            if value != expected:
                mismatches.append(
                    f"{name}: pattern={pattern.render()} word={word.letters!r}"
                )
    return mismatches


# ---------------------------------------------------------------- criterion 3

def canonical_words(max_len, max_symbols):
    """Restricted-growth strings: every word up to symbol renaming."""
    out = []

    def rec(prefix, used):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for s in range(min(used + 1, max_symbols)):
            prefix.append(s)
            rec(prefix, max(used, s + 1))
            prefix.pop()

    rec([], 0)
    return out


def locality_check_chunk(words):
    mismatches = []
    for seq in words:
        k, witness = locality_number(seq)
        brute_k, _ = oracles.locality_brute(seq)
        if k != brute_k:
            mismatches.append(f"value: {seq} dp={k} brute={brute_k}")
        elif oracles.marking_simulation(seq, witness) != k:
            mismatches.append(f"witness: {seq} {witness}")
    return mismatches


# ---------------------------------------------------------------- criterion 5

GAPPED_ALPHAS = (Fraction(1), Fraction(3, 2), Fraction(2))


def gapped_check_chunk(words):
    mismatches = []
    for letters in words:
        word = Word(letters)
        for alpha in GAPPED_ALPHAS:
            got = {
                (o.start, o.arm_length, o.gap_length)
                for o in find_maximal_gapped_repeats(word, alpha)
            }
            if got != oracles.gapped_brute(letters, alpha, "repeat"):
                mismatches.append(f"repeat {letters!r} alpha={alpha}")
            got = {
                (o.start, o.arm_length, o.gap_length)
                for o in find_maximal_gapped_palindromes(word, alpha)
            }
            if got != oracles.gapped_brute(letters, alpha, "palindrome"):
                mismatches.append(f"palindrome {letters!r} alpha={alpha}")
    return mismatches


def gapped_count_bound_chunk(args):
    count, seed = args
    rng = random.Random(seed)
    violations = []
    for _ in range(count):
        n = rng.randint(2, 200)
        sigma = rng.choice((2, 3, 4))
        letters = bytes(rng.randrange(sigma) for _ in range(n))
        word = Word(letters)
        for alpha in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
            found = len(find_maximal_gapped_repeats(word, alpha))
            if found > 18 * alpha * n:
                violations.append(f"{letters!r} alpha={alpha} count={found}")
    return violations


# ---------------------------------------------------------------- criterion 7

def canonical_equations(max_total=8, max_vars=2):
    """Every equation over {a, b, x1, x2} up to renaming symmetries.

    Variable ids are canonical across lhs+rhs; the terminal-swap orbit is
    represented once (equation solving is equivariant under renaming the
    alphabet on both sides).
    """
    symbols = list(TERMINALS) + [-v - 1 for v in range(max_vars)]
    out = []
    for total in range(2, max_total + 1):
        for left_len in range(1, total):
            right_len = total - left_len
            for tup in itertools.product(symbols, repeat=total):
                if canonicalize_vars(tup) != tup:
                    continue
                if swap_terminals(tup) < tup:
                    continue
                out.append((tup[:left_len], tup[left_len:]))
    return out


def equation_check_chunk(pairs):
    mismatches = []
    for lhs, rhs in pairs:
        num_vars = sum(1 for s in set(lhs + rhs) if s < 0)
        names = tuple(f"x{i+1}" for i in range(num_vars))
        equation = Equation(_shared_pattern(lhs, names), _shared_pattern(rhs, names))
        observed = tuple(_equation_alphabet(equation))
        for mode, erasing in (("non-erasing", False), ("erasing", True)):
            for bound in (3,):
                got = solve_bounded(equation, bound, mode)
                want = oracles.equation_brute(
                    lhs, rhs, num_vars, bound, TERMINALS, erasing
                )
                if (got is None) != (want is None):
                    mismatches.append(
                        f"verdict: {equation.render()} {mode} L={bound}"
                    )
                    continue
                if got is not None:
                    if not check_solution(equation, got):
                        mismatches.append(f"invalid witness: {equation.render()} {mode}")
                    minimal = oracles.equation_brute(
                        lhs, rhs, num_vars, bound, observed, erasing
                    )
                    if tuple(got.images[n].letters for n in names) != minimal:
                        mismatches.append(
                            f"non-minimal witness: {equation.render()} {mode}"
                        )
    return mismatches


def chunked(items, size):
    for i in range(0, len(items), size):
        yield items[i : i + size]
