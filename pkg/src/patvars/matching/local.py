"""Matching for k-local patterns, driven by a marking-sequence witness."""

from __future__ import annotations

from functools import lru_cache

from ..core import Pattern, Word
from ..errors import InvalidMarkingError, ParameterTooLargeError
from .base import MatchResult, MatchStats, finish

MAX_LOCAL_PARAMETER = 3


@lru_cache(maxsize=1 << 15)
def _skeleton_marking_number(symbols: tuple[int, ...], order_ids: tuple[int, ...]) -> int:
    skel = [-s - 1 for s in symbols if s < 0]
    marked: set[int] = set()
    worst = 0
    for y in order_ids:
        marked.add(y)
        blocks = 0
        inside = False
        for v in skel:
            if v in marked:
                if not inside:
                    blocks += 1
                    inside = True
            else:
                inside = False
        if blocks > worst:
            worst = blocks
    return worst


@lru_cache(maxsize=1 << 14)
def _local_plan(symbols: tuple[int, ...], order_ids: tuple[int, ...]):
    """Stage-by-stage layout of the marked skeleton blocks.

    For every marking stage this precomputes, per marked block, the pattern
    span it covers and a template describing how the block is assembled from
    terminals, occurrences of the newly marked variable, and the blocks of
    the previous stage.  Template items are ``("t", bytes)``, ``("y",)`` and
    ``("o", old_block_index)``.
    """
    skeleton_positions = [i for i, s in enumerate(symbols) if s < 0]
    marked: set[int] = set()
    prev_spans: list[tuple[int, int]] = []
    stages = []
    for y in order_ids:
        marked.add(y)
        y_symbol = -y - 1
        spans: list[tuple[int, int]] = []
        run_start = None
        prev_pos = None
        for pos in skeleton_positions:
            if -symbols[pos] - 1 in marked:
                if run_start is None:
                    run_start = pos
                prev_pos = pos
            else:
                if run_start is not None:
                    spans.append((run_start, prev_pos))
                    run_start = None
        if run_start is not None:
            spans.append((run_start, prev_pos))

        blocks = []
        old_idx = 0
        for a, b in spans:
            template: list[tuple] = []
            term_len = 0
            y_count = 0
            has_old = False
            pos = a
            run = bytearray()
            while pos <= b:
                if old_idx < len(prev_spans) and prev_spans[old_idx][0] == pos:
                    if run:
                        template.append(("t", bytes(run)))
                        run = bytearray()
                    template.append(("o", old_idx))
                    has_old = True
                    pos = prev_spans[old_idx][1] + 1
                    old_idx += 1
                elif symbols[pos] == y_symbol:
                    if run:
                        template.append(("t", bytes(run)))
                        run = bytearray()
                    template.append(("y",))
                    y_count += 1
                    pos += 1
                else:
                    run.append(symbols[pos])
                    term_len += 1
                    pos += 1
            if run:
                template.append(("t", bytes(run)))
            blocks.append((tuple(template), term_len, y_count, has_old))

        # Minimal character room the pattern demands before the first block,
        # between consecutive blocks, and after the last one.
        lead = spans[0][0]
        gaps = tuple(
            spans[j + 1][0] - spans[j][1] - 1 for j in range(len(spans) - 1)
        )
        trail = len(symbols) - 1 - spans[-1][1]
        stages.append((y, tuple(blocks), lead, gaps, trail))
        prev_spans = spans

    prefix = bytes(symbols[: skeleton_positions[0]])
    suffix = bytes(symbols[skeleton_positions[-1] + 1 :])
    total_counts: dict[int, int] = {}
    for s in symbols:
        if s < 0:
            total_counts[-s - 1] = total_counts.get(-s - 1, 0) + 1
    return stages, prefix, suffix, total_counts


def match_k_local(
    pattern: Pattern, word: Word, k: int, witness: tuple
) -> MatchResult:
    """Match a pattern that is k-local, guided by a marking sequence.

    Variables are assigned in witness order; a search state holds the
    ordered, disjoint word intervals currently covering the marked pattern
    blocks.  Marking the next variable enumerates its image length, anchors
    blocks that contain previously placed material, and tries all positions
    for fully new blocks.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > MAX_LOCAL_PARAMETER:
        raise ParameterTooLargeError()
    name_to_id = {name: vid for vid, name in enumerate(pattern.var_names)}
    if sorted(witness) != sorted(pattern.var_names):
        raise InvalidMarkingError()
    order_ids = tuple(name_to_id[name] for name in witness)
    if _skeleton_marking_number(pattern.symbols, order_ids) > k:
        raise InvalidMarkingError(
            "invalid marking sequence: marking number exceeds k"
        )

    stats = MatchStats()
    w = word.letters
    n = len(w)
    m = len(pattern.symbols)
    stages, prefix, suffix, total_counts = _local_plan(pattern.symbols, order_ids)

    no_match = finish(pattern, word, None, "local", stats)
    if m > n:
        return no_match

    def walk_anchored(template, intervals, length):
        """Realize a block around its first old sub-block.

        Returns ``((start, end), forced_image)`` or None on any mismatch."""
        lead_chars = 0
        anchor = None
        for item in template:
            if item[0] == "t":
                lead_chars += len(item[1])
            elif item[0] == "y":
                lead_chars += length
            else:
                anchor = intervals[item[1]][0] - lead_chars
                break
        if anchor is None or anchor < 0:
            return None
        pos = anchor
        image = None
        for item in template:
            kind = item[0]
            if kind == "t":
                t = item[1]
                if w[pos : pos + len(t)] != t:
                    return None
                pos += len(t)
            elif kind == "y":
                piece = w[pos : pos + length]
                if len(piece) < length:
                    return None
                if image is None:
                    image = piece
                elif piece != image:
                    return None
                pos += length
            else:
                s, e = intervals[item[1]]
                if pos != s:
                    return None
                pos = e
        return (anchor, pos), image

    def walk_floating(template, start, length, image):
        """Try to realize a block containing no old material at ``start``."""
        pos = start
        for item in template:
            if item[0] == "t":
                t = item[1]
                if w[pos : pos + len(t)] != t:
                    return None
                pos += len(t)
            else:
                piece = w[pos : pos + length]
                if len(piece) < length:
                    return None
                if image is None:
                    image = piece
                elif piece != image:
                    return None
                pos += length
        return pos, image

    # history[i]: states after stage i, mapping the interval tuple to the
    # parent (previous state, image of the variable marked at stage i).
    history: list[dict[tuple, tuple]] = []
    states: dict[tuple, tuple] = {(): (None, None)}
    for y, blocks, lead, gaps, trail in stages:
        count_y = total_counts[y]
        max_length = (n - m) // count_y + 1
        next_states: dict[tuple, tuple] = {}
        for state in sorted(states):
            stats.states += 1
            for length in range(1, max_length + 1):
                stats.candidates += 1
                fixed: list = []
                image = None
                feasible = True
                for template, term_len, y_count, has_old in blocks:
                    if not has_old:
                        fixed.append(
                            ("float", template, term_len + y_count * length)
                        )
                        continue
                    result = walk_anchored(template, state, length)
                    if result is None:
                        feasible = False
                        break
                    interval, block_image = result
                    if block_image is not None:
                        if image is None:
                            image = block_image
                        elif image != block_image:
                            feasible = False
                            break
                    fixed.append(("fixed", interval))
                if not feasible:
                    continue

                def place(idx: int, img, acc: tuple):
                    if idx == len(fixed):
                        if n - acc[-1][1] >= trail and acc not in next_states:
                            next_states[acc] = (state, img)
                        return
                    base = lead if idx == 0 else acc[-1][1] + gaps[idx - 1]
                    entry = fixed[idx]
                    if entry[0] == "fixed":
                        s, e = entry[1]
                        if s >= base:
                            place(idx + 1, img, acc + ((s, e),))
                        return
                    _, template, explen = entry
                    for start in range(base, n - explen + 1):
                        out = walk_floating(template, start, length, img)
                        if out is not None:
                            place(idx + 1, out[1], acc + ((start, out[0]),))

                place(0, image, ())
        history.append(next_states)
        states = next_states
        if not states:
            return no_match

    accepted = None
    for state in sorted(states):
        s, e = state[0]
        if (
            s == len(prefix)
            and e == n - len(suffix)
            and w.startswith(prefix)
            and w.endswith(suffix)
        ):
            accepted = state
            break
    if accepted is None:
        return no_match

    images: list = [None] * pattern.num_variables
    cursor = accepted
    for stage_index in range(len(stages) - 1, -1, -1):
        prev_state, image = history[stage_index][cursor]
        images[stages[stage_index][0]] = image
        cursor = prev_state
    return finish(pattern, word, images, "local", stats)
