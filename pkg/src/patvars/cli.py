"""Command-line front door: one subcommand per library capability.

Exit codes: 0 success, 1 no-match/unsat, 2 usage or cap error, 3 input
parse error.  ``--json`` switches any subcommand to machine-readable
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import parse_pattern, parse_word
from .equations import classify_equation, parse_equation, solve_bounded, solve_one_variable
from .errors import PatternSyntaxError, PatvarsError
from .gapped import find_maximal_gapped_palindromes, find_maximal_gapped_repeats
from .graphs import (
    cutwidth_exact,
    graph_to_words,
    parse_graph_file,
    pattern_graph_to_dot,
    render_graph_file,
    standard_graph,
    word_to_graph,
)
from .matching import MatchOptions, match
from .structure import classify, locality_number

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _cmd_analyze(args) -> int:
    pattern = parse_pattern(args.pattern)
    report = classify(pattern)
    payload = report.to_json_dict()
    lines = [f"{key}: {value}" for key, value in payload.items()]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_match(args) -> int:
    pattern = parse_pattern(args.pattern)
    word = parse_word(args.word)
    mode = "erasing" if args.mode == "erasing" else "non-erasing"
    options = MatchOptions(mode=mode, injective=args.injective, algorithm=args.algorithm)
    result = match(pattern, word, options)
    payload = result.to_json_dict()
    lines = [f"matched: {result.matched}", f"algorithm: {result.algorithm_used}"]
    if result.witness:
        for name, image in result.witness.images.items():
            rendered = image.render() if len(image) else "()"
            lines.append(f"  {name} = {rendered}")
    _emit(payload, args.json, lines)
    return EXIT_OK if result.matched else EXIT_NEGATIVE


def _cmd_loc(args) -> int:
    word = parse_word(args.word)
    value, witness = locality_number(word)
    payload = {"locality": value, "witness": list(witness)}
    _emit(payload, args.json, [f"locality: {value}", f"witness: {', '.join(witness)}"])
    return EXIT_OK


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph_file(handle.read())


def _cmd_cutwidth(args) -> int:
    graph = _read_graph(args.graphfile)
    value, arrangement = cutwidth_exact(graph)
    payload = {"cutwidth": value, "arrangement": list(arrangement.order)}
    _emit(
        payload,
        args.json,
        [f"cutwidth: {value}", f"arrangement: {' '.join(map(str, arrangement.order))}"],
    )
    return EXIT_OK


def _cmd_graph(args) -> int:
    pattern = parse_pattern(args.pattern)
    if args.dot:
        sys.stdout.write(pattern_graph_to_dot(pattern))
        return EXIT_OK
    graph = standard_graph(pattern)
    payload = {
        "vertexCount": graph.vertex_count,
        "neighbourEdges": [list(e) for e in graph.neighbour_edges],
        "equalityEdges": [list(e) for e in graph.equality_edges],
        "terminalVertices": list(graph.terminal_vertices),
    }
    lines = [
        f"vertices: {graph.vertex_count}",
        f"neighbour edges: {len(graph.neighbour_edges)}",
        "equality edges: "
        + " ".join(f"{{{u},{v}}}" for u, v in graph.equality_edges),
        f"terminal vertices: {' '.join(map(str, graph.terminal_vertices))}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    if args.direction == "word2graph":
        word = parse_word(args.input)
        graph = word_to_graph(word)
        if args.json:
            print(
                json.dumps(
                    {"vertexCount": graph.vertex_count, "edges": [list(e) for e in graph.edges]}
                )
            )
        else:
            sys.stdout.write(render_graph_file(graph))
        return EXIT_OK
    graph = _read_graph(args.input)
    words = graph_to_words(graph)
    rendered = {vertex: word.render() for vertex, word in sorted(words.items())}
    _emit(
        {"words": rendered},
        args.json,
        [f"{vertex}: {text}" for vertex, text in rendered.items()],
    )
    return EXIT_OK


def _parse_alpha(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise PatternSyntaxError(f"bad alpha {text!r}", 1) from err


def _cmd_gapped(args) -> int:
    word = parse_word(args.word)
    alpha = _parse_alpha(args.alpha)
    finder = (
        find_maximal_gapped_palindromes if args.palindrome else find_maximal_gapped_repeats
    )
    occurrences = finder(word, alpha)
    payload = [occ.to_json_dict() for occ in occurrences]
    lines = [
        f"start={occ.start} arm={occ.arm_length} gap={occ.gap_length} kind={occ.kind}"
        for occ in occurrences
    ]
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _cmd_equation(args) -> int:
    equation = parse_equation(args.equation)
    mode = "erasing" if args.mode == "erasing" else "non-erasing"
    report = classify_equation(equation)
    max_length = args.max_len
    if max_length is None:
        max_length = len(equation.lhs) + len(equation.rhs)
    payload: dict = {"classes": report.to_json_dict()}
    lines = [f"classes: {report.to_json_dict()}"]
    verdict = "unsat-within-bound"
    witness = None
    if len(equation.var_names) == 1:
        one = solve_one_variable(equation, mode)
        payload["oneVariable"] = {
            "status": one.status,
            "witness": one.witness.to_json_dict() if one.witness else None,
            "bound": one.bound,
        }
        lines.append(f"one-variable verdict: {one.status}")
        if one.status == "sat":
            verdict = "sat"
            witness = one.witness
    if witness is None:
        solution = solve_bounded(equation, max_length, mode)
        if solution is not None:
            verdict = "sat"
            witness = solution
    payload["verdict"] = verdict
    payload["witness"] = witness.to_json_dict() if witness else None
    payload["maxLen"] = max_length
    lines.append(f"verdict: {verdict} (bound {max_length})")
    if witness:
        for name, image in witness.images.items():
            lines.append(f"  {name} = {image.render() if len(image) else '()'}")
    _emit(payload, args.json, lines)
    return EXIT_OK if verdict == "sat" else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patvars",
        description="Pattern-with-variables matching, structure analysis, and the locality/cutwidth bridge.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("analyze", _cmd_analyze, "structural parameters and class flags of a pattern")
    p.add_argument("pattern")

    p = add("match", _cmd_match, "match a pattern against a word")
    p.add_argument("pattern")
    p.add_argument("word")
    p.add_argument("--mode", choices=["erasing", "nonerasing"], default="nonerasing")
    p.add_argument("--injective", action="store_true")
    p.add_argument(
        "--algorithm",
        choices=["auto", "brute", "regular", "noncross", "scd", "repvar", "local"],
        default="auto",
    )

    p = add("loc", _cmd_loc, "locality number of a word with witness")
    p.add_argument("word")

    p = add("cutwidth", _cmd_cutwidth, "exact cutwidth of a multigraph file")
    p.add_argument("graphfile")

    p = add("graph", _cmd_graph, "standard graph representation of a pattern")
    p.add_argument("pattern")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of a summary")

    p = add("reduce", _cmd_reduce, "word/graph reductions of the parameter bridge")
    p.add_argument("direction", choices=["word2graph", "graph2word"])
    p.add_argument("input", help="word, or graph file path for graph2word")

    p = add("gapped", _cmd_gapped, "maximal gapped repeats or palindromes")
    p.add_argument("word")
    p.add_argument("--alpha", required=True, help="gap ratio, e.g. 2 or 3/2")
    p.add_argument("--palindrome", action="store_true")

    p = add("equation", _cmd_equation, "classify and solve a word equation within a bound")
    p.add_argument("equation")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--mode", choices=["erasing", "nonerasing"], default="nonerasing")
    return parser


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_info:
        return EXIT_USAGE if exit_info.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except PatternSyntaxError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except PatvarsError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
