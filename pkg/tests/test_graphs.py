"""Pattern graphs, exact cutwidth, and the word/graph reductions."""

import itertools
import random

import pytest

from patvars import (
    GraphError,
    Multigraph,
    PatternSyntaxError,
    cutwidth_exact,
    graph_to_words,
    locality_number,
    parse_graph_file,
    parse_pattern,
    parse_word,
    render_graph_file,
    standard_graph,
    word_to_graph,
)
from patvars.graphs import cut_profile, eulerian_circuit, pattern_graph_to_dot

import oracles


def connected_multigraphs(n, max_edges):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for m in range(1, max_edges + 1):
        for combo in itertools.combinations_with_replacement(pairs, m):
            g = Multigraph.build(n, combo)
            if g.is_connected():
                yield g


class TestStandardGraph:
    def test_thirteen_position_pattern(self):
        g = standard_graph(parse_pattern("[x1][x2][x3]bb[x2][x1]a[x2][x3][x2]c[x1]"))
        assert g.vertex_count == 13
        assert len(g.neighbour_edges) == 12
        assert set(g.equality_edges) == {(1, 7), (7, 13), (2, 6), (6, 9), (9, 11), (3, 10)}
        assert set(g.terminal_vertices) == {4, 5, 8, 12}

    def test_single_vertex(self):
        g = standard_graph(parse_pattern("[x1]"))
        assert (g.vertex_count, g.neighbour_edges, g.equality_edges) == (1, (), ())

    def test_adjacent_occurrences(self):
        g = standard_graph(parse_pattern("[x1][x1]"))
        assert g.neighbour_edges == ((1, 2),) and g.equality_edges == ((1, 2),)

    def test_edge_counts(self):
        rng = random.Random(2)
        for _ in range(100):
            length = rng.randint(1, 12)
            text = "".join(
                rng.choice(["a", "b", "[x1]", "[x2]", "[x3]"]) for _ in range(length)
            )
            p = parse_pattern(text)
            g = standard_graph(p)
            assert len(g.neighbour_edges) == len(p.symbols) - 1
            counts = p.occurrence_counts()
            assert len(g.equality_edges) == sum(c - 1 for c in counts)

    def test_dot_export(self):
        dot = pattern_graph_to_dot(parse_pattern("[x1]a[x1]"))
        assert "style=dashed" in dot and "fillcolor=grey" in dot


class TestCutwidth:
    def test_point_values(self):
        assert cutwidth_exact(Multigraph.build(2, [(1, 2)]))[0] == 1
        assert cutwidth_exact(Multigraph.build(3, [(1, 2), (2, 3), (1, 3)]))[0] == 2
        k4 = Multigraph.build(4, list(itertools.combinations(range(1, 5), 2)))
        assert cutwidth_exact(k4)[0] == 4

    def test_witness_achieves_value(self):
        for g in connected_multigraphs(4, 4):
            value, arrangement = cutwidth_exact(g)
            assert cut_profile(g, arrangement) == value

    def test_matches_permutation_search(self):
        for n in (2, 3, 4):
            for g in connected_multigraphs(n, 4):
                assert cutwidth_exact(g)[0] == oracles.cutwidth_brute(n, g.edges)
        rng = random.Random(6)
        for _ in range(100):
            n = rng.randint(2, 5)
            edges = []
            for _ in range(rng.randint(1, 6)):
                u, v = rng.sample(range(1, n + 1), 2)
                edges.append((u, v))
            g = Multigraph.build(n, edges)
            assert cutwidth_exact(g)[0] == oracles.cutwidth_brute(n, g.edges)

    def test_doubling_edges_doubles_cutwidth(self):
        for g in connected_multigraphs(4, 3):
            doubled = Multigraph.build(4, g.edges + g.edges)
            assert cutwidth_exact(doubled)[0] == 2 * cutwidth_exact(g)[0]

    def test_caps_and_validation(self):
        with pytest.raises(GraphError):
            cutwidth_exact(Multigraph.build(21, [(1, 2)]))
        with pytest.raises(GraphError):
            Multigraph.build(2, [(1, 1)])


class TestGraphFile:
    def test_round_trip(self):
        g = Multigraph.build(3, [(1, 2), (1, 2), (2, 3)])
        assert parse_graph_file(render_graph_file(g)) == g

    def test_comments_and_duplicates(self):
        g = parse_graph_file("# cover\n3 3\n1 2\n1 2\n2 3\n")
        assert g.edge_count == 3 and g.edges.count((1, 2)) == 2

    @pytest.mark.parametrize(
        "text", ["", "2\n", "2 1\n", "2 1\n1 2 3\n", "1 1\nx y\n", "2 2\n1 2\n"]
    )
    def test_format_errors(self, text):
        with pytest.raises(PatternSyntaxError):
            parse_graph_file(text)

    def test_semantic_errors(self):
        with pytest.raises(GraphError):
            parse_graph_file("2 1\n1 1\n")
        with pytest.raises(GraphError):
            parse_graph_file("2 1\n1 3\n")


class TestGraphToWords:
    def test_single_edge(self):
        words = graph_to_words(Multigraph.build(2, [(1, 2)]))
        assert {w.render() for w in words.values()} == {"aba", "bab"}
        assert min(locality_number(w)[0] for w in words.values()) == 1

    def test_triangle(self):
        g = Multigraph.build(3, [(1, 2), (2, 3), (1, 3)])
        words = graph_to_words(g)
        assert all(len(w) == 7 for w in words.values())
        assert min(locality_number(w)[0] for w in words.values()) == 2

    def test_path(self):
        g = Multigraph.build(3, [(1, 2), (2, 3)])
        words = graph_to_words(g)
        assert min(locality_number(w)[0] for w in words.values()) == 1

    def test_rejects_bad_inputs(self):
        with pytest.raises(GraphError):
            graph_to_words(Multigraph.build(3, [(1, 2)]))  # vertex 3 isolated
        with pytest.raises(GraphError):
            graph_to_words(Multigraph.build(2, []))

    def test_contract_exhaustive_small(self):
        for n in (2, 3, 4):
            for g in connected_multigraphs(n, 4):
                cw = cutwidth_exact(g)[0]
                locs = [locality_number(w)[0] for w in graph_to_words(g).values()]
                assert min(locs) == cw
                assert all(l >= cw for l in locs)

    def test_eulerian_circuit_structure(self):
        edges = [(1, 2), (1, 2), (2, 3), (2, 3)]
        circuit = eulerian_circuit(3, edges)
        assert circuit[0] == circuit[-1]
        assert len(circuit) == len(edges) + 1
        used = sorted(tuple(sorted(p)) for p in zip(circuit, circuit[1:]))
        assert used == sorted(edges)


class TestWordToGraph:
    def test_two_letter_path(self):
        g = word_to_graph(parse_word("ab"))
        assert g.vertex_count == 4 and cutwidth_exact(g)[0] == 1

    def test_known_word(self):
        g = word_to_graph(parse_word("agagcac"))
        value = cutwidth_exact(g)[0]
        assert 2 * 2 - 2 <= value <= 2 * 2

    def test_rejects_unary(self):
        with pytest.raises(GraphError):
            word_to_graph(parse_word("aaa"))

    def test_bracket_exhaustive_small(self):
        def canonical_words(n, sigma):
            def rec(prefix, used):
                if len(prefix) == n:
                    yield tuple(prefix)
                    return
                for s in range(min(used + 1, sigma)):
                    prefix.append(s)
                    yield from rec(prefix, max(used, s + 1))
                    prefix.pop()
            yield from rec([], 0)

        for n in range(2, 8):
            for seq in canonical_words(n, 4):
                if len(set(seq)) < 2:
                    continue
                loc = locality_number(seq)[0]
                value = cutwidth_exact(word_to_graph(seq))[0]
                assert 2 * loc - 2 <= value <= 2 * loc
