"""Pattern graphs, exact cutwidth, and the word/graph parameter bridge.

Cutwidth of a multigraph and locality of a word are tied together by two
reductions: doubling the edges of a graph and reading an Eulerian circuit
produces words whose best locality equals the cutwidth, and conversely the
adjacency structure of a word yields a multigraph whose cutwidth brackets
twice the locality number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import TERMINAL_CHARS, Pattern, Word, variable_id
from .errors import GraphError, PatternSyntaxError
from .structure import locality_number

MAX_EXACT_CUTWIDTH_VERTICES = 20


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``1..vertex_count``; no self-loops."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def build(vertex_count: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        normal = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range")
            normal.append((u, v) if u < v else (v, u))
        normal.sort()
        return Multigraph(vertex_count, tuple(normal))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * (self.vertex_count + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        """Connected as a graph on the full vertex set (isolated vertices count)."""
        if self.vertex_count <= 1:
            return True
        adjacency: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.vertex_count


@dataclass(frozen=True)
class LinearArrangement:
    """A vertex order witnessing a cutwidth value."""

    order: tuple[int, ...]


def parse_graph_file(text: str) -> Multigraph:
    """Parse the line-based graph format: ``n m`` then ``u v`` per edge.

    Lines starting with ``#`` are comments; duplicate edge lines denote
    parallel edges.  Format errors raise :class:`PatternSyntaxError` with
    the line number; semantic errors (self-loops, ranges) raise
    :class:`GraphError`.
    """
    numbered = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise PatternSyntaxError("empty graph file", 1)
    head_no, head_line = numbered[0]
    head = head_line.split()
    if len(head) != 2 or not all(p.lstrip("-").isdigit() for p in head):
        raise PatternSyntaxError(f"bad header line {head_line!r}", head_no)
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0 or len(numbered) - 1 != m:
        raise PatternSyntaxError(
            f"header announces {m} edges, found {len(numbered) - 1}", head_no
        )
    edges = []
    for line_no, line in numbered[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise PatternSyntaxError(f"bad edge line {line!r}", line_no)
        edges.append((int(parts[0]), int(parts[1])))
    return Multigraph.build(n, edges)


def render_graph_file(graph: Multigraph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PatternGraph:
    """Standard graph representation of a pattern.

    One vertex per pattern position (1-indexed); neighbour edges join
    consecutive positions, equality edges join consecutive occurrences of
    the same variable, and terminal positions are flagged.
    """

    vertex_count: int
    neighbour_edges: tuple[tuple[int, int], ...]
    equality_edges: tuple[tuple[int, int], ...]
    terminal_vertices: tuple[int, ...]


def standard_graph(pattern: Pattern) -> PatternGraph:
    """Build the standard graph representation of a pattern."""
    m = len(pattern.symbols)
    neighbour = tuple((i, i + 1) for i in range(1, m))
    previous: dict[int, int] = {}
    equality = []
    terminals = []
    for pos, s in enumerate(pattern.symbols, start=1):
        if s >= 0:
            terminals.append(pos)
            continue
        if s in previous:
            equality.append((previous[s], pos))
        previous[s] = pos
    return PatternGraph(m, neighbour, tuple(equality), tuple(terminals))


def pattern_graph_to_dot(pattern: Pattern) -> str:
    """DOT rendering: grey terminal vertices, dashed equality edges."""
    graph = standard_graph(pattern)
    terminal_set = set(graph.terminal_vertices)
    lines = ["graph pattern {"]
    for v in range(1, graph.vertex_count + 1):
        s = pattern.symbols[v - 1]
        label = TERMINAL_CHARS[s] if s >= 0 else pattern.var_names[variable_id(s)]
        shade = ", style=filled, fillcolor=grey" if v in terminal_set else ""
        lines.append(f'  {v} [label="{label}"{shade}];')
    for u, v in graph.neighbour_edges:
        lines.append(f"  {u} -- {v};")
    for u, v in graph.equality_edges:
        lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cutwidth_exact(graph: Multigraph) -> tuple[int, LinearArrangement]:
    """Exact cutwidth by dynamic programming over vertex subsets.

    ``f(S) = min over v in S of max(f(S - v), cut(S))`` where ``cut(S)``
    counts edges with exactly one endpoint in S; a witness arrangement is
    reconstructed from the choices.  Vertex count is capped at
    ``MAX_EXACT_CUTWIDTH_VERTICES``.
    """
    n = graph.vertex_count
    if n > MAX_EXACT_CUTWIDTH_VERTICES:
        raise GraphError(
            f"cutwidth DP is capped at {MAX_EXACT_CUTWIDTH_VERTICES} vertices"
        )
    if n == 0:
        return 0, LinearArrangement(())
    weight = [[0] * n for _ in range(n)]
    deg = [0] * n
    for u, v in graph.edges:
        weight[u - 1][v - 1] += 1
        weight[v - 1][u - 1] += 1
        deg[u - 1] += 1
        deg[v - 1] += 1

    size = 1 << n
    cut = [0] * size
    for mask in range(1, size):
        xbit = mask & -mask
        x = xbit.bit_length() - 1
        rest = mask ^ xbit
        inside = 0
        t = rest
        row = weight[x]
        while t:
            bbit = t & -t
            t ^= bbit
            inside += row[bbit.bit_length() - 1]
        cut[mask] = cut[rest] + deg[x] - 2 * inside

    f = [0] * size
    pick = [0] * size
    for mask in range(1, size):
        base = cut[mask]
        best = None
        best_x = -1
        t = mask
        while t:
            xbit = t & -t
            t ^= xbit
            prev = f[mask ^ xbit]
            val = prev if prev > base else base
            if best is None or val < best:
                best = val
                best_x = xbit.bit_length() - 1
        f[mask] = best
        pick[mask] = best_x

    order_rev = []
    mask = size - 1
    while mask:
        x = pick[mask]
        order_rev.append(x + 1)
        mask ^= 1 << x
    return f[size - 1], LinearArrangement(tuple(reversed(order_rev)))


def cut_profile(graph: Multigraph, arrangement: LinearArrangement) -> int:
    """Maximum number of edges crossing a prefix of the arrangement."""
    position = {v: i for i, v in enumerate(arrangement.order)}
    n = len(arrangement.order)
    delta = [0] * (n + 1)
    for u, v in graph.edges:
        a, b = sorted((position[u], position[v]))
        delta[a + 1] += 1
        delta[b + 1] -= 1
    best = 0
    depth = 0
    for i in range(1, n):
        depth += delta[i]
        best = max(best, depth)
    return best


def eulerian_circuit(vertex_count: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    """Vertex sequence of an Eulerian circuit (first == last).

    Requires all degrees even and all edges in one component.  Traversal is
    deterministic: the lowest-indexed unused edge leaves each vertex first.
    """
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count + 1)]
    for idx, (u, v) in enumerate(edges):
        adjacency[u].append((v, idx))
        adjacency[v].append((u, idx))
    for lst in adjacency:
        lst.sort()
        lst.reverse()  # pop() then yields the smallest (neighbour, edge id)
    used = [False] * len(edges)
    start = min(u for edge in edges for u in edge)
    stack = [start]
    circuit: list[int] = []
    while stack:
        u = stack[-1]
        bucket = adjacency[u]
        while bucket and used[bucket[-1][1]]:
            bucket.pop()
        if bucket:
            v, idx = bucket.pop()
            used[idx] = True
            stack.append(v)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if len(circuit) != len(edges) + 1:
        raise GraphError("graph has no Eulerian circuit over all edges")
    return circuit


def graph_to_words(graph: Multigraph) -> dict[int, Word]:
    """Words over the vertex alphabet whose best locality is the cutwidth.

    Every edge is doubled (making all degrees even), an Eulerian circuit of
    the doubled graph is computed, and for each vertex the circuit is
    rotated to start there, giving one word of length ``2|E| + 1`` per
    vertex.  The minimum locality number over the emitted words equals the
    cutwidth of the graph.
    """
    if graph.edge_count == 0:
        raise GraphError("graph has no edges")
    if not graph.is_connected():
        raise GraphError("graph is not connected")
    if graph.vertex_count > 256:
        raise GraphError("vertex alphabet too large to encode")
    doubled = graph.edges + graph.edges
    circuit = eulerian_circuit(graph.vertex_count, doubled)
    cyclic = circuit[:-1]
    length = len(cyclic)
    words: dict[int, Word] = {}
    for vertex in range(1, graph.vertex_count + 1):
        at = cyclic.index(vertex)
        rotation = cyclic[at:] + cyclic[:at] + [vertex]
        words[vertex] = Word(bytes(v - 1 for v in rotation))
    return words


def word_to_graph(word: Word | Sequence[int]) -> Multigraph:
    """Multigraph whose cutwidth two-sidedly brackets twice the locality.

    Vertices are the distinct symbols plus two endpoint sentinels; there is
    one edge per adjacent pair of distinct symbols, and one edge tying each
    end of the word to its sentinel.  For every word,
    ``2 loc - 2 <= cutwidth <= 2 loc``.
    """
    seq = tuple(word.letters) if isinstance(word, Word) else tuple(word)
    if not seq:
        raise GraphError("empty word")
    symbols = sorted(set(seq))
    if len(symbols) < 2:
        raise GraphError("word uses a single symbol; bracket is degenerate")
    index = {s: i + 1 for i, s in enumerate(symbols)}
    sentinel_start = len(symbols) + 1
    sentinel_end = len(symbols) + 2
    edges = [(sentinel_start, index[seq[0]])]
    for a, b in zip(seq, seq[1:]):
        if a != b:
            edges.append((index[a], index[b]))
    edges.append((index[seq[-1]], sentinel_end))
    return Multigraph.build(sentinel_end, edges)


def min_locality_over_words(words: dict[int, Word]) -> int:
    """Convenience: minimum locality number over emitted rotation words."""
    return min(locality_number(w)[0] for w in words.values())
