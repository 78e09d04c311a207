# graph.py ---
#
# Filename: graph.py
#
# Commentary:
#
# Finite undirected multigraphs with loops, their structural operations
# (deletion, contraction, disjoint union) and the textual formats they are
# read from and written to.
#
# The graph6 codec is written out here so that networkx can serve as an
# independent codec to check it against.
#
import re
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from polyzoo.errors import GraphParseError
from polyzoo.utils import significant_lines

CANONICAL_LIMIT = 10
GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class EdgeRef:
    """One occurrence of the edge {u, v} inside its parallel class."""
    u: int
    v: int
    index: int = 0

    def __post_init__(self):
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, 'u', u)
            object.__setattr__(self, 'v', v)
        if self.index < 0:
            raise ValueError(f"Negative occurrence index in {self}")

    @property
    def is_loop(self):
        return self.u == self.v


@dataclass(frozen=True)
class Graph:
    """A multigraph on the vertices 0..n-1.

    edges is a sorted tuple of (u, v, multiplicity) with u <= v, one entry
    per parallel class. Use Graph.from_edges to build one from a list of
    vertex pairs.
    """
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Negative vertex count: {self.n}")
        previous = None
        for u, v, mult in self.edges:
            if not 0 <= u <= v < self.n:
                raise ValueError(f"Edge ({u}, {v}) out of range for n={self.n}")
            if mult < 1:
                raise ValueError(f"Edge ({u}, {v}) has multiplicity {mult}")
            if previous is not None and (u, v) <= previous:
                raise ValueError("Edge classes must be sorted and distinct")
            previous = (u, v)

    @classmethod
    def from_edges(cls, n, pairs=()):
        """Builds a graph from vertex pairs; repeated pairs raise the multiplicity."""
        counter = Counter()
        for u, v in pairs:
            if u < 0 or v < 0 or u >= n or v >= n:
                raise ValueError(f"Endpoint of ({u}, {v}) out of range for n={n}")
            counter[(min(u, v), max(u, v))] += 1
        return cls(n, tuple((u, v, m) for (u, v), m in sorted(counter.items())))

    @classmethod
    def from_networkx(cls, nx_graph):
        """Converts a networkx (multi)graph; nodes are numbered in iteration order."""
        index = {node: i for i, node in enumerate(nx_graph.nodes())}
        pairs = [(index[a], index[b]) for a, b in nx_graph.edges()]
        return cls.from_edges(len(index), pairs)

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edge_occurrences())
        return graph

    @cached_property
    def multiplicity(self):
        return {(u, v): m for u, v, m in self.edges}

    @cached_property
    def adjacency(self):
        """adjacency[u][w] is the number of edges between u and w."""
        adj = [dict() for _ in range(self.n)]
        for u, v, m in self.edges:
            adj[u][v] = m
            adj[v][u] = m
        return adj

    @property
    def num_edges(self):
        return sum(m for _, _, m in self.edges)

    @property
    def has_loop(self):
        return any(u == v for u, v, _ in self.edges)

    @property
    def is_simple(self):
        return all(u != v and m == 1 for u, v, m in self.edges)

    def mult(self, u, v):
        return self.multiplicity.get((min(u, v), max(u, v)), 0)

    def degree(self, v):
        """Degree of v; a loop contributes two."""
        return sum(self.adjacency[v].values()) + self.adjacency[v].get(v, 0)

    def edge_occurrences(self):
        """All edges as (u, v) pairs, each parallel copy listed separately."""
        return [(u, v) for u, v, m in self.edges for _ in range(m)]

    def edge_refs(self):
        return [EdgeRef(u, v, i) for u, v, m in self.edges for i in range(m)]

    def neighbors(self, v):
        return [w for w in self.adjacency[v] if w != v]

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edge_occurrences()})"


def parse_edge_list(text):
    """Reads a graph from edge-list text.

    The first line holds the vertex count, each further line one pair
    "u v". Lines may also be separated by '/' or ';' and '#' starts a
    comment, so "3 / 0 1 / 1 2" is the path on three vertices.
    """
    lines = significant_lines(text, "\n/;")
    if not lines:
        raise GraphParseError("Empty edge list")
    header = lines[0].split()
    if len(header) != 1:
        raise GraphParseError(f"Expected the vertex count alone on the first line, got {lines[0]!r}")
    n = _parse_int(header[0], "vertex count")
    if n < 0:
        raise GraphParseError(f"Negative vertex count: {n}")
    pairs = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"Expected 'u v' on line {lineno}, got {line!r}")
        u, v = (_parse_int(t, f"endpoint on line {lineno}") for t in tokens)
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphParseError(f"Endpoint {w} out of range 0..{n - 1} on line {lineno}")
        pairs.append((u, v))
    return Graph.from_edges(n, pairs)


def format_edge_list(graph):
    lines = [str(graph.n)] + [f"{u} {v}" for u, v in graph.edge_occurrences()]
    return "\n".join(lines) + "\n"


def _parse_int(token, what):
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"Non-integer {what}: {token!r}") from None


def parse_graph6(line):
    """Decodes one graph6 string (simple graphs)."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise GraphParseError("Empty graph6 string")
    for pos, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise GraphParseError(f"Character {char!r} outside the graph6 alphabet", pos)
    data = [ord(c) - 63 for c in text]
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for value in data[2:8]:
            n = (n << 6) | value
        body = data[8:]
    else:
        raise GraphParseError("Truncated graph6 size field")
    n_bits = n * (n - 1) // 2
    if len(body) != (n_bits + 5) // 6:
        raise GraphParseError(f"Bad graph6 length: {len(body)} data bytes for n={n}")
    bits = []
    for value in body:
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[n_bits:]):
        raise GraphParseError("Nonzero padding bits in graph6 string")
    pairs, pos = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                pairs.append((i, j))
            pos += 1
    return Graph.from_edges(n, pairs)


def to_graph6(graph):
    """Encodes a simple graph as a graph6 string (without header)."""
    if not graph.is_simple:
        raise ValueError("graph6 encodes simple graphs only")
    n = graph.n
    if n < 63:
        size = [n]
    elif n <= 258047:
        size = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        size = [63, 63] + [(n >> shift) & 63 for shift in range(30, -1, -6)]
    bits = [1 if (i, j) in graph.multiplicity else 0
            for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(value + 63) for value in size + body)


def delete_edge(graph, ref):
    """Removes one occurrence of the referenced edge."""
    mult = graph.mult(ref.u, ref.v)
    if ref.index >= mult:
        raise ValueError(f"Dangling edge reference {ref} in {graph}")
    edges = []
    for u, v, m in graph.edges:
        if (u, v) == (ref.u, ref.v):
            m -= 1
        if m:
            edges.append((u, v, m))
    return Graph(graph.n, tuple(edges))


def contract_edge(graph, ref):
    """Contracts one occurrence of the edge {u, v}, u < v.

    The merged vertex keeps the number u, vertices above v shift down by
    one, and the remaining parallel copies of {u, v} become loops at u.
    """
    if ref.index >= graph.mult(ref.u, ref.v):
        raise ValueError(f"Dangling edge reference {ref} in {graph}")
    if ref.is_loop:
        raise ValueError(f"Cannot contract the loop {ref}")
    u, v = ref.u, ref.v

    def image(w):
        if w == v:
            return u
        return w - 1 if w > v else w

    pairs = Counter()
    for a, b, m in graph.edges:
        if (a, b) == (u, v):
            m -= 1
        if m:
            a2, b2 = image(a), image(b)
            pairs[(min(a2, b2), max(a2, b2))] += m
    return Graph(graph.n - 1, tuple((a, b, m) for (a, b), m in sorted(pairs.items())))


def disjoint_union(first, second):
    shift = first.n
    edges = first.edges + tuple((u + shift, v + shift, m) for u, v, m in second.edges)
    return Graph(first.n + second.n, edges)


def simplify(graph):
    """Collapses parallel classes and drops loops.

    Returns:
        A tuple (simple_graph, had_loop).
    """
    edges = tuple((u, v, 1) for u, v, _ in graph.edges if u != v)
    return Graph(graph.n, edges), graph.has_loop


def induced_subgraph(graph, vertices):
    """Subgraph induced by vertices, renumbered in increasing order."""
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = tuple((index[u], index[v], m) for u, v, m in graph.edges
                  if u in index and v in index)
    return Graph(len(order), tuple(sorted(edges)))


def remove_vertices(graph, vertices):
    removed = set(vertices)
    return induced_subgraph(graph, [v for v in range(graph.n) if v not in removed])


def relabel(graph, perm):
    """Renames vertex v to perm[v]."""
    if sorted(perm) != list(range(graph.n)):
        raise ValueError(f"Not a permutation of 0..{graph.n - 1}: {perm}")
    pairs = Counter()
    for u, v, m in graph.edges:
        a, b = perm[u], perm[v]
        pairs[(min(a, b), max(a, b))] += m
    return Graph(graph.n, tuple((a, b, m) for (a, b), m in sorted(pairs.items())))


def connected_components(graph):
    """Vertex sets of the connected components, ordered by smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(graph.to_networkx())]
    return sorted(components)


def is_connected(graph):
    return graph.n == 0 or len(connected_components(graph)) == 1


def canonical_key(graph, limit=CANONICAL_LIMIT):
    """A hashable key that is equal for isomorphic graphs with n <= limit.

    Up to the limit the key is the edge multiset under a canonical
    labeling found by color refinement and individualization; above it the
    key is the edge multiset of the given labeling.
    """
    if graph.n > limit:
        return ('labeled', graph.n, graph.edges)
    return ('canonical', graph.n, _canonical_certificate(graph))


def _refine(graph, colors):
    """Color refinement until stable; colors are ranks of sorted signatures."""
    adj = graph.adjacency
    n_colors = len(set(colors))
    while True:
        signatures = [(colors[v],
                       adj[v].get(v, 0),
                       tuple(sorted((colors[w], m) for w, m in adj[v].items() if w != v)))
                      for v in range(graph.n)]
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colors = [ranks[sig] for sig in signatures]
        if len(ranks) == n_colors:
            return colors
        n_colors = len(ranks)


def _are_twins(graph, u, v):
    """True if swapping u and v is an automorphism."""
    adj = graph.adjacency
    if adj[u].get(u, 0) != adj[v].get(v, 0):
        return False
    for w in range(graph.n):
        if w in (u, v):
            continue
        if adj[u].get(w, 0) != adj[v].get(w, 0):
            return False
    return True


def _canonical_certificate(graph):
    best = None
    stack = [_refine(graph, [0] * graph.n)]
    while stack:
        colors = stack.pop()
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            certificate = tuple(sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v]), m)
                for u, v, m in graph.edges))
            if best is None or certificate < best:
                best = certificate
            continue
        # Twins in a cell are interchangeable, one branch covers them all.
        if all(_are_twins(graph, target[0], w) for w in target[1:]):
            branches = target[:1]
        else:
            branches = target
        for v in branches:
            split = [2 * c + (0 if w == v else 1) for w, c in enumerate(colors)]
            stack.append(_refine(graph, split))
    return best


def edgeless(n):
    return Graph(n)


def path(n):
    """The path on n vertices."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    """The cycle on n vertices; C1 is a loop and C2 a double edge."""
    if n < 1:
        raise ValueError("A cycle needs at least one vertex")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m, n):
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n):
    """The star on n vertices: vertex 0 joined to the n-1 others."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


_NAMED = re.compile(r"^(?:K(?P<m>\d+),(?P<k>\d+)|(?P<family>[KEPCS])(?P<n>\d+))$")


def named_graph(name):
    """Builds a graph from a name such as K3, E4, P5, C6, S4, K2,3 or K2+K1."""
    parts = [p.strip() for p in name.split('+')]
    result = Graph(0)
    for part in parts:
        match = _NAMED.match(part)
        if not match:
            raise GraphParseError(f"Unknown graph name: {part!r}")
        if match.group('m') is not None:
            graph = complete_bipartite(int(match.group('m')), int(match.group('k')))
        else:
            builder = {'K': complete, 'E': edgeless, 'P': path,
                       'C': cycle, 'S': star}[match.group('family')]
            try:
                graph = builder(int(match.group('n')))
            except ValueError as e:
                raise GraphParseError(str(e)) from None
        result = disjoint_union(result, graph)
    logging.debug(f"Named graph {name}: {result}")
    return result

#
# graph.py ends here
