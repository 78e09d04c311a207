# permanent.py ---
#
# Filename: permanent.py
#
# Commentary:
#
# Exact permanents. The definition and Ryser's formula serve as oracles
# for a dynamic program over a tree decomposition of the support graph
# whose cost is exponential in the width only.
#
# The program counts weighted systems of arcs i -> j (one per row i and
# one per column j). A state records, for every vertex of the current bag,
# whether its row and its column are already used. Arcs between u and the
# other bag vertices are decided when u is forgotten.
#
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import permutations

import networkx as nx
from networkx.algorithms.approximation import (treewidth_min_degree,
                                               treewidth_min_fill_in)

from polyzoo.config import DEFAULT_BUDGET
from polyzoo.errors import GraphParseError, InvalidDecomposition
from polyzoo.graph import Graph
from polyzoo.poly import UniPoly
from polyzoo.utils import significant_lines

DECOMPOSITION_SEPARATOR = "--"


@dataclass(frozen=True)
class IntMatrix:
    """A square matrix of Python integers, stored as a tuple of row tuples."""
    n: int
    rows: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Negative dimension: {self.n}")
        if len(self.rows) != self.n or any(len(row) != self.n for row in self.rows):
            raise ValueError(f"Matrix is not {self.n} x {self.n}")

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        return cls(len(rows), rows)

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n):
        return cls.from_rows([[1] * n for _ in range(n)])

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def transpose(self):
        return IntMatrix.from_rows(zip(*self.rows)) if self.n else self

    def is_symmetric(self):
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(i + 1, self.n))

    def scale_row(self, i, factor):
        rows = [list(row) for row in self.rows]
        rows[i] = [factor * a for a in rows[i]]
        return IntMatrix.from_rows(rows)

    def to_text(self):
        lines = [str(self.n)] + [" ".join(str(a) for a in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def parse_matrix(text):
    """Reads "n" on the first line followed by n rows of n integers."""
    lines = significant_lines(text)
    if not lines:
        raise GraphParseError("Empty matrix input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphParseError(f"Expected the dimension on the first line, got {lines[0]!r}") from None
    if n < 0:
        raise GraphParseError(f"Negative matrix dimension: {n}")
    if len(lines) - 1 != n:
        raise GraphParseError(f"Expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != n:
            raise GraphParseError(f"Row on line {lineno} has {len(tokens)} entries, expected {n}")
        try:
            rows.append([int(t) for t in tokens])
        except ValueError:
            raise GraphParseError(f"Non-integer entry on line {lineno}: {line!r}") from None
    return IntMatrix.from_rows(rows)


def permanent_naive(matrix, budget=None):
    """per(M) as the sum over all permutations s of prod_i M[i, s(i)]."""
    (budget or DEFAULT_BUDGET).check('max_naive_n', matrix.n, f"{matrix.n}! permutations")
    total = 0
    for perm in permutations(range(matrix.n)):
        product = 1
        for i, j in enumerate(perm):
            product *= matrix.rows[i][j]
            if not product:
                break
        total += product
    return total


def permanent_ryser(matrix, budget=None):
    """Ryser's inclusion-exclusion over column subsets in Gray code order.

    per(M) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} M[i, j]; the row
    sums are updated one column at a time and rows with a zero sum are
    counted so that vanishing products are skipped.
    """
    n = matrix.n
    (budget or DEFAULT_BUDGET).check('max_ryser_n', n, f"2^{n} column subsets")
    if n == 0:
        return 1
    columns = [[(i, matrix.rows[i][j]) for i in range(n) if matrix.rows[i][j]]
               for j in range(n)]
    sums = [0] * n
    zeros = n
    chosen = [False] * n
    total = 0
    size = 0
    for step in range(1, 1 << n):
        j = (step & -step).bit_length() - 1
        sign = -1 if chosen[j] else 1
        chosen[j] = not chosen[j]
        size += sign
        for i, a in columns[j]:
            before = sums[i]
            sums[i] = before + sign * a
            zeros += (sums[i] == 0) - (before == 0)
        if zeros:
            continue
        product = 1
        for value in sums:
            product *= value
        total += -product if size % 2 else product
    return -total if n % 2 else total


def support_graph(matrix):
    """Edge {i, j} iff M[i, j] or M[j, i] is nonzero; a loop at i iff M[i, i] != 0."""
    pairs = [(i, j) for i in range(matrix.n) for j in range(i, matrix.n)
             if matrix.rows[i][j] or matrix.rows[j][i]]
    return Graph.from_edges(matrix.n, pairs)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags of vertices and the tree edges between bag indices."""
    bags: tuple
    edges: tuple = ()

    @property
    def width(self):
        return max((len(bag) for bag in self.bags), default=0) - 1

    def tree(self):
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from(self.edges)
        return tree

    def to_text(self):
        lines = [" ".join(str(v) for v in sorted(bag)) or '-' for bag in self.bags]
        lines.append(DECOMPOSITION_SEPARATOR)
        lines.extend(f"{i} {j}" for i, j in self.edges)
        return "\n".join(lines) + "\n"


def parse_decomposition(text):
    """Reads bags, one per line, then a '--' line, then tree edges "i j".

    A bag line of a single '-' denotes the empty bag.
    """
    bags, edges = [], []
    in_edges = False
    for line in significant_lines(text):
        if line == DECOMPOSITION_SEPARATOR:
            if in_edges:
                raise GraphParseError("Repeated '--' separator in decomposition")
            in_edges = True
            continue
        try:
            numbers = [] if line == '-' else [int(t) for t in line.split()]
        except ValueError:
            raise GraphParseError(f"Non-integer token in decomposition line {line!r}") from None
        if in_edges:
            if len(numbers) != 2:
                raise GraphParseError(f"Expected a tree edge 'i j', got {line!r}")
            edges.append(tuple(numbers))
        else:
            bags.append(frozenset(numbers))
    return TreeDecomposition(tuple(bags), tuple(edges))


def greedy_tree_decomposition(graph, heuristic='min_fill_in'):
    """A tree decomposition from greedy elimination (networkx heuristics).

    Loops and parallel edges play no role; the width is an upper bound on
    the treewidth.
    """
    if graph.n == 0:
        return TreeDecomposition((frozenset(),))
    simple = nx.Graph()
    simple.add_nodes_from(range(graph.n))
    simple.add_edges_from((u, v) for u, v, _ in graph.edges if u != v)
    if heuristic == 'min_fill_in':
        _, decomposition = treewidth_min_fill_in(simple)
    elif heuristic == 'min_degree':
        _, decomposition = treewidth_min_degree(simple)
    else:
        raise ValueError(f"Unknown elimination heuristic: {heuristic}")
    bags = list(decomposition.nodes())
    index = {bag: i for i, bag in enumerate(bags)}
    edges = tuple(sorted(tuple(sorted((index[a], index[b]))) for a, b in decomposition.edges()))
    result = TreeDecomposition(tuple(frozenset(bag) for bag in bags), edges)
    logging.debug(f"Greedy {heuristic} decomposition: {len(bags)} bags, width {result.width}")
    return result


def decomposition_problem(graph, decomposition):
    """Describes the first violated decomposition condition, or None."""
    bags = decomposition.bags
    if not bags:
        return None if graph.n == 0 else "no bags"
    for idx, bag in enumerate(bags):
        stray = [v for v in bag if not 0 <= v < graph.n]
        if stray:
            return f"bag {idx} holds unknown vertices {sorted(stray)}"
    for i, j in decomposition.edges:
        if not (0 <= i < len(bags) and 0 <= j < len(bags)):
            return f"tree edge ({i}, {j}) refers to a missing bag"
    tree = decomposition.tree()
    if not nx.is_tree(tree):
        return "the bags do not form a tree"
    covered = set().union(*bags)
    missing = [v for v in range(graph.n) if v not in covered]
    if missing:
        return f"vertices {missing} occur in no bag"
    for u, v, _ in graph.edges:
        if u != v and not any(u in bag and v in bag for bag in bags):
            return f"edge ({u}, {v}) is in no bag"
    for v in range(graph.n):
        holders = [idx for idx, bag in enumerate(bags) if v in bag]
        if not nx.is_connected(tree.subgraph(holders)):
            return f"the bags containing vertex {v} are not connected"
    return None


def validate_tree_decomposition(graph, decomposition):
    return decomposition_problem(graph, decomposition) is None


def _drop_bit(mask, pos):
    low = mask & ((1 << pos) - 1)
    return low | ((mask >> (pos + 1)) << pos)


def _forget(states, order, u, matrix):
    """Decides the remaining arcs of u against the bag and removes u."""
    pos = order.index(u)
    bit = 1 << pos
    rows = matrix.rows
    loop = rows[u][u]
    outgoing = [(1 << i, rows[u][w]) for i, w in enumerate(order) if w != u and rows[u][w]]
    incoming = [(1 << i, rows[w][u]) for i, w in enumerate(order) if w != u and rows[w][u]]
    result = defaultdict(int)
    for (used_rows, used_cols), weight in states.items():
        if used_rows & bit:
            partial = [(used_rows, used_cols, weight)]
        else:
            partial = []
            if loop and not used_cols & bit:
                partial.append((used_rows | bit, used_cols | bit, weight * loop))
            for w_bit, a in outgoing:
                if not used_cols & w_bit:
                    partial.append((used_rows | bit, used_cols | w_bit, weight * a))
        for r, c, wt in partial:
            if c & bit:
                result[(_drop_bit(r, pos), _drop_bit(c, pos))] += wt
                continue
            for w_bit, a in incoming:
                if not r & w_bit:
                    r2 = r | w_bit
                    result[(_drop_bit(r2, pos), _drop_bit(c | bit, pos))] += wt * a
    order = order[:pos] + order[pos + 1:]
    return {key: value for key, value in result.items() if value}, order


def _realign(states, old_order, new_order):
    """Re-indexes state bits from old_order to new_order (a superset)."""
    if old_order == new_order:
        return states
    shift = [new_order.index(w) for w in old_order]

    def move(mask):
        moved = 0
        for i, target in enumerate(shift):
            if mask >> i & 1:
                moved |= 1 << target
        return moved

    result = defaultdict(int)
    for (r, c), weight in states.items():
        result[(move(r), move(c))] += weight
    return dict(result)


def _submasks(mask):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def _join(first, second, full):
    """Combines two children: row and column usage must be disjoint."""
    if len(first) > len(second):
        first, second = second, first
    result = defaultdict(int)
    pairwise = len(first) * len(second)
    by_subsets = sum(1 << (2 * full.bit_count() - r.bit_count() - c.bit_count())
                     for r, c in first)
    if pairwise <= by_subsets:
        for (r1, c1), w1 in first.items():
            for (r2, c2), w2 in second.items():
                if not (r1 & r2 or c1 & c2):
                    result[(r1 | r2, c1 | c2)] += w1 * w2
    else:
        for (r1, c1), w1 in first.items():
            for r2 in _submasks(full & ~r1):
                for c2 in _submasks(full & ~c1):
                    w2 = second.get((r2, c2))
                    if w2:
                        result[(r1 | r2, c1 | c2)] += w1 * w2
    return {key: value for key, value in result.items() if value}


def permanent_tw(matrix, decomposition=None, budget=None):
    """Permanent by dynamic programming over a tree decomposition of the support.

    Args:
        matrix (IntMatrix): The matrix.
        decomposition (TreeDecomposition): A decomposition of
            support_graph(matrix); computed greedily if omitted.
        budget (Budget): max_width caps the decomposition width.

    Returns:
        int: The exact permanent.
    """
    budget = budget or DEFAULT_BUDGET
    support = support_graph(matrix)
    if decomposition is None:
        decomposition = greedy_tree_decomposition(support)
    problem = decomposition_problem(support, decomposition)
    if problem:
        raise InvalidDecomposition(f"Invalid tree decomposition: {problem}")
    budget.check('max_width', decomposition.width, "tree decomposition width")
    if matrix.n == 0:
        return 1

    bags = decomposition.bags
    tree = decomposition.tree()
    parent = {0: None}
    visit = [0]
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for child in sorted(tree.neighbors(node)):
            if child not in parent:
                parent[child] = node
                visit.append(child)
                queue.append(child)
    children = defaultdict(list)
    for node in visit[1:]:
        children[parent[node]].append(node)

    tables = {}
    largest = 0
    for node in reversed(visit):
        order = tuple(sorted(bags[node]))
        full = (1 << len(order)) - 1
        states = {(0, 0): 1}
        for child in children[node]:
            child_states, child_order = tables.pop(child)
            for u in [w for w in child_order if w not in bags[node]]:
                child_states, child_order = _forget(child_states, child_order, u, matrix)
            states = _join(states, _realign(child_states, child_order, order), full)
        largest = max(largest, len(states))
        tables[node] = (states, order)

    states, order = tables.pop(0)
    for u in list(order):
        states, order = _forget(states, order, u, matrix)
    logging.debug(f"Treewidth permanent: width {decomposition.width}, "
                  f"{len(bags)} bags, at most {largest} states")
    return states.get((0, 0), 0)


def adjacency_permanent_poly(graph, budget=None):
    """per of the matrix with x at every edge position: C(G) x^n, where C(G)
    counts the loop-free cycle covers of G."""
    budget = budget or DEFAULT_BUDGET
    if graph.has_loop:
        raise ValueError("The adjacency permanent is defined here for loopless graphs")
    pattern = IntMatrix.from_rows(
        [[1 if graph.mult(i, j) else 0 for j in range(graph.n)] for i in range(graph.n)])
    if graph.n <= budget.max_ryser_n:
        count = permanent_ryser(pattern, budget)
    else:
        count = permanent_tw(pattern, budget=budget)
    return UniPoly.monomial(graph.n, count)

#
# permanent.py ends here
