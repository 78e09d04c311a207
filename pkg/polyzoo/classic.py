# classic.py ---
#
# Filename: classic.py
#
# Commentary:
#
# Tutte, matching and characteristic polynomials, each with an
# independent oracle: the rank-nullity subset expansion, enumeration of
# k-matchings and the elementary subgraph expansion of the coefficients.
#
import logging
from itertools import combinations

import networkx as nx
import sympy
from networkx.utils import UnionFind

from polyzoo.config import DEFAULT_BUDGET
from polyzoo.errors import BudgetExceeded
from polyzoo.graph import (EdgeRef, Graph, canonical_key, connected_components,
                           contract_edge, delete_edge, induced_subgraph,
                           remove_vertices)
from polyzoo.poly import BiPoly, UniPoly, newton_interpolate


def _split_components(graph):
    """Components with at least one edge, as separate graphs."""
    return [induced_subgraph(graph, vertices) for vertices in connected_components(graph)
            if len(vertices) > 1 or graph.mult(vertices[0], vertices[0])]


class _MemoSolver:
    """Shared bookkeeping: canonical-key memo and a node budget."""

    label = "recursion"

    def __init__(self, budget=None):
        self.budget = budget or DEFAULT_BUDGET
        self.memo = {}
        self.nodes = 0

    def solve(self, graph):
        self.nodes = 0
        result = self._solve(graph)
        logging.debug(f"{self.label}: {self.nodes} recursion nodes, memo size {len(self.memo)}")
        return result

    def _enter(self, graph):
        key = canonical_key(graph, self.budget.canonical_limit)
        if key not in self.memo:
            self.nodes += 1
            if self.nodes > self.budget.max_nodes:
                raise BudgetExceeded('max_nodes', self.budget.max_nodes, self.label)
        return key


class TutteSolver(_MemoSolver):
    label = "tutte"

    def _solve(self, graph):
        if not graph.edges:
            return BiPoly.constant(1)
        components = _split_components(graph)
        if len(components) > 1:
            result = BiPoly.constant(1)
            for component in components:
                result = result * self._solve(component)
            return result
        graph = components[0]
        key = self._enter(graph)
        if key in self.memo:
            return self.memo[key]
        loops = sum(m for u, v, m in graph.edges if u == v)
        if loops:
            rest = Graph(graph.n, tuple(e for e in graph.edges if e[0] != e[1]))
            result = self._solve(rest)
            for _ in range(loops):
                result = result * BiPoly.y()
        else:
            u, v, m = graph.edges[0]
            edge = EdgeRef(u, v)
            contracted = self._solve(contract_edge(graph, edge))
            deleted = delete_edge(graph, edge)
            if m == 1 and not nx.has_path(deleted.to_networkx(), u, v):
                result = BiPoly.x() * contracted
            else:
                result = self._solve(deleted) + contracted
        self.memo[key] = result
        return result


def tutte(graph, budget=None):
    """Tutte polynomial T(G; x, y) by deletion and contraction."""
    return TutteSolver(budget).solve(graph)


def graph_rank(n, pairs):
    """Rank of an edge set: n minus the number of components of (V, pairs)."""
    forest = UnionFind(range(n))
    rank = 0
    for u, v in pairs:
        if forest[u] != forest[v]:
            forest.union(u, v)
            rank += 1
    return rank


def tutte_subset_oracle(graph, budget=None):
    """Tutte polynomial by the subset expansion
    sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))."""
    budget = budget or DEFAULT_BUDGET
    edges = graph.edge_occurrences()
    budget.check('max_subset_edges', len(edges), f"2^{len(edges)} edge subsets")
    full_rank = graph_rank(graph.n, edges)
    x1 = BiPoly({(1, 0): 1, (0, 0): -1})
    y1 = BiPoly({(0, 1): 1, (0, 0): -1})
    counts = {}
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            rank = graph_rank(graph.n, subset)
            key = (full_rank - rank, size - rank)
            counts[key] = counts.get(key, 0) + 1
    result = BiPoly()
    for (i, j), count in counts.items():
        term = BiPoly.constant(count)
        for _ in range(i):
            term = term * x1
        for _ in range(j):
            term = term * y1
        result = result + term
    return result


def chromatic_via_tutte(graph, budget=None):
    """chi(G; k) = (-1)^r(E) k^c(G) T(G; 1-k, 0)."""
    components = len(connected_components(graph))
    rank = graph.n - components
    evaluated = tutte(graph, budget).substitute(UniPoly([1, -1]), UniPoly())
    sign = -1 if rank % 2 else 1
    return evaluated * UniPoly.monomial(components, sign)


class MatchingSolver(_MemoSolver):
    """m(G) = m(G - e) + X m(G - u - v) on the lowest non-loop edge."""

    label = "matching"

    def _solve(self, graph):
        edges = [e for e in graph.edges if e[0] != e[1]]
        if not edges:
            return UniPoly([1])
        if len(edges) < len(graph.edges):
            graph = Graph(graph.n, tuple(edges))
        components = _split_components(graph)
        if len(components) > 1:
            result = UniPoly([1])
            for component in components:
                result = result * self._solve(component)
            return result
        graph = components[0]
        edges = list(graph.edges)
        key = self._enter(graph)
        if key in self.memo:
            return self.memo[key]
        u, v, _ = edges[0]
        result = (self._solve(delete_edge(graph, EdgeRef(u, v)))
                  + UniPoly([0, 1]) * self._solve(remove_vertices(graph, (u, v))))
        self.memo[key] = result
        return result


def matching_gen(graph, budget=None):
    """Matching generating polynomial sum_k m_k X^k; loops are ignored."""
    return MatchingSolver(budget).solve(graph)


def count_k_matchings(graph, k, budget=None):
    """Number of sets of k pairwise disjoint non-loop edges, by enumeration."""
    budget = budget or DEFAULT_BUDGET
    edges = [(u, v) for u, v in graph.edge_occurrences() if u != v]
    budget.check('max_subset_edges', len(edges), f"{len(edges)} edges to choose from")
    count = 0
    for subset in combinations(edges, k):
        covered = [w for pair in subset for w in pair]
        if len(set(covered)) == 2 * k:
            count += 1
    return count


def matching_defect(graph, budget=None):
    """Acyclic matching polynomial mu(G; x) = sum_k (-1)^k m_k x^(n - 2k)."""
    generating = matching_gen(graph, budget)
    coeffs = [0] * (graph.n + 1)
    for k, m_k in enumerate(generating.coeffs):
        coeffs[graph.n - 2 * k] = (-1) ** k * m_k
    return UniPoly(coeffs)


def adjacency_matrix(graph):
    """Integer adjacency matrix (multiplicities; a loop counts once)."""
    matrix = [[0] * graph.n for _ in range(graph.n)]
    for u, v, m in graph.edges:
        matrix[u][v] = m
        matrix[v][u] = m
    return matrix


def char_poly(graph):
    """det(xI - A) of a simple graph.

    Determinants at x = 0..n are computed fraction-free and the
    coefficients recovered by exact Newton interpolation.
    """
    if not graph.is_simple:
        raise ValueError("The characteristic polynomial is defined here for simple graphs")
    n = graph.n
    if n == 0:
        return UniPoly([1])
    adjacency = sympy.Matrix(n, n, lambda i, j: graph.mult(i, j))
    values = []
    for x in range(n + 1):
        shifted = sympy.eye(n) * x - adjacency
        values.append(int(shifted.det(method="bareiss")))
    return newton_interpolate(values).to_standard()


def elementary_subgraphs(graph):
    """Components available to elementary subgraphs: single edges and cycles.

    Returns:
        A list of (vertex frozenset, is_cycle) pairs, one per edge and one
        per cycle of length at least three.
    """
    pieces = [(frozenset((u, v)), False) for u, v, _ in graph.edges]
    undirected = nx.Graph(graph.to_networkx())
    for cycle in nx.simple_cycles(undirected):
        if len(cycle) >= 3:
            pieces.append((frozenset(cycle), True))
    return pieces


def char_poly_sachs_oracle(graph, budget=None):
    """Characteristic polynomial from elementary subgraphs: the coefficient
    of x^(n-i) sums (-1)^components 2^cycles over those covering i vertices."""
    budget = budget or DEFAULT_BUDGET
    if not graph.is_simple:
        raise ValueError("The elementary subgraph expansion needs a simple graph")
    budget.check('max_sachs_n', graph.n)
    pieces = elementary_subgraphs(graph)
    coeffs = [0] * (graph.n + 1)

    def extend(start, used, components, cycles):
        coeffs[graph.n - len(used)] += (-1) ** components * 2 ** cycles
        for idx in range(start, len(pieces)):
            vertices, is_cycle = pieces[idx]
            if used.isdisjoint(vertices):
                extend(idx + 1, used | vertices, components + 1, cycles + is_cycle)

    extend(0, frozenset(), 0, 0)
    return UniPoly(coeffs)

#
# classic.py ends here
