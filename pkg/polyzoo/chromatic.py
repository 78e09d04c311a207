# chromatic.py ---
#
# Filename: chromatic.py
#
# Commentary:
#
# The chromatic polynomial, computed twice: by deletion and contraction
# and by counting partitions into independent sets (falling factorial
# basis). A brute-force coloring counter anchors both.
#
import logging
from itertools import product

from polyzoo.combinatorics import count_partitions_by_blocks
from polyzoo.config import DEFAULT_BUDGET
from polyzoo.errors import BudgetExceeded
from polyzoo.graph import (EdgeRef, canonical_key, connected_components,
                           contract_edge, delete_edge, induced_subgraph,
                           simplify)
from polyzoo.poly import FFPoly, UniPoly


def check_brute_force(budget, n, k):
    """Refuses enumerations of k^n functions beyond the budget."""
    if k < 0:
        raise ValueError(f"Number of colors must be nonnegative, got {k}")
    budget.check('max_k', k)
    budget.check('max_assignments', k ** n, f"{k}^{n} assignments")


def count_proper_colorings(graph, k, budget=None):
    """Number of maps V -> [k] giving adjacent vertices different colors."""
    budget = budget or DEFAULT_BUDGET
    check_brute_force(budget, graph.n, k)
    if graph.has_loop:
        return 0
    pairs = [(u, v) for u, v, _ in graph.edges]
    return sum(1 for f in product(range(k), repeat=graph.n)
               if all(f[u] != f[v] for u, v in pairs))


class ChromaticSolver:
    """Deletion-contraction with a memo keyed by canonical graph keys.

    One solver may be reused across graphs to share the memo; the node
    counter is reset for every top-level call.
    """

    def __init__(self, budget=None):
        self.budget = budget or DEFAULT_BUDGET
        self.memo = {}
        self.nodes = 0

    def solve(self, graph):
        self.nodes = 0
        simple, had_loop = simplify(graph)
        if had_loop:
            return UniPoly()
        result = self._solve(simple)
        assert chromatic_shape_ok(result, graph.n), f"Malformed chromatic polynomial {result}"
        logging.debug(f"chromatic: {self.nodes} recursion nodes, memo size {len(self.memo)}")
        return result

    def _solve(self, graph):
        n, m = graph.n, len(graph.edges)
        if m == 0:
            return UniPoly.monomial(n)
        if m == n * (n - 1) // 2:
            return UniPoly.falling_factorial(n)
        components = connected_components(graph)
        if len(components) > 1:
            result = UniPoly([1])
            for vertices in components:
                result = result * self._solve(induced_subgraph(graph, vertices))
            return result
        key = canonical_key(graph, self.budget.canonical_limit)
        if key in self.memo:
            return self.memo[key]
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded('max_nodes', self.budget.max_nodes,
                                 "deletion-contraction recursion")
        u, v, _ = graph.edges[0]
        edge = EdgeRef(u, v)
        contracted, _ = simplify(contract_edge(graph, edge))
        result = self._solve(delete_edge(graph, edge)) - self._solve(contracted)
        self.memo[key] = result
        return result


def chromatic_dc(graph, budget=None):
    """Chromatic polynomial by deletion and contraction."""
    return ChromaticSolver(budget).solve(graph)


def chromatic_ff(graph, budget=None):
    """Chromatic polynomial in the falling factorial basis.

    The coefficient of k_(i) is the number of partitions of the vertex set
    into i nonempty independent sets.
    """
    if graph.has_loop:
        return FFPoly()
    adj = graph.adjacency

    def independent_of(block, v):
        return all(w not in adj[v] for w in block)

    counts = count_partitions_by_blocks(range(graph.n), can_join=independent_of,
                                        budget=budget)
    return FFPoly(counts.get(i, 0) for i in range(graph.n + 1))


def chromatic_shape_ok(poly, n):
    """Checks degree n, leading coefficient 1, alternating signs and,
    for n >= 1, a zero constant term."""
    if poly.degree != n or poly.leading != 1:
        return False
    if n >= 1 and poly.coeff(0) != 0:
        return False
    for i, c in enumerate(poly.coeffs):
        if c and (c > 0) != ((n - i) % 2 == 0):
            return False
    return True

#
# chromatic.py ends here
