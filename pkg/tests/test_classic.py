# test_classic.py ---
#
# Filename: test_classic.py
#
# Commentary:
#
# Tutte, matching and characteristic polynomials against their
# independent expansions and the orthogonal polynomial identities.
#
import random
from unittest import TestCase

import pytest
import sympy

from polyzoo.chromatic import chromatic_dc
from polyzoo.classic import (char_poly, char_poly_sachs_oracle, chromatic_via_tutte,
                             count_k_matchings, graph_rank, matching_defect, matching_gen,
                             tutte, tutte_subset_oracle)
from polyzoo.config import Budget
from polyzoo.errors import BudgetExceeded
from polyzoo.graph import (Graph, complete, complete_bipartite, cycle, disjoint_union, edgeless,
                           path)
from polyzoo.poly import BiPoly, UniPoly

X = sympy.Symbol('x')


def from_sympy(expr):
    """Integer UniPoly from a sympy expression in x."""
    coeffs = sympy.Poly(sympy.expand(expr), X).all_coeffs()
    return UniPoly(int(c) for c in reversed(coeffs))


class TestTutte(TestCase):

    def test_small_graphs(self):
        x, y = BiPoly.x(), BiPoly.y()
        self.assertEqual(tutte(edgeless(3)), BiPoly.constant(1))
        self.assertEqual(tutte(path(3)), x * x, "A tree on m edges gives x^m")
        self.assertEqual(tutte(complete(3)), x * x + x + y)
        self.assertEqual(tutte(cycle(1)), y)
        self.assertEqual(tutte(cycle(2)), x + y)

    def test_spanning_tree_count(self):
        # T(1, 1) counts spanning trees; K4 has 16.
        self.assertEqual(tutte(complete(4)).eval(1, 1), 16)
        self.assertEqual(tutte(complete(4)).eval(2, 2), 2 ** 6)

    def test_rank(self):
        self.assertEqual(graph_rank(4, [(0, 1), (1, 2), (0, 2)]), 2)
        self.assertEqual(graph_rank(3, [(1, 1)]), 0)


def test_tutte_matches_subset_expansion(atlas6):
    for graph in atlas6:
        if graph.num_edges <= 9:
            assert tutte(graph) == tutte_subset_oracle(graph), f"Tutte differs on {graph}"


def test_tutte_on_multigraphs():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 5)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 8))]
        graph = Graph.from_edges(n, pairs)
        assert tutte(graph) == tutte_subset_oracle(graph), f"Tutte differs on {graph}"


def test_tutte_is_multiplicative_over_disjoint_unions():
    rng = random.Random(29)
    for _ in range(60):
        first, second = (
            Graph.from_edges(n, [(rng.randrange(n), rng.randrange(n))
                                 for _ in range(rng.randint(0, 5))])
            for n in (rng.randint(1, 4), rng.randint(1, 4)))
        assert tutte(disjoint_union(first, second)) == tutte(first) * tutte(second), \
            f"Tutte of {first} + {second}"


def test_chromatic_via_tutte(atlas6):
    for graph in atlas6:
        assert chromatic_via_tutte(graph) == chromatic_dc(graph)


def test_subset_oracle_budget():
    with pytest.raises(BudgetExceeded):
        tutte_subset_oracle(complete(7))


class TestMatching(TestCase):

    def test_small_graphs(self):
        self.assertEqual(matching_gen(complete(3)), UniPoly([1, 3]))
        self.assertEqual(matching_gen(path(4)), UniPoly([1, 3, 1]))
        self.assertEqual(matching_gen(edgeless(5)), UniPoly([1]))
        self.assertEqual(matching_gen(cycle(1)), UniPoly([1]), "Loops are ignored")
        self.assertEqual(matching_gen(cycle(2)), UniPoly([1, 2]), "Parallel copies are distinct")

    def test_defect_form(self):
        self.assertEqual(matching_defect(complete(3)), UniPoly([0, -3, 0, 1]))


def test_matching_coefficients_by_enumeration():
    rng = random.Random(29)
    budget = Budget(max_subset_edges=28)
    for _ in range(60):
        n = rng.randint(0, 8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        graph = Graph.from_edges(n, pairs)
        poly = matching_gen(graph)
        for k in range(n // 2 + 2):
            assert poly.coeff(k) == count_k_matchings(graph, k, budget), f"m_{k} of {graph}"


def test_path_recurrence():
    for n in range(3, 13):
        assert matching_gen(path(n)) == matching_gen(path(n - 1)) \
            + UniPoly([0, 1]) * matching_gen(path(n - 2))


def test_orthogonal_polynomial_identities():
    double = UniPoly([0, 2])
    for n in range(1, 10):
        assert matching_defect(path(n)).compose(double) == from_sympy(sympy.chebyshevu(n, X))
        assert matching_defect(complete(n)) == from_sympy(sympy.hermite_prob(n, X))
    for n in range(3, 10):
        assert matching_defect(cycle(n)).compose(double) == from_sympy(2 * sympy.chebyshevt(n, X))
    for n in range(1, 6):
        laguerre = (-1) ** n * sympy.factorial(n) * sympy.laguerre(n, X ** 2)
        assert matching_defect(complete_bipartite(n, n)) == from_sympy(laguerre)


class TestCharacteristic(TestCase):

    def test_small_graphs(self):
        self.assertEqual(char_poly(complete(3)), UniPoly([-2, -3, 0, 1]))
        self.assertEqual(char_poly(edgeless(2)), UniPoly([0, 0, 1]))
        self.assertEqual(char_poly(edgeless(0)), UniPoly([1]))

    def test_requires_simple_graph(self):
        with self.assertRaises(ValueError):
            char_poly(cycle(2))


def test_char_poly_oracles(atlas6):
    for graph in atlas6:
        poly = char_poly(graph)
        assert poly == char_poly_sachs_oracle(graph), f"Elementary subgraphs differ on {graph}"
        if graph.n:
            matrix = sympy.Matrix(graph.n, graph.n, lambda i, j: graph.mult(i, j))
            assert poly == from_sympy(matrix.charpoly(X).as_expr())
        if graph.n >= 2:
            assert poly.coeff(graph.n - 1) == 0
            assert poly.coeff(graph.n - 2) == -graph.num_edges


def test_matching_defect_equals_char_poly_on_forests():
    for n in range(1, 8):
        assert matching_defect(path(n)) == char_poly(path(n))

#
# test_classic.py ends here
