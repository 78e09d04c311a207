# test_graph.py ---
#
# Filename: test_graph.py
#
# Commentary:
#
# Multigraph construction, deletion/contraction, text formats and the
# canonical keys used by the memoized recursions.
#
import random
from unittest import TestCase

import networkx as nx
import pytest

from polyzoo.errors import GraphParseError
from polyzoo.graph import (EdgeRef, Graph, canonical_key, complete, complete_bipartite,
                           connected_components, contract_edge, cycle, delete_edge,
                           disjoint_union, edgeless, format_edge_list, induced_subgraph,
                           is_connected, named_graph, parse_edge_list, parse_graph6, path,
                           relabel, simplify, star, to_graph6)


class TestGraphBasics(TestCase):

    def test_from_edges_counts_parallel_copies(self):
        graph = Graph.from_edges(3, [(0, 1), (1, 0), (2, 2)])
        self.assertEqual(graph.edges, ((0, 1, 2), (2, 2, 1)), "Parallel copies should merge")
        self.assertEqual(graph.num_edges, 3)
        self.assertTrue(graph.has_loop)
        self.assertFalse(graph.is_simple)
        self.assertEqual(graph.degree(2), 2, "A loop counts twice in the degree")

    def test_invalid_construction(self):
        with self.assertRaises(ValueError):
            Graph(2, ((0, 2, 1),))
        with self.assertRaises(ValueError):
            Graph(3, ((1, 2, 1), (0, 1, 1)))
        with self.assertRaises(ValueError):
            Graph.from_edges(2, [(0, 5)])

    def test_edge_ref_normalizes(self):
        self.assertEqual(EdgeRef(3, 1), EdgeRef(1, 3))
        self.assertTrue(EdgeRef(2, 2).is_loop)


class TestDeletionContraction(TestCase):

    def test_delete_edge_on_triangle(self):
        self.assertEqual(delete_edge(complete(3), EdgeRef(0, 1)),
                         Graph(3, ((0, 2, 1), (1, 2, 1))))

    def test_contract_triangle_gives_double_edge(self):
        contracted = contract_edge(complete(3), EdgeRef(0, 1))
        self.assertEqual(contracted, Graph(2, ((0, 1, 2),)),
                         "Contracting a triangle edge leaves a double edge")

    def test_contract_path(self):
        self.assertEqual(contract_edge(path(2), EdgeRef(0, 1)), edgeless(1))

    def test_contract_parallel_class_makes_loop(self):
        double = Graph.from_edges(2, [(0, 1), (0, 1)])
        self.assertEqual(contract_edge(double, EdgeRef(0, 1)), Graph(1, ((0, 0, 1),)))

    def test_vertices_above_shift_down(self):
        graph = Graph.from_edges(4, [(0, 2), (2, 3), (1, 3)])
        contracted = contract_edge(graph, EdgeRef(0, 2))
        self.assertEqual(contracted, Graph.from_edges(3, [(0, 2), (1, 2)]))

    def test_errors(self):
        with self.assertRaises(ValueError):
            contract_edge(cycle(1), EdgeRef(0, 0))
        with self.assertRaises(ValueError):
            delete_edge(path(3), EdgeRef(0, 2))
        with self.assertRaises(ValueError):
            delete_edge(path(2), EdgeRef(0, 1, index=1))


def test_edge_counts_after_operations():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 7)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, 10))]
        graph = Graph.from_edges(n, pairs)
        for ref in graph.edge_refs():
            assert delete_edge(graph, ref).num_edges == graph.num_edges - 1
            if not ref.is_loop:
                contracted = contract_edge(graph, ref)
                assert contracted.n == graph.n - 1
                assert contracted.num_edges == graph.num_edges - 1


def test_structural_helpers():
    union = disjoint_union(complete(2), edgeless(1))
    assert union == Graph.from_edges(3, [(0, 1)])
    assert connected_components(union) == [[0, 1], [2]]
    assert not is_connected(union)
    assert is_connected(edgeless(0))
    assert induced_subgraph(cycle(4), [1, 2, 3]) == path(3)
    simple, had_loop = simplify(Graph.from_edges(2, [(0, 1), (0, 1), (1, 1)]))
    assert simple == path(2) and had_loop
    assert relabel(path(3), [1, 0, 2]) == Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        relabel(path(3), [0, 0, 1])


def random_multigraph(rng, n, max_edges):
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, max_edges))]
    return Graph.from_edges(n, pairs)


def test_disjoint_union_is_associative_with_identity():
    rng = random.Random(17)
    empty = edgeless(0)
    for _ in range(60):
        a, b, c = (random_multigraph(rng, rng.randint(1, 3), 4) for _ in range(3))
        left = disjoint_union(disjoint_union(a, b), c)
        right = disjoint_union(a, disjoint_union(b, c))
        assert canonical_key(left) == canonical_key(right)
        assert canonical_key(disjoint_union(empty, a)) == canonical_key(a)
        assert canonical_key(disjoint_union(a, empty)) == canonical_key(a)


def test_named_families():
    assert named_graph("K3") == complete(3)
    assert named_graph("E4") == edgeless(4)
    assert named_graph("P5") == path(5)
    assert named_graph("C6") == cycle(6)
    assert named_graph("S4") == star(4)
    assert named_graph("K2,3") == complete_bipartite(2, 3)
    assert named_graph("K2+K1") == Graph.from_edges(3, [(0, 1)])
    assert cycle(2) == Graph(2, ((0, 1, 2),))
    with pytest.raises(GraphParseError):
        named_graph("Q3")


class TestEdgeList(TestCase):

    def test_parse_multiline(self):
        graph = parse_edge_list("3\n0 1\n1 2  # path\n")
        self.assertEqual(graph, path(3))

    def test_parse_inline_separators(self):
        self.assertEqual(parse_edge_list("3 / 0 1 / 1 2"), path(3))
        self.assertEqual(parse_edge_list("2; 0 1; 0 1; 1 1").num_edges, 3)

    def test_format_round_trip(self):
        graph = Graph.from_edges(3, [(0, 1), (0, 1), (2, 2)])
        self.assertEqual(parse_edge_list(format_edge_list(graph)), graph)

    def test_errors(self):
        for text in ["", "x", "3\n0", "2\n0 2", "3 4\n0 1", "-1"]:
            with self.assertRaises(GraphParseError, msg=f"{text!r} should not parse"):
                parse_edge_list(text)


class TestGraph6(TestCase):

    def test_known_strings(self):
        self.assertEqual(parse_graph6("Bw"), complete(3))
        self.assertEqual(parse_graph6(">>graph6<<Bg"), path(3))
        self.assertEqual(parse_graph6("?"), edgeless(0))
        self.assertEqual(to_graph6(complete(3)), "Bw")

    def test_agrees_with_networkx(self):
        rng = random.Random(3)
        for n in [1, 2, 5, 12, 70]:
            g = nx.gnp_random_graph(n, 0.3, seed=rng.randrange(1000))
            code = nx.to_graph6_bytes(g, header=False).decode().strip()
            ours = parse_graph6(code)
            self.assertEqual(ours, Graph.from_networkx(g), f"Decoding differs for n={n}")
            self.assertEqual(to_graph6(ours), code, f"Encoding differs for n={n}")

    def test_malformed(self):
        for text in ["", "B", "Bww", "B\x7f", "Bx"]:
            with self.assertRaises(GraphParseError, msg=f"{text!r} should be rejected"):
                parse_graph6(text)

    def test_encode_rejects_multigraphs(self):
        with self.assertRaises(ValueError):
            to_graph6(cycle(2))


def test_canonical_key_is_isomorphism_invariant(atlas6):
    rng = random.Random(11)
    for graph in atlas6:
        perm = list(range(graph.n))
        rng.shuffle(perm)
        assert canonical_key(graph) == canonical_key(relabel(graph, perm))


@pytest.mark.parametrize("n", [7, 8])
def test_canonical_key_relabeling_on_larger_graphs(n):
    rng = random.Random(n)
    graphs = [random_multigraph(rng, n, 14) for _ in range(40)]
    graphs += [Graph.from_networkx(nx.gnp_random_graph(n, 0.4, seed=rng.randrange(1000)))
               for _ in range(40)]
    graphs += [Graph.from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(1000)))
               for d in (2, 3, 4) if d * n % 2 == 0 for _ in range(10)]
    for graph in graphs:
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(graph) == canonical_key(relabel(graph, perm)), \
            f"Key changed under relabeling of {graph}"


def test_canonical_key_separates_regular_graphs():
    six_cycle = cycle(6)
    two_triangles = disjoint_union(cycle(3), cycle(3))
    assert canonical_key(six_cycle) != canonical_key(two_triangles)
    cube = Graph.from_networkx(nx.hypercube_graph(3))
    prism = Graph.from_networkx(nx.circular_ladder_graph(4))
    assert canonical_key(cube) == canonical_key(prism), "The 3-cube is the square prism"
    moebius = Graph.from_networkx(nx.circulant_graph(8, [1, 4]))
    assert canonical_key(cube) != canonical_key(moebius)


def test_canonical_key_separates_atlas(atlas6):
    keys = {canonical_key(graph) for graph in atlas6}
    assert len(keys) == len(atlas6), "Non-isomorphic graphs must get different keys"


def test_canonical_key_multigraphs():
    a = Graph.from_edges(3, [(0, 1), (0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 2), (1, 2), (0, 1)])
    c = Graph.from_edges(3, [(0, 1), (1, 2), (1, 2), (2, 2)])
    assert canonical_key(a) == canonical_key(b)
    assert canonical_key(a) != canonical_key(c)


def test_canonical_key_above_limit_is_labeled():
    assert canonical_key(path(4), limit=3)[0] == 'labeled'

#
# test_graph.py ends here
