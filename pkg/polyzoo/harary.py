# harary.py ---
#
# Filename: harary.py
#
# Commentary:
#
# Harary polynomials: colorings in which every color class induces a
# graph with a given property P, counted with at most k colors.
#
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import networkx as nx

from polyzoo.chromatic import check_brute_force
from polyzoo.combinatorics import count_partitions_by_blocks
from polyzoo.config import DEFAULT_BUDGET
from polyzoo.errors import GraphParseError
from polyzoo.graph import induced_subgraph, is_connected
from polyzoo.poly import FFPoly


@dataclass(frozen=True)
class GraphProperty:
    """A named decidable graph property.

    decide must be deterministic and accept the 0-vertex graph.
    hereditary_hint documents closure under induced subgraphs; it is never
    used to prune.
    """
    name: str
    decide: Callable = field(compare=False)
    hereditary_hint: bool = False

    def __call__(self, graph):
        return bool(self.decide(graph))

    def __str__(self):
        return self.name


def _is_edgeless(graph):
    return not graph.edges


def _is_clique(graph):
    return all(graph.mult(u, v) for u in range(graph.n) for v in range(u + 1, graph.n))


def _is_forest(graph):
    if not graph.is_simple:
        return False
    return graph.n == 0 or nx.is_forest(graph.to_networkx())


def max_degree_property(d):
    return GraphProperty(f"maxdeg:{d}",
                         lambda graph: all(graph.degree(v) <= d for v in range(graph.n)),
                         hereditary_hint=True)


EDGELESS = GraphProperty("edgeless", _is_edgeless, hereditary_hint=True)
CLIQUE = GraphProperty("clique", _is_clique, hereditary_hint=True)
ACYCLIC = GraphProperty("acyclic", _is_forest, hereditary_hint=True)
CONNECTED = GraphProperty("connected", is_connected)
ALL_GRAPHS = GraphProperty("all", lambda graph: True, hereditary_hint=True)


def builtin_properties(max_degrees=(1, 2)):
    """The builtin properties by name, with maxdeg instances for max_degrees."""
    catalog = {p.name: p for p in (EDGELESS, CLIQUE, ACYCLIC, CONNECTED, ALL_GRAPHS)}
    for d in max_degrees:
        prop = max_degree_property(d)
        catalog[prop.name] = prop
    return catalog


def conjunction(properties):
    properties = list(properties)
    if len(properties) == 1:
        return properties[0]
    return GraphProperty("&".join(p.name for p in properties),
                         lambda graph: all(p(graph) for p in properties),
                         hereditary_hint=all(p.hereditary_hint for p in properties))


def parse_property(text):
    """Parses 'edgeless', 'clique', 'acyclic', 'maxdeg:d', 'connected', 'all'
    or a conjunction of them joined by '&'."""
    builtins = builtin_properties(max_degrees=())
    parts = []
    for token in text.split('&'):
        token = token.strip()
        if token in builtins:
            parts.append(builtins[token])
        elif token.startswith('maxdeg:'):
            degree = token[len('maxdeg:'):]
            if not degree.isdigit():
                raise GraphParseError(f"Bad degree bound in property {token!r}")
            parts.append(max_degree_property(int(degree)))
        else:
            raise GraphParseError(f"Unknown graph property: {token!r}")
    return conjunction(parts)


def color_classes(coloring):
    classes = {}
    for v, color in enumerate(coloring):
        classes.setdefault(color, []).append(v)
    return classes


def is_P_coloring(graph, prop, coloring):
    """True if every color class of coloring (a sequence indexed by vertex)
    induces a graph in prop. Unused colors are empty classes and pass."""
    if len(coloring) != graph.n:
        raise ValueError(f"Coloring of length {len(coloring)} for {graph.n} vertices")
    return all(prop(induced_subgraph(graph, block))
               for block in color_classes(coloring).values())


def count_P_colorings(graph, prop, k, budget=None):
    """Brute-force count of P-colorings with at most k colors."""
    budget = budget or DEFAULT_BUDGET
    check_brute_force(budget, graph.n, k)
    return sum(1 for f in product(range(k), repeat=graph.n)
               if is_P_coloring(graph, prop, f))


def harary_ff(graph, prop, budget=None):
    """The Harary polynomial in the falling factorial basis.

    The coefficient of k_(i) counts partitions of V into i nonempty classes
    each inducing a graph in prop.
    """
    cache = {}

    def class_ok(block):
        key = tuple(block)
        if key not in cache:
            cache[key] = prop(induced_subgraph(graph, block))
        return cache[key]

    counts = count_partitions_by_blocks(
        range(graph.n), accept=lambda blocks: all(class_ok(b) for b in blocks),
        budget=budget)
    logging.debug(f"harary[{prop}]: {sum(counts.values())} accepted partitions")
    return FFPoly(counts.get(i, 0) for i in range(graph.n + 1))

#
# harary.py ends here
