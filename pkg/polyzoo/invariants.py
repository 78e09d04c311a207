# invariants.py ---
#
# Filename: invariants.py
#
# Commentary:
#
# Names under which the graph polynomials are offered on the command line
# and to the distinctive power comparison, e.g. "chromatic", "tutte" or
# "harary:acyclic".
#
from dataclasses import dataclass
from typing import Callable

from polyzoo.chromatic import chromatic_dc, chromatic_ff
from polyzoo.classic import char_poly, matching_defect, matching_gen, tutte
from polyzoo.errors import UsageError
from polyzoo.harary import harary_ff, parse_property
from polyzoo.permanent import adjacency_permanent_poly
from polyzoo.poly import UniPoly


@dataclass(frozen=True)
class Invariant:
    name: str
    var: str
    compute: Callable
    description: str
    needs_property: bool = False


def _power(graph, budget=None):
    return UniPoly.monomial(graph.n)


def _charpoly(graph, budget=None):
    return char_poly(graph)


REGISTRY = {inv.name: inv for inv in (
    Invariant('chromatic', 'k', chromatic_dc, "chromatic polynomial (deletion-contraction)"),
    Invariant('chromatic-ff', 'k', chromatic_ff, "chromatic polynomial, falling factorial basis"),
    Invariant('tutte', 'x,y', tutte, "Tutte polynomial"),
    Invariant('matching', 'X', matching_gen, "matching generating polynomial"),
    Invariant('matching-defect', 'x', matching_defect, "acyclic matching polynomial"),
    Invariant('charpoly', 'x', _charpoly, "characteristic polynomial of the adjacency matrix"),
    Invariant('permx', 'x', adjacency_permanent_poly, "permanent of the x-weighted adjacency matrix"),
    Invariant('harary', 'k', None, "Harary polynomial of a property", needs_property=True),
    Invariant('power', 'k', _power, "k^n, separating graphs by order only"),
)}

POLY_CHOICES = tuple(REGISTRY)


@dataclass(frozen=True)
class InvariantId:
    """An invariant name with its parameter, written 'name' or 'name:parameter'."""
    name: str
    parameter: str = None

    def __post_init__(self):
        if self.name not in REGISTRY:
            raise UsageError(f"Unknown invariant {self.name!r}; "
                             f"choose from {', '.join(POLY_CHOICES)}")
        entry = REGISTRY[self.name]
        if entry.needs_property and not self.parameter:
            raise UsageError(f"Invariant {self.name!r} needs a property, e.g. {self.name}:edgeless")
        if not entry.needs_property and self.parameter:
            raise UsageError(f"Invariant {self.name!r} takes no parameter")

    @classmethod
    def parse(cls, text):
        name, _, parameter = text.strip().partition(':')
        return cls(name, parameter or None)

    @property
    def var(self):
        return REGISTRY[self.name].var

    def compute(self, graph, budget=None):
        if self.name == 'harary':
            return harary_ff(graph, parse_property(self.parameter), budget)
        return REGISTRY[self.name].compute(graph, budget)

    def __str__(self):
        return f"{self.name}:{self.parameter}" if self.parameter else self.name

#
# invariants.py ends here
