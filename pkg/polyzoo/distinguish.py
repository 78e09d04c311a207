# distinguish.py ---
#
# Filename: distinguish.py
#
# Commentary:
#
# Distinctive power of graph polynomials relative to a finite catalog:
# which graphs an invariant separates and whether two invariants separate
# the same pairs.
#
import logging
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from tqdm import tqdm

from polyzoo.errors import GraphParseError
from polyzoo.graph import parse_graph6, to_graph6
from polyzoo.utils import significant_lines


@dataclass(frozen=True)
class Catalog:
    """An ordered list of (label, graph) entries with unique labels."""
    entries: tuple

    def __post_init__(self):
        seen = set()
        for label, _ in self.entries:
            if label in seen:
                raise ValueError(f"Duplicate catalog label: {label!r}")
            seen.add(label)

    @classmethod
    def from_graphs(cls, graphs):
        """Builds a catalog from a mapping or an iterable of (label, graph)."""
        items = graphs.items() if isinstance(graphs, dict) else graphs
        return cls(tuple((str(label), graph) for label, graph in items))

    @classmethod
    def from_text(cls, text):
        """One graph6 string per line, optionally prefixed by 'label:'.

        Unlabeled graphs are called g1, g2, ... by their position.
        """
        entries = []
        for number, line in enumerate(significant_lines(text), start=1):
            label, sep, code = line.rpartition(':')
            label = label.strip() if sep else f"g{number}"
            try:
                graph = parse_graph6(code.strip())
            except GraphParseError as e:
                raise GraphParseError(f"Catalog entry {number}: {e}") from None
            entries.append((label, graph))
        try:
            return cls(tuple(entries))
        except ValueError as e:
            raise GraphParseError(str(e)) from None

    @classmethod
    def from_file(cls, path):
        catalog = cls.from_text(Path(path).read_text())
        logging.info(f"Loaded {len(catalog)} graphs from {path}")
        return catalog

    def to_text(self):
        return "".join(f"{label}:{to_graph6(graph)}\n" for label, graph in self.entries)

    @property
    def labels(self):
        return [label for label, _ in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def invariant_values(inv, catalog, budget=None, quiet=None):
    """Computes inv on every graph; returns a dict label -> polynomial.

    The progress bar goes to stderr and is hidden when quiet is true (by
    default, when stderr is not a terminal).
    """
    values = {}
    for label, graph in tqdm(catalog, desc=str(inv), unit="graph", disable=quiet):
        values[label] = inv.compute(graph, budget)
    return values


def partition_from_values(values):
    """Groups labels with identical values; blocks in order of first appearance."""
    blocks = {}
    for label, value in values.items():
        blocks.setdefault(value, []).append(label)
    return list(blocks.values())


def invariant_partition(inv, catalog, budget=None):
    """The catalog labels grouped by exact equality of inv."""
    return partition_from_values(invariant_values(inv, catalog, budget))


def as_set_partition(blocks):
    return frozenset(frozenset(block) for block in blocks)


def same_distinctive_power(f, g, catalog, budget=None):
    return (as_set_partition(invariant_partition(f, catalog, budget))
            == as_set_partition(invariant_partition(g, catalog, budget)))


@dataclass
class DistinguishingReport:
    """Pairs of labels separated by exactly one of two invariants."""
    f: object
    g: object
    labels: list
    values_f: dict
    values_g: dict
    only_f: list = field(default_factory=list)
    only_g: list = field(default_factory=list)

    @property
    def same_power(self):
        return not self.only_f and not self.only_g

    def blocks(self, which):
        return partition_from_values(self.values_f if which == 'f' else self.values_g)

    def to_json(self):
        def evidence(values, pair):
            return {label: values[label].to_json() for label in pair}

        return {
            "f": str(self.f),
            "g": str(self.g),
            "labels": list(self.labels),
            "same_power": self.same_power,
            "partition_f": self.blocks('f'),
            "partition_g": self.blocks('g'),
            "only_f": [{"pair": list(pair), "f": evidence(self.values_f, pair),
                        "g": evidence(self.values_g, pair)} for pair in self.only_f],
            "only_g": [{"pair": list(pair), "f": evidence(self.values_f, pair),
                        "g": evidence(self.values_g, pair)} for pair in self.only_g],
        }


def distinguishing_report(f, g, catalog, budget=None):
    """Lists every pair separated by f but not by g and vice versa."""
    values_f = invariant_values(f, catalog, budget)
    values_g = invariant_values(g, catalog, budget)
    report = DistinguishingReport(f, g, catalog.labels, values_f, values_g)
    for a, b in combinations(catalog.labels, 2):
        by_f = values_f[a] != values_f[b]
        by_g = values_g[a] != values_g[b]
        if by_f and not by_g:
            report.only_f.append((a, b))
        elif by_g and not by_f:
            report.only_g.append((a, b))
    logging.info(f"{f} vs {g}: {len(report.only_f)} pairs only by {f}, "
                 f"{len(report.only_g)} only by {g}")
    return report

#
# distinguish.py ends here
