# combinatorics.py ---
#
# Filename: combinatorics.py
#
# Commentary:
#
# Set partitions by backtracking, shared by the falling factorial
# computations of the chromatic, Harary and counting polynomials.
#
from collections import Counter
from functools import lru_cache

from polyzoo.config import DEFAULT_BUDGET


@lru_cache(maxsize=None)
def bell(n):
    """Number of set partitions of an n-set."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def set_partitions(items, can_join=None):
    """Generates the partitions of items as lists of blocks.

    Items are placed in order; item x may enter an existing block only if
    can_join(block, x) is true, which prunes whole subtrees when the
    constraint is hereditary. Every partition is produced exactly once.
    """
    items = list(items)
    blocks = []

    def place(pos):
        if pos == len(items):
            yield [list(block) for block in blocks]
            return
        x = items[pos]
        for block in blocks:
            if can_join is None or can_join(block, x):
                block.append(x)
                yield from place(pos + 1)
                block.pop()
        blocks.append([x])
        yield from place(pos + 1)
        blocks.pop()

    yield from place(0)


def count_partitions_by_blocks(items, can_join=None, accept=None, budget=None):
    """Counts accepted partitions of items by their number of blocks.

    Args:
        items: The ground set.
        can_join: Optional pruning predicate, see set_partitions.
        accept: Optional final predicate on the list of blocks.
        budget: Budget whose max_vars bounds the ground set size.

    Returns:
        A Counter mapping block count to number of partitions.
    """
    items = list(items)
    (budget or DEFAULT_BUDGET).check('max_vars', len(items),
                                     f"{bell(len(items))} set partitions")
    counts = Counter()
    for partition in set_partitions(items, can_join):
        if accept is None or accept(partition):
            counts[len(partition)] += 1
    return counts

#
# combinatorics.py ends here
