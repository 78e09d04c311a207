__version__ = "0.1.0"

__all__ = [
    "Graph", "UniPoly", "BiPoly", "FFPoly", "Budget",
    "chromatic_dc", "chromatic_ff", "harary_ff", "tutte", "matching_gen",
    "char_poly", "permanent_tw", "counting_polynomial", "invariant_partition",
]

from .config import Budget
from .graph import Graph
from .poly import BiPoly, FFPoly, UniPoly
from .chromatic import chromatic_dc, chromatic_ff
from .harary import harary_ff
from .classic import char_poly, matching_gen, tutte
from .permanent import permanent_tw
from .formula import counting_polynomial
from .distinguish import invariant_partition
