"""Forest-like permutations: Hasse-diagram graphs, bar sorting, subclasses and their generating functions."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    BarDiagram,
    PermGraph,
    Permutation,
    PermutationError,
    ReconstructionError,
    build_bar_diagram,
    build_graph,
    final_ascent,
    inverse,
    make_permutation,
    parse_permutation,
    reconstruct,
    rl_minima,
)
from .classify import ClassReport, classify, cross_validate  # noqa: F401
