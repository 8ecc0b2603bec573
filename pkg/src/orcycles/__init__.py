"""Oriented graphs, exact directed-cycle search and extremal C_ell-free constructions."""

from .errors import *  # noqa: F401,F403
from .graph import (  # noqa: F401
    DegreeSummary,
    OrientedGraph,
    blow_up,
    build_graph,
    degree_summary,
    directed_cycle,
    induced_subgraph,
    reverse,
)
from ._accel import BACKEND  # noqa: F401

__version__ = "0.1.0"
