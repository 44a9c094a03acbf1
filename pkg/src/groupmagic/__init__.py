"""Group magic spectra of graphs over finite abelian groups."""

from .abelian import AbelianGroup, parse_group
from .graph import Graph, build
from .spectrum import SpectrumResult

__all__ = ["AbelianGroup", "Graph", "SpectrumResult", "build", "parse_group"]
