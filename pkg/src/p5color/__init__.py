"""Certified colouring of P5-free graphs within ``omega ** log2(omega)`` colours."""

from .bound import check_binding_hypotheses, check_recursion_inequality, color_budget, f_value
from .colorer import ColorOptions, ColoringCertificate, color_p5free, verify_certificate
from .graph import Graph, induced_subgraph, members, vset
from .io import from_graph6, parse_graph, read_graph, to_graph6
from .oracles import Coloring, P5Witness, dsatur, exact_chromatic, find_induced_p5, max_clique

__version__ = "0.1.0"
