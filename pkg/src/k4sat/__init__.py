"""K4-minus saturated graphs: constructions, saturation checks, edge spectra."""

from .constructions import construct_complete_bipartite, construct_f, construct_star_matching, spectrum_formula
from .graph import Graph, GraphFormatError, build_graph, graph6_decode, graph6_encode
from .saturation import SaturationVerdict, contains_k4_minus, is_k4_minus_saturated, naive_is_saturated

__all__ = [
    "Graph",
    "GraphFormatError",
    "SaturationVerdict",
    "build_graph",
    "construct_complete_bipartite",
    "construct_f",
    "construct_star_matching",
    "contains_k4_minus",
    "graph6_decode",
    "graph6_encode",
    "is_k4_minus_saturated",
    "naive_is_saturated",
    "spectrum_formula",
]
