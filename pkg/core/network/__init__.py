from .cuts import (
    DEFAULT_NODE_CAP,
    classify_edges,
    connectivity_matrix,
    cut_for_nodes,
    enumerate_cuts,
    restrict_wiretap_sets,
)
from .model import Cut, Edge, ExplicitWiretap, Network, UniformWiretap, WiretapModel
from .parser import (
    NetworkDocument,
    cut_to_document,
    document_to_network,
    fixture_path,
    load_fixture,
    load_network,
    network_to_document,
    parse_network,
)
from .upper import build_upper_bounding_network, canonical_cut, upper_bounding_wiretap

__all__ = [
    "DEFAULT_NODE_CAP",
    "Cut",
    "Edge",
    "ExplicitWiretap",
    "Network",
    "NetworkDocument",
    "UniformWiretap",
    "WiretapModel",
    "build_upper_bounding_network",
    "canonical_cut",
    "classify_edges",
    "connectivity_matrix",
    "cut_for_nodes",
    "cut_to_document",
    "document_to_network",
    "enumerate_cuts",
    "fixture_path",
    "load_fixture",
    "load_network",
    "network_to_document",
    "parse_network",
    "restrict_wiretap_sets",
    "upper_bounding_wiretap",
]
