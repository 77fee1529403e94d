"""
Cut enumeration, edge classification and the backward-to-forward
connectivity matrix.
"""

import itertools
import logging
from typing import Collection, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from core.errors import NetworkValidationError, TooManyNodes

from .model import Cut, Edge, ExplicitWiretap, Network, UniformWiretap, WiretapModel


logger = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 20


def classify_edges(net: Network, side: Collection[str]) -> Tuple[Tuple[Edge, ...], Tuple[Edge, ...], bool]:
    """Split the crossing unit edges into forward/backward lists.

    Unbounded edges are never listed; the returned flag reports whether any
    of them crosses the cut.
    """
    forward: List[Edge] = []
    backward: List[Edge] = []
    unbounded = False
    for edge in net.edges:
        tail_in, head_in = edge.tail in side, edge.head in side
        if tail_in == head_in:
            continue
        if edge.unbounded:
            unbounded = True
        elif tail_in:
            forward.append(edge)
        else:
            backward.append(edge)
    return tuple(forward), tuple(backward), unbounded


def _connectivity(net: Network, side: Collection[str], forward: Sequence[Edge], backward: Sequence[Edge]) -> np.ndarray:
    inside = net.digraph.subgraph(side)
    matrix = np.zeros((len(forward), len(backward)), dtype=np.int64)
    for j, bwd in enumerate(backward):
        reachable = nx.descendants(inside, bwd.head) | {bwd.head}
        for i, fwd in enumerate(forward):
            if fwd.tail in reachable:
                matrix[i, j] = 1
    return matrix


def connectivity_matrix(net: Network, side: Collection[str]) -> np.ndarray:
    """x-by-y 0/1 matrix: head of backward edge j reaches tail of forward edge i inside V."""
    forward, backward, _ = classify_edges(net, side)
    return _connectivity(net, side, forward, backward)


def _mask_of(net: Network, side: Collection[str]) -> int:
    return sum(1 << index for index, node in enumerate(net.inner_nodes) if node in side)


def _build_cut(net: Network, side: frozenset, mask: int) -> Cut:
    forward, backward, unbounded = classify_edges(net, side)
    return Cut(
        side=side,
        mask=mask,
        forward=forward,
        backward=backward,
        connectivity=_connectivity(net, side, forward, backward),
        unbounded=unbounded,
    )


def enumerate_cuts(net: Network, node_cap: int = DEFAULT_NODE_CAP) -> List[Cut]:
    """All 2^(n-2) cuts, ordered by the membership bitmask of the inner nodes.

    Bit i of the mask is the i-th non-terminal node in declaration order.
    """
    if len(net.nodes) > node_cap:
        raise TooManyNodes(f"network has {len(net.nodes)} nodes, cut enumeration is capped at {node_cap}")
    inner = net.inner_nodes
    cuts = []
    for mask in range(1 << len(inner)):
        side = frozenset([net.source] + [node for index, node in enumerate(inner) if mask >> index & 1])
        cuts.append(_build_cut(net, side, mask))
    logger.debug("enumerated %d cuts over %d nodes", len(cuts), len(net.nodes))
    return cuts


def cut_for_nodes(net: Network, nodes: Iterable[str]) -> Cut:
    side = frozenset(nodes)
    unknown = side - set(net.nodes)
    if unknown:
        raise NetworkValidationError(f"cut references undeclared nodes {sorted(unknown)}")
    if net.source not in side:
        raise NetworkValidationError(f"cut must contain the source `{net.source}`")
    if net.sink in side:
        raise NetworkValidationError(f"cut must not contain the sink `{net.sink}`")
    return _build_cut(net, side, _mask_of(net, side))


def restrict_wiretap_sets(model: WiretapModel, cut: Cut) -> List[Tuple[str, ...]]:
    """Wiretap sets intersected with the cut edges, in cut row order.

    Empty intersections are dropped and duplicates keep their first position.
    """
    cut_ids = [edge.id for edge in cut.edges]
    if isinstance(model, UniformWiretap):
        sets = []
        for size in range(1, min(model.z, len(cut_ids)) + 1):
            sets.extend(itertools.combinations(cut_ids, size))
        return sets

    if not isinstance(model, ExplicitWiretap):
        raise TypeError(f"unsupported wiretap model {type(model).__name__}")
    restricted: List[Tuple[str, ...]] = []
    seen = set()
    for wiretap in model.sets:
        members = set(wiretap)
        kept = tuple(edge_id for edge_id in cut_ids if edge_id in members)
        if kept and kept not in seen:
            seen.add(kept)
            restricted.append(kept)
    return restricted
