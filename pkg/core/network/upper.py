"""
Upper-bounding network for a single cut.

Every node downstream of the cut is merged into the sink. Each V-side
endpoint of a cut edge becomes its own relay node (suffixed with a prime),
the source feeds every forward tail over an unbounded secure link, and a
backward head is linked to a forward tail whenever the connectivity matrix
says the original network could route between them inside V.
"""

import logging
from typing import Dict, List, Tuple

from .cuts import cut_for_nodes, restrict_wiretap_sets
from .model import Cut, Edge, ExplicitWiretap, Network, WiretapModel


logger = logging.getLogger(__name__)


def _relay_name(node: str, taken: set) -> str:
    name = f"{node}'"
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def _unbounded_id(taken: set, counter: List[int]) -> str:
    while True:
        counter[0] += 1
        candidate = f"inf{counter[0]}"
        if candidate not in taken:
            taken.add(candidate)
            return candidate


def build_upper_bounding_network(net: Network, cut: Cut) -> Network:
    source, sink = net.source, net.sink
    taken_nodes = set(net.nodes)
    relay: Dict[str, str] = {}

    def relay_of(node: str) -> str:
        if node not in relay:
            relay[node] = _relay_name(node, taken_nodes)
        return relay[node]

    for edge in cut.forward:
        relay_of(edge.tail)
    for edge in cut.backward:
        relay_of(edge.head)

    cut_rows = {edge.id for edge in cut.edges}
    edges: List[Edge] = []
    for edge in net.edges:
        if edge.id not in cut_rows:
            continue
        if edge.tail in cut.side:
            edges.append(Edge(edge.id, relay[edge.tail], sink))
        else:
            edges.append(Edge(edge.id, sink, relay[edge.head]))

    taken_edges = {edge.id for edge in net.edges}
    counter = [0]
    links: List[Tuple[str, str]] = []
    for edge in cut.forward:
        links.append((source, relay[edge.tail]))
    for j, bwd in enumerate(cut.backward):
        for i, fwd in enumerate(cut.forward):
            if cut.connectivity[i, j] and relay[bwd.head] != relay[fwd.tail]:
                links.append((relay[bwd.head], relay[fwd.tail]))
    seen = set()
    for tail, head in links:
        if (tail, head) in seen:
            continue
        seen.add((tail, head))
        edges.append(Edge(_unbounded_id(taken_edges, counter), tail, head, unbounded=True))

    nodes = (source,) + tuple(relay.values()) + (sink,)
    gbar = Network(
        nodes=nodes,
        edges=tuple(edges),
        source=source,
        sink=sink,
        randomness=frozenset({source, sink}),
    )
    logger.info(
        "upper-bounding network: %d relays, %d cut edges, %d unbounded links",
        len(relay), len(cut_rows), len(edges) - len(cut_rows),
    )
    return gbar


def canonical_cut(gbar: Network) -> Cut:
    """The cut V = every node except the sink."""
    return cut_for_nodes(gbar, [node for node in gbar.nodes if node != gbar.sink])


def upper_bounding_wiretap(model: WiretapModel, cut: Cut) -> WiretapModel:
    """The wiretap model seen on the upper-bounding network of `cut`.

    Only cut edges survive in it, so explicit sets shrink to their cut part.
    """
    if isinstance(model, ExplicitWiretap):
        return ExplicitWiretap(tuple(restrict_wiretap_sets(model, cut)))
    return model
