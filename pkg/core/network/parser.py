"""
JSON ingestion and dumping of networks and wiretap models.

Input documents look like::

    {
        "nodes": ["S", "A", "D"],
        "edges": [{"id": "e1", "tail": "S", "head": "D"}, ...],
        "source": "S",
        "sink": "D",
        "wiretap": {"z": 1}            # or {"sets": [["e1", "e2"], ...]}
    }

`randomness` optionally lists the nodes able to generate private randomness
(every node when omitted). Unbounded edges are accepted only in generated
dumps, recognised by their `derived` block.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from core.errors import NetworkValidationError, ParseError

from .model import Cut, Edge, ExplicitWiretap, Network, UniformWiretap, WiretapModel


logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parents[2]
FIXTURE_DIR = PROJECT_ROOT / "data" / "fixtures"


class EdgeDocument(BaseModel):
    id: str
    tail: str
    head: str
    capacity: int = 1
    unbounded: bool = False


class WiretapDocument(BaseModel):
    z: Optional[int] = Field(default=None, ge=0)
    sets: Optional[List[List[str]]] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.z is None) == (self.sets is None):
            raise ValueError("wiretap needs exactly one of `z` or `sets`")
        return self


class CutDocument(BaseModel):
    nodes: List[str]
    mask: int
    forward: List[str]
    backward: List[str]
    connectivity: List[List[int]]
    unbounded: bool = False


class NetworkDocument(BaseModel):
    nodes: List[str]
    edges: List[EdgeDocument]
    source: Optional[str] = None
    sink: Optional[str] = None
    wiretap: WiretapDocument = Field(default_factory=lambda: WiretapDocument(z=0))
    randomness: Optional[List[str]] = None
    derived: Optional[Dict[str, Any]] = None


def _location(loc: Sequence[Union[str, int]]) -> str:
    text = ""
    for part in loc:
        text += f"[{part}]" if isinstance(part, int) else (f".{part}" if text else str(part))
    return text


def _parse_document(text: Union[str, bytes]) -> NetworkDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    try:
        return NetworkDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ParseError(first["msg"], field=_location(first["loc"]) or None) from exc


def document_to_network(doc: NetworkDocument) -> Tuple[Network, WiretapModel]:
    if doc.source is None or doc.sink is None:
        missing = "source" if doc.source is None else "sink"
        raise NetworkValidationError(f"network has no {missing}")

    declared = set(doc.nodes)
    if len(declared) != len(doc.nodes):
        raise ParseError("duplicate node id", field="nodes")
    for role in ("source", "sink"):
        if getattr(doc, role) not in declared:
            raise ParseError(f"undeclared node `{getattr(doc, role)}`", field=role)

    edges = []
    for index, item in enumerate(doc.edges):
        for end in ("tail", "head"):
            if getattr(item, end) not in declared:
                raise ParseError(f"undeclared node `{getattr(item, end)}`", field=f"edges[{index}].{end}")
        if item.unbounded and doc.derived is None:
            raise NetworkValidationError(f"edge `{item.id}`: unbounded edges are only allowed in generated dumps")
        if not item.unbounded and item.capacity != 1:
            raise NetworkValidationError(f"edge `{item.id}` has capacity {item.capacity}; only unit edges are supported")
        edges.append(Edge(item.id, item.tail, item.head, unbounded=item.unbounded))

    randomness = doc.nodes if doc.randomness is None else doc.randomness
    for index, node in enumerate(randomness):
        if node not in declared:
            raise ParseError(f"undeclared node `{node}`", field=f"randomness[{index}]")

    net = Network(
        nodes=tuple(doc.nodes),
        edges=tuple(edges),
        source=doc.source,
        sink=doc.sink,
        randomness=frozenset(randomness),
    )

    if doc.wiretap.sets is None:
        model: WiretapModel = UniformWiretap(doc.wiretap.z)
    else:
        for i, wiretap in enumerate(doc.wiretap.sets):
            for j, edge_id in enumerate(wiretap):
                if edge_id not in net.edge_index:
                    raise ParseError(f"undeclared edge `{edge_id}`", field=f"wiretap.sets[{i}][{j}]")
        model = ExplicitWiretap(tuple(tuple(wiretap) for wiretap in doc.wiretap.sets))
    return net, model


def parse_network(text: Union[str, bytes]) -> Tuple[Network, WiretapModel]:
    net, model = document_to_network(_parse_document(text))
    logger.info("parsed network: %d nodes, %d edges, wiretap %s", len(net.nodes), len(net.edges), model)
    return net, model


def load_network(path: Union[str, Path]) -> Tuple[Network, WiretapModel]:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_network(raw)


def fixture_path(name: str) -> Path:
    filename = name if name.endswith(".json") else f"{name}.json"
    return FIXTURE_DIR / filename


def load_fixture(name: str) -> Tuple[Network, WiretapModel]:
    return load_network(fixture_path(name))


def cut_to_document(net: Network, cut: Cut) -> CutDocument:
    return CutDocument(
        nodes=cut.sorted_nodes(net.nodes),
        mask=cut.mask,
        forward=[edge.id for edge in cut.forward],
        backward=[edge.id for edge in cut.backward],
        connectivity=cut.connectivity.tolist(),
        unbounded=cut.unbounded,
    )


def network_to_document(
    net: Network,
    model: Optional[WiretapModel] = None,
    cuts: Optional[List[Cut]] = None,
    derived: Optional[Dict[str, Any]] = None,
) -> NetworkDocument:
    """Dump a network in the input schema plus a `derived` block.

    The derived block is always present, so a dump containing unbounded
    edges parses back.
    """
    if isinstance(model, ExplicitWiretap):
        wiretap = WiretapDocument(sets=[list(wiretap) for wiretap in model.sets])
    else:
        wiretap = WiretapDocument(z=model.z if model is not None else 0)
    block: Dict[str, Any] = dict(derived or {})
    if cuts is not None:
        block["cuts"] = [cut_to_document(net, cut).model_dump() for cut in cuts]
    return NetworkDocument(
        nodes=list(net.nodes),
        edges=[
            EdgeDocument(id=edge.id, tail=edge.tail, head=edge.head, unbounded=edge.unbounded)
            for edge in net.edges
        ],
        source=net.source,
        sink=net.sink,
        wiretap=wiretap,
        randomness=[node for node in net.nodes if node in net.randomness],
        derived=block,
    )
