from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from core.errors import NetworkValidationError


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    unbounded: bool = False


@dataclass(frozen=True)
class Network:
    """Directed multigraph with unit edges, one source and one sink.

    `randomness` holds the nodes allowed to generate private randomness.
    Edge order is declaration order and fixes every matrix index downstream.
    """

    nodes: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    source: str
    sink: str
    randomness: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.nodes)) != len(self.nodes):
            raise NetworkValidationError("duplicate node ids")
        if self.source == self.sink:
            raise NetworkValidationError(f"source and sink are the same node `{self.source}`")
        for role, node in (("source", self.source), ("sink", self.sink)):
            if node not in self.nodes:
                raise NetworkValidationError(f"{role} `{node}` is not a declared node")
        seen = set()
        for edge in self.edges:
            if edge.id in seen:
                raise NetworkValidationError(f"duplicate edge id `{edge.id}`")
            seen.add(edge.id)
            for end in (edge.tail, edge.head):
                if end not in self.nodes:
                    raise NetworkValidationError(f"edge `{edge.id}` references undeclared node `{end}`")
        unknown = set(self.randomness) - set(self.nodes)
        if unknown:
            raise NetworkValidationError(f"randomness flags on undeclared nodes {sorted(unknown)}")

    @cached_property
    def edge_index(self) -> Dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    @property
    def inner_nodes(self) -> Tuple[str, ...]:
        """Nodes other than source and sink, in declaration order."""
        return tuple(node for node in self.nodes if node not in (self.source, self.sink))

    def edge(self, edge_id: str) -> Edge:
        return self.edge_index[edge_id]

    def can_generate_randomness(self, node: str) -> bool:
        return node in self.randomness

    @cached_property
    def digraph(self) -> nx.MultiDiGraph:
        """Read-only networkx view, built once per network."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.nodes)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id, unbounded=edge.unbounded)
        return nx.freeze(graph)


@dataclass(frozen=True)
class UniformWiretap:
    """Every edge set of size at most z may be observed."""

    z: int

    def __post_init__(self):
        if self.z < 0:
            raise NetworkValidationError(f"wiretap z must be >= 0, got {self.z}")


@dataclass(frozen=True)
class ExplicitWiretap:
    sets: Tuple[Tuple[str, ...], ...]


WiretapModel = Union[UniformWiretap, ExplicitWiretap]


@dataclass(frozen=True, eq=False)
class Cut:
    """A source-side vertex set V with its classified crossing edges.

    `connectivity[i, j]` is 1 iff the head of backward edge j reaches the
    tail of forward edge i without leaving V. `unbounded` marks cuts crossed
    by an unbounded edge; their capacity is infinite.
    """

    side: FrozenSet[str]
    mask: int
    forward: Tuple[Edge, ...]
    backward: Tuple[Edge, ...]
    connectivity: np.ndarray
    unbounded: bool = False

    def __post_init__(self):
        matrix = np.array(self.connectivity, dtype=np.int64).reshape(len(self.forward), len(self.backward))
        matrix.flags.writeable = False
        object.__setattr__(self, "connectivity", matrix)

    @property
    def x(self) -> int:
        return len(self.forward)

    @property
    def y(self) -> int:
        return len(self.backward)

    @property
    def profile(self) -> Tuple[int, int]:
        return self.x, self.y

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Forward edges then backward edges; the row order of the stacked pattern."""
        return self.forward + self.backward

    @cached_property
    def rows(self) -> Dict[str, int]:
        return {edge.id: index for index, edge in enumerate(self.edges)}

    def is_forward(self, edge_id: str) -> bool:
        return self.rows.get(edge_id, self.x) < self.x

    def row_of(self, edge_id: str) -> Optional[int]:
        return self.rows.get(edge_id)

    def sorted_nodes(self, order: Iterable[str]) -> List[str]:
        return [node for node in order if node in self.side]
