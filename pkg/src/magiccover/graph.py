"""Immutable simple graphs with stable identifiers, and validated total labelings."""
from __future__ import annotations

import types
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    LoopEdgeError,
    NotBijectiveError,
    UnknownEndpointError,
    WrongDomainError,
)

VertexId = str
Edge = tuple[VertexId, VertexId]
Element = Union[VertexId, Edge]


def edge_key(u: VertexId, v: VertexId) -> Edge:
    """Canonical form of an undirected edge: lexicographically smaller endpoint first."""
    return (u, v) if u <= v else (v, u)


def element_name(e: Element) -> str:
    """JSON key for an element: the vertex id, or "u|v" for a canonical edge."""
    if isinstance(e, tuple):
        return f"{e[0]}|{e[1]}"
    return e


def parse_element(name: str) -> Element:
    if "|" in name:
        u, _, v = name.partition("|")
        return edge_key(u, v)
    return name


@dataclass(frozen=True)
class Graph:
    """Finite undirected simple graph with deterministic vertex and edge order."""

    vertices: tuple[VertexId, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def vertex_set(self) -> frozenset[VertexId]:
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> dict[VertexId, frozenset[VertexId]]:
        nbrs: dict[VertexId, set[VertexId]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return edge_key(u, v) in self.edge_set

    def elements(self) -> tuple[Element, ...]:
        return self.vertices + self.edges

    @property
    def num_elements(self) -> int:
        return len(self.vertices) + len(self.edges)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[u, v] for u, v in self.edges],
        }


def build_graph(vertices: Iterable[VertexId], edges: Iterable[Sequence[VertexId]]) -> Graph:
    """Validate and build a simple graph; rejects loops, multi-edges and bad endpoints."""
    vs = tuple(vertices)
    seen: set[VertexId] = set()
    for v in vs:
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex {v!r}")
        seen.add(v)
    es: list[Edge] = []
    eset: set[Edge] = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise LoopEdgeError(f"loop edge at {u!r}")
        if u not in seen:
            raise UnknownEndpointError(f"edge endpoint {u!r} is not a vertex")
        if v not in seen:
            raise UnknownEndpointError(f"edge endpoint {v!r} is not a vertex")
        e = edge_key(u, v)
        if e in eset:
            raise DuplicateEdgeError(f"duplicate edge {e[0]!r}-{e[1]!r}")
        eset.add(e)
        es.append(e)
    return Graph(vs, tuple(es))


def graph_from_json(data: Mapping) -> Graph:
    return build_graph(data["vertices"], [tuple(e) for e in data["edges"]])


@dataclass(frozen=True)
class TotalLabeling:
    """Validated bijection from the elements of a graph onto 1..|V|+|E|."""

    graph: Graph
    labels: Mapping[Element, int]

    def __getitem__(self, element: Element) -> int:
        return self.labels[element]

    @cached_property
    def is_super(self) -> bool:
        nv = len(self.graph.vertices)
        return {self.labels[v] for v in self.graph.vertices} == set(range(1, nv + 1))

    def label_sum(self) -> int:
        return sum(self.labels.values())

    def to_json_dict(self) -> dict:
        return {"labels": {element_name(e): self.labels[e] for e in self.graph.elements()}}


def total_label(graph: Graph, assignment: Mapping[Element, int]) -> TotalLabeling:
    """Validate an element -> label mapping as a total labeling of the graph.

    The domain must be exactly V(G) union E(G) and the image exactly
    {1, ..., |V|+|E|}; otherwise WrongDomainError / NotBijectiveError.
    """
    elements = graph.elements()
    domain = set(elements)
    keys = {(edge_key(*e) if isinstance(e, tuple) else e) for e in assignment}
    if keys != domain:
        extra = keys - domain
        miss = domain - keys
        raise WrongDomainError(
            f"labeling domain mismatch: {len(extra)} unknown, {len(miss)} missing elements"
        )
    labels = {
        (edge_key(*e) if isinstance(e, tuple) else e): int(lbl)
        for e, lbl in assignment.items()
    }
    n = len(elements)
    seen: dict[int, Element] = {}
    for e in elements:
        lbl = labels[e]
        if lbl in seen:
            raise NotBijectiveError(
                f"label {lbl} used for both {element_name(seen[lbl])} and {element_name(e)}",
                duplicate=lbl,
            )
        seen[lbl] = e
    missing = [lbl for lbl in range(1, n + 1) if lbl not in seen]
    if missing:
        raise NotBijectiveError(f"label {missing[0]} not used", missing=missing[0])
    return TotalLabeling(graph, types.MappingProxyType(labels))


def labels_from_json(graph: Graph, data: Mapping) -> TotalLabeling:
    raw = data["labels"] if "labels" in data else data
    return total_label(graph, {parse_element(k): v for k, v in raw.items()})
