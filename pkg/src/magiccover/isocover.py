"""Enumerate subgraphs of G isomorphic to a pattern H and decide H-covering.

Copies are identified by (vertex set, edge set) pairs: the edge set is the
image of the pattern's edges, which need not be every edge G induces on the
vertex set. Enumeration is recursive backtracking over vertex images with
adjacency and degree pruning; interchangeable pattern vertices (twins) are
forced into a fixed image order so patterns with many symmetric leaves do not
explode, and the surviving duplicates are deduplicated by element set.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .errors import LimitExceededError, PatternTooLargeError
from .graph import Edge, Element, Graph, VertexId, edge_key

DEFAULT_MAX_PATTERN_VERTICES = 24
DEFAULT_MAX_COPIES = 10**6


@dataclass(frozen=True)
class CopySet:
    """One subgraph of G isomorphic to the pattern: its vertices and edges."""

    vertices: frozenset[VertexId]
    edges: frozenset[Edge]

    @cached_property
    def sort_key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))

    def elements(self) -> frozenset[Element]:
        return self.vertices | self.edges

    def to_json_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [[u, v] for u, v in sorted(self.edges)],
        }


def _match_order(h: Graph) -> list[VertexId]:
    """Pattern vertex order: greedy, preferring vertices adjacent to ordered ones."""
    order: list[VertexId] = []
    placed: set[VertexId] = set()
    canon = {v: i for i, v in enumerate(h.vertices)}
    remaining = set(h.vertices)
    while remaining:
        best = max(
            remaining,
            key=lambda v: (
                sum(1 for w in h.adjacency[v] if w in placed),
                len(h.adjacency[v]),
                -canon[v],
            ),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _twin_groups(h: Graph) -> dict[VertexId, list[VertexId]]:
    """Map each pattern vertex to its twin class (identical open or closed nbhd).

    Open classes claim their vertices first; a closed class is kept only when
    fully unclaimed, so classes stay disjoint and any within-class reordering
    of a match is an automorphism of the pattern.
    """
    open_sig: dict[frozenset, list[VertexId]] = {}
    for v in h.vertices:
        open_sig.setdefault(h.adjacency[v], []).append(v)
    groups: dict[VertexId, list[VertexId]] = {}
    claimed: set[VertexId] = set()
    for members in open_sig.values():
        if len(members) > 1:
            for v in members:
                groups[v] = members
                claimed.add(v)
    closed_sig: dict[frozenset, list[VertexId]] = {}
    for v in h.vertices:
        if v not in claimed:
            closed_sig.setdefault(h.adjacency[v] | {v}, []).append(v)
    for members in closed_sig.values():
        if len(members) > 1:
            for v in members:
                groups[v] = members
    return groups


def enumerate_embeddings(
    g: Graph, h: Graph, *, symmetry_breaking: bool = True
) -> Iterator[dict[VertexId, VertexId]]:
    """Yield vertex maps h -> g preserving all pattern edges (monomorphisms)."""
    if len(h.vertices) > len(g.vertices):
        return
    order = _match_order(h)
    gindex = {v: i for i, v in enumerate(g.vertices)}
    hindex = {v: i for i, v in enumerate(h.vertices)}
    twins = _twin_groups(h) if symmetry_breaking else {}
    adj_g = g.adjacency
    adj_h = h.adjacency
    mapping: dict[VertexId, VertexId] = {}
    used: set[VertexId] = set()

    def extend(depth: int) -> Iterator[dict[VertexId, VertexId]]:
        if depth == len(order):
            yield dict(mapping)
            return
        u = order[depth]
        anchors = [w for w in adj_h[u] if w in mapping]
        if anchors:
            candidates = set(adj_g[mapping[anchors[0]]])
            for w in anchors[1:]:
                candidates &= adj_g[mapping[w]]
        else:
            candidates = set(g.vertices)
        deg_u = len(adj_h[u])
        for c in sorted(candidates, key=gindex.__getitem__):
            if c in used or len(adj_g[c]) < deg_u:
                continue
            if u in twins:
                ok = True
                for w in twins[u]:
                    if w is not u and w in mapping:
                        if (hindex[w] < hindex[u]) != (gindex[mapping[w]] < gindex[c]):
                            ok = False
                            break
                if not ok:
                    continue
            mapping[u] = c
            used.add(c)
            yield from extend(depth + 1)
            del mapping[u]
            used.remove(c)

    yield from extend(0)


def enumerate_copies(
    g: Graph,
    h: Graph,
    *,
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
    max_copies: int = DEFAULT_MAX_COPIES,
) -> list[CopySet]:
    """All distinct subgraphs of g isomorphic to h, in deterministic order."""
    if max_pattern_vertices is not None and len(h.vertices) > max_pattern_vertices:
        raise PatternTooLargeError(
            f"pattern has {len(h.vertices)} vertices; limit is {max_pattern_vertices}"
        )
    found: set[CopySet] = set()
    for phi in enumerate_embeddings(g, h):
        copy = CopySet(
            frozenset(phi.values()),
            frozenset(edge_key(phi[a], phi[b]) for a, b in h.edges),
        )
        found.add(copy)
        if len(found) > max_copies:
            raise LimitExceededError(f"more than {max_copies} copies found")
    return sorted(found, key=lambda c: c.sort_key)


def embedding_witness(
    g: Graph, h: Graph, copy: CopySet
) -> Optional[dict[VertexId, VertexId]]:
    """An explicit isomorphism from h onto the given copy, if one exists."""
    sub = Graph(tuple(sorted(copy.vertices)), tuple(sorted(copy.edges)))
    for phi in enumerate_embeddings(sub, h):
        if set(phi.values()) == copy.vertices:
            if {edge_key(phi[a], phi[b]) for a, b in h.edges} == copy.edges:
                return phi
    return None


def count_copies(g: Graph, h: Graph, **kwargs) -> int:
    return len(enumerate_copies(g, h, **kwargs))


def has_h_covering(g: Graph, h: Graph, **kwargs) -> bool:
    """True iff every edge of g lies in at least one copy of h."""
    covered: set[Edge] = set()
    for copy in enumerate_copies(g, h, **kwargs):
        covered |= copy.edges
    return covered >= g.edge_set
