"""Shared naive oracles for the test suite.

These deliberately reimplement, as slowly and directly as possible, what the
package computes cleverly: copy enumeration by brute-force injection, and
labeling search by filtering every permutation assignment. They exist so the
fast implementations are checked against something independent.
"""
import itertools

from magiccover import edge_key


def naive_copies(g, h):
    """All subgraphs of g isomorphic to h, by trying every vertex injection."""
    found = set()
    hv = list(h.vertices)
    for image in itertools.permutations(g.vertices, len(hv)):
        phi = dict(zip(hv, image))
        if all(g.has_edge(phi[a], phi[b]) for a, b in h.edges):
            found.add(
                (
                    frozenset(image),
                    frozenset(edge_key(phi[a], phi[b]) for a, b in h.edges),
                )
            )
    return found


def naive_supermagic_assignments(g, h, target=None):
    """Every super total labeling of g with equal copy sums, by filtering all
    vertex-label and edge-label permutations. Only usable on tiny graphs."""
    copies = naive_copies(g, h)
    assert copies, "oracle needs at least one copy"
    nv = len(g.vertices)
    n = g.num_elements
    solutions = []
    for vperm in itertools.permutations(range(1, nv + 1)):
        vlab = dict(zip(g.vertices, vperm))
        for eperm in itertools.permutations(range(nv + 1, n + 1)):
            labels = {**vlab, **dict(zip(g.edges, eperm))}
            sums = {
                sum(labels[v] for v in vs) + sum(labels[e] for e in es)
                for vs, es in copies
            }
            if len(sums) == 1 and (target is None or sums == {target}):
                solutions.append(labels)
    return solutions


def corrupting_swap(labeling, copies):
    """Two elements whose labels, once swapped, must break certification:
    either each lies in a copy the other does not touch (so two copy sums
    shift in opposite directions), or, when every copy contains both, a
    vertex and an edge (so the labeling stops being super)."""
    for c1 in copies:
        for c2 in copies:
            only1 = c1.elements() - c2.elements()
            only2 = c2.elements() - c1.elements()
            if only1 and only2:
                return next(iter(only1)), next(iter(only2))
    return labeling.graph.vertices[0], labeling.graph.edges[0]


def swapped(labeling, a, b):
    labels = dict(labeling.labels)
    labels[a], labels[b] = labels[b], labels[a]
    return labels
