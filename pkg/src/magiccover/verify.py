"""First-principles certification that a labeling is H-supermagic.

The verifier assumes nothing from the constructions: it re-checks bijectivity
and super-ness of the labeling, re-enumerates every subgraph isomorphic to the
pattern, checks the covering, and compares all copy sums. It reports either
the magic constant or a concrete failure witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import UnknownElementError
from .graph import Element, Graph, TotalLabeling, edge_key, element_name
from .isocover import (
    DEFAULT_MAX_COPIES,
    DEFAULT_MAX_PATTERN_VERTICES,
    CopySet,
    enumerate_copies,
)


@dataclass(frozen=True)
class VerificationReport:
    is_bijection: bool
    is_super: bool
    admits_covering: bool
    copies: tuple[CopySet, ...]
    copy_sums: tuple[int, ...]
    magic_sum: Optional[int]
    failure: Optional[dict]

    @property
    def certified(self) -> bool:
        return self.magic_sum is not None

    def to_json_dict(self) -> dict:
        return {
            "is_bijection": self.is_bijection,
            "is_super": self.is_super,
            "admits_covering": self.admits_covering,
            "copies": [c.to_json_dict() for c in self.copies],
            "copy_sums": list(self.copy_sums),
            "magic_sum": self.magic_sum,
            "failure": self.failure,
        }


def copy_sum(f, c: CopySet) -> int:
    """Sum of the labels of one copy's vertices and edges."""
    labels = f.labels if isinstance(f, TotalLabeling) else f
    total = 0
    for e in c.elements():
        if e not in labels:
            raise UnknownElementError(f"element {element_name(e)} missing from labeling")
        total += labels[e]
    return total


def _normalize(assignment: Mapping) -> dict[Element, int]:
    return {
        (edge_key(*e) if isinstance(e, tuple) else e): v for e, v in assignment.items()
    }


def verify_supermagic(
    g: Graph,
    h: Graph,
    f,
    *,
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
    max_copies: int = DEFAULT_MAX_COPIES,
) -> VerificationReport:
    """Certify that f is an h-supermagic total labeling of g, or say why not.

    f may be a TotalLabeling or any element -> label mapping; bijectivity is a
    checked output, not a precondition.
    """
    labels = _normalize(f.labels if isinstance(f, TotalLabeling) else f)
    elements = g.elements()
    failure: Optional[dict] = None

    is_bijection = True
    if set(labels) != set(elements):
        is_bijection = False
        missing = sorted(element_name(e) for e in set(elements) - set(labels))
        extra = sorted(element_name(e) for e in set(labels) - set(elements))
        failure = {"kind": "wrong_domain", "missing": missing, "unknown": extra}
    else:
        n = len(elements)
        by_label: dict[int, Element] = {}
        for e in elements:
            lbl = labels[e]
            if lbl in by_label:
                is_bijection = False
                failure = {
                    "kind": "duplicate_label",
                    "label": lbl,
                    "elements": [element_name(by_label[lbl]), element_name(e)],
                }
                break
            by_label[lbl] = e
        if is_bijection and set(by_label) != set(range(1, n + 1)):
            is_bijection = False
            bad = sorted(set(by_label) - set(range(1, n + 1)))[0]
            failure = {
                "kind": "label_out_of_range",
                "label": bad,
                "element": element_name(by_label[bad]),
            }

    nv = len(g.vertices)
    is_super = is_bijection and {labels.get(v) for v in g.vertices} == set(
        range(1, nv + 1)
    )
    if is_bijection and not is_super and failure is None:
        bad_vertex = next(v for v in g.vertices if labels[v] > nv)
        failure = {
            "kind": "not_super",
            "vertex": bad_vertex,
            "label": labels[bad_vertex],
        }

    copies = tuple(
        enumerate_copies(
            g, h, max_pattern_vertices=max_pattern_vertices, max_copies=max_copies
        )
    )
    covered = frozenset().union(*(c.edges for c in copies)) if copies else frozenset()
    admits_covering = covered >= g.edge_set
    if not admits_covering and failure is None:
        uncovered = sorted(g.edge_set - covered)
        failure = {
            "kind": "uncovered_edge" if copies else "no_copies",
            "edges": [element_name(e) for e in uncovered],
        }

    copy_sums: tuple[int, ...] = ()
    magic_sum: Optional[int] = None
    if is_bijection:
        copy_sums = tuple(copy_sum(labels, c) for c in copies)
        if is_super and admits_covering and copies:
            distinct = set(copy_sums)
            if len(distinct) == 1:
                magic_sum = copy_sums[0]
            elif failure is None:
                lo = copy_sums.index(min(copy_sums))
                hi = copy_sums.index(max(copy_sums))
                failure = {
                    "kind": "sum_mismatch",
                    "copy_a": copies[lo].to_json_dict(),
                    "sum_a": copy_sums[lo],
                    "copy_b": copies[hi].to_json_dict(),
                    "sum_b": copy_sums[hi],
                }
    return VerificationReport(
        is_bijection=is_bijection,
        is_super=is_super,
        admits_covering=admits_covering,
        copies=copies,
        copy_sums=copy_sums,
        magic_sum=magic_sum,
        failure=failure,
    )
