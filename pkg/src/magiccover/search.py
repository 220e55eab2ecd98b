"""Brute-force/backtracking oracle for H-supermagic labelings of small graphs.

Independent of the closed-form constructions: it assigns vertex labels from
1..|V| and edge labels from |V|+1..|V|+|E| one element at a time, pruning any
branch in which a copy's sum can no longer reach the target. The target is
either supplied or inferred from the first copy completed on a branch.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Optional, Union

from .graph import Element, Graph, TotalLabeling, total_label
from .isocover import (
    DEFAULT_MAX_COPIES,
    DEFAULT_MAX_PATTERN_VERTICES,
    enumerate_copies,
)


@dataclass(frozen=True)
class SearchOptions:
    mode: str = "first"  # "first" finds one solution, "count" counts all
    target_sum: Optional[int] = None
    node_limit: int = 10_000_000
    deterministic: bool = False  # canonical element order; first hit is lex-least
    prune: bool = True


@dataclass(frozen=True)
class Solution:
    labeling: TotalLabeling
    nodes: int


@dataclass(frozen=True)
class NoSolution:
    nodes: int


@dataclass(frozen=True)
class Exhausted:
    nodes: int


@dataclass(frozen=True)
class Count:
    count: int
    nodes: int


Outcome = Union[Solution, NoSolution, Exhausted, Count]


class _LimitHit(Exception):
    pass


def _assignment_order(g: Graph, copies) -> list[Element]:
    """Cluster elements so whole copies complete as early as possible.

    Repeatedly takes the copy with the fewest not-yet-ordered elements and
    appends them (most-shared first). Completing copies early is what gives
    the sum constraint any pruning power.
    """
    canon = {e: i for i, e in enumerate(g.elements())}
    count = {e: 0 for e in g.elements()}
    for c in copies:
        for e in c.elements():
            count[e] += 1
    ordered: list[Element] = []
    placed: set[Element] = set()
    pending = [set(c.elements()) for c in copies]
    while pending:
        best = min(pending, key=lambda s: (len(s - placed), min(canon[e] for e in s)))
        fresh = sorted(best - placed, key=lambda e: (-count[e], canon[e]))
        ordered.extend(fresh)
        placed.update(fresh)
        pending = [s for s in pending if not (s <= placed)]
    rest = sorted((e for e in g.elements() if e not in placed), key=canon.__getitem__)
    return ordered + rest


def _derived_constraints(
    copies, elements, *, max_support: int = 12, max_enum_copies: int = 12, keep: int = 8
):
    """Short linear identities implied by the copy-sum system.

    Summing the equations of a subset S of copies gives
    sum(mult_S(e) * f(e)) = |S| * target, and the labels as a whole always sum
    to a known constant. Subtracting c times that constant cancels every
    element covered exactly c times by S; when only a few elements survive the
    cancellation, the leftover is a constraint on a small set of elements that
    no single-copy bound can see. Enumerating subsets is only viable for a
    small number of copies, so this returns nothing for larger instances.

    Each constraint is (coeffs, subset_size, c) with
    sum(coeffs[e] * f(e)) == subset_size * target - c * label_total.
    """
    if not copies or len(copies) > max_enum_copies:
        return []
    copy_sets = [c.elements() for c in copies]
    seen = set()
    out = []
    for mask in range(1, 1 << len(copies)):
        mult: dict = {}
        size = 0
        for i, elems in enumerate(copy_sets):
            if mask >> i & 1:
                size += 1
                for e in elems:
                    mult[e] = mult.get(e, 0) + 1
        for c in {0, *mult.values()}:
            coeffs = {e: m - c for e, m in mult.items() if m != c}
            if c:
                for e in elements:
                    if e not in mult:
                        coeffs[e] = -c
            if not coeffs or len(coeffs) > max_support:
                continue
            if size == 1 and c == 0:
                continue  # just a single copy's own sum, already enforced
            key = frozenset(coeffs.items())
            if key in seen or frozenset((e, -w) for e, w in coeffs.items()) in seen:
                continue
            seen.add(key)
            out.append((coeffs, size, c))
    out.sort(key=lambda t: len(t[0]))
    return out[:keep]


def search_supermagic(
    g: Graph,
    h: Graph,
    opts: SearchOptions = SearchOptions(),
    *,
    max_pattern_vertices: int = DEFAULT_MAX_PATTERN_VERTICES,
    max_copies: int = DEFAULT_MAX_COPIES,
) -> Outcome:
    """Search for super total labelings of g giving every copy of h equal sum."""
    copies = enumerate_copies(
        g, h, max_pattern_vertices=max_pattern_vertices, max_copies=max_copies
    )
    covered = frozenset().union(*(c.edges for c in copies)) if copies else frozenset()
    if not copies or not (covered >= g.edge_set):
        # No covering: the supermagic property is not defined, nothing can qualify.
        return Count(0, 0) if opts.mode == "count" else NoSolution(0)

    elements = (
        list(g.elements()) if opts.deterministic else _assignment_order(g, copies)
    )
    nv = len(g.vertices)
    n = g.num_elements
    is_vertex = {e: isinstance(e, str) for e in elements}
    membership: dict[Element, list[int]] = {e: [] for e in elements}
    copy_elements = [c.elements() for c in copies]
    for ci, elems in enumerate(copy_elements):
        for e in elems:
            membership[e].append(ci)

    copy_total = [0] * len(copies)
    copy_rem_v = [sum(1 for e in elems if isinstance(e, str)) for elems in copy_elements]
    copy_rem_e = [len(elems) - rv for elems, rv in zip(copy_elements, copy_rem_v)]
    avail_v = list(range(1, nv + 1))
    avail_e = list(range(nv + 1, n + 1))
    mult = {e: len(membership[e]) for e in elements}
    rem_mult_v = sorted(mult[e] for e in elements if is_vertex[e])
    rem_mult_e = sorted(mult[e] for e in elements if not is_vertex[e])
    weighted = 0  # sum of multiplicity * label over assigned elements

    label_total = n * (n + 1) // 2
    constraints = _derived_constraints(copies, elements) if opts.prune else []
    con_partial = [0] * len(constraints)
    con_rem = []  # per constraint: sorted remaining coeffs, split by sign and pool
    elem_cons: dict[Element, list[tuple[int, int]]] = {e: [] for e in elements}
    for j, (coeffs, _, _) in enumerate(constraints):
        con_rem.append(
            (
                sorted(w for e, w in coeffs.items() if w > 0 and is_vertex[e]),
                sorted(w for e, w in coeffs.items() if w > 0 and not is_vertex[e]),
                sorted(-w for e, w in coeffs.items() if w < 0 and is_vertex[e]),
                sorted(-w for e, w in coeffs.items() if w < 0 and not is_vertex[e]),
            )
        )
        for e, w in coeffs.items():
            elem_cons[e].append((j, w))

    target: Optional[int] = opts.target_sum
    assignment: dict[Element, int] = {}
    nodes = 0
    found: list[dict[Element, int]] = []
    solutions = 0

    def _has_value(pool: list[int], value: int) -> bool:
        i = bisect_left(pool, value)
        return i < len(pool) and pool[i] == value

    def _has_pair(pool: list[int], need: int) -> bool:
        lo, hi = 0, len(pool) - 1
        while lo < hi:
            s = pool[lo] + pool[hi]
            if s == need:
                return True
            if s < need:
                lo += 1
            else:
                hi -= 1
        return False

    def feasible(ci: int) -> bool:
        rv, re = copy_rem_v[ci], copy_rem_e[ci]
        if rv + re == 0 or target is None:
            return True
        need = target - copy_total[ci]
        if rv + re == 1:
            return _has_value(avail_v if rv else avail_e, need)
        if rv + re == 2:
            if rv == 2:
                return _has_pair(avail_v, need)
            if re == 2:
                return _has_pair(avail_e, need)
            return any(_has_value(avail_e, need - a) for a in avail_v)
        lo = sum(avail_v[:rv]) + sum(avail_e[:re])
        hi = sum(avail_v[len(avail_v) - rv:]) + sum(avail_e[len(avail_e) - re:])
        return lo <= need <= hi

    def constraint_feasible(j: int) -> bool:
        """Bound the derived linear constraint j over the unassigned part.

        Positive coefficients paired with the largest (resp. smallest) labels
        of their pool give the max (resp. min); negative ones the other way.
        Relaxes distinctness between the groups, so the bounds stay valid.
        """
        coeffs, size, c = constraints[j]
        rhs = size * target - c * label_total
        pv, pe, qv, qe = con_rem[j]
        part = con_partial[j]
        hi = part
        hi += sum(a * l for a, l in zip(pv, avail_v[len(avail_v) - len(pv):]))
        hi += sum(a * l for a, l in zip(pe, avail_e[len(avail_e) - len(pe):]))
        hi -= sum(a * l for a, l in zip(reversed(qv), avail_v))
        hi -= sum(a * l for a, l in zip(reversed(qe), avail_e))
        if hi < rhs:
            return False
        lo = part
        lo += sum(a * l for a, l in zip(reversed(pv), avail_v))
        lo += sum(a * l for a, l in zip(reversed(pe), avail_e))
        lo -= sum(a * l for a, l in zip(qv, avail_v[len(avail_v) - len(qv):]))
        lo -= sum(a * l for a, l in zip(qe, avail_e[len(avail_e) - len(qe):]))
        return lo <= rhs

    def aggregate_feasible() -> bool:
        """Every copy must reach the target, so the multiplicity-weighted sum of
        the remaining labels is pinned; bound it by the rearrangement inequality
        (both pools sorted ascending: same-order pairing is the max, reversed the
        min). This cuts branches no single-copy bound can see."""
        need = len(copies) * target - weighted
        hi = sum(m * l for m, l in zip(rem_mult_v, avail_v))
        hi += sum(m * l for m, l in zip(rem_mult_e, avail_e))
        if need > hi:
            return False
        lo = sum(m * l for m, l in zip(rem_mult_v, reversed(avail_v)))
        lo += sum(m * l for m, l in zip(rem_mult_e, reversed(avail_e)))
        return lo <= need

    def extend(idx: int):
        nonlocal nodes, target, solutions, weighted
        if idx == len(elements):
            if opts.mode == "count":
                solutions += 1
                return False
            found.append(dict(assignment))
            return True
        elem = elements[idx]
        pool = avail_v if is_vertex[elem] else avail_e
        rem_mult = rem_mult_v if is_vertex[elem] else rem_mult_e
        elem_copies = membership[elem]
        own_cons = elem_cons[elem]
        m = mult[elem]
        del rem_mult[bisect_left(rem_mult, m)]
        for j, w in own_cons:
            lst = con_rem[j][(0 if w > 0 else 2) + (0 if is_vertex[elem] else 1)]
            del lst[bisect_left(lst, abs(w))]
        if opts.deterministic:
            candidates = list(pool)
        else:
            # Balanced sums are the common case, so try labels nearest the
            # median of the pool first. Order only affects which solution is
            # found first; every candidate is still visited on backtracking.
            med = pool[len(pool) // 2]
            candidates = sorted(pool, key=lambda v: (abs(v - med), v))
        for lbl in candidates:
            nodes += 1
            if nodes > opts.node_limit:
                raise _LimitHit
            pool.remove(lbl)
            assignment[elem] = lbl
            weighted += m * lbl
            for j, w in own_cons:
                con_partial[j] += w * lbl
            set_target_here = False
            ok = True
            for ci in elem_copies:
                copy_total[ci] += lbl
                if is_vertex[elem]:
                    copy_rem_v[ci] -= 1
                else:
                    copy_rem_e[ci] -= 1
            for ci in elem_copies:
                if copy_rem_v[ci] + copy_rem_e[ci] == 0:
                    if target is None:
                        target = copy_total[ci]
                        set_target_here = True
                    elif copy_total[ci] != target:
                        ok = False
                        break
                elif opts.prune and not feasible(ci):
                    ok = False
                    break
            if ok and opts.prune and target is not None:
                if not aggregate_feasible():
                    ok = False
                else:
                    for j, _ in own_cons:
                        if not constraint_feasible(j):
                            ok = False
                            break
            if ok and extend(idx + 1):
                return True
            for ci in elem_copies:
                copy_total[ci] -= lbl
                if is_vertex[elem]:
                    copy_rem_v[ci] += 1
                else:
                    copy_rem_e[ci] += 1
            if set_target_here:
                target = None
            weighted -= m * lbl
            for j, w in own_cons:
                con_partial[j] -= w * lbl
            del assignment[elem]
            insort(pool, lbl)
        for j, w in own_cons:
            insort(con_rem[j][(0 if w > 0 else 2) + (0 if is_vertex[elem] else 1)], abs(w))
        insort(rem_mult, m)
        return False

    try:
        hit = extend(0)
    except _LimitHit:
        return Exhausted(nodes)
    if opts.mode == "count":
        return Count(solutions, nodes)
    if hit:
        return Solution(total_label(g, found[0]), nodes)
    return NoSolution(nodes)
