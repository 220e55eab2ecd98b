"""Explicit supermagic labeling constructions and their closed-form magic sums.

The vertex-amalgamation labeling splits into three cases on the parity of
n+m (unit element count) and k (copy count); the path-attachment labeling
into two cases on the parity of n+m-1 and k. The flower labeling is driven
by four permutations of [n] that must pass a balance check (phi_check).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import families
from .errors import (
    ParamOutOfRangeError,
    ParityViolationError,
    PhiNotConstantError,
)
from .graph import Element, Graph, TotalLabeling, VertexId, edge_key, total_label


# ---------------------------------------------------------------------------
# Vertex amalgamation
# ---------------------------------------------------------------------------

def amalgamation_magic_sum(n: int, m: int, k: int) -> int:
    """Closed-form copy sum for the k-fold vertex amalgamation of an (n, m) unit."""
    if n < 2 or m < 1 or k < 1:
        raise ParamOutOfRangeError(f"invalid unit/copy parameters n={n}, m={m}, k={k}")
    t = n + m - 1
    # The two halves are only jointly integral; divide once, after adding.
    if (t * (k - 1)) % 2 == 0:
        numerator = 3 * (n + m) - 1 + k * t * t
    else:
        numerator = 3 * (n + m) - 2 + k * (t * t + 1)
    if numerator % 2 != 0:
        raise ParamOutOfRangeError(
            f"no integral magic sum for n={n}, m={m}, k={k}"
        )
    return numerator // 2


def _alternating_label(base: int, p: int, k: int, j: int) -> int:
    # Position p of copy j in the zig-zag block pattern starting after `base`.
    # Odd positions ascend with j, even positions descend, so the per-copy sum
    # over an even number of positions is independent of j.
    if p % 2 == 1:
        return base + (p - 1) * k + j
    return base + p * k + 1 - j


def _special_block_odd_k(p: int, k: int, j: int) -> int:
    # Three-slot block balancing the leftover position when k is odd; uses
    # labels 2..3k+1 and contributes (9k+9)/2 to every copy.
    half = (k - 1) // 2
    if p == 1:
        return 1 + j
    if p == 2:
        return 3 * (k + 1) // 2 + j if j <= half else (k + 3) // 2 + j
    return 3 * k + 2 - 2 * j if j <= half else 4 * k + 2 - 2 * j


def _special_block_even_k(p: int, k: int, j: int) -> int:
    # Even-k variant: the hub takes k/2+1, this block the rest of 1..3k+1 and
    # contributes (9k+8)/2 to every copy.
    half = k // 2
    if p == 1:
        return j if j <= half else j + 1
    if p == 2:
        return 3 * half + 1 + j if j <= half else half + 1 + j
    return 3 * (k + 1) - 2 * j if j <= half else 4 * k + 2 - 2 * j


def label_amalgamation(h: Graph, v: VertexId, k: int) -> TotalLabeling:
    """Supermagic labeling of the k-fold amalgamation of h at v.

    Every canonical copy receives the same sum, amalgamation_magic_sum(n, m, k).
    """
    graph, cs = families.amalgamate(h, v, k)
    n, m = cs.branch_sizes
    free = n - 1 + m
    if (n + m) % 2 == 1:
        case = 1
    elif k % 2 == 1:
        case = 2
    else:
        case = 3
    if case != 1 and free < 3:
        raise ParamOutOfRangeError(
            "even n+m requires at least 3 non-hub elements per copy"
        )

    labels: dict[Element, int] = {"hub": 1 if case != 3 else k // 2 + 1}
    for j in range(1, k + 1):
        seq: list[Element] = list(cs.branch_vertex_seq(j)) + list(cs.branch_edge_seq(j))
        for p, elem in enumerate(seq, start=1):
            if case == 1 or p > 3:
                labels[elem] = _alternating_label(1, p, k, j)
            elif case == 2:
                labels[elem] = _special_block_odd_k(p, k, j)
            else:
                labels[elem] = _special_block_even_k(p, k, j)
    return total_label(graph, labels)


def label_generalized_amalgamation(h: Graph, block: set, k: int) -> TotalLabeling:
    """Supermagic labeling of k copies of h glued along an induced block.

    Requires an even number of free (per-copy) elements. Shared vertices take
    1..l, free vertices the next k(n-l) labels in the zig-zag pattern, shared
    edges the labels right after all vertices, free edges the rest.
    """
    graph, cs = families.amalgamate_on_subgraph(h, block, k)
    n, m = cs.branch_sizes
    shared_vertices = sorted(
        (e for e in cs.shared if isinstance(e, str)),
        key=lambda e: cs.coordinates[e],
    )
    shared_edges = sorted(
        (e for e in cs.shared if isinstance(e, tuple)),
        key=lambda e: cs.coordinates[e],
    )
    ell = len(shared_vertices)
    n_free_v = n - ell
    n_free_e = m - len(shared_edges)
    if (n_free_v + n_free_e) % 2 != 0:
        raise ParityViolationError(
            "per-copy free element count must be even "
            f"(got {n_free_v} vertices + {n_free_e} edges)"
        )

    labels: dict[Element, int] = {}
    for i, sv in enumerate(shared_vertices, start=1):
        labels[sv] = i
    nv_total = ell + k * n_free_v
    for i, se in enumerate(shared_edges, start=1):
        labels[se] = nv_total + i
    edge_shift = len(shared_edges)
    for j in range(1, k + 1):
        for p, elem in enumerate(cs.branch_vertex_seq(j), start=1):
            labels[elem] = _alternating_label(ell, p, k, j)
        for q, elem in enumerate(cs.branch_edge_seq(j), start=1):
            p = n_free_v + q
            labels[elem] = _alternating_label(ell + edge_shift, p, k, j)
    return total_label(graph, labels)


# ---------------------------------------------------------------------------
# Path attachment
# ---------------------------------------------------------------------------

def path_attach_magic_sum(n: int, m: int, k: int) -> int:
    """Closed-form copy sum for k copies of an (n, m) unit attached along a path."""
    if k < 2:
        raise ParamOutOfRangeError(f"path attachment needs k >= 2, got {k}")
    return (n + m) * ((n + m + 1) * k + 1) + (k + 1) // 2


def _path_vertex_label(i: int, k: int) -> int:
    return (i + 1) // 2 if i % 2 == 1 else (k + 1) // 2 + i // 2


def _special_branch_block(p: int, k: int, i: int) -> int:
    # Three-slot block for odd k; uses labels k+1..4k, per-branch sum (15k+3)/2.
    half = (k - 1) // 2
    if p == 1:
        return k + i
    if p == 2:
        return (5 * k + 1) // 2 + i if i <= half else (3 * k + 1) // 2 + i
    return 4 * k + 1 - 2 * i if i <= half else 5 * k + 1 - 2 * i


def label_path_attach(g: Graph, v: VertexId, k: int) -> TotalLabeling:
    """Supermagic labeling of k copies of g attached along a path at v.

    Every two-consecutive-branch copy (branches i, i+1 plus the joining path
    edge) receives the same sum, path_attach_magic_sum(n, m, k).
    """
    graph, cs = families.path_attach(g, v, k)
    n, m = cs.branch_sizes
    free = n - 1 + m
    if (n + m - 1) % 2 == 0:
        case = 1
    elif k % 2 == 1:
        case = 2
    else:
        raise ParityViolationError(
            "no construction when n+m-1 is odd and k is even"
        )
    if case == 2 and free < 3:
        raise ParamOutOfRangeError(
            "odd n+m-1 requires at least 3 non-attachment elements per copy"
        )

    labels: dict[Element, int] = {}
    for i, w in enumerate(cs.path_vertices, start=1):
        labels[w] = _path_vertex_label(i, k)
    for i, e in enumerate(cs.path_edges, start=1):
        labels[e] = (n + m + 1) * k - i
    for i in range(1, k + 1):
        seq: list[Element] = list(cs.branch_vertex_seq(i)) + list(cs.branch_edge_seq(i))
        for p, elem in enumerate(seq, start=1):
            if case == 1 or p > 3:
                labels[elem] = p * k + i if p % 2 == 1 else (p + 1) * k + 1 - i
            else:
                labels[elem] = _special_branch_block(p, k, i)
    return total_label(graph, labels)


# ---------------------------------------------------------------------------
# Flower graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationQuadruple:
    """Four permutations of [n], stored 1-indexed via tuples of length n."""

    pi1: tuple[int, ...]
    pi2: tuple[int, ...]
    pi3: tuple[int, ...]
    pi4: tuple[int, ...]

    def __post_init__(self):
        n = len(self.pi1)
        for name in ("pi1", "pi2", "pi3", "pi4"):
            perm = getattr(self, name)
            if len(perm) != n or set(perm) != set(range(1, n + 1)):
                raise ParamOutOfRangeError(f"{name} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.pi1)


@dataclass(frozen=True)
class PhiCheck:
    """Per-index balance values of a permutation quadruple and their common value."""

    phi1: tuple[int, ...]
    phi2: tuple[int, ...]
    constant: Optional[int]


def default_flower_permutations(n: int) -> PermutationQuadruple:
    """The standard quadruple: identity, interleaved descents/ascents, reversal."""
    if n < 3 or n % 2 == 0:
        raise ParamOutOfRangeError(f"flower permutations need odd n >= 3, got {n}")
    half = (n + 1) // 2

    def zigzag(i: int) -> int:
        return (i + 1) // 2 if i % 2 == 1 else i // 2 + half

    pi1 = tuple(range(1, n + 1))
    pi2 = tuple(n + 1 - zigzag(i) for i in range(1, n + 1))
    pi3 = tuple(zigzag(i) for i in range(1, n + 1))
    pi4 = tuple(n + 1 - i for i in range(1, n + 1))
    return PermutationQuadruple(pi1, pi2, pi3, pi4)


def phi_check(n: int, q: PermutationQuadruple) -> PhiCheck:
    """Evaluate both balance families; rim indices wrap modulo n."""
    if n % 2 == 0 or q.n != n:
        raise ParamOutOfRangeError("phi check needs odd n matching the quadruple")
    half = (n + 1) // 2
    phi1 = []
    phi2 = []
    for i in range(1, n + 1):
        nxt = 1 if i == n else i + 1
        phi1.append(
            q.pi1[i - 1] + q.pi1[nxt - 1] + q.pi2[i - 1] + q.pi2[nxt - 1]
            + q.pi4[i - 1] + half - 1
        )
        phi2.append(
            q.pi1[i - 1] + 3 * q.pi2[i - 1] + q.pi3[i - 1] + (n if i % 2 == 0 else 0)
        )
    values = set(phi1) | set(phi2)
    constant = values.pop() if len(values) == 1 else None
    return PhiCheck(tuple(phi1), tuple(phi2), constant)


def flower_magic_sum(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ParamOutOfRangeError(f"flower magic sum needs odd n >= 3, got {n}")
    return 16 * n + 7


def label_flower(n: int, q: Optional[PermutationQuadruple] = None) -> TotalLabeling:
    """Total labeling of the flower graph driven by a permutation quadruple.

    With a constant balance value phi, every triangle through the hub sums to
    13n+5+phi (= 16n+7 for the default quadruple). For n=3 the rim itself is a
    seventh triangle that the construction does not balance; the verifier is
    the authority on whether the result is actually supermagic.
    """
    if n < 3 or n % 2 == 0:
        raise ParamOutOfRangeError(f"flower labeling needs odd n >= 3, got {n}")
    if q is None:
        q = default_flower_permutations(n)
    check = phi_check(n, q)
    if check.constant is None:
        raise PhiNotConstantError("permutation quadruple fails the balance check")
    graph = families.flower(n)
    half = (n + 1) // 2

    labels: dict[Element, int] = {"x0": n + 1}
    for i in range(1, n + 1):
        nxt = 1 if i == n else i + 1
        labels[f"x{i}"] = q.pi1[i - 1]
        labels[f"y{i}"] = q.pi2[i - 1] + n + 1
        labels[edge_key("x0", f"x{i}")] = q.pi2[i - 1] + 5 * n + 1
        labels[edge_key("x0", f"y{i}")] = q.pi2[i - 1] + 4 * n + 1
        labels[edge_key(f"x{i}", f"y{i}")] = q.pi3[i - 1] + (2 * n + 1 if i % 2 == 1 else 3 * n + 1)
        labels[edge_key(f"x{i}", f"x{nxt}")] = q.pi4[i - 1] + 2 * n + 1 + half
    return total_label(graph, labels)


# ---------------------------------------------------------------------------
# Family dispatch for the CLI
# ---------------------------------------------------------------------------

def label_family(
    spec: families.FamilySpec,
    graph_loader: Optional[Callable[[str], Graph]] = None,
) -> TotalLabeling:
    """Produce the constructed labeling for a family spec, where one exists."""
    name = spec.name
    if name == "flower":
        return label_flower(int(spec.params["n"]))
    if name == "banana":
        unit, v = families.banana_unit(int(spec.params["n"]))
        return label_amalgamation(unit, v, int(spec.params["k"]))
    if name == "firecracker":
        unit, v = families.firecracker_unit(int(spec.params["n"]))
        return label_path_attach(unit, v, int(spec.params["k"]))
    if name == "amalgam":
        h = families.resolve_graph_ref(spec.params["h"], graph_loader)
        return label_amalgamation(h, spec.params["v"], int(spec.params["k"]))
    if name == "pathattach":
        g = families.resolve_graph_ref(spec.params["g"], graph_loader)
        return label_path_attach(g, spec.params["v"], int(spec.params["k"]))
    raise ParamOutOfRangeError(f"no labeling construction for family {name!r}")
