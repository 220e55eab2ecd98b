"""Graph family constructors and the copy-structure metadata their labelings use.

Each composite constructor (amalgamation, path attachment, banana, firecracker)
returns both the graph and a CopyStructure describing the k canonical branches:
which elements belong to which branch, which are shared (hub or spine), and the
(position, copy) coordinate of every element. The labeling formulas consume
these coordinates.
"""
from __future__ import annotations

import types
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .errors import (
    NotInducedError,
    ParamOutOfRangeError,
    UnknownVertexError,
)
from .graph import Edge, Element, Graph, VertexId, build_graph, edge_key


@dataclass(frozen=True)
class CopyStructure:
    """Branch decomposition of an amalgamation-style graph.

    coordinates maps every element to (position, copy); copy 0 marks shared
    elements (the hub, an identified block, or the spine path). Vertex
    positions run 1..n in the unit's canonical order with the attachment
    vertex last; edge positions run 1..m in the unit's canonical edge order.
    """

    k: int
    copies: tuple[frozenset[Element], ...]
    shared: frozenset[Element]
    coordinates: Mapping[Element, tuple[int, int]]
    branch_sizes: tuple[int, int]  # (n, m) of the unit graph
    path_vertices: tuple[VertexId, ...] = ()
    path_edges: tuple[Edge, ...] = ()

    def branch_vertex_seq(self, j: int) -> list[VertexId]:
        """Free vertices of branch j, ordered by unit position (attachment excluded)."""
        n = self.branch_sizes[0]
        out = [
            (p, e)
            for e, (p, c) in self.coordinates.items()
            if c == j and isinstance(e, str) and p < n
        ]
        return [e for _, e in sorted(out)]

    def branch_edge_seq(self, j: int) -> list[Edge]:
        """Free edges of branch j, ordered by unit edge position."""
        out = [
            (p, e)
            for e, (p, c) in self.coordinates.items()
            if c == j and isinstance(e, tuple)
        ]
        return [e for _, e in sorted(out)]


def star(n: int) -> Graph:
    """Star K_{1,n-1}: center "c" plus leaves "l1".."l{n-1}"."""
    if n < 2:
        raise ParamOutOfRangeError(f"star needs n >= 2, got {n}")
    leaves = [f"l{i}" for i in range(1, n)]
    return build_graph(["c"] + leaves, [("c", leaf) for leaf in leaves])


def path(k: int) -> Graph:
    if k < 1:
        raise ParamOutOfRangeError(f"path needs k >= 1, got {k}")
    vs = [f"p{i}" for i in range(1, k + 1)]
    return build_graph(vs, [(vs[i], vs[i + 1]) for i in range(k - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParamOutOfRangeError(f"cycle needs n >= 3, got {n}")
    vs = [f"c{i}" for i in range(1, n + 1)]
    return build_graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def wheel(n: int) -> Graph:
    """Wheel: hub "x0" joined to the rim cycle "x1".."xn"."""
    if n < 3:
        raise ParamOutOfRangeError(f"wheel needs n >= 3, got {n}")
    rim = [f"x{i}" for i in range(1, n + 1)]
    edges = [("x0", x) for x in rim]
    edges += [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    return build_graph(["x0"] + rim, edges)


def k4_minus() -> Graph:
    """K4 with one edge removed; the degree-3 attachment vertex is last ("v4").

    The edge order is the one the path-attachment labeling walks, so labeled
    output matches the reference drawing element for element.
    """
    return build_graph(
        ["v1", "v2", "v3", "v4"],
        [("v3", "v4"), ("v1", "v4"), ("v1", "v2"), ("v2", "v4"), ("v2", "v3")],
    )


def flower(n: int) -> Graph:
    """Wheel on n rim vertices plus n outer vertices y_i adjacent to x_i and the hub."""
    if n < 3:
        raise ParamOutOfRangeError(f"flower needs n >= 3, got {n}")
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{i}" for i in range(1, n + 1)]
    edges = [("x0", x) for x in xs]
    edges += [("x0", y) for y in ys]
    edges += [(xs[i], ys[i]) for i in range(n)]
    edges += [(xs[i], xs[(i + 1) % n]) for i in range(n)]
    return build_graph(["x0"] + xs + ys, edges)


def _unit_order(h: Graph, v: VertexId) -> list[VertexId]:
    """Unit vertex order with the attachment vertex moved to the last slot."""
    if v not in h.vertex_set:
        raise UnknownVertexError(f"attachment vertex {v!r} not in unit graph")
    return [u for u in h.vertices if u != v] + [v]


def amalgamate(h: Graph, v: VertexId, k: int) -> tuple[Graph, CopyStructure]:
    """Glue k copies of h at the vertex v; the identified vertex is named "hub"."""
    if k < 1:
        raise ParamOutOfRangeError(f"amalgamation needs k >= 1, got {k}")
    order = _unit_order(h, v)
    if not h.is_connected():
        raise ParamOutOfRangeError("unit graph must be connected")
    n, m = len(order), len(h.edges)
    pos = {u: i for i, u in enumerate(order, start=1)}

    vertices: list[VertexId] = ["hub"]
    edges: list[Edge] = []
    coords: dict[Element, tuple[int, int]] = {"hub": (n, 0)}
    copies: list[frozenset[Element]] = []
    for j in range(1, k + 1):
        name = {v: "hub"}
        for u in order[:-1]:
            name[u] = f"v{pos[u]}_{j}"
        copy_elems: set[Element] = {"hub"}
        for u in order[:-1]:
            vertices.append(name[u])
            coords[name[u]] = (pos[u], j)
            copy_elems.add(name[u])
        for i, (a, b) in enumerate(h.edges, start=1):
            e = edge_key(name[a], name[b])
            edges.append(e)
            coords[e] = (i, j)
            copy_elems.add(e)
        copies.append(frozenset(copy_elems))

    graph = build_graph(vertices, edges)
    cs = CopyStructure(
        k=k,
        copies=tuple(copies),
        shared=frozenset({"hub"}),
        coordinates=types.MappingProxyType(coords),
        branch_sizes=(n, m),
    )
    return graph, cs


def path_attach(g: Graph, v: VertexId, k: int) -> tuple[Graph, CopyStructure]:
    """Attach k copies of g along a path, identifying v of copy i with path vertex w_i."""
    if k < 2:
        raise ParamOutOfRangeError(f"path attachment needs k >= 2, got {k}")
    order = _unit_order(g, v)
    if not g.is_connected():
        raise ParamOutOfRangeError("unit graph must be connected")
    n, m = len(order), len(g.edges)
    pos = {u: i for i, u in enumerate(order, start=1)}

    vertices: list[VertexId] = []
    edges: list[Edge] = []
    coords: dict[Element, tuple[int, int]] = {}
    copies: list[frozenset[Element]] = []
    ws = [f"w{i}" for i in range(1, k + 1)]
    for i in range(1, k + 1):
        name = {v: f"w{i}"}
        for u in order[:-1]:
            name[u] = f"v{pos[u]}_{i}"
        copy_elems: set[Element] = set()
        for u in order[:-1]:
            vertices.append(name[u])
            coords[name[u]] = (pos[u], i)
            copy_elems.add(name[u])
        vertices.append(f"w{i}")
        coords[f"w{i}"] = (n, i)
        copy_elems.add(f"w{i}")
        for idx, (a, b) in enumerate(g.edges, start=1):
            e = edge_key(name[a], name[b])
            edges.append(e)
            coords[e] = (idx, i)
            copy_elems.add(e)
        copies.append(frozenset(copy_elems))

    path_edges = []
    for i in range(1, k):
        e = edge_key(ws[i - 1], ws[i])
        edges.append(e)
        coords[e] = (i, 0)
        path_edges.append(e)

    graph = build_graph(vertices, edges)
    cs = CopyStructure(
        k=k,
        copies=tuple(copies),
        shared=frozenset(ws) | frozenset(path_edges),
        coordinates=types.MappingProxyType(coords),
        branch_sizes=(n, m),
        path_vertices=tuple(ws),
        path_edges=tuple(path_edges),
    )
    return graph, cs


def banana_unit(n: int) -> tuple[Graph, VertexId]:
    """Star on n vertices plus a stem vertex "v" attached to leaf l1."""
    if n < 3:
        raise ParamOutOfRangeError(f"banana unit needs n >= 3, got {n}")
    s = star(n)
    return build_graph(list(s.vertices) + ["v"], list(s.edges) + [("l1", "v")]), "v"


def banana(k: int, n: int) -> tuple[Graph, CopyStructure]:
    """Banana tree: k star-plus-stem units glued at the stem."""
    if k < 1:
        raise ParamOutOfRangeError(f"banana needs k >= 1, got {k}")
    unit, v = banana_unit(n)
    return amalgamate(unit, v, k)


def firecracker_unit(n: int) -> tuple[Graph, VertexId]:
    """Star on n vertices with the pendant leaf l{n-1} as the path attachment vertex."""
    if n < 4:
        raise ParamOutOfRangeError(f"firecracker unit needs n >= 4, got {n}")
    return star(n), f"l{n - 1}"


def firecracker(k: int, n: int) -> tuple[Graph, CopyStructure]:
    """Firecracker: k stars on n vertices, one pendant leaf of each joined along a path."""
    if k < 2:
        raise ParamOutOfRangeError(f"firecracker needs k >= 2, got {k}")
    unit, v = firecracker_unit(n)
    return path_attach(unit, v, k)


def amalgamate_on_subgraph(
    h: Graph, block: set, k: int
) -> tuple[Graph, CopyStructure]:
    """Glue k copies of h along an induced block given as an element set.

    The block's vertices must be the last l vertices of h's canonical order and
    its edges exactly the edges of h induced by them. Shared vertices are named
    "s1".."sl" (in unit order), free vertices "v{i}_{j}".
    """
    if k < 1:
        raise ParamOutOfRangeError(f"amalgamation needs k >= 1, got {k}")
    block_vertices = {e for e in block if isinstance(e, str)}
    block_edges = {edge_key(*e) for e in block if isinstance(e, tuple)}
    for u in block_vertices:
        if u not in h.vertex_set:
            raise UnknownVertexError(f"block vertex {u!r} not in unit graph")
    n, m = len(h.vertices), len(h.edges)
    ell = len(block_vertices)
    if ell < 1:
        raise ParamOutOfRangeError("block must contain at least one vertex")
    if set(h.vertices[n - ell:]) != block_vertices:
        raise NotInducedError("block vertices must be the last vertices in canonical order")
    induced = {e for e in h.edges if e[0] in block_vertices and e[1] in block_vertices}
    if block_edges != induced:
        raise NotInducedError("block edge set must be exactly the induced edges")

    shared_v = [f"s{i}" for i in range(1, ell + 1)]
    rename_shared = dict(zip(h.vertices[n - ell:], shared_v))
    shared_e = [
        edge_key(rename_shared[a], rename_shared[b]) for a, b in h.edges if edge_key(a, b) in induced
    ]

    vertices: list[VertexId] = list(shared_v)
    edges: list[Edge] = list(shared_e)
    coords: dict[Element, tuple[int, int]] = {}
    for i, sv in enumerate(shared_v, start=1):
        coords[sv] = (n - ell + i, 0)
    for i, se in enumerate(shared_e, start=1):
        coords[se] = (i, 0)

    copies: list[frozenset[Element]] = []
    free_unit_vertices = h.vertices[: n - ell]
    free_unit_edges = [e for e in h.edges if e not in induced]
    for j in range(1, k + 1):
        name = dict(rename_shared)
        copy_elems: set[Element] = set(shared_v) | set(shared_e)
        for i, u in enumerate(free_unit_vertices, start=1):
            name[u] = f"v{i}_{j}"
            vertices.append(name[u])
            coords[name[u]] = (i, j)
            copy_elems.add(name[u])
        for i, (a, b) in enumerate(free_unit_edges, start=1):
            e = edge_key(name[a], name[b])
            edges.append(e)
            coords[e] = (i, j)
            copy_elems.add(e)
        copies.append(frozenset(copy_elems))

    graph = build_graph(vertices, edges)
    cs = CopyStructure(
        k=k,
        copies=tuple(copies),
        shared=frozenset(shared_v) | frozenset(shared_e),
        coordinates=types.MappingProxyType(coords),
        branch_sizes=(n, m),
    )
    return graph, cs


# ---------------------------------------------------------------------------
# Family spec grammar: "name" or "name:key=val,key=val". Used by the CLI and
# for pattern arguments; graph-valued parameters (h=, g=) resolve to either a
# parameterless family name or, via graph_loader, a file path.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Mapping[str, str]


_FAMILY_PARAMS = {
    "star": {"n"},
    "path": {"k"},
    "cycle": {"n"},
    "wheel": {"n"},
    "k4minus": set(),
    "flower": {"n"},
    "banana": {"k", "n"},
    "firecracker": {"k", "n"},
    "amalgam": {"h", "v", "k"},
    "pathattach": {"g", "v", "k"},
}


def parse_family_spec(text: str) -> FamilySpec:
    name, _, rest = text.partition(":")
    name = name.strip()
    if name not in _FAMILY_PARAMS:
        raise ParamOutOfRangeError(f"unknown family {name!r}")
    params: dict[str, str] = {}
    if rest:
        for item in rest.split(","):
            key, sep, val = item.partition("=")
            if not sep or not val:
                raise ParamOutOfRangeError(f"malformed family parameter {item!r}")
            params[key.strip()] = val.strip()
    expected = _FAMILY_PARAMS[name]
    if set(params) != expected:
        raise ParamOutOfRangeError(
            f"family {name!r} expects parameters {sorted(expected)}, got {sorted(params)}"
        )
    return FamilySpec(name, types.MappingProxyType(params))


def _int_param(spec: FamilySpec, key: str) -> int:
    try:
        return int(spec.params[key])
    except ValueError:
        raise ParamOutOfRangeError(f"parameter {key}={spec.params[key]!r} is not an integer")


def resolve_graph_ref(
    ref: str, graph_loader: Optional[Callable[[str], Graph]] = None
) -> Graph:
    """Resolve a graph-valued parameter: a parameterless family name or a file path."""
    if ref in _FAMILY_PARAMS and not _FAMILY_PARAMS[ref]:
        g, _ = construct_family(parse_family_spec(ref))
        return g
    if graph_loader is not None:
        return graph_loader(ref)
    raise ParamOutOfRangeError(f"cannot resolve graph reference {ref!r}")


def construct_family(
    spec: FamilySpec, graph_loader: Optional[Callable[[str], Graph]] = None
) -> tuple[Graph, Optional[CopyStructure]]:
    """Build the graph (and copy structure, where defined) for a family spec."""
    name = spec.name
    if name == "star":
        return star(_int_param(spec, "n")), None
    if name == "path":
        return path(_int_param(spec, "k")), None
    if name == "cycle":
        return cycle(_int_param(spec, "n")), None
    if name == "wheel":
        return wheel(_int_param(spec, "n")), None
    if name == "k4minus":
        return k4_minus(), None
    if name == "flower":
        return flower(_int_param(spec, "n")), None
    if name == "banana":
        g, cs = banana(_int_param(spec, "k"), _int_param(spec, "n"))
        return g, cs
    if name == "firecracker":
        g, cs = firecracker(_int_param(spec, "k"), _int_param(spec, "n"))
        return g, cs
    if name == "amalgam":
        h = resolve_graph_ref(spec.params["h"], graph_loader)
        g, cs = amalgamate(h, spec.params["v"], _int_param(spec, "k"))
        return g, cs
    if name == "pathattach":
        h = resolve_graph_ref(spec.params["g"], graph_loader)
        g, cs = path_attach(h, spec.params["v"], _int_param(spec, "k"))
        return g, cs
    raise ParamOutOfRangeError(f"unknown family {name!r}")
