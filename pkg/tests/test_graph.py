import pytest
from hypothesis import given
from hypothesis import strategies as st

from magiccover import (
    build_graph,
    edge_key,
    element_name,
    graph_from_json,
    labels_from_json,
    parse_element,
    total_label,
)
from magiccover.errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    LoopEdgeError,
    NotBijectiveError,
    UnknownEndpointError,
    WrongDomainError,
)


def test_edge_key_is_symmetric_and_ordered():
    assert edge_key("b", "a") == ("a", "b")
    assert edge_key("a", "b") == ("a", "b")


def test_element_name_round_trip():
    assert parse_element(element_name(("u", "v"))) == ("u", "v")
    assert parse_element(element_name("x1")) == "x1"
    assert parse_element("v|u") == ("u", "v")  # canonicalized on parse


def test_build_graph_normalizes_edges():
    g = build_graph(["a", "b", "c"], [("c", "a"), ("b", "c")])
    assert g.edges == (("a", "c"), ("b", "c"))
    assert g.has_edge("a", "c") and g.has_edge("c", "b")
    assert g.degree("c") == 2
    assert g.num_elements == 5


def test_build_graph_rejections():
    with pytest.raises(DuplicateVertexError):
        build_graph(["a", "a"], [])
    with pytest.raises(LoopEdgeError):
        build_graph(["a"], [("a", "a")])
    with pytest.raises(UnknownEndpointError):
        build_graph(["a"], [("a", "b")])
    with pytest.raises(DuplicateEdgeError):
        build_graph(["a", "b"], [("a", "b"), ("b", "a")])


def test_connectivity():
    assert build_graph(["a", "b"], [("a", "b")]).is_connected()
    assert not build_graph(["a", "b", "c"], [("a", "b")]).is_connected()
    assert build_graph([], []).is_connected()


def test_total_label_accepts_valid_bijection():
    g = build_graph(["a", "b"], [("a", "b")])
    f = total_label(g, {"a": 1, "b": 2, ("a", "b"): 3})
    assert f["a"] == 1 and f[("a", "b")] == 3
    assert f.is_super
    assert f.label_sum() == 6


def test_total_label_canonicalizes_edge_keys():
    g = build_graph(["a", "b"], [("a", "b")])
    f = total_label(g, {"a": 2, "b": 1, ("b", "a"): 3})
    assert f[("a", "b")] == 3


def test_total_label_domain_and_bijection_errors():
    g = build_graph(["a", "b"], [("a", "b")])
    with pytest.raises(WrongDomainError):
        total_label(g, {"a": 1, "b": 2})
    with pytest.raises(NotBijectiveError) as exc:
        total_label(g, {"a": 1, "b": 1, ("a", "b"): 3})
    assert exc.value.duplicate == 1
    with pytest.raises(NotBijectiveError) as exc:
        total_label(g, {"a": 1, "b": 2, ("a", "b"): 4})
    assert exc.value.missing == 3


def test_json_round_trip():
    g = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert graph_from_json(g.to_json_dict()) == g
    f = total_label(g, {"a": 1, "b": 2, "c": 3, ("a", "b"): 4, ("b", "c"): 5})
    assert labels_from_json(g, f.to_json_dict()).labels == f.labels


@given(st.permutations(list(range(1, 6))))
def test_any_permutation_of_path_labels_is_a_total_labeling(perm):
    g = build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assignment = dict(zip(g.elements(), perm))
    f = total_label(g, assignment)
    assert sorted(f.labels.values()) == [1, 2, 3, 4, 5]
    assert f.is_super == ({perm[0], perm[1], perm[2]} == {1, 2, 3})
