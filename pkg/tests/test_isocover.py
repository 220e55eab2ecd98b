import pytest
from conftest import naive_copies

from magiccover import (
    banana,
    build_graph,
    count_copies,
    cycle,
    embedding_witness,
    enumerate_copies,
    enumerate_embeddings,
    firecracker,
    flower,
    has_h_covering,
    path,
    star,
    wheel,
)
from magiccover.errors import LimitExceededError, PatternTooLargeError


def as_pairs(copies):
    return {(c.vertices, c.edges) for c in copies}


@pytest.mark.parametrize(
    "g,h",
    [
        (path(5), path(3)),
        (cycle(6), path(4)),
        (wheel(5), cycle(3)),
        (flower(3), cycle(3)),
        (star(5), star(3)),
        (banana(2, 4)[0], path(4)),
    ],
)
def test_copies_match_naive_oracle(g, h):
    assert as_pairs(enumerate_copies(g, h)) == naive_copies(g, h)


def test_known_copy_counts():
    assert count_copies(path(5), path(3)) == 3
    assert count_copies(cycle(3), cycle(3)) == 1
    assert count_copies(wheel(5), cycle(3)) == 5
    assert count_copies(wheel(3), cycle(3)) == 4  # rim triangle included
    assert count_copies(flower(3), cycle(3)) == 7
    assert count_copies(flower(7), cycle(3)) == 14


def test_copies_are_deduplicated_and_sorted():
    copies = enumerate_copies(star(5), star(3))
    # one copy per leaf pair, not per automorphic embedding
    assert len(copies) == 6
    assert copies == sorted(copies, key=lambda c: c.sort_key)


def test_symmetry_breaking_does_not_change_copy_set():
    g, h = wheel(6), cycle(3)
    with_sb = {
        frozenset(phi.values()) for phi in enumerate_embeddings(g, h)
    }
    without_sb = {
        frozenset(phi.values())
        for phi in enumerate_embeddings(g, h, symmetry_breaking=False)
    }
    assert with_sb == without_sb
    # but symmetry breaking emits fewer raw embeddings
    n_with = sum(1 for _ in enumerate_embeddings(g, h))
    n_without = sum(1 for _ in enumerate_embeddings(g, h, symmetry_breaking=False))
    assert n_with < n_without


def test_embeddings_preserve_pattern_edges():
    g, h = firecracker(3, 4)[0], path(4)
    for phi in enumerate_embeddings(g, h):
        for a, b in h.edges:
            assert g.has_edge(phi[a], phi[b])


def test_embedding_witness():
    g = wheel(5)
    copies = enumerate_copies(g, cycle(3))
    for c in copies:
        phi = embedding_witness(g, cycle(3), c)
        assert phi is not None
        assert frozenset(phi.values()) == c.vertices
    # a path copy is no witness for a triangle
    stray = enumerate_copies(g, path(3))[0]
    assert embedding_witness(g, cycle(3), stray) is None


def test_has_h_covering():
    assert has_h_covering(wheel(5), cycle(3))
    assert not has_h_covering(cycle(4), cycle(3))
    # star edges are not on any triangle
    assert not has_h_covering(star(4), cycle(3))


def test_pattern_vertex_limit():
    with pytest.raises(PatternTooLargeError):
        enumerate_copies(path(30), path(30), max_pattern_vertices=24)
    # explicit higher limit allows it
    assert count_copies(path(30), path(30), max_pattern_vertices=30) == 1


def test_copy_limit():
    with pytest.raises(LimitExceededError):
        enumerate_copies(path(20), path(2), max_copies=5)


def test_disconnected_host_still_enumerates():
    g = build_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    assert count_copies(g, path(2)) == 2
