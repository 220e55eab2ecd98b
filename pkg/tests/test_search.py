import pytest
from conftest import naive_supermagic_assignments

from magiccover import (
    Count,
    Exhausted,
    NoSolution,
    SearchOptions,
    Solution,
    cycle,
    flower,
    path,
    search_supermagic,
    verify_supermagic,
)


def test_first_solution_is_certified():
    out = search_supermagic(path(4), path(3), SearchOptions())
    assert isinstance(out, Solution)
    report = verify_supermagic(path(4), path(3), out.labeling)
    assert report.certified


def test_count_matches_naive_permutation_filter():
    # 4! vertex x 3! edge assignments = 144 candidates, filtered exhaustively
    naive = naive_supermagic_assignments(path(4), path(3))
    out = search_supermagic(path(4), path(3), SearchOptions(mode="count"))
    assert isinstance(out, Count)
    assert out.count == len(naive) == 32


def test_count_triangle_self_cover():
    naive = naive_supermagic_assignments(cycle(3), cycle(3))
    out = search_supermagic(cycle(3), cycle(3), SearchOptions(mode="count"))
    assert out.count == len(naive) == 36


def test_target_sum_filters_solutions():
    for target in (18, 19, 20):
        naive = naive_supermagic_assignments(path(4), path(3), target=target)
        out = search_supermagic(
            path(4), path(3), SearchOptions(mode="count", target_sum=target)
        )
        assert out.count == len(naive)


def test_impossible_target_reports_no_solution():
    out = search_supermagic(path(4), path(3), SearchOptions(target_sum=999))
    assert isinstance(out, NoSolution)


def test_deterministic_mode_finds_lex_least_solution():
    out = search_supermagic(path(4), path(3), SearchOptions(deterministic=True))
    g = path(4)
    assert [out.labeling[e] for e in g.elements()] == [1, 2, 4, 3, 7, 6, 5]


def test_pruning_does_not_change_the_count():
    kwargs = dict(mode="count")
    pruned = search_supermagic(path(4), path(3), SearchOptions(**kwargs, prune=True))
    unpruned = search_supermagic(path(4), path(3), SearchOptions(**kwargs, prune=False))
    assert pruned.count == unpruned.count
    assert pruned.nodes <= unpruned.nodes


def test_node_limit_reports_exhausted():
    out = search_supermagic(flower(5), cycle(3), SearchOptions(node_limit=100))
    assert isinstance(out, Exhausted)
    assert out.nodes == 101


def test_no_covering_means_no_solution():
    out = search_supermagic(cycle(4), cycle(3), SearchOptions())
    assert isinstance(out, NoSolution)
    out = search_supermagic(cycle(4), cycle(3), SearchOptions(mode="count"))
    assert isinstance(out, Count) and out.count == 0


def test_flower_target_search_is_certified():
    out = search_supermagic(
        flower(5), cycle(3), SearchOptions(target_sum=87, node_limit=10_000_000)
    )
    assert isinstance(out, Solution)
    report = verify_supermagic(flower(5), cycle(3), out.labeling)
    assert report.certified and report.magic_sum == 87
