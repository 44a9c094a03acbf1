import pytest

from groupmagic import graph as gr
from groupmagic import verify
from groupmagic.graph import GraphError


def test_random_graph_full_probability_is_complete():
    assert verify.random_graph(4, 1, seed=0) == gr.complete(4)


def test_random_graph_zero_probability_raises():
    with pytest.raises(GraphError, match="100 draws"):
        verify.random_graph(5, 0, seed=0)


def test_random_graph_is_deterministic():
    a = verify.random_graph(8, 0.4, seed=11)
    assert a == verify.random_graph(8, 0.4, seed=11)
    assert not gr.has_isolated(a)


def test_random_graph_connected_flag():
    for seed in range(20):
        assert gr.is_connected(verify.random_graph(7, 0.3, seed=seed, connected=True))


@pytest.mark.parametrize("n, p", [(0, 0.5), (13, 0.5), (4, 1.5), (4, -0.1)])
def test_random_graph_rejects_bad_arguments(n, p):
    with pytest.raises(GraphError):
        verify.random_graph(n, p, seed=0)


def test_fixture_twin_structure():
    assert gr.twin_classes(verify.twin_example_graph()).multiplicities == [3, 1, 2, 2]
    assert verify.c4_join_graph().n == 9


def test_size_lists_are_non_increasing():
    lists = list(verify.size_lists(5))
    assert [2, 2, 1] in lists and [1, 1] in lists
    assert all(list(s) == sorted(s, reverse=True) and 2 <= len(s) and sum(s) <= 5 for s in lists)


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_every_suite_passes(name):
    report = verify.run_suite(name, trials=8, seed=3)
    assert report.passed, report.failures
    assert report.cases > 0


def test_all_aggregates_suites():
    report = verify.run_suite("all", trials=2, seed=5)
    assert report.passed
    assert [s.name for s in report.suites] == list(verify.SUITES)
    assert report.cases == sum(s.cases for s in report.suites)
    assert list(report.to_dict()) == ["suite", "passed", "cases", "skipped", "failures", "suites"]


def test_reports_are_deterministic():
    a = verify.run_suite("symmetry", trials=5, seed=9).to_dict()
    assert a == verify.run_suite("symmetry", trials=5, seed=9).to_dict()


def test_parallel_all_matches_sequential():
    seq = verify.run_suite("all", trials=1, seed=2).to_dict()
    assert verify.run_suite("all", trials=1, seed=2, jobs=2).to_dict() == seq


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        verify.run_suite("no-such-suite", trials=1, seed=0)


def test_fault_hook_produces_replayable_failures():
    report = verify.run_suite("reduced-equivalence", trials=5, seed=1, fault=True)
    assert not report.passed
    f = report.failures[0]
    assert set(f) == {"check", "graph", "group", "expected", "observed"}
    assert f["graph"].startswith("n ")
