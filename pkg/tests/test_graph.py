import pytest
from hypothesis import given, settings

from groupmagic import graph as gr
from groupmagic.graph import GraphError
from groupmagic.verify import twin_example_graph

from helpers import graphs, is_isomorphic


def test_build_examples():
    P3 = gr.build(3, [(0, 1), (1, 2)])
    assert P3 == gr.path(3)
    C4 = gr.build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert C4 == gr.cycle(4)
    assert gr.build(2, [(0, 1), (1, 0), (0, 1)]).edges == [(0, 1)]


def test_build_errors():
    with pytest.raises(GraphError, match="self-loop"):
        gr.build(2, [(0, 0)])
    with pytest.raises(GraphError, match="outside"):
        gr.build(2, [(0, 2)])
    with pytest.raises(GraphError):
        gr.build(0, [])


def test_constructors():
    K22 = gr.complete_multipartite([2, 2])
    assert K22.n == 4 and K22.edge_count == 4 and set(K22.degrees) == {2}
    assert is_isomorphic(K22, gr.cycle(4))
    assert gr.complete_multipartite([1, 1, 1]) == gr.complete(3)
    E3 = gr.empty(3)
    assert E3.n == 3 and E3.edge_count == 0
    with pytest.raises(GraphError):
        gr.cycle(2)


def test_h_join_examples():
    assert gr.h_join(gr.complete(2), [gr.empty(2), gr.empty(3)]) == gr.complete_multipartite([2, 3])
    fig3 = gr.h_join(gr.cycle(4), [gr.empty(2), gr.empty(3), gr.empty(2), gr.empty(2)])
    assert fig3.n == 9
    # opposite parts of C4 have equal neighborhoods, so the twin quotient is K2
    assert fig3 == gr.h_join(gr.cycle(4), [gr.empty(2), gr.empty(3), gr.empty(2), gr.empty(2)])
    red = gr.twin_classes(fig3)
    assert red.multiplicities == [4, 5]
    assert red.quotient == gr.complete(2)
    assert sorted(fig3.degrees) == [4] * 5 + [5] * 4
    assert gr.h_join(gr.path(2), [gr.complete(1), gr.complete(1)]) == gr.complete(2)
    with pytest.raises(GraphError):
        gr.h_join(gr.path(3), [gr.empty(1)])


def test_lexicographic_examples():
    assert is_isomorphic(gr.lexicographic(gr.complete(2), gr.empty(2)), gr.cycle(4))
    assert gr.lexicographic(gr.path(3), gr.complete(1)) == gr.path(3)
    assert gr.lexicographic(gr.complete(2), gr.complete(2)) == gr.complete(4)


def test_tensor_examples():
    T = gr.tensor(gr.cycle(3), gr.complete(2))
    assert T.n == 6 and set(T.degrees) == {2} and gr.is_connected(T)
    assert is_isomorphic(T, gr.cycle(6))
    K = gr.tensor(gr.complete(2), gr.complete(2))
    assert K.n == 4 and sorted(K.edges) == [(0, 3), (1, 2)]
    assert gr.tensor(gr.cycle(5), gr.complete(1)).edge_count == 0


def test_tensor_row_major_numbering():
    T = gr.tensor(gr.path(2), gr.path(3))
    # (g, h) -> g * 3 + h; (0,0)~(1,1), (0,1)~(1,0), (0,1)~(1,2), (0,2)~(1,1)
    assert T.edges == [(0, 4), (1, 3), (1, 5), (2, 4)]


def test_corona_examples():
    star = gr.generalized_corona(gr.complete(1), [gr.empty(3)])
    assert star == gr.complete_multipartite([1, 3])
    G = gr.generalized_corona(gr.complete(2), [gr.empty(2), gr.empty(2)])
    assert G.n == 6 and G.edge_count == 5
    assert G.degrees == [3, 3, 1, 1, 1, 1]
    G = gr.generalized_corona(gr.path(3), [gr.empty(2)] * 3)
    assert G.n == 9 and G.edge_count == 8


def test_twin_classes_mixed_sizes():
    red = gr.twin_classes(twin_example_graph())
    assert red.classes == ((0, 2, 5), (1,), (3, 7), (4, 6))
    assert red.multiplicities == [3, 1, 2, 2]
    assert red.quotient.edges == [(0, 1), (1, 2), (1, 3), (2, 3)]


def test_twin_classes_simple():
    red = gr.twin_classes(gr.complete_multipartite([2, 3]))
    assert red.multiplicities == [2, 3] and red.quotient == gr.complete(2)
    red = gr.twin_classes(gr.complete(5))
    assert red.multiplicities == [1] * 5 and red.quotient == gr.complete(5)


def test_inflate_examples():
    assert gr.inflate(gr.complete(2), [0, 1]) == gr.build(3, [(0, 1), (0, 2)])
    assert is_isomorphic(gr.inflate(gr.complete(2), [0, 1]), gr.path(3))
    G = twin_example_graph()
    assert gr.inflate(G, [0, 0, 0, 0]) == G
    C = gr.inflate(gr.cycle(4), [1, 0])
    assert C.n == 5
    assert C.neighbors(4) == C.neighbors(0)
    assert gr.twin_classes(C).multiplicities == [3, 2]
    with pytest.raises(GraphError):
        gr.inflate(gr.cycle(4), [1, 0, 0, 0])


def test_inflate_adjacent_classes_stay_twins():
    G = gr.inflate(gr.complete(2), [1, 1])
    assert is_isomorphic(G, gr.cycle(4))
    assert gr.twin_classes(G).multiplicities == [2, 2]


def test_embed_examples():
    E = gr.embed_in_gvm(gr.complete(2))
    assert is_isomorphic(E, gr.cycle(4))
    E = gr.embed_in_gvm(gr.cycle(5))
    assert gr.twin_classes(E).multiplicities == [2] * 5
    E = gr.embed_in_gvm(gr.cycle(4))
    assert E == gr.cycle(4)  # both classes already even
    G = gr.complete_multipartite([2, 2, 4])
    assert gr.embed_in_gvm(G) == G


def test_embed_doubles_all_singleton_classes():
    # K4 has four singleton classes: every one grows to two, giving K_{2,2,2,2}
    E = gr.embed_in_gvm(gr.complete(4))
    assert E.n == 8 and set(E.degrees) == {6}
    assert is_isomorphic(E, gr.complete_multipartite([2, 2, 2, 2]))


def test_predicates():
    assert gr.has_pendant(gr.path(3))
    assert gr.is_eulerian(gr.cycle(5))
    K4 = gr.complete(4)
    assert gr.all_degrees_same_parity(K4) and not gr.all_degrees_even(K4)
    two_k2 = gr.tensor(gr.complete(2), gr.complete(2))
    assert not gr.is_connected(two_k2)
    assert not gr.is_eulerian(gr.build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))


def test_induced_subgraph():
    assert gr.induced_subgraph(gr.cycle(5), [0, 1, 2]) == gr.path(3)


@settings(max_examples=60)
@given(graphs(1, 5), graphs(1, 5))
def test_tensor_degree_law(G1, G2):
    T = gr.tensor(G1, G2)
    for u in range(G1.n):
        for v in range(G2.n):
            assert T.degree(u * G2.n + v) == G1.degree(u) * G2.degree(v)
    assert gr.all_degrees_even(T) == (gr.all_degrees_even(G1) or gr.all_degrees_even(G2))


@given(graphs(1, 7))
def test_twin_class_invariants(G):
    red = gr.twin_classes(G)
    assert sorted(v for b in red.classes for v in b) == list(range(G.n))
    assert [b[0] for b in red.classes] == sorted(b[0] for b in red.classes)
    for block in red.classes:
        assert all(not G.adjacent(u, v) for u in block for v in block)
        assert len({G.neighbors(v) for v in block}) == 1
    owner = red.class_of()
    for u in range(G.n):
        for v in range(G.n):
            assert red.quotient.adjacent(owner[u], owner[v]) == G.adjacent(u, v)
    # reducing the quotient changes nothing
    again = gr.twin_classes(red.quotient)
    assert again.quotient == red.quotient and again.multiplicities == [1] * red.quotient.n


@settings(max_examples=40)
@given(graphs(1, 6))
def test_h_join_of_quotient_rebuilds_graph(G):
    red = gr.twin_classes(G)
    rebuilt = gr.h_join(red.quotient, [gr.empty(m) for m in red.multiplicities])
    order = [v for block in red.classes for v in block]
    assert gr.induced_subgraph(G, order) == rebuilt


@settings(max_examples=40)
@given(graphs(1, 5), graphs(1, 1))
def test_inflate_preserves_quotient(G, _):
    red = gr.twin_classes(G)
    r = [i % 3 for i in range(len(red.classes))]
    G2 = gr.inflate(G, r)
    red2 = gr.twin_classes(G2)
    assert red2.quotient == red.quotient
    assert red2.multiplicities == [m + x for m, x in zip(red.multiplicities, r)]


@settings(max_examples=40)
@given(graphs(1, 6))
def test_embed_properties(G):
    E = gr.embed_in_gvm(G)
    assert gr.induced_subgraph(E, list(range(G.n))) == G
    assert all(m % 2 == 0 for m in gr.twin_classes(E).multiplicities)
    assert gr.all_degrees_even(E)
    assert E.n <= 2 * G.n
