"""Test-only oracles and utilities, independent of the solver internals."""

from itertools import permutations, product

from hypothesis import strategies as st

from groupmagic import graph as gr


def naive_spectrum(G, A):
    """Every labeling, every weight, no shortcuts."""
    found = set()
    for lab in product(A.nonzero, repeat=G.n):
        weights = {A.sum(lab[u] for u in G.neighbors(v)) for v in range(G.n)}
        if len(weights) == 1:
            found |= weights
    return tuple(sorted(found))


def els(*xs):
    """Cyclic-group elements from bare residues: els(1, 2) -> ((1,), (2,))."""
    return tuple((x,) for x in xs)


def is_isomorphic(G, H):
    """Brute-force permutation search; only meant for n <= 8."""
    if G.n != H.n or G.edge_count != H.edge_count:
        return False
    if sorted(G.degrees) != sorted(H.degrees):
        return False
    target = set(H.edges)
    for perm in permutations(range(G.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in G.edges):
            return True
    return False


@st.composite
def graphs(draw, min_n=1, max_n=6, no_isolated=False):
    if no_isolated:
        min_n = max(min_n, 2)
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    G = gr.build(n, chosen)
    if no_isolated:
        # attach each isolated vertex to its successor (or predecessor)
        extra = [(v, (v + 1) % n) for v in range(n) if G.degree(v) == 0]
        G = gr.build(n, [*G.edges, *extra])
    return G
