"""Finite simple undirected graphs, products, and twin-class reduction.

Vertices are ``0..n-1``.  Numbering conventions for derived graphs:

* ``h_join`` / ``lexicographic``: parts laid out in order, cumulative offsets.
* ``tensor``: row-major, vertex ``(g, h)`` is ``g * |V(G2)| + h``; for more
  factors the first coordinate is the most significant digit.
* ``generalized_corona``: the vertices of H come first, then each part in
  order.
* ``inflate``: new vertices are appended after the originals, class by class.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for invalid graph input or arity mismatches."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, dropping duplicate edges and rejecting self-loops."""
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got n={n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)} is not allowed")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# constructors


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """K_n complement: n isolated vertices."""
    return build(n, [])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError(f"part sizes must be positive, got {list(sizes)}")
    return h_join(complete(len(sizes)), [empty(s) for s in sizes])


# products


def _offsets(parts: Sequence[Graph]) -> list[int]:
    offsets = [0]
    for g in parts:
        offsets.append(offsets[-1] + g.n)
    return offsets


def h_join(H: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex i of H by parts[i]; join parts i, j completely when ij is an edge."""
    if len(parts) != H.n:
        raise GraphError(f"h_join needs {H.n} parts, got {len(parts)}")
    off = _offsets(parts)
    edges = []
    for i, g in enumerate(parts):
        edges.extend((off[i] + u, off[i] + v) for u, v in g.edges)
    for i, j in H.edges:
        edges.extend(
            (off[i] + u, off[j] + v) for u in range(parts[i].n) for v in range(parts[j].n)
        )
    return build(off[-1], edges)


def lexicographic(H: Graph, G: Graph) -> Graph:
    return h_join(H, [G] * H.n)


def tensor(*graphs: Graph) -> Graph:
    """Tensor (categorical) product; adjacent iff adjacent in every coordinate."""
    if not graphs:
        raise GraphError("tensor needs at least one factor")
    sizes = [g.n for g in graphs]

    def flat(coords):
        idx = 0
        for c, s in zip(coords, sizes):
            idx = idx * s + c
        return idx

    n = math.prod(sizes)
    edges = []
    for coords in product(*(range(s) for s in sizes)):
        u = flat(coords)
        for nb in product(*(g.neighbors(c) for g, c in zip(graphs, coords))):
            v = flat(nb)
            if u < v:
                edges.append((u, v))
    return build(n, edges)


def generalized_corona(H: Graph, parts: Sequence[Graph]) -> Graph:
    if len(parts) != H.n:
        raise GraphError(f"generalized_corona needs {H.n} parts, got {len(parts)}")
    off = _offsets(parts)
    edges = list(H.edges)
    for i, g in enumerate(parts):
        base = H.n + off[i]
        edges.extend((base + u, base + v) for u, v in g.edges)
        edges.extend((i, base + u) for u in range(g.n))
    return build(H.n + off[-1], edges)


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``, renumbered in the given order."""
    pos = {v: i for i, v in enumerate(vertices)}
    edges = [
        (pos[u], pos[v]) for u in vertices for v in G.neighbors(u) if v in pos and u < v
    ]
    return build(len(vertices), edges)


# twin classes


@dataclass(frozen=True)
class ReducedGraph:
    """Quotient of a graph by the relation N(u) = N(v)."""

    quotient: Graph
    classes: tuple[tuple[int, ...], ...]

    @property
    def multiplicities(self) -> list[int]:
        return [len(c) for c in self.classes]

    def class_of(self) -> list[int]:
        """Map original vertex -> class index."""
        owner = [0] * sum(self.multiplicities)
        for i, block in enumerate(self.classes):
            for v in block:
                owner[v] = i
        return owner


def twin_classes(G: Graph) -> ReducedGraph:
    blocks: dict[tuple[int, ...], list[int]] = {}
    for v in range(G.n):
        blocks.setdefault(G.neighbors(v), []).append(v)
    # dict preserves first-seen order, i.e. blocks ordered by smallest member
    classes = tuple(tuple(b) for b in blocks.values())
    owner = {v: i for i, block in enumerate(classes) for v in block}
    edges = {
        (owner[u], owner[v]) for u, v in G.edges
    }
    return ReducedGraph(build(len(classes), edges), classes)


def inflate(G: Graph, r: Sequence[int]) -> Graph:
    """Add r[i] new vertices to twin class i, each adjacent to that class's neighborhood."""
    red = twin_classes(G)
    if len(r) != len(red.classes):
        raise GraphError(f"inflate needs {len(red.classes)} counts, got {len(r)}")
    if any(x < 0 for x in r):
        raise GraphError("inflation counts must be non-negative")
    new_of_class: list[list[int]] = []
    nxt = G.n
    for count in r:
        new_of_class.append(list(range(nxt, nxt + count)))
        nxt += count
    edges = list(G.edges)
    for i, block in enumerate(red.classes):
        for w in new_of_class[i]:
            edges.extend((w, u) for u in G.neighbors(block[0]))
            # new vertices of adjacent classes are twins of old ones, so join them too
            for j in red.quotient.neighbors(i):
                if j > i:
                    edges.extend((w, w2) for w2 in new_of_class[j])
    return build(nxt, edges)


def embed_in_gvm(G: Graph) -> Graph:
    """Add one vertex to every odd twin class so that all classes become even."""
    red = twin_classes(G)
    return inflate(G, [m % 2 for m in red.multiplicities])


# predicates


def has_pendant(G: Graph) -> bool:
    return any(d == 1 for d in G.degrees)


def has_isolated(G: Graph) -> bool:
    return any(d == 0 for d in G.degrees)


def all_degrees_even(G: Graph) -> bool:
    return all(d % 2 == 0 for d in G.degrees)


def all_degrees_same_parity(G: Graph) -> bool:
    return len({d % 2 for d in G.degrees}) == 1


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in G.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def is_eulerian(G: Graph) -> bool:
    return G.n >= 1 and is_connected(G) and all_degrees_even(G)
