"""Magic spectra of graphs over finite abelian groups.

A labeling assigns a nonzero group element to every vertex; it is magic with
constant ``mu`` when every vertex's neighbor-label sum equals ``mu``.  The
spectrum is the set of all such constants.

Three routes are provided: exhaustive enumeration (``brute_force_spectrum``),
enumeration of class sums on the twin-class quotient (``reduced_spectrum``),
and closed forms for cycles, complete multipartite graphs and generalized
coronas of empty graphs.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from operator import itemgetter
from typing import Iterator, Sequence

from . import graph as gr
from .abelian import (
    AbelianGroup,
    Element,
    cyclic,
    format_element,
    is_klein_four,
    is_prime_cyclic,
    is_subgroup,
    sum_representable,
)
from .graph import Graph

Labeling = tuple[Element, ...]

DEFAULT_BUDGET = 10**8


class SpectrumError(Exception):
    """Base class for solver errors."""


class DomainError(SpectrumError, ValueError):
    """Input outside the domain of an operation (e.g. an isolated vertex)."""


class PreconditionError(DomainError):
    """A labeling handed to a construction does not meet its requirements."""


class UnsupportedGroupError(DomainError):
    pass


class NotCoveredError(DomainError):
    """A closed form was asked for parameters it does not cover."""


class BudgetExceededError(SpectrumError):
    pass


class InvariantViolation(SpectrumError, AssertionError):
    """Two independent computations disagree; always an implementation bug."""


@dataclass
class SpectrumResult:
    group: AbelianGroup
    constants: tuple[Element, ...]
    method: str
    labelings_examined: int = 0
    witnesses: dict[Element, Labeling] = field(default_factory=dict)
    disconnected: bool = False

    def __post_init__(self):
        self.constants = tuple(sorted(set(self.constants)))

    @property
    def is_subgroup(self) -> bool:
        return is_subgroup(self.group, self.constants)

    @property
    def is_magic(self) -> bool:
        return bool(self.constants)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.constants

    def to_dict(self, witnesses: bool = False) -> dict:
        doc = {
            "group": str(self.group),
            "constants": [format_element(c) for c in self.constants],
            "is_subgroup": self.is_subgroup,
            "method": self.method,
            "labelings_examined": self.labelings_examined,
        }
        if witnesses:
            doc["witnesses"] = {
                format_element(c): {
                    str(v): format_element(x) for v, x in enumerate(self.witnesses[c])
                }
                for c in self.constants
                if c in self.witnesses
            }
        return doc


# evaluation


def vertex_weight(G: Graph, A: AbelianGroup, labeling: Sequence[Element], v: int) -> Element:
    return A.sum(labeling[u] for u in G.neighbors(v))


def magic_constant(G: Graph, A: AbelianGroup, labeling: Sequence[Element]) -> Element | None:
    """The constant of a magic labeling, or None if it is not one.

    Labelings that use the identity are never magic.
    """
    if len(labeling) != G.n:
        raise ValueError(f"labeling has {len(labeling)} entries for {G.n} vertices")
    zero = A.zero
    if any(A.check(x) == zero for x in labeling):
        return None
    weights = {vertex_weight(G, A, labeling, v) for v in range(G.n)}
    return weights.pop() if len(weights) == 1 else None


def check_witnesses(G: Graph, result: SpectrumResult) -> list[Element]:
    """Constants whose stored witness fails to re-evaluate to them."""
    return [
        c for c, lab in result.witnesses.items() if magic_constant(G, result.group, lab) != c
    ]


def _require_no_isolated(G: Graph) -> None:
    isolated = [v for v in range(G.n) if G.degree(v) == 0]
    if isolated:
        raise DomainError(f"graph has isolated vertices {isolated}; spectra are undefined")


# enumeration core


class _Codec:
    """Packs group elements into integers whose plain sums never carry.

    Each residue gets a field wide enough for ``terms`` summands, so the
    integer sum of up to ``terms`` codes reduces componentwise through the
    ``canon`` table to the index of the group sum.
    """

    def __init__(self, A: AbelianGroup, terms: int):
        terms = max(terms, 1)
        widths = [terms * (m - 1) + 1 for m in A.moduli]
        places = [1] * len(widths)
        for i in range(len(widths) - 2, -1, -1):
            places[i] = places[i + 1] * widths[i + 1]
        self.A = A
        self.codes = [sum(r * p for r, p in zip(x, places)) for x in A.elements]
        self.canon = [0] * (places[0] * widths[0])
        for s in range(len(self.canon)):
            idx, rest = 0, s
            for m, p in zip(A.moduli, places):
                digit, rest = divmod(rest, p)
                idx = idx * m + digit % m
            self.canon[s] = idx
        self.index_of_code = {c: i for i, c in enumerate(self.codes)}


def _getters(nbr_lists):
    out = []
    for ns in nbr_lists:
        if len(ns) == 1:
            u = ns[0]
            out.append((True, itemgetter(u)))
        else:
            out.append((False, itemgetter(*ns)))
    return out


def _scan(nbr_lists, domains, canon, first_only=True) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (labeling codes, constant index) for magic labelings in product order.

    ``nbr_lists`` are in check order; a labeling is dropped at the first
    vertex whose weight differs from the first one.
    """
    (single0, g0), *rest = _getters(nbr_lists)
    seen = set()
    for lab in product(*domains):
        mu = canon[g0(lab)] if single0 else canon[sum(g0(lab))]
        if first_only and mu in seen:
            # this constant already has its (lexicographically first) witness
            continue
        for single, g in rest:
            w = canon[g(lab)] if single else canon[sum(g(lab))]
            if w != mu:
                break
        else:
            seen.add(mu)
            yield lab, mu


def _scan_job(args):
    nbr_lists, domains, canon = args
    return [(lab, mu) for lab, mu in _scan(nbr_lists, domains, canon)]


def _collect(nbr_lists, domains, canon, jobs: int) -> dict[int, tuple[int, ...]]:
    found: dict[int, tuple[int, ...]] = {}
    if jobs <= 1 or len(domains[0]) < 2:
        for lab, mu in _scan(nbr_lists, domains, canon):
            found[mu] = lab
        return found
    chunks = [
        (nbr_lists, [domains[0][i::jobs], *domains[1:]], canon)
        for i in range(min(jobs, len(domains[0])))
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan_job, chunks):
            for lab, mu in part:
                if mu not in found or lab < found[mu]:
                    found[mu] = lab
    return found


def _check_order(G: Graph) -> list[int]:
    return sorted(range(G.n), key=lambda v: -G.degree(v))


def brute_force_spectrum(
    G: Graph, A: AbelianGroup, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> SpectrumResult:
    """Enumerate every labeling V(G) -> A minus 0 and collect the magic constants.

    Labelings are enumerated lexicographically by vertex index, so the
    witness kept for each constant is the lexicographically first one.
    """
    _require_no_isolated(G)
    total = (A.order - 1) ** G.n
    if total > budget:
        raise BudgetExceededError(
            f"brute force needs {total} labelings (budget {budget}); try the reduced solver"
        )
    codec = _Codec(A, max(G.degrees))
    nonzero_codes = codec.codes[1:]
    nbr_lists = [G.neighbors(v) for v in _check_order(G)]
    found = _collect(nbr_lists, [nonzero_codes] * G.n, codec.canon, jobs)
    witnesses = {}
    for mu, lab in found.items():
        witnesses[A.from_index(mu)] = tuple(
            A.from_index(codec.index_of_code[c]) for c in lab
        )
    return SpectrumResult(
        A,
        tuple(witnesses),
        "brute",
        labelings_examined=total,
        witnesses=witnesses,
        disconnected=not gr.is_connected(G),
    )


def iter_magic_labelings(G: Graph, A: AbelianGroup) -> Iterator[tuple[Labeling, Element]]:
    """Every magic labeling with its constant, in lexicographic order."""
    _require_no_isolated(G)
    codec = _Codec(A, max(G.degrees))
    nbr_lists = [G.neighbors(v) for v in _check_order(G)]
    for lab, mu in _scan(nbr_lists, [codec.codes[1:]] * G.n, codec.canon, first_only=False):
        yield tuple(A.from_index(codec.index_of_code[c]) for c in lab), A.from_index(mu)


def lift_class_sums(
    A: AbelianGroup, red: gr.ReducedGraph, sums: Sequence[Element]
) -> Labeling:
    """Expand per-class sums into a labeling of the original graph."""
    n = sum(red.multiplicities)
    labels: list[Element | None] = [None] * n
    for block, s in zip(red.classes, sums):
        ok, parts = sum_representable(A, s, len(block))
        if not ok:
            raise DomainError(
                f"{format_element(s)} is not a sum of {len(block)} nonzero elements of {A}"
            )
        for v, x in zip(block, parts):
            labels[v] = x
    return tuple(labels)


def reduced_spectrum(
    G: Graph, A: AbelianGroup, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> SpectrumResult:
    """Spectrum via class sums on the twin quotient; requires |A| >= 3.

    Singleton classes must carry a nonzero sum, larger classes may carry 0.
    """
    if A.order < 3:
        raise UnsupportedGroupError(
            f"the reduced solver needs |A| >= 3 (got {A}); use brute force"
        )
    _require_no_isolated(G)
    red = gr.twin_classes(G)
    H = red.quotient
    total = 1
    for m in red.multiplicities:
        total *= A.order if m >= 2 else A.order - 1
    if A.order ** H.n > budget:
        raise BudgetExceededError(
            f"reduced search needs up to {A.order ** H.n} assignments (budget {budget})"
        )
    codec = _Codec(A, max(H.degrees))
    domains = [codec.codes if m >= 2 else codec.codes[1:] for m in red.multiplicities]
    nbr_lists = [H.neighbors(v) for v in _check_order(H)]
    found = _collect(nbr_lists, domains, codec.canon, jobs)
    witnesses = {}
    for mu, lab in found.items():
        sums = [A.from_index(codec.index_of_code[c]) for c in lab]
        witnesses[A.from_index(mu)] = lift_class_sums(A, red, sums)
    return SpectrumResult(
        A,
        tuple(witnesses),
        "reduced",
        labelings_examined=total,
        witnesses=witnesses,
        disconnected=not gr.is_connected(G),
    )


def choose_strategy(G: Graph, A: AbelianGroup) -> str:
    if A.order < 3:
        return "brute"
    t = len(gr.twin_classes(G).classes)
    return "reduced" if A.order**t < (A.order - 1) ** G.n else "brute"


def spectrum(
    G: Graph,
    A: AbelianGroup,
    strategy: str = "auto",
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> SpectrumResult:
    if strategy == "auto":
        _require_no_isolated(G)
        strategy = choose_strategy(G, A)
    if strategy == "brute":
        return brute_force_spectrum(G, A, budget, jobs)
    if strategy == "reduced":
        return reduced_spectrum(G, A, budget, jobs)
    raise ValueError(f"unknown strategy {strategy!r}")


# closed forms


def z2_spectrum(G: Graph) -> SpectrumResult:
    """Over Z2 the only labeling is all ones, so each weight is a degree parity."""
    _require_no_isolated(G)
    A = cyclic(2)
    parities = {d % 2 for d in G.degrees}
    if len(parities) != 1:
        constants, witnesses = (), {}
    else:
        mu = (parities.pop(),)
        constants, witnesses = (mu,), {mu: ((1,),) * G.n}
    return SpectrumResult(
        A, constants, "closed-form", witnesses=witnesses, disconnected=not gr.is_connected(G)
    )


def cycle_spectrum(n: int, A: AbelianGroup) -> SpectrumResult:
    """Spectrum of C_n: sums a+b of two nonzeros when 4 | n, doubles 2a otherwise."""
    if n < 3:
        raise DomainError(f"cycle needs n >= 3, got {n}")
    witnesses: dict[Element, Labeling] = {}
    if n % 4 == 0:
        # labels repeat with period 4 as a, a, b, b; every weight is a + b
        for a in A.nonzero:
            for b in A.nonzero:
                mu = A.add(a, b)
                if mu not in witnesses:
                    witnesses[mu] = tuple(a if i % 4 < 2 else b for i in range(n))
    else:
        for a in A.nonzero:
            witnesses.setdefault(A.mul(2, a), (a,) * n)
    return SpectrumResult(A, tuple(witnesses), "closed-form", witnesses=witnesses)


def complete_multipartite_spectrum(sizes: Sequence[int], A: AbelianGroup) -> SpectrumResult:
    """Every part sums to the same a and the constant is (k-1)a.

    Covered: |A| >= 3 and k >= 2, with either a singleton part and k > 2
    (a must then be nonzero), or all parts of size at least 2 (any a).
    """
    k = len(sizes)
    if A.order < 3:
        raise NotCoveredError(f"no closed form over {A}; use brute force")
    if k < 2 or any(s < 1 for s in sizes):
        raise NotCoveredError(f"need at least two nonempty parts, got {list(sizes)}")
    has_singleton = any(s == 1 for s in sizes)
    if has_singleton and k == 2:
        raise NotCoveredError(f"sizes {list(sizes)}: star-like case not covered; use brute force")
    part_sums = A.nonzero if has_singleton else A.elements
    witnesses: dict[Element, Labeling] = {}
    for a in part_sums:
        mu = A.mul(k - 1, a)
        if mu in witnesses:
            continue
        labels: list[Element] = []
        for s in sizes:
            labels.extend(sum_representable(A, a, s)[1])
        witnesses[mu] = tuple(labels)
    return SpectrumResult(A, tuple(witnesses), "closed-form", witnesses=witnesses)


def corona_graph(H: Graph, sizes: Sequence[int]) -> Graph:
    return gr.generalized_corona(H, [gr.empty(s) for s in sizes])


def corona_spectrum(H: Graph, sizes: Sequence[int], A: AbelianGroup) -> SpectrumResult:
    """Generalized corona of H with empty graphs of sizes > 1: every nonzero element."""
    if len(sizes) != H.n:
        raise DomainError(f"need {H.n} block sizes, got {len(sizes)}")
    if A.order < 3:
        raise NotCoveredError(f"no closed form over {A}; use brute force")
    if any(s <= 1 for s in sizes):
        raise NotCoveredError(f"all block sizes must exceed 1, got {list(sizes)}")
    witnesses: dict[Element, Labeling] = {}
    for a in A.nonzero:
        labels = [a] * H.n
        for i, s in enumerate(sizes):
            target = A.mul(-(H.degree(i) - 1), a)
            labels.extend(sum_representable(A, target, s)[1])
        witnesses[a] = tuple(labels)
    G = corona_graph(H, sizes)
    return SpectrumResult(
        A, tuple(witnesses), "closed-form", witnesses=witnesses, disconnected=not gr.is_connected(G)
    )


def path_join_graph(sizes: Sequence[int]) -> Graph:
    return gr.h_join(gr.path(len(sizes)), [gr.empty(s) for s in sizes])


def path_join_contains_zero(k: int, sizes: Sequence[int], A: AbelianGroup) -> bool:
    """Whether 0 is in the spectrum of P_k[empty(n_1), ..., empty(n_k)]."""
    if k < 2:
        raise DomainError(f"path join needs k >= 2, got {k}")
    if len(sizes) != k:
        raise DomainError(f"need {k} sizes, got {len(sizes)}")
    if A.order < 3:
        raise NotCoveredError(f"no closed form over {A}")
    if k % 2 == 0:
        return all(s > 1 for s in sizes)
    # 1-based even positions are 0-based odd indices
    return all(s > 1 for s in sizes[1::2])


def path_join_zero_labeling(sizes: Sequence[int], A: AbelianGroup) -> Labeling:
    """A constant-0 labeling of the path join, when one exists.

    Part sums (1-based position i): -a for i = 1 mod 4, a for i = 3 mod 4,
    0 for even i; for even k every part sums to 0.
    """
    k = len(sizes)
    if not path_join_contains_zero(k, sizes, A):
        raise PreconditionError(f"0 is not in the spectrum for sizes {list(sizes)}")
    a = A.nonzero[0]
    labels: list[Element] = []
    for i, s in enumerate(sizes, 1):
        if k % 2 == 0 or i % 2 == 0:
            target = A.zero
        elif i % 4 == 1:
            target = A.neg(a)
        else:
            target = a
        labels.extend(sum_representable(A, target, s)[1])
    return tuple(labels)


# subgroup analysis


@dataclass
class SubgroupReport:
    spectrum: SpectrumResult
    is_subgroup: bool
    shortcut_used: bool

    def to_dict(self) -> dict:
        return {
            "spectrum": self.spectrum.to_dict(),
            "is_subgroup": self.is_subgroup,
            "shortcut_used": self.shortcut_used,
        }


def subgroup_report(
    G: Graph, A: AbelianGroup, strategy: str = "auto", budget: int = DEFAULT_BUDGET
) -> SubgroupReport:
    """Closure check, cross-checked against the 0-membership test over Z_p and V4."""
    result = spectrum(G, A, strategy, budget)
    closed = result.is_subgroup
    shortcut = is_prime_cyclic(A) or is_klein_four(A)
    if shortcut and closed != (A.zero in result.constants):
        raise InvariantViolation(
            f"over {A}: closure says {closed} but 0-membership says {not closed}"
        )
    if gr.has_pendant(G) and closed:
        raise InvariantViolation("a graph with a pendant vertex cannot have a subgroup spectrum")
    return SubgroupReport(result, closed, shortcut)


# labeling transformations


def _require_magic(G: Graph, A: AbelianGroup, labeling: Sequence[Element]) -> Element:
    mu = magic_constant(G, A, labeling)
    if mu is None:
        raise PreconditionError("labeling is not magic")
    return mu


def scale_labeling(G: Graph, A: AbelianGroup, labeling: Sequence[Element], a: int) -> Labeling:
    """Multiply every label by a unit of Z_m; the constant is scaled by the same unit."""
    if not A.is_cyclic_presentation:
        raise DomainError(f"unit scaling is only provided for cyclic Z_m, got {A}")
    m = A.order
    if math.gcd(a, m) != 1:
        raise DomainError(f"{a} is not a unit modulo {m}")
    _require_magic(G, A, labeling)
    return tuple(A.mul(a, x) for x in labeling)


def negate_labeling(G: Graph, A: AbelianGroup, labeling: Sequence[Element]) -> Labeling:
    _require_magic(G, A, labeling)
    return tuple(A.neg(x) for x in labeling)


def tensor_zero_labeling(
    G1: Graph, A: AbelianGroup, labeling: Sequence[Element], factors: Sequence[Graph]
) -> Labeling:
    """Constant-0 labeling of tensor(G1, *factors) copying the first coordinate's label."""
    if _require_magic(G1, A, labeling) != A.zero:
        raise PreconditionError("the labeling of the first factor must have constant 0")
    for f in factors:
        if gr.has_isolated(f):
            raise DomainError("every factor needs minimum degree at least 1")
    block = math.prod(f.n for f in factors)
    return tuple(labeling[v // block] for v in range(G1.n * block))
