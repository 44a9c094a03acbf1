"""Seeded theorem-verification suites.

Each suite runs one structural law over fixed fixtures plus ``trials``
seeded random graphs and collects every counterexample in a replayable form
(edge-list text plus group text).
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import graph as gr
from . import spectrum as sp
from .abelian import (
    AbelianGroup,
    cyclic,
    format_element,
    has_element_of_prime_order,
    klein_four,
    units,
)
from .graph import Graph, GraphError
from .graphio import format_edge_list

log = logging.getLogger(__name__)

Z2, Z3, Z4, Z5 = (cyclic(m) for m in (2, 3, 4, 5))
V4 = klein_four()
GROUPS = (Z3, Z4, Z5, V4)

MAX_RANDOM_N = 12


def random_graph(n: int, edge_prob, seed: int, connected: bool = False) -> Graph:
    """Seeded G(n, p) sample with no isolated vertices (and connected if asked).

    Up to 100 draws are made from the same stream before giving up.
    """
    if not 1 <= n <= MAX_RANDOM_N:
        raise GraphError(f"random graphs need 1 <= n <= {MAX_RANDOM_N}, got {n}")
    p = Fraction(edge_prob)
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(100):
        G = gr.build(n, [e for e in pairs if rng.random() < p])
        if gr.has_isolated(G) or (connected and not gr.is_connected(G)):
            continue
        return G
    raise GraphError(
        f"no {'connected ' if connected else ''}graph without isolated vertices "
        f"after 100 draws (n={n}, p={edge_prob}, seed={seed})"
    )


def twin_example_graph() -> Graph:
    """Eight vertices with twin classes {0,2,5}, {1}, {3,7}, {4,6}."""
    return gr.build(
        8,
        [(0, 1), (2, 1), (5, 1), (1, 3), (1, 7), (1, 4), (1, 6), (3, 4), (3, 6), (7, 4), (7, 6)],
    )


def c4_join_graph() -> Graph:
    """C4 with its vertices blown up into independent sets of sizes 2, 3, 2, 2."""
    return gr.h_join(gr.cycle(4), [gr.empty(2), gr.empty(3), gr.empty(2), gr.empty(2)])


def fixtures() -> dict[str, Graph]:
    out = {"P2": gr.path(2), "P3": gr.path(3)}
    out.update({f"C{n}": gr.cycle(n) for n in range(3, 9)})
    out.update({f"K{n}": gr.complete(n) for n in range(3, 6)})
    for sizes in ([1, 3], [2, 3], [2, 2], [1, 2, 2]):
        out["K_{" + ",".join(map(str, sizes)) + "}"] = gr.complete_multipartite(sizes)
    out["twin-example"] = twin_example_graph()
    out["C4-join"] = c4_join_graph()
    return out


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    suites: list["SuiteReport"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        doc = {
            "suite": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "skipped": self.skipped,
            "failures": self.failures,
        }
        if self.suites:
            doc["suites"] = [s.to_dict() for s in self.suites]
        return doc


def _fmt(value):
    if value == ():
        return []
    if isinstance(value, tuple) and value and isinstance(value[0], tuple):
        return [format_element(x) for x in value]
    if isinstance(value, tuple):
        return format_element(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_fmt(tuple(x)) for x in value)
    return value


class _Run:
    def __init__(self, name: str, trials: int, seed: int, fault: bool):
        self.report = SuiteReport(name)
        self.trials = trials
        self.rng = random.Random(f"{name}/{seed}")
        self.fault = fault

    def seed(self) -> int:
        return self.rng.randrange(2**32)

    def random_graphs(self, lo: int, hi: int, connected: bool = False):
        for _ in range(self.trials):
            n = self.rng.randint(lo, hi)
            p = Fraction(self.rng.randint(3, 8), 10)
            yield random_graph(n, p, self.seed(), connected=connected)

    def spectrum(self, G: Graph, A: AbelianGroup, strategy: str = "auto") -> sp.SpectrumResult:
        result = sp.spectrum(G, A, strategy)
        if self.fault and result.method == "reduced" and result.constants:
            # test-only corruption: silently lose the largest constant
            dropped = result.constants[-1]
            result = sp.SpectrumResult(
                A,
                result.constants[:-1],
                result.method,
                result.labelings_examined,
                {c: w for c, w in result.witnesses.items() if c != dropped},
            )
        return result

    def check(self, ok: bool, check: str, G: Graph | None, A: AbelianGroup | None, expected, observed):
        self.report.cases += 1
        if not ok:
            self.report.failures.append(
                {
                    "check": check,
                    "graph": format_edge_list(G) if G is not None else None,
                    "group": str(A) if A is not None else None,
                    "expected": _fmt(expected),
                    "observed": _fmt(observed),
                }
            )

    def skip(self):
        self.report.skipped += 1

    def witnesses_ok(self, G: Graph, result: sp.SpectrumResult, check: str):
        bad = sp.check_witnesses(G, result)
        self.check(not bad, f"{check}: witness integrity", G, result.group, [], tuple(bad))


def _fixture_graphs():
    return list(fixtures().values())


# suites


def _symmetry(run: _Run):
    for G in _fixture_graphs() + list(run.random_graphs(3, 7)):
        for A in (Z2, *GROUPS):
            res = run.spectrum(G, A)
            negs = {A.neg(c) for c in res.constants}
            run.check(negs == set(res.constants), "closed under negation", G, A, set(res.constants), negs)
            run.witnesses_ok(G, res, "symmetry")
            for c, lab in res.witnesses.items():
                flipped = sp.negate_labeling(G, A, lab)
                run.check(
                    sp.magic_constant(G, A, flipped) == A.neg(c), "negated witness", G, A, A.neg(c),
                    sp.magic_constant(G, A, flipped),
                )


def _with_pendant(G: Graph) -> Graph:
    return gr.build(G.n + 1, [*G.edges, (0, G.n)])


def _pendant_zero(run: _Run):
    graphs = _fixture_graphs()
    for G in run.random_graphs(2, 7):
        graphs += [G, _with_pendant(G)]
    for G in graphs:
        if not gr.has_pendant(G):
            run.skip()
            continue
        for A in (Z2, *GROUPS):
            res = run.spectrum(G, A)
            run.check(A.zero not in res.constants, "pendant excludes 0", G, A, "0 absent", res.constants)
            run.check(not res.is_subgroup, "pendant spectrum not a subgroup", G, A, False, res.is_subgroup)


def _z2_eulerian(run: _Run):
    for G in _fixture_graphs() + list(run.random_graphs(2, 10)):
        closed = sp.z2_spectrum(G)
        brute = sp.brute_force_spectrum(G, Z2)
        run.check(closed.constants == brute.constants, "z2 closed form vs brute force", G, Z2,
                  brute.constants, closed.constants)
        run.witnesses_ok(G, closed, "z2")
        if not gr.is_connected(G):
            run.skip()
            continue
        run.check(brute.is_subgroup == gr.is_eulerian(G), "subgroup iff Eulerian", G, Z2,
                  gr.is_eulerian(G), brute.is_subgroup)


def _zp_saturation(run: _Run):
    for G in _fixture_graphs() + list(run.random_graphs(3, 7)):
        for A in (Z3, Z5):
            res = run.spectrum(G, A)
            nonzero = set(res.constants) - {A.zero}
            if not nonzero:
                run.skip()
                continue
            run.check(nonzero == set(A.nonzero), "nonzero constants saturate", G, A,
                      set(A.nonzero), nonzero)
            c, lab = next((c, w) for c, w in res.witnesses.items() if c != A.zero)
            for u in units(A.order):
                scaled = sp.scale_labeling(G, A, lab, u)
                run.check(sp.magic_constant(G, A, scaled) == A.mul(u, c), "unit scaling", G, A,
                          A.mul(u, c), sp.magic_constant(G, A, scaled))


def _subgroup_shortcut(run: _Run):
    for G in _fixture_graphs() + list(run.random_graphs(3, 7)):
        for A in (Z3, Z5, V4):
            res = run.spectrum(G, A)
            if not res.constants:
                run.skip()
                continue
            run.check(res.is_subgroup == (A.zero in res.constants), "subgroup iff 0 present", G, A,
                      A.zero in res.constants, res.is_subgroup)


def _reduced_equivalence(run: _Run):
    for G in _fixture_graphs() + list(run.random_graphs(3, 8, connected=True)):
        for A in GROUPS:
            if (A.order - 1) ** G.n > 10**6:
                run.skip()
                continue
            brute = sp.brute_force_spectrum(G, A)
            red = run.spectrum(G, A, "reduced")
            run.check(brute.constants == red.constants, "reduced equals brute force", G, A,
                      brute.constants, red.constants)
            run.witnesses_ok(G, red, "reduced")
            run.witnesses_ok(G, brute, "brute")


def _cycle_closed_form(run: _Run):
    for n in range(3, 9):
        G = gr.cycle(n)
        for A in (Z2, *GROUPS):
            closed = sp.cycle_spectrum(n, A)
            brute = sp.brute_force_spectrum(G, A)
            run.check(closed.constants == brute.constants, f"cycle C{n} closed form", G, A,
                      brute.constants, closed.constants)
            run.witnesses_ok(G, closed, "cycle")
            expected_subgroup = n % 4 == 0 or has_element_of_prime_order(A, 2)
            run.check(brute.is_subgroup == expected_subgroup, "cycle subgroup criterion", G, A,
                      expected_subgroup, brute.is_subgroup)
            for lab, _ in sp.iter_magic_labelings(G, A):
                periodic = all(lab[i] == lab[(i + 4) % n] for i in range(n))
                run.check(periodic, "labels repeat with period 4", G, A, "periodic", lab)


def size_lists(max_total: int, min_parts: int = 2):
    """Non-increasing size lists with at least ``min_parts`` parts and total <= max_total."""

    def parts(total, largest):
        if total == 0:
            yield []
            return
        for first in range(min(total, largest), 0, -1):
            for rest in parts(total - first, first):
                yield [first, *rest]

    for total in range(min_parts, max_total + 1):
        for sizes in parts(total, total):
            if len(sizes) >= min_parts:
                yield sizes


def multipartite_covered(sizes) -> bool:
    k = len(sizes)
    return k >= 2 and ((1 in sizes and k > 2) or all(s >= 2 for s in sizes))


def _multipartite_closed_form(run: _Run):
    for sizes in size_lists(7):
        if not multipartite_covered(sizes):
            run.skip()
            continue
        G = gr.complete_multipartite(sizes)
        k = len(sizes)
        for A in GROUPS:
            closed = sp.complete_multipartite_spectrum(sizes, A)
            brute = sp.brute_force_spectrum(G, A)
            run.check(closed.constants == brute.constants, f"K_{sizes} closed form", G, A,
                      brute.constants, closed.constants)
            run.witnesses_ok(G, closed, "multipartite")
            if 1 in sizes:
                primes = [p for p in range(2, k) if (k - 1) % p == 0 and all(p % d for d in range(2, p))]
                expected = any(has_element_of_prime_order(A, p) for p in primes)
            else:
                expected = True
            run.check(brute.is_subgroup == expected, "multipartite subgroup criterion", G, A,
                      expected, brute.is_subgroup)


CORONA_BASES = {"K1": gr.complete(1), "P2": gr.path(2), "P3": gr.path(3), "C3": gr.cycle(3)}


def _corona_closed_form(run: _Run):
    for H in CORONA_BASES.values():
        for sizes in product((2, 3), repeat=H.n):
            if H.n + sum(sizes) > 9:
                continue
            G = sp.corona_graph(H, sizes)
            for A in GROUPS:
                closed = sp.corona_spectrum(H, sizes, A)
                brute = sp.brute_force_spectrum(G, A)
                run.check(closed.constants == brute.constants, f"corona sizes {list(sizes)}", G, A,
                          brute.constants, closed.constants)
                run.witnesses_ok(G, closed, "corona")


def _path_join_zero(run: _Run):
    for k in range(2, 6):
        for sizes in product((1, 2, 3), repeat=k):
            if sum(sizes) > 8:
                continue
            G = sp.path_join_graph(sizes)
            for A in (Z3,):
                predicted = sp.path_join_contains_zero(k, sizes, A)
                observed = A.zero in sp.brute_force_spectrum(G, A).constants
                run.check(predicted == observed, f"path join {list(sizes)} zero", G, A, observed, predicted)
                if predicted:
                    lab = sp.path_join_zero_labeling(sizes, A)
                    run.check(sp.magic_constant(G, A, lab) == A.zero, "path join zero witness", G, A,
                              A.zero, sp.magic_constant(G, A, lab))


def _random_multiclass_graph(run: _Run) -> Graph:
    """A graph whose twin classes all have at least two members (at most 8 vertices)."""
    t = run.rng.randint(2, 4)
    H = random_graph(t, Fraction(1, 2), run.seed())
    sizes = [2] * t
    while sum(sizes) < 8 and run.rng.random() < 0.5:
        sizes[run.rng.randrange(t)] += 1
    return gr.h_join(H, [gr.empty(s) for s in sizes])


def _inflation_invariance(run: _Run):
    for _ in range(run.trials):
        G = _random_multiclass_graph(run)
        classes = len(gr.twin_classes(G).classes)
        r = [run.rng.randint(0, 2) for _ in range(classes)]
        while G.n + sum(r) > 11:
            r[r.index(max(r))] -= 1
        G2 = gr.inflate(G, r)
        for A in GROUPS:
            before = sp.brute_force_spectrum(G, A)
            after = run.spectrum(G2, A)
            run.check(before.constants == after.constants, f"inflation by {r}", G, A,
                      before.constants, after.constants)
            run.check(A.zero in before.constants, "all classes >= 2 gives 0", G, A, A.zero, before.constants)


def _zero_witness(G: Graph, A: AbelianGroup, run: _Run):
    res = run.spectrum(G, A)
    return res.witnesses.get(A.zero)


def _tensor_zero(run: _Run):
    K2 = gr.complete(2)
    C3 = gr.cycle(3)
    lab = sp.tensor_zero_labeling(C3, Z4, [(2,)] * 3, [K2])
    P = gr.tensor(C3, K2)
    run.check(sp.magic_constant(P, Z4, lab) == Z4.zero, "C3 x K2 over Z4", P, Z4, Z4.zero,
              sp.magic_constant(P, Z4, lab))
    for G1 in run.random_graphs(2, 5):
        for A in GROUPS:
            base = G1 if A.zero in run.spectrum(G1, A).constants else gr.embed_in_gvm(G1)
            witness = _zero_witness(base, A, run)
            if witness is None:
                run.check(False, "embedded graph has a 0 witness", base, A, A.zero, None)
                continue
            P = gr.tensor(base, K2)
            lab = sp.tensor_zero_labeling(base, A, witness, [K2])
            bad = [v for v in range(P.n) if sp.vertex_weight(P, A, lab, v) != A.zero]
            run.check(not bad and all(x != A.zero for x in lab), "tensor zero labeling", P, A, [], bad)


def _universality(run: _Run):
    for G in run.random_graphs(2, 6):
        E = gr.embed_in_gvm(G)
        run.check(gr.all_degrees_even(E), "embedding has even degrees", E, None, True, E.degrees)
        induced = gr.induced_subgraph(E, list(range(G.n)))
        run.check(induced == G, "input is an induced subgraph", E, None, G.edges, induced.edges)
        run.check(all(m % 2 == 0 for m in gr.twin_classes(E).multiplicities), "classes even", E,
                  None, True, gr.twin_classes(E).multiplicities)
        brute = sp.brute_force_spectrum(E, Z3)
        run.check(Z3.zero in brute.constants, "0 in spectrum over Z3", E, Z3, Z3.zero, brute.constants)


def _tensor_degree_law(run: _Run):
    graphs = list(run.random_graphs(2, 6))
    for G1, G2 in zip(graphs[::2], graphs[1::2]):
        P = gr.tensor(G1, G2)
        law = all(
            P.degree(u * G2.n + v) == G1.degree(u) * G2.degree(v)
            for u in range(G1.n)
            for v in range(G2.n)
        )
        run.check(law, "tensor degree product", P, None, True, law)
        parity = gr.all_degrees_even(P) == (gr.all_degrees_even(G1) or gr.all_degrees_even(G2))
        run.check(parity, "tensor even-degree law", P, None, True, parity)


SUITES = {
    "symmetry": _symmetry,
    "pendant-zero": _pendant_zero,
    "z2-eulerian": _z2_eulerian,
    "zp-saturation": _zp_saturation,
    "subgroup-shortcut": _subgroup_shortcut,
    "reduced-equivalence": _reduced_equivalence,
    "cycle-closed-form": _cycle_closed_form,
    "multipartite-closed-form": _multipartite_closed_form,
    "corona-closed-form": _corona_closed_form,
    "path-join-zero": _path_join_zero,
    "inflation-invariance": _inflation_invariance,
    "tensor-zero": _tensor_zero,
    "universality": _universality,
    "tensor-degree-law": _tensor_degree_law,
}


def _run_one(args) -> SuiteReport:
    return run_suite(*args)


def run_suite(name: str, trials: int, seed: int, fault: bool = False, jobs: int = 1) -> SuiteReport:
    """Run one named suite, or every suite for ``name == "all"``.

    ``fault`` corrupts reduced-solver results (test-only) to show the
    harness can fail.  ``jobs > 1`` runs the suites of "all" in worker
    processes; each suite seeds itself, so the report is unchanged.
    """
    if name == "all":
        report = SuiteReport("all")
        tasks = [(sub, trials, seed, fault) for sub in SUITES]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_run_one, tasks))
        else:
            parts = [_run_one(t) for t in tasks]
        for sub, part in zip(SUITES, parts):
            report.suites.append(part)
            report.cases += part.cases
            report.skipped += part.skipped
            report.failures.extend({"suite": sub, **f} for f in part.failures)
        return report
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    run = _Run(name, trials, seed, fault)
    SUITES[name](run)
    run.report.failures.sort(key=lambda f: (f["check"], f["graph"] or "", f["group"] or ""))
    log.info("suite %s: %d cases, %d skipped, %d failures", name, run.report.cases,
             run.report.skipped, len(run.report.failures))
    return run.report
