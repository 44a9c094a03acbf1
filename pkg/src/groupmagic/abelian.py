"""Finite abelian groups presented as products of cyclic groups.

Elements are plain tuples of residues, one per cyclic factor.  Elements are
ordered lexicographically on their residue tuples, which is also the order of
their mixed-radix index (first factor most significant).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

Element = tuple[int, ...]


class GroupSpecError(ValueError):
    """Raised for malformed group text or invalid moduli."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class AbelianGroup:
    """The group Z_{m1} x ... x Z_{mk} with the moduli kept as given."""

    moduli: tuple[int, ...]
    order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise GroupSpecError("a group needs at least one cyclic factor")
        for m in moduli:
            if m < 2:
                raise GroupSpecError(f"modulus must be at least 2, got {m}")
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "order", math.prod(moduli))

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    @property
    def is_cyclic_presentation(self) -> bool:
        return len(self.moduli) == 1

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements in canonical (lexicographic) order."""
        return tuple(product(*(range(m) for m in self.moduli)))

    @cached_property
    def nonzero(self) -> tuple[Element, ...]:
        return self.elements[1:]

    def element(self, *residues: int) -> Element:
        """Build an element, reducing each residue modulo its factor."""
        if len(residues) == 1 and isinstance(residues[0], (tuple, list)):
            residues = tuple(residues[0])
        self._check_length(residues)
        return tuple(r % m for r, m in zip(residues, self.moduli))

    def _check_length(self, x: Sequence[int]) -> None:
        if len(x) != len(self.moduli):
            raise ValueError(
                f"element {tuple(x)} has {len(x)} residues, group {self} needs {len(self.moduli)}"
            )

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == len(self.moduli) and all(
            0 <= r < m for r, m in zip(x, self.moduli)
        )

    def check(self, x: Sequence[int]) -> Element:
        if not self.contains(x):
            self._check_length(x)
            raise ValueError(f"{tuple(x)} is not a reduced element of {self}")
        return tuple(x)

    def add(self, x: Element, y: Element) -> Element:
        self._check_length(x)
        self._check_length(y)
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x: Element) -> Element:
        self._check_length(x)
        return tuple(-a % m for a, m in zip(x, self.moduli))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, k: int, x: Element) -> Element:
        """The k-fold sum k*x (k may be negative)."""
        self._check_length(x)
        return tuple((k * a) % m for a, m in zip(x, self.moduli))

    def sum(self, xs: Iterable[Element]) -> Element:
        total = [0] * len(self.moduli)
        for x in xs:
            self._check_length(x)
            for i, a in enumerate(x):
                total[i] += a
        return tuple(t % m for t, m in zip(total, self.moduli))

    def element_order(self, x: Element) -> int:
        self.check(x)
        # lcm of the orders of the components
        return math.lcm(*(m // math.gcd(a, m) for a, m in zip(x, self.moduli)))

    def index(self, x: Element) -> int:
        """Mixed-radix index of x; 0 is the identity."""
        idx = 0
        for a, m in zip(x, self.moduli):
            idx = idx * m + a
        return idx

    def from_index(self, idx: int) -> Element:
        if not 0 <= idx < self.order:
            raise IndexError(f"element index {idx} out of range for {self}")
        out = []
        for m in reversed(self.moduli):
            idx, r = divmod(idx, m)
            out.append(r)
        return tuple(reversed(out))

    def parse_element(self, text: str) -> Element:
        """Parse '(1,0)' or a bare '3' for a cyclic group."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            residues = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise GroupSpecError(f"cannot parse element {text!r}") from None
        return self.check(residues)


def format_element(x: Element) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


_FACTOR = re.compile(r"[zZ](\d+)$")


def parse_group(text: str) -> AbelianGroup:
    """Parse ``V4`` or ``Zn(xZn)*`` (letters case-insensitive)."""
    src = text.strip()
    if src.lower() == "v4":
        return AbelianGroup((2, 2))
    if not src:
        raise GroupSpecError("empty group spec")
    moduli = []
    for token in re.split(r"[xX]", src):
        match = _FACTOR.match(token)
        if match is None:
            raise GroupSpecError(f"malformed group factor {token!r} in {text!r}")
        m = int(match.group(1))
        if m < 2:
            raise GroupSpecError(f"modulus must be at least 2 in factor {token!r}")
        moduli.append(m)
    return AbelianGroup(tuple(moduli))


def cyclic(m: int) -> AbelianGroup:
    return AbelianGroup((m,))


def klein_four() -> AbelianGroup:
    return AbelianGroup((2, 2))


def is_prime_cyclic(A: AbelianGroup) -> bool:
    return A.is_cyclic_presentation and _is_prime(A.order)


def is_klein_four(A: AbelianGroup) -> bool:
    return A.moduli == (2, 2)


def has_element_of_prime_order(A: AbelianGroup, p: int) -> bool:
    """Whether A has an element of order exactly p.

    Scans element orders and cross-checks the result against Cauchy's
    theorem (p divides |A|).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    found = any(A.element_order(x) == p for x in A.elements)
    if found != (A.order % p == 0):
        raise AssertionError(f"order scan disagrees with Cauchy for {A}, p={p}")
    return found


def _sums_of_nonzero(A: AbelianGroup, n: int) -> list[frozenset[int]]:
    """reach[k] = indices of elements that are sums of k nonzero elements."""
    nonzero = range(1, A.order)
    table = addition_table(A)
    reach = [frozenset([0]), frozenset(nonzero)]
    for _ in range(2, n + 1):
        prev = reach[-1]
        reach.append(frozenset(table[s][x] for s in prev for x in nonzero))
    return reach


def sum_representable(A: AbelianGroup, a: Element, n: int) -> tuple[bool, list[Element]]:
    """Decide whether ``a`` is a sum of ``n`` nonzero elements.

    Returns ``(True, witness)`` with the lexicographically first witness
    (compared term by term), or ``(False, [])``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    A.check(a)
    target = A.index(a)
    reach = _sums_of_nonzero(A, n)
    if target not in reach[n]:
        return False, []
    table = addition_table(A)
    negs = [A.index(A.neg(x)) for x in A.elements]
    witness = []
    remaining = target
    for k in range(n, 0, -1):
        for x in range(1, A.order):
            rest = table[remaining][negs[x]]
            if rest in reach[k - 1]:
                witness.append(A.from_index(x))
                remaining = rest
                break
    return True, witness


def is_subgroup(A: AbelianGroup, S: Iterable[Element]) -> bool:
    """Nonempty and closed under addition (enough for finite groups)."""
    members = {A.check(x) for x in S}
    if not members:
        return False
    return all(A.add(x, y) in members for x in members for y in members)


def units(m: int) -> list[int]:
    """Residues coprime to m, i.e. the units of the ring Z_m."""
    return [a for a in range(1, m) if math.gcd(a, m) == 1]


_TABLES: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}


def addition_table(A: AbelianGroup) -> tuple[tuple[int, ...], ...]:
    """table[i][j] = index(from_index(i) + from_index(j))."""
    table = _TABLES.get(A.moduli)
    if table is None:
        els = A.elements
        table = tuple(tuple(A.index(A.add(x, y)) for y in els) for x in els)
        _TABLES[A.moduli] = table
    return table
