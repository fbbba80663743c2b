"""Factorizations as exponent vectors over a fixed atom list.

A factorization of a monoid element is a tuple of nonnegative counts, one
per atom.  Lengths, length sets, delta sets, gcds and distances are plain
vector arithmetic and work unchanged for numerical monoids (atoms are
integers) and block monoids (atoms are zero-sum sequences); only the
enumeration step differs between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .errors import BadParameters, DimensionMismatch, EmptySet, NegativeElement
from .monoid import NumericalMonoid

Counts = tuple[int, ...]


@dataclass(frozen=True)
class FactorizationSet:
    """All factorizations of one element, deduplicated, in ascending lex order."""

    element: Any
    factorizations: tuple[Counts, ...]

    def __len__(self) -> int:
        return len(self.factorizations)

    def __iter__(self) -> Iterator[Counts]:
        return iter(self.factorizations)

    def __contains__(self, counts) -> bool:
        return tuple(counts) in self.factorizations


def factorizations(S: NumericalMonoid, n: int) -> FactorizationSet:
    """The set of count vectors (a_1, ..., a_k) with sum a_i * n_i = n.

    Empty when n is not an element; the singleton zero vector when n = 0.
    DFS assigns the largest generators first, pruning any branch whose
    remainder falls outside S (no factorization can complete it).
    """
    if n < 0:
        raise NegativeElement(f"factorizations of {n} requested; elements are >= 0")
    gens = S.generators
    k = len(gens)
    apery = S.apery
    n1 = gens[0]
    out: list[Counts] = []
    counts = [0] * k

    def rec(i: int, rem: int) -> None:
        if i == 0:
            if rem % n1 == 0:
                counts[0] = rem // n1
                out.append(tuple(counts))
            return
        g = gens[i]
        for a in range(rem // g + 1):
            r = rem - a * g
            if r >= apery[r % n1]:
                counts[i] = a
                rec(i - 1, r)

    if n >= apery[n % n1]:
        rec(k - 1, n)
    out.sort()
    return FactorizationSet(n, tuple(out))


def enumerate_vector_sums(atoms: Sequence[Counts], target: Counts) -> list[Counts]:
    """All exponent vectors over `atoms` whose pointwise weighted sum is `target`.

    Shared enumeration core for block monoids: atoms are nonzero vectors of
    equal dimension.  Assigns counts from the last atom index down, each
    bounded by the coordinatewise quotient, so every solution appears once.
    """
    k = len(atoms)
    dim = len(target)
    for a in atoms:
        if len(a) != dim:
            raise DimensionMismatch(f"atom {a} has dimension {len(a)}, target has {dim}")
        if not any(a):
            raise BadParameters("atoms must be nonzero vectors")
    out: list[Counts] = []
    counts = [0] * k

    def rec(i: int, rem: tuple[int, ...]) -> None:
        if not any(rem):
            for j in range(i + 1):
                counts[j] = 0
            out.append(tuple(counts))
            return
        if i < 0:
            return
        a = atoms[i]
        bound = min(r // c for r, c in zip(rem, a) if c)
        for cnt in range(bound, -1, -1):
            counts[i] = cnt
            rec(i - 1, tuple(r - cnt * c for r, c in zip(rem, a)))
        counts[i] = 0

    rec(k - 1, tuple(target))
    out.sort()
    return out


def length(a: Counts) -> int:
    """Number of atoms used: the coordinate sum."""
    return sum(a)


def length_set(Z: FactorizationSet) -> list[int]:
    """Attained factorization lengths, ascending."""
    if not Z.factorizations:
        raise EmptySet(f"element {Z.element} has no factorizations")
    return sorted({sum(a) for a in Z.factorizations})


def delta_set(Z: FactorizationSet) -> list[int]:
    """Successive differences of the sorted length set; empty for one length."""
    ls = length_set(Z)
    return sorted({ls[i] - ls[i - 1] for i in range(1, len(ls))})


def delta_set_monoid(S: NumericalMonoid, window: int) -> list[int]:
    """Union of per-element delta sets over all elements up to `window`.

    A window approximation: it only ever misses values attained beyond the
    window, never invents new ones.
    """
    if window < 0:
        raise BadParameters(f"window must be nonnegative, got {window}")
    out: set[int] = set()
    for n in range(window + 1):
        if S.contains(n):
            Z = factorizations(S, n)
            ls = sorted({sum(a) for a in Z.factorizations})
            out.update(ls[i] - ls[i - 1] for i in range(1, len(ls)))
    return sorted(out)


def gcd_fact(a: Counts, b: Counts) -> Counts:
    """Coordinatewise minimum: the common part of two factorizations."""
    if len(a) != len(b):
        raise DimensionMismatch(f"dimensions {len(a)} and {len(b)} differ")
    return tuple(x if x < y else y for x, y in zip(a, b))


def distance(a: Counts, b: Counts) -> int:
    """max(|a - gcd(a,b)|, |b - gcd(a,b)|): atoms moved going from a to b."""
    if len(a) != len(b):
        raise DimensionMismatch(f"dimensions {len(a)} and {len(b)} differ")
    da = 0
    db = 0
    for x, y in zip(a, b):
        if x > y:
            da += x - y
        elif y > x:
            db += y - x
    return da if da > db else db
