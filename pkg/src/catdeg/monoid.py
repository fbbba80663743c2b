"""Numerical monoids <n_1, ..., n_k>: construction, membership, divisibility.

A numerical monoid is the set of nonnegative integer combinations of a
coprime, minimal generating set.  Construction validates both properties and
precomputes the Apery table (least element of the monoid in each residue
class mod n_1), which makes membership an O(1) lookup and determines the
Frobenius number.
"""

from __future__ import annotations

import heapq
from math import gcd
from functools import reduce

from .errors import (
    DuplicateGenerator,
    EmptyGenerators,
    InvalidGenerator,
    NotAnElement,
    NotCoprime,
    NotCoprimePair,
    NotMinimal,
)


def _represent(target: int, gens: tuple[int, ...]) -> tuple[int, ...] | None:
    """Nonnegative combination of gens summing to target, or None.

    Brute-force DFS; only used on the small inputs seen at construction time.
    """
    if target == 0:
        return (0,) * len(gens)
    if not gens:
        return None
    head, tail = gens[0], gens[1:]
    for a in range(target // head, -1, -1):
        rest = _represent(target - a * head, tail)
        if rest is not None:
            return (a,) + rest
    return None


def _apery_table(generators: tuple[int, ...]) -> tuple[int, ...]:
    """apery[r] = least monoid element congruent to r mod n_1.

    Shortest-path relaxation over the n_1 residue classes: from class r with
    least element v, each generator g > n_1 reaches class (r + g) mod n_1
    with value v + g.  The least element of a class never uses n_1 itself
    (subtracting n_1 would stay in the class and be smaller), so n_1 is not
    an edge.
    """
    n1 = generators[0]
    dist = [None] * n1
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    others = generators[1:]
    while heap:
        v, r = heapq.heappop(heap)
        if dist[r] is not None and v > dist[r]:
            continue
        for g in others:
            nr = (r + g) % n1
            nv = v + g
            if dist[nr] is None or nv < dist[nr]:
                dist[nr] = nv
                heapq.heappush(heap, (nv, nr))
    # gcd == 1 guarantees every class is reached
    return tuple(dist)  # type: ignore[arg-type]


class NumericalMonoid:
    """Immutable numerical monoid with precomputed Apery/Frobenius data."""

    __slots__ = ("generators", "apery", "frobenius")

    def __init__(self, gens):
        gens = list(gens)
        if not gens:
            raise EmptyGenerators("need at least one generator")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g <= 0:
                raise InvalidGenerator(f"generator {g!r} is not a positive integer")
        if len(set(gens)) != len(gens):
            dup = sorted(g for g in set(gens) if gens.count(g) > 1)[0]
            raise DuplicateGenerator(f"generator {dup} listed more than once")
        gens = sorted(gens)
        for i, g in enumerate(gens):
            others = tuple(gens[:i] + gens[i + 1:])
            witness = _represent(g, others)
            if witness is not None:
                combo = " + ".join(
                    f"{a}*{o}" for a, o in zip(witness, others) if a
                ) or "0"
                raise NotMinimal(
                    f"generator {g} = {combo} lies in the monoid of the others",
                    g,
                    witness,
                )
        if reduce(gcd, gens) != 1:
            raise NotCoprime(f"gcd{tuple(gens)} = {reduce(gcd, gens)} > 1")
        self.generators: tuple[int, ...] = tuple(gens)
        self.apery: tuple[int, ...] = _apery_table(self.generators)
        self.frobenius: int = max(self.apery) - self.generators[0]

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def contains(self, n: int) -> bool:
        """True iff n is an element of the monoid (negative n allowed)."""
        return n >= 0 and n >= self.apery[n % self.generators[0]]

    __contains__ = contains

    def divides(self, b: int, n: int) -> bool:
        """Monoid divisibility: b | n  iff  n - b is in the monoid."""
        if not self.contains(b):
            raise NotAnElement(f"{b} is not an element of {self}")
        if not self.contains(n):
            raise NotAnElement(f"{n} is not an element of {self}")
        return self.contains(n - b)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumericalMonoid) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalMonoid{self.generators}"

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def new_monoid(gens) -> NumericalMonoid:
    """Validated construction; rejects non-minimal or non-coprime input."""
    return NumericalMonoid(gens)


def membership_criterion_2gen(n1: int, n2: int, n: int) -> bool:
    """Membership in <n1, n2> decided through the complement symmetry.

    n lies in <n1, n2> exactly when n1*n2 - n1 - n2 - n does not; the right
    side is settled by direct enumeration, so this is an oracle independent
    of the Apery machinery.
    """
    if n1 < 2 or n2 < 2 or gcd(n1, n2) != 1:
        raise NotCoprimePair(f"({n1}, {n2}) must be coprime and both >= 2")
    m = n1 * n2 - n1 - n2 - n
    return not _two_gen_member(n1, n2, m)


def _two_gen_member(n1: int, n2: int, m: int) -> bool:
    if m < 0:
        return False
    for a in range(m // n1 + 1):
        if (m - a * n1) % n2 == 0:
            return True
    return False
