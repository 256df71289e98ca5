"""Ideals as explicit element sets: construction, enumeration, quotients.

An `Ideal` carries its full (canonical, sorted) element set alongside the
generators that produced it, so every membership-quantified property can
be decided exactly by iteration.  Enumeration is structural (and provably
complete) for cyclic and product rings; for trivial extensions and
quotients it closes all generator subsets up to a size bound and, for
orders up to 256, verifies completeness by sweeping every additive
subgroup that absorbs multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .rings import (
    CyclicRing,
    FiniteRing,
    ProductRing,
    QuotientRing,
    additive_closure,
    build_ring,
    ideal_closure,
)
from .specs import Quotient

SUBGROUP_SWEEP_LIMIT = 256
DEFAULT_MAX_GENERATORS = 2


class Ideal:
    """An ideal of a realized finite ring, as an explicit element set."""

    __slots__ = ("ring", "elements", "generators", "members", "_hash")

    def __init__(self, ring: FiniteRing, elements: frozenset, generators: tuple):
        self.ring = ring
        self.elements = elements
        self.generators = tuple(generators)
        self.members = tuple(sorted(elements))
        self._hash = hash((ring, elements, self.generators))

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.members)

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.elements

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.elements == other.elements
            and self.generators == other.generators
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "{" + ", ".join(str(m) for m in self.members) + "}"


def ideal_from_generators(ring: FiniteRing, generators) -> Ideal:
    """Smallest ideal containing the generators (empty generators give
    the zero ideal)."""
    gens = tuple(generators)
    return Ideal(ring, ideal_closure(ring, gens), gens)


def ideal_from_elements(ring: FiniteRing, elements) -> Ideal:
    """Wrap an element set already known to be an ideal (for example the
    image of an ideal under a projection); generators default to the
    full member list, which trivially regenerates the set."""
    members = frozenset(elements)
    return Ideal(ring, members, tuple(sorted(members)))


def intersect_ideals(first: Ideal, second: Ideal) -> Ideal:
    if first.ring != second.ring:
        raise ValueError("ideals of different rings")
    return ideal_from_elements(first.ring, first.elements & second.elements)


def is_proper(ideal: Ideal) -> bool:
    return ideal.is_proper


@dataclass(frozen=True)
class IdealEnumeration:
    """All ideals reached by the enumerator, flagged `complete` only when
    the list is provably every ideal of the ring."""

    ring: FiniteRing
    ideals: tuple
    complete: bool

    @property
    def proper(self) -> tuple:
        return tuple(i for i in self.ideals if i.is_proper)


def _sorted_ideals(ideals) -> tuple:
    return tuple(sorted(ideals, key=lambda i: (len(i.members), i.members)))


@lru_cache(maxsize=None)
def enumerate_ideals(ring: FiniteRing, max_generators: int = DEFAULT_MAX_GENERATORS) -> IdealEnumeration:
    """Enumerate ideals of a ring.

    Cyclic rings: the divisor ideals dZ_n, complete.  Products: all
    I1 x I2 combinations of factor ideals, complete when both factor
    enumerations are.  Other kinds: deduplicated closures of generator
    subsets of size <= max_generators, with a completeness sweep over
    additive subgroups for orders up to 256.
    """
    if max_generators < 1:
        raise ValueError("max_generators must be >= 1")
    if isinstance(ring, CyclicRing):
        ideals = []
        for d in sorted(_divisors(ring.n), reverse=True):
            ideals.append(ideal_from_generators(ring, (d % ring.n,)))
        return IdealEnumeration(ring, _sorted_ideals(ideals), True)
    if isinstance(ring, ProductRing):
        left = enumerate_ideals(ring.left, max_generators)
        right = enumerate_ideals(ring.right, max_generators)
        ideals = []
        for i1 in left.ideals:
            for i2 in right.ideals:
                ideals.append(product_ideal(ring, i1, i2))
        return IdealEnumeration(ring, _sorted_ideals(ideals), left.complete and right.complete)
    return _enumerate_by_generators(ring, max_generators)


def product_ideal(ring: ProductRing, left_ideal: Ideal, right_ideal: Ideal) -> Ideal:
    """The ideal I1 x I2 of a product ring."""
    elements = frozenset(
        (a, b) for a in left_ideal.elements for b in right_ideal.elements
    )
    gens = dict.fromkeys(
        [(g, ring.right.zero) for g in left_ideal.generators]
        + [(ring.left.zero, g) for g in right_ideal.generators]
    )
    return Ideal(ring, elements, tuple(gens))


def split_product_ideal(ring: ProductRing, ideal: Ideal):
    """Factor an ideal of R1 x R2 into its projections (I1, I2); raises if
    the element set is not the full rectangle I1 x I2 (it always is for a
    genuine ideal of a product)."""
    left = frozenset(a for a, _ in ideal.elements)
    right = frozenset(b for _, b in ideal.elements)
    if len(left) * len(right) != len(ideal.elements):
        raise ValueError(f"not a rectangular ideal of {ring.spec_str}: {ideal!r}")
    return (
        ideal_from_elements(ring.left, left),
        ideal_from_elements(ring.right, right),
    )


def _enumerate_by_generators(ring: FiniteRing, max_generators: int) -> IdealEnumeration:
    found: dict = {}
    for x in ring.elements:
        members = ideal_closure(ring, (x,))
        found.setdefault(members, (x,))
    principal = dict(found)
    frontier = sorted(found.items(), key=lambda kv: kv[1])
    for _ in range(max_generators - 1):
        grown = []
        for members, gens in frontier:
            for extra_members, extra_gens in sorted(principal.items(), key=lambda kv: kv[1]):
                if extra_members <= members:
                    continue
                joined = additive_closure(ring, members | extra_members)
                if joined not in found:
                    new_gens = gens + extra_gens
                    found[joined] = new_gens
                    grown.append((joined, new_gens))
        frontier = grown
        if not frontier:
            break
    ideals = _sorted_ideals(Ideal(ring, members, gens) for members, gens in found.items())
    complete = False
    if ring.order <= SUBGROUP_SWEEP_LIMIT:
        complete = set(found) == _all_ideal_element_sets(ring)
    return IdealEnumeration(ring, ideals, complete)


def _all_ideal_element_sets(ring: FiniteRing) -> set:
    """Every additive subgroup of the ring that absorbs multiplication,
    found by join-closing the cyclic subgroups.  Exhaustive, so it serves
    as the completeness oracle for generator-bounded enumeration."""
    subgroups = {additive_closure(ring, (x,)) for x in ring.elements}
    subgroups.add(frozenset({ring.zero}))
    changed = True
    while changed:
        changed = False
        current = sorted(subgroups, key=lambda s: (len(s), sorted(s)))
        for a, b in combinations(current, 2):
            if a <= b or b <= a:
                continue
            joined = additive_closure(ring, a | b)
            if joined not in subgroups:
                subgroups.add(joined)
                changed = True
    ideal_sets = set()
    for group in subgroups:
        if all(ring.mul(r, h) in group for h in group for r in ring.elements):
            ideal_sets.add(group)
    return ideal_sets


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return tuple(sorted(set(small) | {n // d for d in small}))


def quotient_ring(ring: FiniteRing, ideal: Ideal) -> QuotientRing:
    """The ring of cosets R/I, with `project` as the natural map.

    Built through the spec cache, so repeated quotients by the same ideal
    return the same object.
    """
    if ideal.ring != ring:
        raise ValueError("ideal does not belong to this ring")
    if not ideal.is_proper:
        raise ValueError(f"cannot quotient {ring.spec_str} by an improper ideal")
    literals = tuple(ring.index_of(g) for g in ideal.generators)
    return build_ring(Quotient(ring.spec, literals), ring.max_order)


def image_ideal(quotient: QuotientRing, ideal: Ideal) -> Ideal:
    """Image of an ideal of the base ring under the natural projection."""
    if ideal.ring != quotient.base:
        raise ValueError("ideal does not belong to the base ring")
    elements = frozenset(quotient.project(x) for x in ideal.elements)
    gens = []
    for g in ideal.generators:
        image = quotient.project(g)
        if image not in gens:
            gens.append(image)
    if not gens and elements != frozenset({quotient.zero}):
        gens = sorted(elements)
    return Ideal(quotient, elements, tuple(gens))


def is_prime_ideal(ideal: Ideal) -> bool:
    """xy in I forces x in I or y in I, decided exhaustively."""
    if not ideal.is_proper:
        raise ValueError("primality is only defined for proper ideals")
    ring = ideal.ring
    outside = [x for x in ring.elements if x not in ideal.elements]
    for i, x in enumerate(outside):
        for y in outside[i:]:
            if ring.mul(x, y) in ideal.elements:
                return False
    return True


@lru_cache(maxsize=None)
def krull_dim(ring: FiniteRing, max_generators: int = DEFAULT_MAX_GENERATORS) -> int:
    """Length of the longest strict chain of enumerated prime ideals,
    minus one.  When the enumeration is incomplete the value is only a
    lower bound."""
    enumeration = enumerate_ideals(ring, max_generators)
    primes = [i for i in enumeration.proper if is_prime_ideal(i)]
    depth: dict = {}

    def chain_length(index: int) -> int:
        if index in depth:
            return depth[index]
        best = 1
        for j, other in enumerate(primes):
            if j != index and other.elements < primes[index].elements:
                best = max(best, 1 + chain_length(j))
        depth[index] = best
        return best

    if not primes:
        return -1
    return max(chain_length(i) for i in range(len(primes))) - 1
