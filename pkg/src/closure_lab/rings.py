"""Finite commutative rings realized from symbolic specs.

Every ring exposes a canonical element tuple (`elements`), unchecked fast
arithmetic (`add`/`mul`/`neg`/`power`), and cached structural sets: the
nilradical, the unit group, the zero-divisors, and the characteristic.
Rings are immutable once built; `build_ring` memoizes on the spec, so
repeated builds of the same spec share one object (and its caches).

Structural sets are computed with per-kind shortcuts (gcd tests for
cyclic rings, componentwise products, and so on); the test suite checks
each shortcut against the exhaustive definition on small rings.
"""

from __future__ import annotations

import math
from functools import cached_property, lru_cache, reduce
from itertools import product as iter_product

from .specs import (
    CyclicZ,
    Idealization,
    Product,
    Quotient,
    RingSpec,
    SpecError,
    format_ring_spec,
    spec_order,
)

DEFAULT_ORDER_CAP = 2 ** 20
EAGER_CACHE_THRESHOLD = 2 ** 16

#: canonical element encodings: residues for cyclic rings, pairs for
#: products and trivial extensions, minimal coset representatives for
#: quotients.  Equality is encoding equality.
Element = object


class OrderCapError(ValueError):
    """Requested ring exceeds the configured order cap."""


class ForeignElementError(ValueError):
    """An element was used with a ring it does not belong to."""


class FiniteRing:
    """Base class; subclasses fix the arithmetic for one spec kind."""

    def __init__(self, spec: RingSpec, order: int, zero, one, max_order: int):
        self.spec = spec
        self.order = order
        self.zero = zero
        self.one = one
        self.max_order = max_order

    # -- identity ----------------------------------------------------------

    @cached_property
    def spec_str(self) -> str:
        return format_ring_spec(self.spec)

    def __repr__(self):
        return self.spec_str

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    # -- arithmetic (unchecked; see element_arithmetic for the checked API) -

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def power(self, x, t: int):
        """x**t by repeated squaring; x**0 is the identity."""
        result = self.one
        base = x
        while t:
            if t & 1:
                result = self.mul(result, base)
            t >>= 1
            if t:
                base = self.mul(base, base)
        return result

    def contains(self, x) -> bool:
        raise NotImplementedError

    def require_member(self, x):
        if not self.contains(x):
            raise ForeignElementError(f"{x!r} is not an element of {self.spec_str}")

    @cached_property
    def elements(self) -> tuple:
        """All elements in canonical (sorted) order; zero comes first."""
        raise NotImplementedError

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    def index_of(self, x) -> int:
        """Position of x in the canonical element order."""
        self.require_member(x)
        return self._index[x]

    # -- structure ----------------------------------------------------------

    def nilpotency_index(self, x):
        """Smallest k >= 1 with x**k == 0, or None for non-nilpotents.

        Powers are iterated until zero or a repeated value, never more
        than `order` steps.
        """
        y = x
        k = 1
        seen = set()
        while True:
            if y == self.zero:
                return k
            if y in seen or k >= self.order:
                return None
            seen.add(y)
            y = self.mul(y, x)
            k += 1

    @cached_property
    def nilpotents(self) -> frozenset:
        return frozenset(x for x in self.elements if self.nilpotency_index(x) is not None)

    def _is_unit(self, x) -> bool:
        # in a finite commutative ring x is a unit iff some power of x is 1
        seen = set()
        y = x
        while y not in seen:
            if y == self.one:
                return True
            seen.add(y)
            y = self.mul(y, x)
        return False

    @cached_property
    def units(self) -> frozenset:
        return frozenset(x for x in self.elements if self._is_unit(x))

    @cached_property
    def zero_divisors(self) -> frozenset:
        # the nonzero non-units; the trichotomy with the pairwise
        # definition is asserted exhaustively in the tests
        units = self.units
        return frozenset(x for x in self.elements if x != self.zero and x not in units)

    @cached_property
    def characteristic(self) -> int:
        acc = self.one
        k = 1
        while acc != self.zero:
            acc = self.add(acc, self.one)
            k += 1
        return k

    def _warm_caches(self):
        self.elements
        self.nilpotents
        self.units
        self.zero_divisors
        self.characteristic


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple:
    """Prime factorization as ((p, e), ...), ascending primes."""
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def squarefree_radical(n: int) -> int:
    """Product of the distinct primes dividing n."""
    return reduce(lambda acc, pe: acc * pe[0], _factorize(n), 1)


class CyclicRing(FiniteRing):
    def __init__(self, spec: CyclicZ, max_order: int):
        n = spec.modulus
        super().__init__(spec, n, 0, 1, max_order)
        self.n = n
        self._radical = squarefree_radical(n)

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def power(self, x, t):
        return pow(x, t, self.n)

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.n

    @cached_property
    def elements(self):
        return tuple(range(self.n))

    def nilpotency_index(self, x):
        if x == 0:
            return 1
        if x % self._radical:
            return None
        y = x
        k = 1
        while y:
            y = y * x % self.n
            k += 1
        return k

    @cached_property
    def nilpotents(self):
        return frozenset(range(0, self.n, self._radical))

    @cached_property
    def units(self):
        return frozenset(x for x in range(self.n) if math.gcd(x, self.n) == 1)

    @cached_property
    def characteristic(self):
        return self.n


class ProductRing(FiniteRing):
    def __init__(self, spec: Product, left: FiniteRing, right: FiniteRing, max_order: int):
        super().__init__(
            spec,
            left.order * right.order,
            (left.zero, right.zero),
            (left.one, right.one),
            max_order,
        )
        self.left = left
        self.right = right

    def add(self, x, y):
        return (self.left.add(x[0], y[0]), self.right.add(x[1], y[1]))

    def mul(self, x, y):
        return (self.left.mul(x[0], y[0]), self.right.mul(x[1], y[1]))

    def neg(self, x):
        return (self.left.neg(x[0]), self.right.neg(x[1]))

    def power(self, x, t):
        return (self.left.power(x[0], t), self.right.power(x[1], t))

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.left.contains(x[0])
            and self.right.contains(x[1])
        )

    @cached_property
    def elements(self):
        return tuple(iter_product(self.left.elements, self.right.elements))

    def nilpotency_index(self, x):
        k1 = self.left.nilpotency_index(x[0])
        if k1 is None:
            return None
        k2 = self.right.nilpotency_index(x[1])
        if k2 is None:
            return None
        return max(k1, k2)

    @cached_property
    def nilpotents(self):
        return frozenset(iter_product(self.left.nilpotents, self.right.nilpotents))

    @cached_property
    def units(self):
        return frozenset(iter_product(self.left.units, self.right.units))

    @cached_property
    def characteristic(self):
        return math.lcm(self.left.characteristic, self.right.characteristic)


class IdealizationRing(FiniteRing):
    """Trivial extension Z_n (+) Z_d: (r, m)(s, u) = (rs, ru + sm)."""

    def __init__(self, spec: Idealization, max_order: int):
        n, d = spec.base_modulus, spec.module_modulus
        super().__init__(spec, n * d, (0, 0), (1, 0), max_order)
        self.n = n
        self.d = d
        self._radical = squarefree_radical(n)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.n, (x[1] + y[1]) % self.d)

    def mul(self, x, y):
        return ((x[0] * y[0]) % self.n, (x[0] * y[1] + y[0] * x[1]) % self.d)

    def neg(self, x):
        return ((-x[0]) % self.n, (-x[1]) % self.d)

    def power(self, x, t):
        # (r, m)**t = (r**t, t * r**(t-1) * m), by induction on t
        if t == 0:
            return self.one
        r, m = x
        return (pow(r, t, self.n), (t * pow(r, t - 1, self.d) * m) % self.d)

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and isinstance(x[0], int)
            and isinstance(x[1], int)
            and 0 <= x[0] < self.n
            and 0 <= x[1] < self.d
        )

    @cached_property
    def elements(self):
        return tuple((r, m) for r in range(self.n) for m in range(self.d))

    def nilpotency_index(self, x):
        r, m = x
        if r == 0:
            return 1 if m == 0 else 2
        if r % self._radical:
            return None
        k = 1
        y = r
        while y:
            y = y * r % self.n
            k += 1
        # r**k = 0; the module part of (r, m)**k is k * r**(k-1) * m
        if (k * pow(r, k - 1, self.d) * m) % self.d == 0:
            return k
        return k + 1

    @cached_property
    def nilpotents(self):
        return frozenset(
            (r, m) for r in range(0, self.n, self._radical) for m in range(self.d)
        )

    @cached_property
    def units(self):
        # (r, m) is a unit iff r is a unit: the inverse is (r^-1, -r^-2 m)
        return frozenset(
            (r, m)
            for r in range(self.n)
            if math.gcd(r, self.n) == 1
            for m in range(self.d)
        )

    @cached_property
    def characteristic(self):
        return self.n


class QuotientRing(FiniteRing):
    """Cosets of an ideal, represented by their minimal members.

    The representative of a coset is its smallest element in the base
    ring's canonical order, so canonicalization is idempotent and the
    element order of the quotient is inherited from the base.
    """

    def __init__(self, spec: Quotient, base: FiniteRing, ideal_members: frozenset, max_order: int):
        rep_map = {}
        reps = []
        for e in base.elements:
            if e in rep_map:
                continue
            # first unassigned element in canonical order is the coset minimum
            for j in ideal_members:
                rep_map[base.add(e, j)] = e
            reps.append(e)
        order = len(reps)
        assert order * len(ideal_members) == base.order
        super().__init__(spec, order, rep_map[base.zero], rep_map[base.one], max_order)
        self.base = base
        self.ideal_members = ideal_members
        self._rep_map = rep_map
        self._reps = tuple(reps)

    def project(self, x):
        """Natural projection: base ring element to its coset representative."""
        self.base.require_member(x)
        return self._rep_map[x]

    def add(self, x, y):
        return self._rep_map[self.base.add(x, y)]

    def mul(self, x, y):
        return self._rep_map[self.base.mul(x, y)]

    def neg(self, x):
        return self._rep_map[self.base.neg(x)]

    def power(self, x, t):
        return self._rep_map[self.base.power(x, t)]

    def contains(self, x):
        try:
            return self._rep_map.get(x) == x
        except TypeError:
            return False

    @cached_property
    def elements(self):
        return self._reps


def ideal_closure(ring: FiniteRing, generators) -> frozenset:
    """Element set of the ideal generated by `generators`.

    Cyclic rings take the gcd shortcut (every ideal of Z_n is dZ_n);
    everything else saturates: all ring multiples of the generators,
    then the additive closure, stepping coset by coset.
    """
    gens = tuple(generators)
    for g in gens:
        ring.require_member(g)
    if isinstance(ring, CyclicRing):
        d = reduce(math.gcd, gens, ring.n)
        if d == 0:
            d = ring.n
        return frozenset(range(0, ring.n, d))
    multiples = {ring.zero}
    for g in gens:
        multiples.update(ring.mul(r, g) for r in ring.elements)
    return additive_closure(ring, multiples)


def additive_closure(ring: FiniteRing, seed) -> frozenset:
    """Smallest additive subgroup containing `seed`."""
    group = {ring.zero}
    for g in seed:
        if g in group:
            continue
        snapshot = tuple(group)
        shift = g
        while shift not in group:
            group.update(ring.add(shift, h) for h in snapshot)
            shift = ring.add(shift, g)
    return frozenset(group)


@lru_cache(maxsize=None)
def _build_cached(spec: RingSpec, max_order: int) -> FiniteRing:
    arithmetic_order = spec_order(spec)
    if arithmetic_order is not None and arithmetic_order > max_order:
        raise OrderCapError(
            f"{format_ring_spec(spec)} has order {arithmetic_order}, "
            f"exceeding the cap {max_order}"
        )
    if isinstance(spec, CyclicZ):
        ring: FiniteRing = CyclicRing(spec, max_order)
    elif isinstance(spec, Product):
        left = _build_cached(spec.left, max_order)
        right = _build_cached(spec.right, max_order)
        ring = ProductRing(spec, left, right, max_order)
    elif isinstance(spec, Idealization):
        ring = IdealizationRing(spec, max_order)
    elif isinstance(spec, Quotient):
        base = _build_cached(spec.base, max_order)
        gen_elements = []
        for literal in spec.generators:
            if literal >= base.order:
                raise SpecError(
                    f"generator literal {literal} is out of range for "
                    f"{base.spec_str} (order {base.order})"
                )
            gen_elements.append(base.elements[literal])
        members = ideal_closure(base, gen_elements)
        if base.one in members:
            raise SpecError(
                f"improper quotient ideal: generators {spec.generators} "
                f"generate the whole of {base.spec_str}"
            )
        ring = QuotientRing(spec, base, members, max_order)
    else:
        raise TypeError(f"not a ring spec: {spec!r}")
    if ring.order <= EAGER_CACHE_THRESHOLD:
        ring._warm_caches()
    return ring


def build_ring(spec: RingSpec, max_order: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """Realize a spec.  Structural sets are computed eagerly for orders up
    to 2**16 and lazily above; the default order cap is 2**20."""
    return _build_cached(spec, max_order)


# --- checked operation surface ----------------------------------------------


def element_arithmetic(ring: FiniteRing, op: str, x, y=None):
    """Checked arithmetic: validates membership, then dispatches.

    `op` is one of "add", "mul", "neg"; "neg" is unary.
    """
    ring.require_member(x)
    if op == "neg":
        if y is not None:
            raise ValueError("neg is unary")
        return ring.neg(x)
    if y is None:
        raise ValueError(f"{op} needs two operands")
    ring.require_member(y)
    if op == "add":
        return ring.add(x, y)
    if op == "mul":
        return ring.mul(x, y)
    raise ValueError(f"unknown operation {op!r}")


def power(ring: FiniteRing, x, t: int):
    """Checked power: x**t with t >= 0."""
    ring.require_member(x)
    if t < 0:
        raise ValueError("exponent must be non-negative")
    return ring.power(x, t)


def nilradical(ring: FiniteRing) -> frozenset:
    return ring.nilpotents


def units(ring: FiniteRing) -> frozenset:
    return ring.units


def zero_divisors(ring: FiniteRing) -> frozenset:
    return ring.zero_divisors


def characteristic(ring: FiniteRing) -> int:
    return ring.characteristic


def nilpotency_index(ring: FiniteRing, x):
    ring.require_member(x)
    return ring.nilpotency_index(x)
