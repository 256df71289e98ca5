"""Deciders for power-closure properties of ideals, with witnesses.

A proper ideal I is (m,n)-closed when x**m in I forces x**n in I, and
weakly (m,n)-closed when that is only required for x**m nonzero.  The
gap between the two notions is witnessed by unbreakable-zero elements:
a with a**m == 0 but a**n not in I.  `classify` reports which of the
three mutually exclusive situations holds, together with the first
witness in canonical element order, and large cyclic rings take a
vectorized path that the tests pin against the generic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from .ideals import Ideal
from .rings import CyclicRing

STATUS_CLOSED = "closed"
STATUS_WEAKLY_ONLY = "weakly_only"
STATUS_NOT_WEAKLY = "not_weakly"

DEFAULT_ABSORBING_BUDGET = 2 ** 24
_VECTOR_MIN_ORDER = 2048


class AbsorbingBudgetError(RuntimeError):
    """The (n+1)-fold sweep would exceed the configured budget; callers
    should skip the check rather than report a result."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"sweep of {required} tuples exceeds budget {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class ClosednessReport:
    """Three-way classification of one (ideal, m, n) instance.

    For status "weakly_only" the witness is the first unbreakable-zero
    element; for "not_weakly" it is the first x with 0 != x**m in I and
    x**n not in I; for "closed" there is no witness.
    """

    ideal: Ideal
    m: int
    n: int
    status: str
    witness: object = None

    def to_record(self) -> dict:
        record = {
            "ring_spec": self.ideal.ring.spec_str,
            "ideal_gens": [_serialize(g) for g in self.ideal.generators],
            "m": self.m,
            "n": self.n,
            "status": self.status,
        }
        if self.witness is not None:
            record["witness"] = _serialize(self.witness)
        return record


def _serialize(element):
    if isinstance(element, tuple):
        return [_serialize(part) for part in element]
    return element


def _require_proper(ideal: Ideal):
    if not ideal.is_proper:
        raise ValueError("property is only defined for proper ideals")


def _require_positive(*values):
    for v in values:
        if v < 1:
            raise ValueError("exponents must be positive")


def is_mn_closed(ideal: Ideal, m: int, n: int):
    """Exhaustive test of x**m in I implies x**n in I; returns
    (ok, first failing x or None)."""
    _require_proper(ideal)
    _require_positive(m, n)
    ring = ideal.ring
    members = ideal.elements
    for x in ring.elements:
        if ring.power(x, m) in members and ring.power(x, n) not in members:
            return False, x
    return True, None


def is_weakly_mn_closed(ideal: Ideal, m: int, n: int):
    """Exhaustive test of 0 != x**m in I implies x**n in I; returns
    (ok, first failing x or None)."""
    _require_proper(ideal)
    _require_positive(m, n)
    ring = ideal.ring
    members = ideal.elements
    zero = ring.zero
    for x in ring.elements:
        xm = ring.power(x, m)
        if xm != zero and xm in members and ring.power(x, n) not in members:
            return False, x
    return True, None


def unbreakable_zero_elements(ideal: Ideal, m: int, n: int) -> tuple:
    """All a with a**m == 0 and a**n not in I, in canonical order."""
    _require_proper(ideal)
    _require_positive(m, n)
    ring = ideal.ring
    members = ideal.elements
    zero = ring.zero
    return tuple(
        a
        for a in ring.elements
        if ring.power(a, m) == zero and ring.power(a, n) not in members
    )


def classify(ideal: Ideal, m: int, n: int) -> ClosednessReport:
    """One pass over the ring deciding closed / weakly_only / not_weakly."""
    _require_proper(ideal)
    _require_positive(m, n)
    ring = ideal.ring
    if isinstance(ring, CyclicRing) and ring.order >= _VECTOR_MIN_ORDER:
        return _classify_cyclic_vectorized(ideal, m, n)
    members = ideal.elements
    zero = ring.zero
    first_unbreakable = None
    for x in ring.elements:
        xm = ring.power(x, m)
        if xm in members and ring.power(x, n) not in members:
            if xm != zero:
                return ClosednessReport(ideal, m, n, STATUS_NOT_WEAKLY, x)
            if first_unbreakable is None:
                first_unbreakable = x
    if first_unbreakable is not None:
        return ClosednessReport(ideal, m, n, STATUS_WEAKLY_ONLY, first_unbreakable)
    return ClosednessReport(ideal, m, n, STATUS_CLOSED, None)


@lru_cache(maxsize=64)
def _power_table(modulus: int, exponent: int) -> np.ndarray:
    """pow(x, exponent, modulus) for every residue, square-and-multiply so
    intermediates stay below 2**40 (modulus is capped at 2**20)."""
    result = np.ones(modulus, dtype=np.int64)
    base = np.arange(modulus, dtype=np.int64)
    e = exponent
    while e:
        if e & 1:
            result = result * base % modulus
        e >>= 1
        if e:
            base = base * base % modulus
    return result


def _cyclic_membership(ideal: Ideal, values: np.ndarray) -> np.ndarray:
    if ideal.is_zero:
        return values == 0
    # every ideal of Z_n is dZ_n for d its least positive member
    d = ideal.members[1] if ideal.members[0] == 0 else ideal.members[0]
    return values % d == 0


def _classify_cyclic_vectorized(ideal: Ideal, m: int, n: int) -> ClosednessReport:
    modulus = ideal.ring.n
    xm = _power_table(modulus, m)
    xn = _power_table(modulus, n)
    in_m = _cyclic_membership(ideal, xm)
    out_n = ~_cyclic_membership(ideal, xn)
    not_weakly = in_m & (xm != 0) & out_n
    if not_weakly.any():
        return ClosednessReport(
            ideal, m, n, STATUS_NOT_WEAKLY, int(np.argmax(not_weakly))
        )
    unbreakable = (xm == 0) & out_n
    if unbreakable.any():
        return ClosednessReport(
            ideal, m, n, STATUS_WEAKLY_ONLY, int(np.argmax(unbreakable))
        )
    return ClosednessReport(ideal, m, n, STATUS_CLOSED, None)


def is_weakly_prime(ideal: Ideal):
    """0 != xy in I forces x in I or y in I; returns (ok, (x, y) or None)."""
    _require_proper(ideal)
    ring = ideal.ring
    members = ideal.elements
    zero = ring.zero
    for x in ring.elements:
        if x in members:
            continue
        for y in ring.elements:
            if y in members:
                continue
            xy = ring.mul(x, y)
            if xy != zero and xy in members:
                return False, (x, y)
    return True, None


def is_weakly_radical(ideal: Ideal):
    """0 != x**t in I for some t forces x in I; exponents are capped at
    the ring order (power sequences cycle within that many steps).
    Returns (ok, (x, t) or None)."""
    _require_proper(ideal)
    ring = ideal.ring
    members = ideal.elements
    zero = ring.zero
    for x in ring.elements:
        if x in members:
            continue
        y = x
        for t in range(1, ring.order + 1):
            if y != zero and y in members:
                return False, (x, t)
            y = ring.mul(y, x)
    return True, None


def is_n_absorbing(
    ideal: Ideal,
    n: int,
    weak: bool = False,
    budget: int = DEFAULT_ABSORBING_BUDGET,
):
    """Whenever a product of n+1 elements lies in I (nonzero, for the weak
    variant), some n of them already multiply into I.

    Products are symmetric, so tuples are swept as multisets; a failing
    multiset is returned sorted.  Raises `AbsorbingBudgetError` when
    order**(n+1) exceeds the budget.
    """
    _require_proper(ideal)
    _require_positive(n)
    ring = ideal.ring
    required = ring.order ** (n + 1)
    if required > budget:
        raise AbsorbingBudgetError(required, budget)
    members = ideal.elements
    zero = ring.zero
    for combo in combinations_with_replacement(ring.elements, n + 1):
        total = combo[0]
        for factor in combo[1:]:
            total = ring.mul(total, factor)
        if total not in members:
            continue
        if weak and total == zero:
            continue
        if not any(_subproduct(ring, combo, skip) in members for skip in range(n + 1)):
            return False, combo
    return True, None


def _subproduct(ring, combo, skip):
    total = ring.one
    for i, factor in enumerate(combo):
        if i != skip:
            total = ring.mul(total, factor)
    return total
