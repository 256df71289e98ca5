"""(m,n)-von Neumann regularity of elements and rings.

An element x is (m,n)-vnr when x**m * r == x**n is solvable for r; a ring
is (m,n)-regular when every element is.  For a fixed element the set of
solvable pairs always has the shape B_k = {(m, n): m <= n or n >= k}, and
`vnr_profile_element` finds the k.  B_omega (pairs with m <= n only) is
representable for API completeness but unreachable from finite rings:
every finite commutative ring is strongly pi-regular, which the profile
computation asserts by always terminating with a finite k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .closure import classify, STATUS_CLOSED, STATUS_NOT_WEAKLY
from .ideals import DEFAULT_MAX_GENERATORS, enumerate_ideals
from .rings import FiniteRing


@dataclass(frozen=True)
class VnrProfile:
    """The pair set B_k (k = None encodes B_omega).

    B_k contains (m, n) iff m <= n or n >= k; B_1 is every pair and the
    chain B_1 > B_2 > ... > B_omega is strictly decreasing.
    """

    k: int | None

    @property
    def is_omega(self) -> bool:
        return self.k is None

    def contains(self, m: int, n: int) -> bool:
        if m <= n:
            return True
        return self.k is not None and n >= self.k

    def __str__(self):
        return "B(omega)" if self.k is None else f"B({self.k})"


OMEGA_PROFILE = VnrProfile(None)


class ConsistencyError(RuntimeError):
    """Two independently computed routes to the same answer disagreed."""


_solve_cache: dict = {}


def _solve(ring: FiniteRing, a, b):
    """First r in canonical order with a*r == b, or None."""
    key = (ring, a, b)
    try:
        return _solve_cache[key]
    except KeyError:
        pass
    witness = None
    for r in ring.elements:
        if ring.mul(a, r) == b:
            witness = r
            break
    _solve_cache[key] = witness
    return witness


def is_mn_vnr(ring: FiniteRing, x, m: int, n: int):
    """Exhaustive search for r with x**m * r == x**n; returns
    (ok, first such r or None)."""
    if m < 1 or n < 1:
        raise ValueError("exponents must be positive")
    r = _solve(ring, ring.power(x, m), ring.power(x, n))
    return (r is not None), r


def vnr_grid(ring: FiniteRing, x, max_m: int = 6, max_n: int = 6) -> dict:
    """Solvability table {(m, n): bool} for 1 <= m <= max_m, 1 <= n <= max_n."""
    top = max(max_m, max_n)
    powers = [ring.one]
    for _ in range(top):
        powers.append(ring.mul(powers[-1], x))
    grid = {}
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            grid[(m, n)] = _solve(ring, powers[m], powers[n]) is not None
    return grid


def vnr_profile_element(ring: FiniteRing, x) -> VnrProfile:
    """Smallest k with x (k+1, k)-vnr; finite for every element of a
    finite ring because power sequences are eventually periodic."""
    ring.require_member(x)
    for n in range(1, ring.order + 2):
        if is_mn_vnr(ring, x, n + 1, n)[0]:
            return VnrProfile(n)
    raise ConsistencyError(
        f"no profile within order bound for {x!r} in {ring.spec_str}"
    )


@lru_cache(maxsize=None)
def vnr_profile_ring(ring: FiniteRing) -> VnrProfile:
    """B_k with k the maximum of the element profiles (equivalently, the
    intersection of the element pair sets)."""
    k = 1
    for x in ring.elements:
        k = max(k, vnr_profile_element(ring, x).k)
    return VnrProfile(k)


@lru_cache(maxsize=None)
def is_mn_regular_ring(ring: FiniteRing, m: int, n: int) -> bool:
    """Every element is (m,n)-vnr (direct search, no profile shortcut)."""
    return all(is_mn_vnr(ring, x, m, n)[0] for x in ring.elements)


def all_proper_ideals_weakly_closed(
    ring: FiniteRing, m: int, n: int, max_generators: int = DEFAULT_MAX_GENERATORS
) -> bool:
    """Whether every proper ideal is weakly (m,n)-closed, for m > n.

    Decided through the element-level characterization (every
    non-nilpotent element (m,n)-vnr and w**m == 0 on the nilradical) and,
    when ideal enumeration is complete, cross-checked against the direct
    sweep; a disagreement raises `ConsistencyError`.
    """
    if m <= n:
        raise ValueError("requires m > n")
    nil = ring.nilpotents
    characterization = all(ring.power(w, m) == ring.zero for w in nil) and all(
        is_mn_vnr(ring, x, m, n)[0] for x in ring.elements if x not in nil
    )
    enumeration = enumerate_ideals(ring, max_generators)
    if enumeration.complete:
        direct = all(
            classify(ideal, m, n).status != STATUS_NOT_WEAKLY
            for ideal in enumeration.proper
        )
        if direct != characterization:
            raise ConsistencyError(
                f"{ring.spec_str} (m={m}, n={n}): ideal sweep says {direct}, "
                f"element characterization says {characterization}"
            )
        return direct
    return characterization


def all_proper_ideals_closed(
    ring: FiniteRing, m: int, n: int, max_generators: int = DEFAULT_MAX_GENERATORS
) -> bool:
    """Direct sweep: every enumerated proper ideal is (m,n)-closed."""
    enumeration = enumerate_ideals(ring, max_generators)
    return all(
        classify(ideal, m, n).status == STATUS_CLOSED
        for ideal in enumeration.proper
    )


@lru_cache(maxsize=None)
def is_strongly_pi_regular(ring: FiniteRing):
    """Smallest n such that x**(2n) * r == x**n is solvable for every x,
    found by direct ascending search.  Finite rings always have one;
    returns (True, n), or (False, None) should the bound ever be passed.
    """
    for n in range(1, ring.order + 2):
        if is_mn_regular_ring(ring, 2 * n, n):
            return True, n
    return False, None


def regularity_record(ring: FiniteRing) -> dict:
    """Serialized ring profile, including the first element attaining the
    ring's k (the witness that k cannot be lowered)."""
    profile = vnr_profile_ring(ring)
    strongly, smallest = is_strongly_pi_regular(ring)
    witness = None
    for x in ring.elements:
        if vnr_profile_element(ring, x).k == profile.k:
            witness = x
            break
    if strongly and smallest != profile.k:
        raise ConsistencyError(
            f"{ring.spec_str}: profile k={profile.k} but smallest strongly "
            f"pi-regular exponent is {smallest}"
        )
    return {
        "ring_spec": ring.spec_str,
        "k": profile.k,
        "strongly_pi_regular": strongly,
        "per_element_max_witness": _serialize_element(witness),
    }


def _serialize_element(element):
    if isinstance(element, tuple):
        return [_serialize_element(part) for part in element]
    return element
