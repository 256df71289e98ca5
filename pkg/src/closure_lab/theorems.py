"""Exhaustive verification of the theorem catalog over instance families.

Every catalog entry sweeps its hypothesis-conclusion (or biconditional)
over all instances drawn from a family and returns a `TheoremVerdict`.
Implications count an instance as vacuous when the hypothesis fails;
biconditionals count it as vacuous when every compared statement is
false (nothing positive was exercised).  Budget-limited sweeps are
skipped, never silently truncated: a verdict only reads "pass" when at
least something was checked and nothing failed.

Verdicts are deterministic for a fixed family: instances are generated
in canonical order, the first failure wins, and worker parallelism is
per theorem, so it cannot reorder anything observable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

from . import closure
from .closure import (
    AbsorbingBudgetError,
    STATUS_CLOSED,
    STATUS_NOT_WEAKLY,
    STATUS_WEAKLY_ONLY,
    is_n_absorbing,
    unbreakable_zero_elements,
)
from .families import InstanceFamily, default_family
from .ideals import (
    Ideal,
    enumerate_ideals,
    ideal_from_generators,
    image_ideal,
    intersect_ideals,
    krull_dim,
    product_ideal,
    quotient_ring,
    split_product_ideal,
)
from .regularity import (
    is_mn_regular_ring,
    is_mn_vnr,
    is_strongly_pi_regular,
    vnr_grid,
    vnr_profile_element,
    vnr_profile_ring,
)
from .rings import CyclicRing, FiniteRing, IdealizationRing, ProductRing, build_ring, _factorize
from .specs import CyclicZ, Idealization, Product, parse_ring_spec

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped(budget)"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    instances_checked: int
    vacuous_count: int
    status: str
    counterexample: dict | None = None

    @property
    def substantive_count(self) -> int:
        return self.instances_checked - self.vacuous_count

    def to_record(self) -> dict:
        record = {
            "theorem_id": self.theorem_id,
            "instances_checked": self.instances_checked,
            "vacuous_count": self.vacuous_count,
            "status": self.status,
        }
        if self.counterexample is not None:
            record["counterexample"] = self.counterexample
        return record


class _Tally:
    def __init__(self, theorem_id: str):
        self.theorem_id = theorem_id
        self.checked = 0
        self.vacuous_count = 0
        self.skipped = 0

    def substantive(self):
        self.checked += 1

    def vacuous(self):
        self.checked += 1
        self.vacuous_count += 1

    def skip(self):
        self.skipped += 1

    def fail(self, **record) -> TheoremVerdict:
        self.checked += 1
        return TheoremVerdict(
            self.theorem_id, self.checked, self.vacuous_count, FAIL, record
        )

    def done(self) -> TheoremVerdict:
        status = SKIPPED if self.checked == 0 and self.skipped > 0 else PASS
        return TheoremVerdict(self.theorem_id, self.checked, self.vacuous_count, status)


# --- shared, memoized plumbing ------------------------------------------------


@lru_cache(maxsize=None)
def _classify(ideal: Ideal, m: int, n: int):
    return closure.classify(ideal, m, n)


def _weakly(ideal, m, n) -> bool:
    return _classify(ideal, m, n).status != STATUS_NOT_WEAKLY


def _closed(ideal, m, n) -> bool:
    return _classify(ideal, m, n).status == STATUS_CLOSED


def _weakly_only(ideal, m, n) -> bool:
    return _classify(ideal, m, n).status == STATUS_WEAKLY_ONLY


@lru_cache(maxsize=None)
def _grid(ring: FiniteRing, x, grid_max: int):
    table = vnr_grid(ring, x, grid_max, grid_max)
    return table


def _family_rings(family: InstanceFamily, order_cap=None, kind=None):
    rings = []
    for spec in family.ring_specs:
        ring = build_ring(spec, family.max_order)
        if order_cap is not None and ring.order > order_cap:
            continue
        if kind is not None and not isinstance(ring, kind):
            continue
        rings.append(ring)
    return rings


def _proper_ideals(ring: FiniteRing, family: InstanceFamily):
    return enumerate_ideals(ring, family.max_generators).proper


def _complete_proper_ideals(ring: FiniteRing, family: InstanceFamily):
    enumeration = enumerate_ideals(ring, family.max_generators)
    return (enumeration.proper, enumeration.complete)


def _serialize(value):
    if isinstance(value, tuple):
        return [_serialize(part) for part in value]
    return value


def _instance(ring, ideal=None, m=None, n=None, **extra) -> dict:
    record: dict = {"ring": ring.spec_str}
    if ideal is not None:
        record["ideal_gens"] = [_serialize(g) for g in ideal.generators]
        record["ideal"] = [_serialize(e) for e in ideal.members]
    if m is not None:
        record["m"] = m
    if n is not None:
        record["n"] = n
    for key, value in extra.items():
        record[key] = _serialize(value) if isinstance(value, tuple) else value
    return record


def _is_prime_number(n: int) -> bool:
    factors = _factorize(n)
    return len(factors) == 1 and factors[0][1] == 1


# --- basic closure facts (T-BASIC-1..4) ---------------------------------------


def _check_basic_1(family):
    tally = _Tally("T-BASIC-1")
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for n in family.n_values:
                try:
                    hyp, _ = is_n_absorbing(ideal, n, weak=True, budget=family.absorbing_budget)
                except AbsorbingBudgetError:
                    tally.skip()
                    continue
                if not hyp:
                    tally.vacuous()
                    continue
                if not _weakly(ideal, n + 1, n):
                    return tally.fail(
                        **_instance(ring, ideal, n + 1, n),
                        detail="weakly n-absorbing ideal is not weakly (n+1,n)-closed",
                    )
                tally.substantive()
    return tally.done()


def _check_basic_2(family):
    tally = _Tally("T-BASIC-2")
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for m, n in family.all_pairs:
                if not _weakly(ideal, m, n):
                    tally.vacuous()
                    continue
                for n_bigger in range(n, family.grid_max + 1):
                    if not _weakly(ideal, m, n_bigger):
                        return tally.fail(
                            **_instance(ring, ideal, m, n),
                            n_bigger=n_bigger,
                            detail="weak closedness is not monotone in the target exponent",
                        )
                tally.substantive()
    return tally.done()


def _check_basic_3(family):
    tally = _Tally("T-BASIC-3")
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for n in family.n_values:
                try:
                    hyp, _ = is_n_absorbing(ideal, n, weak=True, budget=family.absorbing_budget)
                except AbsorbingBudgetError:
                    tally.skip()
                    continue
                if not hyp:
                    tally.vacuous()
                    continue
                for m in range(1, family.grid_max + 1):
                    if not _weakly(ideal, m, n):
                        return tally.fail(
                            **_instance(ring, ideal, m, n),
                            detail="weakly n-absorbing ideal is not weakly (m,n)-closed",
                        )
                tally.substantive()
    return tally.done()


def _check_basic_4(family):
    tally = _Tally("T-BASIC-4")
    for ring in _family_rings(family):
        ideals = _proper_ideals(ring, family)
        for i, first in enumerate(ideals):
            for second in ideals[i + 1 :]:
                for m, n in family.all_pairs:
                    if not (_weakly(first, m, n) and _weakly(second, m, n)):
                        tally.vacuous()
                        continue
                    meet = intersect_ideals(first, second)
                    if not _weakly(meet, m, n):
                        return tally.fail(
                            **_instance(ring, first, m, n),
                            other_ideal=[_serialize(e) for e in second.members],
                            detail="intersection of weakly closed ideals is not weakly closed",
                        )
                    tally.substantive()
    return tally.done()


# --- unbreakable-zero consequences (T-SHIFT, T-NIL, T-NIL-CHAR) ----------------


def _check_shift(family):
    tally = _Tally("T-SHIFT")
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for m, n in family.mn_pairs:
                if _classify(ideal, m, n).status == STATUS_NOT_WEAKLY:
                    tally.vacuous()
                    continue
                witnesses = unbreakable_zero_elements(ideal, m, n)
                if not witnesses:
                    tally.vacuous()
                    continue
                for a in witnesses:
                    for i in ideal.members:
                        if ring.power(ring.add(a, i), m) != ring.zero:
                            return tally.fail(
                                **_instance(ring, ideal, m, n),
                                element=_serialize(a),
                                shifted_by=_serialize(i),
                                detail="(a + i)**m != 0 for an unbreakable-zero a and i in I",
                            )
                tally.substantive()
    return tally.done()


def _check_nil(family):
    tally = _Tally("T-NIL")
    for ring in _family_rings(family):
        nil = ring.nilpotents
        for ideal in _proper_ideals(ring, family):
            for m, n in family.all_pairs:
                if not _weakly_only(ideal, m, n):
                    tally.vacuous()
                    continue
                if not ideal.elements <= nil:
                    stray = next(e for e in ideal.members if e not in nil)
                    return tally.fail(
                        **_instance(ring, ideal, m, n),
                        element=_serialize(stray),
                        detail="weakly-only ideal is not contained in the nilradical",
                    )
                tally.substantive()
    return tally.done()


def _check_nil_char(family):
    tally = _Tally("T-NIL-CHAR")
    for ring in _family_rings(family):
        char = ring.characteristic
        for ideal in _proper_ideals(ring, family):
            for m, n in family.mn_pairs:
                if not (_weakly_only(ideal, m, n) and char == m and _is_prime_number(m)):
                    tally.vacuous()
                    continue
                for i in ideal.members:
                    if ring.power(i, m) != ring.zero:
                        return tally.fail(
                            **_instance(ring, ideal, m, n),
                            element=_serialize(i),
                            detail="i**m != 0 despite prime characteristic m",
                        )
                tally.substantive()
    return tally.done()


# --- stability under quotients (T-QUOT) ---------------------------------------


def _check_quot(family):
    tally = _Tally("T-QUOT")
    for ring in _family_rings(family, order_cap=family.quotient_order_cap):
        ideals = _proper_ideals(ring, family)
        for small in ideals:
            quotient = quotient_ring(ring, small)
            for big in ideals:
                if not small.elements <= big.elements:
                    continue
                image = image_ideal(quotient, big)
                for m, n in family.mn_pairs:
                    if not _weakly(big, m, n):
                        tally.vacuous()
                        continue
                    if not _weakly(image, m, n):
                        return tally.fail(
                            **_instance(ring, big, m, n),
                            modulus_ideal=[_serialize(e) for e in small.members],
                            detail="image of a weakly closed ideal is not weakly closed in the quotient",
                        )
                    tally.substantive()
    return tally.done()


# --- product rings (T-PROD-CLOSED, T-PROD-FACTOR, T-PROD-WEAK) -----------------


def _check_prod_closed(family):
    tally = _Tally("T-PROD-CLOSED")
    for ring in _family_rings(family, kind=ProductRing):
        for ideal in _proper_ideals(ring, family):
            left, right = split_product_ideal(ring, ideal)
            for m, n in family.all_pairs:
                direct = _closed(ideal, m, n)
                condition = (not left.is_proper or _closed(left, m, n)) and (
                    not right.is_proper or _closed(right, m, n)
                )
                if direct != condition:
                    return tally.fail(
                        **_instance(ring, ideal, m, n),
                        detail=f"direct closedness {direct} but factor condition {condition}",
                    )
                if direct:
                    tally.substantive()
                else:
                    tally.vacuous()
    return tally.done()


def _check_prod_factor(family):
    tally = _Tally("T-PROD-FACTOR")
    for ring in _family_rings(family, kind=ProductRing):
        left_enum = enumerate_ideals(ring.left, family.max_generators)
        right_enum = enumerate_ideals(ring.right, family.max_generators)
        full_left = ideal_from_generators(ring.left, (ring.left.one,))
        full_right = ideal_from_generators(ring.right, (ring.right.one,))
        sides = [(factor, full_right, "left") for factor in left_enum.ideals if factor.is_proper]
        sides += [(factor, full_left, "right") for factor in right_enum.ideals if factor.is_proper]
        for factor, full, side in sides:
            if side == "left":
                lifted = product_ideal(ring, factor, full)
            else:
                lifted = product_ideal(ring, full, factor)
            for m, n in family.all_pairs:
                weak_lifted = _weakly(lifted, m, n)
                closed_factor = _closed(factor, m, n)
                closed_lifted = _closed(lifted, m, n)
                if not (weak_lifted == closed_factor == closed_lifted):
                    return tally.fail(
                        **_instance(ring, lifted, m, n),
                        detail=(
                            f"equivalence broken: weakly(IxR)={weak_lifted}, "
                            f"closed(I)={closed_factor}, closed(IxR)={closed_lifted}"
                        ),
                    )
                if weak_lifted:
                    tally.substantive()
                else:
                    tally.vacuous()
    return tally.done()


def _nonzero_power_lands_in(ring, ideal, m) -> bool:
    zero = ring.zero
    for x in ring.elements:
        xm = ring.power(x, m)
        if xm != zero and xm in ideal.elements:
            return True
    return False


def _powers_into_ideal_vanish(ring, ideal, m) -> bool:
    # y**m in I forces y**m == 0
    zero = ring.zero
    for y in ring.elements:
        ym = ring.power(y, m)
        if ym in ideal.elements and ym != zero:
            return False
    return True


def _add2_condition(side_ideal, other_ideal, m, n) -> bool:
    side_ring = side_ideal.ring
    other_ring = other_ideal.ring
    if not _weakly_only(side_ideal, m, n):
        return False
    if not _powers_into_ideal_vanish(other_ring, other_ideal, m):
        return False
    if _nonzero_power_lands_in(side_ring, side_ideal, m):
        return _closed(other_ideal, m, n)
    return True


def _check_prod_weak(family):
    tally = _Tally("T-PROD-WEAK")
    for ring in _family_rings(family, kind=ProductRing):
        for ideal in _proper_ideals(ring, family):
            left, right = split_product_ideal(ring, ideal)
            for m, n in family.mn_pairs:
                direct = _weakly_only(ideal, m, n)
                condition = (
                    left.is_proper
                    and right.is_proper
                    and (
                        _add2_condition(left, right, m, n)
                        or _add2_condition(right, left, m, n)
                    )
                )
                if direct != condition:
                    return tally.fail(
                        **_instance(ring, ideal, m, n),
                        detail=f"direct weakly-only {direct} but factor conditions {condition}",
                    )
                if direct:
                    tally.substantive()
                else:
                    tally.vacuous()
    return tally.done()


# --- trivial extensions (T-IDEALIZATION) ---------------------------------------


def extend_ideal_to_idealization(ring: IdealizationRing, base_ideal: Ideal) -> Ideal:
    """The ideal I (+) M of Z_n (+) Z_d, for I an ideal of Z_n."""
    elements = frozenset(
        (i, x) for i in base_ideal.elements for x in range(ring.d)
    )
    gens = tuple((g, 0) for g in base_ideal.generators)
    if ring.d > 1:
        gens += ((0, 1),)
    return Ideal(ring, elements, gens)


def _module_annihilated(ring: IdealizationRing, a: int, m: int) -> bool:
    # m * (a**(m-1) * x) == 0 in Z_d for every x
    scale = pow(a, m - 1, ring.d)
    return all((m * scale * x) % ring.d == 0 for x in range(ring.d))


def _check_idealization(family):
    tally = _Tally("T-IDEALIZATION")
    for ring in _family_rings(family, kind=IdealizationRing):
        base = build_ring(CyclicZ(ring.n), family.max_order)
        for base_ideal in _proper_ideals(base, family):
            extended = extend_ideal_to_idealization(ring, base_ideal)
            for m, n in family.mn_pairs:
                direct = _weakly_only(extended, m, n)
                condition = _weakly_only(base_ideal, m, n) and all(
                    _module_annihilated(ring, a, m)
                    for a in unbreakable_zero_elements(base_ideal, m, n)
                )
                if direct != condition:
                    return tally.fail(
                        **_instance(ring, extended, m, n),
                        base_ideal=[_serialize(e) for e in base_ideal.members],
                        detail=f"direct weakly-only {direct} but module criterion {condition}",
                    )
                if direct:
                    tally.substantive()
                else:
                    tally.vacuous()
    return tally.done()


# --- principal ideals of Z_(p**c) (T-PRINCIPAL) --------------------------------


def _check_principal(family):
    tally = _Tally("T-PRINCIPAL")
    for p, c in family.principal_cases:
        modulus = p ** c
        ring = build_ring(CyclicZ(modulus), family.max_order)
        for k in range(1, c):
            pairs = [(m, n) for m, n in family.mn_pairs if m < k]
            if not pairs:
                continue
            ideal = ideal_from_generators(ring, (pow(p, k),))
            for m, n in pairs:
                q, r = divmod(k, m)
                condition = r != 0 and k + 1 <= c <= m * (q + 1) and n * (q + 1) < k
                direct = _weakly_only(ideal, m, n)
                if direct != condition:
                    return tally.fail(
                        **_instance(ring, ideal, m, n),
                        p=p,
                        c=c,
                        k=k,
                        detail=f"arithmetic conditions {condition} but direct status {direct}",
                    )
                if direct:
                    tally.substantive()
                else:
                    tally.vacuous()
    return tally.done()


# --- nilradical-bounded ideals (T-NILIDEAL) -------------------------------------


def _check_nilideal(family):
    tally = _Tally("T-NILIDEAL")
    for ring in _family_rings(family):
        ideals, complete = _complete_proper_ideals(ring, family)
        if not complete:
            tally.skip()
            continue
        nil = ring.nilpotents
        nil_ideals = [i for i in ideals if i.elements <= nil]
        for m, n in family.mn_pairs:
            all_weak = all(_weakly(i, m, n) for i in nil_ideals)
            vanishing = all(ring.power(w, m) == ring.zero for w in nil)
            if all_weak != vanishing:
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail=f"nil-contained ideals all weakly closed: {all_weak}, "
                    f"w**m == 0 on the nilradical: {vanishing}",
                )
            if all_weak:
                tally.substantive()
            else:
                tally.vacuous()
    return tally.done()


# --- element-level regularity facts (T-VNRFACTS-1..7, T-BK) ---------------------


def _grid_rings(family):
    return _family_rings(family, order_cap=family.grid_order_cap)


def _check_vnrfacts_1(family):
    tally = _Tally("T-VNRFACTS-1")
    for ring in _grid_rings(family):
        for x in ring.elements:
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in grid.items():
                if m <= n and not ok:
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        detail="element not (m,n)-vnr despite m <= n",
                    )
            tally.substantive()
    return tally.done()


def _check_vnrfacts_2(family):
    tally = _Tally("T-VNRFACTS-2")
    for ring in _grid_rings(family):
        for x in ring.elements:
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in sorted(grid.items()):
                if not ok:
                    tally.vacuous()
                    continue
                for m_smaller in range(1, m + 1):
                    for n_bigger in range(n, family.grid_max + 1):
                        if not grid[(m_smaller, n_bigger)]:
                            return tally.fail(
                                **_instance(ring, m=m, n=n),
                                element=_serialize(x),
                                weaker_pair=(m_smaller, n_bigger),
                                detail="vnr does not propagate to smaller m / larger n",
                            )
                tally.substantive()
    return tally.done()


def _check_vnrfacts_3(family):
    tally = _Tally("T-VNRFACTS-3")
    for ring in _grid_rings(family):
        special = ring.units | {ring.zero}
        for x in ring.elements:
            if x not in special:
                tally.vacuous()
                continue
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in grid.items():
                if not ok:
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        detail="unit or zero element fails to be (m,n)-vnr",
                    )
            tally.substantive()
    return tally.done()


def _check_vnrfacts_4(family):
    # the quantified set (neither zero, a zero-divisor, nor a unit) is
    # empty in finite rings; the biconditional is still checked honestly
    tally = _Tally("T-VNRFACTS-4")
    for ring in _grid_rings(family):
        outside = [
            x
            for x in ring.elements
            if x != ring.zero and x not in ring.zero_divisors and x not in ring.units
        ]
        for x in ring.elements:
            if x not in outside:
                tally.vacuous()
                continue
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in grid.items():
                if ok != (m <= n):
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        detail="regular element outside Z(R) and U(R) breaks the m <= n rule",
                    )
            tally.substantive()
    return tally.done()


def _check_vnrfacts_5(family):
    tally = _Tally("T-VNRFACTS-5")
    for ring in _grid_rings(family):
        for x in ring.elements:
            grid = _grid(ring, x, family.grid_max)
            for n in range(1, family.grid_max + 1):
                if ring.power(x, n) != ring.zero:
                    tally.vacuous()
                    continue
                for m in range(1, family.grid_max + 1):
                    if not grid[(m, n)]:
                        return tally.fail(
                            **_instance(ring, m=m, n=n),
                            element=_serialize(x),
                            detail="x**n == 0 but x is not (m,n)-vnr",
                        )
                tally.substantive()
    return tally.done()


def _check_vnrfacts_6(family):
    tally = _Tally("T-VNRFACTS-6")
    for ring in _grid_rings(family):
        for x in ring.elements:
            k = ring.nilpotency_index(x)
            if k is None or k < 2:
                tally.vacuous()
                continue
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in grid.items():
                if ok != (m <= n or n >= k):
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        nilpotency_index=k,
                        detail="vnr pattern disagrees with the nilpotency index shape",
                    )
            tally.substantive()
    return tally.done()


def _check_vnrfacts_7(family):
    tally = _Tally("T-VNRFACTS-7")
    for ring in _grid_rings(family):
        for x in ring.elements:
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in sorted(grid.items()):
                if not (ok and m > n):
                    tally.vacuous()
                    continue
                if not is_mn_vnr(ring, x, m + 1, n)[0]:
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        detail="(m,n)-vnr with m > n but not (m+1,n)-vnr",
                    )
                for m_any in range(1, family.grid_max + 1):
                    for n_bigger in range(n, family.grid_max + 1):
                        if not grid[(m_any, n_bigger)]:
                            return tally.fail(
                                **_instance(ring, m=m, n=n),
                                element=_serialize(x),
                                weaker_pair=(m_any, n_bigger),
                                detail="(m,n)-vnr with m > n but not (m',n')-vnr for n' >= n",
                            )
                tally.substantive()
        # ring-level rider: von Neumann regular iff (m,n)-regular for all pairs
        regular_21 = is_mn_regular_ring(ring, 2, 1)
        regular_all = all(
            is_mn_regular_ring(ring, m, n)
            for m in range(1, family.grid_max + 1)
            for n in range(1, family.grid_max + 1)
        )
        if regular_21 != regular_all:
            return tally.fail(
                **_instance(ring),
                detail=f"(2,1)-regular is {regular_21} but all-pairs regular is {regular_all}",
            )
        tally.substantive()
    return tally.done()


def _check_bk(family):
    tally = _Tally("T-BK")
    for ring in _grid_rings(family):
        for x in ring.elements:
            profile = vnr_profile_element(ring, x)
            grid = _grid(ring, x, family.grid_max)
            for (m, n), ok in grid.items():
                if ok != profile.contains(m, n):
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        element=_serialize(x),
                        k=profile.k,
                        detail="grid does not match the B_k shape",
                    )
            if profile.k > 1 and is_mn_vnr(ring, x, profile.k, profile.k - 1)[0]:
                return tally.fail(
                    **_instance(ring),
                    element=_serialize(x),
                    k=profile.k,
                    detail="profile k is not minimal",
                )
            tally.substantive()
    return tally.done()


# --- ring-level regularity (T-STRONG, T-ALLWEAK, T-ALLCLOSED, T-DIM0,
#     T-REDUCED, T-SPR, T-ZPK, T-PRODMAX) ---------------------------------------


def _check_strong(family):
    tally = _Tally("T-STRONG")
    for ring in _family_rings(family):
        for m, n in family.mn_pairs:
            if not is_mn_regular_ring(ring, m, n):
                tally.vacuous()
                continue
            for m_any in range(1, family.grid_max + 1):
                for n_bigger in range(n, family.grid_max + 1):
                    if not is_mn_regular_ring(ring, m_any, n_bigger):
                        return tally.fail(
                            **_instance(ring, m=m, n=n),
                            weaker_pair=(m_any, n_bigger),
                            detail="(m,n)-regular ring not (m',n')-regular for n' >= n",
                        )
            if not is_strongly_pi_regular(ring)[0]:
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail="(m,n)-regular ring is not strongly pi-regular",
                )
            if krull_dim(ring, family.max_generators) != 0:
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail="(m,n)-regular ring has nonzero dimension",
                )
            tally.substantive()
    return tally.done()


def _nonnil_vnr_and_mth_powers_vanish(ring, m, n) -> bool:
    nil = ring.nilpotents
    if any(ring.power(w, m) != ring.zero for w in nil):
        return False
    return all(is_mn_vnr(ring, x, m, n)[0] for x in ring.elements if x not in nil)


def _check_allweak(family):
    tally = _Tally("T-ALLWEAK")
    for ring in _family_rings(family):
        ideals, complete = _complete_proper_ideals(ring, family)
        for m, n in family.mn_pairs:
            characterization = _nonnil_vnr_and_mth_powers_vanish(ring, m, n)
            if not complete:
                # can only assert one direction without the full ideal list
                if characterization and not all(_weakly(i, m, n) for i in ideals):
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        detail="characterization holds but an enumerated ideal is not weakly closed",
                    )
                tally.vacuous()
                continue
            direct = all(_weakly(i, m, n) for i in ideals)
            if direct != characterization:
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail=f"all ideals weakly closed: {direct}, "
                    f"element characterization: {characterization}",
                )
            if direct:
                tally.substantive()
            else:
                tally.vacuous()
    return tally.done()


def _check_allclosed(family):
    tally = _Tally("T-ALLCLOSED")
    for ring in _family_rings(family):
        ideals, complete = _complete_proper_ideals(ring, family)
        for m, n in family.all_pairs:
            regular = is_mn_regular_ring(ring, m, n)
            if not complete:
                if regular and not all(_closed(i, m, n) for i in ideals):
                    return tally.fail(
                        **_instance(ring, m=m, n=n),
                        detail="(m,n)-regular ring has a non-closed enumerated ideal",
                    )
                tally.vacuous()
                continue
            direct = all(_closed(i, m, n) for i in ideals)
            if direct != regular:
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail=f"all ideals closed: {direct}, ring regular: {regular}",
                )
            if direct:
                tally.substantive()
            else:
                tally.vacuous()
    return tally.done()


def _check_dim0(family):
    tally = _Tally("T-DIM0")
    for ring in _family_rings(family):
        ideals, complete = _complete_proper_ideals(ring, family)
        if not complete:
            tally.skip()
            continue
        dim = krull_dim(ring, family.max_generators)
        nil = ring.nilpotents
        for m, n in family.mn_pairs:
            all_closed = all(_closed(i, m, n) for i in ideals)
            regular = is_mn_regular_ring(ring, m, n)
            structural = dim == 0 and all(ring.power(w, n) == ring.zero for w in nil)
            if not (all_closed == regular == structural):
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail=(
                        f"three-way equivalence broken: all ideals closed {all_closed}, "
                        f"regular {regular}, dim-0-with-vanishing-nil {structural}"
                    ),
                )
            if all_closed:
                tally.substantive()
            else:
                tally.vacuous()
    return tally.done()


def _check_reduced(family):
    tally = _Tally("T-REDUCED")
    for ring in _family_rings(family):
        if ring.nilpotents != frozenset({ring.zero}):
            tally.vacuous()
            continue
        ideals, complete = _complete_proper_ideals(ring, family)
        if not complete:
            tally.skip()
            continue
        for m, n in family.all_pairs:
            all_weak = all(_weakly(i, m, n) for i in ideals)
            all_closed = all(_closed(i, m, n) for i in ideals)
            regular = is_mn_regular_ring(ring, m, n)
            if not (all_weak == all_closed == regular):
                return tally.fail(
                    **_instance(ring, m=m, n=n),
                    detail=(
                        f"reduced-ring equivalence broken: weakly {all_weak}, "
                        f"closed {all_closed}, regular {regular}"
                    ),
                )
            tally.substantive()
    return tally.done()


def _check_spr(family):
    tally = _Tally("T-SPR")
    for ring in _family_rings(family, order_cap=family.spr_order_cap):
        # every power value x**m already occurs for some m <= order + 1,
        # so the bounded sweeps below decide the unbounded quantifiers
        bound = ring.order + 1
        strongly, smallest = is_strongly_pi_regular(ring)
        some_pair = any(
            is_mn_regular_ring(ring, m, n)
            for n in range(1, bound + 1)
            for m in (n + 1, 2 * n)
        )
        uniform_n = any(
            all(is_mn_regular_ring(ring, m, n) for m in range(1, bound + 1))
            for n in range(1, bound + 1)
        )
        max_nil_index = max(ring.nilpotency_index(w) for w in ring.nilpotents)
        structural = krull_dim(ring, family.max_generators) == 0 and max_nil_index <= bound
        if not (strongly == some_pair == uniform_n == structural):
            return tally.fail(
                **_instance(ring),
                detail=(
                    f"strongly pi-regular equivalence broken: direct {strongly}, "
                    f"some-pair {some_pair}, uniform-n {uniform_n}, structural {structural}"
                ),
            )
        if strongly and smallest != vnr_profile_ring(ring).k:
            return tally.fail(
                **_instance(ring),
                detail=f"smallest strongly-pi exponent {smallest} differs from profile k",
            )
        tally.substantive()
    return tally.done()


def _check_zpk(family):
    tally = _Tally("T-ZPK")
    for ring in _family_rings(family, kind=CyclicRing):
        factors = _factorize(ring.n)
        if len(factors) != 1:
            continue
        _, k = factors[0]
        profile = vnr_profile_ring(ring)
        if profile.k != k:
            return tally.fail(
                **_instance(ring),
                expected_k=k,
                got_k=profile.k,
                detail="Z_(p**k) does not have profile B_k",
            )
        tally.substantive()
    return tally.done()


def _check_prodmax(family):
    tally = _Tally("T-PRODMAX")
    for ring in _family_rings(family, kind=ProductRing):
        expected = max(vnr_profile_ring(ring.left).k, vnr_profile_ring(ring.right).k)
        profile = vnr_profile_ring(ring)
        if profile.k != expected:
            return tally.fail(
                **_instance(ring),
                expected_k=expected,
                got_k=profile.k,
                detail="product profile is not the factor maximum",
            )
        tally.substantive()
    return tally.done()


# --- catalog -------------------------------------------------------------------

CATALOG: dict = {
    "T-BASIC-1": ("weakly n-absorbing ideals are weakly (n+1,n)-closed", _check_basic_1),
    "T-BASIC-2": ("weak (m,n)-closedness is monotone in n", _check_basic_2),
    "T-BASIC-3": ("weakly n-absorbing ideals are weakly (m,n)-closed for every m", _check_basic_3),
    "T-BASIC-4": ("intersections of weakly (m,n)-closed ideals stay weakly closed", _check_basic_4),
    "T-SHIFT": ("(a + i)**m == 0 for unbreakable-zero a and i in I", _check_shift),
    "T-NIL": ("weakly-only ideals live inside the nilradical", _check_nil),
    "T-NIL-CHAR": ("with prime characteristic m, i**m == 0 on weakly-only ideals", _check_nil_char),
    "T-QUOT": ("weak closedness passes to images in quotient rings", _check_quot),
    "T-PROD-CLOSED": ("closed ideals of products are exactly products of closed factors", _check_prod_closed),
    "T-PROD-FACTOR": ("I x R weakly closed iff I closed iff I x R closed", _check_prod_factor),
    "T-PROD-WEAK": ("weakly-only ideals of products match the factor conditions", _check_prod_weak),
    "T-IDEALIZATION": ("weakly-only ideals I(+)M match the module annihilation criterion", _check_idealization),
    "T-PRINCIPAL": ("weakly-only principal quotient ideals match the exponent arithmetic", _check_principal),
    "T-NILIDEAL": ("nil-contained ideals all weakly closed iff w**m == 0 on the nilradical", _check_nilideal),
    "T-VNRFACTS-1": ("every element is (m,n)-vnr when m <= n", _check_vnrfacts_1),
    "T-VNRFACTS-2": ("vnr propagates to smaller m and larger n", _check_vnrfacts_2),
    "T-VNRFACTS-3": ("units and zero are (m,n)-vnr for every pair", _check_vnrfacts_3),
    "T-VNRFACTS-4": ("outside Z(R) and U(R), vnr happens only for m <= n", _check_vnrfacts_4),
    "T-VNRFACTS-5": ("x**n == 0 makes x (m,n)-vnr for every m", _check_vnrfacts_5),
    "T-VNRFACTS-6": ("nilpotents of index k have the (m <= n or n >= k) pattern", _check_vnrfacts_6),
    "T-VNRFACTS-7": ("(m,n)-vnr with m > n extends to (m+1,n) and all n' >= n", _check_vnrfacts_7),
    "T-STRONG": ("(m,n)-regular rings are (m',n')-regular for n' >= n and strongly pi-regular", _check_strong),
    "T-ALLWEAK": ("all ideals weakly closed iff non-nilpotents vnr and w**m == 0 on nil", _check_allweak),
    "T-ALLCLOSED": ("all ideals closed iff the ring is (m,n)-regular", _check_allclosed),
    "T-DIM0": ("all-closed, regular, and dim-0-with-w**n==0 coincide", _check_dim0),
    "T-REDUCED": ("on reduced rings weakly-all, closed-all, and regular coincide", _check_reduced),
    "T-SPR": ("the four strongly-pi-regular characterizations coincide", _check_spr),
    "T-BK": ("element vnr grids have the B_k shape with minimal k", _check_bk),
    "T-ZPK": ("Z_(p**k) has ring profile B_k", _check_zpk),
    "T-PRODMAX": ("product profiles are the factor maximum", _check_prodmax),
}

THEOREM_IDS = tuple(CATALOG)


def verify_theorem(theorem_id: str, family: InstanceFamily | None = None) -> TheoremVerdict:
    if theorem_id not in CATALOG:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    if family is None:
        family = default_family()
    _, checker = CATALOG[theorem_id]
    return checker(family)


def _verify_task(args):
    theorem_id, family = args
    return verify_theorem(theorem_id, family)


def verify_many(
    theorem_ids, family: InstanceFamily | None = None, workers: int = 1
) -> list:
    """Run several catalog entries; `workers` > 1 fans theorems out to a
    process pool (results keep the requested order either way)."""
    ids = list(theorem_ids)
    for theorem_id in ids:
        if theorem_id not in CATALOG:
            raise KeyError(f"unknown theorem id {theorem_id!r}")
    if family is None:
        family = default_family()
    if workers <= 1 or len(ids) <= 1:
        return [verify_theorem(theorem_id, family) for theorem_id in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_task, [(theorem_id, family) for theorem_id in ids]))


def replay_counterexample(verdict: TheoremVerdict, family: InstanceFamily | None = None) -> bool:
    """Re-run a failing verdict's checker on just the recorded instance;
    True when the failure reproduces."""
    if verdict.status != FAIL or not verdict.counterexample:
        raise ValueError("only failing verdicts with a counterexample can be replayed")
    if family is None:
        family = default_family()
    record = verdict.counterexample
    narrow = family
    if "ring" in record:
        narrow = replace(narrow, ring_specs=(parse_ring_spec(record["ring"]),))
    if "p" in record and "c" in record:
        narrow = replace(narrow, principal_cases=((record["p"], record["c"]),))
    if "m" in record and "n" in record:
        m, n = record["m"], record["n"]
        if n < m:
            narrow = replace(narrow, mn_pairs=((m, n),), spot_pairs=())
        else:
            narrow = replace(narrow, mn_pairs=(), spot_pairs=((m, n),))
    elif "n" in record:
        n = record["n"]
        narrow = replace(narrow, mn_pairs=((n + 1, n),), spot_pairs=())
    replayed = verify_theorem(verdict.theorem_id, narrow)
    return replayed.status == FAIL


# --- counterexample search for non-theorems --------------------------------------

SEARCH_PREDICATES = (
    "weak-not-closed-exists",
    "weak-not-monotone-in-m",
    "weakly-closed-not-weakly-radical",
)


def search_counterexamples(predicate_id: str, family: InstanceFamily | None = None) -> list:
    """Witnesses that separate the weak notions from the plain ones; all
    witnesses in the family are returned, in canonical order."""
    if family is None:
        family = default_family()
    if predicate_id == "weak-not-closed-exists":
        return _search_weak_not_closed(family)
    if predicate_id == "weak-not-monotone-in-m":
        return _search_not_monotone(family)
    if predicate_id == "weakly-closed-not-weakly-radical":
        return _search_not_weakly_radical(family)
    raise KeyError(f"unknown predicate {predicate_id!r}")


def _search_weak_not_closed(family):
    witnesses = []
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for m, n in family.mn_pairs:
                report = _classify(ideal, m, n)
                if report.status == STATUS_WEAKLY_ONLY:
                    witnesses.append(report.to_record())
    return witnesses


def _search_not_monotone(family):
    witnesses = []
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for n in family.n_values:
                weak_at = {
                    m: _weakly(ideal, m, n) for m in range(1, family.grid_max + 1)
                }
                for m, ok in weak_at.items():
                    if not ok:
                        continue
                    for m_smaller in range(n + 1, m):
                        if not weak_at[m_smaller]:
                            witnesses.append(
                                _instance(ring, ideal, m, n, m_smaller=m_smaller)
                            )
    return witnesses


def _search_not_weakly_radical(family):
    witnesses = []
    for ring in _family_rings(family):
        for ideal in _proper_ideals(ring, family):
            for m, n in family.mn_pairs:
                if not _weakly(ideal, m, n):
                    continue
                ok, witness = closure.is_weakly_radical(ideal)
                if not ok:
                    record = _instance(ring, ideal, m, n)
                    record["radical_witness"] = [_serialize(witness[0]), witness[1]]
                    witnesses.append(record)
    return witnesses
