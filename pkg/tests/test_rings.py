"""Ring realization: arithmetic, structure sets, caps, quotients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closure_lab import (
    CyclicZ,
    ForeignElementError,
    Idealization,
    OrderCapError,
    Quotient,
    SpecError,
    build_ring,
    characteristic,
    element_arithmetic,
    nilpotency_index,
    nilradical,
    parse_ring_spec,
    power,
    units,
    zero_divisors,
)

from _oracles import (
    brute_additive_order,
    brute_nilpotents,
    brute_power,
    brute_units,
    brute_zero_divisors,
    exhaustive_ring_axioms,
)
from _strategies import small_rings


def ring(text):
    return build_ring(parse_ring_spec(text))


def test_build_orders():
    assert ring("Z8").order == 8
    assert ring("Z8 (+) Z4").order == 32
    assert ring("Z8 x Z4").order == 32


def test_order_cap():
    with pytest.raises(OrderCapError):
        build_ring(CyclicZ(2 ** 21))
    with pytest.raises(OrderCapError):
        build_ring(CyclicZ(100), max_order=64)
    assert build_ring(CyclicZ(100), max_order=128).order == 100


def test_arithmetic_examples():
    assert ring("Z8").mul(2, 4) == 0
    # trivial extension product rule: (2,1)(2,3) = (4, 2*3 + 2*1 mod 4)
    assert ring("Z8 (+) Z4").mul((2, 1), (2, 3)) == (4, 0)
    assert ring("Z8 x Z4").add((7, 3), (1, 1)) == (0, 0)


def test_power_examples():
    assert power(ring("Z16"), 2, 3) == 8
    assert power(ring("Z8"), 2, 3) == 0
    for r in (ring("Z8"), ring("Z8 x Z4"), ring("Z8 (+) Z4")):
        for x in r.elements:
            assert r.power(x, 0) == r.one


def test_element_arithmetic_checks_membership():
    z8 = ring("Z8")
    assert element_arithmetic(z8, "add", 7, 1) == 0
    assert element_arithmetic(z8, "neg", 3) == 5
    with pytest.raises(ForeignElementError):
        element_arithmetic(z8, "mul", 2, 9)
    with pytest.raises(ForeignElementError):
        element_arithmetic(ring("Z8 x Z4"), "add", (1, 1), (1, 5))
    with pytest.raises(ValueError):
        element_arithmetic(z8, "add", 1)
    with pytest.raises(ValueError):
        power(z8, 2, -1)


def test_nilradical_examples():
    assert nilradical(ring("Z8")) == brute_nilpotents(ring("Z8")) == {0, 2, 4, 6}
    assert nilradical(ring("Z6")) == {0}
    z44 = ring("Z4 (+) Z4")
    expected = frozenset((a, b) for a in (0, 2) for b in range(4))
    assert nilradical(z44) == brute_nilpotents(z44) == expected


def test_units_and_zero_divisors_examples():
    z8 = ring("Z8")
    assert units(z8) == brute_units(z8) == {1, 3, 5, 7}
    assert zero_divisors(z8) == brute_zero_divisors(z8) == {2, 4, 6}
    assert zero_divisors(ring("Z5")) == frozenset()


def test_nilpotency_index_examples():
    assert nilpotency_index(ring("Z8"), 2) == 3
    assert nilpotency_index(ring("Z16"), 4) == 2
    assert nilpotency_index(ring("Z8"), 3) is None
    assert nilpotency_index(ring("Z8"), 0) == 1


def test_characteristic_examples():
    assert characteristic(ring("Z8")) == 8
    z2x3 = ring("Z2 x Z3")
    assert characteristic(z2x3) == brute_additive_order(z2x3, z2x3.one) == 6
    z4e2 = ring("Z4 (+) Z2")
    assert characteristic(z4e2) == brute_additive_order(z4e2, z4e2.one) == 4


@pytest.mark.parametrize(
    "text", ["Z12", "Z4 x Z4", "Z4 (+) Z2", "Z16/(4)", "Z2 x Z3 x Z2", "Z8 (+) Z2"]
)
def test_ring_axioms_exhaustive(text):
    exhaustive_ring_axioms(ring(text))


def test_ring_axioms_exhaustive_order_64():
    exhaustive_ring_axioms(ring("Z64"))
    exhaustive_ring_axioms(ring("Z8 x Z8"))


@settings(max_examples=40, deadline=None)
@given(small_rings)
def test_structure_sets_match_oracles(r):
    assert r.units == brute_units(r)
    assert r.nilpotents == brute_nilpotents(r)
    assert r.zero_divisors == brute_zero_divisors(r)


@settings(max_examples=40, deadline=None)
@given(small_rings)
def test_partition_units_zero_divisors_zero(r):
    pieces = r.units | r.zero_divisors | {r.zero}
    assert pieces == set(r.elements)
    assert not (r.units & r.zero_divisors)
    assert r.zero not in r.units
    assert r.zero not in r.zero_divisors
    assert r.zero in r.nilpotents
    assert r.nilpotents <= r.zero_divisors | {r.zero}


@settings(max_examples=40, deadline=None)
@given(small_rings)
def test_nilradical_is_an_ideal(r):
    nil = r.nilpotents
    for a in nil:
        for b in nil:
            assert r.add(a, b) in nil
    for a in nil:
        for x in r.elements:
            assert r.mul(x, a) in nil


@settings(max_examples=40, deadline=None)
@given(small_rings, st.integers(0, 12))
def test_power_matches_brute_force(r, t):
    for x in list(r.elements)[:: max(1, r.order // 8)]:
        assert r.power(x, t) == brute_power(r, x, t)


@settings(max_examples=40, deadline=None)
@given(small_rings)
def test_nilpotency_index_is_minimal(r):
    for x in r.elements:
        k = r.nilpotency_index(x)
        if k is None:
            assert x not in r.nilpotents
        else:
            assert brute_power(r, x, k) == r.zero
            assert k == 1 or brute_power(r, x, k - 1) != r.zero


def test_zero_module_part_squares_to_zero():
    # (0, m1)(0, m2) == (0, 0) in every trivial extension
    for n, d in [(4, 2), (8, 4), (12, 6), (6, 6)]:
        r = build_ring(Idealization(n, d))
        for m1 in range(d):
            for m2 in range(d):
                assert r.mul((0, m1), (0, m2)) == (0, 0)


def test_quotient_canonicalization_idempotent():
    q = ring("Z16/(4)")
    for x in q.base.elements:
        rep = q.project(x)
        assert q.project(rep) == rep
    assert q.order == 4


def test_quotient_rejects_improper_ideal():
    with pytest.raises(SpecError, match="improper"):
        build_ring(Quotient(CyclicZ(8), (3,)))
    with pytest.raises(SpecError, match="out of range"):
        build_ring(Quotient(CyclicZ(8), (9,)))


def test_quotient_of_product():
    q = ring("(Z2 x Z2)/(1)")  # literal 1 is the element (0, 1)
    assert q.order == 2
    assert q.base.elements[1] == (0, 1)


def test_build_is_cached():
    assert ring("Z8") is ring("Z8")
    assert ring("Z8") == build_ring(CyclicZ(8))


def test_large_ring_is_lazy_but_usable():
    r = build_ring(CyclicZ(2 ** 17))
    assert "units" not in r.__dict__  # not computed eagerly above 2**16
    assert r.power(3, 5) == 243
    assert 3 in r.units  # computed on demand
