"""Closure-property deciders: worked examples plus invariant properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closure_lab import (
    AbsorbingBudgetError,
    CyclicZ,
    build_ring,
    characteristic,
    classify,
    enumerate_ideals,
    ideal_from_generators,
    image_ideal,
    intersect_ideals,
    is_mn_closed,
    is_n_absorbing,
    is_weakly_mn_closed,
    is_weakly_prime,
    is_weakly_radical,
    nilradical,
    parse_ring_spec,
    quotient_ring,
    unbreakable_zero_elements,
)
from closure_lab.closure import _classify_cyclic_vectorized

from _oracles import (
    brute_is_mn_closed,
    brute_is_n_absorbing,
    brute_is_weakly_mn_closed,
    brute_unbreakable,
)
from _strategies import small_rings


def ring(text):
    return build_ring(parse_ring_spec(text))


def ideal(text, *gens):
    r = ring(text)
    return ideal_from_generators(r, gens)


# Z8 with {0, 4}: weakly (3,1)-closed, not (3,1)-closed, not weakly (2,1)-closed
def test_z8_mod4_example():
    i = ideal("Z8", 4)
    assert i.members == (0, 4)
    assert is_weakly_mn_closed(i, 3, 1) == (True, None)
    assert is_mn_closed(i, 3, 1) == (False, 2)
    assert is_weakly_mn_closed(i, 2, 1) == (False, 2)


# Z16 with {0, 8}: weakly (2,1)-closed, not (2,1)-closed, not weakly radical
def test_z16_mod8_example():
    i = ideal("Z16", 8)
    assert i.members == (0, 8)
    assert is_weakly_mn_closed(i, 2, 1) == (True, None)
    ok, witness = is_mn_closed(i, 2, 1)
    assert not ok and witness in (4, 12)
    assert witness == 4  # first in canonical order
    assert is_weakly_radical(i) == (False, (2, 3))


def test_m_at_most_n_is_always_closed():
    for text, gens in [("Z8", (4,)), ("Z12", (6,)), ("Z9", ())]:
        i = ideal(text, *gens)
        for m in range(1, 5):
            for n in range(m, 6):
                assert is_mn_closed(i, m, n) == (True, None)


def test_unbreakable_zero_examples():
    z16 = ideal("Z16", 8)
    assert unbreakable_zero_elements(z16, 2, 1) == (4, 12)
    z8 = ideal("Z8", 4)
    assert unbreakable_zero_elements(z8, 3, 1) == (2, 6)
    closed = ideal("Z6", 3)
    assert unbreakable_zero_elements(closed, 2, 1) == ()


def test_classify_examples():
    rep = classify(ideal("Z8", 4), 3, 1)
    assert (rep.status, rep.witness) == ("weakly_only", 2)
    rep = classify(ideal("Z8", 4), 2, 1)
    assert (rep.status, rep.witness) == ("not_weakly", 2)
    rep = classify(ideal("Z6", 3), 2, 1)
    assert (rep.status, rep.witness) == ("closed", None)


def test_classify_record_field_names():
    record = classify(ideal("Z8", 4), 3, 1).to_record()
    assert record == {
        "ring_spec": "Z8",
        "ideal_gens": [4],
        "m": 3,
        "n": 1,
        "status": "weakly_only",
        "witness": 2,
    }
    record = classify(ideal("Z6", 3), 2, 1).to_record()
    assert "witness" not in record


def test_weakly_prime_examples():
    assert is_weakly_prime(ideal("Z5"))[0]
    ok, witness = is_weakly_prime(ideal("Z8", 4))
    assert not ok and witness == (2, 2)


def test_weakly_radical_vs_weakly_closed():
    # weakly (2,1)-closed does not imply weakly radical
    i = ideal("Z16", 8)
    assert is_weakly_mn_closed(i, 2, 1)[0]
    assert not is_weakly_radical(i)[0]


def test_improper_ideal_rejected():
    z8 = ring("Z8")
    improper = ideal_from_generators(z8, (1,))
    for fn in (
        lambda: classify(improper, 2, 1),
        lambda: is_mn_closed(improper, 2, 1),
        lambda: is_weakly_mn_closed(improper, 2, 1),
        lambda: is_weakly_prime(improper),
        lambda: is_weakly_radical(improper),
        lambda: is_n_absorbing(improper, 2),
    ):
        with pytest.raises(ValueError):
            fn()
    with pytest.raises(ValueError):
        classify(ideal("Z8", 4), 0, 1)


def test_n_absorbing_examples():
    zero = ideal("Z8")
    assert is_n_absorbing(zero, 2, weak=True) == (True, None)
    ok, witness = is_n_absorbing(zero, 2, weak=False)
    assert not ok and witness == (2, 2, 2)


def test_n_absorbing_budget():
    with pytest.raises(AbsorbingBudgetError):
        is_n_absorbing(ideal("Z8"), 2, budget=100)


@settings(max_examples=30, deadline=None)
@given(small_rings, st.data())
def test_deciders_match_oracles(r, data):
    enum = enumerate_ideals(r)
    i = data.draw(st.sampled_from(enum.proper))
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 4))
    assert is_mn_closed(i, m, n)[0] == brute_is_mn_closed(r, i.elements, m, n)
    assert is_weakly_mn_closed(i, m, n)[0] == brute_is_weakly_mn_closed(r, i.elements, m, n)
    assert unbreakable_zero_elements(i, m, n) == brute_unbreakable(r, i.elements, m, n)
    rep = classify(i, m, n)
    assert (rep.status == "closed") == is_mn_closed(i, m, n)[0]
    assert (rep.status != "not_weakly") == is_weakly_mn_closed(i, m, n)[0]


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 300), st.integers(1, 6), st.integers(1, 6), st.data())
def test_vectorized_path_matches_generic(modulus, m, n, data):
    r = build_ring(CyclicZ(modulus))
    i = data.draw(st.sampled_from(enumerate_ideals(r).proper))
    fast = _classify_cyclic_vectorized(i, m, n)
    slow_status = (
        "not_weakly"
        if not is_weakly_mn_closed(i, m, n)[0]
        else ("closed" if is_mn_closed(i, m, n)[0] else "weakly_only")
    )
    assert fast.status == slow_status
    if fast.status == "not_weakly":
        assert fast.witness == is_weakly_mn_closed(i, m, n)[1]
    elif fast.status == "weakly_only":
        assert fast.witness == unbreakable_zero_elements(i, m, n)[0]


@settings(max_examples=15, deadline=None)
@given(small_rings, st.data())
def test_weak_n_absorbing_implies_weakly_closed(r, data):
    if r.order > 12:
        r = build_ring(CyclicZ(r.order % 11 + 2))
    enum = enumerate_ideals(r)
    i = data.draw(st.sampled_from(enum.proper))
    n = data.draw(st.integers(1, 2))
    if brute_is_n_absorbing(r, i.elements, n, weak=True):
        assert is_n_absorbing(i, n, weak=True)[0]
        assert is_weakly_mn_closed(i, n + 1, n)[0]
        for m in range(1, 5):
            assert is_weakly_mn_closed(i, m, n)[0]
    else:
        assert not is_n_absorbing(i, n, weak=True)[0]


@settings(max_examples=30, deadline=None)
@given(small_rings, st.data())
def test_closed_implies_weakly_and_monotone(r, data):
    enum = enumerate_ideals(r)
    i = data.draw(st.sampled_from(enum.proper))
    m = data.draw(st.integers(1, 5))
    n = data.draw(st.integers(1, 4))
    if is_mn_closed(i, m, n)[0]:
        assert is_weakly_mn_closed(i, m, n)[0]
    if is_weakly_mn_closed(i, m, n)[0]:
        for bigger in range(n, 6):
            assert is_weakly_mn_closed(i, m, bigger)[0]


@settings(max_examples=30, deadline=None)
@given(small_rings, st.data())
def test_intersection_of_weakly_closed_is_weakly_closed(r, data):
    enum = enumerate_ideals(r)
    a = data.draw(st.sampled_from(enum.proper))
    b = data.draw(st.sampled_from(enum.proper))
    m = data.draw(st.integers(2, 5))
    n = data.draw(st.integers(1, m - 1))
    if is_weakly_mn_closed(a, m, n)[0] and is_weakly_mn_closed(b, m, n)[0]:
        assert is_weakly_mn_closed(intersect_ideals(a, b), m, n)[0]


@settings(max_examples=30, deadline=None)
@given(small_rings, st.data())
def test_unbreakable_shift_and_nil_containment(r, data):
    enum = enumerate_ideals(r)
    i = data.draw(st.sampled_from(enum.proper))
    m = data.draw(st.integers(2, 5))
    n = data.draw(st.integers(1, m - 1))
    rep = classify(i, m, n)
    if rep.status != "weakly_only":
        return
    witnesses = unbreakable_zero_elements(i, m, n)
    assert witnesses
    # shifting an unbreakable-zero element by the ideal keeps m-th powers zero
    for a in witnesses:
        for j in i.members:
            assert r.power(r.add(a, j), m) == r.zero
    # the ideal itself sits inside the nilradical
    assert i.elements <= nilradical(r)
    # with prime characteristic m, every member has vanishing m-th power
    if characteristic(r) == m and m in (2, 3, 5):
        for j in i.members:
            assert r.power(j, m) == r.zero


@settings(max_examples=25, deadline=None)
@given(small_rings, st.data())
def test_weak_closedness_passes_to_quotients(r, data):
    enum = enumerate_ideals(r)
    big = data.draw(st.sampled_from(enum.proper))
    small_candidates = [j for j in enum.proper if j.elements <= big.elements]
    small = data.draw(st.sampled_from(small_candidates))
    m = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(1, m - 1))
    if not is_weakly_mn_closed(big, m, n)[0]:
        return
    q = quotient_ring(r, small)
    assert is_weakly_mn_closed(image_ideal(q, big), m, n)[0]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([6, 10, 15, 30, 42, 105, 210]), st.data())
def test_reduced_rings_collapse_weak_and_plain(squarefree, data):
    r = build_ring(CyclicZ(squarefree))
    i = data.draw(st.sampled_from(enumerate_ideals(r).proper))
    m = data.draw(st.integers(1, 5))
    n = data.draw(st.integers(1, 5))
    assert is_mn_closed(i, m, n)[0] == is_weakly_mn_closed(i, m, n)[0]
