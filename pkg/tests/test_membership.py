import math

import pytest
from hypothesis import given, settings, strategies as st

from c4c4det.membership import (
    EVEN14_P,
    EVEN14_Q,
    EVEN15,
    NOT_IN_S,
    ODD_A,
    ODD_ONE,
    a_membership,
    classify,
    v2,
)
from oracles import a_member_brute


def test_v2():
    assert v2(2**14 * 15) == 14
    assert v2(17) == 0
    assert v2(-8) == 3
    assert v2(0) == math.inf


@pytest.mark.parametrize("n, cert", [(585, (5, 13, 3)), (-135, (-3, 5, 3)), (9, None), (25, None)])
def test_a_membership_examples(n, cert):
    assert a_membership(n) == cert


def test_a_membership_matches_definition():
    for n in range(-6000, 6001):
        if n % 16 == 9:
            assert (a_membership(n) is not None) == a_member_brute(n), n


@pytest.mark.parametrize("n, case, params", [
    (33, ODD_ONE, {"m": 2}),
    (-15, ODD_ONE, {"m": -1}),
    (585, ODD_A, {"u": 5, "v": 13, "w": 3, "k": 1, "l": 2, "m": 1}),
    (2**14, NOT_IN_S, {}),
    (2**13 * 3, NOT_IN_S, {}),
    (2**14 * 15, EVEN14_P, {"p": 5, "cofactor": 3}),
    (2**14 * 9, EVEN14_Q, {"q": 3, "cofactor": 1}),
    (2**14 * 45, EVEN14_P, {"p": 5, "cofactor": 9}),
    (2**14 * 3, NOT_IN_S, {}),
    (2**15, EVEN15, {"m": 1}),
    (0, EVEN15, {"m": 0}),
    (-(2**17), EVEN15, {"m": -4}),
    (3, NOT_IN_S, {}),
    (9, NOT_IN_S, {}),
])
def test_classify_examples(n, case, params):
    c = classify(n)
    assert c.case == case
    assert c.params == params


@settings(max_examples=500)
@given(st.integers(-(2**40), 2**40))
def test_certificates_recompose(n):
    c = classify(n)
    if c.in_s:
        assert c.recompose() == n


@given(st.integers(-(2**30), 2**30))
def test_odd_members_are_1_or_9_mod_16(n):
    c = classify(n)
    if n % 2 and c.in_s:
        assert n % 16 in (1, 9)
    if n % 2 == 0 and c.in_s:
        assert v2(n) >= 14


def test_a_certificate_invariants():
    for n in range(-20000, 20001, 16):
        m = n + 9 - n % 16
        c = classify(m)
        if c.case == ODD_A:
            p = c.params
            assert p["u"] % 8 == 5 and p["v"] % 8 == 5 and p["w"] % 4 == 3 and p["w"] >= 3
            assert (p["k"] + p["l"] - p["m"]) % 2 == 0
            assert 8 * p["k"] - 3 == p["u"] and 8 * p["l"] - 3 == p["v"] and 4 * p["m"] - 1 == p["w"]
