import pytest

from c4c4det.errors import NotAMember
from c4c4det.forms import derive_vectors, dG_factored
from c4c4det.group import dG_direct
from c4c4det.witness import (
    LinearCase,
    synthesize,
    witness_A,
    witness_A_detail,
    witness_even_p,
    witness_even_q,
    witness_linear,
)


@pytest.mark.parametrize("case, m, tup, value", [
    (LinearCase.ODD_ONE, 1, (2,) + (1,) * 15, 17),
    (LinearCase.EVEN15_ODD, 0, (1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0), 32768),
    (LinearCase.EVEN16, 1, (2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0), 65536),
])
def test_witness_linear_examples(case, m, tup, value):
    a = witness_linear(case, m)
    assert a == tup
    assert dG_direct(a) == value


@pytest.mark.parametrize("m", range(-20, 21))
def test_odd_one_structure(m):
    v = derive_vectors(witness_linear(LinearCase.ODD_ONE, m))
    assert v.d == (1, 0, 0, 0, 0, 0, 0, 0)
    assert v.c == (1, 0, 0, 0)


def test_witness_A_examples():
    a = witness_A(5, 13, 3)
    assert a == (1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0)
    assert dG_direct(a) == 585
    a, params = witness_A_detail(13, 13, 7)
    assert params["table"] == 1 and params["k"] == 1 and (params["r"], params["s"]) == (0, 0)
    assert dG_direct(a) == 8281
    a, params = witness_A_detail(-3, 5, 3)
    assert params["table"] == 4
    assert dG_direct(a) == -135


@pytest.mark.parametrize("u, v, w", [(13, 13, 7), (5, 5, 7), (5, 13, 3), (13, 5, 3),
                                     (-3, 5, 11), (-11, 37, 15), (29, 53, 19)])
def test_witness_A_factor_split(u, v, w):
    fb = dG_factored(witness_A(u, v, w))
    assert fb.d4b * fb.d4c == u * v
    assert fb.n0 == w and fb.n1 in (1, -1)


def test_witness_A_rejects_bad_certificate():
    with pytest.raises(ValueError):
        witness_A(5, 13, 7)  # parity fails
    with pytest.raises(ValueError):
        witness_A(5, 45, 3)  # 45 not prime


def test_witness_even_p_examples():
    assert witness_even_p(5, 3) == (1, 1, 0, 1, 1, 1, 2, 1, 1, 0, 0, 0, 1, 0, 1, 1)
    assert dG_direct(witness_even_p(5, 3)) == 2**14 * 15
    assert dG_direct(witness_even_p(5, 1)) == 2**14 * 5
    assert dG_direct(witness_even_p(13, -1)) == -(2**14) * 13
    with pytest.raises(ValueError):
        witness_even_p(3, 1)


def test_witness_even_q_examples():
    assert witness_even_q(3, 1) == (1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 0)
    assert dG_direct(witness_even_q(3, 1)) == 2**14 * 9
    assert dG_direct(witness_even_q(3, -1)) == -(2**14) * 9
    assert dG_direct(witness_even_q(7, 1)) == 2**14 * 49
    with pytest.raises(ValueError):
        witness_even_q(5, 1)


@pytest.mark.parametrize("p", [5, 13, 29, 37, 53, 61, 101, 109])
@pytest.mark.parametrize("cofactor", [-7, -5, -3, -1, 1, 3, 5, 7])
def test_witness_even_p_family(p, cofactor):
    assert dG_direct(witness_even_p(p, cofactor)) == 2**14 * p * cofactor


@pytest.mark.parametrize("q", [3, 7, 11, 19, 23, 31, 43])
@pytest.mark.parametrize("cofactor", [-5, -3, -1, 1, 3, 5])
def test_witness_even_q_family(q, cofactor):
    assert dG_direct(witness_even_q(q, cofactor)) == 2**14 * q * q * cofactor


def test_synthesize_examples():
    w = synthesize(17)
    assert w.tuple == (2,) + (1,) * 15 and w.verified
    assert w.construction == "Lemma5.1(1) m=1"
    w = synthesize(585)
    assert w.tuple == witness_A(5, 13, 3) and w.verified
    assert "w=3 extension" in w.construction
    with pytest.raises(NotAMember):
        synthesize(7)
    with pytest.raises(NotAMember):
        synthesize(2**14)


@pytest.mark.parametrize("n", [0, 2**15, -(2**15), 3 * 2**15, 2**16, 5 * 2**16, 2**20])
def test_synthesize_even15(n):
    w = synthesize(n)
    assert dG_direct(w.tuple) == n
