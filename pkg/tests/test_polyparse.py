import pytest
from hypothesis import given, strategies as st

from conftest import naive_p
from unitsums import PreconditionError, full_unit_group, make_ring, nth_residue_subgroup
from unitsums.polyparse import (
    Monomial,
    MonomialPolynomial,
    ParseError,
    eval_sum,
    format_polynomial,
    parse,
)


def test_parse_examples():
    f = parse("x1^2*x2^5 + 3*x1*x2", 2)
    assert f.terms == (Monomial(1, (2, 5)), Monomial(3, (1, 1)))
    assert parse("x1^1", 1).terms == (Monomial(1, (1,)),)
    with pytest.raises(ParseError, match="out of range"):
        parse("x3", 2)


def test_parse_signs_constants_and_spacing():
    f = parse("  -2 * x1 ^ -3 -x2+ 7 ", 2)
    assert f.terms == (Monomial(-2, (-3, 0)), Monomial(-1, (0, 1)), Monomial(7, (0, 0)))
    assert parse("x1*x1^2*x2", 2).terms == (Monomial(1, (3, 1)),)
    assert parse("", 3).terms == ()
    assert parse("   ", 3) == MonomialPolynomial(3, ())


@pytest.mark.parametrize(
    "text, pos",
    [("x1 +", 4), ("x1 ** x2", 4), ("y1", 0), ("3 x1", 2), ("x1^", 3), ("x1^x2", 3), ("+x1", 0), ("x0", 0)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse(text, 2)
    assert e.value.position == pos


def test_bad_arity():
    with pytest.raises(ValueError):
        parse("x1", 0)


monomials = st.builds(
    Monomial,
    st.integers(-50, 50),
    st.lists(st.integers(-9, 9), min_size=3, max_size=3).map(tuple),
)


@given(st.lists(monomials, max_size=5))
def test_round_trip(terms):
    f = MonomialPolynomial(3, tuple(terms))
    assert parse(format_polynomial(f), 3) == f


def test_eval_sum_examples(units9, units7):
    total, per = eval_sum(units9, parse("x1*x2^5", 2))
    assert total == 3
    total, per = eval_sum(units7, parse("x1^2*x2^4 + x1^6*x2^2*x3^4", 3))
    assert [ev.value.value for ev in per] == [4, 4]
    assert total == 1
    assert eval_sum(units7, parse("", 2))[0] == 0
    with pytest.raises(PreconditionError):
        eval_sum(nth_residue_subgroup(make_ring(13), 3), parse("x5", 5))


@given(
    st.sampled_from([5, 7, 9, 13, 15]),
    st.lists(monomials, max_size=4),
    st.randoms(use_true_random=False),
)
def test_linearity_oracle_and_term_order(m, terms, rnd):
    G = full_unit_group(make_ring(m))
    f = MonomialPolynomial(3, tuple(terms))
    want = sum(t.coefficient * naive_p(G.elements, t.exponents, m) for t in terms) % m
    assert eval_sum(G, f)[0] == want
    shuffled = list(terms)
    rnd.shuffle(shuffled)
    assert eval_sum(G, MonomialPolynomial(3, tuple(shuffled)))[0] == want
