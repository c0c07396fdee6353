import random

import pytest
from hypothesis import given, strategies as st

from conftest import ordinals
from phlab.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    DecodeError,
    Ordinal,
    ParseError,
    add,
    classify,
    code_value,
    compare,
    decode_digits,
    digits_from_text,
    digits_to_text,
    encode_digits,
    is_normal,
    left_subtract,
    mul_nat,
    omega_pow,
    omega_stack,
    parse,
    random_ordinal,
    render,
)

P = parse


def test_compare_examples():
    assert compare(OMEGA, OMEGA) == 0
    assert compare(P("w^2"), P("w*3 + 5")) == 1
    assert compare(P("3"), OMEGA) == -1


def test_add_examples():
    assert add(OMEGA, ONE) == P("w + 1")
    assert add(ONE, OMEGA) == OMEGA
    assert add(P("w^2 + w"), P("w + 1")) == P("w^2 + w*2 + 1")


def test_mul_nat_examples():
    assert mul_nat(P("w + 1"), 3) == P("w*3 + 1")
    assert mul_nat(P("w^w"), 1) == P("w^w")
    assert mul_nat(P("5"), 4) == P("20")
    assert mul_nat(P("w^w + 3"), 0) == ZERO


def test_omega_pow_and_stack():
    assert omega_pow(ZERO) == ONE
    assert omega_pow(ONE) == OMEGA
    assert omega_pow(OMEGA) == P("w^w")
    assert omega_stack(0, P("w + 1")) == P("w + 1")
    assert omega_stack(2, ONE) == P("w^w")
    assert omega_stack(1, P("3")) == P("w^3")
    assert P("w_3") == P("w^(w^w)")


def test_classify():
    assert classify(ZERO) == "zero"
    assert classify(P("w^2 + 3")) == "successor"
    assert classify(P("w*5")) == "limit"


def test_parse_render_examples():
    a = P("w^w + w*2 + 1")
    assert a == Ordinal.from_summands([(OMEGA, 1), (ONE, 2), (ZERO, 1)])
    assert render(a) == "w^w + w*2 + 1"
    assert P("1 + w") == OMEGA
    assert render(P("w^(w^2)*3")) == "w^(w^2)*3"
    assert render(P("ω^ω")) == "w^w"
    assert render(ZERO) == "0"


def test_parse_normalizes_nonnormal_sums():
    assert P("w + w^2") == P("w^2")
    assert P("w*2 + w*3") == P("w*5")
    assert P("2 + 3") == P("5")


@pytest.mark.parametrize(
    "text,pos",
    [("w^", 2), ("w +", 3), ("w^e", 2), ("eps", 0), ("w^(w", 4), ("w*0", 2), ("w $ 1", 2), ("01", 0), ("", 0)],
)
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        P(text)
    assert exc.value.position == pos
    assert f"position {pos}" in str(exc.value)


def test_epsilon_symbol_rejected():
    with pytest.raises(ParseError, match="epsilon"):
        P("w^(ε + 1)")


@given(ordinals)
def test_parse_render_roundtrip(a):
    assert P(render(a)) == a
    assert is_normal(a)


@given(ordinals, ordinals, ordinals)
def test_order_is_total_and_transitive(a, b, c):
    assert compare(a, b) == -compare(b, a)
    assert (compare(a, b) == 0) == (a == b)
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_compare_agrees_with_integers(x, y):
    assert compare(Ordinal.from_int(x), Ordinal.from_int(y)) == (x > y) - (x < y)
    assert add(Ordinal.from_int(x), Ordinal.from_int(y)) == Ordinal.from_int(x + y)


@given(ordinals, ordinals, ordinals)
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, ZERO) == a == add(ZERO, a)


@given(ordinals, st.integers(0, 6))
def test_mul_nat_unfolds(a, c):
    assert mul_nat(a, c + 1) == add(mul_nat(a, c), a)
    assert is_normal(mul_nat(a, c))


@given(ordinals, ordinals)
def test_omega_pow_monotone(a, b):
    assert compare(omega_pow(a), omega_pow(b)) == compare(a, b)


@given(ordinals)
def test_leading_exponent_below(a):
    if a.terms and not a.is_finite():
        assert a.leading_exponent < a


@given(ordinals, ordinals)
def test_left_subtract(a, b):
    lo, hi = min(a, b), max(a, b)
    assert add(lo, left_subtract(lo, hi)) == hi


def test_digit_examples():
    a = P("w^w + 1")
    assert decode_digits(encode_digits(a)) == a
    assert code_value((1,)) == 1
    assert code_value((1, 1)) == 5
    assert encode_digits(ZERO) == (2,)


@given(ordinals, st.integers(0, 4))
def test_stack_encoding_shape(a, n):
    inner = encode_digits(a)
    assert encode_digits(omega_stack(n, a)) == (4,) * n + inner + (3, 1) * n


@given(ordinals)
def test_digits_roundtrip(a):
    d = encode_digits(a)
    assert set(d) <= {1, 2, 3, 4}
    assert decode_digits(d) == a
    assert digits_from_text(digits_to_text(d)) == d


def test_code_value_is_injective_on_corpus():
    rng = random.Random(7)
    seen = {}
    for _ in range(500):
        a = random_ordinal(rng)
        v = code_value(encode_digits(a))
        assert seen.setdefault(v, a) == a


@pytest.mark.parametrize("digits,pos", [((), 0), ((4, 2, 3), 3), ((4, 2, 1), 2), ((2, 2), 1), ((3,), 0), ((4, 2, 3, 2), 3)])
def test_decode_errors(digits, pos):
    with pytest.raises(DecodeError) as exc:
        decode_digits(digits)
    assert exc.value.position == pos


def test_decode_rejects_nonnormal():
    # w^0 + w^1: exponents increase
    bad = (4, 2, 3, 1) + (4,) + encode_digits(ONE) + (3, 1)
    with pytest.raises(DecodeError):
        decode_digits(bad)
