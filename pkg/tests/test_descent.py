import random

import pytest
from hypothesis import given, strategies as st

from conftest import ordinals
from phlab.descent import Descent, InvalidCertificate, certificate_size, certify_step_down, check_descent
from phlab.hierarchy import PathBudgetExceeded, fund_seq, step_down
from phlab.ordinals import ONE, ZERO, omega_stack, parse, random_ordinal

P = parse


def _direct(a, n, b):
    try:
        return step_down(a, n, b, max_length=2_000) is not None
    except PathBudgetExceeded:
        return None


def test_certificate_for_short_descent():
    d = certify_step_down(P("w^w"), 1, ZERO)
    check_descent(d)
    assert d.source == P("w^w") and d.target == ZERO


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_tower_steps_down_to_two(m, n):
    d = certify_step_down(omega_stack(m + 1), n, P("2"))
    check_descent(d)
    assert (d.source, d.target, d.index) == (omega_stack(m + 1), P("2"), n)
    assert certificate_size(d) < 100


def test_refutations():
    assert certify_step_down(P("3"), 2, P("w")) is None
    # from w at index 2 the descent is w, 3, 2, ...: 4 is skipped
    assert certify_step_down(P("w"), 2, P("4")) is None
    assert certify_step_down(P("w*2"), 1, P("w + 3")) is None


def test_agrees_with_direct_descent():
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        a = random_ordinal(rng, depth=2, width=2, max_coeff=3)
        b = random_ordinal(rng, depth=2, width=2, max_coeff=3)
        n = rng.randint(0, 3)
        truth = _direct(a, n, b)
        if truth is None:
            continue
        cert = certify_step_down(a, n, b)
        assert (cert is not None) == truth, (a, n, b)
        if cert is not None:
            check_descent(cert)
        checked += 1
    assert checked > 250


@given(ordinals, st.integers(0, 5))
def test_one_step_and_transitivity(a, n):
    b = fund_seq(a, n)
    c = fund_seq(b, n)
    check_descent(certify_step_down(a, n, b))
    check_descent(certify_step_down(a, n, c))


def test_tampered_certificates_fail():
    d = certify_step_down(omega_stack(3), 2, P("2"))
    bad_step = Descent("step", P("w"), P("5"), 2)
    with pytest.raises(InvalidCertificate):
        check_descent(bad_step)
    bad_chain = Descent("chain", d.source, d.target, 2, d.premises[:-1])
    with pytest.raises(InvalidCertificate):
        check_descent(bad_chain)
    bad_shift = Descent("shift", P("w + w^2"), P("w + w*3"), 2, (Descent("step", P("w^2"), P("w*3"), 2),), P("w"))
    with pytest.raises(InvalidCertificate):
        check_descent(bad_shift)
    with pytest.raises(InvalidCertificate):
        check_descent(Descent("leap", ONE, ZERO, 2))


def test_certificate_json():
    d = certify_step_down(P("w^w"), 1, P("w + 1"))
    obj = d.to_json()
    assert obj["source"] == "w^w" and obj["target"] == "w + 1"
    assert "premises" in obj or obj["rule"] == "step"
