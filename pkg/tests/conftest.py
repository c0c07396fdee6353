import sys

from hypothesis import settings, strategies as st

from phlab.ordinals import ZERO, Ordinal

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def _build(parts):
    return Ordinal.from_summands(parts)


# ordinals of small height: sums of w^e * c over recursively drawn exponents
ordinals = st.recursive(
    st.just(ZERO),
    lambda inner: st.lists(st.tuples(inner, st.integers(1, 6)), min_size=1, max_size=3).map(_build),
    max_leaves=12,
)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
