"""Named invariant suites, runnable from the command line and the tests.

Each suite returns a :class:`SuiteResult` with pass/fail counts and the
first few failures, so a violation is reported rather than tolerated.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .descent import certify_step_down, check_descent
from .hierarchy import (
    F0,
    Budget,
    Exceeded,
    FunctionBase,
    StepLimit,
    Value,
    eps0_fund_seq,
    f2,
    fgh_eval,
    fund_seq,
    hierarchy_eval,
    meshes,
)
from .ordinals import (
    ZERO,
    Ordinal,
    add,
    code_value,
    compare,
    encode_digits,
    is_normal,
    mul_nat,
    omega_pow,
    omega_stack,
    parse,
    random_ordinal,
    render,
)
from .ramsey import colex_subsets, find_bad_coloring, find_witness
from .slow import cantor_pair, cantor_unpair, f_eps0_inverse_certified

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suite",
    "TAME_BASES",
    "TAME_GRID",
    "naive_hierarchy",
    "oracle_values",
    "ph_oracle",
    "corpus",
]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "failures": [str(f) for f in self.failures],
        }


def corpus(size: int, seed: int = 0, depth: int = 3) -> list[Ordinal]:
    rng = random.Random(seed)
    return [random_ordinal(rng, depth) for _ in range(size)]


# ---------------------------------------------------------------------------
# ordinal core


def suite_order(size=60, seed=0) -> SuiteResult:
    res = SuiteResult("order")
    xs = corpus(size, seed)
    for a in xs:
        res.record(compare(a, a) == 0, ("reflexive", a))
    for a, b in product(xs, repeat=2):
        res.record(compare(a, b) == -compare(b, a), ("antisymmetric", a, b))
        res.record((compare(a, b) == 0) == (a == b), ("equality", a, b))
    for a, b, c in zip(xs, xs[1:], xs[2:]):
        if compare(a, b) <= 0 and compare(b, c) <= 0:
            res.record(compare(a, c) <= 0, ("transitive", a, b, c))
    for i, j in product(range(12), repeat=2):
        res.record(compare(Ordinal.from_int(i), Ordinal.from_int(j)) == (i > j) - (i < j), ("finite", i, j))
    return res


def suite_arith(size=60, seed=1) -> SuiteResult:
    res = SuiteResult("arith")
    xs = corpus(size, seed)
    for a, b, c in zip(xs, xs[1:], xs[2:]):
        res.record(add(add(a, b), c) == add(a, add(b, c)), ("associative", a, b, c))
    for a in xs:
        res.record(add(a, ZERO) == a and add(ZERO, a) == a, ("zero", a))
        for c in range(4):
            res.record(mul_nat(a, c + 1) == add(mul_nat(a, c), a), ("mul_nat", a, c))
    for a, b in zip(xs, xs[1:]):
        k = compare(a, b)
        res.record(compare(omega_pow(a), omega_pow(b)) == k, ("omega_pow monotone", a, b))
    return res


def suite_normal_form(size=60, seed=2) -> SuiteResult:
    res = SuiteResult("normal-form")
    xs = corpus(size, seed)
    for a, b in zip(xs, xs[1:]):
        outs = [add(a, b), mul_nat(a, 3), omega_pow(a), omega_stack(2, a)]
        for n in range(4):
            outs.append(fund_seq(a, n))
        for o in outs:
            res.record(is_normal(o), ("not normal", a, b, o))
    return res


def suite_roundtrip(size=1000, seed=3) -> SuiteResult:
    res = SuiteResult("roundtrip")
    from .ordinals import decode_digits

    for a in corpus(size, seed):
        res.record(parse(render(a)) == a, ("parse/render", a))
        res.record(decode_digits(encode_digits(a)) == a, ("encode/decode", a))
    return res


def suite_encoding_bound(size=100, seed=4) -> SuiteResult:
    res = SuiteResult("encoding-bound")
    for a in corpus(size, seed):
        da = encode_digits(a)
        ca = code_value(da)
        for n in range(5):
            d = encode_digits(omega_stack(n, a))
            res.record(d == (4,) * n + da + (3, 1) * n, ("concatenation", n, a))
            res.record(code_value(d) <= 4 ** (3 * n + 1) * (ca + 1), ("bound", n, a, code_value(d)))
    return res


# ---------------------------------------------------------------------------
# hierarchy


def suite_fundseq(size=60, seed=5) -> SuiteResult:
    res = SuiteResult("fundseq")
    limits = [a for a in corpus(4 * size, seed) if a.terms and a.last_exponent.terms][:size]
    for a in limits:
        prev = None
        for n in range(11):
            f = fund_seq(a, n)
            res.record(f < a, ("below", a, n))
            if prev is not None:
                res.record(prev < f, ("increasing", a, n))
            prev = f
    return res


def suite_diagonal() -> SuiteResult:
    res = SuiteResult("diagonal")
    for n in range(1, 6):
        res.record(fund_seq(omega_stack(n + 1), n) == omega_stack(n, Ordinal.from_int(n + 1)), n)
        res.record(fund_seq(eps0_fund_seq(n), n) == omega_stack(n, Ordinal.from_int(n + 1)), ("eps0", n))
    return res


def suite_stepdown(size=40, seed=6) -> SuiteResult:
    res = SuiteResult("stepdown")
    for m in range(1, 5):
        for n in range(1, 5):
            d = certify_step_down(omega_stack(m + 1), n, 2)
            ok = d is not None
            if ok:
                check_descent(d)
            res.record(ok, ("omega_{m+1} ->_n 2", m, n))
    xs = [a for a in corpus(size, seed) if a.terms]
    for a in xs:
        for n in range(4):
            b = fund_seq(a, n)
            res.record(certify_step_down(a, n, b) is not None, ("one step", a, n))
            c = fund_seq(fund_seq(b, n), n)
            res.record(certify_step_down(a, n, c) is not None, ("transitive", a, n))
    return res


def suite_meshing(size=60, seed=7) -> SuiteResult:
    res = SuiteResult("meshing")
    xs = corpus(size, seed)
    for b, a in product(xs[:25], repeat=2):
        if a.terms and a.last_exponent.terms and meshes(b, a):
            for n in range(4):
                res.record(fund_seq(add(b, a), n) == add(b, fund_seq(a, n)), ("meshing", b, a, n))
    return res


def suite_closed_form() -> SuiteResult:
    res = SuiteResult("closed-form")
    for x in range(21):
        out = fgh_eval(2, x)
        res.record(out == Value(f2(x)), ("F_2", x, out))
    return res


TAME_BASES = (
    FunctionBase(lambda n: n * n + 1, "n^2+1", "g(n) > n^2"),
    FunctionBase(lambda n: 2 * n * n + 2, "2n^2+2", "g(n) > n^2"),
)

TAME_GRID = tuple(parse(s) for s in ("0", "1", "2", "w", "w+1", "w*2", "w^2"))

_TAME_BUDGET = Budget(max_value_bits=4096, max_steps=200_000)


def _le(a, b):
    """Outcome of 'value a <= value b': True, False, or None when undecided."""
    if isinstance(a, StepLimit) or isinstance(b, StepLimit):
        return None
    if isinstance(a, Value) and isinstance(b, Value):
        return a.value <= b.value
    if isinstance(a, Value) and isinstance(b, Exceeded):
        return True
    if isinstance(a, Exceeded) and isinstance(b, Value):
        # b's value < 2^bits <= a's lower bound
        return False
    return None


def suite_tame_grid(budget: Budget = _TAME_BUDGET) -> SuiteResult:
    res = SuiteResult("tame-grid")
    for base in TAME_BASES:
        H = {(a, n): hierarchy_eval(base, a, 1, n, budget) for a in TAME_GRID for n in range(6)}
        for (a, n), out in H.items():
            if isinstance(out, StepLimit):
                res.record(False, ("(i) step limit", base.name, a, n))
            else:
                v = out.value if isinstance(out, Value) else out.lower_bound
                res.record(n <= n * n < v, ("(i)", base.name, a, n, out))
        for a in TAME_GRID:
            for m, n in combinations(range(6), 2):
                ok = _le(H[a, m], H[a, n])
                if ok is None:
                    res.skipped += 1
                else:
                    res.record(ok, ("(ii)", base.name, a, m, n))
        for a, b in product(TAME_GRID, repeat=2):
            for n in range(6):
                if a == b or certify_step_down(a, n, b) is None:
                    continue
                ok = _le(H[b, n], H[a, n])
                if ok is None:
                    res.skipped += 1
                else:
                    res.record(ok, ("(iii)", base.name, a, b, n))
    return res


def naive_hierarchy(g, a: Ordinal, x: int) -> int:
    """Textbook recursion, no closed forms or frame stack; small inputs only."""
    if not a.terms:
        return g(x)
    if not a.last_exponent.terms:
        pred = fund_seq(a, 0)
        for _ in range(x + 1):
            x = naive_hierarchy(g, pred, x)
        return x
    return naive_hierarchy(g, fund_seq(a, x), x)


def oracle_values() -> list[tuple[object, str, Ordinal, int, int]]:
    """Fifty (base, name, ordinal, x, value) cases computed by the naive oracle."""
    succ = lambda n: n + 1
    sq, dsq = (lambda n: n * n + 1), (lambda n: 2 * n * n + 2)
    cases = []
    std = [("0", range(0, 6)), ("1", range(0, 6)), ("2", range(0, 11)), ("3", range(0, 2)),
           ("w", range(0, 2)), ("w+1", [0]), ("w*2", [0]), ("w^2", [0]), ("w^w", [0]), ("w^(w^w)", [0])]
    for s, xs in std:
        for x in xs:
            a = parse(s)
            cases.append((F0, "x+1", a, x, naive_hierarchy(succ, a, x)))
    tame = (
        (("1", range(0, 4)), ("2", range(0, 2)), ("3", [0]), ("w", [0, 1]), ("w+1", [0])),
        (("1", range(0, 4)), ("2", [0]), ("3", [0]), ("w", [0]), ("w+1", [0]), ("w*2", [0]), ("w^2", [0])),
    )
    for base, fn, grid in zip(TAME_BASES, (sq, dsq), tame):
        for s, xs in grid:
            for x in xs:
                a = parse(s)
                cases.append((base, base.name, a, x, naive_hierarchy(fn, a, x)))
    return cases


def suite_abort(max_cases: int = 50) -> SuiteResult:
    res = SuiteResult("abort")
    for base, name, a, x, truth in oracle_values()[:max_cases]:
        top = truth.bit_length() + 2
        for bits in range(1, top + 1):
            for steps in (1, 2, 3, 5, 8, 13, 100, 10_000):
                out = hierarchy_eval(base, a, 1, x, Budget(bits, steps))
                if isinstance(out, Value):
                    res.record(out.value == truth, (name, render(a), x, bits, steps, out, truth))
                elif isinstance(out, Exceeded):
                    res.record(
                        (1 << bits) <= out.lower_bound <= truth,
                        (name, render(a), x, bits, steps, out, truth),
                    )
                else:
                    res.passed += 1
        res.record(hierarchy_eval(base, a, 1, x, Budget(top, 10**6)) == Value(truth), (name, a, x, "full"))
    return res


# ---------------------------------------------------------------------------
# slow


def suite_inverse(upto: int = 10**4, random_count: int = 100, seed: int = 8) -> SuiteResult:
    res = SuiteResult("inverse")
    rng = random.Random(seed)
    xs = list(range(upto + 1)) + [rng.getrandbits(4096) | (1 << 4095) for _ in range(random_count)]
    for x in xs:
        cert = f_eps0_inverse_certified(x)
        res.record(cert.value == 0 and cert.check(), ("inverse", x, cert.value))
    return res


def suite_pairing(size: int = 400, seed: int = 9) -> SuiteResult:
    res = SuiteResult("pairing")
    rng = random.Random(seed)
    for _ in range(size):
        x, y = rng.randrange(10**6), rng.randrange(10**6)
        p = cantor_pair(x, y)
        res.record(cantor_unpair(p) == (x, y), ("unpair", x, y))
        x2, y2 = x + rng.randrange(3), y + rng.randrange(3)
        res.record(p <= cantor_pair(x2, y2), ("monotone", x, y, x2, y2))
    for p in range(2000):
        res.record(cantor_pair(*cantor_unpair(p)) == p, ("pair", p))
    return res


# ---------------------------------------------------------------------------
# ramsey


def ph_oracle(k: int, m: int, n: int, N: int, chunk: int = 1 << 16):
    """Full enumeration of colourings in lexicographic order.

    Returns the first colouring (as a tuple) without a large homogeneous set
    of size >= m, or None if every colouring has one.  Candidate sets are all
    large subsets of size >= m, not just minimal ones.
    """
    subsets = colex_subsets(N, n)
    rank = {s: i for i, s in enumerate(subsets)}
    M = len(subsets)
    cands = []
    for size in range(max(m, 1), N + 1):
        for Y in combinations(range(N), size):
            if size >= Y[0]:
                if size < n:
                    return None  # vacuously homogeneous for every colouring
                cands.append(np.array([rank[s] for s in combinations(Y, n)]))
    total = k**M
    weights = k ** np.arange(M - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = (idx[:, None] // weights[None, :]) % k
        bad = np.ones(len(idx), dtype=bool)
        for r in cands:
            sub = cols[bad][:, r]
            hom = (sub == sub[:, :1]).all(axis=1)
            bad[np.flatnonzero(bad)[hom]] = False
            if not bad.any():
                break
        if bad.any():
            return tuple(int(c) for c in cols[np.argmax(bad)])
    return None


def suite_ph_oracle(kmax=3, nmax=2, Nmax=6, mmax=4) -> SuiteResult:
    res = SuiteResult("ph-oracle")
    for k in range(1, kmax + 1):
        for n in range(1, nmax + 1):
            for N in range(Nmax + 1):
                for m in range(1, mmax + 1):
                    want = ph_oracle(k, m, n, N)
                    got = find_bad_coloring(k, m, n, N)
                    if want is None:
                        res.record(got.status == "none", (k, m, n, N, got.status))
                    else:
                        res.record(
                            got.status == "found" and got.coloring.colors == want,
                            (k, m, n, N, got.status, want),
                        )
                    if got.status == "found":
                        res.record(find_witness(got.coloring, m) is None, ("unsound", k, m, n, N))
    return res


def suite_ph_monotone(kmax=2, nmax=2, Nmax=7, mmax=4) -> SuiteResult:
    res = SuiteResult("ph-monotone")
    for k, n, m in product(range(1, kmax + 1), range(1, nmax + 1), range(1, mmax + 1)):
        holds = [find_bad_coloring(k, m, n, N).status == "none" for N in range(Nmax + 1)]
        for N in range(Nmax):
            if holds[N]:
                res.record(holds[N + 1], ("monotone", k, m, n, N))
    return res


SUITES = {
    "order": suite_order,
    "arith": suite_arith,
    "normal-form": suite_normal_form,
    "roundtrip": suite_roundtrip,
    "encoding-bound": suite_encoding_bound,
    "fundseq": suite_fundseq,
    "diagonal": suite_diagonal,
    "stepdown": suite_stepdown,
    "meshing": suite_meshing,
    "closed-form": suite_closed_form,
    "tame-grid": suite_tame_grid,
    "abort": suite_abort,
    "inverse": suite_inverse,
    "pairing": suite_pairing,
    "ph-oracle": suite_ph_oracle,
    "ph-monotone": suite_ph_monotone,
}


def run_suite(name: str) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn()
