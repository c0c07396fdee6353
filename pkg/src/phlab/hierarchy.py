"""Fundamental sequences and a budgeted evaluator for diagonal hierarchies.

The evaluator computes ``H_a^i(x)`` for the hierarchy built over an arbitrary
strictly increasing base function ``H_0``::

    H_{a+1}(x) = H_a^{x+1}(x)
    H_lam(x)   = H_{lam[x]}(x)        (lam a limit)

With the base ``x + 1`` this is the fast-growing hierarchy ``F_a``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Union

from .ordinals import ONE, ZERO, Ordinal, omega_stack, ordinal, render

__all__ = [
    "fund_seq",
    "eps0_fund_seq",
    "StepDownPath",
    "PathBudgetExceeded",
    "step_down",
    "meshes",
    "Budget",
    "Value",
    "Exceeded",
    "StepLimit",
    "EvalOutcome",
    "BaseFunction",
    "SuccessorBase",
    "FunctionBase",
    "F0",
    "hierarchy_eval",
    "fgh_eval",
    "f_eps0_eval",
    "f_eps0_lower_bound",
    "f2",
    "JsonlTrace",
]


# ---------------------------------------------------------------------------
# fundamental sequences


def fund_seq(a: Ordinal, n: int) -> Ordinal:
    """The n-th member ``a[n]`` of the fundamental sequence of ``a``.

    Limits ``b + w^g*(k+1)`` step to ``b + w^g*k + w^d*(n+1)`` when
    ``g = d+1`` and to ``b + w^g*k + w^(g[n])`` when ``g`` is a limit.
    Successors ``b+1`` step to ``b`` for every n; ``0[n] = 0``.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    terms = a.terms
    if not terms:
        return a
    g, c = terms[-1]
    head = list(terms[:-1])
    if not g.terms:
        if c > 1:
            head.append((g, c - 1))
        return Ordinal(head)
    if c > 1:
        head.append((g, c - 1))
    gt = g.terms
    if not gt[-1][0].terms:  # g = d + 1
        d = fund_seq(g, 0)
        head.append((d, n + 1))
    else:
        head.append((fund_seq(g, n), 1))
    return Ordinal(head)


def eps0_fund_seq(n: int) -> Ordinal:
    """``eps0[n] = omega_{n+1}``."""
    return omega_stack(n + 1, ONE)


# ---------------------------------------------------------------------------
# step-down relation, direct search


@dataclass(frozen=True)
class StepDownPath:
    ordinals: tuple[Ordinal, ...]
    index: int

    @property
    def source(self) -> Ordinal:
        return self.ordinals[0]

    @property
    def target(self) -> Ordinal:
        return self.ordinals[-1]

    def __len__(self):
        return len(self.ordinals)

    def is_valid(self) -> bool:
        return bool(self.ordinals) and all(
            fund_seq(a, self.index) == b for a, b in zip(self.ordinals, self.ordinals[1:])
        )


class PathBudgetExceeded(RuntimeError):
    """The descent outlived the path-length budget; nothing was refuted."""

    def __init__(self, source, index, target, length):
        self.length = length
        super().__init__(
            f"descent from {render(source)} at {index} did not reach {render(target)} "
            f"within {length} steps"
        )


def step_down(a: Ordinal, n: int, b: Ordinal, max_length: int = 10**6) -> Optional[StepDownPath]:
    """Witness path for ``a ->_n b`` by iterating ``fund_seq``, or None.

    The path is unique since ``fund_seq`` is a function.  Raises
    :class:`PathBudgetExceeded` when more than ``max_length`` ordinals
    would be needed before the descent passes ``b``.
    """
    a, b = ordinal(a), ordinal(b)
    path = [a]
    cur = a
    while cur > b:
        if len(path) >= max_length:
            raise PathBudgetExceeded(a, n, b, max_length)
        cur = fund_seq(cur, n)
        path.append(cur)
    if cur == b:
        return StepDownPath(tuple(path), n)
    return None


def meshes(b: Ordinal, a: Ordinal) -> bool:
    """True when ``b + a[n] == (b + a)[n]`` is guaranteed for limit ``a``."""
    if not a.terms or not b.terms:
        return True
    lead = a.terms[0][0]
    return all(e >= lead for e in b.exponents())


# ---------------------------------------------------------------------------
# budgets and outcomes


@dataclass(frozen=True)
class Budget:
    max_value_bits: int = 2**20
    max_steps: int = 10**7

    def __post_init__(self):
        if self.max_value_bits < 1 or self.max_steps < 1:
            raise ValueError("budget limits must be positive")

    @cached_property
    def limit(self) -> int:
        return 1 << self.max_value_bits


@dataclass(frozen=True)
class Value:
    value: int
    steps: int = field(default=0, compare=False)

    def __repr__(self):
        return f"Value({_elide(self.value)[0]}, steps={self.steps})"


@dataclass(frozen=True)
class Exceeded:
    """The true value is at least ``lower_bound`` (itself >= 2^max_value_bits)."""

    lower_bound: int
    steps: int = field(default=0, compare=False)

    def __repr__(self):
        return f"Exceeded({_elide(self.lower_bound)[0]}, steps={self.steps})"


@dataclass(frozen=True)
class StepLimit:
    steps: int = field(default=0, compare=False)


EvalOutcome = Union[Value, Exceeded, StepLimit]


# ---------------------------------------------------------------------------
# base functions


class BaseFunction:
    """A strictly increasing total function used as ``H_0``.

    ``growth`` names what the base is known to satisfy (``g(n) > n`` is the
    minimum the evaluator relies on).  Subclasses may provide closed forms
    for ``H_level^count`` at finite levels; the evaluator uses them as a
    single rewrite.
    """

    name = "g"
    growth = "g(n) > n"

    def __call__(self, x: int, budget: Budget) -> EvalOutcome:
        raise NotImplementedError

    def closed_form(self, level: int, count: int, x: int, budget: Budget) -> Optional[EvalOutcome]:
        return None


class SuccessorBase(BaseFunction):
    """``F_0(x) = x + 1``, with closed forms ``F_0^c(x) = x + c`` and
    ``F_1^c(x) = 2^c (x+1) - 1``."""

    name = "x+1"
    growth = "g(n) = n + 1 > n"

    def __call__(self, x, budget):
        return Value(x + 1, 1)

    def closed_form(self, level, count, x, budget):
        if level == 0:
            return Value(x + count, 1)
        if level == 1:
            # 2^count*(x+1) - 1 >= 2^(count + bitlen(x+1) - 1) - 1
            if count + (x + 1).bit_length() - 1 > budget.max_value_bits:
                return Exceeded(budget.limit, 1)
            return Value(((x + 1) << count) - 1, 1)
        return None


class FunctionBase(BaseFunction):
    """Wrap a plain ``int -> int`` function as a base."""

    def __init__(self, fn: Callable[[int], int], name: str, growth: str = "g(n) > n"):
        self.fn = fn
        self.name = name
        self.growth = growth

    def __call__(self, x, budget):
        return Value(self.fn(x), 1)

    def __repr__(self):
        return f"FunctionBase({self.name})"


F0 = SuccessorBase()


def f2(x: int) -> int:
    """Closed form ``F_2(x) = 2^(x+1) (x+1) - 1``."""
    return ((x + 1) << (x + 1)) - 1


# ---------------------------------------------------------------------------
# the evaluator


def _elide(v: int) -> tuple[str, int]:
    bits = v.bit_length()
    return (str(v) if bits <= 4096 else f"~2^{bits}"), bits


class JsonlTrace:
    """Trace sink writing one JSON object per rewrite step."""

    def __init__(self, fp):
        self.fp = fp

    def __call__(self, record: dict):
        self.fp.write(json.dumps(record) + "\n")


def _frames(stack):
    for f in stack:
        if len(f) == 2:
            yield f"F_{{{render(f[0])}}}^{{{f[1]}}}"
        elif f[1] - f[0] < 16:
            yield from (f"F_{{{lvl}}}^{{{f[2]}}}" for lvl in range(f[1], f[0] - 1, -1))
        else:
            yield f"F_{{{f[1]}..{f[0]}}}^{{{f[2]}}}"


def _emit(trace, steps, stack, v, rule):
    arg, bits = _elide(v)
    trace({
        "step": steps,
        "stack": list(_frames(stack)),
        "arg": arg,
        "arg_bits": bits,
        "rule": rule,
    })


def hierarchy_eval(
    base: BaseFunction,
    a,
    i: int,
    x: int,
    budget: Optional[Budget] = None,
    trace: Optional[Callable[[dict], None]] = None,
) -> EvalOutcome:
    """Evaluate ``H_a^i(x)`` over ``base`` under ``budget``.

    A stack of ``(ordinal, count)`` frames sits over the current argument
    ``v``; the innermost frame is rewritten one step at a time.  Expanding a
    finite level ``L`` pushes all ``L`` lower levels at once as a compact
    ladder, since ``v`` does not move until the base is reached.  Every base
    application increases ``v``, so once ``v`` reaches ``2^max_value_bits``
    the final value is certified to be at least ``v`` and evaluation stops
    with :class:`Exceeded`.
    """
    a = ordinal(a)
    if i < 1:
        raise ValueError("iteration count must be positive")
    if x < 0:
        raise ValueError("argument must be nonnegative")
    budget = budget or Budget()
    limit = budget.limit
    if x >= limit:
        return Exceeded(x, 0)
    stack: list[tuple[Ordinal, int]] = [(a, i)]
    v = x
    steps = 0
    while stack:
        top = stack[-1]
        if len(top) == 3:
            # ladder (lo, hi, C): frames F_hi^C, ..., F_lo^C with F_lo on top
            lo, hi, cnt = stack.pop()
            if lo < hi:
                stack.append((lo + 1, hi, cnt))
            stack.append((Ordinal.from_int(lo), cnt))
            continue
        alpha, c = top
        if c == 0:
            stack.pop()
            continue
        if steps >= budget.max_steps:
            return StepLimit(steps)
        steps += 1
        terms = alpha.terms
        finite = not terms or (len(terms) == 1 and not terms[0][0].terms)
        level = (terms[0][1] if terms else 0) if finite else -1
        if finite:
            out = base.closed_form(level, c, v, budget)
            if out is not None:
                if trace:
                    _emit(trace, steps, stack, v, "base")
                stack.pop()
                if isinstance(out, Value):
                    v = out.value
                elif isinstance(out, Exceeded):
                    return Exceeded(out.lower_bound, steps)
                else:
                    return StepLimit(steps)
                if v >= limit:
                    return Exceeded(v, steps)
                continue
        if not terms:
            if trace:
                _emit(trace, steps, stack, v, "base")
            stack[-1] = (alpha, c - 1)
            out = base(v, budget)
            if isinstance(out, Exceeded):
                return Exceeded(out.lower_bound, steps)
            if isinstance(out, StepLimit):
                return StepLimit(steps)
            if out.value <= v:
                raise ArithmeticError(f"base {base!r} is not increasing at {v}")
            v = out.value
            if v >= limit:
                return Exceeded(v, steps)
        elif not terms[-1][0].terms:
            if trace:
                _emit(trace, steps, stack, v, "successor-expand")
            stack[-1] = (alpha, c - 1)
            if finite and level >= 2:
                # the L-1 further expansions leave v unchanged: do them at once
                stack.append((1, level - 1, v))
                stack.append((ZERO, v + 1))
            else:
                stack.append((fund_seq(alpha, 0), v + 1))
        else:
            if trace:
                _emit(trace, steps, stack, v, "limit-dispatch")
            stack[-1] = (alpha, c - 1)
            stack.append((fund_seq(alpha, v), 1))
    return Value(v, steps)


def fgh_eval(a, x: int, budget: Optional[Budget] = None, trace=None) -> EvalOutcome:
    """Fast-growing hierarchy ``F_a(x)``."""
    return hierarchy_eval(F0, a, 1, x, budget, trace)


def f_eps0_eval(x: int, budget: Optional[Budget] = None, trace=None) -> EvalOutcome:
    """``F_eps0(x) = F_{omega_{x+1}}(x)``."""
    return fgh_eval(eps0_fund_seq(x), x, budget, trace)


def f_eps0_lower_bound(x: int) -> int:
    """Certified ``F_eps0(x) >= 2^(x+1)`` for ``x >= 1``; ``F_eps0(0) = 1``."""
    return 1 if x == 0 else 1 << (x + 1)
