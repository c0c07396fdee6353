"""The inverse of F_eps0, the slow function F_diamond and its hierarchy."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .hierarchy import (
    BaseFunction,
    Budget,
    EvalOutcome,
    Exceeded,
    Value,
    f2,
    f_eps0_eval,
    fgh_eval,
    hierarchy_eval,
)
from .ordinals import ONE, omega_stack, ordinal

__all__ = [
    "cantor_pair",
    "cantor_unpair",
    "Refutation",
    "InverseCertificate",
    "f_eps0_inverse",
    "f_eps0_inverse_certified",
    "f_diamond",
    "DiamondBase",
    "DIAMOND",
    "slow_hierarchy_eval",
    "SlowProofShape",
    "slow_proof_shape",
]


def cantor_pair(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise ValueError("pairing is defined on nonnegative integers")
    s = x + y
    return s * (s + 1) // 2 + y


def cantor_unpair(p: int) -> tuple[int, int]:
    if p < 0:
        raise ValueError("pairing is defined on nonnegative integers")
    w = (math.isqrt(8 * p + 1) - 1) // 2
    y = p - w * (w + 1) // 2
    return w - y, y


# ---------------------------------------------------------------------------
# F_eps0^{-1}(x) = max({z <= x | F_eps0(z) <= x} u {0})


@dataclass(frozen=True)
class Refutation:
    """``F_eps0(z) >= lower_bound > x`` for the candidate ``z``.

    ``method`` is one of:

    * ``power-bound``: ``F_eps0(z) >= 2^(z+1)`` for ``z >= 1``;
    * ``minorant``: capped evaluation of ``F_3(z) <= F_{z+1}(z) = F_w(z) <=
      F_eps0(z)`` (for ``z >= 2``, since ``z+1 ->_z 3``);
    * ``direct``: capped evaluation of ``F_{omega_{z+1}}(z)`` itself;
    * ``value``: the exact value is known and exceeds ``x``.
    """

    z: int
    method: str
    lower_bound: int


@dataclass(frozen=True)
class InverseCertificate:
    x: int
    value: int
    refutations: tuple[Refutation, ...] = field(repr=False)

    def check(self) -> bool:
        """Every candidate above ``value`` up to ``x`` is refuted."""
        refuted = {r.z for r in self.refutations if r.lower_bound > self.x}
        top = self.x.bit_length()  # 2^(z+1) > x for every larger z
        pending = range(self.value + 1, min(self.x, top) + 1)
        return all(z in refuted for z in pending)


_MINORANT_STEPS = 10_000
_DIRECT_STEPS = 1_000_000


@lru_cache(maxsize=None)
def _minorant(z: int, bits: int) -> EvalOutcome:
    return fgh_eval(3, z, Budget(bits, _MINORANT_STEPS))


@lru_cache(maxsize=None)
def _direct(z: int, bits: int) -> EvalOutcome:
    return f_eps0_eval(z, Budget(bits, _DIRECT_STEPS))


def _refute(z: int, x: int) -> Optional[Refutation]:
    """A certified refutation of ``F_eps0(z) <= x``, or None if ``F_eps0(z) <= x``."""
    if z == 0:
        return None if x >= 1 else Refutation(0, "value", 1)
    bound = 1 << (z + 1)
    if bound > x:
        return Refutation(z, "power-bound", bound)
    bits = x.bit_length() + 1
    if z >= 2:
        out = _minorant(z, bits)
        if isinstance(out, Exceeded):
            return Refutation(z, "minorant", out.lower_bound)
        if isinstance(out, Value) and out.value > x:
            return Refutation(z, "minorant", out.value)
    out = _direct(z, bits)
    if isinstance(out, Exceeded):
        return Refutation(z, "direct", out.lower_bound)
    if isinstance(out, Value):
        return None if out.value <= x else Refutation(z, "value", out.value)
    raise RuntimeError(f"could not decide F_eps0({z}) <= {x} within {_DIRECT_STEPS} steps")


def f_eps0_inverse_certified(x: int) -> InverseCertificate:
    if x < 0:
        raise ValueError("argument must be nonnegative")
    refutations = []
    # candidates beyond bitlen(x) - 1 fail 2^(z+1) <= x, so are never searched
    top = min(x, x.bit_length())
    for z in range(top, -1, -1):
        r = _refute(z, x)
        if r is None:
            return InverseCertificate(x, z, tuple(refutations))
        refutations.append(r)
    return InverseCertificate(x, 0, tuple(refutations))


def f_eps0_inverse(x: int) -> int:
    return f_eps0_inverse_certified(x).value


# ---------------------------------------------------------------------------


def f_diamond(x: int, budget: Optional[Budget] = None, trace=None) -> EvalOutcome:
    """``F_diamond(x) = F_{omega_{z+1}}(x)`` with ``z = F_eps0^{-1}(x)``."""
    budget = budget or Budget()
    if x >= 1 and f2(x).bit_length() > budget.max_value_bits:
        # F_diamond(x) >= F_w(x) >= F_2(x) for x >= 1
        return Exceeded(budget.limit, 0)
    z = f_eps0_inverse(x)
    return fgh_eval(omega_stack(z + 1, ONE), x, budget, trace)


class DiamondBase(BaseFunction):
    name = "F_diamond"
    growth = "F_diamond(n) > n^2"

    def __call__(self, x, budget):
        return f_diamond(x, budget)


DIAMOND = DiamondBase()


def slow_hierarchy_eval(a, x: int, budget: Optional[Budget] = None, trace=None) -> EvalOutcome:
    """``F^diamond_{eps0 + a}(x)``: the hierarchy rebuilt over ``F_diamond``."""
    return hierarchy_eval(DIAMOND, ordinal(a), 1, x, budget, trace)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SlowProofShape:
    q: int
    N: int
    stage: Optional[int]

    def to_json(self) -> dict:
        return {"q": self.q, "N": self.N, "stage": self.stage}


def slow_proof_shape(p: int, budget: Optional[Budget] = None) -> SlowProofShape:
    """Split ``p = <q, N>`` and recover the stage ``n`` with ``F_eps0(n) = N``.

    Only the arithmetic shell is examined; ``q`` is opaque.
    """
    q, N = cantor_unpair(p)
    z = f_eps0_inverse(N)
    bits = N.bit_length() + 1
    if budget is not None:
        bits = min(bits, budget.max_value_bits)
    steps = budget.max_steps if budget else _DIRECT_STEPS
    out = f_eps0_eval(z, Budget(bits, steps))
    stage = z if isinstance(out, Value) and out.value == N else None
    return SlowProofShape(q, N, stage)
