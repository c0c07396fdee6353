"""Compressed, checkable witnesses for the step-down relation ``a ->_n b``.

The literal path ``a, a[n], a[n][n], ...`` is usually far too long to write
down (from ``omega_5`` at ``n = 4`` it has more entries than there are atoms).
A :class:`Descent` is a proof tree over five rules, each locally checkable:

``refl``   ``a ->_n a``
``step``   ``a ->_n a[n]``
``chain``  transitivity over consecutive premises
``shift``  ``x ->_n y`` gives ``h + x ->_n h + y`` when ``h`` meshes with ``x``
``power``  ``x ->_n y`` gives ``w^x ->_n w^y``

``shift`` holds because every point of the descent from ``x`` is at most
``x``, so ``h`` meshes with it and ``(h + z)[n] = h + z[n]``.  ``power``
holds since a limit exponent gives ``(w^x)[n] = w^(x[n])`` in one step,
while ``w^(d+1)`` steps to ``w^d*(n+1)`` and then, shifting the descents of
the trailing copies of ``w^d`` down to 0, reaches ``w^d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .hierarchy import fund_seq, meshes
from .ordinals import ONE, Ordinal, add, left_subtract, omega_pow, ordinal, render

__all__ = ["Descent", "InvalidCertificate", "certify_step_down", "check_descent", "certificate_size"]


@dataclass(frozen=True, eq=False)
class Descent:
    rule: str
    source: Ordinal
    target: Ordinal
    index: int
    premises: tuple["Descent", ...] = ()
    head: Optional[Ordinal] = None

    def to_json(self) -> dict:
        out = {"rule": self.rule, "source": render(self.source), "target": render(self.target)}
        if self.head is not None:
            out["head"] = render(self.head)
        if self.premises:
            out["premises"] = [p.to_json() for p in self.premises]
        return out


class InvalidCertificate(ValueError):
    pass


def _refl(a, n):
    return Descent("refl", a, a, n)


def _step(a, n):
    return Descent("step", a, fund_seq(a, n), n)


def _chain(parts, n=None):
    flat = []
    for p in parts:
        if p.rule == "refl":
            continue
        flat.extend(p.premises if p.rule == "chain" else (p,))
    if not flat:
        return parts[0] if parts else None
    if len(flat) == 1:
        return flat[0]
    return Descent("chain", flat[0].source, flat[-1].target, flat[0].index, tuple(flat))


def _shift(head, d):
    if not head.terms:
        return d
    if d.rule == "refl":
        return _refl(add(head, d.source), d.index)
    return Descent("shift", add(head, d.source), add(head, d.target), d.index, (d,), head)


def _power(d):
    if d.rule == "refl":
        return _refl(omega_pow(d.source), d.index)
    return Descent("power", omega_pow(d.source), omega_pow(d.target), d.index, (d,))


def _peel(a: Ordinal):
    """Split ``a = head + w^g`` (one copy of the last summand)."""
    g, c = a.terms[-1]
    rest = a.terms[:-1]
    head = Ordinal(rest + ((g, c - 1),)) if c > 1 else Ordinal(rest)
    return head, g


@lru_cache(maxsize=4096)
def _pow_to_one(g: Ordinal, n: int) -> Descent:
    # w^g ->_n 1
    if not g.terms:
        return _refl(ONE, n)
    return _power(_to_zero(g, n))


@lru_cache(maxsize=4096)
def _to_zero(a: Ordinal, n: int) -> Descent:
    parts = []
    cur = a
    while cur.terms:
        head, g = _peel(cur)
        parts.append(_shift(head, _chain([_pow_to_one(g, n), _step(ONE, n)])))
        cur = head
    return _chain(parts) or _refl(a, n)


def _descend(a: Ordinal, n: int, b: Ordinal) -> tuple[Ordinal, Descent]:
    """Last point ``p > b`` on the descent from ``a > b``, with ``a ->_n p``."""
    parts = []
    cur = a
    while True:
        head, g = _peel(cur)
        if b >= head:
            p, d = _descend_pow(g, n, left_subtract(head, b))
            parts.append(_shift(head, d))
            return add(head, p), _chain(parts)
        parts.append(_shift(head, _chain([_pow_to_one(g, n), _step(ONE, n)])))
        cur = head


def _descend_pow(g: Ordinal, n: int, r: Ordinal) -> tuple[Ordinal, Descent]:
    # precondition: w^g > r
    if not g.terms or not r.terms:
        return ONE, _pow_to_one(g, n)
    e = r.leading_exponent
    pe, de = _descend(g, n, e)
    top = omega_pow(pe)
    lift = _power(de)
    nxt = fund_seq(top, n)
    if nxt <= r:
        return top, lift
    p, rest = _descend(nxt, n, r)
    return p, _chain([lift, _step(top, n), rest])


def certify_step_down(a, n: int, b) -> Optional[Descent]:
    """Certificate for ``a ->_n b``, or None when the descent skips ``b``.

    Total and fast: the work is proportional to the term sizes, not to the
    length of the descent.
    """
    a, b = ordinal(a), ordinal(b)
    if n < 0:
        raise ValueError("index must be nonnegative")
    if a == b:
        return _refl(a, n)
    if a < b:
        return None
    p, d = _descend(a, n, b)
    if fund_seq(p, n) != b:
        return None
    return _chain([d, _step(p, n)])


def check_descent(d: Descent, _seen=None) -> None:
    """Raise :class:`InvalidCertificate` unless every node checks."""
    seen = set() if _seen is None else _seen
    if id(d) in seen:
        return
    n = d.index

    def fail(msg):
        raise InvalidCertificate(f"{d.rule} {render(d.source)} -> {render(d.target)}: {msg}")

    if any(p.index != n for p in d.premises):
        fail("premise at a different index")
    if d.rule == "refl":
        if d.source != d.target:
            fail("source and target differ")
    elif d.rule == "step":
        if fund_seq(d.source, n) != d.target:
            fail("target is not the next fundamental-sequence member")
    elif d.rule == "chain":
        ps = d.premises
        if not ps or ps[0].source != d.source or ps[-1].target != d.target:
            fail("chain endpoints do not match")
        for x, y in zip(ps, ps[1:]):
            if x.target != y.source:
                fail("chain is not consecutive")
    elif d.rule == "shift":
        (p,) = d.premises
        h = d.head
        if h is None or not meshes(h, p.source):
            fail("head does not mesh with the shifted descent")
        if add(h, p.source) != d.source or add(h, p.target) != d.target:
            fail("shift endpoints do not match")
    elif d.rule == "power":
        (p,) = d.premises
        if omega_pow(p.source) != d.source or omega_pow(p.target) != d.target:
            fail("power endpoints do not match")
    else:
        fail("unknown rule")
    for p in d.premises:
        check_descent(p, seen)
    seen.add(id(d))


def certificate_size(d: Descent) -> int:
    seen = set()
    stack = [d]
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen.add(id(x))
        stack.extend(x.premises)
    return len(seen)
