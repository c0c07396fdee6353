"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is an immutable tuple of ``(exponent, coefficient)``
summands with strictly decreasing exponents and positive integer
coefficients.  The empty tuple is 0.  Exponents are themselves ordinals, so
every value is a finite tree; epsilon_0 has no term.
"""
from __future__ import annotations

import random
import re
from typing import Iterable, Sequence

__all__ = [
    "Ordinal",
    "ParseError",
    "DecodeError",
    "ZERO",
    "ONE",
    "OMEGA",
    "ordinal",
    "compare",
    "add",
    "mul_nat",
    "omega_pow",
    "omega_stack",
    "left_subtract",
    "classify",
    "is_normal",
    "parse",
    "render",
    "encode_digits",
    "decode_digits",
    "code_value",
    "digits_to_text",
    "digits_from_text",
    "random_ordinal",
]


class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[tuple["Ordinal", int]] = ()):
        # Trusted constructor: callers are responsible for normal form.
        # Use ``ordinal()`` or ``Ordinal.from_summands`` for raw input.
        self.terms: tuple[tuple[Ordinal, int], ...] = tuple(terms)
        self._hash = None

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError(f"ordinals are nonnegative, got {n}")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def from_summands(cls, summands: Iterable[tuple["Ordinal", int]]) -> "Ordinal":
        """Sum ``omega^e * c`` over arbitrary (not necessarily normal) summands."""
        out = ZERO
        for e, c in summands:
            if c < 0:
                raise ValueError("coefficients must be nonnegative")
            out = add(out, mul_nat(omega_pow(e), c))
        return out

    # -- structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{render(self)} is not finite")
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("0 has no leading exponent")
        return self.terms[0][0]

    @property
    def last_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ValueError("0 has no last exponent")
        return self.terms[-1][0]

    def exponents(self) -> list["Ordinal"]:
        return [e for e, _ in self.terms]

    def size(self) -> int:
        """Number of nodes in the term tree (summands, recursively)."""
        return sum(1 + e.size() for e, _ in self.terms)

    # -- dunder protocol --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.from_int(other) if other >= 0 else None
            if other is None:
                return False
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self is other or self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def _cmp(self, other) -> int:
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _compare(self, other)

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        if isinstance(other, int):
            return add(Ordinal.from_int(other), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return mul_nat(self, other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Ordinal({render(self)!r})"

    def __str__(self):
        return render(self)


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ordinal(x) -> Ordinal:
    """Coerce an int, a string in the ordinal grammar, or an Ordinal."""
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.from_int(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot make an ordinal from {type(x).__name__}")


# ---------------------------------------------------------------------------
# order and arithmetic


def _compare(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def compare(a: Ordinal, b: Ordinal) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return _compare(ordinal(a), ordinal(b))


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead, lead_c = b.terms[0]
    kept = []
    for e, c in a.terms:
        k = _compare(e, lead)
        if k > 0:
            kept.append((e, c))
        elif k == 0:
            lead_c += c
            break
        else:
            break
    kept.append((lead, lead_c))
    kept.extend(b.terms[1:])
    return Ordinal(kept)


def mul_nat(a: Ordinal, c: int) -> Ordinal:
    if c < 0:
        raise ValueError("multiplier must be nonnegative")
    if c == 0 or not a.terms:
        return ZERO
    if c == 1:
        return a
    (e, n), *rest = a.terms
    return Ordinal([(e, n * c), *rest])


def omega_pow(a: Ordinal) -> Ordinal:
    return Ordinal(((a, 1),))


def omega_stack(n: int, a: Ordinal = ONE) -> Ordinal:
    """omega_0^a = a, omega_{n+1}^a = omega^(omega_n^a)."""
    if n < 0:
        raise ValueError("stack height must be nonnegative")
    for _ in range(n):
        a = omega_pow(a)
    return a


def left_subtract(a: Ordinal, b: Ordinal) -> Ordinal:
    """The unique r with a + r == b; requires a <= b."""
    ta, tb = a.terms, b.terms
    i = 0
    while i < len(ta) and i < len(tb) and ta[i] == tb[i]:
        i += 1
    if i == len(ta):
        return Ordinal(tb[i:])
    if i == len(tb):
        raise ValueError(f"{render(a)} > {render(b)}")
    (ea, ca), (eb, cb) = ta[i], tb[i]
    k = _compare(ea, eb)
    if k < 0:
        return Ordinal(tb[i:])
    if k == 0 and ca < cb:
        return Ordinal([(eb, cb - ca), *tb[i + 1:]])
    raise ValueError(f"{render(a)} > {render(b)}")


def classify(a: Ordinal) -> str:
    if not a.terms:
        return "zero"
    return "successor" if not a.terms[-1][0].terms else "limit"


def is_normal(a) -> bool:
    """Validator for the normal-form invariants, recursively."""
    if not isinstance(a, Ordinal) or not isinstance(a.terms, tuple):
        return False
    prev = None
    for item in a.terms:
        if not (isinstance(item, tuple) and len(item) == 2):
            return False
        e, c = item
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            return False
        if not is_normal(e):
            return False
        if prev is not None and _compare(prev, e) <= 0:
            return False
        prev = e
    return True


# ---------------------------------------------------------------------------
# text syntax


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}\n  {text}\n  {' ' * position}^")


_TOKEN = re.compile(
    r"\s*(?:(?P<wsub>[wω]_(?P<k>[0-9]+))|(?P<nat>[0-9]+)|(?P<w>[wω])"
    r"|(?P<op>[\^*+()])|(?P<eps>ε|eps(?:ilon)?|e0|e_0|e)|(?P<bad>\S))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        if kind == "k":
            kind = "wsub"
        if kind == "eps":
            raise ParseError("epsilon_0 has no term in this notation", text, start)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", text, start)
        if kind == "wsub":
            tokens.append(("wsub", int(m.group("k")), start))
        elif kind == "nat":
            tokens.append(("nat", m.group("nat"), start))
        elif kind == "w":
            tokens.append(("w", None, start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            want = {"nat": "a positive integer", "end": "end of input"}.get(kind, repr(kind))
            got = "end of input" if tok[0] == "end" else repr(self.text[tok[2]:tok[2] + 1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def nat(self, allow_zero=False) -> int:
        _, digits, pos = self.take("nat")
        if digits == "0" and allow_zero:
            return 0
        if digits.startswith("0"):
            raise ParseError("numerals must not start with 0", self.text, pos)
        return int(digits)

    def ordinal(self) -> Ordinal:
        kind, digits, pos = self.peek()
        if kind == "nat" and digits == "0":
            self.i += 1
            return ZERO
        out = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            out = add(out, self.term())
        return out

    def term(self) -> Ordinal:
        kind, val, pos = self.peek()
        if kind == "nat":
            return Ordinal.from_int(self.nat())
        if kind == "wsub":
            self.i += 1
            base = omega_stack(val)
        elif kind == "w":
            self.i += 1
            exp = ONE
            if self.peek()[0] == "^":
                self.i += 1
                exp = self.atom()
            base = omega_pow(exp)
        else:
            got = "end of input" if kind == "end" else repr(self.text[pos:pos + 1])
            raise ParseError(f"expected a term, found {got}", self.text, pos)
        if self.peek()[0] == "*":
            self.i += 1
            base = mul_nat(base, self.nat())
        return base

    def atom(self) -> Ordinal:
        kind, val, pos = self.peek()
        if kind == "nat":
            return Ordinal.from_int(self.nat())
        if kind == "w":
            self.i += 1
            return OMEGA
        if kind == "wsub":
            self.i += 1
            return omega_stack(val)
        if kind == "(":
            self.i += 1
            inner = self.ordinal()
            self.take(")")
            return inner
        got = "end of input" if kind == "end" else repr(self.text[pos:pos + 1])
        raise ParseError(f"expected an exponent, found {got}", self.text, pos)


def parse(text: str) -> Ordinal:
    """Parse the ordinal grammar; non-normal sums are normalized."""
    p = _Parser(text)
    out = p.ordinal()
    p.take("end")
    return out


def _render_atom(e: Ordinal) -> str:
    if e.is_finite():
        return str(int(e))
    if e == OMEGA:
        return "w"
    return f"({render(e)})"


def render(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        s = "w" if e == ONE else "w^" + _render_atom(e)
        parts.append(s if c == 1 else f"{s}*{c}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# digit strings over {1,2,3,4}
#
#   term    := 2 | summand+          (2 is the zero term)
#   summand := 4 term 3 coeff        (4 opens an exponent, 3 closes it)
#   coeff   := 1 (1|2)*              (binary, most significant first; 2 is bit 0)


class DecodeError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at digit {position}")


def _coeff_digits(c: int) -> list[int]:
    return [1 if b == "1" else 2 for b in bin(c)[2:]]


def encode_digits(a: Ordinal) -> tuple[int, ...]:
    out: list[int] = []

    def emit(x: Ordinal):
        if not x.terms:
            out.append(2)
            return
        for e, c in x.terms:
            out.append(4)
            emit(e)
            out.append(3)
            out.extend(_coeff_digits(c))

    emit(a)
    return tuple(out)


def decode_digits(d: Sequence[int]) -> Ordinal:
    d = list(d)
    pos = 0

    def term() -> Ordinal:
        nonlocal pos
        if pos >= len(d):
            raise DecodeError("unexpected end of digits", pos)
        if d[pos] == 2:
            pos += 1
            return ZERO
        if d[pos] != 4:
            raise DecodeError(f"expected 2 or 4, found {d[pos]}", pos)
        terms = []
        while pos < len(d) and d[pos] == 4:
            start = pos
            pos += 1
            e = term()
            if pos >= len(d) or d[pos] != 3:
                raise DecodeError("expected 3 closing an exponent", pos)
            pos += 1
            if pos >= len(d) or d[pos] != 1:
                raise DecodeError("coefficient must start with 1", pos)
            c = 0
            while pos < len(d) and d[pos] in (1, 2):
                c = 2 * c + (d[pos] == 1)
                pos += 1
            if terms and _compare(terms[-1][0], e) <= 0:
                raise DecodeError("exponents must strictly decrease", start)
            terms.append((e, c))
        return Ordinal(terms)

    for i, x in enumerate(d):
        if x not in (1, 2, 3, 4):
            raise DecodeError(f"digit {x!r} outside 1..4", i)
    out = term()
    if pos != len(d):
        raise DecodeError("trailing digits", pos)
    return out


def code_value(d: Sequence[int]) -> int:
    """Bijective base-4 value; the last digit is least significant."""
    v = 0
    for x in d:
        if x not in (1, 2, 3, 4):
            raise ValueError(f"digit {x!r} outside 1..4")
        v = 4 * v + x
    return v


def digits_to_text(d: Sequence[int]) -> str:
    return ",".join(str(x) for x in d)


def digits_from_text(text: str) -> tuple[int, ...]:
    out = []
    for i, part in enumerate(text.split(",")):
        part = part.strip()
        if part not in ("1", "2", "3", "4"):
            raise DecodeError(f"bad digit {part!r}", i)
        out.append(int(part))
    return tuple(out)


# ---------------------------------------------------------------------------


def random_ordinal(rng: random.Random, depth: int = 3, width: int = 3, max_coeff: int = 5) -> Ordinal:
    """Random normal-form ordinal for property corpora."""
    if depth <= 0 or rng.random() < 0.2:
        return Ordinal.from_int(rng.randint(0, max_coeff))
    exps = {random_ordinal(rng, depth - 1, width, max_coeff) for _ in range(rng.randint(1, width))}
    exps = sorted(exps, reverse=True)
    return Ordinal((e, rng.randint(1, max_coeff)) for e in exps)
