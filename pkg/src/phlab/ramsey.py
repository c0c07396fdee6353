"""Finite Paris-Harrington: largeness, homogeneity and adversarial search.

``PH(k, m, n, N)``: every colouring of the n-element subsets of
``{0, ..., N-1}`` with k colours admits a homogeneous set Y with
``|Y| >= m`` and ``|Y| >= min(Y)``.

Subsets are ordered colexicographically; colourings are flat colour arrays
in that order.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Union

__all__ = [
    "colex_subsets",
    "Coloring",
    "is_large",
    "is_homogeneous",
    "find_witness",
    "witness_candidates",
    "BadColoringSearch",
    "find_bad_coloring",
    "Holds",
    "Fails",
    "Unknown",
    "PhVerdict",
    "ph_holds",
    "MinWitness",
    "min_witness",
    "sigma",
    "chain_links",
    "solovay_chain_check",
]


@lru_cache(maxsize=256)
def colex_subsets(N: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(combinations(range(N), n), key=lambda t: t[::-1]))


@lru_cache(maxsize=256)
def _rank(N: int, n: int) -> dict:
    return {s: i for i, s in enumerate(colex_subsets(N, n))}


@dataclass(frozen=True)
class Coloring:
    n: int
    N: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != comb(self.N, self.n):
            raise ValueError(f"expected {comb(self.N, self.n)} colours, got {len(self.colors)}")
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError(f"colours must lie in 0..{self.k - 1}")

    @classmethod
    def constant(cls, n, N, k=1, color=0):
        return cls(n, N, k, (color,) * comb(N, n))

    def color(self, subset: Iterable[int]) -> int:
        return self.colors[_rank(self.N, self.n)[tuple(sorted(subset))]]

    def to_json(self) -> dict:
        return {"n": self.n, "N": self.N, "k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(int(obj["n"]), int(obj["N"]), int(obj["k"]), tuple(int(c) for c in obj["colors"]))


def is_large(Y) -> bool:
    Y = set(Y)
    return bool(Y) and len(Y) >= min(Y)


def is_homogeneous(c: Coloring, Y) -> bool:
    Y = sorted(set(Y))
    if Y and (Y[0] < 0 or Y[-1] >= c.N):
        raise ValueError("Y must be a subset of the ground set")
    rank = _rank(c.N, c.n)
    seen = {c.colors[rank[s]] for s in combinations(Y, c.n)}
    return len(seen) <= 1


def witness_candidates(m: int, n: int, N: int):
    """Sets that must be checked: any large homogeneous Y with ``|Y| >= m``
    contains one with the same minimum ``a`` and size ``max(m, a, 1)``."""
    for a in range(N):
        s = max(m, a, 1)
        for rest in combinations(range(a + 1, N), s - 1):
            yield (a, *rest)


def find_witness(c: Coloring, m: int) -> Optional[tuple[int, ...]]:
    """A large homogeneous set of size at least m, or None."""
    for Y in witness_candidates(m, c.n, c.N):
        if is_homogeneous(c, Y):
            return Y
    return None


# ---------------------------------------------------------------------------
# adversarial search


@dataclass(frozen=True)
class BadColoringSearch:
    status: str  # "found" | "none" | "unknown"
    coloring: Optional[Coloring]
    nodes: int
    log_hash: str


def _candidate_count(m: int, N: int) -> int:
    return sum(comb(N - a - 1, max(m, a, 1) - 1) for a in range(N))


@lru_cache(maxsize=64)
def _buckets(m: int, n: int, N: int):
    """Candidate witnesses grouped by the colex rank at which they become
    fully coloured; None when some candidate is vacuously homogeneous."""
    rank = _rank(N, n)
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(comb(N, n))]
    for Y in witness_candidates(m, n, N):
        if len(Y) < n:
            return None
        ranks = sorted(rank[s] for s in combinations(Y, n))
        buckets[ranks[-1]].append(tuple(ranks[:-1]))
    return tuple(tuple(b) for b in buckets)


def find_bad_coloring(k: int, m: int, n: int, N: int, node_budget: int = 10**8) -> BadColoringSearch:
    """Search for a colouring with no large homogeneous m-set.

    Depth-first over colex positions, colours tried in increasing order, so a
    returned colouring is the lexicographically least counterexample.  A
    branch is cut as soon as the newest colour completes a monochromatic
    candidate.  Colours are also introduced in order of first use, which
    keeps the least counterexample and divides the work by up to ``k!``.
    """
    if k < 1 or n < 1 or N < 0:
        raise ValueError("need k >= 1, n >= 1, N >= 0")
    h = hashlib.sha256(f"ph k={k} m={m} n={n} N={N}".encode())
    if _candidate_count(m, N) > node_budget:
        return BadColoringSearch("unknown", None, 0, h.hexdigest())
    buckets = _buckets(m, n, N)
    if buckets is None:
        h.update(b"vacuous")
        return BadColoringSearch("none", None, 0, h.hexdigest())
    M = len(buckets)
    colors = [-1] * M
    # highest colour used among positions < r
    used = [-1] * (M + 1)
    nodes = 0
    r = 0
    while True:
        if r == M:
            h.update(b"found")
            return BadColoringSearch("found", Coloring(n, N, k, tuple(colors)), nodes, h.hexdigest())
        col = colors[r] + 1
        if col >= k or col > used[r] + 1:
            colors[r] = -1
            r -= 1
            if r < 0:
                h.update(b"exhausted")
                return BadColoringSearch("none", None, nodes, h.hexdigest())
            continue
        colors[r] = col
        nodes += 1
        if nodes > node_budget:
            return BadColoringSearch("unknown", None, nodes, h.hexdigest())
        for others in buckets[r]:
            if all(colors[o] == col for o in others):
                h.update(f"{r}:{col}:{others}|".encode())
                break
        else:
            used[r + 1] = max(used[r], col)
            r += 1


@dataclass(frozen=True)
class Holds:
    nodes: int = field(default=0, compare=False)
    log_hash: str = field(default="", compare=False)
    timing: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class Fails:
    witness: Coloring
    nodes: int = field(default=0, compare=False)
    timing: float = field(default=0.0, compare=False)


@dataclass(frozen=True)
class Unknown:
    reason: str = "node-budget"
    nodes: int = field(default=0, compare=False)
    timing: float = field(default=0.0, compare=False)


PhVerdict = Union[Holds, Fails, Unknown]


def ph_holds(k: int, m: int, n: int, N: int, node_budget: int = 10**8) -> PhVerdict:
    t0 = time.perf_counter()
    res = find_bad_coloring(k, m, n, N, node_budget)
    dt = time.perf_counter() - t0
    if res.status == "none":
        return Holds(res.nodes, res.log_hash, dt)
    if res.status == "unknown":
        reason = "node-budget" if res.nodes else "candidate-budget"
        return Unknown(reason, res.nodes, dt)
    if find_witness(res.coloring, m) is not None:
        raise AssertionError(f"search returned a colouring with a witness: {res.coloring}")
    return Fails(res.coloring, res.nodes, dt)


@dataclass(frozen=True)
class MinWitness:
    value: Optional[int]
    verdicts: dict = field(repr=False)
    reason: str = ""

    @property
    def known(self) -> bool:
        return self.value is not None


def min_witness(k: int, m: int, n: int, node_budget: int = 10**8, N_cap: int = 64) -> MinWitness:
    """Least N with PH(k, m, n, N); monotonicity in N is not assumed.

    Every N below the answer carries a checked counterexample.  The scan
    stops at the first Unknown, since no later Holds could then be certified
    as least.
    """
    if N_cap < 0 or node_budget < 1:
        raise ValueError("caps must be positive")
    verdicts: dict[int, PhVerdict] = {}
    for N in range(N_cap + 1):
        v = ph_holds(k, m, n, N, node_budget)
        verdicts[N] = v
        if isinstance(v, Holds):
            return MinWitness(N, verdicts)
        if isinstance(v, Unknown):
            return MinWitness(None, verdicts, f"{v.reason} exhausted at N={N}")
    return MinWitness(None, verdicts, f"no Holds up to N_cap={N_cap}")


def sigma(n: int, k: int, node_budget: int = 10**8, N_cap: int = 64) -> MinWitness:
    """Smallest N with PH(k, n+1, n, N)."""
    return min_witness(k, n + 1, n, node_budget, N_cap)


# ---------------------------------------------------------------------------


def chain_links(n: int) -> dict[str, bool]:
    """Links of ``F_3(n) >= 2^(2^n) >= 2^(140 n^2) >= 10^(35 n^2)``.

    The head uses ``F_3(n) >= F_2(F_2(n))`` and ``F_2(y) >= 2^y``; the tail
    is compared with exact integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    f2n = ((n + 1) << (n + 1)) - 1
    return {
        "F3_head": f2n >= (1 << n),
        "double_exp_vs_140n2": (1 << (1 << n)) >= (1 << (140 * n * n)),
        "140n2_vs_10^35n2": (1 << (140 * n * n)) >= 10 ** (35 * n * n),
    }


def solovay_chain_check(n: int) -> bool:
    if not 15 <= n <= 18:
        raise ValueError("the chain is checked for 15 <= n <= 18")
    return all(chain_links(n).values())
