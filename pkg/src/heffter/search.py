"""Bounded search for rank-one Heffter arrays on pairs with no explicit construction.

Everything runs in discrete-log coordinates.  With h = (q-1)/2 (the log of -1),
sets X and Y (logs A and B) give a half-set product X*Y of size |X||Y| exactly
when no difference of two elements of B lies in D(A) ∪ (D(A)+h) ∪ {h}, where
D(A) is the set of differences of distinct elements of A, and h is not in D(A).
So once X is fixed, Y is grown one element at a time against a forbidden
difference table of size q-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from .constructions import classify_pair
from .core import HeffterArray, array_from_factors, verify_heffter
from .errors import InvalidArgument, NotAdmissible
from .field import FieldSpec, make_field
from .numtheory import odd_part


@dataclass(frozen=True)
class SearchConfig:
    m: int
    n: int
    max_candidates: int = 10**6
    strategy: Literal["exhaustive", "seeded"] = "exhaustive"
    seed: int = 0

    def __post_init__(self):
        if self.max_candidates < 1:
            raise InvalidArgument("max_candidates must be >= 1")
        if self.strategy not in ("exhaustive", "seeded"):
            raise InvalidArgument(f"unknown strategy {self.strategy!r}")


@dataclass(frozen=True)
class SearchOutcome:
    found: HeffterArray | None
    candidates_examined: int
    exhausted: bool


class _Budget(Exception):
    pass


class _Searcher:
    def __init__(self, f: FieldSpec, cfg: SearchConfig):
        self.f = f
        self.cfg = cfg
        self.n_log = f.q - 1
        self.h = self.n_log // 2
        # Total order on nonzero logs used for "increasing" enumeration.
        pool = list(range(1, self.n_log))
        if cfg.seed:
            random.Random(cfg.seed).shuffle(pool)
        self.pool = pool
        self.rank = [0] * self.n_log
        for pos, t in enumerate(pool, start=1):
            self.rank[t] = pos
        self.examined = 0

    # -- zero-sum k-sets containing log 0 ------------------------------------

    def zero_sum_sets(self, size: int, forbidden: bytearray) -> Iterator[list[int]]:
        """Yield log-lists [0, t_1, ..., t_{size-1}] of zero-sum sets, ranks increasing,
        whose pairwise log differences avoid ``forbidden``.

        The last element is solved from the zero-sum condition.  Each completed
        candidate counts against the budget.
        """
        f, N = self.f, self.n_log
        exp, log, add, neg = f.exp, f.log, f.add, f.neg
        pool, rank = self.pool, self.rank
        chosen = [0]

        def ok(t: int) -> bool:
            return all(not forbidden[(t - s) % N] for s in chosen)

        def rec(start: int, total: int) -> Iterator[list[int]]:
            if len(chosen) == size - 1:
                self.examined += 1
                if self.examined > self.cfg.max_candidates:
                    raise _Budget
                last = neg(total)
                if last == 0:
                    return
                t = log(last)
                if t == 0 or (len(chosen) > 1 and rank[t] <= rank[chosen[-1]]):
                    return
                if ok(t):
                    yield chosen + [t]
                return
            for pos in range(start, len(pool)):
                t = pool[pos]
                if not ok(t):
                    continue
                chosen.append(t)
                yield from rec(pos + 1, add(total, exp(t)))
                chosen.pop()

        if size == 1:
            return
        yield from rec(0, 1)

    # -- Y given X ---------------------------------------------------------

    def forbidden_for(self, xs: list[int]) -> bytearray | None:
        N, h = self.n_log, self.h
        bad = bytearray(N)
        bad[0] = 1
        bad[h] = 1
        for a, b in combinations(xs, 2):
            d = (a - b) % N
            if d == h:
                return None
            for v in (d, N - d, (d + h) % N, (h - d) % N):
                bad[v] = 1
        return bad

    def complete(self, xs: list[int], n: int) -> list[int] | None:
        bad = self.forbidden_for(xs)
        if bad is None:
            return None
        for ys in self.zero_sum_sets(n, bad):
            return ys
        return None

    # -- X candidates --------------------------------------------------------

    def exhaustive_x(self, m: int) -> Iterator[list[int]]:
        no_minus = bytearray(self.n_log)
        no_minus[self.h] = 1
        no_minus[0] = 1
        yield from self.zero_sum_sets(m, no_minus)

    def seeded_x(self, m: int) -> Iterator[list[int]]:
        """X as a union of cosets of the odd-order subgroup of order m_o (1 in X)."""
        mo = odd_part(m)
        if mo == 1:
            yield from self.exhaustive_x(m)
            return
        N = self.n_log
        step = N // mo
        base = [step * t for t in range(mo)]
        if m == mo:
            yield base
            return
        # coset representatives r^c for 0 < c < step, in pool order
        reps = sorted(range(1, step), key=lambda c: self.rank[c])
        for extra in combinations(reps, m // mo - 1):
            self.examined += 1
            if self.examined > self.cfg.max_candidates:
                raise _Budget
            yield base + [(c + s) % N for c in extra for s in base]


def search_rank_one(cfg: SearchConfig) -> SearchOutcome:
    """Look for a rank-one H(m, n) by enumerating normalized factor pairs (1 in X, 1 in Y)."""
    cls = classify_pair(cfg.m, cfg.n)
    if not cls.admissible:
        raise NotAdmissible(f"({cfg.m},{cfg.n}) is not admissible: q = {cls.q}")
    f = make_field(*cls.prime_power)
    m, n = cfg.m, cfg.n
    transpose = cfg.strategy == "seeded" and odd_part(m) == 1 and odd_part(n) > 1
    if transpose:
        m, n = n, m
    s = _Searcher(f, cfg)
    xs_iter = s.seeded_x(m) if cfg.strategy == "seeded" else s.exhaustive_x(m)
    try:
        for xs in xs_iter:
            ys = s.complete(xs, n)
            if ys is not None:
                arr = array_from_factors(f, [f.exp(t) for t in xs], [f.exp(t) for t in ys])
                if transpose:
                    arr = arr.transpose()
                report = verify_heffter(arr, simple=False)
                if not (report.is_heffter and report.rank_one):
                    raise AssertionError("search produced an invalid array")
                return SearchOutcome(arr, min(s.examined, cfg.max_candidates), False)
    except _Budget:
        return SearchOutcome(None, cfg.max_candidates, False)
    return SearchOutcome(None, s.examined, True)


def scan_pairs(max_q: int) -> list:
    """Classify every (m, n) with 3 <= m <= n and 2mn + 1 <= max_q, ordered by (q, m)."""
    rows = []
    m = 3
    while 2 * m * m + 1 <= max_q:
        n = m
        while 2 * m * n + 1 <= max_q:
            rows.append(classify_pair(m, n))
            n += 1
        m += 1
    rows.sort(key=lambda c: (c.q, c.m))
    return rows
