"""Heffter arrays over F_q and their verification.

An array is stored as a tuple of rows of element codes (see :mod:`heffter.field`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Literal, Sequence

from .cyclotomy import ElementSet, is_half_set, product_set, stabilizer
from .errors import DimensionMismatch, FieldMismatch, NotRankOne, UnsupportedField
from .field import FieldSpec

Matrix = Sequence[Sequence[int]]


class HeffterArray:
    """An m x n matrix over F_q with q = 2mn + 1 (a *candidate* Heffter array).

    Construction checks shape only; whether the entries actually form a Heffter
    array is decided by :func:`verify_heffter`.
    """

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: Iterable[Iterable]):
        rows = tuple(tuple(field.codes(row)) for row in entries)
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("rows have different lengths")
        if m < 3 or n < 3:
            raise DimensionMismatch(f"both dimensions must exceed 2, got {m}x{n}")
        if field.q != 2 * m * n + 1:
            raise DimensionMismatch(f"F_{field.q} cannot host an H({m},{n}): need q = {2 * m * n + 1}")
        if any(not 0 <= x < field.q for row in rows for x in row):
            raise DimensionMismatch("entry code out of range for the field")
        self.field = field
        self.entries = rows

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def rows(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    def cols(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.n)]

    def entry_set(self) -> frozenset[int]:
        return frozenset(x for row in self.entries for x in row)

    def transpose(self) -> "HeffterArray":
        return HeffterArray(self.field, zip(*self.entries))

    def scaled(self, u) -> "HeffterArray":
        (u,) = self.field.codes([u])
        mul = self.field.mul
        return HeffterArray(self.field, [[mul(u, x) for x in row] for row in self.entries])

    def formatted(self) -> list[list[str]]:
        fmt = self.field.format
        return [[fmt(x) for x in row] for row in self.entries]

    def __eq__(self, other):
        return isinstance(other, HeffterArray) and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"HeffterArray(F_{self.field.q}, {self.m}x{self.n})"


def array_from_factors(f: FieldSpec, x: Sequence, y: Sequence) -> HeffterArray:
    """The rank-one array [x_i * y_j] for ordered factor lists."""
    xs, ys = f.codes(x), f.codes(y)
    mul = f.mul
    return HeffterArray(f, [[mul(a, b) for b in ys] for a in xs])


@dataclass
class VerificationReport:
    half_set: bool
    rows_zero_sum: bool
    cols_zero_sum: bool
    rank_one: bool | None = None
    globally_simple: bool | None = None
    failures: list[tuple[str, str]] = dc_field(default_factory=list)

    @property
    def is_heffter(self) -> bool:
        return self.half_set and self.rows_zero_sum and self.cols_zero_sum

    @property
    def passed(self) -> bool:
        return self.is_heffter and self.rank_one is not False and self.globally_simple is not False

    def to_dict(self) -> dict:
        return {
            "half_set": self.half_set,
            "rows_zero_sum": self.rows_zero_sum,
            "cols_zero_sum": self.cols_zero_sum,
            "rank_one": self.rank_one,
            "globally_simple": self.globally_simple,
            "failures": [{"check": c, "location": loc} for c, loc in self.failures],
        }


@dataclass(frozen=True)
class RankOneFactors:
    """Ordered factor lists with a[i][j] == x[i] * y[j] and x[0] == 1."""

    field: FieldSpec
    x: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def x_set(self) -> ElementSet:
        return ElementSet(self.field, self.x)

    @property
    def y_set(self) -> ElementSet:
        return ElementSet(self.field, self.y)


@dataclass(frozen=True)
class MultiplierGroup:
    elements: ElementSet
    s_part: ElementSet | None = None
    t_part: ElementSet | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_dict(self) -> dict:
        out: dict = {"order": self.order, "elements": [self.elements.field.format(u) for u in self.elements]}
        if self.s_part is not None:
            out["s_part"] = [self.elements.field.format(u) for u in self.s_part]
            out["t_part"] = [self.elements.field.format(u) for u in self.t_part]
        return out


def _half_set_failure(a: HeffterArray) -> str | None:
    f = a.field
    where: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(a.entries):
        for j, x in enumerate(row):
            if x == 0:
                return f"entry ({i + 1},{j + 1}) is zero"
            if x in where:
                i0, j0 = where[x]
                return f"entries ({i0 + 1},{j0 + 1}) and ({i + 1},{j + 1}) are equal"
            nx = f.neg(x)
            if nx in where:
                i0, j0 = where[nx]
                return f"entries ({i0 + 1},{j0 + 1}) and ({i + 1},{j + 1}) are opposite"
            where[x] = (i, j)
    return None


def verify_heffter(a: HeffterArray, *, rank: bool = True, simple: bool = True) -> VerificationReport:
    """Check the Heffter axioms, plus rank-one and global simplicity when requested."""
    f = a.field
    failures: list[tuple[str, str]] = []
    bad = _half_set_failure(a)
    half = bad is None
    if not half:
        failures.append(("half_set", bad))
    else:
        half = is_half_set(ElementSet(f, a.entry_set()))

    rows_ok = True
    for i, row in enumerate(a.entries):
        if f.sum(row) != 0:
            rows_ok = False
            failures.append(("row_zero_sum", f"row {i + 1}"))
            break
    cols_ok = True
    for j, col in enumerate(a.cols()):
        if f.sum(col) != 0:
            cols_ok = False
            failures.append(("col_zero_sum", f"column {j + 1}"))
            break

    report = VerificationReport(half, rows_ok, cols_ok, failures=failures)
    if rank:
        report.rank_one = rank_one_factors(a) is not None
        if not report.rank_one:
            failures.append(("rank_one", "rows not proportional to row 1"))
    if simple:
        loc = _first_non_simple_line(a)
        report.globally_simple = loc is None
        if loc is not None:
            failures.append(("globally_simple", loc))
    return report


def rank_one_factors(a: HeffterArray) -> RankOneFactors | None:
    """Factors (x, y) with x_1 = 1 and y = row 1, or ``None`` if the rank exceeds 1."""
    f = a.field
    first = a.entries[0]
    if any(v == 0 for row in a.entries for v in row):
        return None
    inv11 = f.inv(first[0])
    x = tuple(f.mul(row[0], inv11) for row in a.entries)
    mul = f.mul
    for xi, row in zip(x, a.entries):
        if any(mul(xi, yj) != v for yj, v in zip(first, row)):
            return None
    return RankOneFactors(f, x, tuple(first))


def _assign_columns(cands: list[set[int]]) -> bool:
    """Whether candidate sets admit a system of distinct representatives."""
    match: dict[int, int] = {}

    def augment(j: int, seen: set[int]) -> bool:
        for c in cands[j]:
            if c in seen:
                continue
            seen.add(c)
            if c not in match or augment(match[c], seen):
                match[c] = j
                return True
        return False

    return all(augment(j, set()) for j in range(len(cands)))


def perm_equivalent(a, b) -> bool:
    """True iff b[i][j] == a[pi(i)][psi(j)] for some row/column permutations."""
    ea = a.entries if isinstance(a, HeffterArray) else tuple(map(tuple, a))
    eb = b.entries if isinstance(b, HeffterArray) else tuple(map(tuple, b))
    if isinstance(a, HeffterArray) and isinstance(b, HeffterArray) and a.field != b.field:
        raise FieldMismatch("arrays over different fields")
    m = len(ea)
    if m != len(eb):
        return False
    if m == 0:
        return True
    n = len(ea[0])
    if any(len(r) != n for r in ea) or any(len(r) != n for r in eb):
        return False
    if Counter(x for r in ea for x in r) != Counter(x for r in eb for x in r):
        return False

    def sig(line):
        return tuple(sorted(line))

    def groups(lines) -> dict[tuple, list[int]]:
        out: dict[tuple, list[int]] = {}
        for idx, line in enumerate(lines):
            out.setdefault(sig(line), []).append(idx)
        return out

    a_cols = [tuple(r[j] for r in ea) for j in range(n)]
    b_cols = [tuple(r[j] for r in eb) for j in range(n)]
    a_row_groups, a_col_groups = groups(ea), groups(a_cols)
    b_row_sigs, b_col_sigs = [sig(r) for r in eb], [sig(c) for c in b_cols]
    if Counter(b_row_sigs) != Counter({s: len(v) for s, v in a_row_groups.items()}):
        return False
    if Counter(b_col_sigs) != Counter({s: len(v) for s, v in a_col_groups.items()}):
        return False
    row_cands = [a_row_groups[s] for s in b_row_sigs]
    col_cands = [set(a_col_groups[s]) for s in b_col_sigs]
    # most constrained rows first
    order = sorted(range(m), key=lambda i: len(row_cands[i]))
    used = [False] * m

    def search(depth: int, cands: list[set[int]]) -> bool:
        if depth == m:
            return _assign_columns(cands)
        bi = order[depth]
        brow = eb[bi]
        for ai in row_cands[bi]:
            if used[ai]:
                continue
            arow = ea[ai]
            narrowed = [{c for c in cs if arow[c] == brow[j]} for j, cs in enumerate(cands)]
            if any(not cs for cs in narrowed):
                continue
            used[ai] = True
            if search(depth + 1, narrowed):
                return True
            used[ai] = False
        return False

    return search(0, col_cands)


def _is_multiplier(a: HeffterArray, u: int, entries: frozenset[int]) -> bool:
    mul = a.field.mul
    if any(mul(u, x) not in entries for x in entries):
        return False
    ua = a.scaled(u)
    if perm_equivalent(ua, a):
        return True
    return a.m == a.n and perm_equivalent(ua.transpose(), a)


def multiplier_group_brute(a: HeffterArray) -> MultiplierGroup:
    """Test every unit against the definition of a multiplier."""
    entries = a.entry_set()
    found = [u for u in a.field.units() if _is_multiplier(a, u, entries)]
    return MultiplierGroup(ElementSet(a.field, found))


def multiplier_group_rank_one(a: HeffterArray) -> MultiplierGroup:
    """Multipliers of a rank-one array as the product of the factor stabilizers."""
    fac = rank_one_factors(a)
    if fac is None:
        raise NotRankOne("array is not rank-one")
    s = stabilizer(fac.x_set)
    t = stabilizer(fac.y_set)
    return MultiplierGroup(product_set(s, t), s, t)


def multiplier_group(a: HeffterArray) -> MultiplierGroup:
    if rank_one_factors(a) is not None:
        return multiplier_group_rank_one(a)
    return multiplier_group_brute(a)


def partial_sums(f: FieldSpec, line: Sequence) -> list[int]:
    out = []
    acc = 0
    for x in f.codes(line):
        acc = f.add(acc, x)
        out.append(acc)
    return out


def _has_distinct_partial_sums(f: FieldSpec, line: Sequence[int]) -> bool:
    sums = partial_sums(f, line)
    return len(set(sums)) == len(sums)


def _first_non_simple_line(a: HeffterArray) -> str | None:
    for i, row in enumerate(a.entries):
        if not _has_distinct_partial_sums(a.field, row):
            return f"row {i + 1}"
    for j, col in enumerate(a.cols()):
        if not _has_distinct_partial_sums(a.field, col):
            return f"column {j + 1}"
    return None


def is_globally_simple(a: HeffterArray, mode: Literal["full", "fast"] = "full") -> bool:
    """Every row and column has pairwise distinct partial sums.

    ``fast`` inspects only the first row and first column, which suffices for
    rank-one arrays since every other line is a scalar multiple of those.
    """
    if mode == "fast":
        if rank_one_factors(a) is None:
            raise NotRankOne("fast global-simplicity check needs a rank-one array")
        return _has_distinct_partial_sums(a.field, a.row(0)) and _has_distinct_partial_sums(a.field, a.col(0))
    if mode != "full":
        raise ValueError(f"unknown mode {mode!r}")
    return _first_non_simple_line(a) is None


def is_isomorphic_prime(a: HeffterArray, b: HeffterArray) -> bool:
    """Isomorphism over a prime field, where every automorphism is a unit multiplication."""
    if a.field.k != 1 or b.field.k != 1:
        raise UnsupportedField("isomorphism testing is implemented for prime fields only")
    if a.field != b.field:
        return False
    target = b.entry_set()
    mul = a.field.mul
    src = a.entry_set()
    for u in a.field.units():
        if any(mul(u, x) not in target for x in src):
            continue
        ua = a.scaled(u)
        if perm_equivalent(ua, b):
            return True
        if perm_equivalent(ua.transpose(), b):
            return True
    return False
