"""Classification of pairs (m, n) and the explicit rank-one constructions."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from .core import HeffterArray, array_from_factors
from .errors import InvalidArgument, InvalidParams, NotAdmissible, NotAgreeable, NotPerfectEligible
from .field import FieldSpec, make_field
from .numtheory import factorize, lcm, odd_part, prime_divisors, prime_power_decompose, radical


def odd_part_radical(k: int) -> tuple[int, int]:
    """Return ``(greatest odd divisor of k, product of the distinct primes of k)``."""
    if k < 1:
        raise InvalidArgument(f"odd part/radical need k >= 1, got {k}")
    return odd_part(k), radical(k)


@dataclass(frozen=True)
class PairClass:
    m: int
    n: int
    q: int
    admissible: bool
    prime_power: tuple[int, int] | None
    agreeable: bool
    optimal_pair: bool
    perfect_eligible: bool
    m_o: int
    n_o: int
    rad_m_o: int
    rad_n_o: int
    lcm_odd: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["prime_power"] = list(self.prime_power) if self.prime_power else None
        return d


def _has_distinct_odd_primes(m: int, n: int) -> bool:
    pm = [p for p in prime_divisors(m) if p != 2]
    pn = [p for p in prime_divisors(n) if p != 2]
    return bool(pm) and bool(pn) and len(set(pm) | set(pn)) >= 2


def classify_pair(m: int, n: int) -> PairClass:
    """Arithmetic classification of (m, n).

    The agreeable/optimal flags depend on m and n alone; combine them with
    ``admissible`` to get the admissible-pair notions.
    """
    if m < 1 or n < 1:
        raise InvalidArgument(f"dimensions must be positive, got ({m},{n})")
    q = 2 * m * n + 1
    pp = prime_power_decompose(q)
    m_o, n_o = odd_part(m), odd_part(n)
    rad_m, rad_n = radical(m_o), radical(n_o)
    agreeable = _has_distinct_odd_primes(m, n)
    optimal = agreeable and (n_o % (m_o * rad_m) != 0) and (m_o % (n_o * rad_n) != 0)
    return PairClass(
        m=m,
        n=n,
        q=q,
        admissible=pp is not None and m > 2 and n > 2,
        prime_power=pp,
        agreeable=agreeable,
        optimal_pair=optimal,
        perfect_eligible=m % 2 == 1 and n % 2 == 1 and gcd(m, n) == 1,
        m_o=m_o,
        n_o=n_o,
        rad_m_o=rad_m,
        rad_n_o=rad_n,
        lcm_odd=lcm(m_o, n_o),
    )


@dataclass(frozen=True)
class AgreeableParams:
    m1: int
    n1: int
    m2: int
    n2: int

    @property
    def e(self) -> int:
        return self.m2 * self.n2

    @classmethod
    def from_split(cls, m: int, n: int, m1: int, n1: int) -> "AgreeableParams":
        m_o, n_o = odd_part(m), odd_part(n)
        if m1 <= 1 or n1 <= 1 or m_o % m1 or n_o % n1 or gcd(m1, n1) != 1:
            raise InvalidParams(
                f"(m1,n1)=({m1},{n1}) must be coprime, > 1, with m1 | {m_o} and n1 | {n_o}"
            )
        return cls(m1, n1, m // m1, n // n1)


def _split_lcm(a: int, b: int) -> tuple[int, int]:
    """Coprime (a1, b1) with a1 | a, b1 | b, a1 * b1 = lcm(a, b), for odd a <= b."""
    fa, fb = factorize(a), factorize(b)
    a1 = b1 = 1
    for p in sorted(set(fa) | set(fb)):
        alpha, beta = fa.get(p, 0), fb.get(p, 0)
        if alpha >= beta:
            a1 *= p**alpha
        else:
            b1 *= p**beta
    return a1, b1


def agreeable_parameters(m: int, n: int) -> AgreeableParams:
    """Default (m1, n1) split for the agreeable construction.

    For optimal pairs the split has m1 * n1 = lcm(m_o, n_o), which makes the
    constructed array optimal.  Otherwise the lexicographically smallest pair of
    distinct odd primes p | m, p' | n is used.
    """
    cls = classify_pair(m, n)
    if not cls.agreeable:
        raise NotAgreeable(f"({m},{n}) has no distinct odd primes p | m, p' | n")
    m_o, n_o = cls.m_o, cls.n_o
    if cls.optimal_pair:
        if m_o == n_o:
            p = prime_divisors(m_o)[0]
            m1 = p ** factorize(m_o)[p]
            n1 = m_o // m1
        elif m_o < n_o:
            m1, n1 = _split_lcm(m_o, n_o)
        else:
            n1, m1 = _split_lcm(n_o, m_o)
        return AgreeableParams.from_split(m, n, m1, n1)
    for p in prime_divisors(m_o):
        for p2 in prime_divisors(n_o):
            if p != p2:
                return AgreeableParams.from_split(m, n, p, p2)
    raise AssertionError("unreachable for agreeable pairs")


def _field_for(m: int, n: int) -> tuple[FieldSpec, PairClass]:
    cls = classify_pair(m, n)
    if not cls.admissible:
        raise NotAdmissible(f"({m},{n}) is not admissible: q = {cls.q}")
    return make_field(*cls.prime_power), cls


def perfect_factors(m: int, n: int) -> tuple[FieldSpec, list[int], list[int]]:
    f, cls = _field_for(m, n)
    if not cls.perfect_eligible:
        raise NotPerfectEligible(f"({m},{n}) is not a pair of odd coprime integers")
    x = f.exp(2 * n)
    y = f.exp(2 * m)
    return f, [f.pow(x, i) for i in range(m)], [f.pow(y, j) for j in range(n)]


def construct_perfect(m: int, n: int) -> HeffterArray:
    """The array [r^(2n*i + 2m*j)], whose factors are the subgroups of orders m and n."""
    f, xs, ys = perfect_factors(m, n)
    return array_from_factors(f, xs, ys)


def agreeable_factors(
    m: int, n: int, params: AgreeableParams | None = None
) -> tuple[FieldSpec, list[int], list[int]]:
    """Ordered factor lists X, Y for the agreeable construction.

    X is the union of the classes C^{2*m2*n}_i for i < m2 and Y the union of
    C^{2*m*n2}_{j*m2} for j < n2; each class is listed as r^i, r^i*rho, r^i*rho^2, ...
    with rho generating the class's subgroup.
    """
    f, cls = _field_for(m, n)
    if not cls.agreeable:
        raise NotAgreeable(f"({m},{n}) has no distinct odd primes p | m, p' | n")
    if params is None:
        params = agreeable_parameters(m, n)
    else:
        params = AgreeableParams.from_split(m, n, params.m1, params.n1)
    m1, n1, m2, n2 = params.m1, params.n1, params.m2, params.n2
    ex = 2 * m2 * n
    ey = 2 * m * n2
    xs = [f.exp(i + ex * t) for i in range(m2) for t in range(m1)]
    ys = [f.exp(j * m2 + ey * t) for j in range(n2) for t in range(n1)]
    return f, xs, ys


def construct_agreeable(m: int, n: int, params: AgreeableParams | None = None) -> HeffterArray:
    f, xs, ys = agreeable_factors(m, n, params)
    return array_from_factors(f, xs, ys)


def construct(m: int, n: int, method: str = "auto", params: AgreeableParams | None = None) -> tuple[HeffterArray, dict]:
    """Dispatch on ``method``; returns the array and a provenance record."""
    if method == "auto":
        cls = classify_pair(m, n)
        if not cls.admissible:
            raise NotAdmissible(f"({m},{n}) is not admissible: q = {cls.q}")
        if cls.perfect_eligible and params is None:
            method = "perfect"
        elif cls.agreeable:
            method = "agreeable"
        else:
            raise NotAgreeable(f"({m},{n}) is disagreeable; no explicit construction, use search")
    if method == "perfect":
        return construct_perfect(m, n), {"method": "perfect", "params": {"m": m, "n": n}}
    if method == "agreeable":
        if params is None:
            params = agreeable_parameters(m, n)
        arr = construct_agreeable(m, n, params)
        return arr, {"method": "agreeable", "params": {"m": m, "n": n, "m1": params.m1, "n1": params.n1}}
    raise InvalidArgument(f"unknown construction method {method!r}")
