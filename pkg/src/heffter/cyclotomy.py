"""Cyclotomic classes, subgroups of F_q^*, and set predicates over them."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FieldMismatch, InvalidArgument, InvalidIndex, InvalidOrder
from .field import FieldSpec


class ElementSet:
    """An immutable set of nonzero field elements (as codes), ordered by discrete log."""

    __slots__ = ("field", "_items", "_set")

    def __init__(self, field: FieldSpec, elements: Iterable = ()):
        codes = set(field.codes(elements))
        if 0 in codes:
            raise InvalidArgument("element sets exclude 0")
        log = field.log
        self.field = field
        self._items = tuple(sorted(codes, key=log))
        self._set = frozenset(codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, x) -> bool:
        return x in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementSet):
            return self.field == other.field and self._set == other._set
        if isinstance(other, (set, frozenset)):
            return self._set == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self._set))

    def __repr__(self):
        return "{" + ", ".join(self.field.format(x) for x in self._items) + "}"

    @property
    def codes(self) -> frozenset[int]:
        return self._set

    def as_list(self) -> list[int]:
        return list(self._items)

    def render(self) -> str:
        return ",".join(self.field.format(x) for x in self._items)

    def scaled(self, u: int) -> "ElementSet":
        mul = self.field.mul
        return ElementSet(self.field, (mul(u, x) for x in self._items))

    def negated(self) -> "ElementSet":
        return self.scaled(self.field.minus_one)

    def union(self, other: "ElementSet") -> "ElementSet":
        _same_field(self, other)
        return ElementSet(self.field, self._set | other._set)


def _same_field(a: ElementSet, b: ElementSet) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"sets live in different fields: {a.field!r} vs {b.field!r}")


def cyclotomic_class(f: FieldSpec, e: int, i: int = 0) -> ElementSet:
    """C^e_i = r^i * <r^e>, a coset of the subgroup of index ``e``."""
    n = f.q - 1
    if e < 1 or n % e:
        raise InvalidIndex(f"index {e} does not divide q-1 = {n}")
    return ElementSet(f, (f.exp(i + e * t) for t in range(n // e)))


def subgroup_of_order(f: FieldSpec, d: int) -> ElementSet:
    n = f.q - 1
    if d < 1 or n % d:
        raise InvalidOrder(f"order {d} does not divide q-1 = {n}")
    return cyclotomic_class(f, n // d, 0)


def is_zero_sum(s: ElementSet) -> bool:
    return s.field.sum(s) == 0


def is_half_set(s: ElementSet) -> bool:
    f = s.field
    if f.q % 2 == 0 or len(s) != (f.q - 1) // 2:
        return False
    neg = f.neg
    return not any(neg(x) in s for x in s)


def _stabilizes(s: ElementSet, u: int) -> bool:
    mul = s.field.mul
    return all(mul(u, x) in s for x in s)


def stabilizer(s: ElementSet) -> ElementSet:
    """All units u with u*s == s."""
    if len(s) == 0:
        raise InvalidArgument("stabilizer of the empty set")
    f = s.field
    if len(s) * len(s) >= f.q - 1:
        candidates: Iterable[int] = f.units()
    else:
        # u*s == s forces u*x0 in s for any fixed x0 in s
        x0_inv = f.inv(next(iter(s)))
        candidates = (f.mul(y, x0_inv) for y in s)
    return ElementSet(f, [u for u in candidates if _stabilizes(s, u)])


def is_union_of_cosets(s: ElementSet, d: int) -> bool:
    """True if ``s`` is closed under multiplication by the subgroup of order ``d``."""
    return all(_stabilizes(s, h) for h in subgroup_of_order(s.field, d))


def product_factorization(x: ElementSet, y: ElementSet) -> ElementSet | None:
    """The set x*y when all |x|*|y| products are distinct, otherwise ``None``."""
    _same_field(x, y)
    if not len(x) or not len(y):
        raise InvalidArgument("factors must be nonempty")
    f = x.field
    mul = f.mul
    seen = bytearray(f.q)
    out = []
    for a in x:
        for b in y:
            c = mul(a, b)
            if seen[c]:
                return None
            seen[c] = 1
            out.append(c)
    return ElementSet(f, out)


def product_set(x: ElementSet, y: ElementSet) -> ElementSet:
    """The plain (non-exact) product {a*b}."""
    _same_field(x, y)
    mul = x.field.mul
    return ElementSet(x.field, {mul(a, b) for a in x for b in y})
