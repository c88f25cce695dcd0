"""Finite fields F_{p^k} with a fixed primitive element and table-driven arithmetic.

Elements are handled as integer *codes*: the element c_0 + c_1 g + ... + c_{k-1} g^{k-1}
(g a root of the field modulus) has code c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
For prime fields the code is simply the residue.  Hot loops elsewhere in the
package work directly on codes through the ``FieldSpec`` methods; ``FieldElement``
is the operator-overloaded wrapper for interactive use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import FieldMismatch, InvalidArgument, InvalidModulus
from .numtheory import is_prime, prime_divisors, prime_power_decompose

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "discrete_log",
    "prime_power_decompose",
    "field_of_order",
]


def _polymulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    """Product of two length-k coefficient lists reduced by a monic degree-k modulus."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for t in range(len(prod) - 1, k - 1, -1):
        c = prod[t] % p
        if c:
            for s in range(k):
                prod[t - k + s] -= c * modulus[s]
    return [c % p for c in prod[:k]]


def _x_power(e: int, modulus: Sequence[int], p: int) -> list[int]:
    k = len(modulus) - 1
    result = [1] + [0] * (k - 1)
    base = [0, 1] + [0] * (k - 2)
    while e:
        if e & 1:
            result = _polymulmod(result, base, modulus, p)
        base = _polymulmod(base, base, modulus, p)
        e >>= 1
    return result


def _root_is_primitive(modulus: Sequence[int], p: int) -> bool:
    # Order of x in F_p[x]/(f) equal to p^k - 1 forces f irreducible as well as primitive.
    k = len(modulus) - 1
    if modulus[0] == 0:
        return False
    n = p**k - 1
    one = [1] + [0] * (k - 1)
    if _x_power(n, modulus, p) != one:
        return False
    return all(_x_power(n // s, modulus, p) != one for s in prime_divisors(n))


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    qs = prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // s, p) != 1 for s in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    for enc in range(1, p**k):
        low = [(enc // p**t) % p for t in range(k)]
        modulus = low + [1]
        if _root_is_primitive(modulus, p):
            return tuple(modulus)
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


class FieldSpec:
    """The field F_q, q = p^k, with canonical primitive element ``r``.

    Instances are immutable and should be obtained through :func:`make_field`.
    """

    __slots__ = ("p", "k", "q", "modulus", "r", "_exp", "_log", "_zech", "_minus_one")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        n = self.q - 1
        if k == 1:
            r = _smallest_primitive_root(p)
            exp = [1] * n
            for t in range(1, n):
                exp[t] = exp[t - 1] * r % p
        else:
            r = p  # code of g
            exp = [1] * n
            cur = [1] + [0] * (k - 1)
            for t in range(1, n):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(c - top * m) % p for c, m in zip(cur, modulus)]
                code = 0
                for c in reversed(cur):
                    code = code * p + c
                exp[t] = code
        log = [-1] * self.q
        for t, v in enumerate(exp):
            log[v] = t
        if -1 in log[1:]:
            raise AssertionError("primitive element does not generate the field")
        self.r = r
        self._exp = tuple(exp)
        self._log = tuple(log)
        if k == 1:
            self._zech = None
        else:
            zech = [-1] * n
            for t, v in enumerate(exp):
                c0 = v % p
                w = v - c0 + (c0 + 1) % p
                zech[t] = log[w] if w else -1
            self._zech = tuple(zech)
        self._minus_one = exp[n // 2] if p != 2 else 1

    # -- identity -----------------------------------------------------------

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.k == 1:
            return f"FieldSpec(F_{self.q}, r={self.r})"
        return f"FieldSpec(F_{self.q}, modulus={list(self.modulus)})"

    # -- code-level arithmetic ---------------------------------------------

    @property
    def order(self) -> int:
        return self.q

    @property
    def minus_one(self) -> int:
        return self._minus_one

    def exp(self, t: int) -> int:
        """r**t as a code; any integer exponent."""
        return self._exp[t % (self.q - 1)]

    def log(self, x: int) -> int:
        if x == 0:
            raise InvalidArgument("discrete log of zero")
        return self._log[x]

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        d = self._log[b] - la
        if d < 0:
            d += self.q - 1
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.mul(a, self._minus_one)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def sum(self, codes: Iterable[int]) -> int:
        total = 0
        if self.k == 1:
            for c in codes:
                total += c
            return total % self.p
        for c in codes:
            total = self.add(total, c)
        return total

    def units(self) -> Iterator[int]:
        """Nonzero elements in discrete-log order r^0, r^1, ..."""
        return iter(self._exp)

    # -- conversion ---------------------------------------------------------

    def coeffs(self, code: int) -> list[int]:
        return [(code // self.p**t) % self.p for t in range(self.k)]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.k:
            raise InvalidArgument(f"expected {self.k} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise InvalidArgument(f"coefficient {c} out of range [0,{self.p})")
            code = code * self.p + c
        return code

    def format(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        terms = []
        for t, c in reversed(list(enumerate(self.coeffs(code)))):
            if c == 0:
                continue
            if t == 0:
                terms.append(str(c))
                continue
            mono = "g" if t == 1 else f"g^{t}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"

    _TERM = re.compile(r"^(\d*)(g(?:\^(\d+))?)?$")

    def parse(self, text: str) -> int:
        """Inverse of :meth:`format`; prime fields also accept negative integers."""
        s = text.replace(" ", "")
        if not s:
            raise InvalidArgument("empty element text")
        if self.k == 1:
            try:
                return int(s) % self.p
            except ValueError:
                raise InvalidArgument(f"bad element {text!r} for F_{self.q}") from None
        code = 0
        for term in s.split("+"):
            mt = self._TERM.match(term)
            if not term or mt is None or (not mt.group(1) and not mt.group(2)):
                raise InvalidArgument(f"bad element {text!r} for F_{self.q}")
            coef = int(mt.group(1)) % self.p if mt.group(1) else 1
            if mt.group(2):
                deg = int(mt.group(3)) if mt.group(3) else 1
                val = self.mul(coef, self.pow(self.r, deg))
            else:
                val = coef
            code = self.add(code, val)
        return code

    def element(self, x: Union[int, str, Sequence[int], "FieldElement"]) -> "FieldElement":
        """Wrap a code, a text rendering, or a coefficient list."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch("element belongs to another field")
            return x
        if isinstance(x, str):
            return FieldElement(self, self.parse(x))
        if isinstance(x, int):
            if not 0 <= x < self.q:
                raise InvalidArgument(f"code {x} out of range for F_{self.q}")
            return FieldElement(self, x)
        return FieldElement(self, self.from_coeffs(list(x)))

    def codes(self, items: Iterable) -> list[int]:
        """Convert mixed element inputs (codes, text, FieldElements) into codes."""
        out = []
        for x in items:
            if isinstance(x, int):
                out.append(x)
            else:
                out.append(self.element(x).value)
        return out


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p  # integer n embeds as n * 1
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field.format(self.value)} in F_{self.field.q})"


@lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, k, modulus)


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build (or fetch from cache) the field of order p**k.

    ``modulus`` lists the coefficients of a monic primitive polynomial, constant
    term first.  When omitted for k > 1 the primitive polynomial with the smallest
    encoding sum(c_t * p**t) is chosen.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"characteristic {p} is not prime")
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"extension degree must be >= 1, got {k}")
    if k == 1:
        if modulus is not None:
            raise InvalidModulus("prime fields take no modulus")
        return _make_field(p, 1, None)
    if modulus is None:
        return _make_field(p, k, _canonical_modulus(p, k))
    mod = tuple(int(c) for c in modulus)
    if len(mod) != k + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
        raise InvalidModulus(f"modulus {list(mod)} is not monic of degree {k} over F_{p}")
    if not _root_is_primitive(mod, p):
        raise InvalidModulus(f"modulus {list(mod)} is not a primitive polynomial over F_{p}")
    return _make_field(p, k, mod)


def field_of_order(q: int) -> FieldSpec:
    """Canonical field of prime-power order ``q``."""
    pk = prime_power_decompose(q)
    if pk is None:
        raise InvalidArgument(f"{q} is not a prime power")
    return make_field(*pk)


def discrete_log(f: FieldSpec, x: Union[int, FieldElement]) -> int:
    """The exponent t in [0, q-2] with r**t == x."""
    if isinstance(x, FieldElement):
        if x.field != f:
            raise FieldMismatch("element belongs to another field")
        x = x.value
    return f.log(x)
