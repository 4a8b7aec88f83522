"""
Exact index algebra of the Cayley-Dickson 2^N-ions.

Basis units are addressed by integer index; the product of two units has
the XOR of their indices as its index. The sign is resolved by recursive
reduction on associative triplets ("trips"):

- seed: (1, 2, 3) is cyclically positive.
- generator: for u < G, (u, G, G + u) is cyclically positive.
- lift: for a positive trip (z, p, q) below G, (z, G + q, G + p) is
  positive. Adding G to two members swaps their places.

A second, independent route to the same signs is the dimension-doubling
product on sparse integer multivectors (``doubling_product``). The trip
reduction is authoritative; the doubling product is used as a check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, NotATripError

MAX_N = 16


@dataclass(frozen=True)
class AlgebraContext:
    """The 2^N-ions, with generator G = 2^(N-1) and half-generator g = 2^(N-2)."""

    n: int

    def __post_init__(self):
        if not 2 <= self.n <= MAX_N:
            raise DomainError(f"N must lie in [2, {MAX_N}], got {self.n}")

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def G(self) -> int:
        return 1 << (self.n - 1)

    @property
    def g(self) -> int:
        return 1 << (self.n - 2)

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.dim:
            raise DomainError(f"index {i} outside [0, {self.dim}) for N={self.n}")


@dataclass(frozen=True)
class SignedBasis:
    index: int
    sign: int = 1

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{self.index}"


@dataclass(frozen=True)
class Trip:
    """An associative triplet in cyclically positive order, smallest index first."""

    a: int
    b: int
    c: int

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def rotated_to(self, first: int) -> tuple[int, int, int]:
        t = self.as_tuple()
        k = t.index(first)
        return t[k:] + t[:k]


def _high_power(x: int) -> int:
    return 1 << (x.bit_length() - 1)


@lru_cache(maxsize=None)
def _cpo(x: int, y: int, z: int) -> tuple[int, int, int]:
    # x < y < z, all nonzero, x ^ y ^ z == 0
    if (x, y, z) == (1, 2, 3):
        return (1, 2, 3)
    H = _high_power(z)
    # with x < y < z, exactly y and z carry the H bit
    if y == H:
        return (x, H, z)
    sub = Trip(*_cpo(*sorted((x, y - H, z - H))))
    _, p, q = sub.rotated_to(x)
    return (x, H + q, H + p)


def trip_orientation(x: int, y: int, z: int) -> tuple[int, int, int]:
    """Return {x, y, z} in cyclically positive order, starting from ``x``."""
    if x ^ y ^ z != 0:
        raise NotATripError(f"{x} ^ {y} ^ {z} != 0")
    if len({x, y, z}) != 3 or 0 in (x, y, z):
        raise NotATripError(f"trip indices must be distinct and nonzero: {(x, y, z)}")
    t = Trip(*_cpo(*sorted((x, y, z))))
    return t.rotated_to(x)


def is_cyclic(x: int, y: int, z: int) -> bool:
    """True when (x, y, z) is already a rotation of the positive order."""
    return trip_orientation(x, y, z) == (x, y, z)


def make_trip(x: int, y: int, z: int) -> Trip:
    t = trip_orientation(x, y, z)
    return Trip(*Trip(*t).rotated_to(min(t)))


def sign_of(a: int, b: int) -> int:
    """Sign of i_a * i_b; independent of N as long as both indices are valid."""
    if a == 0 or b == 0:
        return 1
    if a == b:
        return -1
    return 1 if is_cyclic(a, b, a ^ b) else -1


def basis_product(ctx: AlgebraContext, a: int, b: int) -> SignedBasis:
    ctx.check_index(a)
    ctx.check_index(b)
    return SignedBasis(a ^ b, sign_of(a, b))


def trip_count(n: int) -> int:
    return ((1 << n) - 1) * ((1 << n) - 2) // 6


def iter_trips(ctx: AlgebraContext) -> Iterator[Trip]:
    top = ctx.dim
    for a in range(1, top):
        for b in range(a + 1, top):
            c = a ^ b
            if c > b:
                yield make_trip(a, b, c)


def enumerate_trips(ctx: AlgebraContext) -> list[Trip]:
    return list(iter_trips(ctx))


class Multivector:
    """Sparse exact-integer element of a 2^N-ion algebra.

    Zero coefficients are never stored, so equality and ``is_zero`` are
    structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        c: dict[int, int] = {}
        for k, v in items:
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
            if k < 0:
                raise DomainError(f"negative basis index {k}")
            c[k] = c.get(k, 0) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def unit(cls, index: int, coeff: int = 1) -> "Multivector":
        return cls({index: coeff})

    @classmethod
    def dyad(cls, low: int, high: int, inner_sign: int) -> "Multivector":
        """The diagonal i_low + inner_sign * i_high."""
        return cls({low: 1, high: inner_sign})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, index: int) -> int:
        return self._c.get(index, 0)

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "Multivector(0)"
        terms = " ".join(f"{v:+d}*i{k}" for k, v in sorted(self._c.items()))
        return f"Multivector({terms})"

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(list(self._c.items()) + list(other._c.items()))

    def __neg__(self) -> "Multivector":
        return Multivector({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Multivector({k: v * other for k, v in self._c.items()})
        if not isinstance(other, Multivector):
            return NotImplemented
        acc: dict[int, int] = {}
        for i, x in self._c.items():
            for j, y in other._c.items():
                k = i ^ j
                acc[k] = acc.get(k, 0) + sign_of(i, j) * x * y
        return Multivector(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self._c

    def max_index(self) -> int:
        return max(self._c, default=0)


def multivector_is_zero(x: Multivector) -> bool:
    return x.is_zero()


def _conj(x: dict[int, int]) -> dict[int, int]:
    return {k: (v if k == 0 else -v) for k, v in x.items()}


def _acc(out: dict[int, int], x: dict[int, int], sign: int = 1, shift: int = 0) -> None:
    for k, v in x.items():
        out[k + shift] = out.get(k + shift, 0) + sign * v


def _double(x: dict[int, int], y: dict[int, int], n: int) -> dict[int, int]:
    # (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
    if not x or not y:
        return {}
    if n == 0:
        return {0: x.get(0, 0) * y.get(0, 0)}
    h = 1 << (n - 1)
    a = {k: v for k, v in x.items() if k < h}
    b = {k - h: v for k, v in x.items() if k >= h}
    c = {k: v for k, v in y.items() if k < h}
    d = {k - h: v for k, v in y.items() if k >= h}
    out: dict[int, int] = {}
    _acc(out, _double(a, c, n - 1))
    _acc(out, _double(_conj(d), b, n - 1), -1)
    _acc(out, _double(d, a, n - 1), 1, h)
    _acc(out, _double(b, _conj(c), n - 1), 1, h)
    return out


def doubling_product(ctx: AlgebraContext, x: Multivector, y: Multivector) -> Multivector:
    """Product by explicit Cayley-Dickson doubling.

    Shares no code with the trip rules; agreement between the two is the
    point of having it.
    """
    if x.max_index() >= ctx.dim or y.max_index() >= ctx.dim:
        raise DomainError(f"multivector index outside [0, {ctx.dim})")
    return Multivector(_double(x.coefficients, y.coefficients, ctx.n))
