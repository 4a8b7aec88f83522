"""Assessors, DMZ testing, and box-kite enumeration/classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .algebra import (
    AlgebraContext,
    Multivector,
    Trip,
    make_trip,
    sign_of,
    trip_count,
    trip_orientation,
)
from .errors import DomainError, InvalidAugmentationError, InvalidLabelError


class Mark(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    UNKNOWN = "?"


class Kind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    HIDDEN = "hidden"


@dataclass(frozen=True)
class StrutContext:
    ctx: AlgebraContext
    S: int

    def __post_init__(self):
        if not 0 < self.S < self.ctx.G:
            raise DomainError(f"S must lie in (0, {self.ctx.G}) for N={self.ctx.n}, got {self.S}")

    @classmethod
    def of(cls, n: int, S: int) -> "StrutContext":
        return cls(AlgebraContext(n), S)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def G(self) -> int:
        return self.ctx.G

    @property
    def g(self) -> int:
        return self.ctx.g

    @property
    def s(self) -> int:
        return self.S % self.ctx.g

    @property
    def X(self) -> int:
        return self.ctx.G + self.S

    def is_label(self, u: int) -> bool:
        return 0 < u < self.G and u != self.S


@dataclass(frozen=True)
class Assessor:
    low: int
    high: int

    def diagonal(self, slope: int) -> Multivector:
        """slope +1 is (u, /) = i_u + i_U; slope -1 is (u, \\) = i_u - i_U."""
        return Multivector.dyad(self.low, self.high, slope)


def assessor_of(strut: StrutContext, u: int) -> Assessor:
    if not strut.is_label(u):
        raise InvalidLabelError(f"{u} is not an L-index for G={strut.G}, S={strut.S}")
    return Assessor(u, u ^ strut.G ^ strut.S)


@dataclass(frozen=True)
class DmzWitness:
    """Which diagonal pairings annihilate for two assessors.

    ``slopes`` lists the (P-slope, Q-slope) pairs whose product is exactly
    zero: opposite slopes for a negative edge, equal slopes for a positive one.
    """

    edge_sign: Mark
    slopes: tuple[tuple[int, int], tuple[int, int]]


_OPPOSITE = ((1, -1), (-1, 1))
_SAME = ((1, 1), (-1, -1))


def dyad_products(P: Assessor, Q: Assessor) -> dict[tuple[int, int], Multivector]:
    return {
        (sp, sq): P.diagonal(sp) * Q.diagonal(sq)
        for sp in (1, -1)
        for sq in (1, -1)
    }


def dmz_test(strut: StrutContext, P: Assessor, Q: Assessor) -> DmzWitness | None:
    if P == Q:
        return None
    prods = dyad_products(P, Q)
    neg = all(prods[k].is_zero() for k in _OPPOSITE)
    pos = all(prods[k].is_zero() for k in _SAME)
    if neg and pos:  # pragma: no cover - would mean a zero assessor
        raise AssertionError(f"both slope patterns annihilate for {P}, {Q}")
    if neg:
        return DmzWitness(Mark.NEGATIVE, _OPPOSITE)
    if pos:
        return DmzWitness(Mark.POSITIVE, _SAME)
    return None


def dmz_between(strut: StrutContext, u: int, v: int) -> DmzWitness | None:
    return dmz_test(strut, assessor_of(strut, u), assessor_of(strut, v))


def strut_reversals(strut: StrutContext, zigzag: Sequence[int]) -> int:
    """Count struts (z, z ^ S) whose VZ1 product v*z comes out as -S."""
    return sum(sign_of(z ^ strut.S, z) < 0 for z in zigzag)


@dataclass(frozen=True)
class Classification:
    kind: Kind
    reversals: int

    @property
    def viable(self) -> bool:
        return self.kind is not Kind.HIDDEN

    def __str__(self):
        if self.kind is Kind.HIDDEN:
            return f"hidden({self.reversals})"
        return f"type {self.kind.value}"


@dataclass(frozen=True)
class Sails:
    zigzag: Trip
    trefoils: tuple[tuple[int, int, int], ...]

    def all(self) -> list[tuple[int, int, int]]:
        return [self.zigzag.as_tuple(), *self.trefoils]


@dataclass(frozen=True)
class BoxKite:
    """Six assessors on octahedral vertices.

    Vertices A, B, C carry the zigzag L-trip (a, b, c); F, E, D are their
    strut opposites. For hidden kites the zigzag is the generating sail
    (the one with the smallest sorted indices) and carries no DMZ claim.
    """

    strut: StrutContext
    zigzag: Trip
    classification: Classification = field(compare=False)

    @property
    def a(self):
        return self.zigzag.a

    @property
    def b(self):
        return self.zigzag.b

    @property
    def c(self):
        return self.zigzag.c

    @property
    def f(self):
        return self.a ^ self.strut.S

    @property
    def e(self):
        return self.b ^ self.strut.S

    @property
    def d(self):
        return self.c ^ self.strut.S

    @property
    def kind(self) -> Kind:
        return self.classification.kind

    @property
    def functional(self) -> bool:
        return self.classification.viable

    @property
    def letters(self) -> dict[str, int]:
        return dict(zip("abcdef", (self.a, self.b, self.c, self.d, self.e, self.f)))

    @cached_property
    def lows(self) -> frozenset[int]:
        return frozenset(self.letters.values())

    @property
    def vertices(self) -> dict[str, Assessor]:
        return {k.upper(): assessor_of(self.strut, u) for k, u in self.letters.items()}

    @property
    def struts(self) -> list[tuple[int, int]]:
        """(zigzag terminus, vent terminus) L-index pairs: (a, f), (b, e), (c, d)."""
        return [(self.a, self.f), (self.b, self.e), (self.c, self.d)]

    def edges(self) -> list[tuple[int, int]]:
        return [(p, q) for p, q in combinations(sorted(self.lows), 2) if p ^ q != self.strut.S]


def _orbits(strut: StrutContext) -> dict[frozenset[int], list[Trip]]:
    S = strut.S
    labels = [u for u in range(1, strut.G) if u != S]
    orbits: dict[frozenset[int], list[Trip]] = {}
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            c = a ^ b
            if c <= b or c == S:
                continue
            key = frozenset((a, b, c, a ^ S, b ^ S, c ^ S))
            orbits.setdefault(key, []).append(make_trip(a, b, c))
    return orbits


def _sails_of(lows: frozenset[int]) -> list[Trip]:
    return [make_trip(a, b, a ^ b) for a, b in combinations(sorted(lows), 2)
            if a ^ b in lows and a < b < a ^ b]


def _find_zigzag(strut: StrutContext, sails: Sequence[Trip]) -> Trip | None:
    for t in sails:
        x, y, z = t
        signs = [dmz_between(strut, p, q) for p, q in ((x, y), (y, z), (x, z))]
        if all(w is not None and w.edge_sign is Mark.NEGATIVE for w in signs):
            return t
    return None


def _build(strut: StrutContext, lows: frozenset[int], sails: list[Trip]) -> BoxKite:
    zz = _find_zigzag(strut, sails)
    if zz is None:
        zz = min(sails, key=lambda t: sorted(t))
        r = strut_reversals(strut, zz)
        cls = Classification(Kind.HIDDEN, r)
    else:
        r = strut_reversals(strut, zz)
        cls = Classification(Kind.TYPE_I if r == 0 else Kind.TYPE_II if r == 2 else Kind.HIDDEN, r)
    return BoxKite(strut, zz, cls)


def enumerate_candidate_boxkites(strut: StrutContext) -> list[BoxKite]:
    """One candidate per Fano subspace of L-space containing S.

    Sorted by smallest zigzag first; there are Trip_{N-2} of them.
    """
    kites = [_build(strut, key, sorted(sails, key=lambda t: t.as_tuple()))
             for key, sails in _orbits(strut).items()]
    kites.sort(key=lambda k: (k.zigzag.as_tuple()))
    expected = trip_count(strut.n - 2)
    if len(kites) != expected:  # pragma: no cover
        raise AssertionError(f"{len(kites)} candidates, expected {expected}")
    return kites


def boxkite_containing(strut: StrutContext, u: int, v: int) -> BoxKite:
    """The unique candidate box-kite having u and v (not strut-opposite) as vertices."""
    if u ^ v in (0, strut.S):
        raise InvalidLabelError(f"{u}, {v} do not span an edge")
    S = strut.S
    w = u ^ v
    lows = frozenset((u, v, w, u ^ S, v ^ S, w ^ S))
    return _build(strut, lows, sorted(_sails_of(lows), key=lambda t: t.as_tuple()))


def classify_boxkite(bk: BoxKite) -> Classification:
    """Reversal count of the kite's struts, cross-checked against its DMZ edges.

    Raises AssertionError if the all-or-nothing edge dichotomy or the
    reversal-parity rule were ever violated.
    """
    strut = bk.strut
    r = strut_reversals(strut, bk.zigzag)
    live = sum(dmz_between(strut, p, q) is not None for p, q in bk.edges())
    if live not in (0, 12):
        raise AssertionError(f"{live} of 12 edges are DMZs in {bk}")
    if (live == 12) != (r % 2 == 0):
        raise AssertionError(f"reversal parity {r} disagrees with {live} DMZ edges in {bk}")
    if live == 0:
        return Classification(Kind.HIDDEN, r)
    return Classification(Kind.TYPE_I if r == 0 else Kind.TYPE_II, r)


def sails(bk: BoxKite) -> Sails:
    """Zigzag plus the trefoils (a,d,e), (f,c,e), (f,d,b), each in CPO.

    A trefoil keeps its leading letter and is rotated to cyclically positive
    order from there, which can "precess" it away from smallest-first.
    """
    L = bk.letters
    tref = tuple(trip_orientation(L[x], L[y], L[z]) for x, y, z in ("ade", "fce", "fdb"))
    return Sails(bk.zigzag, tref)


@dataclass(frozen=True)
class StrutVizier:
    zigzag: int
    vent: int
    vz1_unsigned: bool
    vz1_signs: tuple[int, int]  # signs of v*z and V*Z relative to +S
    vz2: bool                   # Z*v == +G and V*z == +G exactly
    vz3_unsigned: bool
    vz3_signs: tuple[int, int]  # signs of V*v and z*Z relative to +X


@dataclass(frozen=True)
class VizierReport:
    struts: tuple[StrutVizier, ...]

    @property
    def holds(self) -> bool:
        return all(s.vz1_unsigned and s.vz2 and s.vz3_unsigned for s in self.struts)


def viziers_check(bk: BoxKite) -> VizierReport:
    st = bk.strut
    out = []
    for z, v in bk.struts:
        Z = assessor_of(st, z).high
        V = assessor_of(st, v).high
        out.append(StrutVizier(
            zigzag=z,
            vent=v,
            vz1_unsigned=(v ^ z) == st.S and (V ^ Z) == st.S,
            vz1_signs=(sign_of(v, z), sign_of(V, Z)),
            vz2=(Z ^ v) == st.G and (V ^ z) == st.G and sign_of(Z, v) > 0 and sign_of(V, z) > 0,
            vz3_unsigned=(V ^ v) == st.X and (z ^ Z) == st.X,
            vz3_signs=(sign_of(V, v), sign_of(z, Z)),
        ))
    return VizierReport(tuple(out))


def hidefill_probe(strut: StrutContext, u: int, v: int, added_bits: Sequence[int]) -> list[bool]:
    """DMZ status of (u, v) at S, then after adding each new high bit in turn.

    Every added bit must be a power of two above S's high bit and below G,
    strictly increasing, and must leave u, v usable as an edge.
    """
    top = strut.S.bit_length()
    S = strut.S
    out = [dmz_between(strut, u, v) is not None]
    prev = 0
    for bit in added_bits:
        if bit <= 0 or bit & (bit - 1):
            raise InvalidAugmentationError(f"{bit} is not a power of two")
        if bit & S:
            raise InvalidAugmentationError(f"bit {bit} already set in S={S}")
        if bit.bit_length() <= top or bit <= prev:
            raise InvalidAugmentationError(f"bit {bit} must exceed S's high bit and prior bits")
        if bit >= strut.G:
            raise InvalidAugmentationError(f"bit {bit} does not fit below G={strut.G}")
        prev = bit
        S += bit
        st = StrutContext(strut.ctx, S)
        if not (st.is_label(u) and st.is_label(v)) or u ^ v == S:
            raise InvalidAugmentationError(f"({u}, {v}) is no longer an edge at S={S}")
        out.append(dmz_between(st, u, v) is not None)
    return out
