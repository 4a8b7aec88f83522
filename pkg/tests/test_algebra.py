import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdsky.algebra import (
    AlgebraContext,
    Multivector,
    SignedBasis,
    basis_product,
    doubling_product,
    enumerate_trips,
    is_cyclic,
    make_trip,
    sign_of,
    trip_count,
    trip_orientation,
)
from zdsky.errors import DomainError, NotATripError


@pytest.mark.parametrize("n, count", [(2, 1), (3, 7), (4, 35), (5, 155), (6, 651), (7, 2667)])
def test_trip_count_formula_and_enumeration(n, count):
    assert trip_count(n) == count
    assert len(enumerate_trips(AlgebraContext(n))) == count


def test_trip_count_degenerate():
    assert trip_count(1) == 0


def test_octonion_trips_are_the_fano_lines():
    trips = {t.as_tuple() for t in enumerate_trips(AlgebraContext(3))}
    assert trips == {(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)}


def test_rule_one_and_rule_two_examples():
    assert trip_orientation(1, 4, 5) == (1, 4, 5)       # u, G, G+u
    assert trip_orientation(3, 6, 5) == (3, 6, 5)       # (1,2,3) lifted on its last two
    assert trip_orientation(5, 3, 6) == (5, 3, 6)
    assert trip_orientation(1, 3, 2) == (1, 2, 3)
    assert is_cyclic(2, 3, 1) and not is_cyclic(2, 1, 3)


def test_sign_is_independent_of_dimension():
    for a, b in itertools.product(range(1, 8), repeat=2):
        if a != b:
            signs = {basis_product(AlgebraContext(n), a, b).sign for n in (3, 4, 5)}
            assert len(signs) == 1


def test_make_trip_rejects_non_trips():
    with pytest.raises(NotATripError):
        make_trip(1, 2, 4)
    with pytest.raises(NotATripError):
        trip_orientation(0, 3, 3)


def test_basis_product_formatting_and_units():
    ctx = AlgebraContext(3)
    assert str(basis_product(ctx, 1, 4)) == "+5"
    assert str(basis_product(ctx, 4, 1)) == "-5"
    assert basis_product(ctx, 6, 6) == SignedBasis(0, -1)
    assert basis_product(ctx, 0, 6) == SignedBasis(6, 1)


def test_context_bounds():
    with pytest.raises(DomainError):
        AlgebraContext(1)
    with pytest.raises(DomainError):
        AlgebraContext(17)
    with pytest.raises(DomainError):
        basis_product(AlgebraContext(3), 1, 8)
    ctx = AlgebraContext(6)
    assert (ctx.dim, ctx.G, ctx.g) == (64, 32, 16)


@pytest.mark.parametrize("n", [3, 4])
def test_every_trip_satisfies_cpo_identities(n):
    ctx = AlgebraContext(n)
    for a, b, c in (t.as_tuple() for t in enumerate_trips(ctx)):
        assert basis_product(ctx, a, b) == SignedBasis(c, 1)
        assert basis_product(ctx, b, c) == SignedBasis(a, 1)
        assert basis_product(ctx, c, a) == SignedBasis(b, 1)


def test_sign_table_matches_doubling_on_all_pairs_n5():
    ctx = AlgebraContext(5)
    for a, b in itertools.product(range(ctx.dim), repeat=2):
        got = doubling_product(ctx, Multivector.unit(a), Multivector.unit(b))
        p = basis_product(ctx, a, b)
        assert got == Multivector.unit(p.index, p.sign)


def test_multivector_rejects_floats_and_strips_zeros():
    with pytest.raises(TypeError):
        Multivector({1: 0.5})
    assert Multivector({3: 0, 4: 2}) == Multivector.unit(4, 2)
    assert (Multivector.unit(2) - Multivector.unit(2)).is_zero()
    assert repr(Multivector()) == "Multivector(0)"


def test_doubling_product_range_check():
    with pytest.raises(DomainError):
        doubling_product(AlgebraContext(3), Multivector.unit(8), Multivector.unit(1))


indices = st.integers(min_value=0, max_value=31)
elements = st.dictionaries(indices, st.integers(-5, 5), max_size=6).map(Multivector)


@given(indices, indices)
def test_anticommutativity_off_the_reals(a, b):
    if a and b and a != b:
        assert sign_of(a, b) == -sign_of(b, a)
    if a:
        assert sign_of(a, a) == -1


@settings(max_examples=60)
@given(elements, elements)
def test_sparse_product_agrees_with_doubling(x, y):
    assert x * y == doubling_product(AlgebraContext(5), x, y)


@settings(max_examples=60)
@given(elements, elements, elements)
def test_product_is_bilinear(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert (x * 3) * y == (x * y) * 3


@settings(max_examples=40)
@given(st.dictionaries(st.integers(0, 7), st.integers(-4, 4), max_size=8).map(Multivector),
       st.dictionaries(st.integers(0, 7), st.integers(-4, 4), max_size=8).map(Multivector))
def test_octonions_are_alternative(x, y):
    assert (x * x) * y == x * (x * y)
    assert (y * x) * x == y * (x * x)
