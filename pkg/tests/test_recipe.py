import pytest
from hypothesis import given
from hypothesis import strategies as st

from zdsky.emanation import et_bruteforce, et_recipe, prepare_recipe, run_recipe
from zdsky.emanation.recipe import inner_skybox_n
from zdsky.errors import RecipeDomainError
from zdsky.structures import Mark, StrutContext


def test_preparation_for_613():
    spec = prepare_recipe(613)
    assert (spec.B, spec.powers) == (3, (9, 6, 5))
    assert spec.inner_n == 11


def test_preparation_shifts_four_for_multiples_of_eight():
    assert prepare_recipe(24).powers == (4,)
    assert prepare_recipe(25).powers == (4, 3)
    assert prepare_recipe(57).residues == (25, 9, 1)


@given(st.integers(9, 4095).filter(lambda s: s & (s - 1)))
def test_powers_strictly_decreasing(S):
    spec = prepare_recipe(S)
    assert list(spec.powers) == sorted(set(spec.powers), reverse=True)
    assert inner_skybox_n(S) == spec.inner_n


@pytest.mark.parametrize("S", [1, 8, 16, 64])
def test_recipe_domain(S):
    with pytest.raises(RecipeDomainError):
        prepare_recipe(S)


def test_trailing_zero_residue_pass_is_dropped():
    spec = prepare_recipe(48)
    assert spec.powers == (5, 4) and spec.residues == (16, 0)
    assert spec.passes == ((5, 16),) and spec.effective_B == 1


def test_s25_pass_values():
    spec = prepare_recipe(25)
    assert spec.pass_values(0, 32) == {9, 16}
    assert spec.pass_values(1, 32) - spec.pass_values(0, 32) == {1, 8, 17, 24}


def test_s57_three_passes():
    strut = StrutContext.of(7, 57)
    _, passes = run_recipe(strut)
    assert [p.values for p in passes] == [
        {25, 32}, {9, 16, 41, 48}, {1, 8, 17, 24, 33, 40, 49, 56}]
    assert [p.fills for p in passes] == [True, False, True]
    assert [p.painted for p in passes] == [360, 672, 1152]


def test_recipe_marks_unknown_and_full_shortcut():
    et = et_recipe(StrutContext.of(5, 13))
    assert {c.mark for _, _, c in et.iter_cells() if c} == {Mark.UNKNOWN}
    full = et_recipe(StrutContext.of(5, 3), full_ok=True)
    assert full.method == "full" and full.filled_count() == 168
    with pytest.raises(RecipeDomainError):
        et_recipe(StrutContext.of(5, 3))


@pytest.mark.parametrize("n", [5, 6])
def test_recipe_equals_brute_force_exhaustively(n):
    for S in range(9, 1 << (n - 1)):
        if S & (S - 1) == 0:
            continue
        strut = StrutContext.of(n, S)
        assert et_recipe(strut).fill_pattern() == et_bruteforce(strut).fill_pattern(), S


@pytest.mark.parametrize("S", [48, 57, 40, 27])
def test_recipe_equals_brute_force_n7(S):
    strut = StrutContext.of(7, S)
    assert et_recipe(strut).fill_pattern() == et_bruteforce(strut).fill_pattern()
