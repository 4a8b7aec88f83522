import dataclasses

import pytest

from zdsky.algebra import trip_count
from zdsky.emanation import (
    Cell,
    EmanationTable,
    band_of,
    boxkite_count,
    composed_count,
    et_bruteforce,
    label_order,
    muntin_split,
    sand_mandala_count,
    singleton_cells,
    singleton_maximal_count,
    skybox_level,
)
from zdsky.structures import Mark, StrutContext


def brute(n, S, **kw):
    return et_bruteforce(StrutContext.of(n, S), **kw)


@pytest.mark.parametrize("n, S, labels", [
    (4, 1, [2, 4, 6, 7, 5, 3]),
    (5, 15, list(range(1, 15))),
    (5, 9, [1, 2, 3, 4, 5, 6, 7, 14, 15, 12, 13, 10, 11, 8]),
])
def test_label_order(n, S, labels):
    assert list(label_order(StrutContext.of(n, S))) == labels


def test_sedenion_table_content():
    et = brute(4, 1)
    assert et.filled_count() == 24
    assert et.marked_count() == 12
    assert str(et.at_labels(2, 6)) == "4" or str(et.at_labels(2, 6)) == "-4"
    assert et.at_labels(2, 3) is None


@pytest.mark.parametrize("n, S, cells", [(5, 9, 72), (5, 3, 168), (5, 8, 168), (6, 17, 168)])
def test_filled_cell_counts(n, S, cells):
    assert brute(n, S).filled_count() == cells


def test_table_invariants_are_enforced():
    et = brute(4, 2)
    cells = [list(r) for r in et.cells]
    cells[0][1] = None
    with pytest.raises(AssertionError, match="asymmetric"):
        dataclasses.replace(et, cells=tuple(map(tuple, cells)))
    cells = [list(r) for r in et.cells]
    cells[0][0] = Cell(0, Mark.NEGATIVE)
    with pytest.raises(AssertionError, match="diagonal"):
        dataclasses.replace(et, cells=tuple(map(tuple, cells)))
    with pytest.raises(AssertionError, match="labels"):
        EmanationTable(et.strut, tuple(reversed(et.labels[1:])) + (99,), et.cells)


def test_threaded_build_is_identical():
    assert brute(6, 25, workers=4) == brute(6, 25)


def test_marks_are_symmetric_and_half_the_cells():
    for S in (9, 25, 30):
        et = brute(6, S)
        assert 2 * et.marked_count() == et.filled_count()


@pytest.mark.parametrize("n, expected", [(4, 0), (5, 3), (6, 19), (7, 91), (8, 395), (9, 1643), (10, 6699)])
def test_sand_mandala_formula(n, expected):
    assert sand_mandala_count(n) == expected


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_hidden_count_in_sand_mandala_band(n):
    assert trip_count(n - 2) - sand_mandala_count(n) == 4 ** (n - 4)


@pytest.mark.parametrize("n, S, count, band", [
    (5, 5, 7, "full"),
    (5, 8, 7, "full"),
    (5, 12, 3, "sand-mandala"),
    (6, 16, 35, "full"),
    (6, 17, 7, "singleton-maximal"),
    (6, 24, 7, "singleton-maximal"),
    (6, 25, 23, "computed"),
    (7, 33, 15, "singleton-maximal"),
    (7, 48, 15, "singleton-maximal"),
    (7, 57, 63, "computed"),
])
def test_boxkite_count_by_band(n, S, count, band):
    res = boxkite_count(StrutContext.of(n, S))
    assert (res.count, res.band) == (count, band)
    assert res.composed == count


def test_counts_agree_with_tables_exhaustively_n6():
    for S in range(1, 32):
        st = StrutContext.of(6, S)
        et = et_bruteforce(st)
        assert et.filled_count() == 24 * boxkite_count(st, et).count
        assert composed_count(6, S) == boxkite_count(st, et).count


def test_singleton_band_cell_count():
    for n, S in ((6, 17), (6, 20), (7, 33)):
        assert brute(n, S).filled_count() == singleton_cells(n) == 24 * singleton_maximal_count(n)


def test_band_of_power_of_two():
    assert band_of(StrutContext.of(7, 32)) == "full"


def test_skybox_level():
    lv = skybox_level(11, 7)
    assert (lv.nesting, lv.quadrants, lv.muntin_number) == (2, 4, 7)
    assert lv.omega % 24 == 0 and lv.delta % 24 == 0
    with pytest.raises(ValueError):
        skybox_level(25, 5)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_muntin_split_matches_omega_delta(n):
    for S in (9, 12, 15):
        lv = skybox_level(S, n)
        assert muntin_split(brute(n, S)) == (lv.omega, lv.delta)
