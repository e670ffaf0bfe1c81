from fractions import Fraction

import pytest

from k3enum.errors import OutOfRange
from k3enum.k3counts import (
    FiberCountInput,
    fiber_count,
    gathmann_check,
    gbl_series,
    lee_leung_N12,
    load_fixture,
    parse_tsv_grid,
    table1,
    yau_zaslow_series,
)
from k3enum.modular import delta_normalized


def test_yau_zaslow_coefficients():
    yz = yau_zaslow_series(6)
    assert yz.coefficients(0, 6) == [1, 24, 324, 3200, 25650, 176256]


def test_yau_zaslow_is_q_over_delta():
    assert (delta_normalized(21).invert().shift(1)).agrees_with(yau_zaslow_series(20))


def test_gbl_genus_one():
    assert gbl_series(1, 5).coefficients(0, 5) == [0, 1, 30, 480, 5460]


def test_gbl_genus_zero_is_yau_zaslow():
    assert gbl_series(0, 15) == yau_zaslow_series(15)


def test_gbl_vanishes_below_genus():
    for g in range(8):
        f = gbl_series(g, 12)
        assert all(f[p] == 0 for p in range(min(g, 12)))
        if g < 12:
            assert f[g] == 1


def test_table1_examples():
    t = table1(18)
    assert t.by_delta(7, 7) == 5930496
    assert t.by_delta(18, 9) == 303705014550
    assert t.by_delta(9, 9) == 143184000
    assert t.get(0, 9) == 143184000
    yz = yau_zaslow_series(19)
    for p in range(1, 10):
        assert t.by_delta(p, p) == yz[p]


def test_table1_matches_fixture_cellwise():
    grid = parse_tsv_grid(load_fixture("table1.tsv"))
    t = table1(18)
    assert len(grid) == len(t) == 90
    for (p, delta), v in grid.items():
        assert t.by_delta(p, delta) == v


def test_table1_diagonals_read_columns():
    t = table1(18)
    for delta in range(1, 10):
        column = [t.by_delta(p, delta) for p in range(delta, min(delta + 9, 18) + 1)]
        f = [gbl_series(p - delta, 19)[p] for p in range(delta, min(delta + 9, 18) + 1)]
        assert column == f


def test_table1_range():
    with pytest.raises(OutOfRange):
        table1(0)
    with pytest.raises(OutOfRange):
        table1(19)


def test_lee_leung():
    assert lee_leung_N12(2) == 49440 + 2 * 30 == 49500
    assert lee_leung_N12(1) == 3
    f1 = gbl_series(1, 14)
    for p in range(1, 5):
        assert lee_leung_N12(p) == f1[4 * p - 3] + 2 * f1[p]
        assert lee_leung_N12(p) >= f1[4 * p - 3]


def test_gathmann():
    r = gathmann_check()
    assert r.passed
    assert r.values["pairs_of_rational_curves"] == 104652
    assert r.values["reducible_double_covers"] == 648
    assert r.values["sum"] == 176256
    assert r.values["N_0_2^2"] == Fraction(352593, 2)


def test_fiber_count():
    assert fiber_count(FiberCountInput(24, 0, 2)) == 24
    assert fiber_count(FiberCountInput(-480, 24, 2)) == -528
    for e in range(-3, 4):
        for f in range(-2, 3):
            assert fiber_count(FiberCountInput(e * f, e, f)) == 0
