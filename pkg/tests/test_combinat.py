import pytest
from hypothesis import given, strategies as st

from k3enum.arith import partition_count
from k3enum.combinat import (
    UNDECIDED,
    AdmissibleSequence,
    BlowupClass,
    blowup_eval,
    class_of_sequence,
    cremona,
    enumerate_admissible,
    gbl_brute_force,
    gbl_contribution,
    is_pyramidal,
    normalize_class,
    young_bijection,
)
from k3enum.errors import OutOfRange
from k3enum.k3counts import gbl_series


def test_admissible_validation():
    s = AdmissibleSequence.from_dict(2, {0: 2})
    assert s.k0 == 2 and s.at(1) == 0
    with pytest.raises(OutOfRange):
        AdmissibleSequence.from_dict(2, {0: 1})  # weight 1, not 2
    with pytest.raises(OutOfRange):
        AdmissibleSequence.from_dict(3, {0: 1, 2: 2})  # gap in the support
    with pytest.raises(OutOfRange):
        AdmissibleSequence.from_dict(2, {1: 2})  # index 0 not in the support


def test_enumeration_weights():
    for a in range(1, 8):
        seqs = enumerate_admissible(a)
        assert len(set(seqs)) == len(seqs)
        assert all(sum(s.k) == a and s.k0 >= 1 for s in seqs)


def test_pyramidal_examples():
    assert is_pyramidal(AdmissibleSequence.from_dict(1, {0: 1}))
    assert is_pyramidal(AdmissibleSequence.from_dict(3, {-1: 1, 0: 1, 1: 1}))
    assert not is_pyramidal(AdmissibleSequence.from_dict(2, {0: 2}))
    assert not is_pyramidal(AdmissibleSequence.from_dict(3, {0: 1, 1: 2}))


@pytest.mark.parametrize("a", range(1, 13))
def test_pyramidal_count_is_partition_count(a):
    pyr = {s for s in enumerate_admissible(a) if is_pyramidal(s)}
    assert len(pyr) == partition_count(a)
    assert set(young_bijection(a).values()) == pyr


def test_cremona_example():
    c = BlowupClass(2, (1, 1, 1))
    assert cremona(c, (0, 1, 2)) == BlowupClass(1, (0, 0, 0))


@given(st.integers(0, 12), st.lists(st.integers(-2, 8), min_size=3, max_size=7))
def test_cremona_is_involution_preserving_dimension(d, alphas):
    c = BlowupClass(d, tuple(alphas))
    once = cremona(c, (0, 1, 2))
    assert cremona(once, (0, 1, 2)) == c
    assert once.expected_dimension == c.expected_dimension
    # the self-intersection d^2 - sum alpha^2 is preserved as well
    assert once.d**2 - sum(x * x for x in once.alphas) == d**2 - sum(x * x for x in alphas)


def test_blowup_terminal_rules():
    assert blowup_eval(BlowupClass(1, ())) == 1
    assert blowup_eval(BlowupClass(3, (2,))) == 1
    assert blowup_eval(BlowupClass(0, (-1,))) == 1
    assert blowup_eval(BlowupClass(2, (-1,))) == 0
    assert blowup_eval(BlowupClass(2, (2, 2, 2))) == 0  # negative expected dimension
    # a multiplicity 1 is a point condition, so it never lowers the count to 0
    assert blowup_eval(BlowupClass(2, (1, 1, 1, 1, 1, 1))) == 1
    assert normalize_class(BlowupClass(4, (1, 0, 3, 2))) == BlowupClass(4, (3, 2))


def test_blowup_known_values():
    # conics through 5 points; no irreducible conic has a double point
    assert blowup_eval(BlowupClass(2, (1, 1, 1, 1, 1))) == 1
    assert blowup_eval(BlowupClass(1, (1, 1))) == 1
    assert blowup_eval(BlowupClass(2, (2,))) == 0
    assert blowup_eval(BlowupClass(3, (2, 1, 1, 1, 1, 1, 1))) == 1


@pytest.mark.parametrize("a", range(1, 9))
def test_blowup_matches_pyramidal(a):
    for s in enumerate_admissible(a):
        v = blowup_eval(class_of_sequence(s), max_depth=64)
        assert v != UNDECIDED
        assert v == int(is_pyramidal(s))


def test_gbl_contribution():
    assert gbl_contribution((), ()) == 1
    assert gbl_contribution((2,), (1,)) == 2
    assert gbl_contribution((1, 1), (2, 3)) == 2 * 3 * 3 * 4


@pytest.mark.parametrize("g", range(3))
def test_brute_force_partition_sum(g):
    f = gbl_series(g, 7)
    for p in range(7):
        assert gbl_brute_force(g, p) == f[p]
