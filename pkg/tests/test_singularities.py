from math import gcd

import pytest

from k3enum.errors import NotCoprime
from k3enum.singularities import (
    CoprimeGerm,
    delta_invariant,
    euler_G,
    fiber_multiplicity,
    multibranch_euler,
    semigroup_gaps,
    summarize,
)

COPRIME = [(p, q) for p in range(2, 39) for q in range(2, 39) if p + q <= 40 and gcd(p, q) == 1]


def test_euler_examples():
    assert euler_G((2, 3)) == 2
    assert euler_G(CoprimeGerm(3, 4)) == 5


@pytest.mark.parametrize("l", range(1, 11))
def test_a_2l_double_points(l):
    assert euler_G((2, 2 * l + 1)) == l + 1


def test_euler_positive_integer():
    for p, q in COPRIME:
        assert euler_G((p, q)) >= 1


def test_not_coprime():
    with pytest.raises(NotCoprime):
        euler_G((2, 4))
    with pytest.raises(NotCoprime):
        delta_invariant((6, 9))


def test_delta_examples():
    assert semigroup_gaps(2, 3) == [1]
    assert semigroup_gaps(2, 5) == [1, 3]
    assert delta_invariant((2, 3)) == 1
    assert delta_invariant((2, 5)) == 2


def test_delta_closed_form():
    for p, q in COPRIME:
        assert delta_invariant((p, q)) == (p - 1) * (q - 1) // 2


def test_fiber_multiplicities():
    assert fiber_multiplicity(1, 2) == 1  # node
    assert fiber_multiplicity(1, 1) == 2  # cusp
    assert fiber_multiplicity(2, 2) == 3  # tacnode
    assert fiber_multiplicity(3, 3) == 4  # ordinary triple point
    assert fiber_multiplicity(0, 1) == 0


def test_fiber_multiplicity_positive():
    for delta in range(1, 12):
        for r in range(1, 2 * delta + 1):
            assert fiber_multiplicity(delta, r) >= 1


def test_multibranch():
    assert multibranch_euler([(1, 1), (1, 1)]) == 1
    assert multibranch_euler([(2, 3)]) == 2
    assert multibranch_euler([(2, 3), (2, 3)]) == 4
    with pytest.raises(NotCoprime):
        multibranch_euler([(2, 3), (2, 2)])


def test_nodal_and_cuspidal_cubic_agree():
    # one-nodal rational fibre: local contribution 1 either way; cuspidal: 2
    assert fiber_multiplicity(1, 2) == multibranch_euler([(1, 1), (1, 1)])
    assert fiber_multiplicity(1, 1) == euler_G((2, 3))


def test_summary():
    s = summarize((3, 5))
    assert s.delta == 4 and s.branches == 1 and s.eG == 7 and s.fiberMult == 8
