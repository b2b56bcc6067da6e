import random

import pytest

from App.helpers.laurent import LaurentPoly, evaluate_at_identity, monomial, variable
from App.repchar.su2 import NotUSymmetric, cosine_pair, join_spins, split_by_spin, su2_character

u = variable('u')
u_inv = variable('u', -1)


def test_su2_character_examples():
    assert su2_character(0) == 1
    assert su2_character(1) == u_inv + 1 + u
    assert evaluate_at_identity(su2_character(8)) == 17
    with pytest.raises(ValueError):
        su2_character(-1)


def test_cosine_pair_telescopes():
    assert cosine_pair(1) == su2_character(1) - 1
    assert cosine_pair(2) == variable('u', 2) + variable('u', -2)
    for n in range(1, 9):
        assert cosine_pair(n) == su2_character(n) - su2_character(n - 1)
    with pytest.raises(ValueError):
        cosine_pair(0)


def test_split_simple_inputs():
    assert split_by_spin(u + 1 + u_inv) == {1: 1}
    assert split_by_spin(LaurentPoly({(0, 0, 0, 0, 0): 2})) == {0: 2}
    assert split_by_spin(LaurentPoly()) == {}


def test_split_of_a_product_with_a_u_free_factor():
    q = variable('z1', 2) + variable('z1', -2) + 3
    for n in range(5):
        assert split_by_spin(su2_character(n) * q) == {n: q}


def test_split_round_trip_on_random_symmetric_input():
    rng = random.Random(8)
    for _ in range(20):
        spins = {}
        for n in rng.sample(range(6), 3):
            spins[n] = LaurentPoly({(rng.randint(-2, 2), rng.randint(-1, 1), 0, 0, 0): rng.randint(1, 3)})
        p = join_spins(spins)
        assert join_spins(split_by_spin(p)) == p
        assert split_by_spin(p) == spins


def test_split_rejects_asymmetric_input():
    with pytest.raises(NotUSymmetric):
        split_by_spin(u + 1)
    with pytest.raises(NotUSymmetric):
        split_by_spin(monomial((1, 0, 0, 0, 1)) + monomial((0, 0, 0, 0, -1)))
