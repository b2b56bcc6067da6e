import random
from math import comb, factorial

import pytest
import sympy

from App.helpers.laurent import ONE, LaurentPoly, evaluate_at_identity, power_substitute
from App.repchar.frobenius import (
    NotIntegral,
    PowerSumVector,
    alt_character,
    alt_spinor,
    alt_spinor_table,
    frobenius_numerator,
    partitions_with_multiplicity,
    power_sum_vector,
)
from App.repchar.oracle import WeightedRep, exterior_generating_polynomial
from App.repchar.weyl_b4 import DynkinLabel, character

CHI = sympy.symbols('c1:9')

# chi(Alt_n R) written out in c_k = chi(R^k)
CLOSED_FORMS = {
    0: "1",
    1: "c1",
    2: "(c1**2 - c2)/2",
    3: "(c1**3 - 3*c1*c2 + 2*c3)/6",
    4: "(c1**4 - 6*c1**2*c2 + 3*c2**2 + 8*c1*c3 - 6*c4)/24",
    5: "(c1**5 - 10*c1**3*c2 + 15*c1*c2**2 + 20*c1**2*c3 - 20*c2*c3 - 30*c1*c4 + 24*c5)/120",
    6: "(c1**6 - 15*c1**4*c2 + 45*c1**2*c2**2 - 15*c2**3 + 40*c1**3*c3 - 120*c1*c2*c3 + 40*c3**2"
       " - 90*c1**2*c4 + 90*c2*c4 + 144*c1*c5 - 120*c6)/720",
    7: "(c1**7 - 21*c1**5*c2 + 105*c1**3*c2**2 - 105*c1*c2**3 + 70*c1**4*c3 - 420*c1**2*c2*c3"
       " + 210*c2**2*c3 + 280*c1*c3**2 - 210*c1**3*c4 + 630*c1*c2*c4 - 420*c3*c4 + 504*c1**2*c5"
       " - 504*c2*c5 - 840*c1*c6 + 720*c7)/5040",
    8: "(c1**8 - 28*c1**6*c2 + 210*c1**4*c2**2 - 420*c1**2*c2**3 + 105*c2**4 + 112*c1**5*c3"
       " - 1120*c1**3*c2*c3 + 1680*c1*c2**2*c3 + 1120*c1**2*c3**2 - 1120*c2*c3**2 - 420*c1**4*c4"
       " + 2520*c1**2*c2*c4 - 1260*c2**2*c4 - 3360*c1*c3*c4 + 1260*c4**2 + 1344*c1**3*c5"
       " - 4032*c1*c2*c5 + 2688*c3*c5 - 3360*c1**2*c6 + 3360*c2*c6 + 5760*c1*c7 - 5040*c8)/40320",
}


def closed_form_numerator(n: int, chis) -> LaurentPoly:
    """n! * closed form evaluated at the given chi_k values"""
    expr = sympy.sympify(CLOSED_FORMS[n], locals={str(c): c for c in CHI}) * factorial(n)
    poly = sympy.Poly(sympy.expand(expr), *CHI)
    total = LaurentPoly()
    for exponents, coefficient in poly.terms():
        assert coefficient.is_integer
        term = ONE
        for chi, e in zip(chis, exponents):
            if e:
                term = term * chi ** e
        total = total + term * int(coefficient)
    return total


def random_chis(rng: random.Random):
    return [
        LaurentPoly({tuple(rng.randint(-1, 1) for _ in range(5)): rng.randint(-2, 2) for _ in range(3)})
        for _ in range(8)
    ]


def test_partitions_small_cases():
    assert partitions_with_multiplicity(0) == [{}]
    assert partitions_with_multiplicity(3) == [{1: 3}, {1: 1, 2: 1}, {3: 1}]
    assert len(partitions_with_multiplicity(8)) == 22
    with pytest.raises(ValueError):
        partitions_with_multiplicity(-1)


def test_partitions_are_distinct_and_complete():
    counts = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]
    for n, expected in enumerate(counts, start=1):
        found = partitions_with_multiplicity(n)
        assert all(sum(k * i for k, i in p.items()) == n for p in found)
        assert len({tuple(sorted(p.items())) for p in found}) == len(found) == expected


@pytest.mark.parametrize('n', range(9))
def test_frobenius_matches_closed_forms(n):
    rng = random.Random(100 + n)
    for _ in range(20):
        chis = random_chis(rng)
        assert frobenius_numerator(chis, n) == closed_form_numerator(n, chis)


@pytest.mark.parametrize('n', range(9))
def test_fermionic_sign_flips_by_parity_of_n(n):
    rng = random.Random(200 + n)
    chis = random_chis(rng)
    assert frobenius_numerator(chis, n, fermionic_sign=True) == frobenius_numerator(chis, n) * (-1) ** n


def test_alt_character_small_examples():
    spinor = character(DynkinLabel(0, 0, 0, 1))
    assert alt_character(spinor, 0) == 1
    assert alt_character(spinor, 1) == spinor
    assert alt_character(spinor, 2) * 2 == spinor * spinor - power_substitute(spinor, 2)
    assert evaluate_at_identity(alt_character(spinor, 3)) == comb(16, 3) == 560


def test_power_sum_vector():
    base = character(DynkinLabel(1, 0, 0, 0))
    sums = power_sum_vector(base, 4)
    assert sums == PowerSumVector.build(base, 4)
    assert sums.n_max == 4
    assert sums[1] == base
    assert sums[3] == power_substitute(base, 3)
    assert all(evaluate_at_identity(chi) == sums.base_dimension == 9 for chi in sums.chi)
    with pytest.raises(IndexError):
        sums[5]


def test_alt_character_matches_weight_products():
    rng = random.Random(31)
    for _ in range(10):
        rep = WeightedRep(tuple(
            (rng.randint(-2, 2), rng.randint(-2, 2), 0, 0, rng.randint(-1, 1)) for _ in range(rng.randint(1, 6))
        ))
        expected = exterior_generating_polynomial(rep)
        for n in range(rep.size + 2):
            assert alt_character(rep.character(), n) == (expected[n] if n <= rep.size else 0)


def test_non_integral_sum_is_caught(monkeypatch):
    # with chi_k = chi_1 for every k the sum is no longer divisible by n!
    monkeypatch.setattr('App.repchar.frobenius.power_substitute', lambda p, k: p)
    with pytest.raises(NotIntegral):
        alt_character(LaurentPoly({(1, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0): 1}), 2)


def test_spinor_table_shape():
    table = alt_spinor_table()
    assert len(table) == 17
    assert table[0] == 1
    assert table[16] == 1
    assert sum(evaluate_at_identity(p) for p in table) == 2 ** 16
    for n, p in enumerate(table):
        assert evaluate_at_identity(p) == comb(16, n)


def test_spinor_table_reflection_against_weight_products():
    expected = exterior_generating_polynomial(WeightedRep.so9_spinor())
    table = alt_spinor_table()
    for n in range(17):
        assert table[n] == expected[n]
    for n in range(9):
        assert table[16 - n] == table[n]


@pytest.mark.slow
@pytest.mark.parametrize('n', range(9, 13))
def test_spinor_upper_half_by_direct_frobenius(n):
    spinor = character(DynkinLabel(0, 0, 0, 1))
    assert alt_character(spinor, n) == alt_spinor(16 - n)
