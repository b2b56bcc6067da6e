import itertools
import random
from functools import reduce
from operator import mul

import pytest

from App.helpers.laurent import ONE, ZERO, conjugate, constant_term, evaluate_at_identity, monomial, signed_permutation
from App.repchar.golden import GoldenTableStore
from App.repchar.settings import DEFAULT_GOLDEN_DIR
from App.repchar.weyl_b4 import (
    RHO,
    WEYL_GROUP_ORDER,
    DynkinLabel,
    NotACharacter,
    WeightVector,
    character,
    cos_product,
    decompose,
    decompose_by_pairing,
    dimension,
    inner_product,
    is_weyl_invariant,
    root_factors,
    symmetric_traceless_dimension,
    weyl_denominator,
    weyl_group,
)

SINGLET = DynkinLabel(0, 0, 0, 0)
VECTOR = DynkinLabel(1, 0, 0, 0)
SPINOR = DynkinLabel(0, 0, 0, 1)


def c2(*slots):
    """c_i^2 products over the given slots"""
    exps = [0, 0, 0, 0]
    for s in slots:
        exps[s] = 2
    return cos_product(*exps)


def test_label_validation_and_parity():
    with pytest.raises(ValueError):
        DynkinLabel(0, -1, 0, 0)
    assert DynkinLabel(1, 0, 0, 1).is_spinor
    assert DynkinLabel(1, 0, 0, 1).statistics == 'fermion'
    assert DynkinLabel(0, 0, 0, 2).statistics == 'boson'
    assert str(DynkinLabel(3, 0, 0, 3)) == '[3,0,0,3]'


def test_highest_weight_round_trip():
    assert DynkinLabel(1, 1, 1, 1).highest_weight() == RHO
    for q in itertools.product(range(3), repeat=4):
        label = DynkinLabel(*q)
        assert DynkinLabel.from_weight(label.highest_weight()) == label


def test_from_weight_rejects_non_dominant_or_mixed():
    with pytest.raises(NotACharacter):
        DynkinLabel.from_weight(WeightVector((0, 2, 0, 0)))
    with pytest.raises(NotACharacter):
        DynkinLabel.from_weight(WeightVector((2, 1, 1, 1)))


@pytest.mark.parametrize('q, expected', [
    ((0, 0, 0, 0), 1),
    ((1, 0, 0, 0), 9),
    ((0, 1, 0, 0), 36),
    ((0, 0, 1, 0), 84),
    ((0, 0, 0, 1), 16),
    ((0, 0, 0, 2), 126),
    ((1, 0, 0, 1), 128),
    ((2, 0, 0, 0), 44),
    ((0, 0, 3, 0), 23595),
    ((3, 0, 0, 3), 56320),
    ((1, 1, 1, 1), 65536),
])
def test_dimension(q, expected):
    assert dimension(DynkinLabel(*q)) == expected


def test_symmetric_traceless_closed_form():
    for n in range(10):
        assert dimension(DynkinLabel(n, 0, 0, 0)) == symmetric_traceless_dimension(n)


def test_dimension_matches_every_golden_row():
    store = GoldenTableStore(DEFAULT_GOLDEN_DIR)
    for label, recorded in store.recorded_dimensions().items():
        assert dimension(label) == recorded, label


def test_weyl_group_has_384_signed_permutations():
    group = weyl_group()
    assert len(group) == WEYL_GROUP_ORDER == 384
    assert len({(perm, signs) for perm, signs, _ in group}) == 384
    assert sum(sign for _, _, sign in group) == 0


def test_weyl_denominator_is_the_root_product():
    assert reduce(mul, root_factors(), ONE) == weyl_denominator()
    assert len(root_factors()) == 16


def test_weyl_denominator_antisymmetry():
    d = weyl_denominator()
    assert signed_permutation(d, (1, 0, 2, 3), (1, 1, 1, 1)) == -d
    assert signed_permutation(d, (0, 1, 2, 3), (-1, 1, 1, 1)) == -d
    assert constant_term(d * conjugate(d)) == WEYL_GROUP_ORDER


def test_basic_characters_match_cosine_expansions():
    singles = [c2(i) for i in range(4)]
    pairs = [c2(i, j) for i, j in itertools.combinations(range(4), 2)]
    triples = [c2(*t) for t in itertools.combinations(range(4), 3)]
    quartics = [cos_product(*[4 if k == i else 0 for k in range(4)]) for i in range(4)]

    assert character(SINGLET) == 1
    assert character(VECTOR) == 1 + sum(singles, ZERO)
    assert character(SPINOR) == cos_product(1, 1, 1, 1)
    assert character(DynkinLabel(0, 0, 1, 0)) == 4 + 3 * sum(singles, ZERO) + sum(pairs, ZERO) + sum(triples, ZERO)
    assert character(DynkinLabel(2, 0, 0, 0)) == 4 + sum(singles + pairs + quartics, ZERO)

    cubes = [cos_product(*[3 if k == i else 1 for k in range(4)]) for i in range(4)]
    assert character(DynkinLabel(1, 0, 0, 1)) == 4 * cos_product(1, 1, 1, 1) + sum(cubes, ZERO)


def test_spinor_character_is_the_product_of_four_cosines():
    expected = reduce(mul, [monomial([1 if k == i else 0 for k in range(5)]) +
                            monomial([-1 if k == i else 0 for k in range(5)]) for i in range(4)], ONE)
    assert character(SPINOR) == expected


@pytest.mark.parametrize('q', [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 1, 0), (2, 0, 0, 2)])
def test_characters_are_weyl_invariant_with_correct_dimension(q):
    label = DynkinLabel(*q)
    chi = character(label)
    assert is_weyl_invariant(chi)
    assert evaluate_at_identity(chi) == dimension(label)
    assert conjugate(chi) == chi


def test_decompose_vector_squared():
    result = decompose(character(VECTOR) * character(VECTOR))
    assert result.multiplicities == {DynkinLabel(2, 0, 0, 0): 1, DynkinLabel(0, 1, 0, 0): 1, SINGLET: 1}
    assert result.total_dimension() == 81


def test_decompose_irreducible_input():
    assert decompose(character(DynkinLabel(0, 0, 1, 0))).multiplicities == {DynkinLabel(0, 0, 1, 0): 1}


def test_decompose_theta1():
    chi = character(DynkinLabel(2, 0, 0, 0)) + character(DynkinLabel(0, 0, 1, 0)) + character(DynkinLabel(1, 0, 0, 1))
    assert decompose(chi).multiplicities == {
        DynkinLabel(2, 0, 0, 0): 1, DynkinLabel(0, 0, 1, 0): 1, DynkinLabel(1, 0, 0, 1): 1,
    }


def test_decompose_random_irreducibles():
    rng = random.Random(21)
    for _ in range(8):
        label = DynkinLabel(*(rng.randint(0, 1) for _ in range(4)))
        assert decompose(character(label)).multiplicities == {label: 1}


def test_decompose_products_keep_dimension_and_agree_with_pairing():
    rng = random.Random(4)
    basics = [VECTOR, SPINOR, DynkinLabel(0, 1, 0, 0), DynkinLabel(0, 0, 0, 2)]
    for _ in range(4):
        a, b = rng.choice(basics), rng.choice(basics)
        product = character(a) * character(b)
        result = decompose(product)
        assert result.total_dimension() == dimension(a) * dimension(b)
        assert result.to_character() == product
        assert decompose_by_pairing(product, result.labels()).multiplicities == result.multiplicities
        for label in result.labels():
            assert inner_product(product, character(label)) == result.get(label)


def test_decompose_mixed_parity_sum():
    result = decompose(character(VECTOR) + character(SPINOR))
    assert result.multiplicities == {VECTOR: 1, SPINOR: 1}


def test_decompose_rejects_non_characters():
    with pytest.raises(NotACharacter):
        decompose(character(VECTOR) - character(SINGLET))
    with pytest.raises(NotACharacter):
        decompose(monomial((1, 0, 0, 0, 0)))
    with pytest.raises(NotACharacter):
        decompose(monomial((0, 0, 0, 0, 1)))


def test_inner_product_orthonormality():
    three_form = character(DynkinLabel(0, 0, 1, 0))
    assert inner_product(three_form, three_form) == 1
    assert inner_product(character(VECTOR), character(SPINOR)) == 0
    assert inner_product(character(VECTOR), character(VECTOR)) == 1
    assert inner_product(ONE, ONE) == 1


@pytest.mark.slow
def test_every_golden_character_has_its_dimension():
    store = GoldenTableStore(DEFAULT_GOLDEN_DIR)
    for label, recorded in store.recorded_dimensions().items():
        assert evaluate_at_identity(character(label)) == recorded, label
