"""
SO(9) (type B4) representation theory.

Weights are handled in z-units: a weight lambda is stored as the integer
vector 2*lambda, which is exactly the exponent vector of its monomial in the
half-angle variables z_i = e^{i x_i / 2}. Nothing here touches rationals
except the dimension formula.
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Sequence, Tuple

from App.helpers.laurent import (
    LaurentPoly,
    ONE,
    ZERO,
    exact_divide,
    monomial,
    pairing,
    signed_permutation,
)

logger = logging.getLogger(__name__)

RANK = 4
WEYL_GROUP_ORDER = 2 ** RANK * factorial(RANK)  # 384


class NotACharacter(ValueError):
    """Input polynomial is not a nonnegative combination of SO(9) characters"""


@dataclass(frozen=True)
class WeightVector:
    """B4 weight stored in half-units (z-exponents), e.g. rho = (7, 5, 3, 1)"""
    halves: Tuple[int, int, int, int]

    @property
    def is_dominant(self) -> bool:
        h1, h2, h3, h4 = self.halves
        return h1 >= h2 >= h3 >= h4 >= 0

    def __add__(self, other: 'WeightVector') -> 'WeightVector':
        return WeightVector(tuple(a + b for a, b in zip(self.halves, other.halves)))

    def scaled(self, n: int) -> 'WeightVector':
        return WeightVector(tuple(n * h for h in self.halves))

    def exponents(self) -> Tuple[int, int, int, int, int]:
        return (*self.halves, 0)


# mu_1 = (1,0,0,0), mu_2 = (1,1,0,0), mu_3 = (1,1,1,0), mu_4 = (1/2,1/2,1/2,1/2)
FUNDAMENTAL_WEIGHTS = (
    WeightVector((2, 0, 0, 0)),
    WeightVector((2, 2, 0, 0)),
    WeightVector((2, 2, 2, 0)),
    WeightVector((1, 1, 1, 1)),
)
RHO = WeightVector((7, 5, 3, 1))


@dataclass(frozen=True, order=True)
class DynkinLabel:
    """[q1, q2, q3, q4]; odd q4 is a spinor (fermionic) irrep"""
    q1: int
    q2: int
    q3: int
    q4: int

    def __post_init__(self):
        for name in ('q1', 'q2', 'q3', 'q4'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"Dynkin label component {name} must be a nonnegative integer, got {value!r}")

    @classmethod
    def of(cls, components: Sequence[int]) -> 'DynkinLabel':
        return cls(*(int(q) for q in components))

    @classmethod
    def from_weight(cls, weight: WeightVector) -> 'DynkinLabel':
        """Inverse of the fundamental-weight map; only dominant lattice weights qualify"""
        h1, h2, h3, h4 = weight.halves
        if not weight.is_dominant:
            raise NotACharacter(f"weight {weight.halves} is not dominant")
        if (h1 - h2) % 2 or (h2 - h3) % 2 or (h3 - h4) % 2:
            raise NotACharacter(f"weight {weight.halves} mixes tensor and spinor components")
        return cls((h1 - h2) // 2, (h2 - h3) // 2, (h3 - h4) // 2, h4)

    @property
    def components(self) -> Tuple[int, int, int, int]:
        return (self.q1, self.q2, self.q3, self.q4)

    @property
    def is_spinor(self) -> bool:
        return self.q4 % 2 == 1

    @property
    def statistics(self) -> str:
        return 'fermion' if self.is_spinor else 'boson'

    def highest_weight(self) -> WeightVector:
        total = WeightVector((0, 0, 0, 0))
        for q, mu in zip(self.components, FUNDAMENTAL_WEIGHTS):
            total = total + mu.scaled(q)
        return total

    def __str__(self) -> str:
        return f"[{self.q1},{self.q2},{self.q3},{self.q4}]"


@dataclass(frozen=True)
class IrrepSum:
    """Decomposition result: Dynkin label -> positive multiplicity"""
    multiplicities: Dict[DynkinLabel, int] = field(default_factory=dict)

    def get(self, label: DynkinLabel) -> int:
        return self.multiplicities.get(label, 0)

    def labels(self) -> List[DynkinLabel]:
        return sorted(self.multiplicities, key=lambda label: (dimension(label), label))

    def total_dimension(self) -> int:
        return sum(m * dimension(label) for label, m in self.multiplicities.items())

    def to_character(self) -> LaurentPoly:
        total = ZERO
        for label, m in self.multiplicities.items():
            total = total + character(label) * m
        return total

    def __len__(self) -> int:
        return len(self.multiplicities)


# ===== WEYL GROUP AND ROOTS =====

def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def weyl_group() -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], int], ...]:
    """All 384 signed permutations as (perm, signs, determinant sign)"""
    elements = []
    for perm in itertools.permutations(range(RANK)):
        parity = _permutation_sign(perm)
        for signs in itertools.product((1, -1), repeat=RANK):
            flips = sum(1 for s in signs if s < 0)
            elements.append((perm, signs, parity * (-1) ** flips))
    return tuple(elements)


def positive_roots() -> List[Tuple[int, int, int, int]]:
    """e_i, e_i - e_j, e_i + e_j (i < j) in ordinary weight coordinates"""
    roots = []
    for i in range(RANK):
        roots.append(tuple(1 if k == i else 0 for k in range(RANK)))
    for i, j in itertools.combinations(range(RANK), 2):
        roots.append(tuple(1 if k == i else (-1 if k == j else 0) for k in range(RANK)))
        roots.append(tuple(1 if k in (i, j) else 0 for k in range(RANK)))
    return roots


@lru_cache(maxsize=None)
def root_factors() -> Tuple[LaurentPoly, ...]:
    """e^{alpha/2} - e^{-alpha/2} per positive root; their product is D_rho"""
    factors = []
    for root in positive_roots():
        factors.append(monomial((*root, 0)) - monomial((*(-r for r in root), 0)))
    return tuple(factors)


def alternant(halves: Sequence[int]) -> LaurentPoly:
    """D_lambda = det[z_i^{2 lambda_j} - z_i^{-2 lambda_j}] for lambda given in half-units"""
    terms: Dict[Tuple[int, ...], int] = {}
    for perm, signs, sign in weyl_group():
        key = tuple(signs[i] * halves[perm[i]] for i in range(RANK)) + (0,)
        terms[key] = terms.get(key, 0) + sign
    return LaurentPoly(terms)


@lru_cache(maxsize=None)
def weyl_denominator() -> LaurentPoly:
    return alternant(RHO.halves)


def is_weyl_invariant(p: LaurentPoly) -> bool:
    return all(signed_permutation(p, perm, signs) == p for perm, signs, _ in weyl_group())


# ===== DIMENSIONS =====

def dimension(label: DynkinLabel) -> int:
    """Weyl dimension formula: product over positive roots of <mu+rho, a>/<rho, a>"""
    shifted = (label.highest_weight() + RHO).halves
    result = Fraction(1)
    for root in positive_roots():
        numerator = sum(a * h for a, h in zip(root, shifted))
        denominator = sum(a * h for a, h in zip(root, RHO.halves))
        result *= Fraction(numerator, denominator)
    if result.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {result} for {label}")
    return result.numerator


def symmetric_traceless_dimension(n: int) -> int:
    """(2n+7)(n+6)!/(7! n!), the dimension of [n,0,0,0]"""
    return (2 * n + 7) * factorial(n + 6) // (factorial(7) * factorial(n))


# ===== CHARACTERS =====

@lru_cache(maxsize=None)
def character(label: DynkinLabel) -> LaurentPoly:
    """Weyl character formula D_{rho+mu} / D_rho, exact.

    The denominator is divided out one positive-root factor at a time; each
    partial quotient is still an exact Laurent polynomial.
    """
    quotient = alternant((label.highest_weight() + RHO).halves)
    for factor in root_factors():
        quotient = exact_divide(quotient, factor)
    logger.debug(f"Character {label} built: {len(quotient)} terms")
    return quotient


def cos_product(n1: int, n2: int, n3: int, n4: int) -> LaurentPoly:
    """c_1^{n1} c_2^{n2} c_3^{n3} c_4^{n4} with c_i^n = 2cos(n x_i/2) = z_i^n + z_i^-n.

    A zero index means the factor is absent, as in c_1^2 c_2^2.
    """
    result = ONE
    for slot, n in enumerate((n1, n2, n3, n4)):
        if not n:
            continue
        up = [0] * 5
        down = [0] * 5
        up[slot] = n
        down[slot] = -n
        result = result * (monomial(up) + monomial(down))
    return result


# ===== DECOMPOSITION =====

def _is_dominant_exponent(m: Tuple[int, ...]) -> bool:
    return m[0] >= m[1] >= m[2] >= m[3] >= 0


def decompose(p: LaurentPoly) -> IrrepSum:
    """Split a character into irreducibles by dominant-weight peeling.

    The lexicographically greatest dominant monomial is always the highest
    weight of a constituent; its coefficient is that constituent's
    multiplicity. Subtract and repeat until nothing is left.
    """
    remaining = dict(p.items())
    if any(m[4] for m in remaining):
        raise NotACharacter("polynomial depends on u; split by spin first")

    multiplicities: Dict[DynkinLabel, int] = {}
    while remaining:
        dominant = [m for m in remaining if _is_dominant_exponent(m)]
        if not dominant:
            raise NotACharacter(f"{len(remaining)} terms left without a dominant weight")
        lead = max(dominant)
        count = remaining[lead]
        if count < 0:
            raise NotACharacter(f"negative multiplicity {count} at weight {lead[:4]}")
        label = DynkinLabel.from_weight(WeightVector(lead[:4]))
        if label in multiplicities:
            raise NotACharacter(f"{label} reappeared while peeling; input is not Weyl invariant")
        multiplicities[label] = count

        for m, c in character(label).items():
            value = remaining.get(m, 0) - count * c
            if value:
                remaining[m] = value
            else:
                remaining.pop(m, None)

    return IrrepSum(multiplicities)


def inner_product(a: LaurentPoly, b: LaurentPoly) -> int:
    """Orthogonality pairing: constant term of a * conj(b) * |D_rho|^2 over |W|"""
    denominator = weyl_denominator()
    total = pairing(a * denominator, b * denominator)
    quotient, remainder = divmod(total, WEYL_GROUP_ORDER)
    if remainder:
        raise NotACharacter(f"pairing {total} is not a multiple of {WEYL_GROUP_ORDER}")
    return quotient


def decompose_by_pairing(p: LaurentPoly, labels: Iterable[DynkinLabel]) -> IrrepSum:
    """Multiplicities of the given candidate irreps, read off by pairing.

    character(L) * D_rho is the alternant at highest weight + rho, so only
    the input needs multiplying.
    """
    weighted = p * weyl_denominator()
    multiplicities = {}
    for label in labels:
        total = pairing(weighted, alternant((label.highest_weight() + RHO).halves))
        count, remainder = divmod(total, WEYL_GROUP_ORDER)
        if remainder:
            raise NotACharacter(f"pairing with {label} is not integral")
        if count:
            multiplicities[label] = count
    return IrrepSum(multiplicities)
