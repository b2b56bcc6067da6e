"""
Characters of antisymmetric tensor powers by the Frobenius formula.

    chi(Alt_n R) = sum over {i_k : sum k*i_k = n} of
                   (-1)^(n + sum i_k) * prod chi_k^i_k / (i_k! k^i_k)

with chi_k = chi(R^k). The fermionic variant replaces the sign by
(-1)^(sum i_k). Everything is accumulated as n! * chi(Alt_n R) over the
integers and divided once at the end.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy.utilities.iterables import partitions

from App.helpers.laurent import (
    LaurentPoly,
    NotDivisible,
    ONE,
    ZERO,
    evaluate_at_identity,
    exact_integer_divide,
    power_substitute,
)
from App.repchar.weyl_b4 import DynkinLabel, character

logger = logging.getLogger(__name__)

SPINOR = DynkinLabel(0, 0, 0, 1)
SPINOR_DIMENSION = 16


class NotIntegral(ArithmeticError):
    """n! * chi(Alt_n) was not divisible by n!"""


@dataclass(frozen=True)
class PowerSumVector:
    """chi_k = chi(R^k) for k = 1..n_max"""
    chi: Tuple[LaurentPoly, ...]

    @classmethod
    def build(cls, base: LaurentPoly, n_max: int) -> 'PowerSumVector':
        return cls(tuple(power_substitute(base, k) for k in range(1, n_max + 1)))

    @property
    def n_max(self) -> int:
        return len(self.chi)

    def __getitem__(self, k: int) -> LaurentPoly:
        """1-based, matching chi_1 .. chi_n"""
        if not 1 <= k <= len(self.chi):
            raise IndexError(f"chi_{k} outside 1..{len(self.chi)}")
        return self.chi[k - 1]

    @property
    def base_dimension(self) -> int:
        return evaluate_at_identity(self.chi[0]) if self.chi else 0


def power_sum_vector(base: LaurentPoly, n_max: int) -> PowerSumVector:
    return PowerSumVector.build(base, n_max)


def partitions_with_multiplicity(n: int) -> List[Dict[int, int]]:
    """All {k: i_k} with sum k*i_k = n; ordered from all-ones to the single part"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [{}]
    # sympy reuses the yielded dict
    found = [dict(p) for p in partitions(n)]
    found.reverse()
    return found


def frobenius_coefficient(multiplicities: Dict[int, int], n: int, fermionic_sign: bool = False) -> int:
    """Signed integer weight n! * sign / prod(i_k! k^i_k) of one partition"""
    parts = sum(multiplicities.values())
    exponent = parts if fermionic_sign else n + parts
    denominator = 1
    for k, i in multiplicities.items():
        denominator *= factorial(i) * k ** i
    return (-1) ** exponent * (factorial(n) // denominator)


def frobenius_numerator(power_sums: Sequence[LaurentPoly], n: int, fermionic_sign: bool = False) -> LaurentPoly:
    """n! * chi(Alt_n) as an integer combination of products of the chi_k.

    power_sums[k-1] is chi_k; any values may be substituted, which is what
    makes the formula checkable against a polynomial identity.
    """
    if n > len(power_sums):
        raise ValueError(f"need chi_1..chi_{n}, got {len(power_sums)} power sums")

    powers: Dict[Tuple[int, int], LaurentPoly] = {}

    def power(k: int, i: int) -> LaurentPoly:
        key = (k, i)
        if key not in powers:
            powers[key] = power_sums[k - 1] ** i
        return powers[key]

    total = ZERO
    for multiplicities in partitions_with_multiplicity(n):
        term = ONE
        for k, i in sorted(multiplicities.items()):
            term = term * power(k, i)
        total = total + term * frobenius_coefficient(multiplicities, n, fermionic_sign)
    return total


def alt_character(base: LaurentPoly, n: int, fermionic_sign: bool = False) -> LaurentPoly:
    """chi(Alt_n(R)) for the representation with character base"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return ONE
    power_sums = power_sum_vector(base, n)
    numerator = frobenius_numerator(power_sums.chi, n, fermionic_sign)
    try:
        return exact_integer_divide(numerator, factorial(n))
    except NotDivisible as e:
        raise NotIntegral(f"Frobenius sum for n={n} is not integral: {e}") from e


@lru_cache(maxsize=None)
def alt_spinor(n: int) -> LaurentPoly:
    """chi(Alt_n(spinor)) straight from the Frobenius formula"""
    logger.info(f"Computing Alt_{n}(spinor)")
    return alt_character(character(SPINOR), n)


@lru_cache(maxsize=None)
def alt_spinor_table() -> Tuple[LaurentPoly, ...]:
    """chi(Alt_n(spinor)) for n = 0..16; the upper half by Alt_{16-n} = Alt_n"""
    lower = [alt_spinor(n) for n in range(SPINOR_DIMENSION // 2 + 1)]
    upper = [lower[SPINOR_DIMENSION - n] for n in range(SPINOR_DIMENSION // 2 + 1, SPINOR_DIMENSION + 1)]
    return tuple(lower + upper)
