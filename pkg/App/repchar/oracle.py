"""
Brute-force verifier at reduced scale.

Nothing here goes through the Weyl character formula or the Frobenius sum:
representations are given by their weight lists, antisymmetric powers by
literal subset enumeration, and Fock-space traces by walking every
occupation bitmask.
"""
import itertools
import logging
from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

from App.helpers.laurent import LaurentPoly, ONE, ZERO, monomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUBSETS = 2 ** 20
DEFAULT_MAX_STATES = 2 ** 20

Weight = Tuple[int, int, int, int, int]


class SizeGuard(RuntimeError):
    """Enumeration would exceed the configured limit"""


def _add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


# ===== WEIGHTED REPRESENTATIONS =====

@dataclass(frozen=True)
class WeightedRep:
    """A representation given by the exponent vector of each basis state"""
    weights: Tuple[Weight, ...]

    def __post_init__(self):
        for w in self.weights:
            if len(w) != 5:
                raise ValueError(f"weight {w!r} needs 5 exponents")

    @property
    def size(self) -> int:
        return len(self.weights)

    def character(self) -> LaurentPoly:
        total = {}
        for w in self.weights:
            total[w] = total.get(w, 0) + 1
        return LaurentPoly(total)

    @classmethod
    def so9_spinor(cls) -> 'WeightedRep':
        """16 weights (+-1/2, +-1/2, +-1/2, +-1/2), i.e. (+-1, ...) in z-units"""
        return cls(tuple((*signs, 0) for signs in itertools.product((1, -1), repeat=4)))

    @classmethod
    def su2_doublet(cls) -> 'WeightedRep':
        """u^(+-1/2) recorded in doubled units as u-exponents +-1"""
        return cls(((0, 0, 0, 0, 1), (0, 0, 0, 0, -1)))

    @classmethod
    def trivial(cls, size: int) -> 'WeightedRep':
        return cls(((0, 0, 0, 0, 0),) * size)


def direct_alt_character(rep: WeightedRep, n: int, max_subsets: int = DEFAULT_MAX_SUBSETS) -> LaurentPoly:
    """Sum over n-element subsets of the product monomial"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > rep.size:
        return ZERO
    subsets = comb(rep.size, n)
    if subsets > max_subsets:
        raise SizeGuard(f"Alt_{n} of a {rep.size}-state rep needs {subsets} subsets (limit {max_subsets})")

    total = {}
    for subset in itertools.combinations(rep.weights, n):
        w = (0, 0, 0, 0, 0)
        for weight in subset:
            w = _add(w, weight)
        total[w] = total.get(w, 0) + 1
    return LaurentPoly(total)


def exterior_generating_polynomial(rep: WeightedRep) -> List[LaurentPoly]:
    """Coefficients of t^0..t^size in prod_w (1 + t z^w); entry n is Alt_n"""
    layers = [ONE]
    for w in rep.weights:
        factor = monomial(w)
        grown = layers + [ZERO]
        for n in range(len(layers), 0, -1):
            grown[n] = grown[n] + layers[n - 1] * factor
        layers = grown
    return layers


# ===== FOCK SPACE =====

@dataclass(frozen=True)
class FockState:
    occupation: int
    weight: Weight

    @property
    def count(self) -> int:
        return bin(self.occupation).count('1')

    @property
    def parity(self) -> int:
        return self.count % 2


@dataclass(frozen=True)
class FockBasis:
    """All 2^m occupation patterns of m creation operators on a vacuum"""
    operators: Tuple[Weight, ...]
    vacuum: Weight
    states: Tuple[FockState, ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def sector_sizes(self) -> List[int]:
        sizes = [0] * (len(self.operators) + 1)
        for state in self.states:
            sizes[state.count] += 1
        return sizes


def enumerate_fock_basis(operators: Sequence[Sequence[int]], vacuum: Sequence[int] = (0, 0, 0, 0, 0),
                         max_states: int = DEFAULT_MAX_STATES) -> FockBasis:
    operators = tuple(tuple(op) for op in operators)
    vacuum = tuple(vacuum)
    total = 2 ** len(operators)
    if total > max_states:
        raise SizeGuard(f"{len(operators)} creation operators give {total} states (limit {max_states})")

    weights: List[Weight] = [vacuum] * total
    for mask in range(1, total):
        low = (mask & -mask).bit_length() - 1
        weights[mask] = _add(weights[mask & (mask - 1)], operators[low])

    states = tuple(FockState(mask, weights[mask]) for mask in range(total))
    logger.debug(f"Enumerated {total} Fock states over {len(operators)} operators")
    return FockBasis(operators, vacuum, states)


def fock_trace(basis: FockBasis) -> Tuple[LaurentPoly, LaurentPoly]:
    """Plain trace and the (-1)^F inserted trace"""
    plain, signed = {}, {}
    for state in basis.states:
        w = state.weight
        plain[w] = plain.get(w, 0) + 1
        signed[w] = signed.get(w, 0) + (-1 if state.parity else 1)
    return LaurentPoly(plain), LaurentPoly(signed)


def direct_sector_trace(m_pairs: int, weights: WeightedRep,
                        max_states: int = DEFAULT_MAX_STATES) -> List[LaurentPoly]:
    """
    Trace of each occupation sector of 2*m_pairs creation operators that
    each lower the u-charge by one from a vacuum at u^m_pairs. Entry n is
    u^(m_pairs - n) times the character of the n-particle states.
    """
    if weights.size != 2 * m_pairs:
        raise ValueError(f"{weights.size} operators do not match {m_pairs} pairs")
    operators = [_add(w, (0, 0, 0, 0, -1)) for w in weights.weights]
    basis = enumerate_fock_basis(operators, (0, 0, 0, 0, m_pairs), max_states)

    sectors = [dict() for _ in range(weights.size + 1)]
    for state in basis.states:
        bucket = sectors[state.count]
        bucket[state.weight] = bucket.get(state.weight, 0) + 1
    return [LaurentPoly(bucket) for bucket in sectors]


# ===== TOY MODEL =====

@dataclass(frozen=True)
class ToyFockModel:
    """
    Small analogue of the full model: an SO(3)-like two-component spinor
    carried by three adjoint directions, six real fermions in all. One
    complex mode plays theta^1, two creation operators play theta^+.
    """
    basis: FockBasis
    theta1: LaurentPoly
    theta1_tilde: LaurentPoly
    theta_pm: LaurentPoly
    theta_pm_tilde: LaurentPoly

    def factorized(self) -> Tuple[LaurentPoly, LaurentPoly]:
        return self.theta1 * self.theta_pm, self.theta1_tilde * self.theta_pm_tilde


def _u(n: int) -> LaurentPoly:
    return monomial((0, 0, 0, 0, n))


def toy_fock_model() -> ToyFockModel:
    spinor = WeightedRep(((1, 0, 0, 0, 0), (-1, 0, 0, 0, 0)))
    m_pairs = spinor.size // 2

    # theta^1 mode moves the spinor weight from -1 to +1; theta^+ carry the spinor weights and lower u
    operators = [(2, 0, 0, 0, 0)] + [_add(w, (0, 0, 0, 0, -1)) for w in spinor.weights]
    basis = enumerate_fock_basis(operators, (-1, 0, 0, 0, m_pairs))

    theta1 = monomial((1, 0, 0, 0, 0)) + monomial((-1, 0, 0, 0, 0))
    theta1_tilde = monomial((-1, 0, 0, 0, 0)) - monomial((1, 0, 0, 0, 0))

    alts = exterior_generating_polynomial(spinor)
    theta_pm, theta_pm_tilde = ZERO, ZERO
    for n in range(m_pairs):
        pair = _u(m_pairs - n) + _u(n - m_pairs)
        theta_pm = theta_pm + pair * alts[n]
        theta_pm_tilde = theta_pm_tilde + pair * alts[n] * (-1) ** n
    theta_pm = theta_pm + alts[m_pairs]
    theta_pm_tilde = theta_pm_tilde + alts[m_pairs] * (-1) ** m_pairs

    return ToyFockModel(basis, theta1, theta1_tilde, theta_pm, theta_pm_tilde)
