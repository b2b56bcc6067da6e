"""SU(2) characters in u = e^{iy} and splitting of u-dependence into spin sectors."""
import logging
from typing import Dict

from App.helpers.laurent import LaurentPoly, monomial

logger = logging.getLogger(__name__)

Spin = int

MAX_SPIN = 8


class NotUSymmetric(ValueError):
    """Polynomial is not invariant under u -> 1/u"""


def _u_power(n: int) -> LaurentPoly:
    return monomial((0, 0, 0, 0, n))


def su2_character(n: Spin) -> LaurentPoly:
    """u^-n + u^-n+1 + ... + u^n"""
    if n < 0:
        raise ValueError(f"spin must be nonnegative, got {n}")
    return LaurentPoly({(0, 0, 0, 0, k): 1 for k in range(-n, n + 1)})


def cosine_pair(n: Spin) -> LaurentPoly:
    """u^n + u^-n, which equals su2_character(n) - su2_character(n-1)"""
    if n < 1:
        raise ValueError(f"cosine_pair needs n >= 1, got {n}")
    return _u_power(n) + _u_power(-n)


def _invert_u(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({(*m[:4], -m[4]): c for m, c in p.items()})


def _u_layers(p: LaurentPoly) -> Dict[int, Dict[tuple, int]]:
    layers: Dict[int, Dict[tuple, int]] = {}
    for m, c in p.items():
        layers.setdefault(m[4], {})[(*m[:4], 0)] = c
    return layers


def split_by_spin(p: LaurentPoly) -> Dict[Spin, LaurentPoly]:
    """
    Coefficients c_n (u-free) with p = sum_n su2_character(n) * c_n.

    Peels from the highest u-power down: once higher spins are removed the
    u^n layer is exactly c_n. For a u-symmetric input this reduces to
    c_n = layer(n) - layer(n+1).
    """
    if _invert_u(p) != p:
        raise NotUSymmetric("polynomial changes under u -> 1/u")

    layers = _u_layers(p)
    if not layers:
        return {}
    top = max(layers)

    spins: Dict[Spin, LaurentPoly] = {}
    for n in range(top, -1, -1):
        here = LaurentPoly(layers.get(n, {}))
        above = LaurentPoly(layers.get(n + 1, {}))
        coefficient = here - above
        if coefficient:
            spins[n] = coefficient
    logger.debug(f"Split into spins {sorted(spins)}")
    return spins


def join_spins(spins: Dict[Spin, LaurentPoly]) -> LaurentPoly:
    """Inverse of split_by_spin"""
    total = LaurentPoly()
    for n, coefficient in spins.items():
        total = total + su2_character(n) * coefficient
    return total

