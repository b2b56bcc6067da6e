"""
Exact multivariate Laurent polynomials over the integers.

Every character in the package is one of these. A monomial is a 5-tuple of
signed exponents: slots 0-3 are the exponents of z_i = e^{i x_i / 2}
(half-angle torus variables), slot 4 is the exponent of u = e^{i y}.
Coefficients are Python ints, so nothing ever overflows.
"""
import heapq
import re
from typing import Dict, ItemsView, Mapping, Optional, Sequence, Tuple

ARITY = 5
VARIABLES = ('z1', 'z2', 'z3', 'z4', 'u')

Monomial = Tuple[int, int, int, int, int]
ZERO_EXPONENTS: Monomial = (0, 0, 0, 0, 0)


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder"""


class LaurentPoly:
    """Immutable Laurent polynomial in z1..z4, u with integer coefficients.

    The stored map never holds a zero coefficient, so two equal polynomials
    always have equal term maps.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for exponents, coefficient in terms.items():
                if len(exponents) != ARITY:
                    raise ValueError(f"Monomial needs {ARITY} exponents, got {exponents!r}")
                if not isinstance(coefficient, int):
                    raise TypeError(f"Coefficients must be int, got {coefficient!r} at {exponents!r}")
                if coefficient:
                    key = tuple(int(e) for e in exponents)
                    clean[key] = clean.get(key, 0) + coefficient
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> 'LaurentPoly':
        """Adopt an already canonical term map without copying"""
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    def __reduce__(self):
        return (LaurentPoly, (self._terms,))

    # ===== ACCESSORS =====

    def items(self) -> ItemsView[Monomial, int]:
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # constants hash like the int they compare equal to
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and ZERO_EXPONENTS in self._terms:
                self._hash = hash(self._terms[ZERO_EXPONENTS])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # ===== RING OPERATIONS =====

    def __add__(self, other) -> 'LaurentPoly':
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            total = out.get(m, 0) + c
            if total:
                out[m] = total
            else:
                del out[m]
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> 'LaurentPoly':
        if isinstance(other, int):
            other = constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'LaurentPoly':
        return (-self) + other

    def __mul__(self, other) -> 'LaurentPoly':
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._wrap({})
            return LaurentPoly._wrap({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented

        out: Dict[Monomial, int] = {}
        get = out.get
        right = list(other._terms.items())
        for (a0, a1, a2, a3, a4), ca in self._terms.items():
            for (b0, b1, b2, b3, b4), cb in right:
                key = (a0 + b0, a1 + b1, a2 + b2, a3 + b3, a4 + b4)
                out[key] = get(key, 0) + ca * cb
        return LaurentPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LaurentPoly':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Only nonnegative integer powers are supported, got {exponent!r}")
        result = constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


# ===== CONSTRUCTORS =====

def constant(value: int) -> LaurentPoly:
    return LaurentPoly._wrap({ZERO_EXPONENTS: value} if value else {})


def monomial(exponents: Sequence[int], coefficient: int = 1) -> LaurentPoly:
    """Single term coefficient * z1^e1 z2^e2 z3^e3 z4^e4 u^e5"""
    return LaurentPoly({tuple(exponents): coefficient})


def variable(name: str, power: int = 1) -> LaurentPoly:
    exponents = [0] * ARITY
    exponents[VARIABLES.index(name)] = power
    return monomial(exponents)


ZERO = constant(0)
ONE = constant(1)


# ===== ARITHMETIC =====

def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def order_key(exponents: Monomial) -> Tuple[int, Monomial]:
    """Graded lexicographic key: total degree first, then slot by slot"""
    return (sum(exponents), exponents)


def power_substitute(p: LaurentPoly, k: int) -> LaurentPoly:
    """chi(R^k) from chi(R): every exponent vector scaled by k"""
    if k < 1:
        raise ValueError(f"power_substitute needs k >= 1, got {k}")
    if k == 1:
        return p
    return LaurentPoly._wrap({tuple(k * e for e in m): c for m, c in p.items()})


def evaluate_at_identity(p: LaurentPoly) -> int:
    """Value at all variables = 1, i.e. the sum of the coefficients"""
    return sum(c for _, c in p.items())


def conjugate(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._wrap({tuple(-e for e in m): c for m, c in p.items()})


def constant_term(p: LaurentPoly) -> int:
    return p.coefficient(ZERO_EXPONENTS)


def pairing(p: LaurentPoly, q: LaurentPoly) -> int:
    """constant_term(p * conjugate(q)) without forming the product"""
    if len(q) < len(p):
        p, q = q, p
    return sum(c * q.coefficient(m) for m, c in p.items())


def exact_integer_divide(p: LaurentPoly, divisor: int) -> LaurentPoly:
    """Divide every coefficient by an integer, refusing to round"""
    if divisor == 0:
        raise ZeroDivisionError("division of a polynomial by integer zero")
    out = {}
    for m, c in p.items():
        q, r = divmod(c, divisor)
        if r:
            raise NotDivisible(f"coefficient {c} of {m} is not divisible by {divisor}")
        out[m] = q
    return LaurentPoly._wrap(out)


def signed_permutation(p: LaurentPoly, perm: Sequence[int], signs: Sequence[int]) -> LaurentPoly:
    """Move z-slot perm[i] to slot i with sign signs[i]; u is untouched"""
    def move(m):
        return (signs[0] * m[perm[0]], signs[1] * m[perm[1]],
                signs[2] * m[perm[2]], signs[3] * m[perm[3]], m[4])
    return LaurentPoly._wrap({move(m): c for m, c in p.items()})


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num / den by leading-term elimination.

    Leading terms are taken in graded lexicographic order. Quotient
    monomials must stay inside the box that per-variable degrees allow,
    which bounds the search and makes a non-exact division fail instead of
    running forever.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return ZERO

    lead = max(den.monomials(), key=order_key)
    lead_coefficient = den.coefficient(lead)
    tail = [(m, c) for m, c in den.items() if m != lead]

    upper = [max(m[i] for m in num.monomials()) - max(m[i] for m in den.monomials()) for i in range(ARITY)]
    lower = [min(m[i] for m in num.monomials()) - min(m[i] for m in den.monomials()) for i in range(ARITY)]

    remainder = dict(num.items())
    heap = [_heap_key(m) for m in remainder]
    heapq.heapify(heap)
    quotient: Dict[Monomial, int] = {}

    while heap:
        m = _from_heap_key(heapq.heappop(heap))
        c = remainder.pop(m, 0)
        if not c:
            continue

        q, r = divmod(c, lead_coefficient)
        if r:
            raise NotDivisible(f"coefficient {c} at {m} not divisible by leading coefficient {lead_coefficient}")
        qm = tuple(a - b for a, b in zip(m, lead))
        if any(e < lo or e > hi for e, lo, hi in zip(qm, lower, upper)):
            raise NotDivisible(f"remainder term {c} at {m} cannot be eliminated")
        quotient[qm] = q

        for dm, dc in tail:
            t = (qm[0] + dm[0], qm[1] + dm[1], qm[2] + dm[2], qm[3] + dm[3], qm[4] + dm[4])
            previous = remainder.get(t, 0)
            value = previous - q * dc
            if value:
                if not previous:
                    heapq.heappush(heap, _heap_key(t))
                remainder[t] = value
            elif previous:
                del remainder[t]

    return LaurentPoly._wrap(quotient)


def _heap_key(m: Monomial) -> Tuple[int, ...]:
    # heapq is a min-heap; negate to pop the grlex-largest monomial first
    return (-sum(m), -m[0], -m[1], -m[2], -m[3], -m[4])


def _from_heap_key(key: Tuple[int, ...]) -> Monomial:
    return (-key[1], -key[2], -key[3], -key[4], -key[5])


# ===== TEXT FORMAT =====

_TERM_SPLIT = re.compile(r'\s+([+-])\s+')
_TERM = re.compile(r'^(-?\d+)(?:\s*\*\s*(.+))?$')
_FACTOR = re.compile(r'^(z[1-4]|u)\^(-?\d+)$')


def format_term(exponents: Monomial, coefficient: int) -> str:
    factors = ' '.join(f"{name}^{e}" for name, e in zip(VARIABLES, exponents) if e)
    return f"{coefficient} * {factors}" if factors else str(coefficient)


def format_poly(p: LaurentPoly) -> str:
    """Canonical text: terms in descending graded lex order, `coef * z1^a ... u^e`"""
    if not p:
        return '0'
    pieces = []
    for m in sorted(p.monomials(), key=order_key, reverse=True):
        c = p.coefficient(m)
        if not pieces:
            pieces.append(format_term(m, c))
        elif c < 0:
            pieces.append(f"- {format_term(m, -c)}")
        else:
            pieces.append(f"+ {format_term(m, c)}")
    return ' '.join(pieces)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of format_poly; also accepts any term order"""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")

    terms: Dict[Monomial, int] = {}
    sign = 1
    for index, piece in enumerate(_TERM_SPLIT.split(text)):
        if index % 2:
            sign = 1 if piece == '+' else -1
            continue
        match = _TERM.match(piece.strip())
        if not match:
            raise ValueError(f"Malformed term: {piece!r}")
        exponents = [0] * ARITY
        if match.group(2):
            for factor in match.group(2).split():
                factor_match = _FACTOR.match(factor)
                if not factor_match:
                    raise ValueError(f"Malformed factor {factor!r} in term {piece!r}")
                exponents[VARIABLES.index(factor_match.group(1))] += int(factor_match.group(2))
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + sign * int(match.group(1))
        sign = 1
    return LaurentPoly(terms)
