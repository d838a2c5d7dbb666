"""Hypersurfaces of P^n containing a codimension-two linear space L.

Z is the blow-up of P^n along L, X the strict transform of a degree-d
hypersurface through L.  Classes on X are written ``aH + bL``.  Z_1 is the
toric variety obtained by adjoining the extra Cox generator x_0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coxring import GradingData
from .hilbert import CompleteIntersectionSpec, GradedPolyRingSpec, SparsePolynomial, monomials_of_degree
from .linalg import IntegerMatrix
from .monomial import intersect_primes

__all__ = [
    "BlowupModel",
    "DivisorClassX",
    "blowup_grading",
    "z1_grading",
    "cox4_spec",
    "cox3_spec",
    "intersection_numbers",
    "is_nef_on_X",
    "is_effective_on_X",
    "nonspecial",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class BlowupModel:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 3 or self.d < 3:
            raise ValueError("need n >= 3 and d >= 3, got n=%d, d=%d" % (self.n, self.d))


@dataclass(frozen=True)
class DivisorClassX:
    """The class ``a*H + b*L`` on X."""

    a: int
    b: int

    def __add__(self, other):
        return DivisorClassX(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return DivisorClassX(self.a - other.a, self.b - other.b)

    def __rmul__(self, k: int):
        return DivisorClassX(k * self.a, k * self.b)

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return "%dH%+dL" % (self.a, self.b)


H = DivisorClassX(1, 0)
L = DivisorClassX(0, 1)


def canonical_class(d: int) -> DivisorClassX:
    """K_X = (d - 4) H by adjunction."""
    return DivisorClassX(d - 4, 0)


def _blowup_columns(n: int) -> list[tuple[int, int]]:
    # x_1, x_2 : H - E ; x_3 .. x_{n+1} : H ; x_{n+2} : E
    return [(1, -1)] * 2 + [(1, 0)] * (n - 1) + [(0, 1)]


def blowup_grading(m: BlowupModel) -> GradingData:
    """Cox ring of Bl_L P^n: n+2 generators x_1..x_{n+2}."""
    cols = _blowup_columns(m.n)
    q = IntegerMatrix(tuple(zip(*cols)), len(cols))
    r = m.n + 2
    primes = [{0, 1}, set(range(2, r))]
    return GradingData(q, intersect_primes(primes, r), tuple("x%d" % (i + 1) for i in range(r)))


def z1_grading(m: BlowupModel) -> GradingData:
    """Z_1: generators x_0..x_{n+2} with deg x_0 = (d-2, 1)."""
    cols = [(m.d - 2, 1)] + _blowup_columns(m.n)
    r = m.n + 3
    q = IntegerMatrix(tuple(zip(*cols)), r)
    # (x_0, x_3, ..., x_{n+2}) and (x_1, ..., x_{n+1}); position i holds x_i
    primes = [{0} | set(range(3, r)), set(range(1, m.n + 2))]
    return GradingData(q, intersect_primes(primes, r), tuple("x%d" % i for i in range(r)))


def _random_section(ring: GradedPolyRingSpec, degree, rng: random.Random) -> SparsePolynomial:
    """Random combination of all monomials of ``degree`` not involving x_0."""
    terms = {}
    for e in monomials_of_degree(ring, degree):
        if e[0]:
            continue
        c = 0
        while c == 0:
            c = rng.randint(-9, 9)
        terms[e] = c
    return SparsePolynomial(terms)


def _x(r: int, *idx: int) -> tuple[int, ...]:
    e = [0] * r
    for i in idx:
        e[i] += 1
    return tuple(e)


def cox4_spec(m: BlowupModel, seed: int = DEFAULT_SEED) -> CompleteIntersectionSpec:
    """C[x_0..x_{n+2}] / (x_0 x_2 - f, x_0 x_1 + g) with random f, g of degree (d-1) e_1."""
    if m.n < 4:
        raise ValueError("cox4_spec needs n >= 4; use cox3_spec(d) for n = 3")
    g = z1_grading(m)
    ring = GradedPolyRingSpec(g.degrees)
    r = ring.num_vars
    deg = (m.d - 1, 0)
    rng = random.Random(seed)
    f = _random_section(ring, deg, rng)
    gg = _random_section(ring, deg, rng)
    rels = (
        SparsePolynomial.monomial(_x(r, 0, 2)) - f,
        SparsePolynomial.monomial(_x(r, 0, 1)) + gg,
    )
    return CompleteIntersectionSpec(ring, (deg, deg), rels, g.labels)


def cox3_spec(d: int, seed: int = DEFAULT_SEED) -> CompleteIntersectionSpec:
    """C[x_0..x_5] / (x_0 x_1 - f, x_0 x_2 - g) for n = 3.

    f and g are random forms of degree d-1 in x_1 x_5, x_2 x_5, x_3, x_4;
    these are exactly the monomials of degree (d-1, 0) free of x_0.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    m = BlowupModel(3, d)
    g = z1_grading(m)
    ring = GradedPolyRingSpec(g.degrees)
    deg = (d - 1, 0)
    rng = random.Random(seed)
    f = _random_section(ring, deg, rng)
    gg = _random_section(ring, deg, rng)
    rels = (
        SparsePolynomial.monomial(_x(6, 0, 1)) - f,
        SparsePolynomial.monomial(_x(6, 0, 2)) - gg,
    )
    return CompleteIntersectionSpec(ring, (deg, deg), rels, g.labels)


def in_generator_span(e) -> bool:
    """Is the x_0-free monomial ``e`` a product of x_1x_5, x_2x_5, x_3, x_4?"""
    return e[0] == 0 and e[5] == e[1] + e[2]


def intersection_numbers(d: int, D: DivisorClassX) -> tuple[int, int]:
    """``(D.L, D.(H - L)) = (a + (2 - d) b, a + b)``."""
    return D.a + (2 - d) * D.b, D.a + D.b


def is_nef_on_X(d: int, D: DivisorClassX, strict: bool = False) -> bool:
    """Closed nef cone ``D.L >= 0, D.(H-L) >= 0``; ``strict`` tests its interior."""
    with_l, with_hl = intersection_numbers(d, D)
    if strict:
        return with_l > 0 and with_hl > 0
    return with_l >= 0 and with_hl >= 0


def is_effective_on_X(D: DivisorClassX) -> bool:
    """D is a nonnegative combination of H - L and L."""
    return D.a >= 0 and D.a + D.b >= 0


def nonspecial(d: int, D: DivisorClassX) -> bool:
    """Sufficient condition for h^1(D) = 0: ``a + (2-d) b > 0`` and ``a + b > d - 4``."""
    if d < 3:
        raise ValueError("need d >= 3")
    with_l, with_hl = intersection_numbers(d, D)
    return with_l > 0 and with_hl > d - 4
