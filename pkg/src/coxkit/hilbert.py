"""Graded pieces of multigraded polynomial rings and complete intersections.

``ci_dimension`` uses the Koszul inclusion-exclusion valid for a regular
sequence; ``quotient_dim_oracle`` computes the same number by honest
linear algebra on explicit relations and serves as its witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Mapping, Sequence

from .linalg import sparse_rational_rank

__all__ = [
    "NotPointedError",
    "GradedPolyRingSpec",
    "SparsePolynomial",
    "CompleteIntersectionSpec",
    "count_monomials",
    "monomials_of_degree",
    "ci_dimension",
    "quotient_dim_oracle",
    "homogeneity_check",
    "CrossCheck",
    "crosscheck",
]


class NotPointedError(ValueError):
    pass


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class GradedPolyRingSpec:
    """Polynomial ring whose i-th variable has degree ``var_degrees[i]``."""

    var_degrees: tuple[tuple[int, ...], ...]
    search_bound: int = field(default=10, compare=False)

    def __post_init__(self):
        degs = tuple(tuple(int(x) for x in d) for d in self.var_degrees)
        if not degs:
            raise ValueError("a ring needs at least one variable")
        if len({len(d) for d in degs}) != 1:
            raise ValueError("all degrees must have the same length")
        object.__setattr__(self, "var_degrees", degs)

    @property
    def num_vars(self) -> int:
        return len(self.var_degrees)

    @property
    def rank(self) -> int:
        return len(self.var_degrees[0])

    @cached_property
    def positive_functional(self) -> tuple[int, ...]:
        """Integer u with ``<u, deg x_i> >= 1`` for every variable.

        Found by exhaustive search over ``|u_j| <= search_bound``, smallest
        max-norm first; its existence certifies that the degree cone is
        pointed and every graded piece is finite.
        """
        b = self.search_bound
        candidates = sorted(product(range(-b, b + 1), repeat=self.rank), key=lambda u: (max(map(abs, u)), u))
        for u in candidates:
            if all(_dot(u, d) >= 1 for d in self.var_degrees):
                return u
        raise NotPointedError(
            "no functional with |u| <= %d is positive on all degrees; the degree cone is not pointed "
            "(or needs a larger search bound)" % b
        )

    def degree(self, exponents: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(e * d[j] for e, d in zip(exponents, self.var_degrees)) for j in range(self.rank))

    def permuted(self, perm: Sequence[int]) -> "GradedPolyRingSpec":
        degs = [None] * self.num_vars
        for i, p in enumerate(perm):
            degs[p] = self.var_degrees[i]
        return GradedPolyRingSpec(tuple(degs))


def count_monomials(s: GradedPolyRingSpec, w: Sequence[int]) -> int:
    """Number of monomials of degree ``w``."""
    return _counter(s)(len(s.var_degrees), tuple(w))


_COUNTERS: dict = {}


def _counter(s: GradedPolyRingSpec):
    key = s.var_degrees
    if key in _COUNTERS:
        return _COUNTERS[key]
    u = s.positive_functional
    degs = s.var_degrees
    weights = [_dot(u, d) for d in degs]

    @lru_cache(maxsize=None)
    def count(n: int, w: tuple[int, ...]) -> int:
        # monomials in the first n variables of degree w
        budget = _dot(u, w)
        if budget < 0:
            return 0
        if n == 0:
            return 1 if not any(w) else 0
        d = degs[n - 1]
        total = 0
        for e in range(budget // weights[n - 1] + 1):
            total += count(n - 1, tuple(x - e * y for x, y in zip(w, d)))
        return total

    _COUNTERS[key] = count
    return count


def monomials_of_degree(s: GradedPolyRingSpec, w: Sequence[int]) -> list[tuple[int, ...]]:
    """Exponent vectors of degree ``w``, in lexicographic order."""
    count = _counter(s)
    degs = s.var_degrees
    out: list[tuple[int, ...]] = []

    # choose exponents from the last variable down; count(i, rem) says
    # whether the first i variables can still reach rem
    def walk(i: int, rem: tuple[int, ...], suffix: list[int]):
        if i == 0:
            out.append(tuple(reversed(suffix)))
            return
        d = degs[i - 1]
        e = 0
        while True:
            nxt = tuple(x - e * y for x, y in zip(rem, d))
            if _dot(s.positive_functional, nxt) < 0:
                break
            if count(i - 1, nxt):
                suffix.append(e)
                walk(i - 1, nxt, suffix)
                suffix.pop()
            e += 1

    w = tuple(w)
    if count(len(degs), w):
        walk(len(degs), w, [])
    out.sort()
    return out


class SparsePolynomial:
    """Finite map from exponent vectors to nonzero rational coefficients."""

    def __init__(self, terms: Mapping[Sequence[int], object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        lengths = {len(e) for e in clean}
        if len(lengths) > 1:
            raise ValueError("exponent vectors of different lengths")
        self.terms = clean

    def __repr__(self):
        return "SparsePolynomial(%r)" % (self.terms,)

    def __eq__(self, other):
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SparsePolynomial(terms)

    def __neg__(self):
        return SparsePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def times_monomial(self, m: Sequence[int]) -> "SparsePolynomial":
        return SparsePolynomial({tuple(a + b for a, b in zip(e, m)): c for e, c in self.terms.items()})

    def permuted(self, perm: Sequence[int]) -> "SparsePolynomial":
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, p in enumerate(perm):
                ne[p] = e[i]
            out[tuple(ne)] = c
        return SparsePolynomial(out)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "SparsePolynomial":
        return cls({tuple(exponents): coeff})

    def format(self, labels: Sequence[str]) -> str:
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                labels[i] if k == 1 else "%s^%d" % (labels[i], k) for i, k in enumerate(e) if k
            ) or "1"
            parts.append("%s*%s" % (c, mono) if c != 1 else mono)
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """Quotient of ``ring`` by relations of the given degrees.

    ``relations`` is optional; when present there is one explicit
    polynomial per entry of ``rel_degrees``.
    """

    ring: GradedPolyRingSpec
    rel_degrees: tuple[tuple[int, ...], ...]
    relations: tuple[SparsePolynomial, ...] | None = None
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rel_degrees", tuple(tuple(int(x) for x in d) for d in self.rel_degrees))
        if self.relations is not None:
            object.__setattr__(self, "relations", tuple(self.relations))
            if len(self.relations) != len(self.rel_degrees):
                raise ValueError("need one relation per relation degree")
        if not self.labels:
            object.__setattr__(self, "labels", tuple("x%d" % i for i in range(self.ring.num_vars)))

    def permuted(self, var_perm: Sequence[int], rel_perm: Sequence[int] | None = None) -> "CompleteIntersectionSpec":
        rel_perm = list(rel_perm) if rel_perm is not None else list(range(len(self.rel_degrees)))
        degs = [self.rel_degrees[i] for i in rel_perm]
        rels = None
        if self.relations is not None:
            rels = tuple(self.relations[i].permuted(var_perm) for i in rel_perm)
        return CompleteIntersectionSpec(self.ring.permuted(var_perm), tuple(degs), rels)


def ci_dimension(c: CompleteIntersectionSpec, w: Sequence[int]) -> int:
    """``sum_S (-1)^|S| count(w - sum_{s in S} deg rel_s)`` over subsets S."""
    w = tuple(w)
    total = 0
    k = len(c.rel_degrees)
    for size in range(k + 1):
        for subset in combinations(range(k), size):
            shift = w
            for s in subset:
                shift = _sub(shift, c.rel_degrees[s])
            total += (-1) ** size * count_monomials(c.ring, shift)
    return total


def quotient_dim_oracle(c: CompleteIntersectionSpec, w: Sequence[int]) -> int:
    """Dimension of the degree-``w`` piece of the quotient by explicit relations.

    Spans ``m * rel`` over all monomials ``m`` of the complementary degree
    and subtracts the exact rank of that span from the number of monomials
    of degree ``w``.
    """
    if c.relations is None:
        raise ValueError("the oracle needs explicit relations")
    w = tuple(w)
    basis = monomials_of_degree(c.ring, w)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for rel, deg in zip(c.relations, c.rel_degrees):
        for m in monomials_of_degree(c.ring, _sub(w, deg)):
            row = {}
            for e, coeff in rel.terms.items():
                key = tuple(a + b for a, b in zip(e, m))
                try:
                    row[index[key]] = coeff
                except KeyError:
                    raise ValueError("relation term %s is not of degree %s" % (e, deg)) from None
            rows.append(row)
    return len(basis) - sparse_rational_rank(rows)


def homogeneity_check(c: CompleteIntersectionSpec) -> tuple[bool, tuple | None]:
    """Every term of every relation has the declared degree.

    Returns ``(True, None)`` or ``(False, (relation index, exponent vector,
    its degree))`` for the first offending term.
    """
    if c.relations is None:
        raise ValueError("no explicit relations to check")
    for k, (rel, deg) in enumerate(zip(c.relations, c.rel_degrees)):
        for e in sorted(rel.terms):
            got = c.ring.degree(e)
            if got != deg:
                return False, (k, e, got)
    return True, None


@dataclass(frozen=True)
class CrossCheck:
    seed: int
    reseeded: bool
    mismatches: tuple[tuple[tuple[int, ...], int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def crosscheck(make_spec: Callable[[int], CompleteIntersectionSpec], degrees: Iterable[Sequence[int]], seed: int) -> CrossCheck:
    """Compare ci_dimension with the linear-algebra oracle on ``degrees``.

    Random coefficients can be accidentally special; a mismatch triggers
    one retry with ``seed + 1`` before it is reported.  ``mismatches``
    lists ``(degree, ci_dimension, oracle)`` for the last seed tried.
    """
    degrees = [tuple(w) for w in degrees]

    def run(s):
        spec = make_spec(s)
        bad = []
        for w in degrees:
            expected = ci_dimension(spec, w)
            got = quotient_dim_oracle(spec, w)
            if expected != got:
                bad.append((w, expected, got))
        return tuple(bad)

    bad = run(seed)
    if not bad:
        return CrossCheck(seed, False, ())
    return CrossCheck(seed + 1, True, run(seed + 1))
