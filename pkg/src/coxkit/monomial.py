"""Squarefree monomial ideals and their minimal primes.

A squarefree monomial is identified with its support, a set of variable
indices (0-based).  Minimal primes of such an ideal are the coordinate
primes over the minimal transversals (hitting sets) of the supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "SquarefreeMonomialIdeal",
    "minimal_transversals",
    "minimal_primes",
    "vanishing_codim",
    "intersect_primes",
    "antichain",
    "canonical_order",
]


def canonical_order(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Sort index sets by (size, sorted contents)."""
    uniq = {frozenset(s) for s in sets}
    return tuple(sorted(uniq, key=lambda s: (len(s), sorted(s))))


def antichain(sets: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Drop every set that contains another set of the family."""
    ordered = canonical_order(sets)
    kept: list[frozenset[int]] = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return tuple(kept)


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Ideal generated by squarefree monomials in ``num_vars`` variables.

    ``generators`` holds supports; the constructor reduces them to an
    antichain in canonical order.  An empty support is the monomial 1, so
    the ideal is then the unit ideal.
    """

    num_vars: int
    generators: tuple[frozenset[int], ...]

    def __init__(self, num_vars: int, generators: Iterable[Iterable[int]]):
        gens = antichain(generators)
        for g in gens:
            if any(i < 0 or i >= num_vars for i in g):
                raise ValueError("generator %s uses a variable outside 0..%d" % (sorted(g), num_vars - 1))
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "generators", gens)

    @property
    def is_unit(self) -> bool:
        return any(len(g) == 0 for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains_monomial(self, support: Iterable[int]) -> bool:
        s = frozenset(support)
        return any(g <= s for g in self.generators)

    def minimal_primes(self) -> tuple[frozenset[int], ...]:
        return minimal_primes(self)

    def vanishing_codim(self) -> int:
        return vanishing_codim(self)

    def permuted(self, perm: Sequence[int]) -> "SquarefreeMonomialIdeal":
        """Rename variable ``i`` to ``perm[i]``."""
        return SquarefreeMonomialIdeal(self.num_vars, ({perm[i] for i in g} for g in self.generators))


def minimal_transversals(family: Sequence[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """All inclusion-minimal sets meeting every member of ``family``.

    Sets are added one at a time (Berge's multiplication); after each step
    the partial transversals are pruned back to an antichain.  An empty
    family has the single transversal ``{}``; a family containing the empty
    set has none.
    """
    edges = antichain(family)
    partial: list[frozenset[int]] = [frozenset()]
    for edge in edges:
        hit = [t for t in partial if t & edge]
        miss = [t for t in partial if not (t & edge)]
        grown = {t | {v} for t in miss for v in edge}
        # a grown set is redundant if it contains a transversal that already hits edge
        fresh = [g for g in grown if not any(h <= g for h in hit)]
        partial = list(hit) + list(antichain(fresh))
        partial = list(antichain(partial))
    return canonical_order(partial)


def minimal_primes(ideal: SquarefreeMonomialIdeal) -> tuple[frozenset[int], ...]:
    """Supports of the minimal primes, in canonical order.

    Raises ``ValueError`` on the unit ideal.  The zero ideal has the single
    minimal prime ``(0)``, returned as the empty set.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no minimal primes")
    return minimal_transversals(ideal.generators)


def vanishing_codim(ideal: SquarefreeMonomialIdeal) -> int:
    """Codimension of V(ideal) in affine ``num_vars``-space."""
    if ideal.is_unit:
        raise ValueError("V of the unit ideal is empty")
    if ideal.is_zero:
        raise ValueError("V of the zero ideal is the whole space")
    return min(len(p) for p in minimal_primes(ideal))


def intersect_primes(primes: Iterable[Iterable[int]], num_vars: int) -> SquarefreeMonomialIdeal:
    """The ideal ``P_1 ∩ ... ∩ P_k`` of coordinate primes.

    Its minimal generators are the minimal transversals of the prime
    supports.
    """
    primes = [frozenset(p) for p in primes]
    if any(not p for p in primes):
        raise ValueError("a coordinate prime needs at least one variable")
    return SquarefreeMonomialIdeal(num_vars, minimal_transversals(primes))
