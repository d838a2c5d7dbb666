"""Cox-ring bookkeeping for toric ambients.

The Cl(Z)-grading of the Cox ring is the Gale dual of the ray matrix, the
fan can be rebuilt from (grading, irrelevant ideal), and movable/nef cones
are finite intersections of cones over generator degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fan import Fan, irrelevant_ideal, validate_fan
from .linalg import IntegerMatrix, as_matrix, integer_kernel, rational_rank, row_lattice_hnf, smith_normal_form
from .monomial import SquarefreeMonomialIdeal, intersect_primes, minimal_primes, vanishing_codim
from .polyhedral import RationalCone

__all__ = [
    "GradingData",
    "DivisorClass",
    "TorsionClassGroupError",
    "InconsistentBunchError",
    "grading_from_fan",
    "fan_from_bunch",
    "mov_cone",
    "nef_cone",
    "effective_cone",
    "is_ample",
    "lefschetz_codim_check",
    "class_degree",
    "anticanonical_class",
]

DivisorClass = tuple  # integer coordinates in Cl(Z) = Z^k


class TorsionClassGroupError(ValueError):
    def __init__(self, invariants):
        self.invariants = tuple(invariants)
        super().__init__("class group has torsion; Smith invariants %s" % (list(self.invariants),))


class InconsistentBunchError(ValueError):
    pass


def default_labels(r: int, start: int = 1) -> tuple[str, ...]:
    return tuple("x%d" % (i + start) for i in range(r))


@dataclass(frozen=True)
class GradingData:
    """Degree matrix (k x r, column i = deg x_i) plus the irrelevant ideal."""

    degree_matrix: IntegerMatrix
    irrelevant: SquarefreeMonomialIdeal
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        q = as_matrix(self.degree_matrix)
        object.__setattr__(self, "degree_matrix", q)
        if self.irrelevant.num_vars != q.cols:
            raise ValueError("irrelevant ideal has %d variables, grading has %d" % (self.irrelevant.num_vars, q.cols))
        if rational_rank(q) != q.nrows:
            raise ValueError("degree matrix must have full row rank")
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(q.cols))
        elif len(self.labels) != q.cols:
            raise ValueError("need one label per generator")

    @classmethod
    def from_primes(cls, degree_matrix, primes, labels=()) -> "GradingData":
        q = as_matrix(degree_matrix)
        return cls(q, intersect_primes(primes, q.cols), tuple(labels))

    @property
    def num_gens(self) -> int:
        return self.degree_matrix.cols

    @property
    def cl_rank(self) -> int:
        return self.degree_matrix.nrows

    @property
    def degrees(self) -> tuple[DivisorClass, ...]:
        return self.degree_matrix.T.rows

    def hnf(self) -> IntegerMatrix:
        return row_lattice_hnf(self.degree_matrix)

    def same_grading(self, other: "GradingData") -> bool:
        """Equal row lattices (the basis of Cl(Z) is a free choice)."""
        return self.hnf() == other.hnf()

    def primes(self) -> tuple[frozenset[int], ...]:
        return minimal_primes(self.irrelevant)

    def permuted(self, perm: Sequence[int]) -> "GradingData":
        """Generator ``i`` becomes generator ``perm[i]``."""
        r = self.num_gens
        if sorted(perm) != list(range(r)):
            raise ValueError("not a permutation of %d generators" % r)
        inv = [0] * r
        for i, p in enumerate(perm):
            inv[p] = i
        q = IntegerMatrix(tuple(tuple(row[inv[j]] for j in range(r)) for row in self.degree_matrix.rows), r)
        labels = tuple(self.labels[inv[j]] for j in range(r))
        return GradingData(q, self.irrelevant.permuted(perm), labels)


def grading_from_fan(fan: Fan) -> GradingData:
    """Gale dual of the ray matrix together with the irrelevant ideal.

    The degree matrix rows are the HNF basis of ``{v : v @ rays == 0}``.
    """
    rays = IntegerMatrix(fan.rays, fan.dim)
    snf = smith_normal_form(rays)
    if snf.torsion():
        raise TorsionClassGroupError(snf.invariants)
    q = integer_kernel(rays)
    if q.nrows == 0:
        raise ValueError("rays are linearly independent; the class group is trivial")
    return GradingData(q, irrelevant_ideal(fan))


def fan_from_bunch(g: GradingData, name: str = "") -> Fan:
    """Rebuild the fan from a grading and an irrelevant ideal.

    Rays are the rows of the HNF basis of the integer kernel of the degree
    matrix, read column-wise (ray i is the i-th column of that basis);
    maximal cones are the complements of the minimal generators of the
    irrelevant ideal.
    """
    q = g.degree_matrix
    basis = integer_kernel(q.T)  # rows b with q @ b == 0
    n = basis.nrows
    if n != g.num_gens - g.cl_rank:
        raise InconsistentBunchError("kernel of the degree matrix has the wrong rank")
    rays = [tuple(basis.rows[k][i] for k in range(n)) for i in range(g.num_gens)]
    everything = frozenset(range(g.num_gens))
    if g.irrelevant.is_unit or g.irrelevant.is_zero:
        raise InconsistentBunchError("irrelevant ideal must be proper and nonzero")
    cones = [everything - gen for gen in g.irrelevant.generators]
    fan = Fan(n, rays, cones, name=name)
    check = validate_fan(fan)
    if not check:
        raise InconsistentBunchError("reconstructed fan is invalid: " + "; ".join(check.violations))
    return fan


def _cone_of(degrees, idx, k) -> RationalCone:
    return RationalCone(k, generators=[degrees[j] for j in sorted(idx)])


def _intersect_all(cones: list[RationalCone], k: int) -> RationalCone:
    ineqs: list = []
    for c in cones:
        ineqs.extend(c.inequalities)
    return RationalCone(k, generators=RationalCone(k, inequalities=ineqs).generators)


def effective_cone(g: GradingData) -> RationalCone:
    return _cone_of(g.degrees, range(g.num_gens), g.cl_rank)


def mov_cone(g: GradingData) -> RationalCone:
    """Intersection over i of the cone spanned by all degrees except w_i."""
    k = g.cl_rank
    r = g.num_gens
    return _intersect_all([_cone_of(g.degrees, [j for j in range(r) if j != i], k) for i in range(r)], k)


def nef_cone(g: GradingData, fan: Fan | None = None) -> RationalCone:
    """Intersection over maximal cones of the cone over the degrees of the
    rays outside it.

    Without ``fan`` the maximal cones are read off the irrelevant ideal
    (complements of its minimal generators).
    """
    if fan is not None:
        if fan.num_rays != g.num_gens or irrelevant_ideal(fan) != g.irrelevant:
            raise InconsistentBunchError("fan and grading data describe different varieties")
        r = frozenset(range(fan.num_rays))
        supports = [r - c for c in fan.max_cones]
    else:
        supports = list(g.irrelevant.generators)
    return _intersect_all([_cone_of(g.degrees, s, g.cl_rank) for s in supports], g.cl_rank)


def is_ample(g: GradingData, w: Sequence[int], fan: Fan | None = None) -> bool:
    """``w`` lies in the interior of the nef cone."""
    if len(w) != g.cl_rank:
        raise ValueError("class has %d coordinates, class group rank is %d" % (len(w), g.cl_rank))
    return nef_cone(g, fan).interior_contains(w)


def lefschetz_codim_check(g: GradingData) -> tuple[int, bool]:
    """Codimension of V(J_irr) in Spec R(Z) and whether it is at least 3."""
    codim = vanishing_codim(g.irrelevant)
    return codim, codim >= 3


def class_degree(g: GradingData, exponents: Sequence[int]) -> DivisorClass:
    """Degree of the monomial ``prod x_i^e_i``."""
    if len(exponents) != g.num_gens:
        raise ValueError("exponent vector has length %d, expected %d" % (len(exponents), g.num_gens))
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be nonnegative")
    return tuple(sum(q * e for q, e in zip(row, exponents)) for row in g.degree_matrix.rows)


def anticanonical_class(g: GradingData) -> DivisorClass:
    """``-K``: the sum of all generator degrees."""
    return class_degree(g, [1] * g.num_gens)
