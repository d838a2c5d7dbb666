"""Fans of toric varieties.

Rays are primitive integer vectors in Z^n, maximal cones are sets of ray
indices (0-based).  Most predicates here assume a valid fan; call
:func:`validate_fan` first on untrusted input.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import rational_rank, smith_normal_form, vector_gcd
from .monomial import SquarefreeMonomialIdeal
from .polyhedral import LatticePolytope, RationalCone, is_reflexive, normalized_volume, polar_dual

__all__ = [
    "Fan",
    "FanValidation",
    "NotFanoError",
    "validate_fan",
    "is_smooth",
    "is_simplicial",
    "is_complete",
    "anticanonical_polytope",
    "is_fano",
    "anticanonical_degree",
    "dual_variety",
    "irrelevant_ideal",
]


class NotFanoError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Fan:
    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    def __init__(self, dim: int, rays: Iterable[Sequence[int]], max_cones: Iterable[Iterable[int]], name: str = ""):
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in rays))
        object.__setattr__(self, "max_cones", tuple(frozenset(int(i) for i in c) for c in max_cones))
        object.__setattr__(self, "name", name)

    @property
    def num_rays(self) -> int:
        return len(self.rays)

    def cone(self, idx: Iterable[int]) -> RationalCone:
        return RationalCone(self.dim, generators=[self.rays[i] for i in sorted(idx)])

    @cached_property
    def cones(self) -> tuple[RationalCone, ...]:
        return tuple(self.cone(c) for c in self.max_cones)

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.rays == other.rays
            and sorted(map(sorted, self.max_cones)) == sorted(map(sorted, other.max_cones))
        )

    def __hash__(self):
        return hash((self.dim, self.rays, frozenset(self.max_cones)))

    def __repr__(self):
        label = " %s" % self.name if self.name else ""
        return "<Fan%s: dim %d, %d rays, %d maximal cones>" % (label, self.dim, self.num_rays, len(self.max_cones))


@dataclass
class FanValidation:
    violations: list[str]

    def __bool__(self):
        return not self.violations

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_face(fan: Fan, cone_idx: frozenset[int], sub: frozenset[int]) -> bool:
    """Is cone(sub) a face of cone(cone_idx)?  ``sub`` must be a subset."""
    cone = fan.cone(cone_idx)
    sub_rays = [fan.rays[i] for i in sub]
    through = [u for u in cone.facets if all(sum(a * b for a, b in zip(u, r)) == 0 for r in sub_rays)]
    # smallest face containing sub: rays of the cone on every facet through sub
    smallest = {
        i for i in cone_idx
        if all(sum(a * b for a, b in zip(u, fan.rays[i])) == 0 for u in through)
    }
    return smallest <= sub


def validate_fan(fan: Fan) -> FanValidation:
    """Check the fan axioms; never raises on bad data.

    Checks: ray length and primitivity, index ranges, every ray used,
    strong convexity of each maximal cone, each listed ray extremal in its
    cone, no maximal cone inside another, and pairwise intersections being
    the common face spanned by the shared rays.
    """
    bad: list[str] = []
    for i, r in enumerate(fan.rays):
        if len(r) != fan.dim:
            bad.append("ray %d has length %d, expected %d" % (i + 1, len(r), fan.dim))
        elif vector_gcd(r) != 1:
            bad.append("ray %d not primitive" % (i + 1))
    if len(set(fan.rays)) != len(fan.rays):
        bad.append("duplicate rays")
    if bad:
        return FanValidation(bad)
    for k, c in enumerate(fan.max_cones):
        out_of_range = [i for i in c if not 0 <= i < fan.num_rays]
        if out_of_range:
            bad.append("cone %d refers to missing ray %d" % (k + 1, out_of_range[0] + 1))
    if bad:
        return FanValidation(bad)
    used = set().union(*fan.max_cones) if fan.max_cones else set()
    unused = sorted(set(range(fan.num_rays)) - used)
    if unused:
        bad.append("ray %d not used by any cone" % (unused[0] + 1))
    for k, c in enumerate(fan.max_cones):
        cone = fan.cone(c)
        if not cone.is_pointed():
            bad.append("cone %d is not strongly convex" % (k + 1))
            continue
        extreme = set(cone.generators)
        for i in sorted(c):
            if fan.rays[i] not in extreme:
                bad.append("ray %d is not extremal in cone %d" % (i + 1, k + 1))
    if bad:
        return FanValidation(bad)
    for (a, ca), (b, cb) in combinations(enumerate(fan.max_cones), 2):
        if ca <= cb or cb <= ca:
            bad.append("cones %d and %d are nested" % (a + 1, b + 1))
            return FanValidation(bad)
        common = ca & cb
        inter = RationalCone(fan.dim, inequalities=fan.cones[a].inequalities + fan.cones[b].inequalities)
        shared = fan.cone(common) if common else RationalCone(fan.dim, generators=[])
        if not shared.contains_cone(inter):
            bad.append("cones %d and %d meet outside their common rays" % (a + 1, b + 1))
            return FanValidation(bad)
        if not (_is_face(fan, ca, common) and _is_face(fan, cb, common)):
            bad.append("cones %d and %d do not meet in a common face" % (a + 1, b + 1))
            return FanValidation(bad)
    return FanValidation(bad)


def is_simplicial(fan: Fan) -> bool:
    return all(rational_rank([fan.rays[i] for i in c]) == len(c) for c in fan.max_cones if c)


def is_smooth(fan: Fan) -> bool:
    """Every maximal cone is generated by part of a lattice basis."""
    for c in fan.max_cones:
        rows = [fan.rays[i] for i in sorted(c)]
        if not rows:
            continue
        if rational_rank(rows) != len(rows):
            return False
        if any(d != 1 for d in smith_normal_form(rows).invariants):
            return False
    return True


def is_complete(fan: Fan) -> bool:
    """Facet-pairing test for pure full-dimensional simplicial fans.

    Raises ``ValueError`` when the fan is not of that kind.
    """
    n = fan.dim
    if not fan.max_cones:
        return n == 0
    if any(len(c) != n for c in fan.max_cones) or not is_simplicial(fan):
        raise ValueError("completeness test needs a pure full-dimensional simplicial fan")
    walls = Counter()
    for c in fan.max_cones:
        for i in c:
            walls[c - {i}] += 1
    if any(v != 2 for v in walls.values()):
        return False
    # adjacency of maximal cones through shared walls
    index = {c: k for k, c in enumerate(fan.max_cones)}
    by_wall: dict[frozenset, list[int]] = {}
    for c in fan.max_cones:
        for i in c:
            by_wall.setdefault(c - {i}, []).append(index[c])
    adj: dict[int, set[int]] = {k: set() for k in range(len(fan.max_cones))}
    for a, b in by_wall.values():
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(fan.max_cones)


def anticanonical_polytope(fan: Fan) -> LatticePolytope:
    """``{m : <m, v> >= -1 for every ray v}`` with both representations.

    Raises ``UnboundedPolytopeError`` when the rays do not positively span
    the space (the fan cannot be complete).
    """
    p = LatticePolytope(fan.dim, facets=[(r, 1) for r in fan.rays])
    return LatticePolytope(fan.dim, vertices=p.vertices, facets=p.facets)


def is_fano(fan: Fan) -> bool:
    """The anticanonical polytope is reflexive and its polar is the
    polytope of the rays, with the maximal cones being the cones over the
    facets of that polytope."""
    try:
        p = anticanonical_polytope(fan)
    except ValueError:
        return False
    if p.dim != fan.dim or not is_reflexive(p):
        return False
    q = polar_dual(p)
    verts = set(q.int_vertices())
    if verts != set(fan.rays):
        return False
    pos = {r: i for i, r in enumerate(fan.rays)}
    facet_cones = {frozenset(pos[tuple(int(x) for x in q.vertices[j])] for j in inc) for inc in q.incidences}
    return facet_cones == set(fan.max_cones)


def anticanonical_degree(fan: Fan) -> int:
    """``(-K)^n``, the normalized volume of the anticanonical polytope."""
    if not is_fano(fan):
        raise NotFanoError("%s is not Fano" % (fan.name or "fan"))
    return normalized_volume(anticanonical_polytope(fan))


def dual_variety(fan: Fan) -> Fan:
    """Face fan of the anticanonical polytope.

    For a reflexive anticanonical polytope this is the normal fan of its
    polar, i.e. the toric variety of the dual polytope.
    """
    p = anticanonical_polytope(fan)
    if not is_reflexive(p):
        raise NotFanoError("anticanonical polytope of %s is not reflexive" % (fan.name or "fan"))
    rays = [tuple(int(x) for x in v) for v in p.vertices]
    for r in rays:
        if vector_gcd(r) != 1:
            raise AssertionError("vertex %s of a reflexive polytope is not primitive" % (r,))
    name = "dual(%s)" % fan.name if fan.name else ""
    return Fan(fan.dim, rays, p.incidences, name=name)


def irrelevant_ideal(fan: Fan) -> SquarefreeMonomialIdeal:
    """One generator per maximal cone: the product of the variables of the
    rays outside it."""
    everything = frozenset(range(fan.num_rays))
    return SquarefreeMonomialIdeal(fan.num_rays, [everything - c for c in fan.max_cones])


def ray_matrix(fan: Fan):
    from .linalg import IntegerMatrix
    return IntegerMatrix(fan.rays, fan.dim)
