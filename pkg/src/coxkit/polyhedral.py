"""Rational polyhedral cones and lattice polytopes.

Representation conversion is done by exhaustive enumeration of candidate
supporting hyperplanes, which is exact and perfectly adequate for the
small dimensions (at most five or so) this package works in.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial, gcd
from typing import Iterable, Sequence

from .linalg import determinant, integer_kernel, primitive, rational_rank

__all__ = [
    "RationalCone",
    "LatticePolytope",
    "UnboundedPolytopeError",
    "OriginNotInteriorError",
    "dual_cone",
    "intersect_cones",
    "vertices_from_facets",
    "facets_from_vertices",
    "polar_dual",
    "is_reflexive",
    "normalized_volume",
    "pulling_triangulation",
]

Vector = tuple


class UnboundedPolytopeError(ValueError):
    pass


class OriginNotInteriorError(ValueError):
    pass


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _canon(vectors: Iterable[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Primitive, deduplicated, lexicographically sorted nonzero vectors."""
    out = set()
    for v in vectors:
        p = primitive(v)
        if any(p):
            out.add(p)
    return tuple(sorted(out))


def _hyperplane_normals(gens: Sequence[tuple[int, ...]], dim: int):
    """Facet normals and orthogonal-complement equations of cone(gens).

    Returns ``(facets, equations)`` where each facet normal ``u`` satisfies
    ``u . g >= 0`` on all generators and vanishes on a codimension-one
    subset of the span, and ``equations`` is an integer basis of the
    orthogonal complement of the span.
    """
    gens = [tuple(g) for g in gens if any(g)]
    if not gens:
        return [], [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    eqs = list(integer_kernel([[g[i] for g in gens] for i in range(dim)]).rows)
    span = dim - len(eqs)
    facets = set()
    seen_subspaces = set()
    for subset in combinations(range(len(gens)), span - 1):
        rows = [gens[i] for i in subset] + eqs
        if rational_rank(rows) != dim - 1:
            continue
        ker = integer_kernel([[r[i] for r in rows] for i in range(dim)])
        u = ker.rows[0]
        if u in seen_subspaces:
            continue
        seen_subspaces.add(u)
        seen_subspaces.add(tuple(-x for x in u))
        vals = [_dot(u, g) for g in gens]
        if all(v >= 0 for v in vals):
            facets.add(u)
        elif all(v <= 0 for v in vals):
            facets.add(tuple(-x for x in u))
    return sorted(facets), eqs


class RationalCone:
    """Polyhedral cone in Q^d.

    Give generators (V-rep), inequalities ``u`` meaning ``<u, x> >= 0``
    (H-rep), or both.  The missing representation is computed on first
    access.  Values are treated as immutable.
    """

    def __init__(self, ambient_dim: int, generators=None, inequalities=None):
        if generators is None and inequalities is None:
            raise ValueError("a cone needs generators or inequalities")
        self.ambient_dim = ambient_dim
        self._gens = None if generators is None else tuple(tuple(int(x) for x in g) for g in generators)
        self._ineqs = None if inequalities is None else tuple(tuple(int(x) for x in u) for u in inequalities)
        for v in (self._gens or ()) + (self._ineqs or ()):
            if len(v) != ambient_dim:
                raise ValueError("vector %s has wrong length for dimension %d" % (v, ambient_dim))

    def __repr__(self):
        return "RationalCone(%d, generators=%s)" % (self.ambient_dim, list(self.generators))

    @cached_property
    def _facet_data(self):
        return _hyperplane_normals(self.generators, self.ambient_dim)

    @cached_property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Minimal generating set: extreme rays plus +/- a lineality basis."""
        if self._gens is not None and self._ineqs is None:
            return self._minimal_gens(self._gens)
        facets, eqs = _hyperplane_normals(self._ineqs, self.ambient_dim)
        return _canon(list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs])

    def _minimal_gens(self, gens):
        gens = _canon(gens)
        facets, eqs = _hyperplane_normals(gens, self.ambient_dim)
        if any(all(_dot(u, g) == 0 for u in facets) for g in gens):
            # a generator inside the lineality space: go round through the H-rep
            ineqs = list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs]
            f2, e2 = _hyperplane_normals(ineqs, self.ambient_dim)
            return _canon(list(f2) + list(e2) + [tuple(-x for x in e) for e in e2])
        # pointed: g is extreme iff the hyperplanes through it cut out a line
        keep = []
        for g in gens:
            tight = [u for u in facets if _dot(u, g) == 0] + list(eqs)
            if rational_rank(tight) == self.ambient_dim - 1:
                keep.append(g)
        return tuple(sorted(keep))

    @cached_property
    def inequalities(self) -> tuple[tuple[int, ...], ...]:
        """Irredundant H-rep: facet normals plus +/- equations."""
        facets, eqs = self._facet_data
        return _canon(list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs])

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._facet_data[0])

    @property
    def equations(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self._facet_data[1])

    @property
    def dim(self) -> int:
        return rational_rank(self.generators) if self.generators else 0

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def is_pointed(self) -> bool:
        """True iff the cone contains no line."""
        dual_gens = self.inequalities
        return (rational_rank(dual_gens) if dual_gens else 0) == self.ambient_dim

    def contains(self, x: Sequence) -> bool:
        return all(_dot(u, x) >= 0 for u in self.inequalities)

    def contains_cone(self, other: "RationalCone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def interior_contains(self, x: Sequence) -> bool:
        """Topological interior in Q^d (empty unless full-dimensional)."""
        if not self.is_full_dimensional():
            return False
        return all(_dot(u, x) > 0 for u in self.facets)

    def relative_interior_contains(self, x: Sequence) -> bool:
        return all(_dot(e, x) == 0 for e in self.equations) and all(_dot(u, x) > 0 for u in self.facets)

    def __eq__(self, other):
        if not isinstance(other, RationalCone):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.contains_cone(other) and other.contains_cone(self)

    def __hash__(self):
        return hash((self.ambient_dim, self.inequalities))


def dual_cone(c: RationalCone) -> RationalCone:
    """``{u : <u, x> >= 0 for all x in c}``."""
    return RationalCone(c.ambient_dim, generators=c.inequalities, inequalities=c.generators)


def intersect_cones(a: RationalCone, b: RationalCone) -> RationalCone:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("cannot intersect cones of dimensions %d and %d" % (a.ambient_dim, b.ambient_dim))
    both = RationalCone(a.ambient_dim, inequalities=a.inequalities + b.inequalities)
    return RationalCone(a.ambient_dim, generators=both.generators)


# ---------------------------------------------------------------------------
# polytopes


def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _as_ints_if_possible(v):
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in v)


def _scale_to_int(points: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    den = 1
    for p in points:
        for x in p:
            den = den * x.denominator // gcd(den, x.denominator)
    return [[int(x * den) for x in p] for p in points]


def _affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    if len(points) <= 1:
        return 0 if points else -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rational_rank(_scale_to_int(diffs))


def _solve_int(a: Sequence[Sequence[int]], b: Sequence[int]):
    """Cramer solution of a square integer system over Q, or None if singular."""
    det = determinant(a)
    if det == 0:
        return None
    n = len(a)
    out = []
    for j in range(n):
        aj = [list(row) for row in a]
        for i in range(n):
            aj[i][j] = b[i]
        out.append(Fraction(determinant(aj), det))
    return tuple(out)


class LatticePolytope:
    """Bounded polytope given by vertices and/or facet inequalities.

    A facet is a pair ``(normal, offset)`` meaning ``<normal, x> >= -offset``;
    normals are primitive integer vectors.  Vertices may be rational in
    general (polar duals of non-reflexive polytopes), hence the name is
    slightly generous.
    """

    def __init__(self, ambient_dim: int, vertices=None, facets=None):
        if vertices is None and facets is None:
            raise ValueError("a polytope needs vertices or facets")
        self.ambient_dim = ambient_dim
        self._vertices = None if vertices is None else tuple(sorted({_frac_vec(v) for v in vertices}))
        self._facets = None
        if facets is not None:
            norm = set()
            for n, off in facets:
                n = tuple(int(x) for x in n)
                g = 0
                for x in n:
                    g = gcd(g, x)
                if g == 0:
                    raise ValueError("zero facet normal")
                norm.add((tuple(x // g for x in n), Fraction(off) / g))
            self._facets = tuple(sorted(norm))

    def __repr__(self):
        return "LatticePolytope(%d, vertices=%s)" % (self.ambient_dim, [list(v) for v in self.int_vertices()])

    @cached_property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._vertices is None:
            return _vertices_from_h(self._facets, self.ambient_dim)
        if self._facets is not None or _affine_rank(self._vertices) != self.ambient_dim:
            return self._vertices
        # drop points that are not vertices: a vertex has tight normals of full rank
        facets = _facets_from_v(self._vertices, self.ambient_dim)
        return tuple(
            v for v in self._vertices
            if rational_rank([n for n, off in facets if _dot(n, v) == -off]) == self.ambient_dim
        )

    @cached_property
    def facets(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        """Irredundant facet inequalities."""
        if self._facets is not None:
            return _irredundant(self._facets, self.vertices, self.ambient_dim)
        return _facets_from_v(self.vertices, self.ambient_dim)

    @cached_property
    def incidences(self) -> tuple[frozenset[int], ...]:
        """For each facet, the indices of vertices lying on it."""
        return tuple(
            frozenset(i for i, v in enumerate(self.vertices) if _dot(n, v) == -off)
            for n, off in self.facets
        )

    def int_vertices(self):
        return [_as_ints_if_possible(v) for v in self.vertices]

    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    @property
    def dim(self) -> int:
        return _affine_rank(self.vertices)

    def contains(self, x) -> bool:
        return all(_dot(n, x) >= -off for n, off in self.facets)

    def __eq__(self, other):
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))


def _recession_is_trivial(normals, dim) -> bool:
    if not normals:
        return dim == 0
    rec = RationalCone(dim, inequalities=normals)
    return not rec.generators


def _vertices_from_h(facets, dim):
    normals = [n for n, _ in facets]
    if not _recession_is_trivial(normals, dim):
        raise UnboundedPolytopeError("facet system does not define a bounded polytope")
    # clear denominators of offsets per row so the subsystem solve is integral
    rows = []
    for n, off in facets:
        d = off.denominator
        rows.append(([x * d for x in n], -off.numerator))
    found = set()
    for subset in combinations(range(len(rows)), dim):
        a = [rows[i][0] for i in subset]
        b = [rows[i][1] for i in subset]
        x = _solve_int(a, b)
        if x is None or x in found:
            continue
        if all(_dot(n, x) >= -off for n, off in facets):
            found.add(x)
    if not found:
        raise ValueError("facet system is infeasible")
    return tuple(sorted(found))


def _irredundant(facets, vertices, dim):
    keep = []
    for n, off in facets:
        tight = [v for v in vertices if _dot(n, v) == -off]
        if _affine_rank(tight) == dim - 1:
            keep.append((n, off))
    return tuple(sorted(set(keep)))


def _facets_from_v(vertices, dim):
    if _affine_rank(vertices) != dim:
        raise ValueError("polytope is not full-dimensional")
    ints = _scale_to_int(vertices)
    found = set()
    seen = set()
    for subset in combinations(range(len(vertices)), dim):
        base = ints[subset[0]]
        diffs = [[a - b for a, b in zip(ints[i], base)] for i in subset[1:]]
        if rational_rank(diffs) != dim - 1:
            continue
        ker = integer_kernel([[r[i] for r in diffs] for i in range(dim)]) if diffs else None
        n = ker.rows[0] if ker is not None else (1,)
        lo = _dot(n, vertices[subset[0]])
        if (n, lo) in seen:
            continue
        seen.add((n, lo))
        vals = [_dot(n, v) for v in vertices]
        if all(v >= lo for v in vals):
            found.add((n, -lo))
        elif all(v <= lo for v in vals):
            found.add((tuple(-x for x in n), lo))
    return tuple(sorted(found))


def vertices_from_facets(p: LatticePolytope) -> LatticePolytope:
    """Return ``p`` carrying both representations, computed from its H-rep."""
    if p._facets is None:
        raise ValueError("polytope has no facet description")
    q = LatticePolytope(p.ambient_dim, facets=p._facets)
    verts = q.vertices
    return LatticePolytope(p.ambient_dim, vertices=verts, facets=q.facets)


def facets_from_vertices(p: LatticePolytope) -> LatticePolytope:
    q = LatticePolytope(p.ambient_dim, vertices=p.vertices)
    return LatticePolytope(p.ambient_dim, vertices=q.vertices, facets=q.facets)


def polar_dual(p: LatticePolytope) -> LatticePolytope:
    """``{y : <y, x> >= -1 for all x in p}``, with both representations."""
    if p.dim != p.ambient_dim or any(off <= 0 for _, off in p.facets):
        raise OriginNotInteriorError("origin is not in the interior of the polytope")
    verts = [tuple(Fraction(x) / off for x in n) for n, off in p.facets]
    facets = []
    for v in p.vertices:
        prim = primitive(v)
        # v = lam * prim with lam > 0
        k = next(i for i, x in enumerate(prim) if x)
        lam = Fraction(v[k]) / prim[k]
        facets.append((prim, 1 / lam))
    return LatticePolytope(p.ambient_dim, vertices=verts, facets=facets)


def is_reflexive(p: LatticePolytope) -> bool:
    """Lattice polytope with interior origin whose polar is a lattice polytope."""
    return p.is_lattice() and polar_dual(p).is_lattice()


def _faces_below(p: LatticePolytope):
    verts = p.vertices
    inc = p.incidences

    @lru_cache(maxsize=None)
    def subfaces(face: frozenset, k: int) -> tuple[frozenset, ...]:
        out = set()
        for f in inc:
            g = face & f
            if g != face and len(g) >= k and _affine_rank([verts[i] for i in sorted(g)]) == k - 1:
                out.add(g)
        return tuple(sorted(out, key=sorted))

    return subfaces


def pulling_triangulation(p: LatticePolytope, order: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    """Full-dimensional simplices (vertex index tuples) of a pulling triangulation.

    Each face is coned from its first vertex in ``order`` (default: the
    stored vertex order) over the subfaces not containing that vertex.
    """
    n = len(p.vertices)
    rank = {v: i for i, v in enumerate(order if order is not None else range(n))}
    subfaces = _faces_below(p)
    dim = p.ambient_dim

    @lru_cache(maxsize=None)
    def tri(face: frozenset, k: int) -> tuple[tuple[int, ...], ...]:
        if k == 0:
            return ((next(iter(face)),),)
        apex = min(face, key=rank.__getitem__)
        out = []
        for g in subfaces(face, k):
            if apex in g:
                continue
            for s in tri(g, k - 1):
                out.append((apex,) + s)
        return tuple(out)

    return list(tri(frozenset(range(n)), dim))


def normalized_volume(p: LatticePolytope, order: Sequence[int] | None = None) -> int:
    """``dim! * volume``, summed over a pulling triangulation."""
    if p.dim != p.ambient_dim:
        raise ValueError("normalized volume needs a full-dimensional polytope")
    verts = p.vertices
    total = Fraction(0)
    for simplex in pulling_triangulation(p, order):
        v0 = verts[simplex[0]]
        rows = [[a - b for a, b in zip(verts[i], v0)] for i in simplex[1:]]
        den = 1
        for r in rows:
            for x in r:
                den = den * x.denominator // gcd(den, x.denominator)
        ints = [[int(x * den) for x in r] for r in rows]
        total += Fraction(abs(determinant(ints)), den ** len(rows))
    if total.denominator != 1:
        # rational polytopes can have fractional normalized volume
        return total  # type: ignore[return-value]
    return int(total)


def euclidean_volume(p: LatticePolytope) -> Fraction:
    return Fraction(normalized_volume(p)) / factorial(p.ambient_dim)
