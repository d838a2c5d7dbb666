"""Exact integer and rational linear algebra.

Everything here works on Python ints (and ``Fraction`` where a field is
needed); there is no floating point anywhere.  Matrices are carried by the
small immutable :class:`IntegerMatrix` wrapper, but every function also
accepts a plain sequence of integer rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntegerMatrix",
    "SmithDecomposition",
    "as_matrix",
    "hermite_normal_form",
    "smith_normal_form",
    "integer_kernel",
    "rational_rank",
    "sparse_rational_rank",
    "rational_nullspace",
    "solve_rational",
    "determinant",
    "primitive",
    "vector_gcd",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Rectangular matrix of arbitrary-precision integers.

    ``cols`` is stored explicitly so that matrices with zero rows still know
    their width.
    """

    rows: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        if self.cols < 0:
            raise ValueError("negative column count")
        for row in self.rows:
            if len(row) != self.cols:
                raise ValueError("ragged matrix: expected %d columns, got %d" % (self.cols, len(row)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntegerMatrix":
        return cls(tuple((0,) * n for _ in range(m)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.cols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.cols)),
            self.nrows,
        )

    @property
    def T(self) -> "IntegerMatrix":
        return self.transpose()

    def __matmul__(self, other) -> "IntegerMatrix":
        other = as_matrix(other)
        if self.cols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        cols_b = list(zip(*other.rows)) if other.rows else [()] * other.cols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols_b)
            for row in self.rows
        )
        return IntegerMatrix(out, other.cols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __str__(self):
        if not self.rows:
            return "[]"
        width = max(len(str(x)) for r in self.rows for x in r) if self.cols else 0
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)


def as_matrix(m, cols: int | None = None) -> IntegerMatrix:
    if isinstance(m, IntegerMatrix):
        return m
    return IntegerMatrix.from_rows(m, cols)


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ m @ v == diag`` with ``invariants`` on the diagonal."""

    invariants: tuple[int, ...]
    u: IntegerMatrix
    v: IntegerMatrix
    diag: IntegerMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d != 0)

    def torsion(self) -> tuple[int, ...]:
        """Invariant factors greater than one (the torsion of the cokernel)."""
        return tuple(d for d in self.invariants if d > 1)

    def free_rank(self) -> int:
        """Rank of the free part of the cokernel ``Z^rows / image``."""
        return self.u.nrows - self.rank


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the ray through the rational vector ``v``."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = vector_gcd(ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _row_combine(rows, i, j, a, b, c, d):
    """Replace (row_i, row_j) by (a*row_i + b*row_j, c*row_i + d*row_j)."""
    ri, rj = rows[i], rows[j]
    rows[i] = [a * x + b * y for x, y in zip(ri, rj)]
    rows[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _elim_coeffs(a: int, b: int) -> tuple[int, int, int, int]:
    """Determinant-one 2x2 operation sending (a, b) to (gcd, 0).

    Uses plain elimination whenever ``a`` already divides ``b`` so that
    repeated clearing passes cannot cycle.
    """
    if a != 0 and b % a == 0:
        return 1, 0, -(b // a), 1
    g, s, t = _xgcd(a, b)
    return s, t, -b // g, a // g


def hermite_normal_form(m) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  Pivots of
    ``h`` are positive, entries above a pivot are reduced into
    ``[0, pivot)``, and zero rows sit at the bottom.
    """
    m = as_matrix(m)
    nr, nc = m.shape
    # augmented rows: [m | I]
    rows = [list(m.rows[i]) + [int(i == j) for j in range(nr)] for i in range(nr)]
    piv_row = 0
    pivots = []
    for c in range(nc):
        if piv_row >= nr:
            break
        for i in range(piv_row + 1, nr):
            b = rows[i][c]
            if b == 0:
                continue
            _row_combine(rows, piv_row, i, *_elim_coeffs(rows[piv_row][c], b))
        p = rows[piv_row][c]
        if p == 0:
            continue
        if p < 0:
            rows[piv_row] = [-x for x in rows[piv_row]]
            p = -p
        for i in range(piv_row):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    h = IntegerMatrix(tuple(tuple(r[:nc]) for r in rows), nc)
    u = IntegerMatrix(tuple(tuple(r[nc:]) for r in rows), nr)
    return h, u


def smith_normal_form(m) -> SmithDecomposition:
    """Smith normal form with both unimodular transforms.

    The invariants satisfy ``d_1 | d_2 | ...`` and the product of the first
    ``k`` of them is the gcd of all ``k x k`` minors.
    """
    m = as_matrix(m)
    nr, nc = m.shape
    a = [list(r) for r in m.rows]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(i, j, p, q, r, s):
        _row_combine(a, i, j, p, q, r, s)
        _row_combine(u, i, j, p, q, r, s)

    def col_op(i, j, p, q, r, s):
        # new col_i = p*col_i + q*col_j ; new col_j = r*col_i + s*col_j
        for mat in (a, v):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + q * y, r * x + s * y

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        # choose a nonzero pivot of least absolute value in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nr):
                b = a[i][t]
                if b:
                    row_op(t, i, *_elim_coeffs(a[t][t], b))
                    done = False
            for j in range(t + 1, nc):
                b = a[t][j]
                if b:
                    col_op(t, j, *_elim_coeffs(a[t][t], b))
                    done = False
            if not done:
                continue
            # divisibility: fold any entry not divisible by the pivot into row t
            p = a[t][t]
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            row_op(t, bad[0], 1, 1, 0, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    invariants = tuple(a[i][i] for i in range(min(nr, nc)))
    return SmithDecomposition(
        invariants=invariants,
        u=IntegerMatrix(tuple(map(tuple, u)), nr),
        v=IntegerMatrix(tuple(map(tuple, v)), nc),
        diag=IntegerMatrix(tuple(map(tuple, a)), nc),
    )


def integer_kernel(m) -> IntegerMatrix:
    """Saturated left kernel ``{v : v @ m == 0}`` as HNF rows."""
    m = as_matrix(m)
    h, u = hermite_normal_form(m)
    basis = [u.rows[i] for i in range(m.nrows) if not any(h.rows[i])]
    if not basis:
        return IntegerMatrix((), m.nrows)
    return _drop_zero_rows(hermite_normal_form(IntegerMatrix(tuple(basis), m.nrows))[0])


def _drop_zero_rows(h: IntegerMatrix) -> IntegerMatrix:
    return IntegerMatrix(tuple(r for r in h.rows if any(r)), h.cols)


def row_lattice_hnf(m) -> IntegerMatrix:
    """Canonical basis (nonzero HNF rows) of the row lattice of ``m``."""
    return _drop_zero_rows(hermite_normal_form(m)[0])


def rational_rank(m) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in (m.rows if isinstance(m, IntegerMatrix) else m)]
    return _bareiss_rank(rows)


def _bareiss_rank(rows: list[list]) -> int:
    if not rows:
        return 0
    nc = len(rows[0])
    rank = 0
    prev = 1
    nr = len(rows)
    for c in range(nc):
        if rank == nr:
            break
        piv = next((i for i in range(rank, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][c]
        prow = rows[rank]
        for i in range(rank + 1, nr):
            ri = rows[i]
            f = ri[c]
            if f == 0:
                rows[i] = [(p * x) // prev for x in ri]
            else:
                rows[i] = [(p * x - f * y) // prev for x, y in zip(ri, prow)]
        prev = p
        rank += 1
    return rank


def rational_nullspace(m) -> list[tuple[Fraction, ...]]:
    """Basis of the right nullspace ``{x : m @ x == 0}`` over Q."""
    m = as_matrix(m)
    rref, pivots = _rref([[Fraction(x) for x in r] for r in m.rows], m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -rref[r][f]
        basis.append(tuple(x))
    return basis


def _rref(rows: list[list[Fraction]], nc: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def solve_rational(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of the square system ``a @ x == b``, or None if singular."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    rref, pivots = _rref(aug, n)
    if len(pivots) < n:
        return None
    return tuple(rref[i][n] for i in range(n))


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    rows = [list(r) for r in a]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if piv is None:
                return 0
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
        prev = rows[k][k]
    return sign * rows[n - 1][n - 1]


def sparse_rational_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of a matrix given as sparse rows ``{col: value}``.

    Gaussian elimination on dictionaries with ``Fraction`` entries; the
    pivot of each step is taken from the shortest remaining row to limit
    fill-in.
    """
    pending = [{c: Fraction(v) for c, v in r.items() if v} for r in rows]
    pending = [r for r in pending if r]
    pivots: dict[int, dict] = {}
    rank = 0
    for row in sorted(pending, key=len):
        row = dict(row)
        # reduce against existing pivots until the leading column is free
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                break
            f = row[col]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if row:
            col = min(row)
            lead = row[col]
            pivots[col] = {c: v / lead for c, v in row.items()}
            rank += 1
    return rank
