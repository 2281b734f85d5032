"""Exact integer and rational linear algebra.

Everything here runs on arbitrary-precision integers or `fractions.Fraction`;
no floating point is used anywhere. Matrices are tiny (fans rarely have more
than a couple dozen rays), so the classical algorithms are used in their
plain, obviously-correct form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    DimensionMismatchError,
    InconsistentError,
    NonIntegralError,
    NonPositiveError,
    UnderdeterminedError,
)

# A rational vector is just a tuple of exact fractions; Fraction keeps itself
# in canonical reduced form with a nonzero denominator.
RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix with row-major entries."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("entry rows do not match declared row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("entry row length does not match column count")
            for e in row:
                if not isinstance(e, int):
                    raise TypeError("entries must be exact integers")

    @classmethod
    def from_rows(cls, rows) -> "IntegerMatrix":
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols) -> "IntegerMatrix":
        cols = [tuple(int(e) for e in c) for c in cols]
        if not cols:
            return cls(0, 0, ())
        nrows = len(cols[0])
        return cls.from_rows(tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        rows = []
        for i in range(self.rows):
            a = self.entries[i]
            rows.append(
                tuple(
                    sum(a[k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                )
            )
        return IntegerMatrix(self.rows, other.cols, tuple(rows))

    def apply(self, vector) -> tuple[int, ...]:
        """Matrix-vector product over the integers."""
        vec = tuple(vector)
        if len(vec) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(vec)} against {self.rows}x{self.cols} matrix"
            )
        return tuple(sum(row[k] * vec[k] for k in range(self.cols)) for row in self.entries)

    def determinant(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DimensionMismatchError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.determinant()) == 1

    def rank(self) -> int:
        return rational_rank([[Fraction(e) for e in row] for row in self.entries])

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal S with U @ A @ V == S.

    The diagonal entries d1 | d2 | ... form the elementary-divisor chain;
    nonzero ones are positive and zeros trail.
    """

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.S.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def elementary_divisors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row_multiple(m, dst, src, factor):
    row_src = m[src]
    row_dst = m[dst]
    for k in range(len(row_dst)):
        row_dst[k] += factor * row_src[k]


def _add_col_multiple(m, dst, src, factor):
    for row in m:
        row[dst] += factor * row[src]


def _scale_row(m, i, factor):
    m[i] = [factor * e for e in m[i]]


def smith_normal_form(a: IntegerMatrix) -> SmithDecomposition:
    """Classical Smith normal form by row/column reduction.

    Pivot choice is deterministic: the nonzero entry of minimal absolute
    value in the working block, ties broken by lowest row then lowest
    column index. Row operations are mirrored on U, column operations on
    V, so U @ A @ V == S holds exactly throughout.
    """
    n, r = a.rows, a.cols
    s = [list(row) for row in a.entries]
    u = [list(row) for row in IntegerMatrix.identity(n).entries]
    v = [list(row) for row in IntegerMatrix.identity(r).entries]

    t = 0
    limit = min(n, r)
    while t < limit:
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, r):
                e = s[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    pivot = (i, j)
        if pivot is None:
            break

        pi, pj = pivot
        if pi != t:
            _swap_rows(s, pi, t)
            _swap_rows(u, pi, t)
        if pj != t:
            _swap_cols(s, pj, t)
            _swap_cols(v, pj, t)
        if s[t][t] < 0:
            _scale_row(s, t, -1)
            _scale_row(u, t, -1)

        p = s[t][t]
        clean = True
        for i in range(t + 1, n):
            if s[i][t] != 0:
                q = s[i][t] // p
                if q:
                    _add_row_multiple(s, i, t, -q)
                    _add_row_multiple(u, i, t, -q)
                if s[i][t] != 0:
                    clean = False
        for j in range(t + 1, r):
            if s[t][j] != 0:
                q = s[t][j] // p
                if q:
                    _add_col_multiple(s, j, t, -q)
                    _add_col_multiple(v, j, t, -q)
                if s[t][j] != 0:
                    clean = False
        if not clean:
            # Some remainder smaller than the pivot survives; reselect.
            continue

        offender = None
        for i in range(t + 1, n):
            for j in range(t + 1, r):
                if s[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row_multiple(s, t, offender, 1)
            _add_row_multiple(u, t, offender, 1)
            continue
        t += 1

    return SmithDecomposition(
        U=IntegerMatrix.from_rows(u),
        S=IntegerMatrix.from_rows(s),
        V=IntegerMatrix.from_rows(v),
    )


def spans_lattice(generators) -> bool:
    """True iff the integer span of the given vectors is the full lattice.

    Equivalent to the generator matrix having rank n with all elementary
    divisors equal to 1.
    """
    vectors = [tuple(int(e) for e in g) for g in generators]
    if not vectors:
        return False
    n = len(vectors[0])
    if any(len(vec) != n for vec in vectors):
        raise DimensionMismatchError("generators must share one ambient dimension")
    if n == 0:
        return True
    snf = smith_normal_form(IntegerMatrix.from_columns(vectors))
    divisors = snf.elementary_divisors
    return len(divisors) == n and all(d == 1 for d in divisors)


def kernel_basis(n_matrix: IntegerMatrix) -> list[tuple[int, ...]]:
    """Basis of the saturated integer kernel lattice {v : N v = 0}.

    With U N V = S, the columns of V beyond the rank of S are killed by N,
    and because V is unimodular they form a basis of the full kernel
    lattice (every integer kernel vector is an integer combination).
    """
    snf = smith_normal_form(n_matrix)
    rank = snf.rank
    return [snf.V.column(j) for j in range(rank, n_matrix.cols)]


def positive_kernel_vector(n_matrix: IntegerMatrix):
    """Some integer vector D with N D = 0 and every entry >= 1, or None.

    The feasible set {x : Nx = 0, x >= 1} is a pointed rational polyhedron
    (the kernel lattice is free, so there are no lines), hence nonempty iff
    it has a vertex. Vertices are enumerated as basic solutions in kernel
    coordinates; the witness is the vertex of minimal entry sum (ties
    broken lexicographically) with denominators cleared, which preserves
    both constraints.
    """
    r = n_matrix.cols
    if r == 0:
        return ()
    basis = kernel_basis(n_matrix)
    m = len(basis)
    if m == 0:
        return None

    one = Fraction(1)
    ineq_rows = [[Fraction(basis[j][k]) for j in range(m)] for k in range(r)]

    best = None
    for subset in itertools.combinations(range(r), m):
        kind, y = rational_solve([ineq_rows[i] for i in subset], [one] * m)
        if kind != "unique":
            continue
        x = [sum(Fraction(basis[j][k]) * y[j] for j in range(m)) for k in range(r)]
        if all(xk >= 1 for xk in x):
            key = (sum(x), tuple(x))
            if best is None or key < best[0]:
                best = (key, x)
    if best is None:
        return None
    x = best[1]
    scale = lcm(*(xk.denominator for xk in x))
    return tuple(int(xk * scale) for xk in x)


def complete_degrees(n_matrix: IntegerMatrix, partial: dict) -> tuple[int, ...]:
    """Unique positive integer kernel vector extending a partial assignment.

    Raises UNDERDETERMINED if the pinned coordinates leave more than one
    rational kernel extension, INCONSISTENT if they leave none, and
    NON_INTEGRAL / NON_POSITIVE when the unique extension fails those
    checks.
    """
    r = n_matrix.cols
    for idx, value in partial.items():
        if not 0 <= idx < r:
            raise ValueError(f"index {idx} out of range for {r} coordinates")
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"pinned value at index {idx} must be a positive integer")

    basis = kernel_basis(n_matrix)
    m = len(basis)
    if not partial:
        if m > 0:
            raise UnderdeterminedError(
                f"kernel rank {m} exceeds what 0 pinned coordinates determine"
            )
        kind, y = "unique", []
    else:
        rows = [[Fraction(basis[j][i]) for j in range(m)] for i in sorted(partial)]
        rhs = [Fraction(partial[i]) for i in sorted(partial)]
        kind, y = rational_solve(rows, rhs)
    if kind == "inconsistent":
        raise InconsistentError("pinned values admit no kernel extension")
    if kind == "underdetermined":
        raise UnderdeterminedError(
            f"kernel rank {m} exceeds what {len(partial)} pinned coordinates determine"
        )
    x = [sum(Fraction(basis[j][k]) * y[j] for j in range(m)) for k in range(r)]
    if any(xk.denominator != 1 for xk in x):
        raise NonIntegralError("unique kernel extension is not integral")
    if any(xk < 1 for xk in x):
        raise NonPositiveError("unique kernel extension has an entry below 1")
    return tuple(int(xk) for xk in x)


# -- exact rational elimination -------------------------------------------


def rational_solve(rows, rhs):
    """Solve A y = b over the rationals by Gaussian elimination.

    Returns ("unique", y), ("inconsistent", None) or ("underdetermined",
    None). `rows` is a list of coefficient rows; an empty system with k
    unknowns is underdetermined for k > 0 and uniquely solved by () for
    k == 0.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [[Fraction(e) for e in rows[i]] + [Fraction(rhs[i])] for i in range(nrows)]

    pivots = []
    row = 0
    for col in range(ncols):
        sel = None
        for i in range(row, nrows):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [e * inv for e in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1

    for i in range(row, nrows):
        if aug[i][ncols] != 0:
            return "inconsistent", None
    if len(pivots) < ncols:
        if ncols == 0:
            return "unique", []
        return "underdetermined", None
    y = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        y[col] = aug[i][ncols]
    return "unique", y


def rational_rank(rows) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    work = [[Fraction(e) for e in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, nrows):
            if work[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        pivot = work[rank][col]
        for i in range(rank + 1, nrows):
            if work[i][col] != 0:
                factor = work[i][col] / pivot
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def rational_nullspace(rows) -> list[list[Fraction]]:
    """Basis of the right nullspace of a rational matrix."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    work = [[Fraction(e) for e in row] for row in rows]

    pivots = []
    row = 0
    for col in range(ncols):
        sel = None
        for i in range(row, nrows):
            if work[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        work[row], work[sel] = work[sel], work[row]
        inv = 1 / work[row][col]
        work[row] = [e * inv for e in work[row]]
        for i in range(nrows):
            if i != row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[row])]
        pivots.append(col)
        row += 1

    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -work[i][free]
        basis.append(vec)
    return basis


def clear_denominators(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same ray)."""
    fractions = [Fraction(e) for e in vec]
    scale = lcm(*(f.denominator for f in fractions)) if fractions else 1
    ints = [int(f * scale) for f in fractions]
    g = gcd(*ints) if any(ints) else 1
    if g > 1:
        ints = [e // g for e in ints]
    return tuple(ints)
