"""Strongly convex rational polyhedral cones, restricted to simplicial ones.

Smooth cones are simplicial, so simpliciality is enforced at construction
(INDEPENDENCE_VIOLATION otherwise); strong convexity is then automatic and
needs no separate check. All predicates are decided exactly over the
rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError, IndependenceViolationError, ZeroVectorError
from .lattice import (
    IntegerMatrix,
    clear_denominators,
    rational_nullspace,
    rational_rank,
    rational_solve,
    smith_normal_form,
)

LatticeVector = tuple[int, ...]


def primitivize(vector) -> LatticeVector:
    """Divide an integer vector by the gcd of its entries."""
    vec = tuple(int(e) for e in vector)
    if not any(vec):
        raise ZeroVectorError("zero vector has no primitive generator")
    g = gcd(*vec)
    return tuple(e // g for e in vec)


@dataclass(frozen=True)
class SimplicialCone:
    """Cone spanned by rationally independent primitive lattice vectors.

    Generators are primitivized and sorted at construction so that equal
    cones compare equal. An empty generator list is the zero cone.
    """

    dim: int
    generators: tuple[LatticeVector, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.dim:
                raise DimensionMismatchError("generator dimension mismatch")
        if self.generators:
            if rational_rank(list(self.generators)) != len(self.generators):
                raise IndependenceViolationError(
                    "cone generators are linearly dependent"
                )

    @classmethod
    def from_generators(cls, dim: int, generators) -> "SimplicialCone":
        prim = sorted(primitivize(g) for g in generators)
        return cls(dim, tuple(prim))

    @classmethod
    def zero(cls, dim: int) -> "SimplicialCone":
        return cls(dim, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def generator_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_columns(list(self.generators))


def is_smooth_cone(cone: SimplicialCone) -> bool:
    """True iff the generators extend to a Z-basis of the ambient lattice.

    Equivalently, all elementary divisors of the generator matrix are 1;
    the zero cone is smooth.
    """
    if cone.is_zero:
        return True
    divisors = smith_normal_form(cone.generator_matrix()).elementary_divisors
    return len(divisors) == len(cone.generators) and all(d == 1 for d in divisors)


def cone_contains(cone: SimplicialCone, point) -> bool:
    """Exact membership test: is the point a nonnegative combination?

    Coefficients are unique by independence, so a single rational solve
    settles the question.
    """
    p = [Fraction(e) for e in point]
    if len(p) != cone.dim:
        raise DimensionMismatchError("point dimension does not match the cone")
    if cone.is_zero:
        return all(e == 0 for e in p)
    rows = [
        [Fraction(g[i]) for g in cone.generators] for i in range(cone.dim)
    ]
    kind, coeffs = rational_solve(rows, p)
    if kind != "unique":
        return False
    return all(c >= 0 for c in coeffs)


def halfspace_description(cone: SimplicialCone):
    """(equalities, inequalities) cutting out the cone, as integer rows.

    The cone is {x : e.x == 0 for all equalities, w.x >= 0 for all
    inequalities}. Equalities pin the linear span (empty for full-
    dimensional cones); inequalities are the coefficient functionals of
    the independent generators, obtained by solving G^T G m = G^T column
    by column.
    """
    n = cone.dim
    gens = cone.generators
    s = len(gens)
    if s == 0:
        eye = IntegerMatrix.identity(n)
        return [eye.row(i) for i in range(n)], []

    span_rows = [[Fraction(e) for e in g] for g in gens]
    equalities = [clear_denominators(v) for v in rational_nullspace(span_rows)]

    # Rows of M with M x = coefficient vector for x in the span: solve the
    # normal equations (G^T G) M^T = G^T, one generator functional at a time.
    gram = [
        [sum(Fraction(gens[a][i]) * Fraction(gens[b][i]) for i in range(n)) for b in range(s)]
        for a in range(s)
    ]
    inequalities = []
    transposed = []
    for i in range(n):
        rhs = [Fraction(gens[a][i]) for a in range(s)]
        kind, col = rational_solve(gram, rhs)
        assert kind == "unique"
        transposed.append(col)
    for a in range(s):
        inequalities.append(clear_denominators([transposed[i][a] for i in range(n)]))
    return equalities, inequalities


def _extreme_rays(equalities, inequalities, dim):
    """Extreme rays of {x : Ex = 0, Lx >= 0}, or None if the set has a line.

    Works in coordinates on the subspace E x = 0: a direction spanning the
    nullspace of a rank (p-1) subset of inequality rows is extreme iff it
    satisfies all inequalities (possibly after a sign flip).
    """
    if equalities:
        sub_basis = rational_nullspace([list(map(Fraction, e)) for e in equalities])
    else:
        sub_basis = [
            [Fraction(1) if i == j else Fraction(0) for j in range(dim)]
            for i in range(dim)
        ]
    p = len(sub_basis)
    if p == 0:
        return []

    reduced = [
        [sum(Fraction(w[i]) * b[i] for i in range(dim)) for b in sub_basis]
        for w in inequalities
    ]
    # A nontrivial common zero of every inequality is a line in the cone.
    if not reduced or rational_rank(reduced) < p:
        return None

    rays = set()
    for subset in itertools.combinations(range(len(reduced)), p - 1):
        rows = [reduced[i] for i in subset]
        null = rational_nullspace(rows) if rows else rational_nullspace([[Fraction(0)] * p])
        if len(null) != 1:
            continue
        direction = null[0]
        values = [sum(row[j] * direction[j] for j in range(p)) for row in reduced]
        if all(val >= 0 for val in values):
            sign = 1
        elif all(val <= 0 for val in values):
            sign = -1
        else:
            continue
        ambient = [
            sign * sum(direction[j] * sub_basis[j][i] for j in range(p))
            for i in range(dim)
        ]
        if any(ambient):
            rays.add(clear_denominators(ambient))
    return sorted(rays)


def intersection_is_common_face(
    a: SimplicialCone, b: SimplicialCone, shared: SimplicialCone
) -> bool:
    """Decide a ∩ b == shared as point sets.

    Both halfspace systems are stacked and the extreme rays of the
    intersection are enumerated exactly; the intersection equals `shared`
    iff every extreme ray lies in `shared` and every generator of `shared`
    lies in both a and b.
    """
    if not (a.dim == b.dim == shared.dim):
        raise DimensionMismatchError("cones live in different ambient spaces")

    for g in shared.generators:
        if not (cone_contains(a, g) and cone_contains(b, g)):
            return False

    eq_a, ineq_a = halfspace_description(a)
    eq_b, ineq_b = halfspace_description(b)
    rays = _extreme_rays(eq_a + eq_b, ineq_a + ineq_b, a.dim)
    if rays is None:
        # The intersection contains a line; a simplicial cone never does.
        return False
    return all(cone_contains(shared, ray) for ray in rays)
