"""Independent oracles used to cross-check package computations.

These deliberately avoid the code paths they check: membership is decided
through resultants (Sylvester determinants) rather than gcds, kernels and
positive vectors through exhaustive search, and root collisions through
floating-point root finding with a separation margin.
"""

from __future__ import annotations

import itertools

from torickit.gaussian import (
    ONE,
    ZERO,
    GaussianRational,
    Poly,
    gaussian,
    poly_degree,
)
from torickit.lattice import IntegerMatrix


def gaussian_determinant(rows) -> GaussianRational:
    n = len(rows)
    work = [list(r) for r in rows]
    det = ONE
    for col in range(n):
        pivot = next((i for i in range(col, n) if not work[i][col].is_zero), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = ONE / work[col][col]
        for i in range(col + 1, n):
            if work[i][col].is_zero:
                continue
            factor = work[i][col] * inv
            work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return det


def sylvester_resultant(f: Poly, g: Poly, declared_degree: int) -> GaussianRational:
    """Resultant of f and g with g treated as having the declared degree.

    For monic f this equals the true resultant even when g's actual degree
    is lower (the correction factor is a power of f's leading coefficient).
    """
    n = poly_degree(f)
    m = declared_degree
    assert n >= 1 and m >= 1 and len(g) <= m + 1
    f_desc = list(reversed(f))
    g_desc = [ZERO] * (m + 1 - len(g)) + list(reversed(g))
    size = n + m
    rows = []
    for shift in range(m):
        rows.append([ZERO] * shift + f_desc + [ZERO] * (size - shift - n - 1))
    for shift in range(n):
        rows.append([ZERO] * shift + g_desc + [ZERO] * (size - shift - m - 1))
    return gaussian_determinant(rows)


def collection_has_common_root(polys: list[Poly]) -> bool:
    """Resultant-based detection of a common root of a whole collection.

    A common root of monic f1, ..., fs exists iff the resultant of f1
    against the generic combination f2 + t*f3 + ... vanishes identically
    in t; that polynomial in t has degree at most deg(f1)*(s-2), so
    vanishing at deg(f1)*(s-2)+1 integer points settles it exactly.
    """
    first, rest = polys[0], polys[1:]
    declared = max(poly_degree(p) for p in rest)
    if len(rest) == 1:
        return sylvester_resultant(first, rest[0], declared).is_zero
    t_degree = poly_degree(first) * (len(rest) - 1)
    for t_value in range(t_degree + 1):
        t = gaussian(t_value)
        combined = [ZERO] * (declared + 1)
        weight = ONE
        for p in rest:
            for k, coeff in enumerate(p):
                combined[k] = combined[k] + weight * coeff
            weight = weight * t
        while combined and combined[-1].is_zero:
            combined.pop()
        if not combined:
            continue
        if not sylvester_resultant(first, tuple(combined), declared).is_zero:
            return False
    return True


def resultant_is_member(tup, fan) -> bool:
    from torickit.fans import primitive_collections

    for collection in primitive_collections(fan):
        if collection_has_common_root([tup.polys[i] for i in sorted(collection)]):
            return False
    return True


def numeric_is_member(tup, fan, tol: float = 1e-6) -> bool:
    """Floating-point root finding with interval separation."""
    import numpy as np
    from torickit.fans import primitive_collections

    root_sets = []
    for p in tup.polys:
        coeffs = [complex(float(c.real), float(c.imag)) for c in reversed(p)]
        root_sets.append(np.roots(coeffs))
    for collection in primitive_collections(fan):
        indices = sorted(collection)
        for candidate in root_sets[indices[0]]:
            if all(
                min(abs(candidate - other) for other in root_sets[i]) < tol
                for i in indices[1:]
            ):
                return False
    return True


def brute_force_positive_vector(matrix: IntegerMatrix, bound: int):
    """Exhaustive search for a kernel vector with entries in [1, bound]."""
    for candidate in itertools.product(range(1, bound + 1), repeat=matrix.cols):
        if not any(matrix.apply(candidate)):
            return candidate
    return None


def brute_force_kernel_vectors(matrix: IntegerMatrix, bound: int):
    """All kernel vectors with entries in [-bound, bound]."""
    found = []
    for candidate in itertools.product(range(-bound, bound + 1), repeat=matrix.cols):
        if not any(matrix.apply(candidate)):
            found.append(candidate)
    return found
