"""Fans stored as (generator table, underlying simplicial complex) pairs.

A fan is the pair of its ray generator list and the complex of index sets
that span cones; all cone-level reasoning derives `SimplicialCone` objects
on demand. This keeps subfan enumeration pure set combinatorics.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import (
    SimplicialCone,
    cone_contains,
    intersection_is_common_face,
    is_smooth_cone,
)
from .errors import NoPrimitiveCollectionError
from .lattice import (
    IntegerMatrix,
    rational_rank,
    rational_solve,
    smith_normal_form,
)

Face = frozenset
Complex = frozenset


@dataclass(frozen=True)
class Fan:
    """Generator table plus underlying simplicial complex (0-based indices).

    Construction is deliberately permissive: `validate_fan` is the
    gatekeeper and reports every violated axiom instead of raising.
    """

    dim: int
    generators: tuple[tuple[int, ...], ...]
    faces: Complex

    @classmethod
    def create(cls, generators, faces) -> "Fan":
        gens = tuple(tuple(int(e) for e in g) for g in generators)
        dim = len(gens[0]) if gens else 0
        face_set = {frozenset(int(i) for i in face) for face in faces}
        face_set.add(frozenset())
        return cls(dim, gens, frozenset(face_set))

    @classmethod
    def from_maximal(cls, generators, maximal_cones) -> "Fan":
        """Build a fan whose complex is the downward closure of the given
        maximal index sets, plus all singletons."""
        gens = tuple(tuple(int(e) for e in g) for g in generators)
        faces = {frozenset()}
        faces.update(frozenset({k}) for k in range(len(gens)))
        for cone in maximal_cones:
            cone = tuple(int(i) for i in cone)
            for size in range(1, len(cone) + 1):
                faces.update(frozenset(c) for c in itertools.combinations(cone, size))
        return cls.create(gens, faces)

    @property
    def ray_count(self) -> int:
        return len(self.generators)

    def maximal_faces(self) -> list[Face]:
        faces = [f for f in self.faces if f]
        maximal = [
            f for f in faces if not any(f < g for g in faces)
        ]
        return sorted(maximal, key=lambda f: (len(f), sorted(f)))

    def cone(self, face) -> SimplicialCone:
        return SimplicialCone.from_generators(
            self.dim, [self.generators[i] for i in sorted(face)]
        )

    def generator_matrix(self) -> IntegerMatrix:
        """The n x r matrix whose columns are the ray generators."""
        return IntegerMatrix.from_columns(list(self.generators))


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]


def _sorted_report(valid: bool, violations) -> ValidationReport:
    # Canonical violation order keeps CLI output byte-stable across runs.
    ordered = tuple(sorted(violations, key=lambda v: (v.axiom, v.witness)))
    return ValidationReport(valid, ordered)


def validate_fan(fan: Fan) -> ValidationReport:
    """Check every fan axiom and report all violations with witnesses.

    Structural and complex-level axioms are checked first; the pairwise
    intersection axiom is only evaluated once those hold, since cones over
    dependent or out-of-range index sets are not well defined.
    """
    violations = []
    r = fan.ray_count

    for g in fan.generators:
        if len(g) != fan.dim:
            violations.append(
                Violation("GENERATOR_DIMENSION", ((fan.generators.index(g),),))
            )
    for i in range(r):
        if not any(fan.generators[i]):
            violations.append(Violation("ZERO_GENERATOR", ((i,),)))
    seen = {}
    for i, g in enumerate(fan.generators):
        if g in seen:
            violations.append(Violation("DISTINCT_GENERATORS", ((seen[g], i),)))
        else:
            seen[g] = i

    for face in fan.faces:
        if any(not 0 <= i < r for i in face):
            violations.append(Violation("INDEX_RANGE", (tuple(sorted(face)),)))
    if violations:
        return _sorted_report(False, violations)

    if all(not face for face in fan.faces):
        violations.append(Violation("NONTRIVIAL", ()))
    for k in range(r):
        if frozenset({k}) not in fan.faces:
            violations.append(Violation("RAY_COVERAGE", ((k,),)))
    for face in fan.faces:
        if len(face) > 1:
            for sub in itertools.combinations(sorted(face), len(face) - 1):
                if frozenset(sub) not in fan.faces:
                    violations.append(
                        Violation("DOWNWARD_CLOSURE", (tuple(sub), tuple(sorted(face))))
                    )

    simplicial = True
    for face in sorted(fan.faces, key=lambda f: (len(f), sorted(f))):
        if face and rational_rank([fan.generators[i] for i in sorted(face)]) != len(face):
            violations.append(Violation("SIMPLICIALITY", (tuple(sorted(face)),)))
            simplicial = False
    if violations or not simplicial:
        return _sorted_report(False, violations)

    maximal = fan.maximal_faces()
    for a, b in itertools.combinations(maximal, 2):
        shared = a & b
        if not intersection_is_common_face(fan.cone(a), fan.cone(b), fan.cone(shared)):
            violations.append(
                Violation("INTERSECTION", (tuple(sorted(a)), tuple(sorted(b))))
            )

    return _sorted_report(not violations, violations)


def is_nonface(fan: Fan, subset) -> bool:
    return frozenset(subset) not in fan.faces


def nonface_family(fan: Fan) -> set[Face]:
    """The family I(K) of all non-faces, materialized.

    Materialization is capped at r <= 20 (2^r subsets); use `is_nonface`
    beyond that.
    """
    r = fan.ray_count
    if r > 20:
        raise ValueError("non-face family is only materialized for r <= 20")
    family = set()
    indices = list(range(r))
    for size in range(1, r + 1):
        for combo in itertools.combinations(indices, size):
            if frozenset(combo) not in fan.faces:
                family.add(frozenset(combo))
    return family


def primitive_collections(fan: Fan) -> frozenset[Face]:
    """Minimal non-faces of the complex.

    Every minimal non-face is a face plus one extra vertex, so candidates
    are generated that way instead of scanning all subsets.
    """
    r = fan.ray_count
    found = set()
    for face in fan.faces:
        for j in range(r):
            if j in face:
                continue
            candidate = face | {j}
            if candidate in fan.faces or candidate in found:
                continue
            if all(
                frozenset(sub) in fan.faces
                for sub in itertools.combinations(sorted(candidate), len(candidate) - 1)
            ):
                found.add(candidate)
    return frozenset(found)


def r_min(fan: Fan) -> int:
    collections = primitive_collections(fan)
    if not collections:
        raise NoPrimitiveCollectionError(
            "complex is a full simplex; no primitive collection exists"
        )
    return min(len(c) for c in collections)


def is_smooth(fan: Fan) -> bool:
    """True iff every maximal cone is smooth (faces of smooth cones are)."""
    return all(is_smooth_cone(fan.cone(face)) for face in fan.maximal_faces())


def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _angular_order(vectors) -> list[int]:
    """Indices sorted counterclockwise starting from the positive x-axis."""

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def compare(i, j):
        u, v = vectors[i], vectors[j]
        if half(u) != half(v):
            return -1 if half(u) < half(v) else 1
        c = _cross(u, v)
        if c != 0:
            return -1 if c > 0 else 1
        return -1 if i < j else (0 if i == j else 1)

    return sorted(range(len(vectors)), key=functools.cmp_to_key(compare))


def is_complete(fan: Fan) -> bool:
    """Whether the support of the fan is all of R^n.

    Dimension 2 uses the exact angular test: consecutive rays in angular
    order must bound a 2-cone of the fan and each sector must be strictly
    less than a half-plane. Dimension >= 3 uses the pseudomanifold
    criterion: pure top dimension, every ridge in exactly two top cones,
    and a connected top-cone adjacency graph.
    """
    n = fan.dim
    r = fan.ray_count
    if n == 0:
        return True
    if n == 1:
        return any(g[0] > 0 for g in fan.generators) and any(
            g[0] < 0 for g in fan.generators
        )
    if n == 2:
        if r < 3:
            return False
        order = _angular_order(fan.generators)
        for a, b in zip(order, order[1:] + order[:1]):
            if _cross(fan.generators[a], fan.generators[b]) <= 0:
                return False
            if frozenset({a, b}) not in fan.faces:
                return False
        return True

    maximal = fan.maximal_faces()
    if not maximal or any(len(face) != n for face in maximal):
        return False
    ridge_count: dict[Face, list[int]] = {}
    for idx, face in enumerate(maximal):
        for sub in itertools.combinations(sorted(face), n - 1):
            ridge_count.setdefault(frozenset(sub), []).append(idx)
    if any(len(owners) != 2 for owners in ridge_count.values()):
        return False
    adjacency = {i: set() for i in range(len(maximal))}
    for owners in ridge_count.values():
        a, b = owners
        adjacency[a].add(b)
        adjacency[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(maximal)


def enumerate_subfans(fan: Fan) -> list[Fan]:
    """All proper subfans with the same rays.

    Subfans correspond to proper order ideals of the poset of non-singleton
    faces (downward-closed subfamilies containing every singleton); any
    such subfamily of a valid fan automatically satisfies the intersection
    axiom.
    """
    non_singleton = sorted(
        (f for f in fan.faces if len(f) >= 2), key=lambda f: (len(f), sorted(f))
    )
    ideals: list[frozenset] = []

    def extend(pos: int, chosen: set):
        if pos == len(non_singleton):
            ideals.append(frozenset(chosen))
            return
        face = non_singleton[pos]
        extend(pos + 1, chosen)
        closed = all(
            frozenset(sub) in chosen
            for size in range(2, len(face))
            for sub in itertools.combinations(sorted(face), size)
        )
        if closed:
            chosen.add(face)
            extend(pos + 1, chosen)
            chosen.remove(face)

    extend(0, set())
    full = frozenset(non_singleton)
    base = {frozenset()} | {frozenset({k}) for k in range(fan.ray_count)}
    subfans = [
        Fan(fan.dim, fan.generators, frozenset(base | set(ideal)))
        for ideal in ideals
        if ideal != full
    ]
    subfans.sort(key=lambda f: sorted((len(face), sorted(face)) for face in f.faces))
    return subfans


def _integer_inverse(m: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a unimodular matrix."""
    n = m.rows
    rows = [[Fraction(e) for e in row] for row in m.entries]
    cols = []
    for j in range(n):
        rhs = [Fraction(1 if i == j else 0) for i in range(n)]
        kind, col = rational_solve(rows, rhs)
        assert kind == "unique"
        cols.append([int(c) for c in col])
    return IntegerMatrix.from_columns(cols)


def fan_isomorphism(a: Fan, b: Fan):
    """A unimodular matrix carrying fan a onto fan b, or None.

    The generator lattices are first reduced to coordinates on the
    saturation of their spans (so rank-deficient fans are handled), then
    a frame of independent rays of a is matched against every ordered
    tuple of rays of b; each candidate linear map is accepted iff it is
    unimodular, maps the ray set bijectively and carries the complex of a
    exactly onto the complex of b.
    """
    if a.dim != b.dim or a.ray_count != b.ray_count:
        return None
    r = a.ray_count
    if r == 0:
        return IntegerMatrix.identity(a.dim)

    snf_a = smith_normal_form(a.generator_matrix())
    snf_b = smith_normal_form(b.generator_matrix())
    rank = snf_a.rank
    if rank != snf_b.rank:
        return None

    # Coordinates of every generator on the saturation of its span: the
    # first `rank` entries of U g (the rest vanish because UGV = S).
    coords_a = [snf_a.U.apply(g)[:rank] for g in a.generators]
    coords_b = [snf_b.U.apply(g)[:rank] for g in b.generators]

    lookup = {}
    for idx, vec in enumerate(coords_b):
        if vec in lookup:
            return None
        lookup[vec] = idx

    frame = []
    for i in range(r):
        if rational_rank([coords_a[j] for j in frame + [i]]) == len(frame) + 1:
            frame.append(i)
        if len(frame) == rank:
            break
    if len(frame) != rank:
        return None

    frame_rows = [[Fraction(coords_a[i][k]) for i in frame] for k in range(rank)]
    for target in itertools.permutations(range(r), rank):
        target_cols = [coords_b[t] for t in target]
        w_rows = []
        ok = True
        for k in range(rank):
            rhs = [Fraction(target_cols[c][k]) for c in range(rank)]
            kind, row = rational_solve(
                [[frame_rows[i][c] for i in range(rank)] for c in range(rank)], rhs
            )
            if kind != "unique" or any(x.denominator != 1 for x in row):
                ok = False
                break
            w_rows.append([int(x) for x in row])
        if not ok:
            continue
        w = IntegerMatrix.from_rows(w_rows)
        if abs(w.determinant()) != 1:
            continue

        permutation = []
        for i in range(r):
            image = w.apply(coords_a[i])
            j = lookup.get(image)
            if j is None:
                break
            permutation.append(j)
        else:
            if len(set(permutation)) == r:
                mapped = frozenset(
                    frozenset(permutation[i] for i in face) for face in a.faces
                )
                if mapped == b.faces:
                    n = a.dim
                    block = [
                        [
                            w.entries[i][j] if i < rank and j < rank
                            else (1 if i == j else 0)
                            for j in range(n)
                        ]
                        for i in range(n)
                    ]
                    u = (
                        _integer_inverse(snf_b.U)
                        @ IntegerMatrix.from_rows(block)
                        @ snf_a.U
                    )
                    return u
    return None


def isomorphism_classes(fans: list[Fan]) -> list[list[int]]:
    """Group fans into GL(n,Z)-equivalence classes (lists of input indices)."""
    classes: list[list[int]] = []
    for idx, fan in enumerate(fans):
        for group in classes:
            if fan_isomorphism(fans[group[0]], fan) is not None:
                group.append(idx)
                break
        else:
            classes.append([idx])
    return classes
