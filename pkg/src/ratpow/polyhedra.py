"""Exact rational convex geometry for Newton polyhedra.

The only hull engine is an incremental double description method over
exact rationals: cones are handed around as primitive integer rays, and
both conversion directions (generators to facets, halfspaces to vertices)
go through the same routine on the homogenization.  The recession cone of
every polyhedron here is the nonnegative orthant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateIdeal, DeskScaleExceeded, UnboundedRegion
from .ideals import Exponent, MonomialIdeal, grlex_sorted, require_proper_nonzero
from .linalg import invert, matrix_rank, primitive_vector

_GRID_CELL_LIMIT = 50_000_000
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class HalfspaceQ:
    """Rational halfspace  normal . x >= threshold  with nonnegative normal."""

    normal: tuple[Fraction, ...]
    threshold: Fraction

    def __post_init__(self):
        if all(a == 0 for a in self.normal):
            raise ValueError("zero normal")
        if any(a < 0 for a in self.normal):
            raise ValueError("normal must be nonnegative")

    def value(self, point) -> Fraction:
        return sum(Fraction(a) * Fraction(x) for a, x in zip(self.normal, point))


@dataclass(frozen=True)
class IntegralHalfspace:
    """Reduced integral halfspace: gcd of all normal entries and the threshold is 1."""

    normal: tuple[int, ...]
    threshold: int

    def __post_init__(self):
        if all(a == 0 for a in self.normal):
            raise ValueError("zero normal")
        if any(a < 0 for a in self.normal) or self.threshold < 0:
            raise ValueError("normal and threshold must be nonnegative")
        g = self.threshold
        for a in self.normal:
            g = gcd(g, a)
        if g != 1:
            raise ValueError(f"not reduced: gcd {g}")

    def value(self, point):
        return sum(a * x for a, x in zip(self.normal, point))

    def holds(self, point, scale: Fraction = Fraction(1)) -> bool:
        return self.value(point) >= scale * self.threshold


def reduce_halfspace(h: HalfspaceQ) -> tuple[IntegralHalfspace, Fraction]:
    """Clear denominators and common factors; return the reduced form and the
    factor m with  h = m * reduced."""
    if h.threshold < 0:
        raise ValueError("negative threshold")
    prim = primitive_vector(tuple(h.normal) + (h.threshold,))
    reduced = IntegralHalfspace(prim[:-1], prim[-1])
    lead = next(i for i, a in enumerate(prim[:-1]) if a != 0)
    factor = Fraction(h.normal[lead]) / prim[lead]
    return reduced, factor


# ---------------------------------------------------------------------------
# double description

def extreme_rays(rows: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : a . x >= 0 for every row a}.

    Incremental double description: seed with n linearly independent rows
    (the columns of their inverse span a simplicial cone containing the
    target), then cut with the remaining halfspaces one at a time, pairing
    adjacent rays across the new hyperplane.  Adjacency uses the standard
    combinatorial test on zero sets.  Rays come back as sorted primitive
    integer vectors.
    """
    cleaned = []
    for row in rows:
        if any(Fraction(x) != 0 for x in row):
            cleaned.append(primitive_vector(row))
    if not cleaned:
        raise ValueError("no constraints")
    n = len(cleaned[0])

    # choose n independent seed rows by greedy elimination
    seed_idx: list[int] = []
    basis: list[list[Fraction]] = []
    for idx, row in enumerate(cleaned):
        cand = [Fraction(x) for x in row]
        for b in basis:
            lead = next(i for i, v in enumerate(b) if v != 0)
            if cand[lead] != 0:
                f = cand[lead] / b[lead]
                cand = [c - f * v for c, v in zip(cand, b)]
        if any(v != 0 for v in cand):
            basis.append(cand)
            seed_idx.append(idx)
        if len(seed_idx) == n:
            break
    if len(seed_idx) < n:
        raise ValueError("cone is not pointed (constraint matrix is rank deficient)")

    inv = invert([cleaned[i] for i in seed_idx])
    rays = [primitive_vector([inv[r][c] for r in range(n)]) for c in range(n)]
    processed = list(seed_idx)
    zero_sets = {r: frozenset(i for i in processed if _dot(cleaned[i], r) == 0)
                 for r in rays}

    for idx, row in enumerate(cleaned):
        if idx in seed_idx:
            continue
        vals = {r: _dot(row, r) for r in rays}
        neg = [r for r in rays if vals[r] < 0]
        if not neg:
            processed.append(idx)
            zero_sets = {r: zero_sets[r] | ({idx} if vals[r] == 0 else frozenset())
                         for r in rays}
            continue
        pos = [r for r in rays if vals[r] > 0]
        zero = [r for r in rays if vals[r] == 0]
        new_rays: list[tuple[int, ...]] = []
        for rp, rm in itertools.product(pos, neg):
            common = zero_sets[rp] & zero_sets[rm]
            adjacent = not any(
                r3 is not rp and r3 is not rm and common <= zero_sets[r3]
                for r3 in rays)
            if not adjacent:
                continue
            combo = [vals[rp] * b - vals[rm] * a for a, b in zip(rp, rm)]
            new_rays.append(primitive_vector(combo))
        processed.append(idx)
        kept = pos + zero
        rays = []
        seen = set()
        for r in kept + new_rays:
            if r not in seen:
                seen.add(r)
                rays.append(r)
        zero_sets = {r: frozenset(i for i in processed if _dot(cleaned[i], r) == 0)
                     for r in rays}
    return sorted(rays)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Newton polyhedra

@dataclass(frozen=True)
class NewtonPolyhedron:
    """Vertices and reduced non-coordinate facets of conv(points) + orthant.

    Coordinate halfspaces x_j >= 0 are enforced implicitly and never appear
    in ``facets``; their thresholds would be 0 and they impose no condition
    on membership scaling.
    """

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[IntegralHalfspace, ...]

    def contains(self, point, scale: Fraction = Fraction(1)) -> bool:
        if any(Fraction(x) < 0 for x in point):
            return False
        return all(f.holds(point, scale) for f in self.facets)

    def scaled(self, scale) -> "ScaledPolyhedron":
        return ScaledPolyhedron(self, Fraction(scale))


@dataclass(frozen=True)
class ScaledPolyhedron:
    """A Newton polyhedron scaled by a positive rational factor."""

    poly: NewtonPolyhedron
    scale: Fraction

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def dim(self) -> int:
        return self.poly.dim

    def contains(self, point) -> bool:
        return self.poly.contains(point, self.scale)

    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(self.scale * c for c in v) for v in self.poly.vertices)


def _facets_from_homogenized(rows: list[tuple[int, ...]], d: int
                             ) -> tuple[IntegralHalfspace, ...]:
    facets = []
    for ray in extreme_rays(rows):
        y0, normal = ray[0], ray[1:]
        if all(a == 0 for a in normal):
            continue  # the slab t >= 0; no condition on x
        if any(a < 0 for a in normal):
            raise AssertionError("facet normal escaped the dual orthant")
        if y0 == 0:
            continue  # coordinate facet, kept implicit
        if y0 > 0:
            raise AssertionError("invalid facet orientation for an up-set polyhedron")
        facets.append(IntegralHalfspace(tuple(normal), -y0))
    return tuple(sorted(facets, key=lambda f: (f.normal, f.threshold)))


def _certify_facets(points: Sequence[Exponent], facets: Sequence[IntegralHalfspace],
                    d: int) -> None:
    for f in facets:
        vals = [f.value(p) for p in points]
        if any(v < f.threshold for v in vals):
            raise AssertionError(f"facet {f} cuts off a generator")
        tight_rows = [(1,) + tuple(p) for p, v in zip(points, vals) if v == f.threshold]
        tight_rows += [(0,) + tuple(int(j == k) for k in range(d))
                       for j in range(d) if f.normal[j] == 0]
        if matrix_rank(tight_rows) != d:
            raise AssertionError(f"halfspace {f} is valid but not a facet")


def _vertices_among(points: Sequence[tuple], facets: Sequence[IntegralHalfspace],
                    d: int) -> tuple[tuple[Fraction, ...], ...]:
    verts = []
    for p in points:
        rows = [f.normal for f in facets if f.value(p) == f.threshold]
        rows += [tuple(int(j == k) for k in range(d)) for j in range(d) if p[j] == 0]
        if rows and matrix_rank(rows) == d:
            verts.append(tuple(Fraction(x) for x in p))
    return tuple(sorted(verts))


@lru_cache(maxsize=None)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Vertices and reduced non-coordinate facets of NP(I) = conv(gens) + orthant."""
    require_proper_nonzero(ideal, "newton_polyhedron")
    d = ideal.dim
    rows = [(1,) + g for g in ideal.gens]
    rows += [(0,) + tuple(int(j == k) for k in range(d)) for j in range(d)]
    facets = _facets_from_homogenized(rows, d)
    _certify_facets(ideal.gens, facets, d)
    vertices = _vertices_among(ideal.gens, facets, d)
    return NewtonPolyhedron(d, vertices, facets)


def vertices_from_halfspaces(halfspaces: Sequence[IntegralHalfspace], d: int
                             ) -> tuple[tuple[tuple[Fraction, ...], ...],
                                        tuple[tuple[int, ...], ...]]:
    """Vertex and recession-ray representation of {x >= 0 : a . x >= f}.

    Works on the homogenization over (t, x); rays with t > 0 normalize to
    vertices, rays with t = 0 are recession directions (always coordinate
    rays for nonnegative normals).
    """
    rows: list[tuple[int, ...]] = [(1,) + (0,) * d]
    rows += [(0,) + tuple(int(j == k) for k in range(d)) for j in range(d)]
    rows += [(-h.threshold,) + h.normal for h in halfspaces]
    vertices = []
    rec_rays = []
    for ray in extreme_rays(rows):
        t, x = ray[0], ray[1:]
        if t > 0:
            vertices.append(tuple(Fraction(c, t) for c in x))
        elif t == 0:
            rec_rays.append(tuple(x))
        else:
            raise AssertionError("homogenization ray with negative height")
    return tuple(sorted(vertices)), tuple(sorted(rec_rays))


# ---------------------------------------------------------------------------
# lattice point machinery

def _scan_minimal_points(weights: Sequence[Sequence[int]], thresholds: Sequence[int],
                         margin: int = 0) -> tuple[Exponent, ...]:
    """Antichain of minimal alpha in N^d with w_i(alpha) >= t_i for all i.

    A minimal solution with alpha_j > 0 has some weight i with w_ij > 0 and
    w_i(alpha - e_j) < t_i, which caps alpha_j at (t_i - 1) // w_ij + 1, so a
    finite per-coordinate box suffices.
    """
    d = len(weights[0])
    bounds = []
    for j in range(d):
        bj = 0
        for w, t in zip(weights, thresholds):
            if w[j] > 0 and t > 0:
                bj = max(bj, (t - 1) // w[j] + 1)
        bounds.append(bj + margin)
    shape = tuple(b + 1 for b in bounds)
    cells = 1
    for s in shape:
        cells *= s
    if cells > _GRID_CELL_LIMIT:
        raise DeskScaleExceeded(f"lattice scan of {cells} cells")
    peak = max(abs(t) for t in thresholds)
    for w in weights:
        peak = max(peak, sum(wj * bj for wj, bj in zip(w, bounds)))
    if peak >= _INT64_SAFE:
        raise DeskScaleExceeded("weights too large for exact int64 scan")

    grids = np.indices(shape, dtype=np.int64)
    member = np.ones(shape, dtype=bool)
    for w, t in zip(weights, thresholds):
        acc = np.zeros(shape, dtype=np.int64)
        for j in range(d):
            if w[j]:
                acc += w[j] * grids[j]
        member &= acc >= t
    minimal = member.copy()
    for j in range(d):
        upper = [slice(None)] * d
        lower = [slice(None)] * d
        upper[j] = slice(1, None)
        lower[j] = slice(None, -1)
        minimal[tuple(upper)] &= ~member[tuple(lower)]
    pts = [tuple(int(c) for c in idx) for idx in np.argwhere(minimal)]
    return grlex_sorted(pts)


def minimal_points_above(weights: Sequence[Sequence[int]], n: int,
                         margin: int = 0) -> tuple[Exponent, ...]:
    """Minimal lattice points with every weight at least n (common threshold)."""
    if not weights:
        raise ValueError("no weights")
    for w in weights:
        if all(v == 0 for v in w) or any(v < 0 for v in w):
            raise ValueError(f"weight {w} must be nonnegative and nonzero")
    if n <= 0:
        return ((0,) * len(weights[0]),)
    return _scan_minimal_points([tuple(w) for w in weights], [n] * len(weights), margin)


def count_region(inside: Sequence[ScaledPolyhedron], outside: Sequence[ScaledPolyhedron],
                 n: int, box: int | None = None) -> int:
    """Exact number of lattice points in n*(intersection of ``inside``) that lie
    outside every n*Q for Q in ``outside``.

    The count runs fiber by fiber in the last coordinate, where membership in
    each scaled polyhedron is an upward-closed condition; an unbounded fiber
    or a populated fiber on the prefix-box boundary raises UnboundedRegion.
    """
    if n < 1:
        raise ValueError("n must be positive")
    polys = list(inside) + list(outside)
    if not polys:
        raise UnboundedRegion("no constraints at all")
    d = polys[0].dim
    if any(p.dim != d for p in polys):
        raise ValueError("mixed ambient dimensions")

    def int_constraints(sp: ScaledPolyhedron) -> list[tuple[tuple[int, ...], int]]:
        p, q = sp.scale.numerator, sp.scale.denominator
        return [(tuple(q * a for a in f.normal), n * p * f.threshold)
                for f in sp.poly.facets]

    inside_cons = [c for sp in inside for c in int_constraints(sp)]
    outside_cons = [int_constraints(sp) for sp in outside]

    if box is None:
        peak = Fraction(1)
        for sp in polys:
            for f in sp.poly.facets:
                peak = max(peak, sp.scale * f.threshold)
        box = int(n * peak) + 1

    def fiber_floor(cons, prefix) -> int | None:
        """Least last coordinate entering all constraints, or None if no value does."""
        lo = 0
        for vec, rhs in cons:
            partial = sum(v * p for v, p in zip(vec, prefix))
            need = rhs - partial
            if vec[-1] == 0:
                if need > 0:
                    return None
            elif need > 0:
                lo = max(lo, -(-need // vec[-1]))
        return lo

    total = 0
    for prefix in itertools.product(range(box + 1), repeat=d - 1):
        lo = fiber_floor(inside_cons, prefix)
        if lo is None:
            continue
        # least last coordinate at which the fiber enters some outside polyhedron
        hi = None
        for cons in outside_cons:
            enter = fiber_floor(cons, prefix)
            if enter is not None:
                hi = enter if hi is None else min(hi, enter)
        if hi is None:
            raise UnboundedRegion(f"fiber at prefix {prefix} never leaves the region")
        count = max(0, hi - lo)
        if count and any(c == box for c in prefix):
            raise UnboundedRegion("box-boundary hit; enlarge the box to certify the count")
        total += count
    return total


# ---------------------------------------------------------------------------
# faces and analytic spread

@dataclass(frozen=True)
class Face:
    """A face of a Newton polyhedron, recorded by its tight halfspaces."""

    tight_facets: frozenset[IntegralHalfspace]
    vertex_set: frozenset[tuple[Fraction, ...]]
    dim: int
    compact: bool


def _all_halfspaces(poly: NewtonPolyhedron) -> list[IntegralHalfspace]:
    coords = []
    for j in range(poly.dim):
        normal = tuple(int(j == k) for k in range(poly.dim))
        coords.append(IntegralHalfspace(normal, 0))
    return list(poly.facets) + coords


def enumerate_faces(poly: NewtonPolyhedron) -> list[Face]:
    """All nonempty faces spanned by vertices and recession rays.

    Faces are the tight sets of subsets of the halfspace description
    (non-coordinate facets plus coordinate halfspaces), deduplicated by
    their vertex set and free recession directions.
    """
    halfspaces = _all_halfspaces(poly)
    if len(halfspaces) > 20:
        raise DeskScaleExceeded("too many facets for exhaustive face enumeration")
    d = poly.dim
    seen: dict[tuple, Face] = {}
    for r in range(len(halfspaces) + 1):
        for combo in itertools.combinations(range(len(halfspaces)), r):
            chosen = [halfspaces[i] for i in combo]
            tight_vs = [v for v in poly.vertices
                        if all(h.value(v) == h.threshold for h in chosen)]
            support = set()
            for h in chosen:
                support |= {j for j, a in enumerate(h.normal) if a}
            free = tuple(sorted(set(range(d)) - support))
            if not tight_vs:
                continue  # empty face: every nonempty face carries a vertex
            key = (frozenset(tight_vs), free)
            if key in seen:
                continue
            compact = not free
            rows = [tuple(a - b for a, b in zip(v, tight_vs[0])) for v in tight_vs[1:]]
            rows += [tuple(Fraction(int(j == k)) for k in range(d)) for j in free]
            fdim = matrix_rank(rows) if rows else 0
            tight_all = frozenset(h for h in halfspaces
                                  if all(h.value(v) == h.threshold for v in tight_vs)
                                  and all(h.normal[j] == 0 for j in free))
            seen[key] = Face(tight_all, frozenset(tight_vs), fdim, compact)
    return sorted(seen.values(), key=lambda f: (f.dim, sorted(f.vertex_set)))


def max_compact_face_dim(poly: NewtonPolyhedron) -> int:
    best = -1
    for face in enumerate_faces(poly):
        if face.compact:
            best = max(best, face.dim)
    if best < 0:
        raise AssertionError("a pointed polyhedron has at least one vertex")
    return best


def analytic_spread(ideal: MonomialIdeal) -> int:
    """One plus the maximal dimension of a compact face of NP(I)."""
    require_proper_nonzero(ideal, "analytic_spread")
    return 1 + max_compact_face_dim(newton_polyhedron(ideal))


# ---------------------------------------------------------------------------
# serialization

def polyhedron_to_doc(poly: NewtonPolyhedron) -> dict:
    return {
        "vertices": [[str(c) for c in v] for v in poly.vertices],
        "facets": [{"normal": list(f.normal), "threshold": f.threshold}
                   for f in poly.facets],
    }
