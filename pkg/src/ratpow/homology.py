"""Simplicial homology, degree complexes, graded local cohomology, Betti numbers.

Graded local cohomology of R/I is assembled from degree complexes: the piece
in degree alpha depends only on the negative support G of alpha and the
clamped exponent alpha^+, and its dimension is the reduced homology of the
complex of variable subsets F for which x^(alpha^+) survives outside the
localization I_(F union G).  The scan over keys is confined to a finite box
read off the generator exponents and re-run on a doubled box as a stability
assertion.  An independent multigraded Betti table (upper Koszul complexes)
supplies depth and regularity through a second route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DeskScaleExceeded, ScanInstability, UnboundedRegion
from .ideals import (Exponent, MonomialIdeal, contains, minimal_generators,
                     project, require_proper_nonzero, upset_grid)
from .linalg import matrix_rank
from .polyhedra import count_region, newton_polyhedron
from .rational_powers import rees_valuations


# ---------------------------------------------------------------------------
# simplicial complexes and reduced homology

@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex stored by its facets.

    The void complex (no faces at all) has an empty facet set; the irrelevant
    complex, whose only face is the empty face, has the single facet
    frozenset().  The two are distinct values with different homology.
    """

    ground: frozenset[int]
    facets: frozenset[frozenset[int]]

    def __post_init__(self):
        for f in self.facets:
            if not f <= self.ground:
                raise ValueError("facet outside the ground set")

    @classmethod
    def from_faces(cls, ground: Iterable[int],
                   faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        ground = frozenset(ground)
        fs = [frozenset(f) for f in faces]
        maximal = [f for f in fs if not any(f < g for g in fs)]
        return cls(ground, frozenset(maximal))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == frozenset({frozenset()})

    def faces(self) -> frozenset[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for f in self.facets:
            members = sorted(f)
            for r in range(len(members) + 1):
                out.update(frozenset(c) for c in itertools.combinations(members, r))
        return frozenset(out)

    def canonical(self) -> tuple:
        order = {v: i for i, v in enumerate(sorted(self.ground))}
        return tuple(sorted(tuple(sorted(order[v] for v in f)) for f in self.facets))


_HOMOLOGY_CACHE: dict[tuple, int] = {}


def reduced_homology(complex_: SimplicialComplex, i: int, char: int = 0) -> int:
    """Dimension of the i-th reduced homology over Q (or GF(char)).

    Conventions: the void complex has zero homology everywhere; the
    irrelevant complex has one dimension in degree -1 and nothing else.
    """
    key = (complex_.canonical(), i, char)
    cached = _HOMOLOGY_CACHE.get(key)
    if cached is not None:
        return cached
    value = _reduced_homology(complex_, i, char)
    _HOMOLOGY_CACHE[key] = value
    return value


def _reduced_homology(complex_: SimplicialComplex, i: int, char: int) -> int:
    if complex_.is_void or i < -1:
        return 0
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in complex_.faces():
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim)
    if i > top:
        return 0

    def boundary_rank(k: int) -> int:
        # rank of the boundary map C_k -> C_(k-1)
        if k <= -1 or k - 1 not in by_dim or k not in by_dim:
            return 0
        rows_index = {f: r for r, f in enumerate(by_dim[k - 1])}
        matrix = [[0] * len(by_dim[k]) for _ in by_dim[k - 1]]
        for c, face in enumerate(by_dim[k]):
            for omit in range(len(face)):
                sub = face[:omit] + face[omit + 1:]
                matrix[rows_index[sub]][c] = (-1) ** omit
        return matrix_rank(matrix, char)

    n_faces = len(by_dim.get(i, []))
    return n_faces - boundary_rank(i) - boundary_rank(i + 1)


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    """Alternating face-count sum, with the empty face contributing -1."""
    if complex_.is_void:
        return 0
    return sum((-1) ** (len(f) - 1) for f in complex_.faces())


# ---------------------------------------------------------------------------
# degree complexes

@dataclass(frozen=True)
class DegreeKey:
    """Degree class of a lattice point: negative support G and clamped part."""

    negatives: frozenset[int]
    beta: Exponent

    def __post_init__(self):
        if any(self.beta[j] != 0 for j in self.negatives):
            raise ValueError("beta must vanish on the negative support")
        if any(b < 0 for b in self.beta):
            raise ValueError("beta must be nonnegative")

    @property
    def total_degree(self) -> int:
        # representative with the negative coordinates set to -1
        return sum(self.beta) - len(self.negatives)


def degree_complex(ideal: MonomialIdeal, key: DegreeKey) -> SimplicialComplex:
    """Faces F outside the negative support with x^beta not in I_(F union G)."""
    d = ideal.dim
    ground = [j for j in range(d) if j not in key.negatives]
    faces = []
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            localized = project(ideal, set(combo) | key.negatives)
            if not contains(localized, key.beta):
                faces.append(combo)
    return SimplicialComplex.from_faces(ground, faces)


# ---------------------------------------------------------------------------
# local cohomology via degree complexes

@dataclass(frozen=True)
class CohomologyTable:
    """Nonzero graded local cohomology dimensions of R/I within the scan box."""

    dim: int
    entries: tuple[tuple[int, DegreeKey, int], ...]

    def dimension(self, i: int, key: DegreeKey) -> int:
        for ei, ekey, dim in self.entries:
            if ei == i and ekey == key:
                return dim
        return 0

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted({i for i, _, _ in self.entries}))

    @property
    def depth(self) -> int:
        if not self.entries:
            raise AssertionError("local cohomology of a proper quotient never vanishes entirely")
        return min(i for i, _, _ in self.entries)

    def a_invariant(self, i: int) -> int | None:
        degs = [key.total_degree for ei, key, _ in self.entries if ei == i]
        return max(degs) if degs else None

    @property
    def regularity(self) -> int:
        return max(key.total_degree + i for i, key, _ in self.entries)


def _scan_bounds(ideal: MonomialIdeal) -> tuple[int, ...]:
    return tuple(max(g[j] for g in ideal.gens) for j in range(ideal.dim))


def _table_entries(ideal: MonomialIdeal, bounds: Sequence[int]
                   ) -> list[tuple[int, DegreeKey, int]]:
    d = ideal.dim
    shape = tuple(max(b, 1) for b in bounds)
    member = {}
    for subset in _powerset(range(d)):
        proj = project(ideal, subset)
        member[frozenset(subset)] = upset_grid(proj.gens, shape)
    entries = []
    for g_tuple in _powerset(range(d)):
        g = frozenset(g_tuple)
        rest = [j for j in range(d) if j not in g]
        if any(bounds[j] == 0 for j in rest):
            continue  # a variable absent from the ideal forces its index negative
        ranges = [range(bounds[j]) if j in rest else range(1) for j in range(d)]
        for beta in itertools.product(*ranges):
            faces = []
            for r in range(len(rest) + 1):
                for combo in itertools.combinations(rest, r):
                    if not member[g | frozenset(combo)][beta]:
                        faces.append(combo)
            if not faces:
                continue
            complex_ = SimplicialComplex.from_faces(rest, faces)
            key = DegreeKey(g, beta)
            for i in range(d + 1):
                h = reduced_homology(complex_, i - len(g) - 1)
                if h:
                    entries.append((i, key, h))
    entries.sort(key=lambda t: (t[0], sorted(t[1].negatives), t[1].beta))
    return entries


def _powerset(items) -> list[tuple]:
    items = list(items)
    return [c for r in range(len(items) + 1)
            for c in itertools.combinations(items, r)]


def local_cohomology_table(ideal: MonomialIdeal) -> CohomologyTable:
    """Takayama-style table of graded local cohomology of R/I.

    Scans all degree keys with clamped part below the generator exponent
    bounds, then repeats the scan on a doubled box; a mismatch means the
    vanishing bound was violated and is reported as instability.
    """
    require_proper_nonzero(ideal, "local_cohomology_table")
    bounds = _scan_bounds(ideal)
    entries = _table_entries(ideal, bounds)
    doubled = _table_entries(ideal, tuple(2 * b for b in bounds))
    if entries != doubled:
        raise ScanInstability("cohomology table changed when the scan box doubled")
    return CohomologyTable(ideal.dim, tuple(entries))


def depth_quotient(ideal: MonomialIdeal) -> int:
    return local_cohomology_table(ideal).depth


def regularity_quotient(ideal: MonomialIdeal) -> int:
    return local_cohomology_table(ideal).regularity


def lc_length(ideal: MonomialIdeal, i: int) -> tuple[bool, int | None]:
    """Length of the i-th local cohomology of R/I.

    Finite exactly when no nonzero table entry at index i has negative
    support; in that case the length is the dimension sum over the ordinary
    (componentwise nonnegative) degrees.
    """
    table = local_cohomology_table(ideal)
    total = 0
    for ei, key, dim in table.entries:
        if ei != i:
            continue
        if key.negatives:
            return False, None
        total += dim
    return True, total


# ---------------------------------------------------------------------------
# multigraded Betti numbers (upper Koszul complexes): the independent oracle

@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of an ideal, beta_(i, alpha)."""

    dim: int
    entries: tuple[tuple[int, Exponent, int], ...]

    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    @property
    def depth_quotient(self) -> int:
        # Auslander-Buchsbaum for R/I, whose projective dimension is pd(I) + 1
        return self.dim - (1 + self.projective_dimension())

    @property
    def regularity_quotient(self) -> int:
        return max(sum(a) - i for i, a, _ in self.entries) - 1


def betti_table(ideal: MonomialIdeal) -> BettiTable:
    """Betti numbers via reduced homology of upper Koszul complexes.

    beta_(i, alpha) is the (i-1)-st reduced homology of the complex of
    variable subsets S inside the support of alpha with x^(alpha - 1_S) in
    the ideal; only alpha dividing the generator lcm can contribute.
    """
    require_proper_nonzero(ideal, "betti_table")
    d = ideal.dim
    lcm_exp = tuple(max(g[j] for g in ideal.gens) for j in range(d))
    shape = tuple(e + 1 for e in lcm_exp)
    member = upset_grid(ideal.gens, shape)
    entries = []
    for alpha in itertools.product(*(range(s) for s in shape)):
        support = [j for j in range(d) if alpha[j]]
        faces = []
        for r in range(len(support) + 1):
            for combo in itertools.combinations(support, r):
                lowered = tuple(a - (1 if j in combo else 0)
                                for j, a in enumerate(alpha))
                if member[lowered]:
                    faces.append(combo)
        if not faces:
            continue
        complex_ = SimplicialComplex.from_faces(support, faces)
        for i in range(d + 1):
            h = reduced_homology(complex_, i - 1)
            if h:
                entries.append((i, alpha, h))
    entries.sort()
    return BettiTable(d, tuple(entries))


# ---------------------------------------------------------------------------
# lengths of local cohomology along the rational-power filtration

def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    gens = [tuple(min(e, 1) for e in g) for g in ideal.gens]
    return MonomialIdeal.from_gens(gens, var_names=ideal.var_names, dim=ideal.dim)


def _subcomplexes(complex_: SimplicialComplex) -> list[frozenset[frozenset[int]]]:
    faces = sorted(complex_.faces(), key=lambda f: (len(f), sorted(f)))
    if len(faces) > 12:
        raise DeskScaleExceeded("too many faces for subcomplex enumeration")
    out = []
    for r in range(len(faces) + 1):
        for combo in itertools.combinations(faces, r):
            chosen = set(combo)
            if all(f2 in chosen for f in chosen for f2 in map(frozenset, _subsets(f))):
                out.append(frozenset(chosen))
    return out


def _subsets(face: frozenset[int]):
    members = sorted(face)
    for r in range(len(members) + 1):
        yield from itertools.combinations(members, r)


def big_degree_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces F with the product of their variables outside the radical."""
    require_proper_nonzero(ideal, "big_degree_complex")
    rad = radical(ideal)
    d = ideal.dim
    faces = []
    for r in range(d + 1):
        for combo in itertools.combinations(range(d), r):
            indicator = tuple(int(j in combo) for j in range(d))
            if not contains(rad, indicator):
                faces.append(combo)
    return SimplicialComplex.from_faces(range(d), faces)


def lc_length_scaled(ideal: MonomialIdeal, i: int, n: int,
                     den: int | None = None) -> int:
    """Length of H^i_m(R / I^(n/den)) by scaled Newton-polyhedron counts.

    den defaults to the canonical denominator e of the ideal.  Each potential
    degree complex is a subcomplex of the radical complex; the number of
    ordinary degrees realizing it is an exact lattice count over the scaled
    projections.  Raises UnboundedRegion when the length is infinite.
    """
    require_proper_nonzero(ideal, "lc_length_scaled")
    if den is None:
        den = rees_valuations(ideal).e
    if n < 1 or den < 1:
        raise ValueError("n and den must be positive")
    scale = Fraction(1, den)
    big = big_degree_complex(ideal)
    total = 0
    for faces in _subcomplexes(big):
        if not faces:
            continue  # the void complex is realized only by members of the unit ideal
        sub = SimplicialComplex.from_faces(big.ground, faces)
        h = reduced_homology(sub, i - 1)
        if h == 0:
            continue
        inside = []
        impossible = False
        minimal_nonfaces = _minimal_nonfaces(sub, ideal.dim)
        for nf in minimal_nonfaces:
            proj = project(ideal, nf)
            if proj.is_unit:
                continue  # membership in the unit ideal holds for free
            inside.append(newton_polyhedron(proj).scaled(scale))
        outside = []
        for facet in sub.facets:
            proj = project(ideal, facet)
            if proj.is_unit:
                impossible = True  # nothing avoids the unit ideal
                break
            outside.append(newton_polyhedron(proj).scaled(scale))
        if impossible:
            continue
        total += h * count_region(inside, outside, n)
    return total


def _minimal_nonfaces(complex_: SimplicialComplex, d: int) -> list[frozenset[int]]:
    faces = complex_.faces()
    nonfaces = [frozenset(c) for r in range(d + 1)
                for c in itertools.combinations(range(d), r)
                if frozenset(c) not in faces]
    return [nf for nf in nonfaces if not any(other < nf for other in nonfaces)]


def standard_monomial_count(ideal: MonomialIdeal) -> int:
    """Length of R/I for an m-primary monomial ideal (count of monomials outside)."""
    require_proper_nonzero(ideal, "standard_monomial_count")
    d = ideal.dim
    pure = [None] * d
    for g in ideal.gens:
        support = [j for j in range(d) if g[j]]
        if len(support) == 1:
            j = support[0]
            pure[j] = g[j] if pure[j] is None else min(pure[j], g[j])
    if any(p is None for p in pure):
        raise ValueError("ideal is not primary to the maximal ideal")
    member = upset_grid(ideal.gens, tuple(p for p in pure))
    return int(member.size - member.sum())
