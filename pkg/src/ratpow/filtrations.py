"""Hyperplane families of monomial ideals, symbolic powers, and splitting checks.

A family {I_sigma} is cut out by integral halfspaces (a_i; f_i): the monomial
x^alpha lies in I_sigma exactly when a_i . alpha >= sigma * f_i for every i.
Every such family is, up to the scaling worked out in ``family_to_ideal``,
the filtration of rational powers of a single monomial ideal; for squarefree
ideals the family of support-sum halfspaces of the minimal primes realizes
the symbolic powers this way.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Sequence

from .errors import ParseError
from .ideals import (Exponent, MonomialIdeal, contains, intersect,
                     minimal_generators, minimal_primes, require_proper_nonzero)
from .polyhedra import (IntegralHalfspace, _facets_from_homogenized,
                        _scan_minimal_points, newton_polyhedron,
                        vertices_from_halfspaces)
from .rational_powers import rational_power, rees_valuations


@dataclass(frozen=True)
class HyperplaneFamily:
    """Canonicalized irredundant halfspace list defining an indexed ideal family."""

    dim: int
    halfspaces: tuple[IntegralHalfspace, ...]
    var_names: tuple[str, ...]

    @classmethod
    def build(cls, halfspaces: Sequence[IntegralHalfspace], dim: int,
              var_names: Sequence[str] | None = None) -> "HyperplaneFamily":
        """Drop vacuous and redundant halfspaces; keep exactly the facets of
        the sigma = 1 region."""
        from .ideals import default_var_names

        names = tuple(var_names) if var_names is not None else default_var_names(dim)
        kept = sorted({h for h in halfspaces if h.threshold > 0},
                      key=lambda h: (h.normal, h.threshold))
        if not kept:
            raise ParseError("family needs at least one halfspace with positive threshold")
        if any(len(h.normal) != dim for h in kept):
            raise ParseError("halfspace dimension mismatch")
        vertices, _ = vertices_from_halfspaces(kept, dim)
        rows = [(1,) + v for v in vertices]
        rows += [(0,) + tuple(int(j == k) for k in range(dim)) for j in range(dim)]
        facets = _facets_from_homogenized(rows, dim)
        return cls(dim, facets, names)

    def thresholds_at(self, sigma: Fraction) -> list[int]:
        p, q = sigma.numerator, sigma.denominator
        return [-((-p * h.threshold) // q) for h in self.halfspaces]


def family_from_doc(doc: dict) -> HyperplaneFamily:
    try:
        names = tuple(str(v) for v in doc["vars"])
        halfspaces = [IntegralHalfspace(tuple(int(a) for a in h["normal"]),
                                        int(h["threshold"]))
                      for h in doc["halfspaces"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad family document: {exc}") from exc
    return HyperplaneFamily.build(halfspaces, len(names), names)


def parse_family(text: str) -> HyperplaneFamily:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad family document: {exc}") from exc
    return family_from_doc(doc)


def family_index(family: HyperplaneFamily, sigma) -> MonomialIdeal:
    """The ideal I_sigma = { alpha : a_i . alpha >= sigma * f_i for all i }.

    Integrality of the normals rounds sigma up to the nearest index of the
    form (integer)/lcm(f_i), so the family is really indexed by naturals.
    """
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    gens = _scan_minimal_points([h.normal for h in family.halfspaces],
                                family.thresholds_at(sigma))
    return MonomialIdeal.from_gens(gens, var_names=family.var_names, dim=family.dim)


@dataclass(frozen=True)
class FamilyResult:
    """Outcome of converting a hyperplane family into rational powers.

    ``ideal`` raised to sigma/denominator reproduces the family member at
    sigma; ``period`` is the lcm of the halfspace thresholds, ``e`` the
    canonical denominator of ``ideal``, and ``reduction_factors`` the gcd
    factors relating the input halfspaces to the facets of the scaled region.
    """

    ideal: MonomialIdeal
    denominator: int            # g: the minimal scaling with lattice vertices
    period: int                 # f = lcm of the thresholds
    e: int
    reduction_factors: tuple[int, ...]
    vertices: tuple[tuple[Fraction, ...], ...]


@lru_cache(maxsize=None)
def family_to_ideal(family: HyperplaneFamily) -> FamilyResult:
    """Scale the sigma = 1 region to lattice vertices and read off the ideal.

    g is the lcm of the vertex coordinate denominators; the ideal J generated
    by the g-scaled vertices has the g-scaled region as Newton polyhedron, so
    I_sigma = J^(sigma/g) for every positive rational sigma.  Both facts are
    certified here: the polyhedron comparison exactly, the power identity on
    sampled indices.
    """
    vertices, rays = vertices_from_halfspaces(family.halfspaces, family.dim)
    if not vertices:
        raise ValueError("family region has no vertex")
    g = 1
    for v in vertices:
        for c in v:
            g = lcm(g, Fraction(c).denominator)
    gens = [tuple(int(g * c) for c in v) for v in vertices]
    ideal = MonomialIdeal.from_gens(gens, var_names=family.var_names, dim=family.dim)

    poly = newton_polyhedron(ideal)
    expected = set()
    factors = []
    for h in family.halfspaces:
        m = h.threshold * g
        for a in h.normal:
            m = gcd(m, a)
        factors.append(m)
        expected.add(IntegralHalfspace(tuple(a // m for a in h.normal),
                                       h.threshold * g // m))
    if set(poly.facets) != expected:
        raise AssertionError("scaled family region is not the Newton polyhedron")
    if set(poly.vertices) != {tuple(Fraction(g) * c for c in v) for v in vertices}:
        raise AssertionError("scaled vertices do not match the hull vertices")

    e = rees_valuations(ideal).e
    period = lcm(*(h.threshold for h in family.halfspaces))
    if (period * g) % e:
        raise AssertionError("canonical denominator does not divide period * scaling")
    for sigma in (Fraction(1), Fraction(3, 2)):
        if family_index(family, sigma) != rational_power(ideal, sigma / g):
            raise AssertionError(f"family member at {sigma} is not the rational power")
    return FamilyResult(ideal, g, period, e, tuple(factors), vertices)


# ---------------------------------------------------------------------------
# symbolic powers of squarefree ideals

def prime_power_gens(support: Sequence[int], n: int, dim: int) -> tuple[Exponent, ...]:
    """Generators of P^n for the monomial prime on ``support``: all exponent
    vectors on the support with total degree n."""
    support = sorted(support)
    out = []
    for cuts in itertools.combinations_with_replacement(range(len(support)), n):
        exp = [0] * dim
        for c in cuts:
            exp[support[c]] += 1
        out.append(tuple(exp))
    return minimal_generators(out)


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Intersection of the n-th powers of the minimal primes (squarefree case)."""
    require_proper_nonzero(I, "symbolic_power")
    if not I.is_squarefree:
        raise ValueError("symbolic_power needs a squarefree ideal")
    if n < 1:
        raise ValueError("n must be positive")
    result = None
    for p in sorted(minimal_primes(I), key=lambda q: q.sorted_support()):
        piece = MonomialIdeal.from_gens(prime_power_gens(p.sorted_support(), n, I.dim),
                                        var_names=I.var_names, dim=I.dim)
        result = piece if result is None else intersect(result, piece)
    return result


def symbolic_family(I: MonomialIdeal, certify_up_to: int = 4) -> FamilyResult:
    """Hyperplane family of the minimal primes, converted to rational powers.

    The support-sum of each minimal prime bounds membership in its powers, so
    the symbolic powers are the family members at integer indices; the result
    is certified against the intersection-based symbolic powers up to the
    given index.
    """
    require_proper_nonzero(I, "symbolic_family")
    if not I.is_squarefree:
        raise ValueError("symbolic_family needs a squarefree ideal")
    halfspaces = []
    for p in minimal_primes(I):
        normal = tuple(int(j in p.support) for j in range(I.dim))
        halfspaces.append(IntegralHalfspace(normal, 1))
    family = HyperplaneFamily.build(halfspaces, I.dim, I.var_names)
    result = family_to_ideal(family)
    g = result.denominator
    if result.ideal != symbolic_power(I, g):
        raise AssertionError("family ideal is not the g-th symbolic power")
    for n in range(1, certify_up_to + 1):
        if symbolic_power(I, n) != rational_power(result.ideal, Fraction(n, g)):
            raise AssertionError(f"symbolic power {n} is not the rational power {n}/{g}")
    return result


def symbolic_generator_ideal(I: MonomialIdeal,
                             certify_up_to: int = 4) -> tuple[int, MonomialIdeal]:
    result = symbolic_family(I, certify_up_to)
    return result.denominator, result.ideal


# ---------------------------------------------------------------------------
# splitting verification

@dataclass(frozen=True)
class SplitReport:
    """Outcome of the Frobenius-like splitting containment check."""

    m: int
    n_max: int
    passed: bool
    failures: tuple[tuple[int, int, Exponent], ...]  # (n, j, beta)


def check_splitting(accessor: Callable[[int], MonomialIdeal], m: int,
                    n_max: int) -> SplitReport:
    """Verify the splitting-image containment for an indexed ideal filtration.

    For every n <= n_max and 1 <= j <= m, each minimal beta with
    m * beta in I_(n*m + j) must lie in I_(n+1).  The minimal such beta are
    the componentwise ceilings of the generators of I_(n*m + j) divided by m,
    minimized; the report carries the first-witnessed failures.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    failures = []
    for n in range(n_max + 1):
        target_next = accessor(n + 1)
        for j in range(1, m + 1):
            source = accessor(n * m + j)
            pulled = minimal_generators(
                tuple(-(-gi // m) for gi in gen) for gen in source.gens)
            for beta in pulled:
                if not contains(target_next, beta):
                    failures.append((n, j, beta))
    return SplitReport(m, n_max, not failures, tuple(failures))


def rational_power_filtration(I: MonomialIdeal) -> Callable[[int], MonomialIdeal]:
    """Accessor k -> I^(k/e) for the canonically indexed rational powers."""
    require_proper_nonzero(I, "rational_power_filtration")
    e = rees_valuations(I).e

    def accessor(k: int) -> MonomialIdeal:
        return rational_power(I, Fraction(k, e))

    return accessor
