"""Rees valuations, the canonical denominator e, and rational powers.

Monomial membership in any rational power reduces to finitely many integer
weight inequalities: each non-coordinate facet of the Newton polyhedron is
a monomial valuation v with v(I) equal to the facet threshold, and after
scaling by e / v(I) the test  x^a in I^(n/e)  becomes  w(a) >= n  for every
normalized weight w, with e the lcm of the v(I).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DimensionMismatch, ParseError
from .ideals import (Exponent, MonomialIdeal, require_proper_nonzero,
                     unit_ideal)
from .polyhedra import minimal_points_above, newton_polyhedron

RationalIndex = Fraction


def as_index(value) -> Fraction:
    """Coerce an exponent index given as Fraction, int, or an ``a/b`` string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational index {value!r}: {exc}") from exc
    raise ParseError(f"bad rational index {value!r}")


@dataclass(frozen=True)
class MonomialValuation:
    """Monomial valuation recorded by its values on the variables."""

    weights: tuple[int, ...]
    value_on_ideal: int

    def __post_init__(self):
        g = 0
        for w in self.weights:
            g = gcd(g, w)
        if g != 1:
            raise ValueError("valuation weights must be coprime")
        if self.value_on_ideal <= 0:
            raise ValueError("value on the ideal must be positive")

    def value(self, exp: Exponent) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))


@dataclass(frozen=True)
class ReesData:
    """Rees valuations of an ideal with the canonical denominator.

    ``weights`` are the normalized forms (e / v(I)) * v, so that membership
    in I^(n/e) is the uniform bound  w(a) >= n  over all of them.
    """

    valuations: tuple[MonomialValuation, ...]
    weights: tuple[tuple[int, ...], ...]
    e: int

    @property
    def pairs(self) -> tuple[tuple[MonomialValuation, tuple[int, ...]], ...]:
        return tuple(zip(self.valuations, self.weights))


@lru_cache(maxsize=None)
def rees_valuations(ideal: MonomialIdeal) -> ReesData:
    """One valuation per non-coordinate facet of NP(I), plus e = lcm of v(I)."""
    require_proper_nonzero(ideal, "rees_valuations")
    poly = newton_polyhedron(ideal)
    vals = []
    for facet in poly.facets:
        v = MonomialValuation(facet.normal, facet.threshold)
        if min(v.value(g) for g in ideal.gens) != facet.threshold:
            raise AssertionError("facet threshold is not the minimum over generators")
        vals.append(v)
    e = lcm(*(v.value_on_ideal for v in vals))
    weights = tuple(tuple((e // v.value_on_ideal) * w for w in v.weights) for v in vals)
    return ReesData(tuple(vals), weights, e)


def canonical_denominator(ideal: MonomialIdeal) -> int:
    return rees_valuations(ideal).e


def index_numerator(ideal: MonomialIdeal, idx) -> int:
    """Convert a rational index a/b to the canonical numerator ceil(e*a/b)."""
    idx = as_index(idx)
    e = rees_valuations(ideal).e
    return -((-e * idx.numerator) // idx.denominator)


def member_rational(ideal: MonomialIdeal, idx, m: Exponent) -> bool:
    """Is x^m in the idx-th rational power of the ideal."""
    if len(m) != ideal.dim:
        raise DimensionMismatch(f"point {m} vs dim {ideal.dim}")
    idx = as_index(idx)
    if idx <= 0:
        return True
    data = rees_valuations(ideal)
    n = index_numerator(ideal, idx)
    return all(sum(w * x for w, x in zip(weight, m)) >= n for weight in data.weights)


@lru_cache(maxsize=None)
def _rational_power_canonical(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    data = rees_valuations(ideal)
    gens = minimal_points_above(data.weights, n)
    return MonomialIdeal.from_gens(gens, var_names=ideal.var_names, dim=ideal.dim)


def rational_power(ideal: MonomialIdeal, idx) -> MonomialIdeal:
    """Minimal generators of I^(a/b), the monomials x with x^b in closure(I^a).

    The index 0 gives the unit ideal, consistent with filtration conventions.
    """
    idx = as_index(idx)
    if idx < 0:
        raise ValueError("negative index")
    if idx == 0:
        return unit_ideal(ideal.dim, ideal.var_names)
    require_proper_nonzero(ideal, "rational_power")
    return _rational_power_canonical(ideal, index_numerator(ideal, idx))


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Smallest integrally closed ideal containing I: the lattice points of NP(I)."""
    return rational_power(ideal, Fraction(1))
