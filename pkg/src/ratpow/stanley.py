"""Exact Stanley depth at desk scale, plus membership power equivalences.

Stanley depth of a monomial ideal or quotient reduces to interval
partitions of a finite multidegree poset: truncate at the componentwise
maximum of the generator exponents, partition the surviving degrees into
intervals [a, b], and read the dimension of an interval off the number of
coordinates where b touches the truncation bound.  The search below is an
exhaustive backtracking over such partitions; it either returns the exact
value or refuses the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateIdeal, DeskScaleExceeded
from .ideals import Exponent, MonomialIdeal, contains, grlex_key
from .rational_powers import rees_valuations

_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class StanleyInstance:
    """A truncated Stanley-depth instance for an ideal I or a quotient.

    kind "ideal" takes the degrees inside I; kind "quotient" takes the
    degrees outside I, or inside I and outside ``sub`` when a sub-ideal is
    given (the module I/sub).  The truncation bound must dominate every
    generator exponent in sight.
    """

    kind: str
    ideal: MonomialIdeal
    sub: MonomialIdeal | None = None
    bound: Exponent | None = None

    def __post_init__(self):
        if self.kind not in ("ideal", "quotient"):
            raise ValueError("kind must be 'ideal' or 'quotient'")
        if self.sub is not None and self.sub.dim != self.ideal.dim:
            raise ValueError("sub-ideal dimension mismatch")
        if self.bound is not None:
            floor = self._default_bound()
            if any(b < f for b, f in zip(self.bound, floor)):
                raise ValueError("bound must dominate all generator exponents")

    def _default_bound(self) -> Exponent:
        d = self.ideal.dim
        gens = list(self.ideal.gens)
        if self.sub is not None:
            gens += list(self.sub.gens)
        return tuple(max((g[j] for g in gens), default=0) for j in range(d))

    def effective_bound(self) -> Exponent:
        return self.bound if self.bound is not None else self._default_bound()

    def member(self, alpha: Exponent) -> bool:
        if self.kind == "ideal":
            return contains(self.ideal, alpha)
        if self.sub is not None:
            return contains(self.ideal, alpha) and not contains(self.sub, alpha)
        return not contains(self.ideal, alpha)


def _check_limits(dim: int, bound: Exponent) -> None:
    if dim > 4:
        raise DeskScaleExceeded("Stanley depth limited to at most 4 variables")
    cap = 25 if dim <= 2 else 8
    if any(b > cap for b in bound):
        raise DeskScaleExceeded(
            f"truncation bound {bound} exceeds the desk-scale cap {cap}")


def sdepth_exact(instance: StanleyInstance) -> int:
    """Exact Stanley depth by backtracking over interval partitions.

    A partition always exists with singleton intervals, so the answer is the
    largest t for which every point can be covered by disjoint poset
    intervals whose upper ends touch the truncation bound in at least t
    coordinates.
    """
    bound = instance.effective_bound()
    d = instance.ideal.dim
    _check_limits(d, bound)
    box = itertools.product(*(range(b + 1) for b in bound))
    poset = sorted((p for p in box if instance.member(p)), key=grlex_key)
    if not poset:
        raise DegenerateIdeal("module vanishes on the truncation box")
    poset_set = set(poset)

    def walls(b: Exponent) -> int:
        return sum(1 for j in range(d) if b[j] == bound[j])

    def interval(p: Exponent, q: Exponent) -> frozenset[Exponent]:
        return frozenset(itertools.product(*(range(pj, qj + 1)
                                             for pj, qj in zip(p, q))))

    def feasible(t: int) -> bool:
        # intervals fully inside the poset whose top touches >= t walls
        candidates: dict[Exponent, list[frozenset[Exponent]]] = {}
        for p in poset:
            cells = []
            for q in poset:
                if walls(q) < t or not all(pj <= qj for pj, qj in zip(p, q)):
                    continue
                cell = interval(p, q)
                if cell <= poset_set:
                    cells.append(cell)
            if not cells:
                return False  # p can never be the bottom of a valid interval
            cells.sort(key=len, reverse=True)
            candidates[p] = cells
        budget = _NODE_BUDGET
        failed: set[frozenset[Exponent]] = set()

        def cover(uncovered: frozenset[Exponent]) -> bool:
            nonlocal budget
            if not uncovered:
                return True
            if uncovered in failed:
                return False
            budget -= 1
            if budget < 0:
                raise DeskScaleExceeded(
                    "interval partition search exceeded the node budget")
            p = min(uncovered, key=grlex_key)
            for cell in candidates[p]:
                if cell <= uncovered and cover(uncovered - cell):
                    return True
            failed.add(uncovered)
            return False

        return cover(frozenset(poset))

    for t in range(d, 0, -1):
        if feasible(t):
            return t
    return 0


def sdepth_quotient(ideal: MonomialIdeal, bound: Exponent | None = None) -> int:
    return sdepth_exact(StanleyInstance("quotient", ideal, bound=bound))


def sdepth_ideal(ideal: MonomialIdeal, bound: Exponent | None = None) -> int:
    return sdepth_exact(StanleyInstance("ideal", ideal, bound=bound))


# ---------------------------------------------------------------------------
# membership power equivalences behind the Stanley depth comparisons

@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the two membership equivalences at one parameter choice.

    ``shift_holds``: x in I^(m/e)  iff  x^(k+1) in I^((km+j)/e).
    ``power_holds``: x in I^(s/e)  iff  x^k in I^(ks/e).
    ``naive_power_form_holds`` tracks the variant with x^s in place of x^k;
    it is reported for reference and not asserted anywhere.
    """

    params: tuple[int, int, int, int]
    shift_holds: bool
    power_holds: bool
    naive_power_form_holds: bool

    @property
    def passed(self) -> bool:
        return self.shift_holds and self.power_holds


def power_equivalences(ideal: MonomialIdeal, f: Exponent,
                       params: tuple[int, int, int, int]) -> EquivalenceReport:
    """Check the membership equivalences for the monomial x^f at (m, k, j, s)."""
    m, k, j, s = params
    if not (1 <= k <= m):
        raise ValueError("need 1 <= k <= m")
    if not (m - k <= j <= m):
        raise ValueError("need m - k <= j <= m")
    if s < 1:
        raise ValueError("need s >= 1")
    data = rees_valuations(ideal)
    values = [sum(w * x for w, x in zip(weight, f)) for weight in data.weights]

    def member(numerator: int, multiple: int) -> bool:
        return all(multiple * v >= numerator for v in values)

    shift = member(m, 1) == member(k * m + j, k + 1)
    power_form = member(s, 1) == member(k * s, k)
    naive = member(s, 1) == member(k * s, s)
    return EquivalenceReport((m, k, j, s), shift, power_form, naive)


def sdepth_rational_power_sequence(ideal: MonomialIdeal, n_max: int,
                                   quotient: bool = True) -> list[int]:
    """Stanley depths of I^(n/e) (or of the quotients) for n = 1..n_max."""
    from .rational_powers import rational_power

    e = rees_valuations(ideal).e
    out = []
    for n in range(1, n_max + 1):
        item = rational_power(ideal, Fraction(n, e))
        inst = StanleyInstance("quotient" if quotient else "ideal", item)
        out.append(sdepth_exact(inst))
    return out
