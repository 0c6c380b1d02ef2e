"""Exact representation and algebra of monomial ideals.

A monomial ideal in K[x_1,..,x_d] is stored as the antichain of exponent
vectors of its minimal generators; the ideal itself is the componentwise
up-set of that antichain.  All operations are pure functions on immutable
values and return generator sets that are again antichains, sorted in
graded lexicographic order so that emitted output is byte-deterministic.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DegenerateIdeal, DimensionMismatch, ParseError

Exponent = tuple[int, ...]

_DEFAULT_NAMES = ("x", "y", "z", "w", "u", "v", "s", "t")


def default_var_names(d: int) -> tuple[str, ...]:
    if d <= len(_DEFAULT_NAMES):
        return _DEFAULT_NAMES[:d]
    return tuple(f"x{i + 1}" for i in range(d))


def grlex_key(exp: Exponent) -> tuple:
    # ascending total degree, descending lex inside a degree: x^2 before x*y
    return (sum(exp), tuple(-e for e in exp))


def grlex_sorted(exps: Iterable[Exponent]) -> tuple[Exponent, ...]:
    return tuple(sorted(set(exps), key=grlex_key))


def leq(a: Exponent, b: Exponent) -> bool:
    """Componentwise comparison: does x^a divide x^b."""
    return all(ai <= bi for ai, bi in zip(a, b))


def minimal_generators(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    """Antichain of componentwise-minimal elements of a finite exponent set."""
    unique = sorted(set(tuple(int(e) for e in g) for g in gens), key=grlex_key)
    out: list[Exponent] = []
    for g in unique:
        if not any(leq(h, g) for h in out):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by minimal generators (graded-lex sorted antichain).

    The zero ideal is the instance with no generators and ``is_zero`` set;
    the unit ideal is generated by the zero exponent vector.
    """

    dim: int
    gens: tuple[Exponent, ...]
    var_names: tuple[str, ...]
    is_zero: bool = False

    def __post_init__(self):
        if self.is_zero and self.gens:
            raise ValueError("zero ideal must have no generators")
        if not self.is_zero and not self.gens:
            raise ValueError("nonzero ideal needs at least one generator")
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatch(f"generator {g} does not have length {self.dim}")
            if any(e < 0 for e in g):
                raise ParseError(f"negative exponent in generator {g}")
        if len(self.var_names) != self.dim:
            raise DimensionMismatch("variable name count does not match dim")

    @classmethod
    def from_gens(cls, gens: Iterable[Exponent], var_names: Sequence[str] | None = None,
                  dim: int | None = None) -> "MonomialIdeal":
        gens = [tuple(int(e) for e in g) for g in gens]
        if dim is None:
            if not gens:
                raise ValueError("dim required for the zero ideal")
            dim = len(gens[0])
        names = tuple(var_names) if var_names is not None else default_var_names(dim)
        if not gens:
            return cls(dim, (), names, is_zero=True)
        return cls(dim, minimal_generators(gens), names)

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return not self.is_zero and all(e <= 1 for g in self.gens for e in g)

    def monomial_str(self, exp: Exponent) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.var_names, exp) if e]
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.monomial_str(g) for g in self.gens) + ")"


def zero_ideal(dim: int, var_names: Sequence[str] | None = None) -> MonomialIdeal:
    names = tuple(var_names) if var_names is not None else default_var_names(dim)
    return MonomialIdeal(dim, (), names, is_zero=True)


def unit_ideal(dim: int, var_names: Sequence[str] | None = None) -> MonomialIdeal:
    names = tuple(var_names) if var_names is not None else default_var_names(dim)
    return MonomialIdeal(dim, ((0,) * dim,), names)


def require_proper_nonzero(ideal: MonomialIdeal, op: str) -> None:
    if ideal.is_zero:
        raise DegenerateIdeal(f"{op}: zero ideal")
    if ideal.is_unit:
        raise DegenerateIdeal(f"{op}: unit ideal")


@dataclass(frozen=True)
class MonomialPrime:
    """Prime ideal generated by a nonempty subset of the variables (0-based indices)."""

    support: frozenset[int]
    dim: int

    def __post_init__(self):
        if not self.support:
            raise ValueError("monomial prime needs nonempty support")
        if any(i < 0 or i >= self.dim for i in self.support):
            raise DimensionMismatch("support index out of range")

    def as_ideal(self, var_names: Sequence[str] | None = None) -> MonomialIdeal:
        gens = [tuple(int(i == j) for j in range(self.dim)) for i in sorted(self.support)]
        return MonomialIdeal.from_gens(gens, var_names=var_names, dim=self.dim)

    def sorted_support(self) -> tuple[int, ...]:
        return tuple(sorted(self.support))

    def label(self, var_names: Sequence[str]) -> str:
        return "(" + ",".join(var_names[i] for i in self.sorted_support()) + ")"


# ---------------------------------------------------------------------------
# parsing and document IO

_MONOMIAL_TOKEN = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*(\^\s*-?\d+)?$")


def _parse_monomial(text: str, var_index: dict[str, int], d: int) -> Exponent:
    exp = [0] * d
    text = text.strip()
    if text in ("1", ""):
        if text == "":
            raise ParseError("empty monomial token")
        return tuple(exp)
    for factor in text.split("*"):
        factor = factor.strip()
        if not _MONOMIAL_TOKEN.match(factor):
            raise ParseError(f"malformed token {factor!r}")
        if "^" in factor:
            name, power = factor.split("^", 1)
            name = name.strip()
            e = int(power)
        else:
            name, e = factor, 1
        if e < 0:
            raise ParseError(f"negative exponent in {factor!r}")
        if name not in var_index:
            raise ParseError(f"unknown variable {name!r}")
        exp[var_index[name]] += e
    return tuple(exp)


def parse_ideal(text: str, var_names: Sequence[str] | None = None) -> MonomialIdeal:
    """Parse a generator-list string like ``"x^2*y, y^3"`` or a JSON ideal document.

    The JSON form is ``{"vars": ["x","y"], "gens": [[2,1],[0,3]]}``.  String
    input needs the variable order passed in ``var_names``.  Generators are
    minimized and sorted graded-lex.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad ideal document: {exc}") from exc
        return ideal_from_doc(doc)
    if var_names is None:
        raise ParseError("variable names required for generator-list syntax")
    names = tuple(var_names)
    index = {n: i for i, n in enumerate(names)}
    gens = [_parse_monomial(tok, index, len(names)) for tok in stripped.split(",")]
    return MonomialIdeal.from_gens(gens, var_names=names, dim=len(names))


def ideal_from_doc(doc: dict) -> MonomialIdeal:
    try:
        names = tuple(str(v) for v in doc["vars"])
        gens = [tuple(int(e) for e in g) for g in doc["gens"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad ideal document: {exc}") from exc
    for g in gens:
        if len(g) != len(names):
            raise ParseError(f"generator {g} does not match vars {names}")
        if any(e < 0 for e in g):
            raise ParseError(f"negative exponent in generator {g}")
    return MonomialIdeal.from_gens(gens, var_names=names, dim=len(names))


def ideal_to_doc(ideal: MonomialIdeal) -> dict:
    return {"vars": list(ideal.var_names), "gens": [list(g) for g in ideal.gens]}


# ---------------------------------------------------------------------------
# membership and ideal arithmetic

def contains(ideal: MonomialIdeal, m: Exponent) -> bool:
    """Is x^m in the ideal, i.e. does some minimal generator divide it."""
    if len(m) != ideal.dim:
        raise DimensionMismatch(f"point {m} vs dim {ideal.dim}")
    if ideal.is_zero:
        return False
    return any(leq(g, m) for g in ideal.gens)


def ideal_contains_ideal(outer: MonomialIdeal, inner: MonomialIdeal) -> bool:
    if outer.dim != inner.dim:
        raise DimensionMismatch("ideal dimensions differ")
    if inner.is_zero:
        return True
    return all(contains(outer, g) for g in inner.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.dim != J.dim:
        raise DimensionMismatch("product of ideals in different rings")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.dim, I.var_names)
    sums = [tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens]
    return MonomialIdeal.from_gens(sums, var_names=I.var_names, dim=I.dim)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    if n == 0:
        return unit_ideal(I.dim, I.var_names)
    out = I
    for _ in range(n - 1):
        out = product(out, I)
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.dim != J.dim:
        raise DimensionMismatch("intersection of ideals in different rings")
    if I.is_zero or J.is_zero:
        return zero_ideal(I.dim, I.var_names)
    joins = [tuple(max(a, b) for a, b in zip(g, h)) for g in I.gens for h in J.gens]
    return MonomialIdeal.from_gens(joins, var_names=I.var_names, dim=I.dim)


def colon_by_monomial(I: MonomialIdeal, m: Exponent) -> MonomialIdeal:
    """The ideal (I : x^m)."""
    if len(m) != I.dim:
        raise DimensionMismatch(f"point {m} vs dim {I.dim}")
    if I.is_zero:
        return zero_ideal(I.dim, I.var_names)
    shifted = [tuple(max(g_j - m_j, 0) for g_j, m_j in zip(g, m)) for g in I.gens]
    return MonomialIdeal.from_gens(shifted, var_names=I.var_names, dim=I.dim)


def project(I: MonomialIdeal, faces: Iterable[int]) -> MonomialIdeal:
    """Image of I under the map sending x_i to 1 for i in ``faces``.

    Realized on exponents by zeroing the chosen coordinates of every
    generator and minimizing again.
    """
    drop = set(faces)
    if I.is_zero:
        return zero_ideal(I.dim, I.var_names)
    gens = [tuple(0 if j in drop else e for j, e in enumerate(g)) for g in I.gens]
    return MonomialIdeal.from_gens(gens, var_names=I.var_names, dim=I.dim)


# ---------------------------------------------------------------------------
# prime-related decompositions

def minimal_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Minimal primes of a squarefree monomial ideal.

    These are the inclusion-minimal variable subsets meeting the support of
    every generator (minimal vertex covers of the generator hypergraph).
    """
    require_proper_nonzero(I, "minimal_primes")
    if not I.is_squarefree:
        raise ValueError("minimal_primes needs a squarefree ideal")
    supports = [frozenset(j for j, e in enumerate(g) if e) for g in I.gens]
    covers: list[frozenset[int]] = []
    for size in range(1, I.dim + 1):
        for cand in itertools.combinations(range(I.dim), size):
            cset = frozenset(cand)
            if any(c <= cset for c in covers):
                continue
            if all(cset & s for s in supports):
                covers.append(cset)
    return frozenset(MonomialPrime(c, I.dim) for c in covers)


def upset_grid(gens: Sequence[Exponent], shape: Sequence[int]):
    """Boolean grid over the box ``prod(range(s) for s in shape)`` marking the
    up-set of ``gens``; generators outside the box contribute nothing."""
    import numpy as np

    grid = np.zeros(tuple(shape), dtype=bool)
    for g in gens:
        if all(gj < sj for gj, sj in zip(g, shape)):
            grid[tuple(g)] = True
    for axis in range(len(shape)):
        np.logical_or.accumulate(grid, axis=axis, out=grid)
    return grid


def associated_primes(I: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Associated primes of R/I.

    A prime P_S is associated exactly when (I : x^m) = P_S for some monomial
    m outside I; witnesses are searched among the divisors of the
    componentwise lcm of the minimal generators.  The witness conditions
    reduce to the two membership tests below, evaluated on the whole divisor
    grid at once by up-set propagation.
    """
    require_proper_nonzero(I, "associated_primes")
    import numpy as np

    d = I.dim
    lcm = tuple(max(g[j] for g in I.gens) for j in range(d))
    shape = tuple(e + 1 for e in lcm)
    member = upset_grid(I.gens, shape)

    # member_shift[j][m] is true when x^(m + e_j) lies in I
    member_shift = []
    for j in range(d):
        rolled = np.zeros(shape, dtype=bool)
        src = [slice(None)] * d
        dst = [slice(None)] * d
        src[j] = slice(1, None)
        dst[j] = slice(0, shape[j] - 1)
        rolled[tuple(dst)] = member[tuple(src)]
        # beyond the lcm in direction j the monomial is in I iff it already is
        last = [slice(None)] * d
        last[j] = slice(shape[j] - 1, shape[j])
        rolled[tuple(last)] = member[tuple(last)]
        member_shift.append(rolled)

    out: list[MonomialPrime] = []
    for size in range(1, d + 1):
        for cand in itertools.combinations(range(d), size):
            s = frozenset(cand)
            # colon contained in P_S: no generator divides m on the S-coordinates
            proj_gens = [tuple(g[j] if j in s else 0 for j in range(d)) for g in I.gens]
            dominated_on_s = upset_grid(minimal_generators(proj_gens), shape)
            witness = ~dominated_on_s
            for j in cand:
                witness &= member_shift[j]
            if witness.any():
                out.append(MonomialPrime(s, d))
    return frozenset(out)
