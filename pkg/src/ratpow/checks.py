"""Built-in quick invariant suite behind the ``check`` subcommand.

A trimmed, dependency-free rerun of the library's core identities on fixed
small inputs: enough to flag a broken build in a second or two.  The full
property and acceptance suites live in the test tree.
"""

from __future__ import annotations

from fractions import Fraction

from .filtrations import (HyperplaneFamily, check_splitting, family_index,
                          family_to_ideal, rational_power_filtration,
                          symbolic_family, symbolic_power)
from .homology import betti_table, local_cohomology_table
from .ideals import MonomialIdeal, ideal_contains_ideal, parse_ideal, product
from .polyhedra import IntegralHalfspace
from .rational_powers import integral_closure, rational_power, rees_valuations
from .sweeps import ExperimentRecord, emit, normalized, parse_records

_MINI_CORPUS = [
    ("x^2, y^3", ("x", "y")),
    ("x*y, y*z, z*x", ("x", "y", "z")),
    ("x^2, x*y", ("x", "y")),
    ("x^3, x*y, y^2", ("x", "y")),
    ("x*y, z^2", ("x", "y", "z")),
    ("x^2*y, y^2*z, z^2*x", ("x", "y", "z")),
    ("x^2", ("x",)),
    ("x, y^4", ("x", "y")),
]


def _ideals() -> list[MonomialIdeal]:
    return [parse_ideal(text, names) for text, names in _MINI_CORPUS]


def check_triangle_example() -> bool:
    T = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
    res = symbolic_family(T)
    want_gens = {(1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2)}
    half = Fraction(1, 2)
    want_vertices = {(half, half, half), (1, 0, 1), (1, 1, 0), (0, 1, 1)}
    got_vertices = {tuple(v) for v in res.vertices}
    return (res.denominator == 2 and set(res.ideal.gens) == want_gens
            and res.e == 2
            and {tuple(Fraction(c) for c in v) for v in want_vertices} <= got_vertices)


def check_power_identities() -> bool:
    for ideal in _ideals():
        e = rees_valuations(ideal).e
        for a, b in ((1, 2), (2, 3), (3, 1)):
            if rational_power(ideal, Fraction(a, b)) != rational_power(ideal, Fraction(2 * a, 2 * b)):
                return False
            n = -((-e * a) // b)
            if rational_power(ideal, Fraction(a, b)) != rational_power(ideal, Fraction(n, e)):
                return False
        low = rational_power(ideal, Fraction(1, 2))
        high = rational_power(ideal, Fraction(3, 2))
        if not ideal_contains_ideal(low, high):
            return False
        closed = rational_power(ideal, Fraction(3, e))
        if integral_closure(closed) != closed:
            return False
        if not ideal_contains_ideal(rational_power(ideal, Fraction(5, 2)),
                                    product(low, rational_power(ideal, 2))):
            return False
        from .ideals import power
        for n in (1, 2, 3):
            if rational_power(ideal, Fraction(n * e, e)) != integral_closure(power(ideal, n)):
                return False
    return True


def check_family_engine() -> bool:
    families = [
        HyperplaneFamily.build([IntegralHalfspace((3, 2), 6)], 2),
        HyperplaneFamily.build([IntegralHalfspace((1, 1, 0), 1),
                                IntegralHalfspace((1, 0, 1), 1),
                                IntegralHalfspace((0, 1, 1), 1)], 3),
        HyperplaneFamily.build([IntegralHalfspace((2, 1), 2),
                                IntegralHalfspace((1, 3), 3)], 2),
    ]
    for family in families:
        res = family_to_ideal(family)
        if (res.period * res.denominator) % res.e:
            return False
        for sigma in (Fraction(1, 2), Fraction(2), Fraction(7, 3)):
            if family_index(family, sigma) != rational_power(res.ideal,
                                                             sigma / res.denominator):
                return False
    return True


def check_splittings() -> bool:
    for ideal in _ideals()[:4]:
        report = check_splitting(rational_power_filtration(ideal), 2, 2)
        if not report.passed:
            return False
    return True


def check_homology_oracles() -> bool:
    for ideal in _ideals()[:5]:
        table = local_cohomology_table(ideal)
        betti = betti_table(ideal)
        if table.depth != betti.depth_quotient:
            return False
        if table.regularity != betti.regularity_quotient:
            return False
    return True


def check_symbolic_subsequence() -> bool:
    T = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
    res = symbolic_family(T)
    for n in range(1, 7):
        if symbolic_power(T, n) != rational_power(res.ideal, Fraction(n, res.denominator)):
            return False
    return True


def check_emitters() -> bool:
    records = [ExperimentRecord(4, "4/2", "depth", 0, 12.5),
               ExperimentRecord(6, "6/6", "lclen_i0", 5, 0.25),
               ExperimentRecord(6, "6/6", "reg_slope_per_n", "1/2", 1.0)]
    if emit(records) != emit(records):
        return False
    parsed = parse_records(emit(records, "json"), "json")
    return parsed == normalized(records)


CHECKS = [
    ("triangle-symbolic-family", check_triangle_example),
    ("rational-power-identities", check_power_identities),
    ("hyperplane-family-engine", check_family_engine),
    ("splitting-containments", check_splittings),
    ("cohomology-vs-betti", check_homology_oracles),
    ("symbolic-subsequence", check_symbolic_subsequence),
    ("deterministic-emitters", check_emitters),
]


def run_all(verbose: bool = True) -> bool:
    ok = True
    for name, fn in CHECKS:
        try:
            passed = fn()
        except Exception as exc:  # a crash is a failure with a reason
            passed = False
            if verbose:
                print(f"FAIL {name}: {exc.__class__.__name__}: {exc}")
            ok = False
            continue
        if verbose:
            print(("PASS" if passed else "FAIL") + f" {name}")
        ok = ok and passed
    return ok
