"""Independent oracles used only by the tests.

The Newton-polyhedron oracle avoids the package's double description engine
entirely: candidate facets come from exhaustive d-subsets of the homogenized
generators with integer cofactor normals, validity is checked against every
generator, and membership is the conjunction of all valid inequalities
(redundant ones included, which cannot change the intersection).
"""

from fractions import Fraction
from itertools import combinations, product

import numpy as np

from ratpow.ideals import MonomialIdeal, colon_by_monomial, contains, minimal_generators


def int_det(rows) -> int:
    """Integer determinant by fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def oracle_np_inequalities(gens, d):
    """All valid inequalities (y0, a) with y0 + a . x >= 0 on conv(gens) + orthant,
    spanned by d-subsets of the homogenized generators."""
    vectors = [(1,) + tuple(g) for g in gens]
    vectors += [(0,) + tuple(int(j == k) for k in range(d)) for j in range(d)]
    found = set()
    for subset in combinations(vectors, d):
        normal = []
        for omit in range(d + 1):
            minor = [[row[c] for c in range(d + 1) if c != omit] for row in subset]
            normal.append((-1) ** omit * int_det(minor))
        if all(v == 0 for v in normal):
            continue
        sides = [sum(a * b for a, b in zip(normal, vec)) for vec in vectors]
        if all(s >= 0 for s in sides):
            found.add(tuple(normal))
        elif all(s <= 0 for s in sides):
            found.add(tuple(-v for v in normal))
    return sorted(found)


def oracle_np_member_mask(gens, d, box: int) -> np.ndarray:
    """Boolean grid over [0, box]^d marking membership in conv(gens) + orthant."""
    ineqs = oracle_np_inequalities(gens, d)
    shape = (box + 1,) * d
    pts = np.stack([g.ravel() for g in np.indices(shape, dtype=np.int64)], axis=1)
    ok = np.ones(len(pts), dtype=bool)
    for y in ineqs:
        ok &= pts @ np.array(y[1:], dtype=np.int64) + y[0] >= 0
    return ok.reshape(shape)


def oracle_closure_gens(ideal: MonomialIdeal, box: int | None = None):
    """Antichain of minimal lattice points of the Newton polyhedron."""
    d = ideal.dim
    if box is None:
        box = max(e for g in ideal.gens for e in g) + 1
    member = oracle_np_member_mask(ideal.gens, d, box)
    minimal = member.copy()
    for j in range(d):
        upper = [slice(None)] * d
        lower = [slice(None)] * d
        upper[j] = slice(1, None)
        lower[j] = slice(None, -1)
        minimal[tuple(upper)] &= ~member[tuple(lower)]
    pts = [tuple(int(c) for c in idx) for idx in np.argwhere(minimal)]
    return tuple(sorted(pts, key=lambda p: (sum(p), p)))


def oracle_np_contains(ideal: MonomialIdeal, point) -> bool:
    ineqs = oracle_np_inequalities(ideal.gens, ideal.dim)
    pt = [Fraction(x) for x in point]
    if any(x < 0 for x in pt):
        return False
    return all(y[0] + sum(a * x for a, x in zip(y[1:], pt)) >= 0 for y in ineqs)


def naive_associated_primes(ideal: MonomialIdeal):
    """Direct witness search: supports S with (I : m) = P_S for some divisor m
    of the generator lcm."""
    d = ideal.dim
    lcm = [max(g[j] for g in ideal.gens) for j in range(d)]
    supports = set()
    for m in product(*(range(e + 1) for e in lcm)):
        if contains(ideal, m):
            continue
        colon = colon_by_monomial(ideal, m)
        gens = set(colon.gens)
        if all(sum(g) == 1 for g in gens):
            supports.add(frozenset(j for g in gens for j in range(d) if g[j]))
    return supports


def brute_upset_member(gens, point) -> bool:
    return any(all(g[j] <= point[j] for j in range(len(point))) for g in gens)


def brute_count_outside(weights, thresholds, box: int) -> int:
    """Count lattice points in [0, box]^d failing at least one weight bound."""
    d = len(weights[0])
    count = 0
    for p in product(range(box + 1), repeat=d):
        if any(sum(w * x for w, x in zip(weight, p)) < t
               for weight, t in zip(weights, thresholds)):
            count += 1
    return count


def brute_minimal_points(weights, n: int, box: int):
    """Box enumeration of the minimal points with all weights >= n."""
    d = len(weights[0])
    member = {}
    for p in product(range(box + 1), repeat=d):
        member[p] = all(sum(w * x for w, x in zip(weight, p)) >= n
                        for weight in weights)
    out = []
    for p, ok in member.items():
        if not ok:
            continue
        smaller = [tuple(p[k] - (1 if k == j else 0) for k in range(d))
                   for j in range(d) if p[j] > 0]
        if not any(member[q] for q in smaller):
            out.append(p)
    return tuple(sorted(out, key=lambda q: (sum(q), q)))


def squarefree_part(ideal: MonomialIdeal) -> MonomialIdeal:
    gens = [tuple(min(e, 1) for e in g) for g in ideal.gens]
    return MonomialIdeal.from_gens(gens, var_names=ideal.var_names, dim=ideal.dim)


def minimized(gens):
    return tuple(sorted(minimal_generators(gens), key=lambda p: (sum(p), p)))
