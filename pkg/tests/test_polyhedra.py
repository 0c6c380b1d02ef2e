import itertools
from fractions import Fraction

import pytest

from oracles import (brute_count_outside, brute_minimal_points,
                     oracle_closure_gens, oracle_np_contains)
from ratpow.errors import DegenerateIdeal, UnboundedRegion
from ratpow.ideals import parse_ideal, unit_ideal
from ratpow.polyhedra import (HalfspaceQ, IntegralHalfspace, analytic_spread,
                              count_region, enumerate_faces, extreme_rays,
                              max_compact_face_dim, minimal_points_above,
                              newton_polyhedron, polyhedron_to_doc,
                              reduce_halfspace, vertices_from_halfspaces)


def facet_set(poly):
    return {(f.normal, f.threshold) for f in poly.facets}


class TestExtremeRays:
    def test_orthant(self):
        rays = extreme_rays([(1, 0), (0, 1)])
        assert sorted(rays) == [(0, 1), (1, 0)]

    def test_halfplane_cut(self):
        # x >= 0, y >= 0, x + y >= 0 (redundant): still the orthant
        rays = extreme_rays([(1, 0), (0, 1), (1, 1)])
        assert sorted(rays) == [(0, 1), (1, 0)]

    def test_simplicial_3d(self):
        rays = extreme_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
        for r in rays:
            assert all(sum(a * b for a, b in zip(row, r)) >= 0
                       for row in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
        assert (0, 0, 1) not in rays  # cut off by x + y >= z

    def test_not_pointed_rejected(self):
        with pytest.raises(ValueError):
            extreme_rays([(1, 0), (-1, 0)])


class TestNewtonPolyhedron:
    def test_cusp(self, cusp):
        poly = newton_polyhedron(cusp)
        assert facet_set(poly) == {((3, 2), 6)}
        assert set(poly.vertices) == {(Fraction(2), Fraction(0)),
                                      (Fraction(0), Fraction(3))}

    def test_triangle(self, triangle):
        poly = newton_polyhedron(triangle)
        assert facet_set(poly) == {((1, 1, 1), 2), ((1, 1, 0), 1),
                                   ((1, 0, 1), 1), ((0, 1, 1), 1)}
        assert len(poly.vertices) == 3

    def test_one_variable(self):
        poly = newton_polyhedron(parse_ideal("x^2", ("x",)))
        assert facet_set(poly) == {((1,), 2)}
        assert poly.vertices == ((Fraction(2),),)

    def test_rejects_degenerate(self):
        with pytest.raises(DegenerateIdeal):
            newton_polyhedron(unit_ideal(2))

    def test_facets_against_oracle(self, corpus40):
        for I in corpus40[:20]:
            poly = newton_polyhedron(I)
            box = max(e for g in I.gens for e in g) + 2
            for p in itertools.product(range(box), repeat=I.dim):
                assert poly.contains(p) == oracle_np_contains(I, p)

    def test_facet_certification(self, corpus40):
        for I in corpus40:
            poly = newton_polyhedron(I)
            for f in poly.facets:
                values = [f.value(g) for g in I.gens]
                assert min(values) == f.threshold
                assert all(v >= f.threshold for v in values)


class TestReduceHalfspace:
    def test_integer_gcd(self):
        h, factor = reduce_halfspace(HalfspaceQ((Fraction(6), Fraction(4)), Fraction(12)))
        assert (h.normal, h.threshold) == ((3, 2), 6)
        assert factor == 2

    def test_clears_denominators(self):
        h, factor = reduce_halfspace(
            HalfspaceQ((Fraction(1, 2), Fraction(1, 3)), Fraction(1)))
        assert (h.normal, h.threshold) == ((3, 2), 6)
        assert factor == Fraction(1, 6)

    def test_already_reduced(self):
        h, factor = reduce_halfspace(HalfspaceQ((Fraction(1),) * 3, Fraction(2)))
        assert (h.normal, h.threshold) == ((1, 1, 1), 2)
        assert factor == 1


class TestMinimalPointsAbove:
    def test_examples(self):
        assert set(minimal_points_above([(3, 2)], 7)) == \
            {(3, 0), (2, 1), (1, 2), (0, 4)}
        assert set(minimal_points_above([(3, 2)], 3)) == {(1, 0), (0, 2)}
        weights = [(1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2)]
        assert set(minimal_points_above(weights, 2)) == \
            {(1, 1, 0), (1, 0, 1), (0, 1, 1)}

    def test_against_brute_force(self):
        cases = [([(3, 2)], 7), ([(1, 4)], 5), ([(2, 1, 1), (1, 2, 2)], 4)]
        for weights, n in cases:
            assert minimal_points_above(weights, n) == \
                brute_minimal_points(weights, n, n)

    def test_box_margin_stability(self):
        for weights, n in [([(3, 2)], 9), ([(1, 1, 2), (2, 1, 1)], 5)]:
            assert minimal_points_above(weights, n) == \
                minimal_points_above(weights, n, margin=2)

    def test_threshold_nonpositive_gives_unit(self):
        assert minimal_points_above([(1, 1)], 0) == ((0, 0),)


class TestCountRegion:
    def test_cusp_examples(self, cusp):
        sp = newton_polyhedron(cusp).scaled(Fraction(1, 6))
        assert count_region([], [sp], 6) == 5
        assert count_region([sp], [sp], 6) == 0
        assert count_region([], [sp], 12) == 16

    def test_against_brute(self, cusp):
        sp = newton_polyhedron(cusp).scaled(Fraction(1, 6))
        for n in (3, 7, 10):
            assert count_region([], [sp], n) == \
                brute_count_outside([(3, 2)], [n], n + 1)

    def test_box_stability(self, cusp):
        sp = newton_polyhedron(cusp).scaled(Fraction(1, 6))
        assert count_region([], [sp], 9) == count_region([], [sp], 9, box=40)

    def test_unbounded_detected(self):
        I = parse_ideal("x", ("x", "y"))
        sp = newton_polyhedron(I).scaled(Fraction(1))
        with pytest.raises(UnboundedRegion):
            count_region([], [sp], 2)


class TestScaling:
    def test_vertices_and_thresholds(self, cusp):
        poly = newton_polyhedron(cusp)
        sp = poly.scaled(Fraction(5, 3))
        assert set(sp.vertices()) == {(Fraction(10, 3), Fraction(0)),
                                      (Fraction(0), Fraction(5))}
        assert sp.contains((Fraction(10, 3), 0))
        assert not sp.contains((3, 0))
        assert sp.contains((4, 0))


class TestFacesAndSpread:
    def test_principal_in_two_vars(self):
        assert analytic_spread(parse_ideal("x", ("x", "y"))) == 1

    def test_cusp(self, cusp):
        assert analytic_spread(cusp) == 2

    def test_triangle(self, triangle):
        assert analytic_spread(triangle) == 3

    def test_symbolic_polyhedron_spread(self, triangle):
        from ratpow.filtrations import symbolic_family
        J = symbolic_family(triangle).ideal
        assert analytic_spread(J) == 2

    def test_range(self, corpus40):
        for I in corpus40:
            assert 1 <= analytic_spread(I) <= I.dim

    def test_compact_faces_of_cusp(self, cusp):
        faces = enumerate_faces(newton_polyhedron(cusp))
        compact_dims = sorted(f.dim for f in faces if f.compact)
        assert compact_dims == [0, 0, 1]  # two vertices and the joining edge
        assert max_compact_face_dim(newton_polyhedron(cusp)) == 1

    def test_face_invariant(self, triangle):
        for face in enumerate_faces(newton_polyhedron(triangle)):
            if face.compact:
                assert face.vertex_set  # compact faces are vertex hulls


class TestHalfspaceVertices:
    def test_triangle_family_region(self):
        halfspaces = [IntegralHalfspace((1, 1, 0), 1), IntegralHalfspace((1, 0, 1), 1),
                      IntegralHalfspace((0, 1, 1), 1)]
        vertices, rays = vertices_from_halfspaces(halfspaces, 3)
        half = Fraction(1, 2)
        assert (half, half, half) in vertices
        assert len(vertices) == 4
        assert set(rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_integral_region(self):
        vertices, rays = vertices_from_halfspaces([IntegralHalfspace((3, 2), 6)], 2)
        assert set(vertices) == {(Fraction(2), Fraction(0)), (Fraction(0), Fraction(3))}


class TestIntegralClosureConsistency:
    def test_minimal_points_match_lattice_scan(self, corpus40):
        from ratpow.rational_powers import rees_valuations
        for I in corpus40[:15]:
            data = rees_valuations(I)
            got = minimal_points_above(data.weights, data.e)
            assert got == oracle_closure_gens(I)


def test_polyhedron_doc_format(cusp):
    doc = polyhedron_to_doc(newton_polyhedron(cusp))
    assert doc == {"vertices": [["0", "3"], ["2", "0"]],
                   "facets": [{"normal": [3, 2], "threshold": 6}]}


def test_halfspace_reduction_invariants():
    with pytest.raises(ValueError):
        IntegralHalfspace((2, 4), 6)  # not reduced
    with pytest.raises(ValueError):
        IntegralHalfspace((0, 0), 1)  # zero normal
