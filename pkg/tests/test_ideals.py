import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_upset_member, naive_associated_primes
from ratpow.errors import DegenerateIdeal, DimensionMismatch, ParseError
from ratpow.ideals import (MonomialIdeal, associated_primes, contains,
                           ideal_from_doc, ideal_to_doc, intersect,
                           minimal_generators, minimal_primes, parse_ideal,
                           power, product, unit_ideal, zero_ideal)


class TestParse:
    def test_plain(self):
        I = parse_ideal("x^2, x*y", ("x", "y"))
        assert set(I.gens) == {(2, 0), (1, 1)}

    def test_triangle(self):
        I = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
        assert set(I.gens) == {(1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_minimizes(self):
        I = parse_ideal("x^2, x^2*y", ("x", "y"))
        assert I.gens == ((2, 0),)

    def test_json_document(self):
        doc = {"vars": ["x", "y", "z"], "gens": [[1, 1, 0], [0, 1, 1], [1, 0, 1]]}
        I = ideal_from_doc(doc)
        assert I.var_names == ("x", "y", "z")
        out = ideal_to_doc(I)
        assert out["vars"] == ["x", "y", "z"]
        assert sorted(out["gens"]) == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
        # canonical emission order: descending lex within the common degree
        assert out["gens"] == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]

    def test_repeated_variables_multiply(self):
        I = parse_ideal("x*x*y^2", ("x", "y"))
        assert I.gens == ((2, 2),)

    @pytest.mark.parametrize("bad", ["x^-1", "q", "x^", "x**y", ""])
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            parse_ideal(bad, ("x", "y"))

    def test_gens_sorted_graded_lex(self):
        I = parse_ideal("y^3, x^2, x*y", ("x", "y"))
        assert I.gens == ((2, 0), (1, 1), (0, 3))


class TestMinimalGenerators:
    def test_dominated_pair(self):
        assert minimal_generators([(2, 0), (2, 1)]) == ((2, 0),)

    def test_antichain_fixed(self):
        gens = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
        assert set(minimal_generators(gens)) == set(gens)

    def test_mixed(self):
        assert set(minimal_generators([(2, 0), (1, 2), (0, 3), (1, 1)])) == \
            {(2, 0), (1, 1), (0, 3)}

    @given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)),
                    min_size=1, max_size=8))
    def test_antichain_property(self, gens):
        out = minimal_generators(gens)
        for a, b in itertools.permutations(out, 2):
            assert not all(x <= y for x, y in zip(a, b))
        # same up-set on a small box
        for p in itertools.product(range(4), repeat=3):
            assert brute_upset_member(gens, p) == brute_upset_member(out, p)


class TestContains:
    def test_examples(self):
        I = parse_ideal("x^2, y^3", ("x", "y"))
        assert not contains(I, (1, 2))
        assert contains(I, (2, 5))
        T = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
        assert contains(T, (1, 1, 1))

    def test_dimension_mismatch(self):
        I = parse_ideal("x^2", ("x", "y"))
        with pytest.raises(DimensionMismatch):
            contains(I, (1, 1, 1))

    def test_degenerate(self):
        assert not contains(zero_ideal(2), (0, 0))
        assert contains(unit_ideal(2), (0, 0))

    def test_box_agreement(self, corpus40):
        for I in corpus40[:15]:
            for p in itertools.product(range(6), repeat=I.dim):
                assert contains(I, p) == brute_upset_member(I.gens, p)


class TestArithmetic:
    def test_product_examples(self):
        x = parse_ideal("x", ("x", "y"))
        y = parse_ideal("y", ("x", "y"))
        assert product(x, y).gens == ((1, 1),)
        m = parse_ideal("x, y", ("x", "y"))
        assert set(power(m, 2).gens) == {(2, 0), (1, 1), (0, 2)}
        I = parse_ideal("x^2, y^3", ("x", "y"))
        assert set(power(I, 2).gens) == {(4, 0), (2, 3), (0, 6)}

    def test_intersect_examples(self):
        x = parse_ideal("x", ("x", "y"))
        y = parse_ideal("y", ("x", "y"))
        assert intersect(x, y).gens == ((1, 1),)
        a = parse_ideal("x^2, y", ("x", "y"))
        assert set(intersect(a, x).gens) == {(2, 0), (1, 1)}
        m2 = power(parse_ideal("x, y", ("x", "y")), 2)
        assert set(intersect(m2, y).gens) == {(1, 1), (0, 2)}

    def test_commutative_associative(self, corpus40):
        trios = [c for c in corpus40 if c.dim == 3][:6]
        for I, J, K in zip(trios, trios[1:], trios[2:]):
            assert product(I, J) == product(J, I)
            assert intersect(I, J) == intersect(J, I)
            assert product(product(I, J), K) == product(I, product(J, K))
            assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))

    def test_degenerate_absorption(self):
        I = parse_ideal("x^2", ("x", "y"))
        assert product(I, zero_ideal(2, I.var_names)).is_zero
        assert product(I, unit_ideal(2, I.var_names)) == I
        assert intersect(I, unit_ideal(2, I.var_names)) == I


class TestPrimes:
    def test_minimal_primes_examples(self):
        T = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
        assert {p.sorted_support() for p in minimal_primes(T)} == \
            {(0, 1), (0, 2), (1, 2)}
        X = parse_ideal("x", ("x",))
        assert {p.sorted_support() for p in minimal_primes(X)} == {(0,)}
        P = parse_ideal("x*y, y*z", ("x", "y", "z"))
        assert {p.sorted_support() for p in minimal_primes(P)} == {(1,), (0, 2)}

    def test_squarefree_required(self):
        with pytest.raises(ValueError):
            minimal_primes(parse_ideal("x^2", ("x", "y")))

    def test_associated_primes_examples(self):
        A = parse_ideal("x^2, x*y", ("x", "y"))
        assert {p.sorted_support() for p in associated_primes(A)} == {(0,), (0, 1)}
        T = parse_ideal("x*y, y*z, z*x", ("x", "y", "z"))
        assert {p.sorted_support() for p in associated_primes(T)} == \
            {p.sorted_support() for p in minimal_primes(T)}
        X2 = parse_ideal("x^2", ("x",))
        assert {p.sorted_support() for p in associated_primes(X2)} == {(0,)}

    def test_associated_primes_against_naive(self, corpus40):
        for I in corpus40[:25]:
            got = {p.support for p in associated_primes(I)}
            assert got == naive_associated_primes(I)

    def test_ass_equals_min_on_squarefree(self, squarefree_corpus):
        for I in squarefree_corpus:
            assert {p.support for p in associated_primes(I)} == \
                {p.support for p in minimal_primes(I)}

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateIdeal):
            associated_primes(unit_ideal(2))
        with pytest.raises(DegenerateIdeal):
            associated_primes(zero_ideal(2))


class TestPrimeMembershipCriterion:
    def test_hyperplane_membership_matches_symbolic_intersection(self, squarefree_corpus):
        # membership in the intersection of n-th prime powers is the support
        # sums of the minimal primes being at least n
        from ratpow.filtrations import symbolic_power

        for I in squarefree_corpus[:20]:
            primes = minimal_primes(I)
            for n in (1, 2, 3):
                J = symbolic_power(I, n)
                for p in itertools.product(range(n + 2), repeat=I.dim):
                    by_planes = all(
                        sum(p[j] for j in pr.support) >= n for pr in primes)
                    assert by_planes == contains(J, p)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                min_size=1, max_size=5))
def test_operations_return_antichains(gens):
    gens = [g for g in gens if g != (0, 0)]
    if not gens:
        return
    I = MonomialIdeal.from_gens(gens, dim=2)
    for out in (power(I, 2), intersect(I, I), product(I, I)):
        for a, b in itertools.permutations(out.gens, 2):
            assert not all(x <= y for x, y in zip(a, b))
