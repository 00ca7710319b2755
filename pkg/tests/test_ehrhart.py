import pytest

from zonotutte import (
    CountMode,
    DegreeMismatch,
    UniPoly,
    VectorList,
    brute_force_count,
    dilate_list,
    ehrhart_summary,
    ehrhart_via_independent_sets,
    ehrhart_via_theorem,
    eval_bi,
    eval_uni,
    interior_polynomial,
    multiplicity_tutte,
    scalar_corollaries,
)

WORKED = VectorList(2, [(3, 0), (0, 2), (1, 1)])
UNIT_SQUARE = VectorList(2, [(1, 0), (0, 1)])


class TestEhrhartViaTheorem:
    def test_worked_example(self):
        E = ehrhart_via_theorem(multiplicity_tutte(WORKED))
        assert E == UniPoly([1, 6, 11])

    def test_unit_square(self):
        E = ehrhart_via_theorem(multiplicity_tutte(UNIT_SQUARE))
        assert E == UniPoly([1, 2, 1])  # (q+1)^2

    def test_segment(self):
        E = ehrhart_via_theorem(multiplicity_tutte(VectorList(1, [(2,)])))
        assert E == UniPoly([1, 2])  # 2q + 1 points in [0, 2q]


class TestEhrhartViaIndependentSets:
    def test_worked_example(self):
        assert ehrhart_via_independent_sets(WORKED) == UniPoly([1, 6, 11])

    def test_unit_square(self):
        assert ehrhart_via_independent_sets(UNIT_SQUARE) == UniPoly([1, 2, 1])

    def test_even_list(self):
        # independent sublists carry multiplicities 1; 2,2,1; 4,2,2
        X = VectorList(2, [(2, 0), (0, 2), (1, 1)])
        assert ehrhart_via_independent_sets(X) == UniPoly([1, 5, 8])

    def test_agrees_with_theorem_route(self, small_corpus):
        for X in small_corpus:
            assert ehrhart_via_independent_sets(X) == ehrhart_via_theorem(
                multiplicity_tutte(X)
            )


class TestInteriorPolynomial:
    def test_worked_example(self):
        assert interior_polynomial(UniPoly([1, 6, 11]), 2) == UniPoly([1, -6, 11])

    def test_unit_square(self):
        assert interior_polynomial(UniPoly([1, 2, 1]), 2) == UniPoly([1, -2, 1])

    def test_even_list(self):
        assert interior_polynomial(UniPoly([1, 5, 8]), 2) == UniPoly([1, -5, 8])

    def test_odd_dimension_sign(self):
        # segment [0, 2q] has 2q - 1 interior points
        assert interior_polynomial(UniPoly([1, 2]), 1) == UniPoly([-1, 2])

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            interior_polynomial(UniPoly([1, 2]), 2)


class TestScalarCorollaries:
    def test_worked_example(self):
        assert scalar_corollaries(multiplicity_tutte(WORKED)) == (18, 11, 6)

    def test_unit_square(self):
        assert scalar_corollaries(multiplicity_tutte(UNIT_SQUARE)) == (4, 1, 0)

    def test_even_list(self):
        X = VectorList(2, [(2, 0), (0, 2), (1, 1)])
        assert scalar_corollaries(multiplicity_tutte(X)) == (14, 8, 4)
        assert brute_force_count(X, 1, CountMode.CLOSED) == 14
        assert brute_force_count(X, 1, CountMode.OPEN) == 4


class TestSummaryAndInvariants:
    def test_summary_bundle(self):
        summary = ehrhart_summary(multiplicity_tutte(WORKED))
        assert summary.ehrhart == UniPoly([1, 6, 11])
        assert summary.interior == UniPoly([1, -6, 11])
        assert summary.volume == 11
        assert summary.ambient_dim == 2

    def test_constant_term_and_volume(self, small_corpus):
        for X in small_corpus:
            M = multiplicity_tutte(X)
            E = ehrhart_via_theorem(M)
            assert E.constant_term() == 1
            assert E.degree == X.dim
            v = eval_bi(M.polynomial, 1, 1)
            assert E.coefficient(X.dim) == v

    def test_dilating_list_equals_dilating_polytope(self, small_corpus):
        for X in small_corpus[:10]:
            E = ehrhart_via_theorem(multiplicity_tutte(X))
            for q in (1, 2, 3):
                Eq = ehrhart_via_theorem(multiplicity_tutte(dilate_list(X, q)))
                assert eval_uni(Eq, 1) == eval_uni(E, q)

    def test_counts_match_oracle(self, small_corpus):
        for X in small_corpus[:9]:
            M = multiplicity_tutte(X)
            E = ehrhart_via_theorem(M)
            I = interior_polynomial(E, X.dim)
            for q in (1, 2):
                assert eval_uni(E, q) == brute_force_count(X, q, CountMode.CLOSED)
                assert eval_uni(I, q) == brute_force_count(X, q, CountMode.OPEN)
