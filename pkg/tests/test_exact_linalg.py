import math
import random
from itertools import combinations

import pytest

from zonotutte import (
    IntMatrix,
    RankDeficient,
    VectorList,
    determinant,
    gcd_maximal_minors,
    multiplicity,
    rank,
    smith_normal_form,
)


def columns(vectors, dim):
    return IntMatrix.from_columns(vectors, dim)


class TestRank:
    def test_empty_list_spans_nothing(self):
        assert rank(columns([], 2)) == 0

    def test_worked_example_is_full_rank(self):
        assert rank(columns([(3, 0), (0, 2), (1, 1)], 2)) == 2

    def test_parallel_columns(self):
        # second column is half the first
        assert rank(columns([(2, 4), (1, 2)], 2)) == 1

    def test_zero_matrix(self):
        assert rank(columns([(0, 0), (0, 0)], 2)) == 0

    def test_monotone_under_inclusion(self, small_corpus):
        for X in small_corpus:
            prev = 0
            for size in range(len(X) + 1):
                r = rank(columns(X.vectors[:size], X.dim))
                assert prev <= r <= min(size, X.dim)
                prev = r


class TestSmithNormalForm:
    def test_identity(self):
        snf = smith_normal_form(columns([(1, 0), (0, 1)], 2))
        assert snf.invariant_factors == (1, 1)
        assert snf.rank == 2

    def test_diagonal(self):
        snf = smith_normal_form(columns([(2, 0), (0, 2)], 2))
        assert snf.invariant_factors == (2, 2)

    def test_single_column_is_gcd(self):
        snf = smith_normal_form(columns([(3, 0)], 2))
        assert snf.invariant_factors == (3,)

    def test_zero_and_empty(self):
        assert smith_normal_form(columns([(0, 0)], 2)).invariant_factors == ()
        assert smith_normal_form(columns([], 3)).rank == 0

    def test_divisibility_chain_and_rank(self, small_corpus):
        for X in small_corpus:
            snf = smith_normal_form(X.column_matrix())
            assert snf.rank == rank(X.column_matrix())
            assert all(d >= 1 for d in snf.invariant_factors)
            for a, b in zip(snf.invariant_factors, snf.invariant_factors[1:]):
                assert b % a == 0

    def test_matches_determinantal_divisors(self):
        # independent oracle: the k-th invariant factor is the gcd of all
        # k x k minors divided by the gcd of all (k-1) x (k-1) minors
        rng = random.Random(5)

        def minors_gcd(vecs, n, k):
            g = 0
            for row_idx in combinations(range(n), k):
                for col_idx in combinations(range(len(vecs)), k):
                    sub = IntMatrix.from_rows(
                        [[vecs[c][r] for c in col_idx] for r in row_idx]
                    )
                    g = math.gcd(g, abs(determinant(sub)))
            return g

        for _ in range(30):
            n = rng.randint(1, 3)
            size = rng.randint(1, 4)
            vecs = [tuple(rng.randint(-7, 7) for _ in range(n)) for _ in range(size)]
            snf = smith_normal_form(columns(vecs, n))
            expected = []
            prev = 1
            for k in range(1, min(n, size) + 1):
                g = minors_gcd(vecs, n, k)
                if g == 0:
                    break
                expected.append(g // prev)
                prev = g
            assert list(snf.invariant_factors) == expected

    def test_invariance_under_permutation_and_negation(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(1, 4)
            k = rng.randint(1, 5)
            vecs = [tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(k)]
            base = smith_normal_form(columns(vecs, n)).invariant_factors

            shuffled = vecs[:]
            rng.shuffle(shuffled)
            assert smith_normal_form(columns(shuffled, n)).invariant_factors == base

            j = rng.randrange(k)
            negated = [tuple(-x for x in v) if i == j else v for i, v in enumerate(vecs)]
            assert smith_normal_form(columns(negated, n)).invariant_factors == base

            perm = list(range(n))
            rng.shuffle(perm)
            rows_permuted = [tuple(v[p] for p in perm) for v in vecs]
            assert smith_normal_form(columns(rows_permuted, n)).invariant_factors == base


class TestMultiplicity:
    def test_empty_sublist(self):
        assert multiplicity(VectorList(2, [])) == 1

    def test_zero_vectors_only(self):
        assert multiplicity(VectorList(2, [(0, 0), (0, 0)])) == 1

    def test_singletons_from_worked_example(self):
        assert multiplicity(VectorList(2, [(3, 0)])) == 3
        assert multiplicity(VectorList(2, [(0, 2)])) == 2
        assert multiplicity(VectorList(2, [(1, 1)])) == 1

    def test_full_worked_example(self):
        assert multiplicity(VectorList(2, [(3, 0), (0, 2), (1, 1)])) == 1

    def test_dilation_scaling(self, small_corpus):
        # multiplicity of qA scales by q^rank(A)
        for X in small_corpus[:12]:
            for mask in range(1 << len(X)):
                idxs = [b for b in range(len(X)) if mask >> b & 1]
                A = X.sublist(idxs)
                r = rank(A.column_matrix())
                m = multiplicity(A)
                for q in (1, 2, 3):
                    qA = VectorList(A.dim, [tuple(q * x for x in v) for v in A])
                    assert multiplicity(qA) == q**r * m


class TestGcdMaximalMinors:
    def test_worked_example(self):
        assert gcd_maximal_minors(VectorList(2, [(3, 0), (0, 2), (1, 1)])) == 1

    def test_unimodular_basis(self):
        assert gcd_maximal_minors(VectorList(2, [(1, 0), (0, 1)])) == 1

    def test_even_list(self):
        assert gcd_maximal_minors(VectorList(2, [(2, 0), (0, 2), (1, 1)])) == 2

    def test_rank_deficient_rejected(self):
        with pytest.raises(RankDeficient):
            gcd_maximal_minors(VectorList(2, [(1, 0), (2, 0)]))

    def test_agrees_with_multiplicity(self, small_corpus):
        for X in small_corpus:
            n = X.dim
            for mask in range(1 << len(X)):
                idxs = [b for b in range(len(X)) if mask >> b & 1]
                A = X.sublist(idxs)
                if rank(A.column_matrix()) == n:
                    assert gcd_maximal_minors(A) == multiplicity(A)


class TestDeterminant:
    def test_known_minors(self):
        assert determinant(columns([(3, 0), (0, 2)], 2)) == 6
        assert determinant(columns([(3, 0), (1, 1)], 2)) == 3
        assert determinant(columns([(0, 2), (1, 1)], 2)) == -2

    def test_matches_cofactor_expansion(self):
        rng = random.Random(3)

        def cofactor_det(m):
            if len(m) == 1:
                return m[0][0]
            total = 0
            for j in range(len(m)):
                minor = [row[:j] + row[j + 1 :] for row in m[1:]]
                total += (-1) ** j * m[0][j] * cofactor_det(minor)
            return total

        for _ in range(30):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            assert determinant(IntMatrix.from_rows(rows)) == cofactor_det(rows)

    def test_big_entries_stay_exact(self):
        big = 10**30
        m = IntMatrix.from_rows([[big, 1], [1, big]])
        assert determinant(m) == big * big - 1
