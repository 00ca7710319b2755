"""Subset-enumeration computation of Tutte-type polynomials of a vector list.

For a list X of vectors spanning Z^n, the weighted polynomial is the sum
over all 2^|X| sublists A of

    m(A) * (x-1)^(n - r(A)) * (y-1)^(|A| - r(A))

where r(A) is the rank of A and m(A) its lattice-index multiplicity.  The
classical (unweighted) variant replaces every m(A) by 1.  Both reduce to
the same polynomial when X is unimodular, i.e. when every basis extracted
from X has determinant +-1.

Enumeration walks a binary counter over list indices with index 0 as the
least significant bit, so intermediate traces are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import exact_linalg
from .errors import DimensionDeficient, ListTooLarge
from .exact_linalg import IntMatrix, VectorList
from .polynomials import BiPoly, expand_shifted_basis

MAX_LIST_SIZE = 24


@dataclass(frozen=True)
class TutteResult:
    """A Tutte-type polynomial together with the data it was built from.

    polynomial is the monomial-basis form; shifted_terms maps (i, j) to
    the coefficient of (x-1)^i (y-1)^j and is the exact accumulator of
    the defining sum (all entries nonnegative for the weighted variant).
    """

    polynomial: BiPoly
    shifted_terms: dict[tuple[int, int], int]
    ambient_dim: int
    list_size: int
    is_unimodular: bool


def _check_input(X: VectorList, max_list_size: int) -> None:
    if len(X) > max_list_size:
        raise ListTooLarge(
            f"list has {len(X)} vectors; enumeration cap is {max_list_size}"
        )
    r = exact_linalg.rank(X.column_matrix())
    if r < X.dim:
        raise DimensionDeficient(
            f"list spans a rank-{r} subspace of Z^{X.dim}; full rank required"
        )


def _sublist_profiles(X: VectorList):
    """Yield (size, rank, multiplicity) for every sublist, in counter order."""
    vectors = X.vectors
    for mask in range(1 << len(vectors)):
        columns = [vectors[b] for b in range(len(vectors)) if mask >> b & 1]
        snf = exact_linalg.smith_normal_form(
            IntMatrix.from_columns(columns, X.dim)
        )
        yield len(columns), snf.rank, math.prod(snf.invariant_factors)


def _tutte_sum(X: VectorList, weighted: bool, max_list_size: int) -> TutteResult:
    _check_input(X, max_list_size)
    n = X.dim
    shifted: dict[tuple[int, int], int] = {}
    unimodular = True
    for size, r, mult in _sublist_profiles(X):
        if size == r == n and mult != 1:
            unimodular = False
        key = (n - r, size - r)
        shifted[key] = shifted.get(key, 0) + (mult if weighted else 1)
    return TutteResult(
        polynomial=expand_shifted_basis(shifted),
        shifted_terms=shifted,
        ambient_dim=n,
        list_size=len(X),
        is_unimodular=unimodular,
    )


def multiplicity_tutte(X: VectorList, *, max_list_size: int = MAX_LIST_SIZE) -> TutteResult:
    """Multiplicity-weighted Tutte polynomial of X (X must span Z^n)."""
    return _tutte_sum(X, weighted=True, max_list_size=max_list_size)


def classical_tutte(X: VectorList, *, max_list_size: int = MAX_LIST_SIZE) -> TutteResult:
    """Classical Tutte polynomial of X: the same sum with unit weights."""
    return _tutte_sum(X, weighted=False, max_list_size=max_list_size)


def dilate_list(X: VectorList, q: int) -> VectorList:
    """Scale every vector of X componentwise by q >= 1, preserving order."""
    if q < 1:
        raise ValueError(f"dilation factor must be >= 1, got {q}")
    return VectorList(X.dim, [tuple(q * x for x in v) for v in X.vectors])


def dilation_identity_sides(
    X: VectorList, q: int, *, max_list_size: int = MAX_LIST_SIZE
) -> tuple[BiPoly, BiPoly]:
    """Both sides of the dilation identity, computed independently.

    The left side is the weighted polynomial of qX from scratch; the right
    side rescales each shifted-basis coefficient of (x-1)^i in the
    polynomial of X by q^(n-i).
    """
    if q < 1:
        raise ValueError(f"dilation factor must be >= 1, got {q}")
    base = multiplicity_tutte(X, max_list_size=max_list_size)
    lhs = multiplicity_tutte(dilate_list(X, q), max_list_size=max_list_size).polynomial
    n = base.ambient_dim
    rhs = expand_shifted_basis(
        {(i, j): c * q ** (n - i) for (i, j), c in base.shifted_terms.items()}
    )
    return lhs, rhs


def check_dilation_identity(X: VectorList, q: int, *, max_list_size: int = MAX_LIST_SIZE) -> bool:
    """Exact coefficient-wise check of the dilation identity for X and q."""
    lhs, rhs = dilation_identity_sides(X, q, max_list_size=max_list_size)
    return lhs == rhs
