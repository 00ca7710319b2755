"""Ehrhart and interior polynomials of the zonotope of a vector list.

Two independent routes produce the lattice-point counting polynomial E(q)
of the zonotope generated by X:

  * a specialization of the multiplicity-weighted Tutte polynomial,
    E(q) = q^n M(1 + 1/q, 1), realized exactly as a coefficient reversal;
  * a direct sum m(A) q^|A| over the linearly independent sublists A.

The interior counting polynomial is I(q) = (-1)^n E(-q) (reciprocity),
which as a specialization reads q^n M(1 - 1/q, 1).  Closed count, volume
and interior count of the unscaled zonotope are M(2,1), M(1,1), M(0,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import exact_linalg
from .errors import DegreeMismatch, DimensionDeficient, ListTooLarge
from .exact_linalg import VectorList
from .polynomials import UniPoly, eval_bi, negate_argument, reverse_coefficients
from .tutte_core import MAX_LIST_SIZE, TutteResult


@dataclass(frozen=True)
class EhrhartResult:
    """Counting polynomials and volume of a zonotope."""

    ehrhart: UniPoly
    interior: UniPoly
    volume: int
    ambient_dim: int


def ehrhart_via_theorem(M: TutteResult) -> UniPoly:
    """Ehrhart polynomial from a weighted Tutte polynomial.

    Sets y = 1, rewrites in powers of (x - 1), and reverses the
    coefficient sequence at length n + 1; all steps are exact integer
    coefficient manipulation.
    """
    at_y1 = M.polynomial.specialize_y(1)
    shifted = at_y1.taylor_shift(1)
    return reverse_coefficients(shifted, M.ambient_dim)


def ehrhart_via_independent_sets(
    X: VectorList, *, max_list_size: int = MAX_LIST_SIZE
) -> UniPoly:
    """Ehrhart polynomial summed directly over independent sublists of X."""
    if len(X) > max_list_size:
        raise ListTooLarge(
            f"list has {len(X)} vectors; enumeration cap is {max_list_size}"
        )
    n = X.dim
    full_rank = exact_linalg.rank(X.column_matrix())
    if full_rank < n:
        raise DimensionDeficient(
            f"list spans a rank-{full_rank} subspace of Z^{n}; full rank required"
        )
    coeffs = [0] * (n + 1)
    for size in range(n + 1):
        for idxs in combinations(range(len(X)), size):
            sub = X.sublist(idxs)
            snf = exact_linalg.smith_normal_form(sub.column_matrix())
            if snf.rank == size:
                mult = 1
                for d in snf.invariant_factors:
                    mult *= d
                coeffs[size] += mult
    return UniPoly(coeffs)


def interior_polynomial(E: UniPoly, n: int) -> UniPoly:
    """Interior counting polynomial (-1)^n E(-q) for a degree-n Ehrhart E."""
    if E.degree != n:
        raise DegreeMismatch(f"expected degree {n}, got {E.degree}")
    flipped = negate_argument(E)
    return flipped if n % 2 == 0 else flipped.scale(-1)


def scalar_corollaries(M: TutteResult) -> tuple[int, int, int]:
    """(lattice points, volume, interior points) of the unscaled zonotope.

    Evaluates the weighted Tutte polynomial at (2,1), (1,1) and (0,1).
    """
    values = []
    for point in ((2, 1), (1, 1), (0, 1)):
        v = eval_bi(M.polynomial, *point)
        if v.denominator != 1 or v < 0:
            raise AssertionError(f"specialization at {point} gave {v}")
        values.append(int(v))
    return values[0], values[1], values[2]


def ehrhart_summary(M: TutteResult) -> EhrhartResult:
    """Bundle Ehrhart polynomial, interior polynomial and volume for M."""
    n = M.ambient_dim
    ehrhart = ehrhart_via_theorem(M)
    if ehrhart.constant_term() != 1:
        raise AssertionError("Ehrhart constant term must be 1")
    return EhrhartResult(
        ehrhart=ehrhart,
        interior=interior_polynomial(ehrhart, n),
        volume=ehrhart.coefficient(n),
        ambient_dim=n,
    )
