"""Brute-force geometric verification, independent of the polynomial side.

The zonotope of a list X in Z^n, scaled by a positive integer q, is the
projection of a box: { p : p = sum_i t_i (q x_i), 0 <= t_i <= 1 }.  This
module obtains an inequality description of that projection by exact
rational Fourier-Motzkin elimination of the t variables, then counts
lattice points by enumerating the coordinate bounding box and classifying
every point against the inequalities.

Why strictness against possibly redundant inequalities classifies interiors
correctly: the zonotope here is full-dimensional (rank X = n), so any valid
inequality c.p <= d satisfies c.p < d on interior points — an interior
point p has a ball around it inside the body, and c.p = d would place half
of that ball outside the half-space.  Redundant valid inequalities can
therefore never demote an interior point to the boundary.

Classification over the box runs on 64-bit integer vector arithmetic when
a precomputed bound rules out overflow, and falls back to pure Python big
integers otherwise; both paths are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import exact_linalg
from .errors import BoxTooLarge, DimensionDeficient, EliminationTooLarge, UnboundedCone
from .exact_linalg import VectorList

MAX_ELIM_VARS = 12
MAX_BOX_POINTS = 10_000_000
MAX_BRUTE_FORCE_DIM = 4

Row = tuple[tuple[int, ...], int]  # coeffs . v <= rhs


class PointClass(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class CountMode(Enum):
    CLOSED = "closed"
    OPEN = "open"


@dataclass(frozen=True)
class HRep:
    """Inequality description normal . p <= offset of a rational polytope.

    Rows are normalized to primitive integer form (gcd of the numerator
    data is 1) and sorted, so equal polytopes built the same way compare
    equal.  Redundant valid rows are harmless for classification (module
    docstring); zonotope_hrep nevertheless emits the facet description.
    """

    dim: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]


class _Infeasible(Exception):
    """Internal marker: elimination derived 0 <= negative."""


def _reduce_rows(rows: Iterable[Row]) -> list[Row]:
    """Normalize rows by their gcd, drop trivial ones, keep the tightest of
    any parallel family.  Raises _Infeasible on an all-zero row with a
    negative right-hand side."""
    best: dict[tuple[int, ...], Fraction] = {}
    for coeffs, rhs in rows:
        if not any(coeffs):
            if rhs < 0:
                raise _Infeasible
            continue
        g = math.gcd(*(abs(c) for c in coeffs))
        key = tuple(c // g for c in coeffs)
        bound = Fraction(rhs, g)
        prev = best.get(key)
        if prev is None or bound < prev:
            best[key] = bound
    out: list[Row] = []
    for key, bound in best.items():
        den = bound.denominator
        out.append((tuple(c * den for c in key), bound.numerator))
    return out


def _eliminate_var(rows: Sequence[Row], k: int) -> list[Row]:
    """One Fourier-Motzkin step: project away variable k."""
    pos = [r for r in rows if r[0][k] > 0]
    neg = [r for r in rows if r[0][k] < 0]
    out = [r for r in rows if r[0][k] == 0]
    for cp, dp in pos:
        a = cp[k]
        for cn, dn in neg:
            b = cn[k]
            coeffs = tuple(a * cn[i] - b * cp[i] for i in range(len(cp)))
            out.append((coeffs, a * dn - b * dp))
    return _reduce_rows(out)


def _prune_projection_rows(
    rows: Sequence[Row],
    scaled: Sequence[tuple[int, ...]],
    m: int,
    eliminated: frozenset[int],
) -> list[Row]:
    """Drop rows that are redundant for the partially projected body.

    After eliminating the box variables in `eliminated`, the remaining
    system describes the image B of the unit cube under the linear map
    t -> (t_rest, sum_i t_i g_i) with g_i the scaled generators.  Pulled
    back to the cube, a row (c, d) reads w . t <= d with
    w_i = c_i + c_p . g_i, so its exact support is sum_i max(0, w_i) and
    the face it touches has dimension

        |{i not eliminated : w_i = 0}| + rank{g_i : i eliminated, w_i = 0}.

    Rows are kept only when they are tight and touch a face of dimension
    >= dim(B) - 1: that retains every facet and every equality-type row,
    which together still describe B exactly, and it is what keeps the
    elimination from the usual combinatorial row explosion.
    """
    rank_cache: dict[frozenset[int], int] = {}

    def rank_of(indices: frozenset[int]) -> int:
        if not indices:
            return 0
        cached = rank_cache.get(indices)
        if cached is None:
            cached = exact_linalg.rank(
                exact_linalg.IntMatrix.from_columns(
                    [scaled[i] for i in sorted(indices)], len(scaled[0])
                )
            )
            rank_cache[indices] = cached
        return cached

    body_dim = (m - len(eliminated)) + rank_of(eliminated)
    kept: list[Row] = []
    for coeffs, rhs in rows:
        cp = coeffs[m:]
        support = 0
        rest_free = 0
        elim_free = []
        for i in range(m):
            w = coeffs[i] + sum(c * g for c, g in zip(cp, scaled[i]))
            if w > 0:
                support += w
            elif w == 0:
                if i in eliminated:
                    elim_free.append(i)
                else:
                    rest_free += 1
        if rhs < support:
            raise AssertionError("elimination produced an invalid inequality")
        if rhs > support:
            continue
        needed = body_dim - 1 - rest_free
        if needed > 0:
            if len(elim_free) < needed or rank_of(frozenset(elim_free)) < needed:
                continue
        kept.append((coeffs, rhs))
    return kept


def zonotope_hrep(X: VectorList, q: int, *, max_elim_vars: int = MAX_ELIM_VARS) -> HRep:
    """Inequality description of the q-fold dilated zonotope of X.

    Runs exact Fourier-Motzkin elimination of the box variables from
    { p = sum t_i (q x_i), 0 <= t_i <= 1 }, pruning rows that are
    provably redundant for the partially projected body after every
    step (see _prune_projection_rows).  The result is the facet
    description of the dilated zonotope.
    """
    if q < 1:
        raise ValueError(f"dilation factor must be >= 1, got {q}")
    n, m = X.dim, len(X)
    r = exact_linalg.rank(X.column_matrix())
    if r < n:
        raise DimensionDeficient(
            f"list spans a rank-{r} subspace of Z^{n}; full rank required"
        )
    if m > max_elim_vars:
        raise EliminationTooLarge(
            f"list has {m} vectors; elimination cap is {max_elim_vars}"
        )

    width = m + n
    scaled = [tuple(q * x for x in v) for v in X.vectors]
    rows: list[Row] = []
    for i in range(m):
        unit = tuple(1 if k == i else 0 for k in range(width))
        rows.append((unit, 1))
        rows.append((tuple(-c for c in unit), 0))
    for j in range(n):
        coeffs = [0] * width
        for i in range(m):
            coeffs[i] = -scaled[i][j]
        coeffs[m + j] = 1
        rows.append((tuple(coeffs), 0))
        rows.append((tuple(-c for c in coeffs), 0))

    try:
        rows = _reduce_rows(rows)
        remaining = set(range(m))
        eliminated: set[int] = set()
        while remaining:
            def elimination_cost(k: int) -> tuple[int, int]:
                p = sum(1 for row in rows if row[0][k] > 0)
                neg = sum(1 for row in rows if row[0][k] < 0)
                return (p * neg - p - neg, k)

            k = min(remaining, key=elimination_cost)
            rows = _eliminate_var(rows, k)
            remaining.discard(k)
            eliminated.add(k)
            rows = _prune_projection_rows(rows, scaled, m, frozenset(eliminated))
    except _Infeasible as exc:  # the box is nonempty, so this cannot happen
        raise AssertionError("elimination reported an empty zonotope") from exc

    inequalities: list[tuple[tuple[int, ...], int]] = []
    for coeffs, rhs in rows:
        if any(coeffs[:m]):
            raise AssertionError("projection left a box variable behind")
        inequalities.append((coeffs[m:], rhs))
    inequalities.sort()
    return HRep(dim=n, inequalities=tuple(inequalities))


def classify_point(H: HRep, point: Sequence[int]) -> PointClass:
    """Trichotomy of an integer point against an inequality description."""
    if not H.inequalities:
        raise ValueError("cannot classify against an empty H-representation")
    tight = False
    for normal, rhs in H.inequalities:
        s = sum(c * x for c, x in zip(normal, point))
        if s > rhs:
            return PointClass.OUTSIDE
        if s == rhs:
            tight = True
    return PointClass.BOUNDARY if tight else PointClass.INTERIOR


def _box_ranges(X: VectorList, q: int) -> list[tuple[int, int]]:
    ranges = []
    for j in range(X.dim):
        lo = q * sum(min(v[j], 0) for v in X.vectors)
        hi = q * sum(max(v[j], 0) for v in X.vectors)
        ranges.append((lo, hi))
    return ranges


def _scan_box_python(H: HRep, ranges: Sequence[tuple[int, int]]) -> tuple[int, int]:
    closed = opened = 0
    for point in product(*(range(lo, hi + 1) for lo, hi in ranges)):
        cls = classify_point(H, point)
        if cls is PointClass.OUTSIDE:
            continue
        closed += 1
        if cls is PointClass.INTERIOR:
            opened += 1
    return closed, opened


def _scan_box_numpy(H: HRep, ranges: Sequence[tuple[int, int]]) -> tuple[int, int]:
    normals = np.array([n for n, _ in H.inequalities], dtype=np.int64)
    offsets = np.array([d for _, d in H.inequalities], dtype=np.int64)
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in ranges]
    sizes = [len(a) for a in axes]
    total = math.prod(sizes)
    chunk = max(1, 2_000_000 // max(1, len(offsets)))
    closed = opened = 0
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total), dtype=np.int64)
        multi = np.unravel_index(flat, sizes)
        points = np.stack([axes[k][multi[k]] for k in range(len(axes))], axis=1)
        values = points @ normals.T
        closed += int(np.count_nonzero((values <= offsets).all(axis=1)))
        opened += int(np.count_nonzero((values < offsets).all(axis=1)))
    return closed, opened


def closed_open_counts(
    X: VectorList,
    q: int,
    *,
    max_box: int = MAX_BOX_POINTS,
    max_elim_vars: int = MAX_ELIM_VARS,
) -> tuple[int, int]:
    """Count lattice points of the dilated zonotope: (closed hull, interior).

    One box scan produces both counts; brute_force_count is the
    single-mode front end.
    """
    if q < 1:
        raise ValueError(f"dilation factor must be >= 1, got {q}")
    r = exact_linalg.rank(X.column_matrix())
    if r < X.dim:
        raise DimensionDeficient(
            f"list spans a rank-{r} subspace of Z^{X.dim}; full rank required"
        )
    if X.dim > MAX_BRUTE_FORCE_DIM:
        raise BoxTooLarge(
            f"brute-force counting supports dimension <= {MAX_BRUTE_FORCE_DIM}, got {X.dim}"
        )
    ranges = _box_ranges(X, q)
    box_points = math.prod(hi - lo + 1 for lo, hi in ranges)
    if box_points > max_box:
        raise BoxTooLarge(f"bounding box holds {box_points} points; cap is {max_box}")
    H = zonotope_hrep(X, q, max_elim_vars=max_elim_vars)

    coord_bound = max(max(abs(lo), abs(hi)) for lo, hi in ranges)
    row_bound = max(
        sum(abs(c) for c in normal) * coord_bound + abs(rhs)
        for normal, rhs in H.inequalities
    )
    if row_bound < 2**62:
        return _scan_box_numpy(H, ranges)
    return _scan_box_python(H, ranges)


def brute_force_count(
    X: VectorList,
    q: int,
    mode: CountMode,
    *,
    max_box: int = MAX_BOX_POINTS,
    max_elim_vars: int = MAX_ELIM_VARS,
) -> int:
    """Number of lattice points in the dilated zonotope (CLOSED) or its
    interior (OPEN), counted by exhaustive box enumeration."""
    closed, opened = closed_open_counts(
        X, q, max_box=max_box, max_elim_vars=max_elim_vars
    )
    return closed if mode is CountMode.CLOSED else opened


def find_positive_functional(X: VectorList) -> tuple[Fraction, ...] | None:
    """A rational c with c . a > 0 for every vector a of X, or None.

    The strict system is solvable iff { c : a . c >= 1 for all a } is
    nonempty, which is decided exactly by Fourier-Motzkin elimination with
    back-substitution.  The empty list returns the first unit vector
    (vacuous condition); any list containing a zero vector returns None.
    """
    n = X.dim
    if len(X) == 0:
        return tuple(Fraction(1 if j == 0 else 0) for j in range(n))
    if any(not any(v) for v in X.vectors):
        return None

    rows: list[Row] = [(tuple(-x for x in v), -1) for v in X.vectors]
    systems: list[list[Row]] = [[] for _ in range(n)]
    try:
        current = _reduce_rows(rows)
        systems[n - 1] = current
        for k in range(n - 1, 0, -1):
            current = _eliminate_var(current, k)
            systems[k - 1] = current
        # eliminating the last variable turns any contradiction into an
        # explicit 0 <= negative row; feasibility is decided here
        _eliminate_var(current, 0)
    except _Infeasible:
        return None

    point: list[Fraction] = []
    for k in range(n):
        lower = upper = None
        for coeffs, rhs in systems[k]:
            ck = coeffs[k]
            if ck == 0:
                continue
            bound = Fraction(rhs - sum(c * v for c, v in zip(coeffs, point)), ck)
            if ck > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        if lower is not None and upper is not None:
            value = (lower + upper) / 2
        elif lower is not None:
            value = lower
        elif upper is not None:
            value = upper
        else:
            value = Fraction(0)
        point.append(value)

    result = tuple(point)
    for v in X.vectors:
        if sum(c * x for c, x in zip(result, v)) <= 0:
            raise AssertionError("back-substitution produced an invalid functional")
    return result


def _solutions_single(vector: tuple[int, ...], target: Sequence[int]) -> int:
    """Number of integers x >= 0 with x * vector == target (vector nonzero)."""
    j = next(i for i, c in enumerate(vector) if c)
    num, den = target[j], vector[j]
    if num % den:
        return 0
    x = num // den
    if x < 0:
        return 0
    return 1 if all(x * c == t for c, t in zip(vector, target)) else 0


def partition_function(X: VectorList, target: Sequence[int]) -> int:
    """Number of ways to write the target as a nonnegative integer
    combination of the list vectors.

    Finiteness requires a functional that is strictly positive on every
    vector; the search is a depth-first enumeration pruned by the bound
    x_a <= (c . target) / (c . a) for that functional c.
    """
    lam = tuple(int(t) for t in target)
    if len(lam) != X.dim:
        raise ValueError(f"target has length {len(lam)}, expected {X.dim}")
    functional = find_positive_functional(X)
    if functional is None:
        raise UnboundedCone("no functional is strictly positive on the whole list")
    if len(X) == 0:
        return 1 if not any(lam) else 0

    vectors = list(X.vectors)
    weights = [sum(c * x for c, x in zip(functional, v)) for v in vectors]
    last = len(vectors) - 1

    def search(remaining: tuple[int, ...], budget: Fraction, idx: int) -> int:
        if idx == last:
            return _solutions_single(vectors[idx], remaining)
        w = weights[idx]
        cap = budget // w
        if cap < 0:
            return 0
        vec = vectors[idx]
        total = 0
        current = list(remaining)
        for step in range(cap + 1):
            if step:
                for j in range(len(current)):
                    current[j] -= vec[j]
            total += search(tuple(current), budget - step * w, idx + 1)
        return total

    budget = sum(c * t for c, t in zip(functional, lam))
    if budget < 0:
        return 0
    return search(lam, Fraction(budget), 0)
