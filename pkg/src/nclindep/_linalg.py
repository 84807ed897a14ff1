"""Exact elimination routines shared by the polynomial and matrix layers.

Two rank paths, per field:

* rationals -- rows are scaled to integers (rank is invariant under row
  scaling), then one-step fraction-free Bareiss elimination keeps every
  intermediate entry a determinantal minor, bounding coefficient growth;
* prime field -- ordinary Gaussian elimination with modular inverses.

Kernel extraction runs reduced row echelon form over the field and returns
one canonical left-kernel vector: integral and primitive with positive
leading entry over the rationals, monic leading entry over GF(p).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence

from .scalars import Field, QQ, RationalField, Scalar


def _rows_to_int(rows: Sequence[Sequence[Scalar]]) -> List[List[int]]:
    """Scale each rational row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in rows:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def bareiss_rank_int(rows: List[List[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.  Mutates `rows`."""
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            head = rows[i][c]
            ri, rr = rows[i], rows[r]
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * pivot - head * rr[j]) // prev
            ri[c] = 0
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def gauss_rank_field(rows: List[List[Scalar]], field: Field) -> int:
    """Rank by plain Gaussian elimination over the field.  Mutates `rows`."""
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv_pivot = field.div(field.one, rows[r][c])
        for i in range(r + 1, nrows):
            head = rows[i][c]
            if not head:
                continue
            factor = head * inv_pivot
            ri, rr = rows[i], rows[r]
            for j in range(c, ncols):
                ri[j] = ri[j] - factor * rr[j]
        r += 1
        if r == nrows:
            break
    return r


def exact_rank(rows: Sequence[Sequence[Scalar]], field: Field) -> int:
    if isinstance(field, RationalField):
        return bareiss_rank_int(_rows_to_int(rows))
    return gauss_rank_field([list(row) for row in rows], field)


def _rref(rows: List[List[Scalar]], field: Field) -> List[int]:
    """In-place reduced row echelon form; returns the pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv_pivot = field.div(field.one, rows[r][c])
        rows[r] = [x * inv_pivot for x in rows[r]]
        for i in range(nrows):
            if i == r or not rows[i][c]:
                continue
            factor = rows[i][c]
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def normalize_coefficients(vec: Sequence[Scalar], field: Field) -> tuple:
    """Canonical scaling: primitive integer vector with positive leading entry
    over the rationals, monic leading entry over a prime field."""
    lead = next((x for x in vec if x), None)
    if lead is None:
        return tuple(vec)
    if isinstance(field, RationalField):
        mult = lcm(*(x.denominator for x in vec))
        ints = [int(x * mult) for x in vec]
        g = gcd(*ints)
        if g:
            ints = [x // g for x in ints]
        lead_int = next(x for x in ints if x)
        if lead_int < 0:
            ints = [-x for x in ints]
        return tuple(ints)
    inv = field.div(field.one, lead)
    return tuple(x * inv for x in vec)


def left_kernel_vector(
    rows: Sequence[Sequence[Scalar]], field: Field
) -> Optional[tuple]:
    """One canonical vector x with x . rows = 0, or None if rows are independent.

    Deterministic: RREF of the transpose, kernel vector of the first free
    column, then `normalize_coefficients`.
    """
    m = len(rows)
    if m == 0:
        return None
    ncols = len(rows[0])
    transpose: List[List[Scalar]] = [[row[c] for row in rows] for c in range(ncols)]
    if isinstance(field, RationalField):
        transpose = [[Fraction(x) for x in row] for row in transpose]
    pivots = _rref(transpose, field)
    pivot_set = set(pivots)
    free = next((c for c in range(m) if c not in pivot_set), None)
    if free is None:
        return None
    vec: List[Scalar] = [field.zero] * m
    vec[free] = field.one
    for r, c in enumerate(pivots):
        vec[c] = -transpose[r][free]
    return normalize_coefficients(vec, field)
