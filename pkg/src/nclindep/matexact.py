"""Exact square-matrix algebra and the rank-bound checks it supports.

Matrices store a flat row-major tuple of exact scalars plus their field
configuration; rank runs fraction-free (Bareiss) elimination over the
rationals and plain Gaussian elimination in a prime field.  Vectorization
order, wherever a matrix becomes a row of numbers, is row-major.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import _linalg, kernels
from .freealg import NcPoly, Word
from .scalars import Field, QQ, Scalar, check_same_field


class Matrix:
    """Immutable d x d matrix of exact scalars (flat row-major storage)."""

    __slots__ = ("d", "data", "field")

    def __init__(self, d: int, entries: Sequence[Scalar], field: Field = QQ):
        if d < 1:
            raise ValueError("matrix dimension must be >= 1")
        data = tuple(field.normalize(x) for x in entries)
        if len(data) != d * d:
            raise ValueError(f"expected {d * d} entries for a {d}x{d} matrix, got {len(data)}")
        self.d = d
        self.data = data
        self.field = field

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], field: Field = QQ) -> "Matrix":
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix rows must form a square")
        return cls(d, [x for row in rows for x in row], field)

    @classmethod
    def zeros(cls, d: int, field: Field = QQ) -> "Matrix":
        return cls(d, [field.zero] * (d * d), field)

    @classmethod
    def identity(cls, d: int, field: Field = QQ) -> "Matrix":
        entries = [field.zero] * (d * d)
        for i in range(d):
            entries[i * d + i] = field.one
        return cls(d, entries, field)

    @classmethod
    def unit(cls, d: int, row: int, col: int, field: Field = QQ) -> "Matrix":
        """Matrix unit E_{row,col} with 0-based indices."""
        entries = [field.zero] * (d * d)
        entries[row * d + col] = field.one
        return cls(d, entries, field)

    def entry(self, row: int, col: int) -> Scalar:
        return self.data[row * self.d + col]

    def row(self, i: int) -> tuple:
        return self.data[i * self.d : (i + 1) * self.d]

    @property
    def vec(self) -> tuple:
        """Row-major vectorization (the fixed order used for stacking)."""
        return self.data

    @property
    def is_zero(self) -> bool:
        return not any(self.data)

    def _check(self, other: "Matrix") -> None:
        check_same_field(self.field, other.field)
        if self.d != other.d:
            raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.d, [a + b for a, b in zip(self.data, other.data)], self.field)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.d, [a - b for a, b in zip(self.data, other.data)], self.field)

    def __neg__(self):
        return Matrix(self.d, [-a for a in self.data], self.field)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            return Matrix(self.d, kernels.mat_mul(self.data, other.data, self.d), self.field)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, coeff) -> "Matrix":
        return Matrix(self.d, [coeff * a for a in self.data], self.field)

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            raise ValueError("negative matrix powers are not supported")
        acc = Matrix.identity(self.d, self.field)
        for _ in range(n):
            acc = acc * self
        return acc

    def apply(self, vector: Sequence[Scalar]) -> list:
        """Matrix-vector product."""
        d = self.d
        return [
            sum((self.data[i * d + k] * vector[k] for k in range(1, d)),
                start=self.data[i * d] * vector[0])
            for i in range(d)
        ]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.d == other.d and self.field == other.field and self.data == other.data

    __hash__ = None

    def __repr__(self):
        rows = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(self.d)
        )
        return f"Matrix({self.d}x{self.d}: {rows})"


@dataclass(frozen=True)
class MatTuple:
    """An evaluation point: one matrix per variable index (1-based)."""

    mats: Tuple[Matrix, ...]
    dim: int
    field: Field

    @classmethod
    def of(cls, matrices: Sequence[Matrix], dim: Optional[int] = None, field: Optional[Field] = None) -> "MatTuple":
        mats = tuple(matrices)
        if mats:
            dim = mats[0].d
            field = mats[0].field
            for m in mats[1:]:
                check_same_field(field, m.field)
                if m.d != dim:
                    raise ValueError("all matrices in a tuple must share one dimension")
        elif dim is None or field is None:
            raise ValueError("an empty tuple needs an explicit dimension and field")
        return cls(mats, dim, field)

    def __len__(self) -> int:
        return len(self.mats)

    def for_var(self, index: int) -> Matrix:
        """Matrix standing for X_index (1-based)."""
        return self.mats[index - 1]


def mat_rank(matrix: Matrix) -> int:
    """Exact rank (fraction-free over the rationals, Gaussian over GF(p))."""
    rows = [matrix.row(i) for i in range(matrix.d)]
    return _linalg.exact_rank(rows, matrix.field)


def stacked_rank(rows: Sequence[Sequence[Scalar]], field: Field) -> int:
    """Exact rank of an arbitrary stack of row vectors."""
    return _linalg.exact_rank(rows, field)


def evaluate_poly(poly: NcPoly, point: MatTuple) -> Matrix:
    """Ring-homomorphism evaluation of a polynomial at a matrix tuple.

    Word products are cached by prefix for the duration of the call, so
    monomials sharing prefixes (as in alternating polynomials) are multiplied
    once.
    """
    check_same_field(poly.field, point.field)
    if poly.nvars > len(point):
        raise ValueError(
            f"polynomial uses X{poly.nvars} but the tuple only covers {len(point)} variables"
        )
    d = point.dim
    identity = Matrix.identity(d, point.field)
    cache: Dict[Word, Matrix] = {(): identity}

    def word_value(word: Word) -> Matrix:
        hit = cache.get(word)
        if hit is None:
            hit = word_value(word[:-1]) * point.for_var(word[-1])
            cache[word] = hit
        return hit

    total = Matrix.zeros(d, point.field)
    for word, coeff in poly.sorted_terms():
        total = total + word_value(word).scale(coeff)
    return total


def eval_alternating(
    kind: str,
    xs: Sequence[Matrix],
    ys: Optional[Sequence[Matrix]] = None,
) -> Matrix:
    """Evaluate the degree-n alternating sum (kind 'standard') or its Capelli
    form (kind 'capelli', with n-1 interleavers) at matrices, by subset
    dynamic programming; equals the naive n!-term permutation sum exactly.
    """
    xs = list(xs)
    n = len(xs)
    if n < 1:
        raise ValueError("need at least one matrix")
    field = xs[0].field
    d = xs[0].d
    for m in xs:
        check_same_field(field, m.field)
        if m.d != d:
            raise ValueError("dimension mismatch in xs")
    if kind == "standard":
        if ys:
            raise ValueError("standard form takes no interleavers")
        ys_data = None
    elif kind == "capelli":
        ys = list(ys or [])
        if len(ys) != n - 1:
            raise ValueError(f"capelli form needs {n - 1} interleavers, got {len(ys)}")
        for m in ys:
            check_same_field(field, m.field)
            if m.d != d:
                raise ValueError("dimension mismatch in ys")
        ys_data = [m.data for m in ys]
    else:
        raise ValueError(f"unknown kind {kind!r} (expected 'standard' or 'capelli')")
    result = kernels.alternating_sum([m.data for m in xs], ys_data, d, field.zero)
    return Matrix(d, result, field)


def derive_trial_seed(seed: int, trial: int) -> int:
    """Deterministic per-trial seed stream for samplers and parallel workers."""
    return seed * 1_000_003 + trial


def random_matrix_tuple(
    count: int, dim: int, bound: int, seed: int, field: Field = QQ
) -> MatTuple:
    """Tuple of `count` matrices with entries uniform on the integers [-bound, bound],
    mapped into the field.  Deterministic for a fixed seed."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if bound < 1:
        raise ValueError("entry bound must be >= 1")
    rng = random.Random(seed)
    mats = [
        Matrix(dim, [field.from_int(rng.randint(-bound, bound)) for _ in range(dim * dim)], field)
        for _ in range(count)
    ]
    return MatTuple.of(mats, dim=dim, field=field)


def random_vector(dim: int, bound: int, rng: random.Random, field: Field = QQ) -> list:
    return [field.from_int(rng.randint(-bound, bound)) for _ in range(dim)]


# ---------------------------------------------------------------------------
# local linear dependence of operators, decided symbolically
# ---------------------------------------------------------------------------

# Internal commutative polynomials in the coordinates of a generic vector v:
# a monomial is a sorted tuple of variable indices, a polynomial a dict
# monomial -> scalar.  Only what the minor expansion needs.


def _linform_mul(poly: dict, linear: Sequence[Scalar]) -> dict:
    out: dict = {}
    for mono, coeff in poly.items():
        for var, a in enumerate(linear):
            if not a:
                continue
            key = tuple(sorted(mono + (var,)))
            acc = out.get(key)
            acc = coeff * a if acc is None else acc + coeff * a
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


def _minor_is_zero(columns: List[List[Sequence[Scalar]]], rows: Tuple[int, ...], field: Field) -> bool:
    """Determinant of the minor [linear form]_{i in rows, j} as a polynomial; True iff 0."""
    m = len(columns)
    total: dict = {}
    for perm in permutations(range(m)):
        inversions = sum(
            1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j]
        )
        sign = -1 if inversions & 1 else 1
        prod = {(): field.one}
        for k in range(m):
            prod = _linform_mul(prod, columns[perm[k]][rows[k]])
            if not prod:
                break
        for mono, coeff in prod.items():
            acc = total.get(mono)
            acc = sign * coeff if acc is None else acc + sign * coeff
            if acc:
                total[mono] = acc
            elif mono in total:
                del total[mono]
    return not total


def verify_local_dependence_exact(ts: Sequence[Matrix]) -> bool:
    """True iff T_1 v, ..., T_m v are linearly dependent for EVERY vector v.

    Decided exactly: with v a vector of indeterminates, the d x m matrix
    [T_1 v ... T_m v] has linear-form entries, and local dependence is
    equivalent to every m x m minor vanishing identically.  When m exceeds
    the dimension this holds trivially.
    """
    ts = list(ts)
    m = len(ts)
    if m == 0:
        raise ValueError("need at least one operator")
    d = ts[0].d
    field = ts[0].field
    for t in ts[1:]:
        check_same_field(field, t.field)
        if t.d != d:
            raise ValueError("dimension mismatch")
    if m > d:
        return True
    # column j, row i: the linear form sum_k T_j[i, k] v_k
    columns = [[t.row(i) for i in range(d)] for t in ts]
    for rows in combinations(range(d), m):
        if not _minor_is_zero(columns, rows, field):
            return False
    return True


@dataclass(frozen=True)
class CapelliRankBound:
    rank: int
    bound: int
    holds: bool


def capelli_rank_bound_check(ts: Sequence[Matrix], ds: Sequence[Matrix]) -> CapelliRankBound:
    """Rank of the Capelli evaluation at locally dependent operators, against
    the bound (m-1) * m!.  The hypothesis is re-checked and enforced."""
    ts = list(ts)
    m = len(ts)
    if not verify_local_dependence_exact(ts):
        raise ValueError("operators are not locally linearly dependent; the rank bound does not apply")
    value = eval_alternating("capelli", ts, ds)
    rank = mat_rank(value)
    bound = (m - 1) * math.factorial(m)
    return CapelliRankBound(rank=rank, bound=bound, holds=rank <= bound)


@dataclass(frozen=True)
class PowerDependence:
    rank: int
    dependent: bool
    coefficients: tuple


def power_dependence_check(matrix: Matrix) -> PowerDependence:
    """Exact dependence certificate for A, A^2, ..., A^(r+1) with r = rank(A).

    Dependence is guaranteed (the induced map on the image satisfies its own
    degree-r characteristic polynomial), so a missing kernel vector signals an
    internal error rather than a valid outcome.
    """
    r = mat_rank(matrix)
    powers = [matrix ** i for i in range(1, r + 2)]
    rows = [p.vec for p in powers]
    kernel = _linalg.left_kernel_vector(rows, matrix.field)
    if kernel is None:
        raise RuntimeError("powers A..A^(r+1) reported independent; rank computation is inconsistent")
    return PowerDependence(rank=r, dependent=True, coefficients=kernel)


# ---------------------------------------------------------------------------
# JSON forms (shared with the command line)
# ---------------------------------------------------------------------------


def matrix_to_json(matrix: Matrix) -> dict:
    return {
        "d": matrix.d,
        "entries": [[str(x) for x in matrix.row(i)] for i in range(matrix.d)],
    }


def matrix_from_json(obj: dict, field: Field = QQ) -> Matrix:
    try:
        d = int(obj["d"])
        rows = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad matrix JSON: {exc}") from None
    if len(rows) != d or any(len(r) != d for r in rows):
        raise ValueError(f"matrix JSON entries do not form a {d}x{d} square")
    entries = [field.parse(str(x)) for row in rows for x in row]
    return Matrix(d, entries, field)


def mat_tuple_to_json(point: MatTuple) -> dict:
    return {"matrices": [matrix_to_json(m) for m in point.mats]}


def mat_tuple_from_json(obj: dict, field: Field = QQ) -> MatTuple:
    if "matrices" in obj:
        mats = [matrix_from_json(m, field) for m in obj["matrices"]]
        if not mats:
            raise ValueError("matrix tuple JSON holds no matrices")
        return MatTuple.of(mats)
    # a single matrix object is accepted as a 1-tuple
    return MatTuple.of([matrix_from_json(obj, field)])
