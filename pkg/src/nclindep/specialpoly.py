"""Constructors for the distinguished alternating polynomials and the symbolic
Capelli dependence test in the free algebra.

The degree-n alternating polynomial (``standard_poly``) is the signed sum over
all orderings of n distinct variables.  The Capelli variant interleaves fixed
extra variables between the alternating slots; composing it with a family
f_1..f_m and deciding whether the result is the zero polynomial decides linear
dependence of the family symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence, Tuple

from .freealg import NcPoly, global_dependence, poly_family
from .scalars import Field, QQ
from .verdict import DependenceVerdict, DEPENDENT, INDEPENDENT


def perm_sign(perm: Sequence[int]) -> int:
    """Parity of a permutation given as a sequence of distinct values."""
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions & 1 else 1


def standard_poly(n: int, field: Field = QQ) -> NcPoly:
    """Signed sum of X_pi(1)...X_pi(n) over all permutations pi; n! terms."""
    if n < 1:
        raise ValueError("standard polynomial needs n >= 1")
    terms = {}
    for perm in permutations(range(1, n + 1)):
        terms[perm] = field.from_int(perm_sign(perm))
    return NcPoly(terms, field)


def capelli_poly(n: int, field: Field = QQ) -> NcPoly:
    """Alternating polynomial on X_1..X_n with interleavers X_{n+1}..X_{2n-1}.

    Each term reads X_pi(1) X_{n+1} X_pi(2) X_{n+2} ... X_{2n-1} X_pi(n);
    substituting 1 for every interleaver recovers standard_poly(n).
    """
    if n < 1:
        raise ValueError("Capelli polynomial needs n >= 1")
    terms = {}
    for perm in permutations(range(1, n + 1)):
        word = []
        for slot, letter in enumerate(perm):
            word.append(letter)
            if slot < n - 1:
                word.append(n + 1 + slot)
        terms[tuple(word)] = field.from_int(perm_sign(perm))
    return NcPoly(terms, field)


def central_poly_2x2(field: Field = QQ) -> NcPoly:
    """(X1*X2 - X2*X1)^2: every 2x2 evaluation is a scalar multiple of I."""
    st2 = standard_poly(2, field)
    return st2 * st2


def commutator_embed(poly: NcPoly) -> NcPoly:
    """Push a polynomial into the two-variable algebra via iterated commutators.

    X1 maps to X1, and X_n maps to [image of X_{n-1}, X2] for n >= 2, so the
    output involves only X1 and X2.  Linear independence is preserved (the map
    is an embedding of free algebras).
    """
    field = poly.field
    x2 = NcPoly.var(2, field)
    images = {1: NcPoly.var(1, field)}
    for index in range(2, poly.nvars + 1):
        prev = images[index - 1]
        images[index] = prev * x2 - x2 * prev
    return poly.substitute(images)


@dataclass(frozen=True)
class CapelliComposition:
    """The Capelli polynomial of a family, with fresh interleaver variables.

    fresh_vars hold the m-1 interleaver indices, chosen strictly above every
    variable index occurring in the family; substituting 1 for all of them
    yields standard_poly(m) applied to the family.  zero_member flags that
    some input was the zero polynomial (which forces h = 0 by alternation).
    """

    h: NcPoly
    fresh_vars: Tuple[int, ...]
    zero_member: bool = False


def capelli_compose(polys: Sequence[NcPoly]) -> CapelliComposition:
    fs = poly_family(polys)
    field = fs[0].field
    m = len(fs)
    base = max(f.nvars for f in fs)
    fresh = tuple(range(base + 1, base + m))
    if any(f.is_zero for f in fs):
        return CapelliComposition(NcPoly.zero(field), fresh, zero_member=True)
    images = {i + 1: f for i, f in enumerate(fs)}
    for j, index in enumerate(fresh):
        images[m + 1 + j] = NcPoly.var(index, field)
    return CapelliComposition(capelli_poly(m, field).substitute(images), fresh)


def razmyslov_symbolic_dependence(polys: Sequence[NcPoly]) -> DependenceVerdict:
    """Linear dependence decided in the free algebra itself: the family is
    dependent exactly when its Capelli composition is the zero polynomial.

    Dependent verdicts carry coefficients recovered from the coefficient-
    matrix decider, so certificates re-verify the same way everywhere.
    """
    fs = poly_family(polys)
    if capelli_compose(fs).h.is_zero:
        exact = global_dependence(fs)
        return DependenceVerdict(status=DEPENDENT, coefficients=exact.coefficients)
    return DependenceVerdict(status=INDEPENDENT)
