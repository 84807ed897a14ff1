"""Arithmetic in the free associative algebra on noncommuting variables X1, X2, ...

A *word* is a tuple of 1-based variable indices; the empty tuple is the unit.
An :class:`NcPoly` maps words to nonzero scalars (canonical form: zero
coefficients are never stored).  Multiplication concatenates words and is
noncommutative.  All values are immutable after construction and all
operations are pure functions, so everything here is safe to share across
threads.

The canonical term order everywhere in this package is degree-lexicographic:
shorter words first, ties broken by letterwise comparison.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from . import _linalg
from .scalars import Field, QQ, Scalar, check_same_field
from .verdict import DependenceVerdict, DEPENDENT, INDEPENDENT

Word = Tuple[int, ...]

#: Degree of the zero polynomial: a sentinel strictly below every integer.
ZERO_DEGREE = float("-inf")


def deglex_key(word: Word):
    return (len(word), word)


def _validated_word(word: Iterable[int]) -> Word:
    w = tuple(word)
    for letter in w:
        if not isinstance(letter, int) or letter < 1:
            raise ValueError(f"variable indices are 1-based positive ints, got {letter!r}")
    return w


class NcPoly:
    """A polynomial in noncommuting variables over a fixed scalar field."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None, field: Field = QQ):
        clean: Dict[Word, Scalar] = {}
        if terms:
            for word, coeff in terms.items():
                coeff = field.normalize(coeff)
                if coeff:
                    clean[_validated_word(word)] = coeff
        self.terms = clean
        self.field = field

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: Field = QQ) -> "NcPoly":
        return cls({}, field)

    @classmethod
    def one(cls, field: Field = QQ) -> "NcPoly":
        return cls({(): field.one}, field)

    @classmethod
    def var(cls, index: int, field: Field = QQ) -> "NcPoly":
        return cls({(index,): field.one}, field)

    @classmethod
    def word(cls, letters: Iterable[int], coeff=1, field: Field = QQ) -> "NcPoly":
        return cls({tuple(letters): field.normalize(coeff)}, field)

    @classmethod
    def constant(cls, value, field: Field = QQ) -> "NcPoly":
        return cls({(): field.normalize(value)}, field)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Max word length, or the ZERO_DEGREE sentinel for the zero polynomial."""
        if not self.terms:
            return ZERO_DEGREE
        return max(len(w) for w in self.terms)

    @property
    def nvars(self) -> int:
        """Smallest n such that every letter is <= n."""
        return max((max(w) for w in self.terms if w), default=0)

    def sorted_terms(self) -> list:
        """(word, coeff) pairs in deglex order."""
        return sorted(self.terms.items(), key=lambda item: deglex_key(item[0]))

    def support(self) -> list:
        return sorted(self.terms, key=deglex_key)

    def coefficient(self, word: Iterable[int]) -> Scalar:
        return self.terms.get(tuple(word), self.field.zero)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "NcPoly") -> None:
        check_same_field(self.field, other.field)

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = out.get(word)
            if acc is None:
                out[word] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[word] = acc
                else:
                    del out[word]
        result = NcPoly.__new__(NcPoly)
        result.terms = out
        result.field = self.field
        return result

    def __neg__(self):
        result = NcPoly.__new__(NcPoly)
        result.terms = {w: -c for w, c in self.terms.items()}
        result.field = self.field
        return result

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        self._check(other)
        out: Dict[Word, Scalar] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                word = wa + wb
                coeff = ca * cb
                acc = out.get(word)
                if acc is None:
                    out[word] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        out[word] = acc
                    else:
                        del out[word]
        result = NcPoly.__new__(NcPoly)
        result.terms = out
        result.field = self.field
        return result

    def __rmul__(self, other):
        # scalar * poly; poly * poly is handled by __mul__
        return self.scale(other)

    def scale(self, coeff) -> "NcPoly":
        coeff = self.field.normalize(coeff)
        if not coeff:
            return NcPoly.zero(self.field)
        result = NcPoly.__new__(NcPoly)
        result.terms = {w: c * coeff for w, c in self.terms.items()}
        result.field = self.field
        return result

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in the free algebra")
        acc = NcPoly.one(self.field)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; identity hashing would be a trap

    def substitute(self, images: Mapping[int, "NcPoly"]) -> "NcPoly":
        """Apply the algebra homomorphism X_i -> images[i].

        Every variable occurring in the polynomial must have an image; the
        images must share this polynomial's scalar configuration.
        """
        for img in images.values():
            self._check(img)
        missing = {v for w in self.terms for v in w} - set(images)
        if missing:
            raise ValueError(f"no image for variable(s) X{sorted(missing)}")
        cache: Dict[Word, NcPoly] = {(): NcPoly.one(self.field)}

        def word_image(word: Word) -> NcPoly:
            hit = cache.get(word)
            if hit is None:
                hit = word_image(word[:-1]) * images[word[-1]]
                cache[word] = hit
            return hit

        total = NcPoly.zero(self.field)
        for word, coeff in self.sorted_terms():
            total = total + word_image(word).scale(coeff)
        return total

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"NcPoly({self})"


def poly_family(polys: Sequence[NcPoly]) -> Tuple[NcPoly, ...]:
    """Validate a nonempty family sharing one scalar configuration."""
    fs = tuple(polys)
    if not fs:
        raise ValueError("empty polynomial family")
    for f in fs[1:]:
        check_same_field(fs[0].field, f.field)
    return fs


class CoefficientMatrix:
    """Rows of coefficients over the deglex-sorted union of supports.

    Row i reproduces polynomial i: summing coeff*word over the basis gives
    back the input exactly.
    """

    __slots__ = ("basis", "rows", "field")

    def __init__(self, basis: Tuple[Word, ...], rows: Tuple[tuple, ...], field: Field):
        self.basis = basis
        self.rows = rows
        self.field = field

    def reconstruct(self, i: int) -> NcPoly:
        return NcPoly(dict(zip(self.basis, self.rows[i])), self.field)


def coefficient_matrix(polys: Sequence[NcPoly]) -> CoefficientMatrix:
    fs = poly_family(polys)
    field = fs[0].field
    basis = sorted({w for f in fs for w in f.terms}, key=deglex_key)
    rows = tuple(
        tuple(f.terms.get(w, field.zero) for w in basis) for f in fs
    )
    return CoefficientMatrix(tuple(basis), rows, field)


def global_dependence(polys: Sequence[NcPoly]) -> DependenceVerdict:
    """Exact linear (in)dependence of a finite family in the free algebra.

    Dependent verdicts carry a canonical nonzero coefficient vector in the
    left kernel of the coefficient matrix; re-expanding it against the family
    always yields the zero polynomial.
    """
    mat = coefficient_matrix(polys)
    kernel = _linalg.left_kernel_vector(mat.rows, mat.field)
    if kernel is None:
        return DependenceVerdict(status=INDEPENDENT)
    return DependenceVerdict(status=DEPENDENT, coefficients=kernel)


def expand_combination(coefficients: Sequence[Scalar], polys: Sequence[NcPoly]) -> NcPoly:
    """Sum of coeff_j * f_j, used to re-verify dependence certificates."""
    fs = poly_family(polys)
    if len(coefficients) != len(fs):
        raise ValueError("coefficient vector length does not match the family")
    total = NcPoly.zero(fs[0].field)
    for coeff, f in zip(coefficients, fs):
        total = total + f.scale(coeff)
    return total
