"""Pure-Python evaluation kernels (fallback backend).

Matrices are flat row-major lists of exact scalars (int, Fraction or ModP).
`alternating_sum` is the subset dynamic program over prefix states: the state
for a set P of chosen arguments is the signed sum, over all orderings of P,
of the partial products (with the interleavers y_1..y_{|P|-1} in their fixed
positions).  Extending P by argument j multiplies by y_{|P|} (Capelli only)
and then by x_j, with sign (-1)^(number of elements of P exceeding j) — the
inversions j contributes to the final permutation.  This costs O(n 2^n)
matrix products instead of the naive O(n! n).

`alternating_sum_naive` is the literal n!-term permutation sum, kept as the
benchmark baseline; permutations are walked with Heap's algorithm so each
step is a single transposition and the sign simply flips.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

BACKEND = "pure-python"


def mat_mul(a: Sequence, b: Sequence, d: int) -> list:
    """Product of two d x d flat row-major matrices of exact scalars."""
    out = [None] * (d * d)
    for i in range(d):
        ai = i * d
        for j in range(d):
            acc = a[ai] * b[j]
            for k in range(1, d):
                acc = acc + a[ai + k] * b[k * d + j]
            out[ai + j] = acc
    return out


def _accumulate(acc: Optional[list], term: list, sign: int, size: int):
    if acc is None:
        return list(term) if sign > 0 else [-x for x in term]
    if sign > 0:
        for idx in range(size):
            acc[idx] = acc[idx] + term[idx]
    else:
        for idx in range(size):
            acc[idx] = acc[idx] - term[idx]
    return acc


def alternating_sum(xs: Sequence[Sequence], ys: Optional[Sequence[Sequence]], d: int, zero) -> list:
    """Sum over permutations pi of sign(pi) * x_pi(1) y_1 x_pi(2) y_2 ... x_pi(n).

    ys is None for the plain alternating (standard-polynomial) form; for the
    Capelli form it must hold n-1 interleaver matrices.
    """
    n = len(xs)
    size = d * d
    states = {1 << j: list(xs[j]) for j in range(n)}
    for level in range(1, n):
        y = ys[level - 1] if ys is not None else None
        next_states: dict = {}
        for mask, state in states.items():
            base = mat_mul(state, y, d) if y is not None else state
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                term = mat_mul(base, xs[j], d)
                sign = -1 if (mask >> (j + 1)).bit_count() & 1 else 1
                next_states[mask | bit] = _accumulate(
                    next_states.get(mask | bit), term, sign, size
                )
        states = next_states
    return states[(1 << n) - 1]


def alternating_sum_naive(
    xs: Sequence[Sequence], ys: Optional[Sequence[Sequence]], d: int, zero
) -> list:
    """Reference n!-permutation sum (one full product chain per permutation)."""
    n = len(xs)
    size = d * d
    order = list(range(n))
    acc: Optional[list] = None
    sign = 1

    def product() -> list:
        prod = xs[order[0]]
        for k in range(1, n):
            if ys is not None:
                prod = mat_mul(prod, ys[k - 1], d)
            prod = mat_mul(prod, xs[order[k]], d)
        return list(prod)

    acc = _accumulate(acc, product(), sign, size)
    # Heap's algorithm: successive permutations differ by one transposition.
    counters = [0] * n
    i = 0
    while i < n:
        if counters[i] < i:
            if i % 2 == 0:
                order[0], order[i] = order[i], order[0]
            else:
                order[counters[i]], order[i] = order[i], order[counters[i]]
            sign = -sign
            acc = _accumulate(acc, product(), sign, size)
            counters[i] += 1
            i = 0
        else:
            counters[i] = 0
            i += 1
    return acc if acc is not None else [zero] * size
