# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled evaluation kernels (same contract as nclindep._pykernels).

Exactness is non-negotiable: the machine-int path is taken only when every
entry is a plain int and an a-priori worst-case magnitude bound
(n! * d^(L-1) * prod of per-matrix max|entry|) certifies that no intermediate
value can reach 2^62.  Everything else runs the generic object path, which
handles big ints, Fractions and prime-field residues.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy

from math import factorial

BACKEND = "compiled"

cdef long long MAX_DP_BYTES = 268435456  # 256 MiB cap on the int64 DP state table


cdef int _popcount(unsigned long long x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


# ---------------------------------------------------------------------------
# object-scalar paths (generic exact arithmetic)
# ---------------------------------------------------------------------------

def mat_mul(a, b, int d):
    """Product of two d x d flat row-major matrices of exact scalars."""
    cdef int i, j, k, ai
    out = [None] * (d * d)
    for i in range(d):
        ai = i * d
        for j in range(d):
            acc = a[ai] * b[j]
            for k in range(1, d):
                acc = acc + a[ai + k] * b[k * d + j]
            out[ai + j] = acc
    return out


cdef list _accumulate(acc, term, int sign, int size):
    cdef int idx
    if acc is None:
        if sign > 0:
            return list(term)
        return [-x for x in term]
    if sign > 0:
        for idx in range(size):
            acc[idx] = acc[idx] + term[idx]
    else:
        for idx in range(size):
            acc[idx] = acc[idx] - term[idx]
    return acc


def _alternating_obj(xs, ys, int d):
    cdef int n = len(xs)
    cdef int size = d * d
    cdef int level, j
    cdef long long mask, bit, tgt
    cdef int sign
    states = {1 << j: list(xs[j]) for j in range(n)}
    for level in range(1, n):
        y = ys[level - 1] if ys is not None else None
        next_states = {}
        for mask, state in states.items():
            base = mat_mul(state, y, d) if y is not None else state
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                term = mat_mul(base, xs[j], d)
                sign = -1 if _popcount(<unsigned long long>(mask >> (j + 1))) & 1 else 1
                tgt = mask | bit
                next_states[tgt] = _accumulate(next_states.get(tgt), term, sign, size)
        states = next_states
    return states[(1 << n) - 1]


def _naive_obj(xs, ys, int d):
    cdef int n = len(xs)
    cdef int size = d * d
    cdef int i, k, sign = 1
    order = list(range(n))
    counters = [0] * n
    acc = None
    while True:
        prod = xs[order[0]]
        for k in range(1, n):
            if ys is not None:
                prod = mat_mul(prod, ys[k - 1], d)
            prod = mat_mul(prod, xs[order[k]], d)
        acc = _accumulate(acc, prod, sign, size)
        # Heap's algorithm: advance to the next permutation
        i = 0
        while i < n and counters[i] >= i:
            counters[i] = 0
            i += 1
        if i >= n:
            break
        if i % 2 == 0:
            order[0], order[i] = order[i], order[0]
        else:
            order[counters[i]], order[i] = order[i], order[counters[i]]
        sign = -sign
        counters[i] += 1
    return acc


# ---------------------------------------------------------------------------
# int64 fast paths
# ---------------------------------------------------------------------------

def _int64_eligible(xs, ys, int d, zero):
    """True when all entries are machine-safe ints under the worst-case bound."""
    if type(zero) is not int:
        return False
    mats = list(xs)
    if ys is not None:
        mats.extend(ys)
    prod_bound = 1
    for m in mats:
        mx = 0
        for e in m:
            if type(e) is not int:
                return False
            ae = -e if e < 0 else e
            if ae > mx:
                mx = ae
        prod_bound *= mx if mx > 1 else 1
    chain_len = len(mats)
    worst = factorial(len(xs)) * d ** max(chain_len - 1, 0) * prod_bound
    return worst < (1 << 62)


cdef int64_t* _pack(mats, int size) except NULL:
    cdef int count = len(mats)
    cdef int64_t* buf = <int64_t*>malloc(count * size * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef int m, i
    for m in range(count):
        src = mats[m]
        for i in range(size):
            buf[m * size + i] = src[i]
    return buf


cdef void _mm64(int64_t* a, int64_t* b, int64_t* out, int d) noexcept nogil:
    cdef int i, j, k
    cdef int64_t acc
    for i in range(d):
        for j in range(d):
            acc = 0
            for k in range(d):
                acc += a[i * d + k] * b[k * d + j]
            out[i * d + j] = acc


cdef void _mm64_add(int64_t* a, int64_t* b, int64_t* out, int d, int sign) noexcept nogil:
    cdef int i, j, k
    cdef int64_t acc
    for i in range(d):
        for j in range(d):
            acc = 0
            for k in range(d):
                acc += a[i * d + k] * b[k * d + j]
            if sign > 0:
                out[i * d + j] += acc
            else:
                out[i * d + j] -= acc


def _alternating_i64(xs, ys, int d):
    cdef int n = len(xs)
    cdef int size = d * d
    cdef long long nstates = <long long>1 << n
    if nstates * size * <long long>sizeof(int64_t) > MAX_DP_BYTES:
        return None
    cdef int64_t* X = _pack(xs, size)
    cdef int64_t* Y = NULL
    cdef bint capelli = ys is not None
    if capelli:
        Y = _pack(ys, size)
    cdef int64_t** states = <int64_t**>calloc(nstates, sizeof(int64_t*))
    cdef int64_t* base = <int64_t*>malloc(size * sizeof(int64_t))
    cdef long long mask, bit, tgt
    cdef int j, k, sign, idx
    cdef int64_t* src
    try:
        if states == NULL or base == NULL:
            raise MemoryError()
        for j in range(n):
            states[<long long>1 << j] = <int64_t*>malloc(size * sizeof(int64_t))
            if states[<long long>1 << j] == NULL:
                raise MemoryError()
            memcpy(states[<long long>1 << j], X + j * size, size * sizeof(int64_t))
        for mask in range(1, nstates - 1):
            if states[mask] == NULL:
                continue
            k = _popcount(<unsigned long long>mask)
            if k == n:
                continue
            if capelli:
                _mm64(states[mask], Y + (k - 1) * size, base, d)
                src = base
            else:
                src = states[mask]
            for j in range(n):
                bit = <long long>1 << j
                if mask & bit:
                    continue
                tgt = mask | bit
                if states[tgt] == NULL:
                    states[tgt] = <int64_t*>calloc(size, sizeof(int64_t))
                    if states[tgt] == NULL:
                        raise MemoryError()
                sign = -1 if _popcount(<unsigned long long>(mask >> (j + 1))) & 1 else 1
                _mm64_add(src, X + j * size, states[tgt], d, sign)
        return [states[nstates - 1][idx] for idx in range(size)]
    finally:
        free(X)
        if Y != NULL:
            free(Y)
        if states != NULL:
            for mask in range(nstates):
                if states[mask] != NULL:
                    free(states[mask])
            free(states)
        if base != NULL:
            free(base)


def _naive_i64(xs, ys, int d):
    cdef int n = len(xs)
    cdef int size = d * d
    cdef bint capelli = ys is not None
    cdef int64_t* X = _pack(xs, size)
    cdef int64_t* Y = _pack(ys, size) if capelli else NULL
    cdef int64_t* acc = <int64_t*>calloc(size, sizeof(int64_t))
    cdef int64_t* cur = <int64_t*>malloc(size * sizeof(int64_t))
    cdef int64_t* nxt = <int64_t*>malloc(size * sizeof(int64_t))
    cdef int* order = <int*>malloc(n * sizeof(int))
    cdef int* counters = <int*>calloc(n, sizeof(int))
    cdef int i, k, idx, sign = 1, tmp
    cdef int64_t* swap
    try:
        if acc == NULL or cur == NULL or nxt == NULL or order == NULL or counters == NULL:
            raise MemoryError()
        for i in range(n):
            order[i] = i
        with nogil:
            while True:
                # product chain for the current permutation
                memcpy(cur, X + order[0] * size, size * sizeof(int64_t))
                for k in range(1, n):
                    if capelli:
                        _mm64(cur, Y + (k - 1) * size, nxt, d)
                        swap = cur; cur = nxt; nxt = swap
                    _mm64(cur, X + order[k] * size, nxt, d)
                    swap = cur; cur = nxt; nxt = swap
                if sign > 0:
                    for idx in range(size):
                        acc[idx] += cur[idx]
                else:
                    for idx in range(size):
                        acc[idx] -= cur[idx]
                # Heap's algorithm: advance to the next permutation
                i = 0
                while i < n and counters[i] >= i:
                    counters[i] = 0
                    i += 1
                if i >= n:
                    break
                if i % 2 == 0:
                    tmp = order[0]; order[0] = order[i]; order[i] = tmp
                else:
                    tmp = order[counters[i]]; order[counters[i]] = order[i]; order[i] = tmp
                sign = -sign
                counters[i] += 1
        return [acc[idx] for idx in range(size)]
    finally:
        free(X)
        if Y != NULL:
            free(Y)
        if acc != NULL:
            free(acc)
        if cur != NULL:
            free(cur)
        if nxt != NULL:
            free(nxt)
        if order != NULL:
            free(order)
        if counters != NULL:
            free(counters)


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def alternating_sum(xs, ys, int d, zero):
    """Subset-DP alternating sum; see nclindep._pykernels for the contract."""
    if _int64_eligible(xs, ys, d, zero):
        result = _alternating_i64(xs, ys, d)
        if result is not None:
            return result
    return _alternating_obj(xs, ys, d)


def alternating_sum_naive(xs, ys, int d, zero):
    """Literal n!-permutation sum (benchmark baseline)."""
    if _int64_eligible(xs, ys, d, zero):
        return _naive_i64(xs, ys, d)
    return _naive_obj(xs, ys, d)
