# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython speedups: same contracts as partitionlab._kernels_py.

Coefficients stay arbitrary-precision Python ints (exactness is the
whole point); the win comes from C loop indices and, for the partition
sweep, from doing the entire enumeration with C integers.
"""

from libc.stdlib cimport free, malloc

# largest n with n * p(n) < 2**63; bounds every int64 accumulator below
MAX_SWEEP_N = 316


def convolve(list a, list b):
    """Truncated Cauchy product of two coefficient lists of equal length."""
    cdef Py_ssize_t n = len(a)
    if len(b) != n:
        raise ValueError("truncation order mismatch: %d != %d" % (n - 1, len(b) - 1))
    cdef list out = [0] * n
    cdef Py_ssize_t i, j
    cdef object ai
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n - i):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def invert_unit(list a):
    """Multiplicative inverse of a coefficient list with leading term +-1."""
    cdef Py_ssize_t n = len(a)
    if n == 0:
        raise ValueError("empty coefficient list")
    c0 = a[0]
    if c0 != 1 and c0 != -1:
        raise ValueError("constant term must be 1 or -1, got %r" % (c0,))
    cdef list b = [0] * n
    b[0] = c0
    cdef list nzi = []
    cdef list nzc = []
    cdef Py_ssize_t i, m, t
    for i in range(1, n):
        if a[i]:
            nzi.append(i)
            nzc.append(a[i])
    cdef Py_ssize_t nnz = len(nzi)
    cdef bint plus = c0 == 1
    cdef object s
    for m in range(1, n):
        s = 0
        for t in range(nnz):
            i = <Py_ssize_t> nzi[t]
            if i > m:
                break
            s = s + nzc[t] * b[m - i]
        b[m] = -s if plus else s
    return b


def ab_stat_sums(Py_ssize_t n, Py_ssize_t k_max):
    """Accumulate the a/b partition statistics over all partitions of n.

    See partitionlab._kernels_py.ab_stat_sums for the exact semantics.
    Accumulators are C int64; the MAX_SWEEP_N guard makes overflow
    impossible (each total is at most n * p(n)).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if n > MAX_SWEEP_N:
        raise ValueError("n=%d exceeds the sweep bound %d" % (n, MAX_SWEEP_N))

    A = [[0] * k for k in range(1, k_max + 1)]
    B = [0] * k_max
    if n == 0:
        return A, B

    cdef long long *acc_a = NULL
    cdef long long *acc_b = NULL
    cdef int *part = NULL
    cdef Py_ssize_t k, i, j, kk, v, mult, top, x, y
    try:
        acc_a = <long long *> malloc(k_max * k_max * sizeof(long long))
        acc_b = <long long *> malloc(k_max * sizeof(long long))
        part = <int *> malloc((n + 1) * sizeof(int))
        if acc_a == NULL or acc_b == NULL or part == NULL:
            raise MemoryError()
        for i in range(k_max * k_max):
            acc_a[i] = 0
        for i in range(k_max):
            acc_b[i] = 0

        part[0] = 0
        part[1] = n
        k = 1
        while k != 0:
            x = part[k - 1] + 1
            y = part[k] - 1
            k -= 1
            while x <= y:
                part[k] = x
                y -= x
                k += 1
            part[k] = x + y
            i = 0
            while i <= k:
                v = part[i]
                j = i
                while j <= k and part[j] == v:
                    j += 1
                mult = j - i
                for kk in range(1, k_max + 1):
                    acc_a[(kk - 1) * k_max + v % kk] += v
                top = mult if mult < k_max else k_max
                for kk in range(top):
                    acc_b[kk] += v
                i = j

        for kk in range(1, k_max + 1):
            row = A[kk - 1]
            for i in range(kk):
                row[i] = acc_a[(kk - 1) * k_max + i]
        for kk in range(k_max):
            B[kk] = acc_b[kk]
    finally:
        free(acc_a)
        free(acc_b)
        free(part)
    return A, B
