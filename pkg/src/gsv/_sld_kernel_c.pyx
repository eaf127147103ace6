# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Identical contract to ``_sld_kernel_py.histogram_range``: Gray-code walk
over ranks [start, stop) keeping s = adjacency * r up to date with one
row XOR per step, counting popcount(r | s).  Rows fit 32-bit words
(n <= 28), so each step is a handful of register ops; the loop runs
without the GIL and can be sharded across threads.
"""

cdef extern from *:
    """
    static inline int gsv_popcount(unsigned int x) { return __builtin_popcount(x); }
    static inline int gsv_ctzll(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int gsv_popcount(unsigned int x) nogil
    int gsv_ctzll(unsigned long long x) nogil


def histogram_range(rows, int n, unsigned long long start, unsigned long long stop):
    cdef unsigned int crows[32]
    cdef long long hist[33]
    cdef unsigned int r, s
    cdef unsigned long long t
    cdef int i, b

    if n < 1 or n > 28:
        raise ValueError(f"kernel supports 1..28 vertices, got {n}")

    for i in range(n + 1):
        hist[i] = 0
    if start >= stop:
        return [hist[i] for i in range(n + 1)]

    for i in range(n):
        crows[i] = rows[i]

    t = start
    r = <unsigned int> (t ^ (t >> 1))
    s = 0
    for i in range(n):
        if (r >> i) & 1:
            s ^= crows[i]

    with nogil:
        hist[gsv_popcount(r | s)] += 1
        for t in range(start + 1, stop):
            b = gsv_ctzll(t)
            r ^= (<unsigned int> 1) << b
            s ^= crows[b]
            hist[gsv_popcount(r | s)] += 1

    return [hist[i] for i in range(n + 1)]
