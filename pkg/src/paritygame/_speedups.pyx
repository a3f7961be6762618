# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled solve kernel for finite domains.

Mirrors paritygame._kernel_py exactly (same entry points, same table layout);
paritygame._kernel selects whichever is importable.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

IMPLEMENTATION = "compiled"

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil


cdef inline int _opponent(int mask) nogil:
    return (((mask << 1) | (mask >> 1)) & 3) ^ 3


cdef int _rec(signed char *memo, int d, unsigned int occ, int parity, int rem) nogil:
    cdef Py_ssize_t key = (<Py_ssize_t> occ << 1) | parity
    cdef int s, i, child
    if rem == 0:
        return 1 << parity
    if memo[key] >= 0:
        return memo[key]
    s = 0
    for i in range(d):
        if occ & (1u << i):
            continue
        child = _rec(
            memo, d, occ | (1u << i),
            parity ^ (__builtin_popcount(occ >> (i + 1)) & 1), rem - 1,
        )
        s |= _opponent(child)
        if s == 3:
            break
    memo[key] = <signed char> s
    return s


def forcible_mask(int d, unsigned int occ, int parity, int remaining, bint use_memo=True):
    """Forcible-parity mask for the mover at one root state."""
    _check(d, occ, parity, remaining)
    cdef Py_ssize_t size = (<Py_ssize_t> 2) << d
    cdef signed char *memo = <signed char *> PyMem_Malloc(size)
    cdef Py_ssize_t j
    cdef int result
    if memo == NULL:
        raise MemoryError()
    for j in range(size):
        memo[j] = -1
    try:
        result = _rec(memo, d, occ, parity, remaining)
    finally:
        PyMem_Free(memo)
    return result


def sweep_table(int d, int total):
    """Forcible masks for every state that ends with ``total`` occupied points."""
    _check(d, 0, 0, total)
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << d
    table = bytearray(2 * size)
    cdef unsigned char[::1] t = table
    cdef int *counts = <int *> PyMem_Malloc((d + 2) * sizeof(int))
    cdef int *starts = <int *> PyMem_Malloc((d + 2) * sizeof(int))
    cdef int *fill = <int *> PyMem_Malloc((d + 2) * sizeof(int))
    cdef unsigned int *bucket = <unsigned int *> PyMem_Malloc(size * sizeof(unsigned int))
    if counts == NULL or starts == NULL or fill == NULL or bucket == NULL:
        PyMem_Free(counts); PyMem_Free(starts); PyMem_Free(fill); PyMem_Free(bucket)
        raise MemoryError()
    cdef unsigned int occ
    cdef int pc, parity, i, s, child
    cdef Py_ssize_t j
    try:
        for pc in range(d + 2):
            counts[pc] = 0
        for occ in range(size):
            counts[__builtin_popcount(occ)] += 1
        starts[0] = 0
        for pc in range(d + 1):
            starts[pc + 1] = starts[pc] + counts[pc]
            fill[pc] = starts[pc]
        for occ in range(size):
            pc = __builtin_popcount(occ)
            bucket[fill[pc]] = occ
            fill[pc] += 1
        for j in range(starts[total], starts[total + 1]):
            occ = bucket[j]
            t[(<Py_ssize_t> occ << 1)] = 1
            t[(<Py_ssize_t> occ << 1) | 1] = 2
        for pc in range(total - 1, -1, -1):
            for j in range(starts[pc], starts[pc + 1]):
                occ = bucket[j]
                for parity in range(2):
                    s = 0
                    for i in range(d):
                        if occ & (1u << i):
                            continue
                        child = t[
                            ((<Py_ssize_t> (occ | (1u << i))) << 1)
                            | (parity ^ (__builtin_popcount(occ >> (i + 1)) & 1))
                        ]
                        s |= (((child << 1) | (child >> 1)) & 3) ^ 3
                        if s == 3:
                            break
                    t[(<Py_ssize_t> occ << 1) | parity] = s
    finally:
        PyMem_Free(counts); PyMem_Free(starts); PyMem_Free(fill); PyMem_Free(bucket)
    return bytes(table)


def _check(int d, unsigned int occ, int parity, int remaining):
    if not 1 <= d <= 24:
        raise ValueError(f"domain size {d} outside 1..24")
    if occ >> d:
        raise ValueError("occupied mask has bits beyond the domain")
    if parity not in (0, 1):
        raise ValueError("parity bit must be 0 or 1")
    if remaining < 0 or __builtin_popcount(occ) + remaining > d:
        raise ValueError("remaining turns exceed free points")
