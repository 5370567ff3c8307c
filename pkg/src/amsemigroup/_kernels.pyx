# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership kernels (see ``_kernels_py`` for the reference version)."""
from cpython.mem cimport PyMem_Malloc, PyMem_Realloc, PyMem_Free
from libc.string cimport memset


cdef long long *_gens_array(gens, Py_ssize_t *count) except NULL:
    cdef list gs = sorted(set(gens))
    cdef Py_ssize_t i, m = len(gs)
    cdef long long *out = <long long *> PyMem_Malloc((m if m > 0 else 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    for i in range(m):
        out[i] = gs[i]
    count[0] = m
    return out


cdef inline void _extend(unsigned char *table, Py_ssize_t start, Py_ssize_t stop,
                         const long long *gens, Py_ssize_t m) noexcept nogil:
    cdef Py_ssize_t x, j
    cdef long long g
    for x in range(start, stop):
        table[x] = 0
        for j in range(m):
            g = gens[j]
            if g > x:
                break
            if table[x - g]:
                table[x] = 1
                break


def fill_table(gens, Py_ssize_t bound):
    """Membership flags for ``0 .. bound-1`` of the monoid generated by ``gens``."""
    if bound <= 0:
        return bytearray()
    cdef Py_ssize_t m
    cdef long long *gs = _gens_array(gens, &m)
    cdef bytearray out = bytearray(bound)
    cdef unsigned char *table = out
    try:
        table[0] = 1
        with nogil:
            _extend(table, 1, bound, gs, m)
    finally:
        PyMem_Free(gs)
    return out


def scan_conductor(gens, Py_ssize_t max_bound):
    """Return ``(conductor, table)``; caller guarantees ``gcd(gens) == 1``."""
    cdef Py_ssize_t m
    cdef long long *gs = _gens_array(gens, &m)
    cdef long long smallest = gs[0]
    cdef long long block = gs[m - 1]
    cdef Py_ssize_t size = 1, cap = 1 + block
    cdef Py_ssize_t run_start = 0, run = 1, x, old
    cdef unsigned char *table = <unsigned char *> PyMem_Malloc(cap)
    cdef unsigned char *grown
    if table == NULL:
        PyMem_Free(gs)
        raise MemoryError()
    try:
        table[0] = 1
        while run < smallest:
            if size + block > max_bound:
                raise OverflowError(f"membership table would exceed {max_bound} entries")
            if size + block > cap:
                cap = 2 * (size + block)
                grown = <unsigned char *> PyMem_Realloc(table, cap)
                if grown == NULL:
                    raise MemoryError()
                table = grown
            old = size
            size += block
            with nogil:
                _extend(table, old, size, gs, m)
                for x in range(old, size):
                    if table[x]:
                        if run == 0:
                            run_start = x
                        run += 1
                        if run >= smallest:
                            break
                    else:
                        run = 0
        return run_start, bytearray(table[:size])
    finally:
        PyMem_Free(table)
        PyMem_Free(gs)
