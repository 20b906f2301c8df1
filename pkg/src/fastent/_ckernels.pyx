# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for Zhang's estimator.

Same contract and bit-for-bit results as ``fastent._pykernels``. The loop
bodies live in ``_lanes.h``; this module only marshals buffers and releases
the GIL around them.
"""

from cpython.array cimport array, clone

BACKEND = "compiled"

cdef extern from "_lanes.h" nogil:
    enum: FASTENT_LANES
    void fastent_finish(long long f, long long t, long long v0, double* r_io,
                        double* q_io, int exact, long long* executed,
                        long long* elided)
    void fastent_q_block(const long long* fs, long long m, long long t, int exact,
                         double* out, long long* executed, long long* elided)



def q_single(long long f, long long t, bint exact_exit=True):
    cdef double r = 1.0
    cdef double q = 0.0
    cdef long long executed = 0
    cdef long long elided = 0
    with nogil:
        fastent_finish(f, t, 1, &r, &q, exact_exit, &executed, &elided)
    return q, executed, elided


def q_many(fs, long long t, bint exact_exit=True):
    cdef const long long[::1] view = _as_int64(fs)
    cdef Py_ssize_t m = view.shape[0]
    cdef array out = clone(array("d"), m, False)
    cdef double[::1] res = out
    cdef long long executed = 0
    cdef long long elided = 0
    cdef Py_ssize_t i, g
    with nogil:
        i = 0
        while i < m:
            g = m - i if m - i < FASTENT_LANES else FASTENT_LANES
            fastent_q_block(&view[i], g, t, exact_exit, &res[i], &executed, &elided)
            i += g
    return out.tolist(), executed, elided


def linear_sum(fs, long long t, bint exact_exit=True):
    cdef const long long[::1] view = _as_int64(fs)
    cdef Py_ssize_t m = view.shape[0]
    cdef double qbuf[FASTENT_LANES]
    cdef double k_sum = 0.0
    cdef long long executed = 0
    cdef long long elided = 0
    cdef Py_ssize_t i, g, j
    with nogil:
        i = 0
        while i < m:
            g = m - i if m - i < FASTENT_LANES else FASTENT_LANES
            fastent_q_block(&view[i], g, t, exact_exit, qbuf, &executed, &elided)
            for j in range(g):
                k_sum += <double>view[i + j] * qbuf[j]
            i += g
    return k_sum, executed, elided


cdef object _as_int64(fs):
    if isinstance(fs, array) and fs.typecode == "q":
        return fs
    return array("q", fs)
