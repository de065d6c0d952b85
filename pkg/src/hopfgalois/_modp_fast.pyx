# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels: rref and matmul on flat row-major int matrices.

Same contract and pivot policy as _modp_py; selected at import time by
hopfgalois.linalg when available.  Assumes p fits comfortably in 31 bits so
products fit in a C long long.
"""

from libc.stdlib cimport malloc, free


cdef long long _inv_mod(long long a, long long p):
    # Fermat inverse; p is prime and a is nonzero mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_modp(data, int rows, int cols, long long p):
    cdef int n = rows * cols
    cdef long long *m = <long long *> malloc(n * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef int i, j, r, col, row, sel
    cdef long long inv, f, tmp
    try:
        for i in range(n):
            m[i] = data[i] % p
        pivots = []
        row = 0
        for col in range(cols):
            if row == rows:
                break
            sel = -1
            for r in range(row, rows):
                if m[r * cols + col] != 0:
                    sel = r
                    break
            if sel < 0:
                continue
            if sel != row:
                for j in range(cols):
                    tmp = m[row * cols + j]
                    m[row * cols + j] = m[sel * cols + j]
                    m[sel * cols + j] = tmp
            inv = _inv_mod(m[row * cols + col], p)
            for j in range(cols):
                m[row * cols + j] = (m[row * cols + j] * inv) % p
            for r in range(rows):
                if r != row:
                    f = m[r * cols + col]
                    if f != 0:
                        for j in range(cols):
                            m[r * cols + j] = (m[r * cols + j] - f * m[row * cols + j]) % p
                            if m[r * cols + j] < 0:
                                m[r * cols + j] += p
            pivots.append(col)
            row += 1
        out = [0] * n
        for i in range(n):
            out[i] = m[i]
        return out, pivots
    finally:
        free(m)


def matmul_modp(a, int ar, int ac, b, int br, int bc, long long p):
    cdef long long *ca = <long long *> malloc(ar * ac * sizeof(long long))
    cdef long long *cb = <long long *> malloc(br * bc * sizeof(long long))
    cdef long long *co = <long long *> malloc(ar * bc * sizeof(long long))
    if ca == NULL or cb == NULL or co == NULL:
        free(ca); free(cb); free(co)
        raise MemoryError()
    cdef int i, j, k
    cdef long long aik
    try:
        for i in range(ar * ac):
            ca[i] = a[i] % p
        for i in range(br * bc):
            cb[i] = b[i] % p
        for i in range(ar * bc):
            co[i] = 0
        for i in range(ar):
            for k in range(ac):
                aik = ca[i * ac + k]
                if aik != 0:
                    for j in range(bc):
                        co[i * bc + j] = (co[i * bc + j] + aik * cb[k * bc + j]) % p
        out = [0] * (ar * bc)
        for i in range(ar * bc):
            out[i] = co[i]
        return out
    finally:
        free(ca)
        free(cb)
        free(co)
