# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the pure-Python kernels in _pyops.

Same signatures, same results; selected at import by antimorph.kernels.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

HOM_BIT = 1
ANTI_BIT = 2


cdef int* _to_c(seq) except NULL:
    cdef Py_ssize_t k = len(seq)
    cdef int* out = <int*> malloc(k * sizeof(int) if k else sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        out[i] = seq[i]
    return out


cdef inline int _classify(int* f, int n, int m, int* ca, int* cb) nogil:
    cdef int code = 3
    cdef int x, y, z, fx, fy
    for x in range(n):
        fx = f[x]
        for y in range(n):
            z = f[ca[x * n + y]]
            fy = f[y]
            if (code & 1) and cb[fx * m + fy] != z:
                code &= ~1
            if (code & 2) and cb[fy * m + fx] != z:
                code &= ~2
            if code == 0:
                return 0
    return code


def classify_table(images, int n, int m, cay_a, cay_b):
    cdef int* f = _to_c(images)
    cdef int* ca = _to_c(cay_a)
    cdef int* cb = _to_c(cay_b)
    try:
        return _classify(f, n, m, ca, cb)
    finally:
        free(f)
        free(ca)
        free(cb)


def scan_morphism_space(int n, int m, cay_a, cay_b):
    """Brute force over all m**n maps; returns (hom_tables, anti_tables)."""
    homs = []
    antis = []
    if n == 0:
        return [()], [()]
    cdef int* ca = _to_c(cay_a)
    cdef int* cb = _to_c(cay_b)
    cdef int* f = <int*> malloc(n * sizeof(int))
    if f == NULL:
        free(ca)
        free(cb)
        raise MemoryError()
    cdef int i, code
    for i in range(n):
        f[i] = 0
    try:
        while True:
            code = _classify(f, n, m, ca, cb)
            if code:
                t = tuple([f[i] for i in range(n)])
                if code & 1:
                    homs.append(t)
                if code & 2:
                    antis.append(t)
            i = n - 1
            while i >= 0:
                f[i] += 1
                if f[i] < m:
                    break
                f[i] = 0
                i -= 1
            if i < 0:
                return homs, antis
    finally:
        free(f)
        free(ca)
        free(cb)


def associativity_witness(int n, table):
    cdef int* t = _to_c(table)
    cdef int x, y, z, xy
    try:
        for x in range(n):
            for y in range(n):
                xy = t[x * n + y]
                for z in range(n):
                    if t[xy * n + z] != t[x * n + t[y * n + z]]:
                        return (x, y, z)
        return None
    finally:
        free(t)


def compose_classify_pairs(int n_a, int n_c, cay_a, cay_c,
                           left_tables, right_tables):
    """Classify g∘f for every f in left_tables and g in right_tables."""
    cdef int* ca = _to_c(cay_a)
    cdef int* cc = _to_c(cay_c)
    cdef Py_ssize_t nl = len(left_tables)
    cdef Py_ssize_t nr = len(right_tables)
    cdef int* lf = NULL
    cdef int* rg = NULL
    cdef int* comp = <int*> malloc(n_a * sizeof(int) if n_a else sizeof(int))
    out = []
    cdef Py_ssize_t i, j
    cdef int x, n_b
    if comp == NULL:
        free(ca)
        free(cc)
        raise MemoryError()
    try:
        flat_left = [v for t in left_tables for v in t]
        flat_right = [v for t in right_tables for v in t]
        n_b = len(right_tables[0]) if nr else 0
        lf = _to_c(flat_left)
        rg = _to_c(flat_right)
        for i in range(nl):
            for j in range(nr):
                for x in range(n_a):
                    comp[x] = rg[j * n_b + lf[i * n_a + x]]
                out.append(_classify(comp, n_a, n_c, ca, cc))
        return out
    finally:
        free(comp)
        free(ca)
        free(cc)
        if lf != NULL:
            free(lf)
        if rg != NULL:
            free(rg)
