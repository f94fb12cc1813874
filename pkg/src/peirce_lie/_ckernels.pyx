# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field kernels; same contract as the ``p > 0`` half of ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref(rows, Py_ssize_t ncols, i64 p):
    """Reduced row echelon form over ``F_p``; returns ``(basis, pivots)``."""
    if p <= 0 or p >= (1 << 31):
        raise ValueError("compiled kernel needs 0 < p < 2**31")
    cdef i64 *basis = <i64 *> calloc(ncols * ncols + 1, sizeof(i64))
    cdef i64 *v = <i64 *> malloc((ncols + 1) * sizeof(i64))
    cdef Py_ssize_t *row_of = <Py_ssize_t *> malloc((ncols + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t rank = 0, t, pc, lead, r
    cdef i64 c, inv
    cdef i64 *br
    if basis == NULL or v == NULL or row_of == NULL:
        free(basis); free(v); free(row_of)
        raise MemoryError()
    try:
        for t in range(ncols):
            row_of[t] = -1
        for raw in rows:
            if rank == ncols:
                break
            for t in range(ncols):
                c = raw[t] % p
                v[t] = c + p if c < 0 else c
            for pc in range(ncols):
                r = row_of[pc]
                if r < 0:
                    continue
                c = v[pc]
                if c:
                    br = basis + r * ncols
                    for t in range(ncols):
                        if br[t]:
                            v[t] = (v[t] - c * br[t]) % p
                            if v[t] < 0:
                                v[t] += p
            lead = -1
            for t in range(ncols):
                if v[t]:
                    lead = t
                    break
            if lead < 0:
                continue
            inv = _inv(v[lead], p)
            for t in range(ncols):
                v[t] = v[t] * inv % p
            for pc in range(ncols):
                r = row_of[pc]
                if r < 0:
                    continue
                br = basis + r * ncols
                c = br[lead]
                if c:
                    for t in range(ncols):
                        if v[t]:
                            br[t] = (br[t] - c * v[t]) % p
                            if br[t] < 0:
                                br[t] += p
            br = basis + rank * ncols
            for t in range(ncols):
                br[t] = v[t]
            row_of[lead] = rank
            rank += 1
        out = []
        pivots = []
        for pc in range(ncols):
            r = row_of[pc]
            if r >= 0:
                br = basis + r * ncols
                out.append(tuple([int(br[t]) for t in range(ncols)]))
                pivots.append(pc)
        return out, pivots
    finally:
        free(basis)
        free(v)
        free(row_of)


cdef class Table:
    """Sparse structure constants over ``F_p`` held in C arrays."""

    cdef readonly Py_ssize_t n
    cdef readonly i64 p
    cdef i64 *ptr
    cdef i64 *ks
    cdef i64 *cs
    cdef i64 *acc
    cdef i64 *xa
    cdef i64 *ya
    cdef object _entries

    backend = "compiled"

    def __cinit__(self, Py_ssize_t n, ptr, ks, cs, i64 p=0):
        if p <= 0 or p >= (1 << 31):
            raise ValueError("compiled kernel needs 0 < p < 2**31")
        cdef Py_ssize_t t, nnz = len(ks)
        self.n = n
        self.p = p
        self.ptr = <i64 *> malloc((n * n + 1) * sizeof(i64))
        self.ks = <i64 *> malloc((nnz + 1) * sizeof(i64))
        self.cs = <i64 *> malloc((nnz + 1) * sizeof(i64))
        self.acc = <i64 *> malloc((n + 1) * sizeof(i64))
        self.xa = <i64 *> malloc((n + 1) * sizeof(i64))
        self.ya = <i64 *> malloc((n + 1) * sizeof(i64))
        if (self.ptr == NULL or self.ks == NULL or self.cs == NULL
                or self.acc == NULL or self.xa == NULL or self.ya == NULL):
            raise MemoryError()
        for t in range(n * n + 1):
            self.ptr[t] = ptr[t]
        for t in range(nnz):
            self.ks[t] = ks[t]
            self.cs[t] = cs[t] % p
        self._entries = [
            tuple(zip(ks[ptr[ij]:ptr[ij + 1]], [c % p for c in cs[ptr[ij]:ptr[ij + 1]]]))
            for ij in range(n * n)
        ]

    def __dealloc__(self):
        free(self.ptr)
        free(self.ks)
        free(self.cs)
        free(self.acc)
        free(self.xa)
        free(self.ya)

    def product(self, x, y):
        cdef Py_ssize_t n = self.n, i, j, t, base
        cdef i64 p = self.p, a, b, ab
        cdef i64 *acc = self.acc
        cdef i64 *xa = self.xa
        cdef i64 *ya = self.ya
        for t in range(n):
            acc[t] = 0
            xa[t] = x[t]
            ya[t] = y[t]
        for i in range(n):
            a = xa[i]
            if not a:
                continue
            base = i * n
            for j in range(n):
                b = ya[j]
                if not b:
                    continue
                if self.ptr[base + j] == self.ptr[base + j + 1]:
                    continue
                ab = a * b % p
                for t in range(self.ptr[base + j], self.ptr[base + j + 1]):
                    acc[self.ks[t]] = (acc[self.ks[t]] + ab * self.cs[t]) % p
        return tuple([int(acc[t]) for t in range(n)])

    def basis_product(self, Py_ssize_t i, Py_ssize_t j):
        return self._entries[i * self.n + j]

    def first_nonassociative(self):
        cdef Py_ssize_t n = self.n, i, j, k, t, s, u, v
        cdef i64 p = self.p, c
        cdef i64 *acc = self.acc
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for t in range(n):
                        acc[t] = 0
                    for u in range(self.ptr[i * n + j], self.ptr[i * n + j + 1]):
                        t = self.ks[u]
                        c = self.cs[u]
                        for v in range(self.ptr[t * n + k], self.ptr[t * n + k + 1]):
                            s = self.ks[v]
                            acc[s] = (acc[s] + c * self.cs[v]) % p
                    for u in range(self.ptr[j * n + k], self.ptr[j * n + k + 1]):
                        t = self.ks[u]
                        c = self.cs[u]
                        for v in range(self.ptr[i * n + t], self.ptr[i * n + t + 1]):
                            s = self.ks[v]
                            acc[s] = (acc[s] - c * self.cs[v]) % p
                    for t in range(n):
                        if acc[t] % p:
                            return (i, j, k)
        return None
