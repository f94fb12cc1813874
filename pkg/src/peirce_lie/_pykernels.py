"""Pure-Python kernels: row reduction and sparse structure-constant products.

``p = 0`` selects rational arithmetic (entries are ``mpq``); ``p > 0`` works
with integer residues.  ``_ckernels`` mirrors the prime-field half of this
module in C.
"""

from gmpy2 import mpq


def rref(rows, ncols, p=0):
    """Reduced row echelon form of ``rows``.

    Returns ``(basis, pivots)`` with basis rows as tuples sorted by pivot
    column; every pivot entry is 1 and pivot columns are zero elsewhere.
    """
    basis = {}  # pivot column -> row (list), fully reduced against the others
    for raw in rows:
        v = list(raw) if p else [mpq(a) for a in raw]  # ints would divide to floats
        if p:
            for pc, r in basis.items():
                c = v[pc]
                if c:
                    for t in range(ncols):
                        if r[t]:
                            v[t] = (v[t] - c * r[t]) % p
        else:
            for pc, r in basis.items():
                c = v[pc]
                if c:
                    for t in range(ncols):
                        if r[t]:
                            v[t] -= c * r[t]
        lead = next((t for t in range(ncols) if v[t]), -1)
        if lead < 0:
            continue
        if p:
            inv = pow(int(v[lead]), -1, p)
            v = [a * inv % p for a in v]
        else:
            inv = 1 / v[lead]
            v = [a * inv for a in v]
        for r in basis.values():
            c = r[lead]
            if c:
                for t in range(ncols):
                    if v[t]:
                        r[t] = (r[t] - c * v[t]) % p if p else r[t] - c * v[t]
        basis[lead] = v
    pivots = sorted(basis)
    return [tuple(basis[pc]) for pc in pivots], pivots


class Table:
    """Sparse structure constants in CSR layout keyed by ``i * n + j``."""

    backend = "python"

    def __init__(self, n, ptr, ks, cs, p=0):
        self.n = n
        self.p = p
        self._entries = [
            tuple(zip(ks[ptr[ij]:ptr[ij + 1]], cs[ptr[ij]:ptr[ij + 1]]))
            for ij in range(n * n)
        ]

    def product(self, x, y):
        n, p, entries = self.n, self.p, self._entries
        out = [0] * n
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            base = i * n
            for j, b in ys:
                row = entries[base + j]
                if row:
                    ab = a * b
                    for k, c in row:
                        out[k] += ab * c
        if p:
            return tuple(v % p for v in out)
        return tuple(out)

    def basis_product(self, i, j):
        """Sparse ``b_i * b_j`` as a tuple of ``(k, c)``."""
        return self._entries[i * self.n + j]

    def first_nonassociative(self):
        """First ``(i, j, k)`` with ``(b_i b_j) b_k != b_i (b_j b_k)``, else None."""
        n, p, entries = self.n, self.p, self._entries
        for i in range(n):
            for j in range(n):
                left = entries[i * n + j]
                for k in range(n):
                    acc = {}
                    for t, c in left:
                        for s, d in entries[t * n + k]:
                            acc[s] = acc.get(s, 0) + c * d
                    for t, c in entries[j * n + k]:
                        for s, d in entries[i * n + t]:
                            acc[s] = acc.get(s, 0) - c * d
                    for v in acc.values():
                        if (v % p if p else v):
                            return (i, j, k)
        return None
