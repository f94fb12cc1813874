"""Exact linear algebra on raw vectors (tuples of field scalars)."""

from __future__ import annotations

from typing import Sequence

from . import kernels
from .field import Field


def rref(vectors: Sequence[Sequence], ncols: int, field: Field):
    """Canonical reduced echelon basis of the span: ``(rows, pivots)``."""
    return kernels.rref(vectors, ncols, field)


def nullspace(equations: Sequence[Sequence], ncols: int, field: Field) -> list[tuple]:
    """Basis of ``{x : e . x = 0 for every equation row e}``, one vector per free column."""
    rows, pivots = rref([e for e in equations if any(e)], ncols, field)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [field.zero] * ncols
        x[f] = field.one
        for r, pc in zip(rows, pivots):
            if r[f]:
                x[pc] = field.neg(r[f])
        basis.append(tuple(x))
    return basis


def _column_equations(vectors, target, n):
    m = len(vectors)
    eqs = []
    for k in range(n):
        row = [v[k] for v in vectors]
        if target is not None:
            row.append(target[k])
        if any(row):
            eqs.append(row)
    return eqs, m


def combination(vectors: Sequence[Sequence], target: Sequence, field: Field):
    """Coefficients ``t`` with ``sum t_l v_l == target``, or None when no solution exists.

    Free coefficients are set to zero, so the answer is the echelon-first solution.
    """
    n = len(target)
    eqs, m = _column_equations(vectors, target, n)
    rows, pivots = rref(eqs, m + 1, field)
    if pivots and pivots[-1] == m:
        return None
    t = [field.zero] * m
    for r, pc in zip(rows, pivots):
        t[pc] = r[m]
    return tuple(t)


def relations(vectors: Sequence[Sequence], n: int, field: Field) -> list[tuple]:
    """Basis of the linear relations ``t`` with ``sum t_l v_l == 0``."""
    eqs, m = _column_equations(vectors, None, n)
    return nullspace(eqs, m, field)


def reduce_against(v: Sequence, rows: Sequence[Sequence], pivots: Sequence[int], field: Field) -> tuple:
    """Residual of ``v`` modulo the span of echelon ``rows``."""
    out = list(v)
    p = field.p
    for r, pc in zip(rows, pivots):
        c = out[pc]
        if c:
            for t, a in enumerate(r):
                if a:
                    out[t] -= c * a
    if p:
        return tuple(a % p for a in out)
    return tuple(out)


class EchelonTracker:
    """Incremental echelon form that remembers which inserted items were independent.

    Each inserted vector may carry a payload vector (for instance the value a
    map must take on it).  Payloads ride along the row operations, so a
    dependent vector whose payload does not reduce to zero is reported as an
    inconsistency.
    """

    def __init__(self, n: int, field: Field, payload_dim: int = 0):
        self.n = n
        self.m = payload_dim
        self.field = field
        self._rows: dict[int, list] = {}
        self.kept: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec, payload=()):
        v = list(vec) + list(payload)
        p = self.field.p
        width = self.n + self.m
        for pc, r in self._rows.items():
            c = v[pc]
            if c:
                for t in range(width):
                    if r[t]:
                        v[t] = (v[t] - c * r[t]) % p if p else v[t] - c * r[t]
        return v

    def insert(self, vec, payload=(), tag=None):
        """Insert; returns ``"new"``, ``"dependent"`` or ``"inconsistent"``."""
        f = self.field
        v = self.reduce(vec, payload)
        lead = next((t for t in range(self.n) if v[t]), -1)
        if lead < 0:
            return "inconsistent" if any(v[self.n:]) else "dependent"
        inv = f.inv(v[lead])
        v = [f.mul(a, inv) for a in v]
        p = f.p
        for r in self._rows.values():
            c = r[lead]
            if c:
                for t in range(self.n + self.m):
                    if v[t]:
                        r[t] = (r[t] - c * v[t]) % p if p else r[t] - c * v[t]
        self._rows[lead] = v
        self.kept.append(tag)
        return "new"

    def solution(self):
        """Payload values on the standard basis vectors of the spanned coordinates.

        Only meaningful when the tracker spans the whole ``n``-space.
        """
        return {pc: tuple(r[self.n:]) for pc, r in self._rows.items()}
