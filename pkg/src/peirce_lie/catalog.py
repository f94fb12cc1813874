"""Stock objects used by fixtures, tests and benchmarks: matrix algebras over a
field, diagonal frames, conjugations, transposes and inner derivations."""

from __future__ import annotations

import random
from itertools import permutations

from .algebra import (
    Algebra,
    Element,
    LinearMap,
    Subspace,
    derived_lie_ring,
    direct_sum,
    field_algebra,
    lie_bracket,
    matrix_algebra,
    matrix_entries,
    matrix_from_entries,
    matrix_unit,
    opposite,
)
from .field import Field
from .peirce import IdempotentFrame, build_frame


def full_matrix_algebra(F: Field, n: int) -> Algebra:
    return matrix_algebra(field_algebra(F), n)


def diagonal_frame(M: Algebra) -> IdempotentFrame:
    n = M.meta["n"]
    return build_frame(M, [matrix_unit(M, i, i) for i in range(n)])


def envelope_algebra(A: Algebra) -> Algebra:
    return direct_sum(A, opposite(A))


def envelope_diagonal_frame(M: Algebra, E: Algebra) -> IdempotentFrame:
    """Frame ``{E_ii + E_ii^op}`` in ``M + M^op``."""
    n = M.meta["n"]
    return build_frame(E, [E.element(matrix_unit(M, i, i).coeffs * 2) for i in range(n)])


def scalar_matrix(M: Algebra, diag) -> Element:
    n = M.meta["n"]
    return matrix_from_entries(M, [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])


def permutation_matrix(M: Algebra, perm) -> Element:
    n = M.meta["n"]
    return matrix_from_entries(M, [[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def transpose(x: Element) -> Element:
    M = x.parent
    e = matrix_entries(x)
    n = len(e)
    return matrix_from_entries(M, [[e[j][i] for j in range(n)] for i in range(n)])


def invertible_matrices(M: Algebra, rng: random.Random, count: int, include_permutations: bool = True):
    """Pairs ``(g, g^-1)``: permutation matrices first, then products of elementary matrices."""
    n = M.meta["n"]
    F = M.field
    out = []
    if include_permutations:
        for perm in permutations(range(n)):
            g = permutation_matrix(M, perm)
            inv = [0] * n
            for i, j in enumerate(perm):
                inv[j] = i
            out.append((g, permutation_matrix(M, inv)))
    one = M.one()
    while len(out) < count:
        g, gi = one, one
        for _ in range(3):
            i, j = rng.sample(range(n), 2)
            c = F.random(rng)
            if not c:
                continue
            e = one + matrix_unit(M, i, j).scale(c)
            ei = one - matrix_unit(M, i, j).scale(c)
            g, gi = g * e, ei * gi
        out.append((g, gi))
    return out[:count]


def conjugation(D: Subspace, g: Element, gi: Element, codomain: Algebra | None = None) -> LinearMap:
    """``x -> g^-1 x g`` on ``D``."""
    M = D.ambient
    return LinearMap.from_function(D, codomain or M, lambda x: gi * x * g)


def negative_transpose(D: Subspace) -> LinearMap:
    return LinearMap.from_function(D, D.ambient, lambda x: -transpose(x))


def inner_derivation(D: Subspace, m: Element) -> LinearMap:
    """``ad m`` restricted to ``D``."""
    return LinearMap.from_function(D, D.ambient, lambda x: lie_bracket(m, x))


def sl(F: Field, n: int) -> tuple[Algebra, Subspace]:
    M = full_matrix_algebra(F, n)
    return M, derived_lie_ring(M)
