import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from peirce_lie.algebra import (
    Algebra,
    LinearMap,
    Subspace,
    annihilator,
    apply_map,
    bracket_span,
    derived_lie_ring,
    direct_sum,
    field_algebra,
    lie_bracket,
    matrix_algebra,
    matrix_entries,
    matrix_unit,
    multiply,
    opposite,
    span,
    subring_generated,
    subspace_product,
    unital_hull,
    zero_algebra,
)
from peirce_lie.catalog import full_matrix_algebra, negative_transpose, sl
from peirce_lie.errors import AlgebraMismatch, FieldMismatch, NotAssociative, NotInDomain, NotUnital
from peirce_lie.factory import grassmann_z_algebra
from peirce_lie.field import GF, QQ

import oracles

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def E(M, i, j):
    """1-based matrix unit, to read like the usual notation."""
    return matrix_unit(M, i - 1, j - 1)


def row(M, x):
    return span([x], M)


@pytest.fixture(scope="module")
def M2():
    return full_matrix_algebra(QQ, 2)


@pytest.fixture(scope="module")
def M3():
    return full_matrix_algebra(QQ, 3)


# -- examples ---------------------------------------------------------------


def test_multiply_examples(M2):
    assert multiply(E(M2, 1, 2), E(M2, 2, 1)) == E(M2, 1, 1)
    assert multiply(E(M2, 1, 2), E(M2, 1, 2)).is_zero
    B = grassmann_z_algebra(2)
    e1, e2 = B.e
    assert multiply(e1, e2) == B.monomial((1, 2))
    assert multiply(e2, e1) == -B.monomial((1, 2))
    with pytest.raises(AlgebraMismatch):
        multiply(e1, E(M2, 1, 1))


def test_bracket_examples(M3):
    assert lie_bracket(E(M3, 1, 2), E(M3, 2, 1)) == E(M3, 1, 1) - E(M3, 2, 2)
    assert lie_bracket(E(M3, 1, 2), E(M3, 3, 1)) == -E(M3, 3, 2)
    x = M3.random_element(random.Random(4))
    assert lie_bracket(x, x).is_zero


def test_span_examples(M2):
    assert span([E(M2, 1, 1), E(M2, 1, 1) + E(M2, 2, 2), E(M2, 2, 2)]).rank == 2
    assert span([], M2).rank == 0
    M = full_matrix_algebra(GF(2), 3)
    comms = span([lie_bracket(a, b) for a in M.basis() for b in M.basis()])
    assert comms.rank == 8 == oracles.commutator_rank(3, 2)


def test_subspace_product_examples(M2, M3):
    got = subspace_product(row(M2, E(M2, 1, 2)), row(M2, E(M2, 2, 1)))
    assert got == row(M2, E(M2, 1, 1))
    assert subspace_product(M2.full(), Subspace.zero(M2)).is_zero
    AeA = subspace_product(subspace_product(M3.full(), row(M3, E(M3, 1, 1))), M3.full())
    e = [[1, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert AeA.is_full and AeA.rank == oracles.two_sided_rank(3, e)


def test_bracket_span_examples(M3):
    assert bracket_span(M3.full(), M3.full()).rank == 8 == oracles.commutator_rank(3)
    U = row(M3, E(M3, 1, 2) + E(M3, 3, 3))
    assert bracket_span(U, U).is_zero
    assert bracket_span(row(M3, E(M3, 1, 2)), row(M3, E(M3, 2, 3))) == row(M3, E(M3, 1, 3))


def test_derived_examples(M3):
    D = derived_lie_ring(M3)
    assert D.rank == 8
    for x in D.basis():
        assert sum(matrix_entries(x)[i][i][0] for i in range(3)) == 0
    assert derived_lie_ring(field_algebra(QQ)).is_zero


def test_derived_m2b2_regression():
    B = grassmann_z_algebra(2)
    M = matrix_algebra(B.algebra, 2)
    D = derived_lie_ring(M)
    # oracle: brute-force commutators of basis elements, rank by independent elimination
    vecs = [list(M.bracket_vec(a.coeffs, b.coeffs)) for a in M.basis() for b in M.basis()]
    assert D.rank == oracles.rank(vecs)
    assert D.rank == 26


def test_subring_examples(M2, M3):
    assert subring_generated(derived_lie_ring(M3)).is_full
    assert subring_generated(Subspace.zero(M3)).is_zero
    U = row(M2, E(M2, 1, 2))
    assert subring_generated(U) == U


def test_annihilator_examples():
    assert annihilator(full_matrix_algebra(GF(2), 3)).is_zero
    assert annihilator(zero_algebra(QQ, 2)).is_full
    B = grassmann_z_algebra(2)
    # B is unital, so its own annihilator vanishes; z e1 e2 is what kills the
    # augmentation ideal spanned by the non-unit monomials
    assert annihilator(B.algebra).is_zero
    aug = span(B.algebra.basis()[1:])
    assert annihilator(B.algebra, within=aug) == span([B.monomial((1, 2), with_z=True)])
    for g in (*B.e, B.z):
        assert (B.monomial((1, 2), with_z=True) * g).is_zero


def test_opposite_examples(M2):
    B = grassmann_z_algebra(2)
    C = field_algebra(QQ)
    assert opposite(C).entries == C.entries
    assert opposite(opposite(B.algebra)).entries == B.algebra.entries
    Mop = opposite(M2)
    x, y = Mop.element(E(M2, 1, 2).coeffs), Mop.element(E(M2, 2, 1).coeffs)
    assert (x * y).coeffs == E(M2, 2, 2).coeffs


def test_direct_sum_examples(M2):
    S = direct_sum(M2, M2)
    assert S.dim == 8
    a = S.element(E(M2, 1, 2).coeffs + (0,) * 4)
    b = S.element((0,) * 4 + E(M2, 2, 1).coeffs)
    assert (a * b).is_zero
    assert S.one().coeffs == M2.one().coeffs * 2
    with pytest.raises(FieldMismatch):
        direct_sum(M2, full_matrix_algebra(GF(3), 2))


def test_matrix_algebra_examples(M2):
    assert M2.dim == 4 and M2.one() == E(M2, 1, 1) + E(M2, 2, 2)
    B = grassmann_z_algebra(2)
    assert B.algebra.dim == 8 == oracles.grassmann_dim(2)
    assert matrix_algebra(B.algebra, 2).dim == 32
    assert full_matrix_algebra(GF(2), 3).dim == 9
    with pytest.raises(NotUnital):
        matrix_algebra(zero_algebra(QQ, 1), 2)


def test_unital_hull_examples(M2):
    H, emb = unital_hull(zero_algebra(QQ, 1))
    assert H.dim == 2
    x = emb(zero_algebra(QQ, 1).basis_element(0))
    assert H.one() * x == x == x * H.one()
    H2, emb2 = unital_hull(M2)
    assert H2.dim == 5
    rng = random.Random(1)
    for _ in range(10):
        a, b = M2.random_element(rng), M2.random_element(rng)
        assert emb2(a * b) == emb2(a) * emb2(b)


def test_apply_map_examples(M3):
    _, D = sl(QQ, 3)
    assert apply_map(LinearMap.identity(D), E(M3, 1, 2)) == E(M3, 1, 2)
    assert apply_map(LinearMap.zero(D, M3), E(M3, 1, 2)).is_zero
    assert apply_map(negative_transpose(D), E(M3, 1, 2)) == -E(M3, 2, 1)
    with pytest.raises(NotInDomain):
        apply_map(LinearMap.identity(D), E(M3, 1, 1))


def test_nonassociative_rejected():
    # b0*b0 = b1, b0*b1 = b0, b1*b0 = 0 -> (b0 b0) b0 = 0 but b0 (b0 b0) = b0
    with pytest.raises(NotAssociative) as err:
        Algebra(QQ, 2, [(0, 0, 1, 1), (0, 1, 0, 1)])
    assert err.value.certificate is not None


# -- invariants -------------------------------------------------------------


@pytest.mark.parametrize("F", FIELDS, ids=str)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_derived_rank_is_n2_minus_1(F, n):
    M = full_matrix_algebra(F, n)
    assert derived_lie_ring(M).rank == n * n - 1 == oracles.commutator_rank(n, F.p or 0)


def _rand_sub(M, rng, k):
    return span([M.random_element(rng) for _ in range(k)], M)


@given(st.integers(0, 10 ** 6))
def test_span_canonical(seed):
    rng = random.Random(seed)
    M = full_matrix_algebra(rng.choice(FIELDS), 2)
    U = _rand_sub(M, rng, rng.randint(0, 4))
    V = span(U.basis(), M)
    assert V.rows == U.rows and V.pivots == U.pivots
    # shuffling and rescaling the generators gives the same matrix
    scalars = [c for c in (M.field(k) for k in range(1, 5)) if c]
    gens = [x.scale(rng.choice(scalars)) for x in U.basis()] + [M.zero()]
    rng.shuffle(gens)
    assert span(gens, M).rows == U.rows
    assert U.rank == oracles.rank([list(r) for r in U.rows], M.field.p or 0)


@given(st.integers(0, 10 ** 6))
def test_product_monotone_and_distributive(seed):
    rng = random.Random(seed)
    M = full_matrix_algebra(rng.choice([QQ, GF(3)]), 2)
    U, V, W = (_rand_sub(M, rng, rng.randint(0, 2)) for _ in range(3))
    assert subspace_product(U, V) <= subspace_product(U + W, V)
    assert subspace_product(U, V) <= subspace_product(U, V + W)
    assert subspace_product(U, V + W) == subspace_product(U, V) + subspace_product(U, W)
    assert subspace_product(U + W, V) == subspace_product(U, V) + subspace_product(W, V)


@given(st.integers(0, 10 ** 6))
def test_opposite_involutive_and_sum_dims(seed):
    rng = random.Random(seed)
    A = full_matrix_algebra(QQ, rng.randint(1, 3))
    B = grassmann_z_algebra(2).algebra
    assert opposite(opposite(A)) == A
    assert direct_sum(A, B).dim == A.dim + B.dim
    x, y = A.random_element(rng), A.random_element(rng)
    O = opposite(A)
    assert (O.element(x.coeffs) * O.element(y.coeffs)).coeffs == (y * x).coeffs


@pytest.mark.parametrize("n,m", [(2, 2), (2, 1), (1, 3)])
def test_block_matrices_match_larger_matrix_algebra(n, m):
    inner = full_matrix_algebra(QQ, m)
    outer = matrix_algebra(inner, n)
    big = full_matrix_algebra(QQ, n * m)
    assert outer.dim == big.dim

    # basis index (i*n+j)*m*m + (k*m+l) is the block unit E_ij (x) E_kl = E_{im+k, jm+l}
    def to_big(idx):
        blk, inner_idx = divmod(idx, m * m)
        i, j = divmod(blk, n)
        k, l = divmod(inner_idx, m)
        return (i * m + k) * (n * m) + (j * m + l)

    perm = [to_big(t) for t in range(outer.dim)]
    assert sorted(perm) == list(range(big.dim))
    for a, b in product(range(outer.dim), repeat=2):
        prod_outer = outer.basis_product(a, b)
        mapped = [0] * big.dim
        for k, c in prod_outer:
            mapped[perm[k]] = c
        assert tuple(mapped) == big.mul_vec(big.basis_element(perm[a]).coeffs, big.basis_element(perm[b]).coeffs)


def test_matrix_products_match_dense_oracle():
    rng = random.Random(11)
    for F in (QQ, GF(5)):
        M = full_matrix_algebra(F, 3)
        p = F.p or 0
        for _ in range(5):
            x, y = M.random_element(rng), M.random_element(rng)
            X = [[x.coeffs[3 * i + j] for j in range(3)] for i in range(3)]
            Y = [[y.coeffs[3 * i + j] for j in range(3)] for i in range(3)]
            assert list((x * y).coeffs) == oracles.flat(oracles.matmul(X, Y, p))


def test_grassmann_table_matches_oracle():
    for n in (2, 3):
        B = grassmann_z_algebra(n)
        keys = oracles.grassmann_basis(n)
        assert len(keys) == B.algebra.dim
        for a, ka in enumerate(keys):
            for b, kb in enumerate(keys):
                sign, key = oracles.grassmann_product(ka, kb)
                expected = [0] * len(keys)
                if sign:
                    expected[keys.index(key)] = sign
                x = B.monomial(ka[1], ka[0]) if ka[1] or ka[0] else B.one
                y = B.monomial(kb[1], kb[0]) if kb[1] or kb[0] else B.one
                assert list((x * y).coeffs) == expected
