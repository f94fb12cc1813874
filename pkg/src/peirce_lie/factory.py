"""Concrete constructions: the Grassmann algebra with a square-zero central ``z``,
its Jordan derivation, the induced Lie derivation of ``[M_2(B), M_2(B)]``,
dual-number extensions, and the end-to-end non-extendability witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .algebra import (
    Algebra,
    Element,
    LinearMap,
    Subspace,
    derived_lie_ring,
    matrix_algebra,
    matrix_entries,
    matrix_from_entries,
    matrix_shape,
    matrix_unit,
)
from .errors import CharTwo, InputError, PreconditionFailed, RepresentationFailure
from .field import QQ, Field
from .lie import check_assoc_derivation, check_jordan_derivation, check_lie_derivation, check_lie_hom
from .peirce import build_frame, is_full_idempotent


@dataclass(frozen=True)
class GrassmannZSpec:
    n: int = 2
    field: Field = QQ

    def validate(self) -> None:
        if self.n < 2:
            raise InputError("the Grassmann part needs at least two generators")
        if self.field.characteristic == 2:
            raise CharTwo("characteristic 2 is excluded")


@dataclass
class GrassmannZ:
    algebra: Algebra
    n: int
    one: Element
    z: Element
    e: tuple  # generators e_1 .. e_n as Elements

    def monomial(self, idx, with_z: bool = False) -> Element:
        """``e_i1 ... e_ik`` (1-based, strictly increasing), optionally times ``z``."""
        key = (bool(with_z), tuple(idx))
        return self.algebra.basis_element(self.algebra.meta["index"][key])


def _grassmann_basis(n: int):
    """``(with_z, monomial)`` keys in basis order."""
    mons = [()]
    for k in range(1, n + 1):
        mons.extend(combinations(range(1, n + 1), k))
    keys = [(False, m) for m in mons]
    keys.append((True, ()))
    keys.extend((True, (i,)) for i in range(1, n + 1))
    keys.extend((True, m) for m in combinations(range(1, n + 1), 2))
    return keys


def _merge(a: tuple, b: tuple):
    """Sign and sorted union of two Grassmann monomials; sign 0 on a repeat."""
    if set(a) & set(b):
        return 0, ()
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def grassmann_z_algebra(spec: GrassmannZSpec | int = 2, field: Field | None = None) -> GrassmannZ:
    """``B_n``: Grassmann algebra on ``e_1..e_n`` with central ``z``, ``z^2 = 0`` and
    ``z`` times any monomial of degree at least 3 equal to zero.

    Basis order: ``1``, Grassmann monomials by degree then lexicographically,
    ``z``, ``z e_i``, ``z e_i e_j``.
    """
    if isinstance(spec, int):
        spec = GrassmannZSpec(spec, field or QQ)
    spec.validate()
    n, F = spec.n, spec.field
    keys = _grassmann_basis(n)
    index = {k: t for t, k in enumerate(keys)}
    table = []
    for (za, ma), s in index.items():
        for (zb, mb), t in index.items():
            if za and zb:
                continue
            sign, m = _merge(ma, mb)
            if not sign:
                continue
            key = (za or zb, m)
            if key not in index:
                continue  # z times degree >= 3
            table.append((s, t, index[key], sign))

    def name(k):
        zpart, m = k
        g = "".join(f"e{i}" for i in m)
        if zpart:
            return "z" + g
        return g or "1"

    unit = F.unit_vector(len(keys), 0)
    A = Algebra(F, len(keys), table, [name(k) for k in keys], unit=unit,
                meta={"kind": "grassmann_z", "n": n, "index": index})
    return GrassmannZ(
        A, n, A.one(), A.basis_element(index[(True, ())]),
        tuple(A.basis_element(index[(False, (i,))]) for i in range(1, n + 1)),
    )


def grassmann_z_dimension(n: int) -> int:
    return 2 ** n + 1 + n + n * (n - 1) // 2


def jordan_derivation_d(B: GrassmannZ) -> LinearMap:
    """``d(e_i) = z e_i``; ``d`` vanishes on every other basis element."""
    A = B.algebra
    F = A.field
    idx = A.meta["index"]
    rows = [F.zeros(A.dim) for _ in range(A.dim)]
    for i in range(1, B.n + 1):
        rows[idx[(False, (i,))]] = F.unit_vector(A.dim, idx[(True, (i,))])
    return LinearMap(Subspace.full(A), A, rows)


# -- the induced Lie derivation on [M_2(B), M_2(B)] --------------------------


class DiagonalSolver:
    """Represents ``(p, q)`` as ``p = sum x y``, ``q = -sum y x`` over ``B (x) B``.

    The unknowns are coefficients ``t_st`` of ``b_s (x) b_t``; the value of
    ``(x, y) -> (d(x)y + x d(y), -(d(y)x + y d(x)))`` must vanish on every
    relation, which is checked once when the solver is built.
    """

    def __init__(self, B: Algebra, d: LinearMap):
        self.B = B
        self.d = d
        F = B.field
        n = B.dim
        self.cols = []
        self.vals = []
        for s in range(n):
            bs = F.unit_vector(n, s)
            ds = d.apply_vec(bs)
            for t in range(n):
                bt = F.unit_vector(n, t)
                dt = d.apply_vec(bt)
                p = B.mul_vec(bs, bt)
                q = F.vneg(B.mul_vec(bt, bs))
                self.cols.append(p + q)
                dp = F.vadd(B.mul_vec(ds, bt), B.mul_vec(bs, dt))
                dq = F.vneg(F.vadd(B.mul_vec(dt, bs), B.mul_vec(bt, ds)))
                self.vals.append(dp + dq)
        rels = linalg.relations(self.cols, 2 * n, F)
        for r in rels:
            if any(F.vcombine(r, self.vals, 2 * n)):
                raise RepresentationFailure("value depends on the chosen representation",
                                            certificate={"relation": r})
        self.relation_count = len(rels)

    def solve(self, p, q):
        F = self.B.field
        t = linalg.combination(self.cols, tuple(p) + tuple(q), F)
        if t is None:
            raise RepresentationFailure("diagonal part has no representation sum x y, -sum y x")
        return t

    def value(self, p, q) -> tuple[tuple, tuple]:
        F = self.B.field
        n = self.B.dim
        v = F.vcombine(self.solve(p, q), self.vals, 2 * n)
        return v[:n], v[n:]


def lift_dbar(B: GrassmannZ | Algebra, d: LinearMap, M: Algebra | None = None) -> LinearMap:
    """``dbar`` on ``[M_2(B), M_2(B)]``: off-diagonal entries map by ``d``; the diagonal
    ``(sum x y, -sum y x)`` maps to ``(sum d(x)y + x d(y), -sum d(y)x + y d(x))``."""
    Balg = B.algebra if isinstance(B, GrassmannZ) else B
    if M is None:
        M = matrix_algebra(Balg, 2)
    n, R = matrix_shape(M)
    if n != 2 or R != Balg:
        raise InputError("M must be M_2 of the base algebra")
    solver = DiagonalSolver(Balg, d)
    D = derived_lie_ring(M)
    rows = []
    for r in D.rows:
        e = matrix_entries(Element(M, r))
        p, q = solver.value(e[0][0].coeffs, e[1][1].coeffs)
        img = [[Element(Balg, p), Element(Balg, d.apply_vec(e[0][1].coeffs))],
               [Element(Balg, d.apply_vec(e[1][0].coeffs)), Element(Balg, q)]]
        rows.append(matrix_from_entries(M, img).coeffs)
    return LinearMap(D, M, rows)


# -- dual numbers --------------------------------------------------------------


def dual_algebra(A: Algebra) -> Algebra:
    """``A + A eps`` with ``eps^2 = 0``; ``b_k eps`` has index ``dim A + k``."""
    d = A.dim
    table = []
    for i, j, k, c in A.entries:
        table.append((i, j, k, c))
        table.append((i, j + d, k + d, c))
        table.append((i + d, j, k + d, c))
    unit = None if A.unit is None else A.unit + A.field.zeros(d)
    names = list(A.basis_names) + [f"{nm}*eps" for nm in A.basis_names]
    return Algebra(A.field, 2 * d, table, names, unit=unit, meta={"kind": "dual", "of": A})


def dual_extension(A: Algebra, d: LinearMap) -> tuple[Algebra, LinearMap]:
    """``A' = A + A eps`` and ``f(a + b eps) = a + (d(a) + b) eps`` on ``[A', A']``.

    ``f`` is checked to be a bijective Lie homomorphism.
    """
    F = A.field
    D = derived_lie_ring(A)
    if d.domain != D or d.codomain != A:
        raise InputError("d must map [A, A] into A")
    v = check_lie_derivation(d)
    if not v:
        raise PreconditionFailed("d is not a Lie derivation", certificate=v)
    Ad = dual_algebra(A)
    z = F.zeros(A.dim)
    D2 = derived_lie_ring(Ad)
    expected = Subspace.from_vectors(Ad, [r + z for r in D.rows] + [z + r for r in D.rows])
    if D2 != expected:
        raise PreconditionFailed("[A', A'] differs from [A, A] + [A, A] eps")
    rows = []
    for r in D2.rows:
        a, b = r[:A.dim], r[A.dim:]
        rows.append(tuple(a) + F.vadd(d.apply_vec(a), b))
    f = LinearMap(D2, Ad, rows)
    vh = check_lie_hom(f)
    if not vh:
        raise PreconditionFailed("f is not a Lie homomorphism", certificate=vh)
    if not f.kernel().is_zero or f.image() != D2:
        raise PreconditionFailed("f is not bijective on [A', A']")
    return Ad, f


# -- end-to-end witness ----------------------------------------------------------


def _gap_of_d(B: GrassmannZ, d: LinearMap):
    A = B.algebra
    F = A.field
    e1, e2 = B.e[0].coeffs, B.e[1].coeffs
    lhs = d.apply_vec(A.mul_vec(e1, e2))
    rhs = F.vadd(A.mul_vec(d.apply_vec(e1), e2), A.mul_vec(e1, d.apply_vec(e2)))
    return lhs, rhs


def nonstandard_witness(field: Field = QQ, n: int = 2) -> dict:
    """Build ``B_n``, ``M_2(B_n)``, ``d`` and ``dbar`` and certify that ``dbar`` is a Lie
    derivation with no extension to an associative derivation.

    Returns a JSON-ready report; raises AssertionError if any step disagrees.
    """
    from .derivations import attempt_extension_two_idempotents

    B = grassmann_z_algebra(GrassmannZSpec(n, field))
    A = B.algebra
    F = A.field
    enc = lambda v: [F.encode(c) for c in v]  # noqa: E731
    d = jordan_derivation_d(B)
    jv = check_jordan_derivation(d)
    dv = check_assoc_derivation(d)
    assert jv.passed, "d is not a Jordan derivation"
    assert not dv.passed, "d is unexpectedly a derivation"
    lhs, rhs = _gap_of_d(B, d)
    two_ze1e2 = F.vscale(F(2), B.monomial((1, 2), with_z=True).coeffs)
    assert not any(lhs) and rhs == two_ze1e2, "gap of d on (e1, e2) is not 2 z e1 e2"

    M = matrix_algebra(A, 2)
    dbar = lift_dbar(B, d, M)
    lv = check_lie_derivation(dbar)
    assert lv.passed, "dbar is not a Lie derivation"

    e1 = B.e[0]
    X = matrix_from_entries(M, [[e1, 0], [0, -e1]])
    Y = matrix_unit(M, 0, 1, B.e[1])
    XY = X * Y
    dXY = dbar(XY)
    leib = dbar(X) * Y + X * dbar(Y)
    gap = matrix_unit(M, 0, 1, B.monomial((1, 2), with_z=True)).scale(2)
    assert dXY.is_zero and leib == gap and not gap.is_zero, "explicit X, Y do not exhibit the gap"

    frame = build_frame(M, [matrix_unit(M, 0, 0), matrix_unit(M, 1, 1)])
    full = [is_full_idempotent(M, e) for e in frame.idempotents]
    assert all(full), "diagonal idempotents are not full"
    res = attempt_extension_two_idempotents(frame, dbar)
    assert res.obstruction is not None, "no obstruction found"
    obs = res.obstruction

    return {
        "field": F.to_json(),
        "n": n,
        "dim_B": A.dim,
        "dim_M2B": M.dim,
        "derived_rank": dbar.domain.rank,
        "jordan_derivation": jv.passed,
        "derivation": dv.passed,
        "derivation_witness": [A.basis_names[A.basis().index(w)] for w in dv.witness],
        "d_e1e2": enc(lhs),
        "d_e1_e2_plus_e1_d_e2": enc(rhs),
        "dbar_lie_derivation": lv.passed,
        "X": enc(X.coeffs),
        "Y": enc(Y.coeffs),
        "dbar_XY": enc(dXY.coeffs),
        "dbar_X_Y_plus_X_dbar_Y": enc(leib.coeffs),
        "idempotents_full": full,
        "obstruction": {
            "X": enc(obs["X"]),
            "Y": enc(obs["Y"]),
            "value": enc(obs["value"]),
            "value_readable": repr(Element(M, obs["value"])),
        },
        "extension_failures": [f["check"] for f in res.failures],
    }
