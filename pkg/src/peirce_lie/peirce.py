"""Idempotent frames, Peirce components and the root grading of ``[A, A]``.

Indices of idempotents are 0-based throughout the Python API, so the root
``w_i - w_j`` is written ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from typing import Sequence

from . import linalg
from .algebra import (
    Algebra,
    Element,
    LinearMap,
    Subspace,
    annihilator,
    bracket_span,
    derived_lie_ring,
    span,
    subspace_product,
    unital_hull,
)
from .errors import (
    GradingFailure,
    InputError,
    NoDecomposition,
    NotComplete,
    NotFull,
    NotGraded,
    NotHomomorphism,
    NotIdempotent,
    NotOrthogonal,
    NotSurjective,
    PeirceMismatch,
)


# -- root system ---------------------------------------------------------------


class RootSystem:
    """Type ``A_{n-1}``: roots ``w_i - w_j`` for ``i != j`` as integer n-vectors."""

    def __init__(self, n: int):
        if n < 3:
            raise InputError("a root grading needs at least three idempotents")
        self.n = n
        self.pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        self.roots = [self.root(i, j) for i, j in self.pairs]
        self._pair_of = dict(zip(self.roots, self.pairs))

    def root(self, i: int, j: int) -> tuple:
        v = [0] * self.n
        v[i] += 1
        v[j] -= 1
        return tuple(v)

    def pair(self, alpha: tuple) -> tuple[int, int]:
        return self._pair_of[alpha]

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._pair_of

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.n == self.n

    def __hash__(self):
        return hash(("A", self.n))

    @staticmethod
    def add(alpha: Sequence[int], beta: Sequence[int]) -> tuple:
        return tuple(a + b for a, b in zip(alpha, beta))

    def classify(self, v: Sequence[int]) -> str:
        """``"zero"``, ``"root"`` or ``"none"`` for a weight-lattice vector."""
        if not any(v):
            return "zero"
        return "root" if tuple(v) in self._pair_of else "none"


# -- frames --------------------------------------------------------------------


class IdempotentFrame:
    """Validated orthogonal idempotents with their Peirce components.

    ``ambient`` is ``A`` itself or its unital hull; idempotents live there.
    Peirce components ``A_ij = e_i A e_j`` are subspaces of ``A``.
    """

    def __init__(self, algebra: Algebra, ambient: Algebra, idempotents, peirce, full, use_hull):
        self.algebra = algebra
        self.ambient = ambient
        self.idempotents = tuple(idempotents)
        self.peirce = tuple(tuple(row) for row in peirce)
        self.full = tuple(full)
        self.use_hull = use_hull

    @property
    def n(self) -> int:
        return len(self.idempotents)

    def __repr__(self):
        return f"IdempotentFrame(n={self.n}, dim={self.algebra.dim}, hull={self.use_hull})"

    def component(self, i: int, j: int) -> Subspace:
        return self.peirce[i][j]

    def lift(self, v: Sequence) -> tuple:
        """Coordinates of an element of ``A`` inside the ambient algebra."""
        if self.use_hull:
            return tuple(v) + (self.algebra.field.zero,)
        return tuple(v)

    def drop(self, v: Sequence) -> tuple:
        if self.use_hull:
            if v[-1]:
                raise InputError("element has a unit component and does not lie in A")
            return tuple(v[:-1])
        return tuple(v)

    def sandwich(self, i: int, v: Sequence, j: int) -> tuple:
        """``e_i v e_j`` for ``v`` in ``A``."""
        H = self.ambient
        w = H.mul_vec(H.mul_vec(self.idempotents[i].coeffs, self.lift(v)), self.idempotents[j].coeffs)
        return self.drop(w)

    def off_diagonal(self):
        """``((i, j), row)`` for every echelon basis row of every ``A_ij``, ``i != j``, in order."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if i != j:
                    out.extend(((i, j), r) for r in self.peirce[i][j].rows)
        return out

    @property
    def all_full(self) -> bool:
        return all(self.full)


def _as_ambient_vector(x, A: Algebra, H: Algebra, use_hull: bool) -> tuple:
    f = A.field
    if isinstance(x, Element):
        if x.parent == H:
            return x.coeffs
        if use_hull and x.parent == A:
            return x.coeffs + (f.zero,)
        raise InputError("idempotent lies in neither the algebra nor its hull")
    v = f.vec(x)
    if len(v) == H.dim:
        return v
    if use_hull and len(v) == A.dim:
        return v + (f.zero,)
    raise InputError(f"idempotent has {len(v)} coordinates, expected {H.dim}")


def _two_sided_span(A: Algebra, H: Algebra, e: Sequence, lift, drop) -> Subspace:
    """``A e A`` with products taken in ``H``."""
    left = [drop(H.mul_vec(lift(b), e)) for b in Subspace.full(A).rows]
    AeA = [A.mul_vec(u, b) for u in left for b in Subspace.full(A).rows]
    return Subspace.from_vectors(A, AeA)


def build_frame(A: Algebra, idempotents, use_hull: bool = False) -> IdempotentFrame:
    """Validate ``idempotents`` as a complete orthogonal frame and compute all ``A_ij``."""
    if not idempotents:
        raise InputError("empty idempotent list")
    H = unital_hull(A)[0] if use_hull else A
    f = A.field
    es = [_as_ambient_vector(x, A, H, use_hull) for x in idempotents]
    for t, e in enumerate(es):
        if H.mul_vec(e, e) != e:
            raise NotIdempotent(f"idempotent {t} does not square to itself", certificate={"index": t})
    for s in range(len(es)):
        for t in range(len(es)):
            if s != t and any(H.mul_vec(es[s], es[t])):
                raise NotOrthogonal(f"e{s} e{t} != 0", certificate={"pair": [s, t]})
    if H.unit is None:
        raise NotComplete("the algebra has no unit; pass use_hull=True")
    total = f.zeros(H.dim)
    for e in es:
        total = f.vadd(total, e)
    if total != H.unit:
        raise NotComplete("idempotents do not sum to the identity")

    frame = IdempotentFrame(A, H, [Element(H, e) for e in es], [], [], use_hull)
    n = len(es)
    basis = Subspace.full(A).rows
    peirce = [[Subspace.from_vectors(A, [frame.sandwich(i, b, j) for b in basis]) for j in range(n)] for i in range(n)]
    frame.peirce = tuple(tuple(r) for r in peirce)

    ranks = sum(c.rank for row in peirce for c in row)
    if ranks != A.dim:
        raise PeirceMismatch(f"Peirce ranks sum to {ranks}, expected {A.dim}")
    summed = Subspace.from_vectors(A, [r for row in peirce for c in row for r in c.rows])
    if not summed.is_full:
        raise PeirceMismatch("Peirce components do not span the algebra")
    for i, j, k, l in iproduct(range(n), repeat=4):
        prod = subspace_product(peirce[i][j], peirce[k][l])
        if j != k:
            if not prod.is_zero:
                raise PeirceMismatch(f"A_{i}{j} A_{k}{l} != 0", certificate={"components": [i, j, k, l]})
        elif not prod <= peirce[i][l]:
            raise PeirceMismatch(f"A_{i}{j} A_{k}{l} not inside A_{i}{l}", certificate={"components": [i, j, k, l]})

    frame.full = tuple(
        _two_sided_span(A, H, e, frame.lift, frame.drop).is_full for e in es
    )
    return frame


def is_full_idempotent(A: Algebra, e: Element) -> bool:
    """``AeA == A``; ``e`` may live in ``A`` or in ``unital_hull(A)``."""
    H = e.parent
    if H == A:
        lift = drop = tuple
    elif H.meta.get("kind") == "hull" and H.meta.get("of") == A:
        z = (A.field.zero,)

        def lift(v):
            return tuple(v) + z

        def drop(v):
            return tuple(v[:-1])
    else:
        raise InputError("element lies in neither the algebra nor its hull")
    if H.mul_vec(e.coeffs, e.coeffs) != e.coeffs:
        raise NotIdempotent("element is not idempotent")
    return _two_sided_span(A, H, e.coeffs, lift, drop).is_full


# -- graded Lie rings ----------------------------------------------------------


@dataclass
class GradedLieRing:
    """Root-graded Lie ring inside an associative algebra."""

    roots: RootSystem
    L_alpha: dict
    L_zero: Subspace
    total: Subspace
    frame: IdempotentFrame | None = dc_field(default=None, repr=False)

    def component(self, alpha) -> Subspace:
        alpha = tuple(alpha)
        if not any(alpha):
            return self.L_zero
        return self.L_alpha[alpha]

    @property
    def ambient(self) -> Algebra:
        return self.total.ambient

    def ranks(self) -> dict:
        return {self.roots.pair(a): self.L_alpha[a].rank for a in self.roots}

    def violations(self) -> list[dict]:
        """All failed grading identities, in a fixed order (empty when the grading is valid)."""
        out = []
        A = self.ambient
        R = self.roots
        comps = [self.L_zero] + [self.L_alpha[a] for a in R]
        summed = Subspace.from_vectors(A, [r for c in comps for r in c.rows])
        if summed != self.total:
            out.append({"identity": "total = L_0 + sum L_alpha"})
        if sum(c.rank for c in comps) != self.total.rank:
            out.append({"identity": "sum of components is direct"})
        generated = Subspace.zero(A)
        for a in R:
            generated = generated + bracket_span(self.L_alpha[tuple(-x for x in a)], self.L_alpha[a])
        if generated != self.L_zero:
            out.append({"identity": "L_0 = sum [L_-alpha, L_alpha]"})
        for a in R:
            for b in R:
                s = R.add(a, b)
                kind = R.classify(s)
                br = bracket_span(self.L_alpha[a], self.L_alpha[b])
                if kind == "root":
                    ok = br <= self.L_alpha[s]
                elif kind == "zero":
                    ok = br <= self.L_zero
                else:
                    ok = br.is_zero
                if not ok:
                    out.append({"identity": "[L_alpha, L_beta] in L_(alpha+beta)",
                                "alpha": list(R.pair(a)), "beta": list(R.pair(b))})
            if not bracket_span(self.L_zero, self.L_alpha[a]) <= self.L_alpha[a]:
                out.append({"identity": "[L_0, L_alpha] in L_alpha", "alpha": list(R.pair(a))})
        if not bracket_span(self.L_zero, self.L_zero) <= self.L_zero:
            out.append({"identity": "[L_0, L_0] in L_0"})
        return out

    def decompose(self, v: Sequence) -> dict:
        """Split a vector of ``total`` into its graded pieces: ``{root or 0: vector}``."""
        A = self.ambient
        f = A.field
        keys = [0] + list(self.roots)
        comps = [self.L_zero] + [self.L_alpha[a] for a in self.roots]
        rows = [r for c in comps for r in c.rows]
        t = linalg.combination(rows, v, f)
        if t is None:
            raise InputError("vector lies outside the graded ring")
        out = {}
        pos = 0
        for key, c in zip(keys, comps):
            piece = f.vcombine(t[pos:pos + c.rank], c.rows, A.dim)
            pos += c.rank
            if any(piece):
                out[key] = piece
        return out

    def image(self, f: LinearMap) -> "GradedLieRing":
        """Grading of ``f(total)`` by the images of the components."""
        return GradedLieRing(
            self.roots,
            {a: f.image_of(c) for a, c in self.L_alpha.items()},
            f.image_of(self.L_zero),
            f.image_of(self.total),
        )


def delta_grading(frame: IdempotentFrame) -> GradedLieRing:
    """The grading ``L_(w_i - w_j) = A_ij``, ``L_0 = sum [A_ij, A_ji]`` of ``[A, A]``, verified."""
    if frame.n < 3:
        raise GradingFailure("a root grading needs at least three idempotents",
                             certificate={"identity": "n >= 3"})
    if not frame.all_full:
        bad = [t for t, ok in enumerate(frame.full) if not ok]
        raise NotFull(f"idempotents {bad} are not full", certificate={"indices": bad})
    R = RootSystem(frame.n)
    A = frame.algebra
    L_alpha = {R.root(i, j): frame.peirce[i][j] for i, j in R.pairs}
    L_zero = Subspace.zero(A)
    for i, j in R.pairs:
        if i < j:
            L_zero = L_zero + bracket_span(frame.peirce[i][j], frame.peirce[j][i])
    total = L_zero
    for c in L_alpha.values():
        total = total + c
    derived = derived_lie_ring(A)
    if total != derived:
        raise GradingFailure("components do not add up to [A, A]",
                             certificate={"identity": "total = [A, A]", "total_rank": total.rank,
                                          "derived_rank": derived.rank})
    L = GradedLieRing(R, L_alpha, L_zero, total, frame)
    bad = L.violations()
    if bad:
        raise GradingFailure(f"grading identity fails: {bad[0]['identity']}", certificate=bad[0])
    return L


def is_perfect(L) -> bool:
    """``[L, L] == L`` for a graded ring or a plain subspace."""
    total = L.total if isinstance(L, GradedLieRing) else L
    return bracket_span(total, total) == total


# -- h elements ----------------------------------------------------------------


def idempotent_decomposition(frame: IdempotentFrame, i: int, j: int) -> list[tuple[Element, Element]]:
    """Pairs ``(a, b)``, ``a`` in ``A_ij`` and ``b`` in ``A_ji``, with ``sum a b == e_i``.

    The bilinear problem is solved as a linear one on coefficient pairs;
    the echelon-first solution is taken.
    """
    if i == j:
        raise InputError("decomposition needs i != j")
    A = frame.algebra
    f = A.field
    ev = frame.idempotents[i].coeffs
    try:
        target = frame.drop(ev)
    except InputError:
        raise NoDecomposition(f"e{i} lies outside A", certificate={"pair": [i, j]}) from None
    U, V = frame.peirce[i][j], frame.peirce[j][i]
    cols = [A.mul_vec(u, v) for u in U.rows for v in V.rows]
    t = linalg.combination(cols, target, f) if cols else (None if any(target) else ())
    if t is None:
        raise NoDecomposition(f"e{i} is not in A_{i}{j} A_{j}{i}", certificate={"pair": [i, j]})
    pairs = []
    m = V.rank
    for s, u in enumerate(U.rows):
        coeffs = t[s * m:(s + 1) * m]
        if any(coeffs):
            pairs.append((Element(A, u), Element(A, f.vcombine(coeffs, V.rows, A.dim))))
    return pairs


def h_element(frame: IdempotentFrame, i: int, j: int) -> Element:
    """``h_ij = sum [a, b]`` for a decomposition ``e_i = sum a b``.

    Checked: ``h_ij - e_i`` lies in ``A_jj``; for ``k`` outside ``{i, j}``
    ``ad h_ij`` is the identity on ``A_ik`` and minus the identity on ``A_ki``.
    """
    A = frame.algebra
    f = A.field
    pairs = idempotent_decomposition(frame, i, j)
    h = f.zeros(A.dim)
    for a, b in pairs:
        h = f.vadd(h, A.bracket_vec(a.coeffs, b.coeffs))
    diff = f.vsub(h, frame.drop(frame.idempotents[i].coeffs))
    if not frame.peirce[j][j].contains_vec(diff):
        raise NoDecomposition("h - e_i is not in A_jj", certificate={"pair": [i, j]})
    for k in range(frame.n):
        if k in (i, j):
            continue
        for x in frame.peirce[i][k].rows:
            if A.bracket_vec(h, x) != x:
                raise NoDecomposition(f"[h, x] != x on A_{i}{k}", certificate={"pair": [i, j]})
        for x in frame.peirce[k][i].rows:
            if A.bracket_vec(h, x) != f.vneg(x):
                raise NoDecomposition(f"[h, x] != -x on A_{k}{i}", certificate={"pair": [i, j]})
    return Element(A, h)


# -- extension verifiers -------------------------------------------------------


@dataclass
class ExtensionVerdict:
    passed: bool
    certificate: dict | None = None

    def __bool__(self):
        return self.passed


def verify_graded_central_extension(f: LinearMap, source: GradedLieRing, target: GradedLieRing) -> ExtensionVerdict:
    """Surjective graded ``f``: passes iff ``ker f`` lies in the source's ``L_0``."""
    if f.domain != source.total:
        raise InputError("map domain is not the source graded ring")
    img = f.image()
    if img != target.total:
        raise NotSurjective("map is not onto the target graded ring",
                            certificate={"image_rank": img.rank, "target_rank": target.total.rank})
    if source.roots != target.roots:
        raise NotGraded("source and target carry different root systems")
    for key in [0] + list(source.roots):
        src = source.component(key if key != 0 else (0,) * source.roots.n)
        dst = target.component(key if key != 0 else (0,) * target.roots.n)
        if not f.image_of(src) <= dst:
            where = "0" if key == 0 else list(source.roots.pair(key))
            raise NotGraded(f"f(L'_{where}) not inside L_{where}", certificate={"component": where})
    ker = f.kernel()
    for v in ker.rows:
        if source.L_zero.contains_vec(v):
            continue
        pieces = source.decompose(v)
        root = next(k for k in pieces if k != 0)
        return ExtensionVerdict(False, {
            "kernel_element": v,
            "root": list(source.roots.pair(root)),
        })
    return ExtensionVerdict(True, {"kernel_rank": ker.rank})


def verify_annihilator_extension(f: LinearMap, source: Algebra, target: Algebra) -> ExtensionVerdict:
    """Surjective homomorphism ``f``: passes iff ``source^2 == source`` and ``ker f`` lies in ``Ann(source)``."""
    if f.domain != Subspace.full(source) or f.codomain != target:
        raise InputError("map must be defined on the whole source algebra into the target")
    n = source.dim
    F = source.field
    for a in range(n):
        ea = F.unit_vector(n, a)
        fa = f.matrix[a]
        for b in range(n):
            eb = F.unit_vector(n, b)
            lhs = f.apply_vec(source.mul_vec(ea, eb))
            rhs = target.mul_vec(fa, f.matrix[b])
            if lhs != rhs:
                raise NotHomomorphism(f"f(b{a} b{b}) != f(b{a}) f(b{b})", certificate={"pair": [a, b]})
    if not f.image().is_full:
        raise NotSurjective("map is not onto the target")
    full = Subspace.full(source)
    square = subspace_product(full, full)
    if not square.is_full:
        missing = next(e for e in full.rows if not square.contains_vec(e))
        return ExtensionVerdict(False, {"identity": "A'A' = A'", "missing": missing,
                                        "square_rank": square.rank})
    ann = annihilator(source)
    for v in f.kernel().rows:
        if not ann.contains_vec(v):
            return ExtensionVerdict(False, {"identity": "ker in Ann(A')", "kernel_element": v})
    return ExtensionVerdict(True, {"kernel_rank": f.kernel().rank, "annihilator_rank": ann.rank})
