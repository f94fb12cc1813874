"""Structure-constant algebras, elements, subspaces and linear maps.

An :class:`Algebra` stores ``b_i * b_j = sum_k c * b_k`` as a sparse table and
is checked for associativity when built.  A :class:`Subspace` is kept in
reduced row echelon form, so two subspaces are equal exactly when their row
tuples are equal.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Sequence

from . import kernels, linalg
from .errors import (
    AlgebraMismatch,
    FieldMismatch,
    InputError,
    NotAssociative,
    NotInDomain,
    NotUnital,
)
from .field import Field


class Algebra:
    """A finite-dimensional associative algebra over an exact field."""

    def __init__(
        self,
        field: Field,
        dim: int,
        table: Iterable[tuple[int, int, int, object]],
        basis_names: Sequence[str] | None = None,
        unit: Sequence | None = None,
        check: bool = True,
        meta: dict | None = None,
    ):
        if dim < 1:
            raise InputError("an algebra needs positive dimension")
        self.field = field
        self.dim = dim
        if basis_names is None:
            basis_names = [f"b{k}" for k in range(dim)]
        if len(basis_names) != dim:
            raise InputError("basis_names length must equal dim")
        self.basis_names = tuple(basis_names)

        acc: dict[tuple[int, int, int], object] = defaultdict(lambda: field.zero)
        for i, j, k, c in table:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError(f"table index out of range: {(i, j, k)}")
            acc[i, j, k] = field.add(acc[i, j, k], field(c))
        self.entries = tuple(sorted((i, j, k, c) for (i, j, k), c in acc.items() if c))

        ptr = [0] * (dim * dim + 1)
        for i, j, _, _ in self.entries:
            ptr[i * dim + j + 1] += 1
        for t in range(dim * dim):
            ptr[t + 1] += ptr[t]
        ks = [k for _, _, k, _ in self.entries]
        cs = [c for _, _, _, c in self.entries]
        self._table = kernels.make_table(dim, ptr, ks, cs, field)

        if check:
            bad = self._table.first_nonassociative()
            if bad is not None:
                i, j, k = bad
                raise NotAssociative(
                    f"(b{i} b{j}) b{k} != b{i} (b{j} b{k})", certificate=bad
                )
        self.unit = None
        if unit is not None:
            u = field.vec(unit)
            if len(u) != dim:
                raise InputError("unit has the wrong length")
            for k in range(dim):
                e = field.unit_vector(dim, k)
                if self._table.product(u, e) != e or self._table.product(e, u) != e:
                    raise NotUnital(f"claimed unit does not fix basis element {k}")
            self.unit = u
        self.meta = dict(meta or {})
        self._key = (field, dim, self.entries, self.unit)
        self._hash = hash(self._key)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Algebra) and self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field!r})"

    # -- raw products ----------------------------------------------------------

    def mul_vec(self, x: Sequence, y: Sequence) -> tuple:
        return self._table.product(x, y)

    def bracket_vec(self, x: Sequence, y: Sequence) -> tuple:
        return self.field.vsub(self._table.product(x, y), self._table.product(y, x))

    def basis_product(self, i: int, j: int):
        """Sparse ``b_i * b_j`` as ``((k, c), ...)``."""
        return self._table.basis_product(i, j)

    @property
    def kernel_backend(self) -> str:
        return self._table.backend

    # -- elements --------------------------------------------------------------

    def element(self, coeffs: Sequence) -> "Element":
        v = self.field.vec(coeffs)
        if len(v) != self.dim:
            raise InputError(f"expected {self.dim} coefficients, got {len(v)}")
        return Element(self, v)

    def basis_element(self, k: int) -> "Element":
        return Element(self, self.field.unit_vector(self.dim, k))

    def basis(self) -> list["Element"]:
        return [self.basis_element(k) for k in range(self.dim)]

    def named(self, name: str) -> "Element":
        try:
            return self.basis_element(self.basis_names.index(name))
        except ValueError:
            raise InputError(f"no basis element named {name!r}") from None

    def zero(self) -> "Element":
        return Element(self, self.field.zeros(self.dim))

    def one(self) -> "Element":
        if self.unit is None:
            raise NotUnital("algebra has no unit")
        return Element(self, self.unit)

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def random_element(self, rng, density: float = 1.0) -> "Element":
        f = self.field
        return Element(
            self,
            tuple(f.random(rng) if rng.random() < density else f.zero for _ in range(self.dim)),
        )

    def full(self) -> "Subspace":
        return Subspace.full(self)


class Element:
    """An algebra element: parent algebra plus an immutable coefficient tuple."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: Algebra, coeffs: tuple):
        self.parent = parent
        self.coeffs = coeffs

    def _check(self, other) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.parent is not self.parent and other.parent != self.parent:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.parent, self.parent.field.vadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Element(self.parent, self.parent.field.vsub(self.coeffs, other.coeffs))

    def __neg__(self):
        return Element(self.parent, self.parent.field.vneg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Element":
        f = self.parent.field
        return Element(self.parent, f.vscale(f(c), self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and (other.parent is self.parent or other.parent == self.parent)
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __bool__(self):
        return any(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        f = self.parent.field
        terms = []
        for c, name in zip(self.coeffs, self.parent.basis_names):
            if not c:
                continue
            s = f.encode(c)
            if isinstance(s, str) and s.endswith("/1"):
                s = s[:-2]
            s = str(s)
            if s == "1":
                terms.append(name)
            elif s == "-1":
                terms.append(f"-{name}")
            else:
                terms.append(f"{s}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def multiply(x: Element, y: Element) -> Element:
    """The algebra product ``x * y``."""
    x._check(y)
    return Element(x.parent, x.parent.mul_vec(x.coeffs, y.coeffs))


def lie_bracket(x: Element, y: Element) -> Element:
    """The commutator ``x*y - y*x``."""
    x._check(y)
    return Element(x.parent, x.parent.bracket_vec(x.coeffs, y.coeffs))


# -- subspaces ---------------------------------------------------------------


class Subspace:
    """A subspace of an algebra in canonical reduced row echelon form."""

    __slots__ = ("ambient", "rows", "pivots", "_hash")

    def __init__(self, ambient: Algebra, rows, pivots):
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self._hash = hash(self.rows)

    @classmethod
    def from_vectors(cls, ambient: Algebra, vectors: Iterable[Sequence]) -> "Subspace":
        rows, pivots = linalg.rref(list(vectors), ambient.dim, ambient.field)
        return cls(ambient, rows, pivots)

    @classmethod
    def full(cls, ambient: Algebra) -> "Subspace":
        f = ambient.field
        return cls(ambient, [f.unit_vector(ambient.dim, k) for k in range(ambient.dim)], range(ambient.dim))

    @classmethod
    def zero(cls, ambient: Algebra) -> "Subspace":
        return cls(ambient, (), ())

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient.dim

    def basis(self) -> list[Element]:
        return [Element(self.ambient, r) for r in self.rows]

    def _check(self, other: "Subspace") -> None:
        if other.ambient is not self.ambient and other.ambient != self.ambient:
            raise AlgebraMismatch("subspaces of different algebras")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and (other.ambient is self.ambient or other.ambient == self.ambient)
            and other.rows == self.rows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Subspace(rank={self.rank}, dim={self.ambient.dim})"

    def residual(self, v: Sequence) -> tuple:
        return linalg.reduce_against(v, self.rows, self.pivots, self.ambient.field)

    def contains_vec(self, v: Sequence) -> bool:
        return not any(self.residual(v))

    def __contains__(self, x: Element) -> bool:
        if x.parent is not self.ambient and x.parent != self.ambient:
            raise AlgebraMismatch("element of a different algebra")
        return self.contains_vec(x.coeffs)

    def coordinates_vec(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in the echelon basis; raises NotInDomain when ``v`` is outside."""
        coords = tuple(v[pc] for pc in self.pivots)
        f = self.ambient.field
        back = f.vcombine(coords, self.rows, self.ambient.dim)
        if back != tuple(v):
            raise NotInDomain("vector is not in the subspace")
        return coords

    def coordinates(self, x: Element) -> tuple:
        return self.coordinates_vec(x.coeffs)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains_vec(r) for r in self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.ambient, self.rows + other.rows)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Subspace.zero(self.ambient)
        f = self.ambient.field
        vecs = list(self.rows) + [f.vneg(r) for r in other.rows]
        rels = linalg.relations(vecs, self.ambient.dim, f)
        k = self.rank
        out = [f.vcombine(t[:k], self.rows, self.ambient.dim) for t in rels]
        return Subspace.from_vectors(self.ambient, out)

    def element_from_coordinates(self, coords: Sequence) -> Element:
        f = self.ambient.field
        return Element(self.ambient, f.vcombine(f.vec(coords), self.rows, self.ambient.dim))


def span(vectors: Iterable[Element], ambient: Algebra | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors`` (``ambient`` is needed when the list is empty)."""
    vectors = list(vectors)
    if not vectors:
        if ambient is None:
            raise InputError("span of an empty list needs an ambient algebra")
        return Subspace.zero(ambient)
    A = ambient or vectors[0].parent
    for v in vectors:
        if v.parent is not A and v.parent != A:
            raise AlgebraMismatch("span of elements from different algebras")
    return Subspace.from_vectors(A, [v.coeffs for v in vectors])


def subspace_product(U: Subspace, V: Subspace) -> Subspace:
    """Span of all ``u * v`` with ``u``, ``v`` running over the bases."""
    U._check(V)
    A = U.ambient
    return Subspace.from_vectors(A, [A.mul_vec(u, v) for u in U.rows for v in V.rows])


def bracket_span(U: Subspace, V: Subspace) -> Subspace:
    """Span of all ``[u, v]`` with ``u``, ``v`` running over the bases."""
    U._check(V)
    A = U.ambient
    if U == V:
        rows = U.rows
        vecs = [A.bracket_vec(rows[a], rows[b]) for a in range(len(rows)) for b in range(a + 1, len(rows))]
    else:
        vecs = [A.bracket_vec(u, v) for u in U.rows for v in V.rows]
    return Subspace.from_vectors(A, vecs)


def derived_lie_ring(A: Algebra) -> Subspace:
    """``[A, A]``: the span of all commutators."""
    full = Subspace.full(A)
    return bracket_span(full, full)


def subring_generated(U: Subspace) -> Subspace:
    """Smallest subspace containing ``U`` and closed under products."""
    S = U
    while True:
        grown = S + subspace_product(S, U)
        if grown.rank == S.rank:
            return S
        S = grown


def annihilator(A: Algebra, within: Subspace | None = None) -> Subspace:
    """``{x : xA = Ax = 0}``; with ``within`` (a subring ``S``), ``{x in S : xS = Sx = 0}``."""
    f = A.field
    if within is None:
        n = A.dim
        eqs = []
        # row (i, k) of left and right multiplication by b_i, as functionals in x
        for i in range(n):
            left = [[f.zero] * n for _ in range(n)]
            right = [[f.zero] * n for _ in range(n)]
            for l in range(n):
                for k, c in A.basis_product(i, l):
                    left[k][l] = c
                for k, c in A.basis_product(l, i):
                    right[k][l] = c
            eqs.extend(r for r in left if any(r))
            eqs.extend(r for r in right if any(r))
        sols = linalg.nullspace(eqs, n, f)
        return Subspace.from_vectors(A, sols)
    rows = within.rows
    if not rows:
        return Subspace.zero(A)
    vecs = []
    for s in rows:
        parts = []
        for t in rows:
            parts.extend(A.mul_vec(t, s))
            parts.extend(A.mul_vec(s, t))
        vecs.append(parts)
    rels = linalg.relations(vecs, len(vecs[0]), f)
    return Subspace.from_vectors(A, [f.vcombine(t, rows, A.dim) for t in rels])


# -- constructors --------------------------------------------------------------


def field_algebra(field: Field) -> Algebra:
    """The ground field as a one-dimensional unital algebra."""
    return Algebra(field, 1, [(0, 0, 0, 1)], ["1"], unit=[1], meta={"kind": "field"})


def zero_algebra(field: Field, dim: int) -> Algebra:
    """``dim``-dimensional algebra with all products zero."""
    return Algebra(field, dim, [], [f"n{k}" for k in range(dim)], meta={"kind": "null"})


def opposite(A: Algebra) -> Algebra:
    """``A^op``: same basis, ``b_i . b_j = b_j b_i``."""
    return Algebra(
        A.field,
        A.dim,
        [(j, i, k, c) for i, j, k, c in A.entries],
        [f"{n}^op" for n in A.basis_names],
        unit=A.unit,
        meta={"kind": "opposite", "of": A},
    )


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Block algebra ``A + B`` with zero cross products."""
    if A.field != B.field:
        raise FieldMismatch("direct sum of algebras over different fields")
    d = A.dim
    table = list(A.entries) + [(i + d, j + d, k + d, c) for i, j, k, c in B.entries]
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = A.unit + B.unit
    names = [f"{n}(1)" for n in A.basis_names] + [f"{n}(2)" for n in B.basis_names]
    if len(set(names)) == len(names) and not set(A.basis_names) & set(B.basis_names):
        names = list(A.basis_names) + list(B.basis_names)
    return Algebra(A.field, A.dim + B.dim, table, names, unit=unit,
                   meta={"kind": "direct_sum", "summands": (A, B)})


def matrix_algebra(R: Algebra, n: int) -> Algebra:
    """``M_n(R)`` with basis ``E_ij (x) r_k`` at index ``(i * n + j) * dim R + k``."""
    if R.unit is None:
        raise NotUnital("matrix algebra over a non-unital base")
    if n < 1:
        raise InputError("matrix size must be positive")
    r = R.dim
    table = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for a, b, k, c in R.entries:
                    table.append((((i * n + j) * r + a), ((j * n + l) * r + b), ((i * n + l) * r + k), c))
    unit = [R.field.zero] * (n * n * r)
    for i in range(n):
        for k in range(r):
            unit[(i * n + i) * r + k] = R.unit[k]
    sep = "" if n < 10 else "_"
    names = []
    for i in range(n):
        for j in range(n):
            for k in range(r):
                base = f"E{i + 1}{sep}{j + 1}"
                names.append(base if r == 1 and R.basis_names[0] == "1" else f"{base}*{R.basis_names[k]}")
    return Algebra(R.field, n * n * r, table, names, unit=unit,
                   meta={"kind": "matrix", "n": n, "base": R})


def unital_hull(A: Algebra) -> tuple[Algebra, "LinearMap"]:
    """``A + F*1`` with a freshly adjoined identity (always adjoined, even if ``A`` is unital).

    The new identity is the last basis vector.  Returns the hull and the
    embedding ``A -> hull``.
    """
    d = A.dim
    table = list(A.entries)
    for k in range(d + 1):
        table.append((d, k, k, 1))
        if k != d:
            table.append((k, d, k, 1))
    H = Algebra(A.field, d + 1, table, list(A.basis_names) + ["1"],
                unit=A.field.unit_vector(d + 1, d), meta={"kind": "hull", "of": A})
    emb = LinearMap(Subspace.full(A), H, [A.field.unit_vector(d + 1, k) for k in range(d)])
    return H, emb


def quotient_algebra(A: Algebra, ideal: Subspace) -> tuple[Algebra, "LinearMap"]:
    """``A / I`` on the complement of the pivot columns of ``I``, with the projection map."""
    f = A.field
    free = [k for k in range(A.dim) if k not in set(ideal.pivots)]
    if not free:
        raise InputError("quotient by the whole algebra")
    pos = {k: t for t, k in enumerate(free)}

    def project(v):
        r = ideal.residual(v)
        return tuple(r[k] for k in free)

    for u in ideal.rows:
        for b in range(A.dim):
            e = f.unit_vector(A.dim, b)
            if not (ideal.contains_vec(A.mul_vec(u, e)) and ideal.contains_vec(A.mul_vec(e, u))):
                raise InputError("subspace is not a two-sided ideal")
    table = []
    for a in free:
        for b in free:
            img = project(A.mul_vec(f.unit_vector(A.dim, a), f.unit_vector(A.dim, b)))
            table.extend((pos[a], pos[b], k, c) for k, c in enumerate(img) if c)
    unit = project(A.unit) if A.unit is not None else None
    Q = Algebra(f, len(free), table, [A.basis_names[k] for k in free], unit=unit,
                meta={"kind": "quotient", "of": A})
    proj = LinearMap(Subspace.full(A), Q, [project(f.unit_vector(A.dim, k)) for k in range(A.dim)])
    return Q, proj


def restrict_scalars_table(A: Algebra, S: Subspace) -> Algebra:
    """A subalgebra ``S`` of ``A`` as a standalone algebra in its echelon basis."""
    f = A.field
    table = []
    for a, u in enumerate(S.rows):
        for b, v in enumerate(S.rows):
            coords = S.coordinates_vec(A.mul_vec(u, v))
            table.extend((a, b, k, c) for k, c in enumerate(coords) if c)
    return Algebra(f, S.rank, table, [f"s{k}" for k in range(S.rank)], meta={"kind": "subalgebra", "of": A})


# -- linear maps -------------------------------------------------------------


class LinearMap:
    """An additive map from a subspace of one algebra into another algebra.

    ``matrix[r]`` holds the codomain coordinates of the image of the r-th
    echelon basis row of ``domain``.
    """

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain: Subspace, codomain: Algebra, matrix):
        f = codomain.field
        if f != domain.ambient.field:
            raise FieldMismatch("map between algebras over different fields")
        rows = tuple(f.vec(r) for r in matrix)
        if len(rows) != domain.rank or any(len(r) != codomain.dim for r in rows):
            raise InputError("matrix shape does not match domain rank and codomain dim")
        self.domain = domain
        self.codomain = codomain
        self.matrix = rows

    @classmethod
    def from_function(cls, domain: Subspace, codomain: Algebra, fn: Callable[[Element], Element]) -> "LinearMap":
        rows = []
        for b in domain.basis():
            y = fn(b)
            if y.parent is not codomain and y.parent != codomain:
                raise AlgebraMismatch("function image lies in another algebra")
            rows.append(y.coeffs)
        return cls(domain, codomain, rows)

    @classmethod
    def from_images(cls, ambient: Algebra, codomain: Algebra, sources: Sequence, images: Sequence) -> "LinearMap":
        """Map sending each source vector to the matching image; sources must be independent."""
        f = ambient.field
        sources = [tuple(s.coeffs if isinstance(s, Element) else f.vec(s)) for s in sources]
        images = [tuple(y.coeffs if isinstance(y, Element) else f.vec(y)) for y in images]
        if len(sources) != len(images):
            raise InputError("sources and images differ in length")
        domain = Subspace.from_vectors(ambient, sources)
        if domain.rank != len(sources):
            raise InputError("map sources are linearly dependent")
        rows = []
        for r in domain.rows:
            t = linalg.combination(sources, r, f)
            rows.append(f.vcombine(t, images, codomain.dim))
        return cls(domain, codomain, rows)

    @classmethod
    def identity(cls, domain: Subspace) -> "LinearMap":
        return cls(domain, domain.ambient, domain.rows)

    @classmethod
    def zero(cls, domain: Subspace, codomain: Algebra) -> "LinearMap":
        return cls(domain, codomain, [codomain.field.zeros(codomain.dim)] * domain.rank)

    def apply_vec(self, v: Sequence) -> tuple:
        coords = self.domain.coordinates_vec(v)
        return self.codomain.field.vcombine(coords, self.matrix, self.codomain.dim)

    def __call__(self, x: Element) -> Element:
        return apply_map(self, x)

    def images(self) -> list[Element]:
        return [Element(self.codomain, r) for r in self.matrix]

    def image(self) -> Subspace:
        return Subspace.from_vectors(self.codomain, self.matrix)

    def image_of(self, U: Subspace) -> Subspace:
        return Subspace.from_vectors(self.codomain, [self.apply_vec(u) for u in U.rows])

    def kernel(self) -> Subspace:
        f = self.codomain.field
        rels = linalg.relations(self.matrix, self.codomain.dim, f)
        A = self.domain.ambient
        return Subspace.from_vectors(A, [f.vcombine(t, self.domain.rows, A.dim) for t in rels])

    def restrict(self, U: Subspace) -> "LinearMap":
        if not U <= self.domain:
            raise NotInDomain("restriction to a subspace outside the domain")
        return LinearMap(U, self.codomain, [self.apply_vec(u) for u in U.rows])

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """``self o inner``."""
        return LinearMap(inner.domain, self.codomain, [self.apply_vec(r) for r in inner.matrix])

    def _same_shape(self, other: "LinearMap") -> None:
        if other.domain != self.domain or other.codomain != self.codomain:
            raise AlgebraMismatch("maps with different domain or codomain")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        f = self.codomain.field
        return LinearMap(self.domain, self.codomain, [f.vadd(a, b) for a, b in zip(self.matrix, other.matrix)])

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        f = self.codomain.field
        return LinearMap(self.domain, self.codomain, [f.vsub(a, b) for a, b in zip(self.matrix, other.matrix)])

    def scale(self, c) -> "LinearMap":
        f = self.codomain.field
        c = f(c)
        return LinearMap(self.domain, self.codomain, [f.vscale(c, r) for r in self.matrix])

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and other.domain == self.domain
            and other.codomain == self.codomain
            and other.matrix == self.matrix
        )

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap(rank {self.domain.rank} -> dim {self.codomain.dim})"


def apply_map(f: LinearMap, x: Element) -> Element:
    """Image of ``x`` under ``f``; raises NotInDomain when ``x`` is outside the domain."""
    if x.parent is not f.domain.ambient and x.parent != f.domain.ambient:
        raise AlgebraMismatch("element is not in the map's ambient algebra")
    return Element(f.codomain, f.apply_vec(x.coeffs))


# -- matrix helpers ----------------------------------------------------------


def matrix_shape(M: Algebra) -> tuple[int, Algebra]:
    if M.meta.get("kind") != "matrix":
        raise InputError("not a matrix algebra built by matrix_algebra")
    return M.meta["n"], M.meta["base"]


def matrix_entry_index(M: Algebra, i: int, j: int, k: int = 0) -> int:
    n, R = matrix_shape(M)
    return (i * n + j) * R.dim + k


def matrix_unit(M: Algebra, i: int, j: int, r: Element | None = None) -> Element:
    """``E_ij * r`` (0-based indices); ``r`` defaults to the base unit."""
    n, R = matrix_shape(M)
    rv = R.unit if r is None else r.coeffs
    f = M.field
    v = [f.zero] * M.dim
    for k, c in enumerate(rv):
        v[(i * n + j) * R.dim + k] = c
    return Element(M, tuple(v))


def matrix_from_entries(M: Algebra, entries) -> Element:
    """Element of ``M_n(R)`` from an ``n x n`` array of base elements (or scalars when ``R`` is the field)."""
    n, R = matrix_shape(M)
    f = M.field
    v = [f.zero] * M.dim
    for i in range(n):
        for j in range(n):
            e = entries[i][j]
            rv = e.coeffs if isinstance(e, Element) else f.vscale(f(e), R.unit)
            for k, c in enumerate(rv):
                v[(i * n + j) * R.dim + k] = c
    return Element(M, tuple(v))


def matrix_entries(x: Element) -> list[list[Element]]:
    """The ``n x n`` array of base-ring entries of ``x``."""
    n, R = matrix_shape(x.parent)
    r = R.dim
    return [
        [Element(R, x.coeffs[(i * n + j) * r:(i * n + j + 1) * r]) for j in range(n)]
        for i in range(n)
    ]
