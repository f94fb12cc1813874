"""Law checks for additive maps: Lie and associative homomorphisms,
derivations, Jordan derivations and specializations.

Every check is exhaustive over pairs of domain basis rows, visited in
lexicographic order, so the reported witness is the first violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import Algebra, Element, LinearMap, Subspace, bracket_span, subspace_product
from .errors import DomainNotBracketClosed, DomainNotProductClosed, InputError
from .peirce import GradedLieRing

LIE_HOM = "lie_hom"
LIE_DER = "lie_der"
JORDAN_DER = "jordan_der"
ASSOC_HOM = "assoc_hom"
ASSOC_ANTIHOM = "assoc_antihom"
ASSOC_DER = "assoc_der"
SPEC_PAIRWISE = "specialization_pairwise"
SPEC_WORDS = "specialization_words"


@dataclass
class MapVerdict:
    """Outcome of a law check; ``witness`` is set exactly when the check failed."""

    kind: str
    passed: bool
    witness: tuple | None = None
    detail: dict | None = None
    map: LinearMap | None = None

    def __bool__(self):
        return self.passed

    def recheck(self) -> bool:
        """Re-evaluate the witness; True when it is a genuine violation."""
        if self.passed or self.witness is None:
            return False
        f = self.map
        if self.kind in (SPEC_PAIRWISE, SPEC_WORDS):
            prod = None
            for x in self.witness:
                y = f.apply_vec(x.coeffs)
                prod = y if prod is None else f.codomain.mul_vec(prod, y)
            return any(prod)
        x, y = self.witness
        lhs, rhs = _LAWS[self.kind](f, x.coeffs, y.coeffs)
        return lhs != rhs

    def to_json(self, encode) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "pass": self.passed}
        out["witness"] = None if self.witness is None else [encode(w) for w in self.witness]
        if self.detail:
            out["detail"] = self.detail
        return out


# -- individual laws -------------------------------------------------------
# each returns (lhs, rhs) as coordinate tuples in the codomain


def _lie_hom_law(f, x, y):
    A, B = f.domain.ambient, f.codomain
    return f.apply_vec(A.bracket_vec(x, y)), B.bracket_vec(f.apply_vec(x), f.apply_vec(y))


def _lie_der_law(d, x, y):
    A = d.codomain
    F = A.field
    lhs = d.apply_vec(A.bracket_vec(x, y))
    rhs = F.vadd(A.bracket_vec(d.apply_vec(x), y), A.bracket_vec(x, d.apply_vec(y)))
    return lhs, rhs


def _jordan_law(d, x, y):
    A = d.codomain
    F = A.field
    lhs = d.apply_vec(F.vadd(A.mul_vec(x, y), A.mul_vec(y, x)))
    dx, dy = d.apply_vec(x), d.apply_vec(y)
    rhs = F.vadd(F.vadd(A.mul_vec(dx, y), A.mul_vec(y, dx)), F.vadd(A.mul_vec(x, dy), A.mul_vec(dy, x)))
    return lhs, rhs


def _assoc_der_law(d, x, y):
    A = d.codomain
    F = A.field
    lhs = d.apply_vec(A.mul_vec(x, y))
    rhs = F.vadd(A.mul_vec(d.apply_vec(x), y), A.mul_vec(x, d.apply_vec(y)))
    return lhs, rhs


def _assoc_hom_law(f, x, y):
    A, B = f.domain.ambient, f.codomain
    return f.apply_vec(A.mul_vec(x, y)), B.mul_vec(f.apply_vec(x), f.apply_vec(y))


def _assoc_antihom_law(f, x, y):
    A, B = f.domain.ambient, f.codomain
    return f.apply_vec(A.mul_vec(x, y)), B.mul_vec(f.apply_vec(y), f.apply_vec(x))


_LAWS = {
    LIE_HOM: _lie_hom_law,
    LIE_DER: _lie_der_law,
    JORDAN_DER: _jordan_law,
    ASSOC_DER: _assoc_der_law,
    ASSOC_HOM: _assoc_hom_law,
    ASSOC_ANTIHOM: _assoc_antihom_law,
}


def _scan(kind: str, f: LinearMap, symmetric: bool) -> MapVerdict:
    law = _LAWS[kind]
    rows = f.domain.rows
    A = f.domain.ambient
    for a, x in enumerate(rows):
        for b in range(a if symmetric else 0, len(rows)):
            y = rows[b]
            lhs, rhs = law(f, x, y)
            if lhs != rhs:
                return MapVerdict(kind, False, (Element(A, x), Element(A, y)),
                                  {"pair": [a, b]}, map=f)
    return MapVerdict(kind, True, map=f)


def _require_bracket_closed(D: Subspace) -> None:
    if not bracket_span(D, D) <= D:
        raise DomainNotBracketClosed("map domain is not closed under the bracket")


def _require_product_closed(D: Subspace) -> None:
    if not subspace_product(D, D) <= D:
        raise DomainNotProductClosed("map domain is not closed under products")


def _require_endomorphism(d: LinearMap) -> None:
    if d.codomain != d.domain.ambient:
        raise InputError("a derivation must take values in its own ambient algebra")


def check_lie_hom(f: LinearMap) -> MapVerdict:
    """``f[x, y] == [f x, f y]`` on all basis pairs of the domain."""
    _require_bracket_closed(f.domain)
    return _scan(LIE_HOM, f, symmetric=True)


def check_lie_derivation(d: LinearMap) -> MapVerdict:
    """``d[x, y] == [d x, y] + [x, d y]`` on all basis pairs of the domain."""
    _require_endomorphism(d)
    _require_bracket_closed(d.domain)
    return _scan(LIE_DER, d, symmetric=True)


def check_jordan_derivation(d: LinearMap) -> MapVerdict:
    """``d(xy + yx) == d(x)y + y d(x) + x d(y) + d(y)x`` on all basis pairs."""
    _require_endomorphism(d)
    if not d.domain.is_full:
        raise InputError("a Jordan derivation must be defined on the whole algebra")
    return _scan(JORDAN_DER, d, symmetric=True)


def check_assoc_derivation(d: LinearMap) -> MapVerdict:
    """``d(xy) == d(x)y + x d(y)`` on all ordered basis pairs."""
    _require_endomorphism(d)
    _require_product_closed(d.domain)
    return _scan(ASSOC_DER, d, symmetric=False)


def check_assoc_hom(f: LinearMap, anti: bool = False) -> MapVerdict:
    """``f(xy) == f(x)f(y)``, or ``f(y)f(x)`` when ``anti``, on all ordered basis pairs."""
    _require_product_closed(f.domain)
    return _scan(ASSOC_ANTIHOM if anti else ASSOC_HOM, f, symmetric=False)


# -- specializations -----------------------------------------------------------


def _check_graded_map(f: LinearMap, L: GradedLieRing, target: Algebra | None) -> None:
    if f.domain != L.total:
        raise InputError("map must be defined on the graded ring")
    if target is not None and target != f.codomain:
        raise InputError("target differs from the map's codomain")


def check_specialization_pairwise(f: LinearMap, L: GradedLieRing, target: Algebra | None = None) -> MapVerdict:
    """``f(L_a) f(L_b) == 0`` whenever ``a + b`` is neither a root nor zero."""
    _check_graded_map(f, L, target)
    R = L.roots
    B = f.codomain
    images = {a: [f.apply_vec(r) for r in L.L_alpha[a].rows] for a in R}
    for a in R:
        for b in R:
            if R.classify(R.add(a, b)) != "none":
                continue
            for s, x in enumerate(images[a]):
                for t, y in enumerate(images[b]):
                    if any(B.mul_vec(x, y)):
                        A = L.ambient
                        return MapVerdict(
                            SPEC_PAIRWISE, False,
                            (Element(A, L.L_alpha[a].rows[s]), Element(A, L.L_alpha[b].rows[t])),
                            {"roots": [list(R.pair(a)), list(R.pair(b))]}, map=f,
                        )
    return MapVerdict(SPEC_PAIRWISE, True, map=f)


def check_specialization_words(f: LinearMap, L: GradedLieRing, target: Algebra | None = None,
                               max_len: int = 4) -> MapVerdict:
    """Every product ``f(L_a1) ... f(L_am)``, ``2 <= m <= max_len``, whose root sum is
    neither a root nor zero, vanishes.

    Words are explored depth-first in lexicographic root order.  A prefix
    whose product subspace is zero is pruned, as every extension vanishes.
    """
    if max_len < 2:
        raise InputError("max_len must be at least 2")
    _check_graded_map(f, L, target)
    R = L.roots
    B = f.codomain
    roots = list(R)
    images = {a: Subspace.from_vectors(B, [f.apply_vec(r) for r in L.L_alpha[a].rows]) for a in roots}
    checked = 0

    def witness(word):
        # first nonzero product of domain basis rows along the word
        A = L.ambient

        def walk(k, prod, chosen):
            if k == len(word):
                return chosen if any(prod) else None
            for r in L.L_alpha[word[k]].rows:
                y = f.apply_vec(r)
                nxt = y if prod is None else B.mul_vec(prod, y)
                if any(nxt):
                    hit = walk(k + 1, nxt, chosen + [Element(A, r)])
                    if hit:
                        return hit
            return None

        return tuple(walk(0, None, []))

    stack = [((a,), a, images[a]) for a in reversed(roots) if not images[a].is_zero]
    while stack:
        word, total, P = stack.pop()
        if len(word) >= max_len:
            continue
        for b in reversed(roots):
            Q = subspace_product(P, images[b])
            s = R.add(total, b)
            checked += 1
            if Q.is_zero:
                continue
            w = word + (b,)
            if R.classify(s) == "none":
                return MapVerdict(SPEC_WORDS, False, witness(w),
                                  {"word": [list(R.pair(a)) for a in w]}, map=f)
            stack.append((w, s, Q))
    return MapVerdict(SPEC_WORDS, True, detail={"products_checked": checked, "max_len": max_len}, map=f)


# -- helpers ---------------------------------------------------------------


def adjoint_map(L: Subspace, M: Algebra | None = None) -> LinearMap:
    """``x -> ad x`` restricted to ``L``, as a map into ``M_r`` with ``r = rank L``.

    ``M`` defaults to a fresh ``M_r`` over the ground field; matrix entry
    ``(s, t)`` of ``ad x`` is coordinate ``s`` of ``[x, row_t]``.
    """
    from .algebra import field_algebra, matrix_algebra

    A = L.ambient
    F = A.field
    r = L.rank
    if M is None:
        M = matrix_algebra(field_algebra(F), r)
    if M.dim != r * r:
        raise InputError("matrix algebra has the wrong size")
    rows = []
    for x in L.rows:
        v = [F.zero] * (r * r)
        for t, y in enumerate(L.rows):
            c = L.coordinates_vec(A.bracket_vec(x, y))
            for s in range(r):
                v[s * r + t] = c[s]
        rows.append(v)
    return LinearMap(L, M, rows)
