"""The envelope ``A + A^op`` of ``[A, A]`` and extension of Lie maps to standard maps.

``theta(a) = a + (-a)`` embeds ``[A, A]`` into ``env = A + A^op``; the
exchange involution swaps the two summands.  A Lie map ``phi`` on ``[A, A]``
that is a specialization for a full frame factors as ``phi = chi o theta``
with ``chi`` an algebra map on ``env``; ``chi`` is found by row reduction over
products of theta-images of off-diagonal Peirce basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import (
    Algebra,
    Element,
    LinearMap,
    Subspace,
    annihilator,
    derived_lie_ring,
    direct_sum,
    opposite,
    span,
    subring_generated,
)
from .errors import (
    AnnihilatorNonzero,
    InconsistentSystem,
    InputError,
    NotFull,
    NotGenerated,
    NotHomomorphism,
    NotMultiplicative,
    NotSpecialization,
    PreconditionFailed,
)
from .lie import MapVerdict, check_assoc_hom, check_lie_hom, check_specialization_pairwise
from .peirce import IdempotentFrame, delta_grading, idempotent_decomposition


@dataclass
class EnvelopePair:
    algebra: Algebra
    env: Algebra
    derived: Subspace
    theta: LinearMap
    involution: LinearMap

    def embed(self, v, which: int = 0) -> tuple:
        """``v + 0`` (``which == 0``) or ``0 + v^op`` (``which == 1``) in ``env``."""
        F = self.algebra.field
        z = F.zeros(self.algebra.dim)
        return tuple(v) + z if which == 0 else z + tuple(v)

    def halves(self, w) -> tuple[tuple, tuple]:
        d = self.algebra.dim
        return tuple(w[:d]), tuple(w[d:])

    def star(self, w) -> tuple:
        a, b = self.halves(w)
        return b + a


def build_envelope(A: Algebra) -> EnvelopePair:
    """``env = A + A^op`` with ``theta`` on ``[A, A]`` and the exchange involution, verified."""
    F = A.field
    env = direct_sum(A, opposite(A))
    d = A.dim
    D = derived_lie_ring(A)
    theta = LinearMap(D, env, [r + F.vneg(r) for r in D.rows])
    swap = []
    for k in range(2 * d):
        swap.append(F.unit_vector(2 * d, (k + d) % (2 * d)))
    inv = LinearMap(Subspace.full(env), env, swap)
    ep = EnvelopePair(A, env, D, theta, inv)

    if not theta.kernel().is_zero:
        raise NotHomomorphism("theta is not injective")
    v = check_lie_hom(theta)
    if not v:
        raise NotHomomorphism("theta is not a Lie homomorphism", certificate=v.detail)
    v = check_assoc_hom(inv, anti=True)
    if not v:
        raise NotHomomorphism("exchange involution is not an anti-automorphism", certificate=v.detail)
    for k in range(2 * d):
        e = F.unit_vector(2 * d, k)
        if inv.apply_vec(inv.apply_vec(e)) != e:
            raise NotHomomorphism("exchange involution does not have order two")
    for r in D.rows:
        t = theta.apply_vec(r)
        if inv.apply_vec(t) != F.vneg(t):
            raise NotHomomorphism("involution does not negate theta")
    return ep


def check_envelope_generation(ep: EnvelopePair, frame: IdempotentFrame) -> bool:
    """Do the theta-images of the off-diagonal Peirce components generate ``env``?"""
    if frame.algebra != ep.algebra:
        raise InputError("frame and envelope belong to different algebras")
    gens = [ep.theta.apply_vec(r) for _, r in frame.off_diagonal()]
    if not gens:
        return False
    return subring_generated(Subspace.from_vectors(ep.env, gens)).is_full


@dataclass
class EElements:
    E1: Element
    E3: Element
    pairs1: list
    pairs3: list


def build_E_elements(ep: EnvelopePair, frame: IdempotentFrame) -> EElements:
    """``E1 = sum theta(a) theta(b)`` over ``e_0 = sum a b`` (``a`` in ``A_01``), and
    ``E3`` likewise over ``e_2 = sum c d`` (``c`` in ``A_21``).

    Checked on component bases: ``E1 x = x E3 = (1 - E3*) x`` for ``x`` in
    ``theta(A_02)``, ``E1 x y = x y`` for ``y`` in ``theta(A_21)``, and
    ``E1 theta(d) = 0`` for ``d`` in ``A_12``.
    """
    if frame.n < 3 or not frame.all_full:
        raise NotFull("E elements need a full frame with at least three idempotents")
    env = ep.env
    F = env.field
    th = ep.theta.apply_vec
    pairs1 = idempotent_decomposition(frame, 0, 1)
    pairs3 = idempotent_decomposition(frame, 2, 1)
    E1 = F.zeros(env.dim)
    for a, b in pairs1:
        E1 = F.vadd(E1, env.mul_vec(th(a.coeffs), th(b.coeffs)))
    E3 = F.zeros(env.dim)
    for c, d in pairs3:
        E3 = F.vadd(E3, env.mul_vec(th(c.coeffs), th(d.coeffs)))
    E3s = ep.star(E3)
    for x0 in frame.peirce[0][2].rows:
        x = th(x0)
        one_minus = F.vsub(x, env.mul_vec(E3s, x))
        lhs = env.mul_vec(E1, x)
        mid = env.mul_vec(x, E3)
        if not (lhs == mid == one_minus):
            raise NotMultiplicative("E1 x13 = x13 E3 = (1 - E3*) x13 fails", certificate={"x": x0})
        for y0 in frame.peirce[2][1].rows:
            xy = env.mul_vec(x, th(y0))
            if env.mul_vec(E1, xy) != xy:
                raise NotMultiplicative("E1 x13 y32 = x13 y32 fails", certificate={"x": x0, "y": y0})
    for d0 in frame.peirce[1][2].rows:
        if any(env.mul_vec(E1, th(d0))):
            raise NotMultiplicative("E1 theta(d23) != 0", certificate={"d": d0})
    return EElements(Element(env, E1), Element(env, E3), pairs1, pairs3)


# -- standard decomposition ----------------------------------------------------


@dataclass
class StandardDecomposition:
    chi: LinearMap
    psi1: LinearMap
    psi2: LinearMap
    solution_space_dim: int
    words: int
    verdicts: dict = dc_field(default_factory=dict)


def solve_chi(ep: EnvelopePair, frame: IdempotentFrame, phi: LinearMap):
    """Row-reduce ``(theta word | phi word)`` over breadth-first words in the generators.

    Returns ``(chi, rank, words_seen)``; raises InconsistentSystem when a
    dependent word carries an incompatible phi-value.  Only independent words
    are extended, which keeps the search linear in ``dim env``.
    """
    env, B = ep.env, phi.codomain
    gens = [(ep.theta.apply_vec(r), phi.apply_vec(r), tag) for tag, r in frame.off_diagonal()]
    tracker = linalg.EchelonTracker(env.dim, env.field, B.dim)
    level = []
    seen = 0
    for g, pg, tag in gens:
        seen += 1
        res = tracker.insert(g, pg)
        if res == "inconsistent":
            raise InconsistentSystem("phi is not compatible on generators", certificate={"word": [tag]})
        if res == "new":
            level.append((g, pg))
    while level and tracker.rank < env.dim:
        nxt = []
        for w, pw in level:
            for g, pg, tag in gens:
                seen += 1
                v = env.mul_vec(w, g)
                pv = B.mul_vec(pw, pg)
                res = tracker.insert(v, pv)
                if res == "inconsistent":
                    raise InconsistentSystem("products of phi-images are incompatible",
                                             certificate={"word_length": "extended", "generator": list(tag)})
                if res == "new":
                    nxt.append((v, pv))
                if tracker.rank == env.dim:
                    break
            if tracker.rank == env.dim:
                break
        level = nxt
    if tracker.rank < env.dim:
        return None, tracker.rank, seen
    sol = tracker.solution()
    chi = LinearMap(Subspace.full(env), B, [sol[k] for k in range(env.dim)])
    return chi, tracker.rank, seen


def _finish(ep: EnvelopePair, phi: LinearMap, chi: LinearMap, rank: int, seen: int) -> StandardDecomposition:
    A, env, B = ep.algebra, ep.env, phi.codomain
    F = A.field
    d = A.dim
    v = check_assoc_hom(chi)
    if not v:
        raise NotMultiplicative("chi is not multiplicative", certificate=v.detail)
    full_A = Subspace.full(A)
    psi1 = LinearMap(full_A, B, chi.matrix[:d])
    psi2 = LinearMap(full_A, B, chi.matrix[d:])
    v1 = check_assoc_hom(psi1)
    v2 = check_assoc_hom(psi2, anti=True)
    if not v1 or not v2:
        raise NotMultiplicative("psi1 or psi2 fails its multiplicativity law")
    for a in range(d):
        for b in range(d):
            if any(B.mul_vec(psi1.matrix[a], psi2.matrix[b])) or any(B.mul_vec(psi2.matrix[b], psi1.matrix[a])):
                raise NotMultiplicative("images of psi1 and psi2 are not orthogonal", certificate={"pair": [a, b]})
    for r in phi.domain.rows:
        if chi.apply_vec(ep.theta.apply_vec(r)) != phi.apply_vec(r):
            raise NotMultiplicative("chi o theta != phi", certificate={"row": r})
        if F.vsub(psi1.apply_vec(r), psi2.apply_vec(r)) != phi.apply_vec(r):
            raise NotMultiplicative("phi != psi1 - psi2", certificate={"row": r})
    return StandardDecomposition(
        chi, psi1, psi2,
        solution_space_dim=B.dim * (env.dim - rank),
        words=seen,
        verdicts={"chi_hom": True, "psi1_hom": v1.passed, "psi2_antihom": v2.passed,
                  "orthogonal": True, "phi_equals_psi1_minus_psi2": True},
    )


def _preconditions(phi: LinearMap, frame: IdempotentFrame) -> tuple[EnvelopePair, dict]:
    A = frame.algebra
    if phi.domain.ambient != A:
        raise InputError("phi is not defined on the frame's algebra")
    if frame.n < 3:
        raise PreconditionFailed("need at least three idempotents")
    if not frame.all_full:
        raise PreconditionFailed("frame idempotents are not all full", certificate={"full": list(frame.full)})
    ep = build_envelope(A)
    if phi.domain != ep.derived:
        raise InputError("phi must be defined on [A, A]")
    L = delta_grading(frame)
    vh = check_lie_hom(phi)
    if not vh:
        raise NotSpecialization("phi is not a Lie homomorphism", certificate=vh)
    vs = check_specialization_pairwise(phi, L)
    if not vs:
        raise NotSpecialization("phi is not a specialization", certificate=vs)
    return ep, {"lie_hom": vh, "specialization_pairwise": vs}


def extend_to_standard(phi: LinearMap, frame: IdempotentFrame) -> StandardDecomposition:
    """Write ``phi = psi1 - psi2`` on ``[A, A]`` with orthogonal hom/anti-hom ``psi1``, ``psi2``.

    Requires a full frame of at least three idempotents summing to the
    identity of ``A``.
    """
    if frame.use_hull:
        raise PreconditionFailed("frame uses the unital hull; use check_standardizable_nonunital")
    ep, pre = _preconditions(phi, frame)
    chi, rank, seen = solve_chi(ep, frame, phi)
    if chi is None:
        raise NotGenerated("theta-images do not generate the envelope",
                           certificate={"rank": rank, "dim": ep.env.dim})
    out = _finish(ep, phi, chi, rank, seen)
    out.verdicts.update({k: v.passed for k, v in pre.items()})
    return out


def check_standardizable_nonunital(phi: LinearMap, frame: IdempotentFrame) -> StandardDecomposition:
    """Frame whose last idempotent may sit in the unital hull; target with ``Ann(<[B, B]>) == 0``."""
    if not frame.use_hull:
        return extend_to_standard(phi, frame)
    B = phi.codomain
    S = subring_generated(derived_lie_ring(B))
    ann = annihilator(B, within=S)
    if not ann.is_zero:
        raise AnnihilatorNonzero("Ann(<[B, B]>) is nonzero",
                                 certificate={"annihilator_rank": ann.rank, "basis": list(ann.rows)})
    ep, pre = _preconditions(phi, frame)
    chi, rank, seen = solve_chi(ep, frame, phi)
    if chi is None:
        raise NotGenerated("theta-images do not generate the envelope",
                           certificate={"rank": rank, "dim": ep.env.dim})
    out = _finish(ep, phi, chi, rank, seen)
    out.verdicts.update({k: v.passed for k, v in pre.items()})
    return out


def annihilator_obstruction(B: Algebra) -> Subspace:
    """``Ann(<[B, B]>)``: zero exactly when the non-unital extension applies."""
    return annihilator(B, within=subring_generated(derived_lie_ring(B)))
