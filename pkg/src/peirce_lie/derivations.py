"""Even-product decompositions and extension of Lie derivations of ``[A, A]``.

Every element of ``A`` is written as a sum of products of elements of
``[A, A]`` with an even number of factors, such that the reversed products
sum to zero.  Applying the Leibniz rule along such a decomposition turns a
Lie derivation of ``[A, A]`` into an associative derivation of ``A``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import Algebra, Element, LinearMap, Subspace, annihilator, derived_lie_ring
from .errors import (
    InputError,
    NotGenerated,
    PreconditionFailed,
    WellDefinednessFailure,
)
from .lie import check_assoc_derivation, check_lie_derivation
from .peirce import IdempotentFrame


@dataclass
class EvenDecomposition:
    """``target = sum of prod(term)``; each term has even length and the reversed
    products sum to zero."""

    target: Element
    terms: list = dc_field(default_factory=list)  # list of tuples of coordinate vectors

    def factors(self):
        A = self.target.parent
        return [[Element(A, v) for v in t] for t in self.terms]

    def product_sum(self, reverse: bool = False) -> tuple:
        A = self.target.parent
        F = A.field
        acc = F.zeros(A.dim)
        for t in self.terms:
            seq = t[::-1] if reverse else t
            p = seq[0]
            for v in seq[1:]:
                p = A.mul_vec(p, v)
            acc = F.vadd(acc, p)
        return acc

    def violations(self, derived: Subspace | None = None) -> list[str]:
        A = self.target.parent
        out = []
        if any(len(t) % 2 for t in self.terms):
            out.append("odd number of factors")
        if self.product_sum() != self.target.coeffs:
            out.append("products do not sum to the target")
        if any(self.product_sum(reverse=True)):
            out.append("reversed products do not sum to zero")
        D = derived if derived is not None else derived_lie_ring(A)
        if any(not D.contains_vec(v) for t in self.terms for v in t):
            out.append("a factor lies outside [A, A]")
        return out


def leibniz_value(terms, d: LinearMap, A: Algebra) -> tuple:
    """``sum over terms and positions of a_1 ... d(a_p) ... a_n``."""
    F = A.field
    acc = F.zeros(A.dim)
    for t in terms:
        n = len(t)
        # prefix and suffix products
        pre = [None] * (n + 1)
        suf = [None] * (n + 1)
        for p in range(n):
            pre[p + 1] = t[p] if pre[p] is None else A.mul_vec(pre[p], t[p])
        for p in range(n - 1, -1, -1):
            suf[p] = t[p] if suf[p + 1] is None else A.mul_vec(t[p], suf[p + 1])
        for p in range(n):
            v = d.apply_vec(t[p])
            if pre[p] is not None:
                v = A.mul_vec(pre[p], v)
            if suf[p + 1] is not None:
                v = A.mul_vec(v, suf[p + 1])
            acc = F.vadd(acc, v)
    return acc


class WordSystem:
    """Breadth-first words in the off-diagonal Peirce basis, reduced to a basis of ``A``.

    ``kept`` holds independent words (as tuples of generator indices) with
    their vectors; ``relations`` holds dependent words with their expression
    in kept words.
    """

    def __init__(self, frame: IdempotentFrame, order=None, max_relations: int = 64):
        A = frame.algebra
        F = A.field
        gens = frame.off_diagonal()
        if order is not None:
            gens = [gens[t] for t in order]
        self.frame = frame
        self.tags = [tag for tag, _ in gens]
        self.gens = [r for _, r in gens]
        self.kept: list[tuple] = []
        self.vecs: list[tuple] = []
        self.relations: list[tuple[tuple, tuple]] = []
        tracker = linalg.EchelonTracker(A.dim, F)
        level = []
        for g in range(len(self.gens)):
            self._offer((g,), self.gens[g], tracker, level, max_relations)
        while level and tracker.rank < A.dim:
            nxt = []
            for w, v in level:
                for g in range(len(self.gens)):
                    self._offer(w + (g,), A.mul_vec(v, self.gens[g]), tracker, nxt, max_relations)
                    if tracker.rank == A.dim:
                        break
                if tracker.rank == A.dim:
                    break
            level = nxt
        self.rank = tracker.rank
        self.span = Subspace.from_vectors(A, self.vecs)

    def _offer(self, word, v, tracker, level, max_relations):
        if not any(v):
            return
        if tracker.insert(v, tag=word) == "new":
            self.kept.append(word)
            self.vecs.append(v)
            level.append((word, v))
        elif len(self.relations) < max_relations:
            self.relations.append((word, v))

    @property
    def generates(self) -> bool:
        return self.rank == self.frame.algebra.dim

    def express(self, v) -> tuple | None:
        return linalg.combination(self.vecs, v, self.frame.algebra.field)


class Decomposer:
    """Even decompositions over a frame with at least three idempotents.

    The canonical decomposition of each vector is deterministic (minimal
    middle index, last factor split); :meth:`alternative` draws a random but
    equally valid one for cross-checks.
    """

    def __init__(self, frame: IdempotentFrame):
        if frame.n < 3:
            raise InputError("even decompositions need at least three idempotents")
        self.frame = frame
        self.A = frame.algebra
        self.words = WordSystem(frame)
        if not self.words.generates:
            raise NotGenerated("off-diagonal Peirce components do not generate A",
                               certificate={"rank": self.words.rank, "dim": self.A.dim})
        self._splits: dict = {}
        self._cache: dict = {}
        self._alt_words: list[WordSystem] = []

    # splitting x in A_ij as sum b c with b in A_ik, c in A_kj
    def split(self, x: tuple, i: int, j: int, k: int) -> list[tuple[tuple, tuple]]:
        key = (x, i, j, k)
        if key in self._splits:
            return self._splits[key]
        fr, A, F = self.frame, self.A, self.A.field
        U, V = fr.peirce[i][k], fr.peirce[k][j]
        cols = [A.mul_vec(u, v) for u in U.rows for v in V.rows]
        t = linalg.combination(cols, x, F) if cols else None
        if t is None:
            raise NotGenerated(f"element of A_{i}{j} is not in A_{i}{k} A_{k}{j}")
        out = []
        m = V.rank
        for s, u in enumerate(U.rows):
            c = t[s * m:(s + 1) * m]
            if any(c):
                out.append((u, F.vcombine(c, V.rows, A.dim)))
        self._splits[key] = out
        return out

    def _middle(self, i, j, rng):
        choices = [k for k in range(self.frame.n) if k not in (i, j)]
        return choices[0] if rng is None else rng.choice(choices)

    def _component_of(self, v):
        """``(i, j)`` when ``v`` lies in one off-diagonal component, else None."""
        fr = self.frame
        for i in range(fr.n):
            for j in range(fr.n):
                if i != j and fr.peirce[i][j].contains_vec(v):
                    return i, j
        return None

    def _expand_word(self, coeff, word, ws: WordSystem, rng):
        """Even terms for ``coeff * g_1 ... g_m``."""
        A, F = self.A, self.A.field
        factors = [ws.gens[g] for g in word]
        tags = [ws.tags[g] for g in word]
        m = len(word)
        if rng is None:
            positions = [m - 1] if m % 2 else sorted({0, m - 1}) if m > 1 else [0]
        else:
            k = 1 if m % 2 else 2
            positions = sorted(rng.sample(range(m), k)) if m >= k else list(range(m))
        # each split position expands into its pairs
        seqs = [[]]
        for p in range(m):
            if p in positions:
                i, j = tags[p]
                k = self._middle(i, j, rng)
                pairs = self.split(factors[p], i, j, k)
                seqs = [s + [b, c] for s in seqs for b, c in pairs]
            else:
                seqs = [s + [factors[p]] for s in seqs]
        out = []
        for s in seqs:
            s = list(s)
            s[0] = F.vscale(coeff, s[0])
            out.append(tuple(s))
        return out

    def _decompose(self, v, ws: WordSystem, rng, perturb: bool) -> list:
        A, F = self.A, self.A.field
        if not any(v):
            return []
        comp = self._component_of(v)
        if comp is not None and not perturb:
            i, j = comp
            k = self._middle(i, j, rng)
            return [(b, c) for b, c in self.split(v, i, j, k)]
        t = ws.express(v)
        if t is None:
            raise NotGenerated("element lies outside the subring generated by off-diagonal components")
        coeff_words = [(c, w) for c, w in zip(t, ws.kept) if c]
        if perturb and ws.relations:
            # add r * (dependent word - its expression in kept words), which is zero in A
            word, vec = rng.choice(ws.relations)
            r = F(rng.randint(1, 5))
            coeff_words.append((r, word))
            rel = ws.express(vec)
            coeff_words.extend((F.neg(F.mul(r, c)), w) for c, w in zip(rel, ws.kept) if c)
        terms = []
        for c, w in coeff_words:
            terms.extend(self._expand_word(c, w, ws, rng))
        return terms

    def decompose(self, v) -> EvenDecomposition:
        v = tuple(v)
        if v not in self._cache:
            self._cache[v] = EvenDecomposition(Element(self.A, v), self._decompose(v, self.words, None, False))
        return self._cache[v]

    def alternative(self, v, rng: random.Random) -> EvenDecomposition:
        """A randomized decomposition: shuffled generator order, random middle
        indices and split positions, plus a random multiple of a word relation."""
        if len(self._alt_words) < 4:
            order = list(range(len(self.words.gens)))
            rng.shuffle(order)
            ws = WordSystem(self.frame, order)
            if ws.generates:
                self._alt_words.append(ws)
        ws = rng.choice(self._alt_words) if self._alt_words else self.words
        return EvenDecomposition(Element(self.A, tuple(v)), self._decompose(tuple(v), ws, rng, True))


def even_decompose(frame: IdempotentFrame, a: Element, decomposer: Decomposer | None = None) -> EvenDecomposition:
    """Even decomposition of ``a``, verified before it is returned."""
    dec = decomposer or Decomposer(frame)
    out = dec.decompose(a.coeffs)
    bad = out.violations()
    if bad:
        raise WellDefinednessFailure(f"decomposition invalid: {bad[0]}")
    return out


def _check_derivation_input(frame: IdempotentFrame, d: LinearMap) -> None:
    A = frame.algebra
    if d.codomain != A or d.domain.ambient != A:
        raise InputError("d must map [A, A] into A")
    if d.domain != derived_lie_ring(A):
        raise InputError("d must be defined on [A, A]")
    v = check_lie_derivation(d)
    if not v:
        raise PreconditionFailed("d is not a Lie derivation", certificate=v)


def extend_derivation(frame: IdempotentFrame, d: LinearMap, alternatives: int = 10, seed: int = 0,
                      decomposer: Decomposer | None = None, report: dict | None = None) -> LinearMap:
    """Extend a Lie derivation of ``[A, A]`` to a derivation of ``A`` by the Leibniz rule
    along even decompositions.

    Each basis element's value is cross-checked against ``alternatives``
    random decompositions; the result is verified to be a derivation that
    restricts to ``d``.
    """
    A = frame.algebra
    F = A.field
    _check_derivation_input(frame, d)
    if frame.n < 3:
        raise PreconditionFailed("need at least three idempotents")
    if not frame.all_full:
        raise PreconditionFailed("frame idempotents are not all full", certificate={"full": list(frame.full)})
    if frame.use_hull and not annihilator(A).is_zero:
        raise PreconditionFailed("Ann(A) must vanish when the frame uses the unital hull")
    dec = decomposer or Decomposer(frame)
    rng = random.Random(seed)
    derived = d.domain
    rows = []
    for k in range(A.dim):
        e = F.unit_vector(A.dim, k)
        ed = dec.decompose(e)
        bad = ed.violations(derived)
        if bad:
            raise WellDefinednessFailure(f"decomposition of basis element {k} invalid: {bad[0]}")
        val = leibniz_value(ed.terms, d, A)
        for _ in range(alternatives):
            alt = dec.alternative(e, rng)
            bad = alt.violations(derived)
            if bad:
                raise WellDefinednessFailure(f"alternative decomposition invalid: {bad[0]}")
            if leibniz_value(alt.terms, d, A) != val:
                raise WellDefinednessFailure("two decompositions give different values",
                                             certificate={"basis_index": k})
        rows.append(val)
    dt = LinearMap(Subspace.full(A), A, rows)
    v = check_assoc_derivation(dt)
    if not v:
        raise WellDefinednessFailure("extension is not a derivation", certificate=v)
    for r in derived.rows:
        if dt.apply_vec(r) != d.apply_vec(r):
            raise WellDefinednessFailure("extension does not restrict to d", certificate={"row": r})
    if report is not None:
        report.update({"alternatives_checked": alternatives * A.dim, "leibniz": True, "restricts": True})
    return dt


# -- two idempotents -----------------------------------------------------------


@dataclass
class TwoIdempotentResult:
    dtilde: LinearMap | None
    obstruction: dict | None
    failures: list

    @property
    def extended(self) -> bool:
        return self.dtilde is not None


def find_leibniz_obstruction(frame: IdempotentFrame, d: LinearMap) -> dict | None:
    """First ``(X, Y)`` with ``X, Y, XY`` in ``[A, A]`` and ``d(XY) != d(X)Y + X d(Y)``.

    ``X`` runs over the diagonal part of ``[A, A]``, ``Y`` over the ``A_01``
    and then ``A_10`` bases; if that finds nothing, all basis pairs of
    ``[A, A]`` are searched.
    """
    A = frame.algebra
    F = A.field
    D = d.domain
    diag = Subspace.zero(A)
    for i in range(frame.n):
        diag = diag + frame.peirce[i][i]
    xs = D.intersection(diag).rows
    ys = [r for i in range(frame.n) for j in range(frame.n) if i != j for r in frame.peirce[i][j].rows]

    def probe(X, Y):
        XY = A.mul_vec(X, Y)
        if not D.contains_vec(XY):
            return None
        lhs = d.apply_vec(XY)
        rhs = F.vadd(A.mul_vec(d.apply_vec(X), Y), A.mul_vec(X, d.apply_vec(Y)))
        if lhs == rhs:
            return None
        return {"X": X, "Y": Y, "XY": XY, "d_XY": lhs, "leibniz": rhs, "value": F.vsub(rhs, lhs)}

    for X in xs:
        for Y in ys:
            hit = probe(X, Y)
            if hit:
                return hit
    for X in D.rows:
        for Y in D.rows:
            hit = probe(X, Y)
            if hit:
                return hit
    return None


def attempt_extension_two_idempotents(frame: IdempotentFrame, d: LinearMap) -> TwoIdempotentResult:
    """Try to extend ``d`` when only two idempotents are available.

    ``d`` is pushed along breadth-first words in the off-diagonal components
    by the Leibniz rule.  If the result is inconsistent, fails to be a
    derivation or does not restrict to ``d``, an obstruction is returned.
    """
    if frame.n != 2:
        raise InputError("this pathway needs exactly two idempotents")
    _check_derivation_input(frame, d)
    A = frame.algebra
    F = A.field
    failures = []
    ws = WordSystem(frame, max_relations=10 ** 6)

    def word_value(word):
        t = tuple(ws.gens[g] for g in word)
        return leibniz_value([t], d, A)

    dtilde = None
    if not ws.generates:
        failures.append({"check": "generation", "rank": ws.rank})
    else:
        vals = [word_value(w) for w in ws.kept]
        for word, vec in ws.relations:
            t = ws.express(vec)
            if word_value(word) != F.vcombine(t, vals, A.dim):
                failures.append({"check": "well_defined", "word": [list(ws.tags[g]) for g in word]})
                break
        inv_rows = []
        for k in range(A.dim):
            t = ws.express(F.unit_vector(A.dim, k))
            inv_rows.append(F.vcombine(t, vals, A.dim))
        cand = LinearMap(Subspace.full(A), A, inv_rows)
        v = check_assoc_derivation(cand)
        if not v:
            failures.append({"check": "leibniz", "pair": v.detail["pair"]})
        for r in d.domain.rows:
            if cand.apply_vec(r) != d.apply_vec(r):
                failures.append({"check": "restriction", "row": r})
                break
        if not failures:
            dtilde = cand
    if dtilde is not None:
        return TwoIdempotentResult(dtilde, None, [])
    obs = find_leibniz_obstruction(frame, d)
    if obs is None:
        obs = {"kind": "inconsistent", "failures": failures}
    else:
        obs["kind"] = "leibniz"
    return TwoIdempotentResult(None, obs, failures)
