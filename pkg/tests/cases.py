"""The three pass/fail cases for each extension verifier, shared by the unit and
acceptance tests."""

from __future__ import annotations

from peirce_lie.algebra import (
    LinearMap,
    Subspace,
    annihilator,
    direct_sum,
    matrix_unit,
    quotient_algebra,
    restrict_scalars_table,
    span,
    zero_algebra,
)
from peirce_lie.catalog import (
    diagonal_frame,
    envelope_algebra,
    envelope_diagonal_frame,
    full_matrix_algebra,
)
from peirce_lie.field import GF, QQ
from peirce_lie.lie import adjoint_map
from peirce_lie.peirce import delta_grading


def graded_central_cases():
    """``(name, f, source, target, expected)``."""
    out = []

    M3 = full_matrix_algebra(QQ, 3)
    L = delta_grading(diagonal_frame(M3))
    out.append(("identity on sl3(Q)", LinearMap.identity(L.total), L, L, True))

    # in characteristic 3 the identity matrix is trace zero; ad kills exactly the scalars
    M3f3 = full_matrix_algebra(GF(3), 3)
    S = delta_grading(diagonal_frame(M3f3))
    ad = adjoint_map(S.total)
    out.append(("sl3(F3) onto psl3(F3)", ad, S, S.image(ad), True))

    # projection of [M3 + M3^op, M3 + M3^op] onto the first summand kills root components
    E = envelope_algebra(M3)
    G = delta_grading(envelope_diagonal_frame(M3, E))
    proj = LinearMap.from_function(G.total, M3, lambda x: M3.element(x.coeffs[:M3.dim]))
    out.append(("projection of the envelope grading", proj, G, L, False))
    return out


def unit_square_free_algebra():
    """``span{E12, E22, E23, E13}`` in ``M3(Q)`` as a standalone algebra.

    It equals its own square, and ``E13`` spans its annihilator.
    """
    M = full_matrix_algebra(QQ, 3)
    S = span([matrix_unit(M, 0, 1), matrix_unit(M, 1, 1), matrix_unit(M, 1, 2), matrix_unit(M, 0, 2)])
    return restrict_scalars_table(M, S)


def annihilator_cases():
    """``(name, f, source, target, expected)``."""
    out = []

    M = full_matrix_algebra(GF(2), 3)
    out.append(("identity on M3(F2)", LinearMap.identity(Subspace.full(M)), M, M, True))

    A = unit_square_free_algebra()
    Q, proj = quotient_algebra(A, annihilator(A))
    out.append(("quotient of a self-square algebra by its annihilator", proj, A, Q, True))

    M2 = full_matrix_algebra(QQ, 2)
    P = direct_sum(M2, zero_algebra(QQ, 1))
    drop = LinearMap.from_function(Subspace.full(P), M2, lambda x: M2.element(x.coeffs[:4]))
    out.append(("M2(Q) + null line onto M2(Q)", drop, P, M2, False))
    return out


def grading_suite():
    """``(name, algebra, frame)`` for the four graded examples."""
    from peirce_lie.catalog import envelope_algebra

    M3 = full_matrix_algebra(QQ, 3)
    Env = envelope_algebra(M3)
    out = []
    for name, M in (("M3(Q)", M3), ("M3(F2)", full_matrix_algebra(GF(2), 3)),
                    ("M4(F3)", full_matrix_algebra(GF(3), 4))):
        out.append((name, M, diagonal_frame(M)))
    out.append(("M3(Q)+M3(Q)^op", Env, envelope_diagonal_frame(M3, Env)))
    return out


def random_lie_maps(count: int, seed: int):
    """``(L, f)`` with ``L`` a diagonal grading of a matrix algebra and ``f`` a Lie
    homomorphism out of ``L.total``: conjugations, optionally followed by minus
    transpose, the envelope embedding or the adjoint representation."""
    import random

    from peirce_lie.catalog import conjugation, invertible_matrices, negative_transpose
    from peirce_lie.standard import build_envelope

    rng = random.Random(seed)
    bases = []
    for F, n in ((QQ, 3), (GF(2), 3), (GF(3), 3), (GF(5), 3)):
        M = full_matrix_algebra(F, n)
        L = delta_grading(diagonal_frame(M))
        bases.append((M, L, build_envelope(M).theta, adjoint_map(L.total), negative_transpose(L.total)))
    out = []
    while len(out) < count:
        M, L, theta, ad, nt = rng.choice(bases)
        g, gi = invertible_matrices(M, rng, 1, include_permutations=False)[0]
        c = conjugation(L.total, g, gi)
        post = rng.choice(["none", "transpose", "theta", "ad"])
        if post == "transpose":
            f = nt.compose(c)
        elif post == "theta":
            f = theta.compose(c)
        elif post == "ad":
            f = ad.compose(c)
        else:
            f = c
        out.append((L, f))
    return out


# -- fixture index -----------------------------------------------------------
# relative path -> (kind, algebra fixture, codomain fixture or None)

FIXTURE_INDEX = {
    "matrix/m3_q.json": ("algebra", None, None),
    "matrix/m3_f2.json": ("algebra", None, None),
    "matrix/m4_f3.json": ("algebra", None, None),
    "matrix/m3_q_env.json": ("algebra", None, None),
    "hull/m4_q.json": ("algebra", None, None),
    "grassmann_z/b2_q.json": ("algebra", None, None),
    "grassmann_z/b2_f5.json": ("algebra", None, None),
    "grassmann_z/m2b2_q.json": ("algebra", None, None),
    "grassmann_z/m2b2_f5.json": ("algebra", None, None),
    "matrix/m3_q_frame.json": ("frame", "matrix/m3_q.json", None),
    "matrix/m3_f2_frame.json": ("frame", "matrix/m3_f2.json", None),
    "matrix/m4_f3_frame.json": ("frame", "matrix/m4_f3.json", None),
    "matrix/m3_q_env_frame.json": ("frame", "matrix/m3_q_env.json", None),
    "hull/m4_q_hull_frame.json": ("frame", "hull/m4_q.json", None),
    "grassmann_z/m2b2_q_frame.json": ("frame", "grassmann_z/m2b2_q.json", None),
    "grassmann_z/m2b2_f5_frame.json": ("frame", "grassmann_z/m2b2_f5.json", None),
    "matrix/m3_q_neg_transpose.json": ("map", "matrix/m3_q.json", None),
    "matrix/m3_q_transpose.json": ("map", "matrix/m3_q.json", None),
    "matrix/m3_q_ad_e12.json": ("map", "matrix/m3_q.json", None),
    "matrix/m3_q_ad_diag123.json": ("map", "matrix/m3_q.json", None),
    "matrix/m3_q_theta.json": ("map", "matrix/m3_q.json", "matrix/m3_q_env.json"),
    "matrix/m3_f2_conj.json": ("map", "matrix/m3_f2.json", None),
    "matrix/m4_f3_ad.json": ("map", "matrix/m4_f3.json", None),
    "hull/m4_q_identity.json": ("map", "hull/m4_q.json", None),
    "grassmann_z/b2_q_d.json": ("map", "grassmann_z/b2_q.json", None),
    "grassmann_z/b2_f5_d.json": ("map", "grassmann_z/b2_f5.json", None),
    "grassmann_z/m2b2_q_dbar.json": ("map", "grassmann_z/m2b2_q.json", None),
    "grassmann_z/m2b2_f5_dbar.json": ("map", "grassmann_z/m2b2_f5.json", None),
}


def round_trip(root, rel):
    """Load a fixture, re-emit it, load again; returns ``(text0, text1, text2)``.

    ``text0`` is the file, ``text1`` the first re-emission and ``text2`` the
    re-emission of ``text1``; stability means ``text1 == text2`` (and, for
    canonical documents, ``text0 == text1``).
    """
    import json

    from peirce_lie import io

    kind, alg, tgt = FIXTURE_INDEX[rel]
    text0 = (root / rel).read_text()
    doc = json.loads(text0)
    if kind == "algebra":
        emit = lambda d: io.algebra_to_json(io.algebra_from_json(d))  # noqa: E731
    else:
        A = io.algebra_from_json(io.read_json(root / alg))
        if kind == "frame":
            emit = lambda d: io.frame_to_json(io.frame_from_json(d, A))  # noqa: E731
        else:
            B = io.algebra_from_json(io.read_json(root / tgt)) if tgt else A
            emit = lambda d: io.map_to_json(io.map_from_json(d, A, B))  # noqa: E731
    text1 = io.dumps(emit(doc))
    text2 = io.dumps(emit(json.loads(text1)))
    return text0, text1, text2


# -- scripted CLI run ----------------------------------------------------------


def _f(rel):
    from pathlib import Path

    return str(Path(__file__).resolve().parent.parent / "fixtures" / rel)


def cli_script():
    """``(label, argv, expected exit status, check on the JSON output or None)``."""
    m3, m3f, m3f2, m4, env = "matrix/m3_q.json", "matrix/m3_q_frame.json", "matrix/m3_f2.json", \
        "matrix/m4_f3.json", "matrix/m3_q_env.json"
    b2, m2b2 = "grassmann_z/b2_q.json", "grassmann_z/m2b2_q.json"

    def comps(k, rank):
        return lambda r: len(r["result"]["components"]) == k and all(
            c["rank"] == rank for c in r["result"]["components"])

    def err(name):
        return lambda r: r["error"]["type"] == name

    return [
        ("algebra check", ["algebra", "check", "--algebra", _f(m3)], 0,
         lambda r: r["result"]["derived_rank"] == 8),
        ("algebra check float", ["algebra", "check", "--algebra", _f("malformed/algebra_float.json")], 2, None),
        ("algebra check nonassociative",
         ["algebra", "check", "--algebra", _f("malformed/algebra_nonassociative.json")], 2,
         err("NotAssociative")),
        ("algebra check not json", ["algebra", "check", "--algebra", _f("malformed/not_json.json")], 2, None),
        ("algebra check missing file", ["algebra", "check", "--algebra", _f("nope.json")], 2, None),
        ("grading M3(Q)", ["verify", "grading", "--algebra", _f(m3), "--frame", _f(m3f)], 0, comps(6, 1)),
        ("grading M4(F3)", ["verify", "grading", "--algebra", _f(m4), "--idempotents",
                            _f("matrix/m4_f3_frame.json")], 0, comps(12, 1)),
        ("grading envelope", ["verify", "grading", "--algebra", _f(env), "--frame",
                              _f("matrix/m3_q_env_frame.json")], 0, comps(6, 2)),
        ("grading hull", ["verify", "grading", "--algebra", _f("hull/m4_q.json"), "--frame",
                          _f("hull/m4_q_hull_frame.json"), "--hull"], 0, comps(12, 1)),
        ("grading nonorthogonal", ["verify", "grading", "--algebra", _f(m3), "--frame",
                                   _f("matrix/m3_q_frame_nonorthogonal.json")], 2, err("NotOrthogonal")),
        ("grading two idempotents", ["verify", "grading", "--algebra", _f(m2b2), "--frame",
                                     _f("grassmann_z/m2b2_q_frame.json")], 1, err("GradingFailure")),
        ("map transpose lie-hom", ["verify", "map", "--algebra", _f(m3), "--map",
                                   _f("matrix/m3_q_transpose.json"), "--law", "lie-hom"], 1,
         lambda r: r["result"]["witness"] is not None),
        ("map neg transpose lie-hom", ["verify", "map", "--algebra", _f(m3), "--map",
                                       _f("matrix/m3_q_neg_transpose.json"), "--law", "lie-hom"], 0, None),
        ("map theta spec-words", ["verify", "map", "--algebra", _f(m3), "--map", _f("matrix/m3_q_theta.json"),
                                  "--target", _f(env), "--frame", _f(m3f), "--law", "spec-words",
                                  "--max-len", "4"], 0, lambda r: r["result"]["detail"]["max_len"] == 4),
        ("map theta spec-pairwise", ["verify", "map", "--algebra", _f(m3), "--map", _f("matrix/m3_q_theta.json"),
                                     "--target", _f(env), "--frame", _f(m3f), "--law", "spec-pairwise"], 0, None),
        ("map specialization without frame", ["verify", "map", "--algebra", _f(m3), "--map", _f("matrix/m3_q_theta.json"),
                                    "--target", _f(env), "--law", "spec-pairwise"], 2, None),
        ("map ad lie-der", ["verify", "map", "--algebra", _f(m3), "--map", _f("matrix/m3_q_ad_e12.json"),
                            "--law", "lie-der"], 0, None),
        ("map d jordan", ["verify", "map", "--algebra", _f(b2), "--map", _f("grassmann_z/b2_q_d.json"),
                          "--law", "jordan"], 0, None),
        ("map d assoc-der", ["verify", "map", "--algebra", _f(b2), "--map", _f("grassmann_z/b2_q_d.json"),
                             "--law", "assoc-der"], 1, None),
        ("map dbar lie-der", ["verify", "map", "--algebra", _f(m2b2), "--map",
                              _f("grassmann_z/m2b2_q_dbar.json"), "--law", "lie-der"], 0, None),
        ("map wrong shape", ["verify", "map", "--algebra", _f(m3), "--map",
                             _f("malformed/map_wrong_shape.json"), "--law", "lie-hom"], 2, None),
        ("map missing matrix", ["verify", "map", "--algebra", _f(m3), "--map",
                                _f("malformed/map_missing_matrix.json"), "--law", "lie-hom"], 2, None),
        ("standard conjugation", ["extend", "standard", "--algebra", _f(m3f2), "--frame",
                                  _f("matrix/m3_f2_frame.json"), "--map", _f("matrix/m3_f2_conj.json")], 0,
         lambda r: r["result"]["psi2_zero"] and r["result"]["solution_space_dim"] == 0),
        ("standard negative transpose", ["extend", "standard", "--algebra", _f(m3), "--frame", _f(m3f),
                                         "--map", _f("matrix/m3_q_neg_transpose.json")], 0,
         lambda r: r["result"]["psi1_zero"]),
        ("standard transpose", ["extend", "standard", "--algebra", _f(m3), "--frame", _f(m3f),
                                "--map", _f("matrix/m3_q_transpose.json")], 1, err("NotSpecialization")),
        ("standard hull", ["extend", "standard", "--algebra", _f("hull/m4_q.json"), "--frame",
                           _f("hull/m4_q_hull_frame.json"), "--hull", "--map", _f("hull/m4_q_identity.json")], 0,
         lambda r: r["result"]["psi2_zero"]),
        ("derivation ad", ["extend", "derivation", "--algebra", _f(m3), "--frame", _f(m3f),
                           "--map", _f("matrix/m3_q_ad_e12.json")], 0,
         lambda r: r["result"]["alternatives_checked"] == 90),
        ("derivation M4(F3)", ["extend", "derivation", "--algebra", _f(m4), "--frame",
                               _f("matrix/m4_f3_frame.json"), "--map", _f("matrix/m4_f3_ad.json"),
                               "--alternatives", "2"], 0, None),
        ("derivation dbar", ["extend", "derivation", "--algebra", _f(m2b2), "--frame",
                             _f("grassmann_z/m2b2_q_frame.json"), "--map", _f("grassmann_z/m2b2_q_dbar.json")], 1,
         lambda r: r["result"]["obstruction"]["value_readable"] == "2*E12*ze1e2"),
        ("derivation malformed", ["extend", "derivation", "--algebra", _f(m3), "--frame", _f(m3f),
                                  "--map", _f("malformed/map_wrong_shape.json")], 2, None),
        ("grassmann-z", ["example", "grassmann-z", "--n", "2", "--field", "q"], 0, lambda r: r["dim"] == 8),
        ("grassmann-z p:5", ["example", "grassmann-z", "--n", "2", "--field", "p:5"], 0,
         lambda r: r["field"] == {"kind": "prime", "p": 5}),
        ("grassmann-z n=1", ["example", "grassmann-z", "--n", "1"], 2, None),
        ("grassmann-z p:2", ["example", "grassmann-z", "--field", "p:2"], 2, err("CharTwo")),
        ("witness", ["example", "nonstandard-witness"], 0,
         lambda r: r["result"]["obstruction"]["value_readable"] == "2*E12*ze1e2"),
        ("witness p:5", ["example", "nonstandard-witness", "--field", "p:5"], 0, None),
        ("witness p:2", ["example", "nonstandard-witness", "--field", "p:2"], 2, None),
        ("unknown command", ["frobnicate"], 2, None),
    ]


def run_cli(argv, tmp_path):
    """Run the CLI in-process with the report written to a file; returns ``(status, doc)``."""
    import json

    from peirce_lie.cli import main

    out = tmp_path / "report.json"
    if out.exists():
        out.unlink()
    status = main(argv + ["--json-out", str(out)]) if argv[0] != "frobnicate" else main(argv)
    doc = json.loads(out.read_text()) if out.exists() else None
    return status, doc
