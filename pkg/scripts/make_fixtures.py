#!/usr/bin/env python3
"""Regenerate the JSON fixtures under fixtures/.

Usage: make_fixtures.py [--check]

With --check nothing is written; the exit status is 1 if any file on disk
differs from what would be generated.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from peirce_lie import io
from peirce_lie.algebra import LinearMap, derived_lie_ring, matrix_algebra, matrix_unit
from peirce_lie.catalog import (
    conjugation,
    diagonal_frame,
    envelope_algebra,
    envelope_diagonal_frame,
    full_matrix_algebra,
    inner_derivation,
    negative_transpose,
    permutation_matrix,
    scalar_matrix,
    transpose,
)
from peirce_lie.factory import grassmann_z_algebra, jordan_derivation_d, lift_dbar
from peirce_lie.field import GF, QQ
from peirce_lie.peirce import build_frame
from peirce_lie.standard import build_envelope

ROOT = Path(__file__).resolve().parent.parent / "fixtures"


def build() -> dict[str, object]:
    docs: dict[str, object] = {}

    # matrix algebras with diagonal frames
    for name, F, n in (("m3_q", QQ, 3), ("m3_f2", GF(2), 3), ("m4_f3", GF(3), 4)):
        M = full_matrix_algebra(F, n)
        docs[f"matrix/{name}.json"] = io.algebra_to_json(M)
        docs[f"matrix/{name}_frame.json"] = io.frame_to_json(diagonal_frame(M))

    M3 = full_matrix_algebra(QQ, 3)
    E = envelope_algebra(M3)
    docs["matrix/m3_q_env.json"] = io.algebra_to_json(E)
    docs["matrix/m3_q_env_frame.json"] = io.frame_to_json(envelope_diagonal_frame(M3, E))
    e11 = io.encode_vec(QQ, matrix_unit(M3, 0, 0).coeffs)
    e22 = io.encode_vec(QQ, matrix_unit(M3, 1, 1).coeffs)
    docs["matrix/m3_q_frame_nonorthogonal.json"] = {"idempotents": [e11, e11, e22], "hull": False}

    D3 = derived_lie_ring(M3)
    docs["matrix/m3_q_neg_transpose.json"] = io.map_to_json(negative_transpose(D3))
    docs["matrix/m3_q_theta.json"] = io.map_to_json(build_envelope(M3).theta)
    docs["matrix/m3_q_transpose.json"] = io.map_to_json(LinearMap.from_function(D3, M3, transpose))
    docs["matrix/m3_q_ad_e12.json"] = io.map_to_json(inner_derivation(D3, matrix_unit(M3, 0, 1)))
    docs["matrix/m3_q_ad_diag123.json"] = io.map_to_json(inner_derivation(D3, scalar_matrix(M3, [1, 2, 3])))

    M3f2 = full_matrix_algebra(GF(2), 3)
    g = permutation_matrix(M3f2, (1, 2, 0))
    gi = permutation_matrix(M3f2, (2, 0, 1))
    docs["matrix/m3_f2_conj.json"] = io.map_to_json(conjugation(derived_lie_ring(M3f2), g, gi))

    M4 = full_matrix_algebra(GF(3), 4)
    docs["matrix/m4_f3_ad.json"] = io.map_to_json(
        inner_derivation(derived_lie_ring(M4), scalar_matrix(M4, [0, 1, 2, 0]) + matrix_unit(M4, 0, 3)))

    # M_4(Q) with its last idempotent taken in the unital hull
    M4q = full_matrix_algebra(QQ, 4)
    docs["hull/m4_q.json"] = io.algebra_to_json(M4q)
    e4 = [0] * 17
    e4[16] = 1
    for i in range(3):
        e4[i * 4 + i] = -1
    es = [list(matrix_unit(M4q, i, i).coeffs) + [0] for i in range(3)] + [e4]
    docs["hull/m4_q_hull_frame.json"] = io.frame_to_json(build_frame(M4q, es, use_hull=True))
    docs["hull/m4_q_identity.json"] = io.map_to_json(LinearMap.identity(derived_lie_ring(M4q)))

    # Grassmann algebra with z and the lifted derivation on [M_2(B), M_2(B)]
    for name, F in (("q", QQ), ("f5", GF(5))):
        B = grassmann_z_algebra(2, F)
        docs[f"grassmann_z/b2_{name}.json"] = io.algebra_to_json(B.algebra)
        d = jordan_derivation_d(B)
        docs[f"grassmann_z/b2_{name}_d.json"] = io.map_to_json(d)
        M = matrix_algebra(B.algebra, 2)
        docs[f"grassmann_z/m2b2_{name}.json"] = io.algebra_to_json(M)
        docs[f"grassmann_z/m2b2_{name}_frame.json"] = io.frame_to_json(diagonal_frame(M))
        docs[f"grassmann_z/m2b2_{name}_dbar.json"] = io.map_to_json(lift_dbar(B, d, M))

    # malformed inputs
    docs["malformed/map_wrong_shape.json"] = {"domain": "derived", "matrix": [[1, 2, 3]]}
    docs["malformed/map_missing_matrix.json"] = {"domain": "derived"}
    docs["malformed/algebra_float.json"] = {"field": {"kind": "rational"}, "dim": 1,
                                            "basis": ["1"], "table": [[0, 0, 0, 1.0]], "unit": None}
    docs["malformed/algebra_nonassociative.json"] = {
        "field": {"kind": "rational"}, "dim": 2, "basis": ["a", "b"],
        "table": [[0, 0, 1, "1/1"], [1, 0, 0, "1/1"]], "unit": None}
    return docs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    stale = []
    for rel, doc in build().items():
        path = ROOT / rel
        text = io.dumps(doc)
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(rel)
            continue
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    (ROOT / "malformed").mkdir(parents=True, exist_ok=True)
    broken = ROOT / "malformed" / "not_json.json"
    if args.check:
        if not broken.exists():
            stale.append("malformed/not_json.json")
    else:
        broken.write_text('{"domain": [\n')
    for rel in stale:
        print(f"stale: {rel}")
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
