"""JSON interchange for fields, algebras, subspaces, maps and frames.

Documents are plain JSON.  Rational scalars are ``"num/den"`` strings and
prime-field scalars are integers; floats are always rejected.  Emission is
canonical (sorted table, echelon domains), so a document survives a
load/dump round trip byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .algebra import Algebra, Element, LinearMap, Subspace, derived_lie_ring
from .errors import InputError
from .field import Field
from .peirce import IdempotentFrame, build_frame


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def digest(doc: Any) -> str:
    return hashlib.sha256(json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def _need(doc, key, kind, where):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{where}: missing key {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise InputError(f"{where}: {key!r} has the wrong type")
    return val


def encode_vec(F: Field, v) -> list:
    return [F.encode(c) for c in v]


def decode_vec(F: Field, obj, n: int | None = None, where: str = "vector") -> tuple:
    if not isinstance(obj, list):
        raise InputError(f"{where}: expected a list of scalars")
    v = tuple(F.decode(c) for c in obj)
    if n is not None and len(v) != n:
        raise InputError(f"{where}: expected {n} coordinates, got {len(v)}")
    return v


# -- algebras ------------------------------------------------------------------


def algebra_to_json(A: Algebra) -> dict:
    F = A.field
    return {
        "field": F.to_json(),
        "dim": A.dim,
        "basis": list(A.basis_names),
        "table": [[i, j, k, F.encode(c)] for i, j, k, c in A.entries],
        "unit": None if A.unit is None else encode_vec(F, A.unit),
    }


def algebra_from_json(doc: Any) -> Algebra:
    where = "algebra"
    F = Field.from_json(_need(doc, "field", None, where))
    dim = _need(doc, "dim", int, where)
    if isinstance(dim, bool) or dim < 1:
        raise InputError("algebra: dim must be a positive integer")
    basis = doc.get("basis")
    if basis is not None and (not isinstance(basis, list) or not all(isinstance(b, str) for b in basis)):
        raise InputError("algebra: basis must be a list of strings")
    table = []
    for t, entry in enumerate(_need(doc, "table", list, where)):
        if not isinstance(entry, list) or len(entry) != 4:
            raise InputError(f"algebra: table entry {t} is not [i, j, k, c]")
        i, j, k, c = entry
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise InputError(f"algebra: table entry {t} has non-integer indices")
        table.append((i, j, k, F.decode(c)))
    unit = doc.get("unit")
    if unit is not None:
        unit = decode_vec(F, unit, dim, "algebra unit")
    return Algebra(F, dim, table, basis, unit=unit)


# -- subspaces and maps --------------------------------------------------------


def subspace_to_json(U: Subspace) -> list:
    F = U.ambient.field
    return [encode_vec(F, r) for r in U.rows]


def subspace_from_json(obj: Any, A: Algebra, where: str = "subspace") -> Subspace:
    if obj == "derived":
        return derived_lie_ring(A)
    if obj == "full":
        return Subspace.full(A)
    if not isinstance(obj, list):
        raise InputError(f"{where}: expected a list of rows, 'derived' or 'full'")
    return Subspace.from_vectors(A, [decode_vec(A.field, r, A.dim, where) for r in obj])


def map_to_json(f: LinearMap) -> dict:
    F = f.codomain.field
    return {"domain": subspace_to_json(f.domain), "matrix": [encode_vec(F, r) for r in f.matrix]}


def map_from_json(doc: Any, A: Algebra, B: Algebra | None = None) -> LinearMap:
    """Map document with ``domain`` rows in ``A`` and ``matrix`` rows in ``B`` (default ``A``).

    Domain rows need not be in echelon form; the matrix row at position r is
    the image of domain row r.
    """
    B = A if B is None else B
    where = "map"
    dom = _need(doc, "domain", None, where)
    mat = _need(doc, "matrix", list, where)
    if dom in ("derived", "full"):
        D = subspace_from_json(dom, A, where)
        sources = D.rows
    else:
        if not isinstance(dom, list):
            raise InputError("map: domain must be a list of rows, 'derived' or 'full'")
        sources = [decode_vec(A.field, r, A.dim, "map domain") for r in dom]
    images = [decode_vec(B.field, r, B.dim, "map matrix") for r in mat]
    if len(images) != len(sources):
        raise InputError(f"map: {len(sources)} domain rows but {len(images)} matrix rows")
    if A.field != B.field:
        raise InputError("map: algebras over different fields")
    return LinearMap.from_images(A, B, sources, images)


# -- frames ----------------------------------------------------------------------


def frame_to_json(frame: IdempotentFrame) -> dict:
    F = frame.algebra.field
    return {"idempotents": [encode_vec(F, e.coeffs) for e in frame.idempotents], "hull": frame.use_hull}


def frame_from_json(doc: Any, A: Algebra, hull: bool | None = None) -> IdempotentFrame:
    if isinstance(doc, list):
        doc = {"idempotents": doc}
    es = _need(doc, "idempotents", list, "frame")
    use_hull = bool(doc.get("hull", False)) if hull is None else hull or bool(doc.get("hull", False))
    n = A.dim + 1 if use_hull else A.dim
    vecs = []
    for t, e in enumerate(es):
        if not isinstance(e, list):
            raise InputError(f"frame: idempotent {t} is not a list")
        if use_hull and len(e) == A.dim:
            e = e + [0]
        vecs.append(decode_vec(A.field, e, n, f"frame idempotent {t}"))
    return build_frame(A, vecs, use_hull=use_hull)


def element_to_json(x: Element) -> list:
    return encode_vec(x.parent.field, x.coeffs)


def write_json(path: str | Path, doc: Any) -> None:
    Path(path).write_text(dumps(doc))
