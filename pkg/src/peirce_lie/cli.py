"""Command-line front end.

Exit status: 0 when every check passes, 1 on a mathematical failure or
obstruction, 2 on malformed or invalid input.  Reports are JSON; the
``timing`` field is kept outside the deterministic body and its digest.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from . import __version__, io
from .algebra import Element, Subspace, annihilator, derived_lie_ring
from .errors import InputError, PeirceLieError
from .field import parse_field


def _threads() -> int:
    raw = os.environ.get("PEIRCE_LIE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"PEIRCE_LIE_THREADS must be an integer, got {raw!r}") from None


def run_checks(checks: dict[str, Callable[[], object]]) -> dict:
    """Evaluate independent checks, concurrently when allowed; results keep key order."""
    n = _threads()
    if n == 1 or len(checks) < 2:
        return {k: fn() for k, fn in checks.items()}
    with ThreadPoolExecutor(max_workers=n) as pool:
        futures = {k: pool.submit(fn) for k, fn in checks.items()}
        return {k: fut.result() for k, fut in futures.items()}


class Run:
    """Collects the deterministic report body for one command."""

    def __init__(self, argv: list[str]):
        self.body = {"command": list(argv), "inputs": {}, "verdicts": {}, "result": None, "status": 0}
        self.t0 = time.perf_counter()

    def load(self, name: str, path: str):
        doc = io.read_json(path)
        self.body["inputs"][name] = io.digest(doc)
        return doc

    def verdict(self, name: str, passed: bool, witness=None):
        self.body["verdicts"][name] = {"pass": bool(passed), "witness": witness}
        if not passed:
            self.body["status"] = max(self.body["status"], 1)

    def finish(self, status: int | None = None) -> dict:
        if status is not None:
            self.body["status"] = status
        report = dict(self.body)
        report["digest"] = io.digest(self.body)
        report["timing"] = {"seconds": round(time.perf_counter() - self.t0, 6)}
        return report


def _enc(F, v):
    return io.encode_vec(F, v)


def _witness(F, verdict):
    if verdict.witness is None:
        return None
    return [_enc(F, w.coeffs) for w in verdict.witness]


# -- commands ------------------------------------------------------------------


def cmd_algebra_check(args, run: Run):
    A = io.algebra_from_json(run.load("algebra", args.algebra))
    checks = run_checks({
        "derived_rank": lambda: derived_lie_ring(A).rank,
        "annihilator_rank": lambda: annihilator(A).rank,
    })
    doc = io.algebra_to_json(A)
    again = io.algebra_to_json(io.algebra_from_json(doc))
    run.verdict("associative", True)
    run.verdict("round_trip", io.dumps(doc) == io.dumps(again))
    run.body["result"] = {"dim": A.dim, "field": A.field.to_json(), "unital": A.is_unital, **checks}


def cmd_verify_grading(args, run: Run):
    from .peirce import delta_grading, is_perfect

    A = io.algebra_from_json(run.load("algebra", args.algebra))
    frame = io.frame_from_json(run.load("frame", args.frame), A, hull=args.hull)
    L = delta_grading(frame)
    perfect = is_perfect(L)
    run.verdict("graded", True)
    run.verdict("total_equals_derived", L.total == derived_lie_ring(A))
    run.verdict("perfect", perfect)
    run.body["result"] = {
        "components": [{"root": list(L.roots.pair(a)), "rank": L.L_alpha[a].rank} for a in L.roots],
        "zero_rank": L.L_zero.rank,
        "total_rank": L.total.rank,
        "full": list(frame.full),
        "perfect": perfect,
        "violations": L.violations(),
    }


LAWS = ("lie-hom", "lie-der", "jordan", "assoc-hom", "assoc-antihom", "assoc-der", "spec-pairwise", "spec-words")


def cmd_verify_map(args, run: Run):
    from . import lie
    from .peirce import delta_grading

    A = io.algebra_from_json(run.load("algebra", args.algebra))
    B = io.algebra_from_json(run.load("target", args.target)) if args.target else A
    f = io.map_from_json(run.load("map", args.map), A, B)
    law = args.law
    if law == "lie-hom":
        v = lie.check_lie_hom(f)
    elif law == "lie-der":
        v = lie.check_lie_derivation(f)
    elif law == "jordan":
        v = lie.check_jordan_derivation(f)
    elif law == "assoc-hom":
        v = lie.check_assoc_hom(f)
    elif law == "assoc-antihom":
        v = lie.check_assoc_hom(f, anti=True)
    elif law == "assoc-der":
        v = lie.check_assoc_derivation(f)
    else:
        if not args.frame:
            raise InputError(f"law {law} needs --frame")
        L = delta_grading(io.frame_from_json(run.load("frame", args.frame), A, hull=args.hull))
        if law == "spec-pairwise":
            v = lie.check_specialization_pairwise(f, L, B)
        else:
            v = lie.check_specialization_words(f, L, B, max_len=args.max_len)
    run.verdict(v.kind, v.passed, _witness(A.field, v))
    run.body["result"] = {"kind": v.kind, "pass": v.passed, "witness": _witness(A.field, v), "detail": v.detail}


def cmd_extend_standard(args, run: Run):
    from .standard import check_standardizable_nonunital

    A = io.algebra_from_json(run.load("algebra", args.algebra))
    B = io.algebra_from_json(run.load("target", args.target)) if args.target else A
    frame = io.frame_from_json(run.load("frame", args.frame), A, hull=args.hull)
    phi = io.map_from_json(run.load("map", args.map), A, B)
    sd = check_standardizable_nonunital(phi, frame)
    for k, ok in sd.verdicts.items():
        run.verdict(k, ok)
    run.verdict("chi_unique", sd.solution_space_dim == 0)
    run.body["result"] = {
        "chi": io.map_to_json(sd.chi),
        "psi1": io.map_to_json(sd.psi1),
        "psi2": io.map_to_json(sd.psi2),
        "psi1_zero": not any(any(r) for r in sd.psi1.matrix),
        "psi2_zero": not any(any(r) for r in sd.psi2.matrix),
        "solution_space_dim": sd.solution_space_dim,
    }


def cmd_extend_derivation(args, run: Run):
    from .derivations import attempt_extension_two_idempotents, extend_derivation

    A = io.algebra_from_json(run.load("algebra", args.algebra))
    frame = io.frame_from_json(run.load("frame", args.frame), A, hull=args.hull)
    d = io.map_from_json(run.load("map", args.map), A, A)
    F = A.field
    if frame.n == 2:
        res = attempt_extension_two_idempotents(frame, d)
        if res.extended:
            run.verdict("extended", True)
            run.body["result"] = {"dtilde": io.map_to_json(res.dtilde)}
        else:
            obs = res.obstruction
            run.verdict("extended", False)
            out = {"kind": obs["kind"]}
            if obs["kind"] == "leibniz":
                out.update({"X": _enc(F, obs["X"]), "Y": _enc(F, obs["Y"]), "value": _enc(F, obs["value"]),
                            "value_readable": repr(Element(A, obs["value"]))})
            run.body["result"] = {"obstruction": out, "failures": [f["check"] for f in res.failures]}
        return
    info: dict = {}
    dt = extend_derivation(frame, d, alternatives=args.alternatives, report=info)
    run.verdict("leibniz", info["leibniz"])
    run.verdict("restricts_to_d", info["restricts"])
    run.body["result"] = {"dtilde": io.map_to_json(dt), "alternatives_checked": info["alternatives_checked"]}


def cmd_example_grassmann(args, run: Run):
    from .factory import GrassmannZSpec, grassmann_z_algebra

    F = parse_field(args.field)
    B = grassmann_z_algebra(GrassmannZSpec(args.n, F))
    return io.algebra_to_json(B.algebra)


def cmd_example_witness(args, run: Run):
    from .factory import GrassmannZSpec, nonstandard_witness

    F = parse_field(args.field)
    GrassmannZSpec(args.n, F).validate()
    try:
        cert = nonstandard_witness(F, args.n)
    except AssertionError as exc:
        run.verdict("witness", False, str(exc))
        return None
    run.verdict("witness", True)
    run.body["result"] = cert
    return None


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="peirce-lie", description="Exact checks on structure-constant algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="group", required=True)

    def common(sp, *flags):
        if "algebra" in flags:
            sp.add_argument("--algebra", required=True, help="algebra JSON document")
        if "frame" in flags:
            sp.add_argument("--frame", "--idempotents", dest="frame", required="frame!" in flags,
                            help="idempotent frame JSON")
            sp.add_argument("--hull", action="store_true", help="idempotents live in the unital hull")
        sp.add_argument("--json-out", metavar="PATH", help="write the report here instead of stdout")

    g = sub.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("check", help="load, verify associativity, report basic invariants")
    common(sp, "algebra")
    sp.set_defaults(func=cmd_algebra_check)

    g = sub.add_parser("verify").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("grading", help="root grading of [A, A] from a frame")
    common(sp, "algebra", "frame", "frame!")
    sp.set_defaults(func=cmd_verify_grading)
    sp = g.add_parser("map", help="check one law for a map")
    common(sp, "algebra", "frame")
    sp.add_argument("--map", required=True)
    sp.add_argument("--target", help="codomain algebra (default: the algebra itself)")
    sp.add_argument("--law", required=True, choices=LAWS)
    sp.add_argument("--max-len", type=int, default=4)
    sp.set_defaults(func=cmd_verify_map)

    g = sub.add_parser("extend").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("standard", help="split a Lie map on [A, A] as psi1 - psi2")
    common(sp, "algebra", "frame", "frame!")
    sp.add_argument("--map", required=True)
    sp.add_argument("--target", help="codomain algebra (default: the algebra itself)")
    sp.set_defaults(func=cmd_extend_standard)
    sp = g.add_parser("derivation", help="extend a Lie derivation of [A, A] to A")
    common(sp, "algebra", "frame", "frame!")
    sp.add_argument("--map", required=True)
    sp.add_argument("--alternatives", type=int, default=10)
    sp.set_defaults(func=cmd_extend_derivation)

    g = sub.add_parser("example").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("grassmann-z", help="emit the Grassmann algebra with z as JSON")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--field", default="q")
    sp.add_argument("--json-out", metavar="PATH")
    sp.set_defaults(func=cmd_example_grassmann)
    sp = g.add_parser("nonstandard-witness", help="certificate that a Lie derivation does not extend")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--field", default="q")
    sp.add_argument("--json-out", metavar="PATH")
    sp.set_defaults(func=cmd_example_witness)
    return p


def _emit(doc, path):
    if path:
        io.write_json(path, doc)
    else:
        sys.stdout.write(io.dumps(doc))


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    run = Run(argv)
    try:
        doc = args.func(args, run)
    except PeirceLieError as exc:
        run.body["error"] = {"type": type(exc).__name__, "message": str(exc),
                             "certificate": _plain(exc.certificate)}
        _emit(run.finish(exc.exit_code), getattr(args, "json_out", None))
        return exc.exit_code
    if doc is not None:
        _emit(doc, args.json_out)
        return 0
    report = run.finish()
    _emit(report, args.json_out)
    return report["status"]


def _plain(obj):
    """Best-effort JSON-safe rendering of an error certificate."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "kind") and hasattr(obj, "passed"):
        return {"kind": obj.kind, "pass": obj.passed, "detail": _plain(obj.detail)}
    if isinstance(obj, (Element, Subspace)):
        return repr(obj)
    return str(obj)


if __name__ == "__main__":
    raise SystemExit(main())
