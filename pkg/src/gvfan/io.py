"""
JSON encodings of matrices, seed sets, fans, verdicts and certificates.

Mutation indices (paths, pairs, edge labels) are 1-based in every document;
seed and ray indices are 0-based positions in the arrays they point into.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidInput
from .fan import Fan
from .gvec import GVectorSeed, SeedEnumeration
from .matrix import ExchangeMatrix, ExtendedMatrix, FiniteTypeVerdict
from .rank2 import Rank2Params
from .witness import WitnessCertificate, WitnessReport


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def read_source(arg: str | None, stdin=None) -> Any:
    """Parse an inline JSON string, ``@path`` or, for None / ``-``, standard input."""
    if arg is None or arg == "-":
        if stdin is None:
            import sys

            stdin = sys.stdin
        text = stdin.read()
    elif arg.startswith("@"):
        try:
            text = Path(arg[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InvalidInput(f"cannot read {arg[1:]}: {exc}") from None
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from None


def _int_rows(raw: Any, what: str) -> list[list[int]]:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise InvalidInput(f"{what} must be a list of rows")
    for r in raw:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidInput(f"{what} entries must be integers, got {x!r}")
    return raw


def _check_n(doc: dict, rows: list, expected_rows: int | None = None) -> None:
    n = doc.get("n")
    if n is not None and (not rows or n != len(rows[0]) or (expected_rows and len(rows) != expected_rows)):
        raise InvalidInput(f"declared n = {n} does not match the matrix shape")


def matrix_to_json(m: ExchangeMatrix | ExtendedMatrix) -> dict:
    if isinstance(m, ExtendedMatrix):
        return {"n": m.n, "c": m.tolist()}
    return {"n": m.n, "b": m.tolist()}


def matrix_from_json(doc: Any) -> ExchangeMatrix | ExtendedMatrix:
    """Accepts a bare row list, ``{"n", "b"}`` or ``{"n", "c"}``."""
    if isinstance(doc, list):
        return ExchangeMatrix(_int_rows(doc, "matrix"))
    if not isinstance(doc, dict):
        raise InvalidInput("expected a matrix document")
    if "c" in doc and "seeds" not in doc:
        rows = _int_rows(doc["c"], "extended matrix")
        _check_n(doc, rows, 2 * len(rows[0]) if rows else None)
        return ExtendedMatrix(rows)
    if "b" in doc:
        rows = _int_rows(doc["b"], "matrix")
        _check_n(doc, rows, len(rows[0]) if rows else None)
        return ExchangeMatrix(rows)
    raise InvalidInput("matrix document needs a 'b' or 'c' field")


def exchange_matrix_from_json(doc: Any) -> ExchangeMatrix:
    m = matrix_from_json(doc)
    if not isinstance(m, ExchangeMatrix):
        raise InvalidInput("expected an n x n exchange matrix, got an extended matrix")
    return m


def seeds_to_json(enum: SeedEnumeration) -> dict:
    return {
        "b": enum.ambient.tolist(),
        "seeds": [{"c": s.c_matrix.tolist(), "g": [list(v) for v in s.g_tuple]} for s in enum.seeds],
        "edges": [[a, k + 1, z] for a, k, z in enum.edges],
        "exhausted": enum.exhausted,
    }


def seeds_from_json(doc: dict) -> SeedEnumeration:
    try:
        b = ExchangeMatrix(_int_rows(doc["b"], "matrix"))
        seeds = [
            GVectorSeed(
                b,
                ExtendedMatrix(_int_rows(s["c"], "extended matrix")),
                tuple(tuple(v) for v in _int_rows(s["g"], "g-vectors")),
            )
            for s in doc["seeds"]
        ]
        edges = [(int(a), int(k) - 1, int(z)) for a, k, z in doc["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed seed-set document: {exc}") from None
    for s in seeds:
        if len(s.g_tuple) != b.n or any(len(v) != b.n for v in s.g_tuple) or s.c_matrix.n != b.n:
            raise InvalidInput("seed dimensions do not match the ambient matrix")
    # depths are not part of the format
    return SeedEnumeration(b, seeds, edges, [0] * len(seeds), bool(doc.get("exhausted", False)))


def fan_to_json(f: Fan) -> dict:
    return {
        "dim": f.dim,
        "rays": [list(r) for r in f.rays],
        "cones": [list(c) for c in f.cones],
        "complete": f.complete,
    }


def fan_from_json(doc: dict) -> Fan:
    try:
        dim = int(doc["dim"])
        rays = [tuple(r) for r in _int_rows(doc["rays"], "rays")]
        cones = [[rays[i] for i in c] for c in doc["cones"]]
        complete = doc.get("complete")
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise InvalidInput(f"malformed fan document: {exc}") from None
    if complete not in (True, False, None):
        raise InvalidInput("'complete' must be true, false or null")
    return Fan.from_cones(cones, dim=dim, complete=complete)


def verdict_to_json(v: FiniteTypeVerdict) -> dict:
    if v.finite:
        return {"kind": "finite", "class_size": v.class_size}
    return {"kind": "infinite", "path": [k + 1 for k in v.path], "pair": [i + 1 for i in v.pair]}


def verdict_from_json(doc: dict) -> FiniteTypeVerdict:
    if doc.get("kind") == "finite":
        return FiniteTypeVerdict(True, class_size=doc["class_size"])
    if doc.get("kind") == "infinite":
        i, j = doc["pair"]
        return FiniteTypeVerdict(False, path=tuple(k - 1 for k in doc["path"]), pair=(i - 1, j - 1))
    raise InvalidInput("verdict 'kind' must be 'finite' or 'infinite'")


def certificate_to_json(cert: WitnessCertificate) -> dict:
    return {
        "b": cert.input_b.tolist(),
        "path": [k + 1 for k in cert.path],
        "pair": [cert.pair[0] + 1, cert.pair[1] + 1],
        "bc": [cert.params.b, cert.params.c],
        "witness": list(cert.witness),
        "witness_at_bprime": list(cert.witness_at_bprime),
    }


def certificate_from_json(doc: dict) -> WitnessCertificate:
    try:
        b = ExchangeMatrix(_int_rows(doc["b"], "matrix"))
        path = tuple(int(k) - 1 for k in doc["path"])
        i, j = (int(x) - 1 for x in doc["pair"])
        params = Rank2Params(*doc["bc"])
        at = tuple(int(x) for x in doc["witness_at_bprime"])
        w = tuple(int(x) for x in doc["witness"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed certificate: {exc}") from None
    if not all(0 <= k < b.n for k in path) or not (0 <= i < b.n and 0 <= j < b.n):
        raise InvalidInput("certificate indices out of range")
    if len(at) != b.n or len(w) != b.n:
        raise InvalidInput("certificate vectors have the wrong dimension")
    return WitnessCertificate(b, path, (i, j), params, at, w)


def report_to_json(r: WitnessReport) -> dict:
    return {
        "passed": r.passed,
        "depth": r.depth,
        "cones_examined": r.cones_examined,
        "partial": True,
        "bound": r.bound,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in r.checks],
    }
