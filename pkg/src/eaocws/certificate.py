"""JSON certificates for assembled codes (schema 1)."""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

from .builder import EaocwsCode, assemble_code, pattern_text, unencoded_form
from .induction import BinaryWord
from .pauli import alice_text, pauli_to_text
from .structure import CodeLayout, Graph

SCHEMA = 1


class CertificateError(ValueError):
    pass


def code_to_json(code: EaocwsCode, search: dict | None = None) -> dict:
    selected = set(code.selected_codewords)
    group = code.group
    doc = {
        "schema": SCHEMA,
        "layout": {"n": code.n, "c": code.c, "r": code.r, "s": code.layout.s},
        "graph": {"vertices": code.graph.vertex_count, "edges": [list(e) for e in code.graph.edges()]},
        "parameters": {
            "n": code.n, "K": code.K, "r": code.r, "d": code.d, "c": code.c,
            "additive": code.additive, "notation": code.parameters(),
        },
        "codewords": [str(w) for w in code.codewords],
        "word_operators": [
            {
                "codeword": str(op.source),
                "raw": pauli_to_text(op.raw),
                "alice_only": pauli_to_text(op.alice_only),
                "unencoded": alice_text(unencoded_form(op.alice_only, group)),
                "ancilla_pattern": pattern_text(op.ancilla_pattern),
                "selected": op.source in selected,
            }
            for op in code.word_operators
        ],
        "ancilla_classes": {
            pattern_text(p): [str(op.source) for op in members] for p, members in sorted(code.classes.items())
        },
        "selected": [str(w) for w in code.selected_codewords],
        "verification": code.verification,
    }
    if search is not None:
        doc["search"] = search
    return doc


def code_from_json(doc: dict) -> EaocwsCode:
    try:
        if doc.get("schema") != SCHEMA:
            raise CertificateError(f"unsupported schema {doc.get('schema')!r}")
        lay = doc["layout"]
        layout = CodeLayout(int(lay["n"]), int(lay["c"]), int(lay["r"]))
        graph = Graph.from_edges(int(doc["graph"]["vertices"]), [tuple(e) for e in doc["graph"]["edges"]])
        words = [BinaryWord.parse(w, layout.n, layout.c) for w in doc["codewords"]]
        d = int(doc["parameters"]["d"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc
    code = assemble_code(layout, graph, words, d)
    if "selected" in doc and doc["selected"] != [str(w) for w in code.selected_codewords]:
        raise CertificateError("stored selection does not match the recomputed one")
    code.verification = doc.get("verification", {"status": "unverified"})
    return code


def record_verification(code: EaocwsCode, certificates) -> None:
    verdicts = [c.verdict for c in certificates]
    code.verification = {
        "status": "pass" if verdicts and all(v == "pass" for v in verdicts) else "fail",
        "certificates": [c.to_json() for c in certificates],
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def write_certificate(path, code: EaocwsCode, search: dict | None = None) -> None:
    Path(path).write_text(dumps(code_to_json(code, search)))


def read_certificate(path) -> EaocwsCode:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"{path}: not valid JSON ({exc.msg})") from exc
    if not isinstance(doc, dict):
        raise CertificateError(f"{path}: expected a JSON object")
    return code_from_json(doc)
