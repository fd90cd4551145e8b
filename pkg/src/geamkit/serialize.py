"""JSON and CSV artifacts with deterministic, fingerprinted output.

Complex matrices are stored as nested row-major lists of [re, im] pairs.
Floats go through repr, so an export/import round trip reproduces every
operator bit-exactly on the same platform. Fingerprints are SHA-256
hashes of the canonical dump with any volatile fields removed.
"""

import csv
import hashlib
import json
from datetime import datetime, timezone

import numpy as np

from .errors import ValidationError
from .geam import Geam, GeamParams, derive_params
from .maps import Witness

GEAM_FORMAT = "geam/1"
WITNESS_FORMAT = "witness/1"
CERTIFICATION_FORMAT = "certification/1"
ANALYSIS_FORMAT = "analysis/1"

DETECTION_COLUMNS = ("family", "parameter", "k", "L", "K", "expectation", "detected")


def complex_to_pairs(a: np.ndarray):
    """Nested lists of [re, im], row-major."""
    a = np.asarray(a, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in a]


def pairs_to_complex(obj) -> np.ndarray:
    rows = [[complex(re, im) for re, im in row] for row in obj]
    return np.array(rows, dtype=complex)


def canonical_dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def fingerprint(doc: dict) -> str:
    stripped = {k: v for k, v in doc.items() if k != "created"}
    return hashlib.sha256(canonical_dumps(stripped).encode()).hexdigest()[:16]


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def write_json(doc: dict, path, *, timestamp: bool = True):
    doc = dict(doc)
    if timestamp:
        doc["created"] = _timestamp()
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")


def read_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def geam_document(geam: Geam) -> dict:
    p = geam.params
    basis = dict(geam.basis_meta) or {"kind": "custom"}
    basis.setdefault("unitary_seed", None)
    return {
        "format": GEAM_FORMAT,
        "d": p.d,
        "m": list(p.m),
        "gamma": list(p.gamma),
        "b": list(p.b),
        "tau_sign": list(p.tau_sign),
        "basis": basis,
        "operators": [complex_to_pairs(op) for grp in geam.ops for op in grp],
    }


def geam_fingerprint(geam_or_doc) -> str:
    doc = geam_or_doc if isinstance(geam_or_doc, dict) else geam_document(geam_or_doc)
    return fingerprint(doc)


def save_geam(geam: Geam, path, *, timestamp: bool = True) -> str:
    doc = geam_document(geam)
    write_json(doc, path, timestamp=timestamp)
    return fingerprint(doc)


def load_geam(path) -> Geam:
    doc = read_json(path)
    if doc.get("format") != GEAM_FORMAT:
        raise ValidationError(f"not a GEAM document: format {doc.get('format')!r}")
    params = GeamParams(d=doc["d"], m=doc["m"], gamma=doc["gamma"], b=doc["b"],
                        tau_sign=doc["tau_sign"])
    params.validate()
    flat = [pairs_to_complex(op) for op in doc["operators"]]
    if len(flat) != sum(params.m):
        raise ValidationError("operator count does not match the layout")
    groups = []
    i = 0
    for m in params.m:
        groups.append(np.array(flat[i:i + m]))
        i += m
    return Geam(params=params, derived=derive_params(params), ops=tuple(groups),
                basis_meta=dict(doc.get("basis", {})))


def witness_document(witness: Witness) -> dict:
    return {
        "format": WITNESS_FORMAT,
        "d": witness.d,
        "matrix": complex_to_pairs(witness.w),
        "meta": dict(witness.meta),
    }


def save_witness(witness: Witness, path, *, timestamp: bool = True) -> str:
    doc = witness_document(witness)
    write_json(doc, path, timestamp=timestamp)
    return fingerprint(doc)


def load_witness(path) -> Witness:
    doc = read_json(path)
    if doc.get("format") != WITNESS_FORMAT:
        raise ValidationError(f"not a witness document: format {doc.get('format')!r}")
    return Witness(w=pairs_to_complex(doc["matrix"]), meta=dict(doc.get("meta", {})))


def certification_document(report, *, witness_fingerprint: str | None = None,
                           mehta: dict | None = None) -> dict:
    doc = {
        "format": CERTIFICATION_FORMAT,
        "verdict": report.verdict,
        "min_value": report.min_value,
        "argmin": complex_to_pairs(report.argmin.c),
        "k": report.k,
        "samples": report.samples,
        "restarts": report.restarts,
        "iters": report.iters,
        "seed": report.seed,
        "tolerance": report.tolerance,
    }
    if witness_fingerprint is not None:
        doc["witness_fingerprint"] = witness_fingerprint
    if mehta is not None:
        doc["mehta"] = mehta
    return doc


def write_detection_csv(records, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(DETECTION_COLUMNS)
        for r in records:
            writer.writerow([r.family, repr(r.parameter), r.k, r.l, r.kk,
                             repr(r.expectation), int(r.detected)])
