"""Flat-file I/O: JSON documents, batch coin-set lists and golden data.

JSON keeps every rational as a lowest-terms ``"num/den"`` string and every
count as a decimal string, so nothing depends on a consumer's number type.
Dumps are deterministic (fixed key order, two-space indent, trailing newline).
"""
from __future__ import annotations

import hashlib
import json
import os
from typing import Any, Dict, List

from models.coin_set import CoinSet, coin_set_from_text, new_coin_set
from models.errors import GoldenFileCorrupt, MissingGoldenFile, QuasiCoinError
from models.records import CountTable, Decomposition, QuasiPolynomial
from utils.exact_poly import Polynomial, parse_rational, rational_to_text


def _dump(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _poly_doc(p: Polynomial) -> List[str]:
    return [rational_to_text(c) for c in p.coeffs]


def _poly_from_doc(items: List[str]) -> Polynomial:
    return Polynomial(tuple(parse_rational(s) for s in items))


def _coins_doc(cs: CoinSet) -> Dict[str, Any]:
    return {"coins": list(cs.denoms), "d": cs.d, "M": cs.M, "M_prime": cs.M_prime}


def _load(text: str, kind: str) -> Dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuasiCoinError(f"invalid {kind} JSON: {exc}") from None
    if not isinstance(doc, dict) or "coins" not in doc:
        raise QuasiCoinError(f"invalid {kind} JSON: missing 'coins'")
    return doc


def _coins_from_doc(doc: Dict[str, Any]) -> CoinSet:
    cs = new_coin_set(doc["coins"])
    for key in ("d", "M", "M_prime"):
        if key in doc and doc[key] != getattr(cs, key):
            raise QuasiCoinError(f"stored {key}={doc[key]} does not match coins {cs} ({getattr(cs, key)})")
    return cs


def quasi_to_json(q: QuasiPolynomial) -> str:
    doc = _coins_doc(q.coins)
    doc["verified_upto"] = q.verified_upto
    doc["polys"] = [_poly_doc(p) for p in q.polys]
    return _dump(doc)


def quasi_from_json(text: str) -> QuasiPolynomial:
    doc = _load(text, "quasi-polynomial")
    cs = _coins_from_doc(doc)
    polys = tuple(_poly_from_doc(items) for items in doc.get("polys", []))
    if len(polys) != cs.M:
        raise QuasiCoinError(f"expected {cs.M} polynomials, found {len(polys)}")
    return QuasiPolynomial(coins=cs, polys=polys, verified_upto=int(doc.get("verified_upto", 0)))


def decomposition_to_json(dec: Decomposition) -> str:
    doc = _coins_doc(dec.coins)
    doc["shared"] = [_poly_doc(p) for p in dec.shared]
    doc["b"] = [rational_to_text(b) for b in dec.offsets]
    return _dump(doc)


def decomposition_from_json(text: str) -> Decomposition:
    doc = _load(text, "decomposition")
    cs = _coins_from_doc(doc)
    shared = tuple(_poly_from_doc(items) for items in doc.get("shared", []))
    offsets = tuple(parse_rational(s) for s in doc.get("b", []))
    if len(shared) != cs.M_prime or len(offsets) != cs.M:
        raise QuasiCoinError(
            f"expected {cs.M_prime} shared parts and {cs.M} offsets, found {len(shared)} and {len(offsets)}"
        )
    return Decomposition(coins=cs, shared=shared, offsets=offsets)


def count_table_to_json(table: CountTable) -> str:
    doc = _coins_doc(table.coins)
    doc["upto"] = table.upto
    doc["counts"] = [str(c) for c in table.counts]
    return _dump(doc)


def count_table_from_json(text: str) -> CountTable:
    doc = _load(text, "count table")
    cs = _coins_from_doc(doc)
    counts = tuple(int(c) for c in doc.get("counts", []))
    upto = int(doc.get("upto", len(counts) - 1))
    if len(counts) != upto + 1:
        raise QuasiCoinError(f"count table claims upto={upto} but holds {len(counts)} values")
    return CountTable(coins=cs, upto=upto, counts=counts)


def read_batch_file(path: str) -> List[CoinSet]:
    """One comma-separated coin set per line; ``#`` starts a comment."""
    if not os.path.isfile(path):
        raise QuasiCoinError(f"batch file not found: {path}")
    sets: List[CoinSet] = []
    with open(path, "r", encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                sets.append(coin_set_from_text(line))
            except QuasiCoinError as exc:
                raise QuasiCoinError(f"{path}:{lineno}: {exc}") from None
    return sets


def sha256_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def read_manifest(golden_dir: str) -> Dict[str, Any]:
    path = os.path.join(golden_dir, "manifest.json")
    if not os.path.isfile(path):
        raise MissingGoldenFile(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            doc = json.load(f)
    except json.JSONDecodeError as exc:
        raise GoldenFileCorrupt(path, f"invalid JSON ({exc})") from None
    if not isinstance(doc.get("appendices"), dict):
        raise GoldenFileCorrupt(path, "no 'appendices' table")
    return doc["appendices"]


def read_golden_source(golden_dir: str, entry: Dict[str, Any], verify_checksum: bool = True) -> str:
    path = os.path.join(golden_dir, entry["file"])
    if not os.path.isfile(path):
        raise MissingGoldenFile(path)
    if verify_checksum and entry.get("sha256") and sha256_file(path) != entry["sha256"]:
        raise GoldenFileCorrupt(path, "checksum does not match the manifest")
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


__all__ = [
    "quasi_to_json",
    "quasi_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "count_table_to_json",
    "count_table_from_json",
    "read_batch_file",
    "sha256_file",
    "read_manifest",
    "read_golden_source",
]
