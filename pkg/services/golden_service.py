"""Golden appendix tables: loading, diffing and the verify-appendix gate.

Contract:
 - golden/manifest.json names each appendix's source file, checksum, coin
   set, table kind (``h`` or ``h_prime``), printed b-bounds and errata.
 - load_golden applies the errata unless ``strict``; in strict mode rows are
   compared exactly as printed and nothing is folded.
 - With errata applied, rows landing on the same residue are folded and must
   agree (GoldenFileCorrupt otherwise).
 - diff_golden returns one GoldenMismatch per differing coefficient; an
   empty list is a match.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Set, Tuple, Union

from models.coin_set import new_coin_set
from models.errors import GoldenFileCorrupt, LatexParseError, MissingGoldenFile
from models.records import (
    AppendixResult,
    Decomposition,
    GoldenMismatch,
    GoldenRow,
    GoldenTable,
    QuasiPolynomial,
)
from services import settings
from services.quasi_poly import build_quasi_polynomial, decompose
from utils.exact_poly import Polynomial, drop_constant, parse_rational, render_decimal
from utils.file_utils import read_golden_source, read_manifest
from utils.text_utils import expand_label, iter_latex_rows, parse_latex_polynomial, parse_period_header

logger = logging.getLogger(__name__)

APPENDICES = tuple("ABCDEFGHIJ")
SPREAD_ROUNDINGS = ("half-even", "down")


def _errata_maps(entry: Dict[str, Any]) -> Tuple[
    Dict[str, int], Dict[str, Polynomial], Optional[int], bool, Dict[str, FrozenSet[int]], Dict[str, str], List[str]
]:
    relabel: Dict[str, int] = {}
    replace: Dict[str, Polynomial] = {}
    modulus: Optional[int] = None
    compare_constant = True
    # row label -> residues of that row whose printed constant still holds
    constant_kept: Dict[str, FrozenSet[int]] = {}
    bounds: Dict[str, str] = {}
    notes: List[str] = []
    for item in entry.get("errata", []):
        kind = item.get("kind")
        note = item.get("note", "")
        if kind == "relabel":
            relabel[str(item["label"])] = int(item["residue"])
            notes.append(f"h_{{{item['label']}}} read as h_{{{item['residue']}}}: {note}")
        elif kind == "coefficients":
            replace[str(item["label"])] = Polynomial(tuple(parse_rational(c) for c in item["coefficients"]))
            notes.append(f"h_{{{item['label']}}} coefficients corrected: {note}")
        elif kind == "modulus":
            modulus = int(item["value"])
            notes.append(f"period read as {modulus}: {note}")
        elif kind == "nonconstant" and "label" in item:
            constant_kept[str(item["label"])] = frozenset(int(r) for r in item.get("keep_residues", []))
            notes.append(f"h_{{{item['label']}}} constant terms not compared: {note}")
        elif kind == "nonconstant":
            compare_constant = False
            notes.append(f"constant terms not compared: {note}")
        elif kind == "bound":
            bounds[item["field"]] = str(item["value"])
            notes.append(f"{item['field']} read as {item['value']}: {note}")
        else:
            raise GoldenFileCorrupt("manifest.json", f"unknown erratum kind {kind!r}")
    return relabel, replace, modulus, compare_constant, constant_kept, bounds, notes


def _same(a: Polynomial, b: Polynomial, compare_constant: bool) -> bool:
    if compare_constant:
        return a == b
    return drop_constant(a) == drop_constant(b)


def golden_table_from_latex(
    text: str,
    which: str,
    coins: List[int],
    kind: str,
    *,
    family_range: Optional[List[int]] = None,
    entry: Optional[Dict[str, Any]] = None,
    strict: bool = False,
    source: str = "",
) -> GoldenTable:
    entry = entry or {}
    cs = new_coin_set(coins)
    header = parse_period_header(text)
    if header is None:
        raise GoldenFileCorrupt(source or which, "no $M=...$ period line")
    modulus = header[1]
    relabel, replace, errata_modulus, compare_constant, constant_kept, bound_fixes, notes = _errata_maps(entry)
    if strict:
        relabel, replace, errata_modulus, compare_constant, constant_kept, bound_fixes, notes = {}, {}, None, True, {}, {}, []
    if errata_modulus is not None:
        modulus = errata_modulus

    rows: List[GoldenRow] = []
    entries: Dict[int, Polynomial] = {}
    first_label: Dict[int, str] = {}
    skip_constant: Set[int] = set()
    try:
        parsed = [row for row in iter_latex_rows(text) if row.symbol == "h"]
        for row in parsed:
            poly = replace.get(row.label) or parse_latex_polynomial(row.body)
            for residue in expand_label(row.label, family_range):
                residue = relabel.get(row.label, residue)
                rows.append(GoldenRow(label=row.label, residue=residue, poly=poly, primed=row.primed))
                key = residue % modulus
                if row.label in constant_kept and residue not in constant_kept[row.label]:
                    skip_constant.add(key)
                if key not in entries:
                    entries[key] = poly
                    first_label[key] = row.label
                elif not strict and not _same(entries[key], poly, compare_constant and key not in skip_constant):
                    raise GoldenFileCorrupt(
                        source or which,
                        f"rows h_{{{first_label[key]}}} and h_{{{row.label}}} fold onto residue {key} but differ",
                    )
    except LatexParseError as exc:
        raise GoldenFileCorrupt(source or which, str(exc)) from None
    if not rows:
        raise GoldenFileCorrupt(source or which, "no polynomial rows")

    bounds = dict(entry.get("bounds", {}))
    bounds.update(bound_fixes)
    for note in notes:
        logger.warning("Appendix %s: %s", which, note)
    return GoldenTable(
        which=which,
        coins=cs,
        kind=kind,
        modulus=modulus,
        entries=entries,
        rows=tuple(rows),
        strict=strict,
        compare_constant=compare_constant,
        skip_constant=frozenset(skip_constant),
        bounds=bounds,
        errata=tuple(notes),
        source=source,
    )


def load_golden(which: str, *, golden_dir: Optional[str] = None, strict: bool = False) -> GoldenTable:
    which = which.upper()
    golden_dir = golden_dir or settings.GOLDEN_DIR
    manifest = read_manifest(golden_dir)
    if which not in manifest:
        raise MissingGoldenFile(f"{golden_dir} (appendix {which})")
    entry = manifest[which]
    text = read_golden_source(golden_dir, entry)
    return golden_table_from_latex(
        text,
        which,
        entry["coins"],
        entry.get("kind", "h"),
        family_range=entry.get("family_range"),
        entry=entry,
        strict=strict,
        source=entry["file"],
    )


def diff_golden(source: GoldenTable, rebuilt: Union[QuasiPolynomial, Decomposition]) -> List[GoldenMismatch]:
    if isinstance(rebuilt, Decomposition):
        polys, modulus = rebuilt.shared, rebuilt.M_prime
    else:
        polys, modulus = rebuilt.polys, rebuilt.M
    mismatches: List[GoldenMismatch] = []
    if source.modulus != modulus:
        mismatches.append(GoldenMismatch(source.which, "period", str(source.modulus), str(modulus)))

    if source.strict:
        pairs = [(row.label, row.primed, row.residue, row.poly) for row in source.rows]
    else:
        pairs = [(None, source.kind == "h_prime", residue, poly) for residue, poly in sorted(source.entries.items())]
    for label, primed, residue, printed in pairs:
        got = polys[residue % modulus]
        if not source.compare_constant or residue % source.modulus in source.skip_constant:
            printed, got = drop_constant(printed), drop_constant(got)
        size = max(len(printed.coeffs), len(got.coeffs))
        for power in range(size - 1, -1, -1):
            if printed.coefficient(power) != got.coefficient(power):
                mismatches.append(GoldenMismatch(
                    source.which, "coefficient",
                    str(printed.coefficient(power)), str(got.coefficient(power)),
                    residue=residue, power=power, label=label, primed=primed,
                ))
    return mismatches


def _bound_mismatches(source: GoldenTable, dec: Decomposition) -> List[GoldenMismatch]:
    out: List[GoldenMismatch] = []
    if not source.bounds:
        return out
    actual = {"b_min": min(dec.offsets), "b_max": max(dec.offsets)}
    for field in ("b_min", "b_max"):
        if field in source.bounds and parse_rational(source.bounds[field]) != actual[field]:
            out.append(GoldenMismatch(source.which, field, source.bounds[field], str(actual[field])))
    printed = source.bounds.get("spread")
    if printed:
        spread = actual["b_max"] - actual["b_min"]
        places = len(printed.partition(".")[2])
        shown = {render_decimal(spread, places, mode) for mode in SPREAD_ROUNDINGS}
        if printed not in shown:
            out.append(GoldenMismatch(source.which, "spread", printed, " or ".join(sorted(shown))))
    return out


@lru_cache(maxsize=16)
def _rebuild(coins: Tuple[int, ...], extra_checks: Optional[int]) -> Tuple[QuasiPolynomial, Decomposition]:
    q = build_quasi_polynomial(new_coin_set(coins), extra_checks)
    return q, decompose(q)


def verify_appendix(
    which: str,
    *,
    golden_dir: Optional[str] = None,
    strict: bool = False,
    extra_checks: Optional[int] = None,
) -> AppendixResult:
    source = load_golden(which, golden_dir=golden_dir, strict=strict)
    q, dec = _rebuild(source.coins.denoms, extra_checks)
    rebuilt: Union[QuasiPolynomial, Decomposition] = dec if source.kind == "h_prime" else q
    mismatches = diff_golden(source, rebuilt)
    if source.kind == "h_prime":
        mismatches += _bound_mismatches(source, dec)
    compared = len(source.rows) if strict else len(source.entries)
    bad = {(m.label, m.residue) for m in mismatches if m.field == "coefficient"}
    result = AppendixResult(
        which=source.which,
        coins=source.coins,
        matched=compared - len(bad),
        total=compared,
        mismatches=tuple(mismatches),
        errata=source.errata,
    )
    logger.info("%s", result.summary)
    return result


def verify_all(**kwargs: Any) -> List[AppendixResult]:
    return [verify_appendix(which, **kwargs) for which in APPENDICES]


__all__ = [
    "APPENDICES",
    "golden_table_from_latex",
    "load_golden",
    "diff_golden",
    "verify_appendix",
    "verify_all",
]
