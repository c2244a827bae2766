"""Reading and writing model documents.

A model document is a JSON object with keys kind, m, ambient_dim,
components and strata.  Components carry id, name, N, mu; strata carry
id, vertices, an optional faces map (vertex -> stratum id of the face
without that vertex), optional touches_zero / touches_pole flags and an
optional horizontal expansion {num: [[...]], den: [[...]]} whose
exponent vectors follow the stratum's vertex order.

Parsing is strict about shapes (wrong types, unknown keys and malformed
exponents are format errors with a location) but does not check the
semantic invariants; run validate() on the parsed model for those.
Serialization is canonical: ids sorted, keys in a fixed order, so equal
models produce byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import DomainError, ModelFormatError
from .model import PrimeComponent, SncdModel, Stratum
from .series import SeriesPair, Support

_COMPONENT_KEYS = {"id", "name", "N", "mu"}
_STRATUM_KEYS = {"id", "vertices", "faces", "touches_zero", "touches_pole", "horizontal"}
_TOP_KEYS = {"kind", "m", "ambient_dim", "components", "strata"}


def parse_fraction(text: str) -> Fraction:
    """Parse a rational written as "p/q" or as a plain integer."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r} ({exc})") from None


def format_fraction(q: Fraction) -> str:
    return str(q)


def _expect(cond: bool, message: str, where: str):
    if not cond:
        raise ModelFormatError(message, where)


def _get(obj: dict, key: str, kind, where: str, default=_expect):
    if key not in obj:
        if default is not _expect:
            return default
        raise ModelFormatError(f"missing key {key!r}", where)
    value = obj[key]
    # bool is an int subclass; keep the two apart
    if kind is int and isinstance(value, bool):
        raise ModelFormatError(f"key {key!r} must be an integer", where)
    if not isinstance(value, kind):
        raise ModelFormatError(
            f"key {key!r} has type {type(value).__name__}, expected {kind.__name__}",
            where,
        )
    return value


def parse_model(text: str) -> SncdModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    _expect(isinstance(doc, dict), "document must be a JSON object", "top level")
    unknown = set(doc) - _TOP_KEYS
    _expect(not unknown, f"unknown keys {sorted(unknown)}", "top level")

    kind = _get(doc, "kind", str, "top level")
    m = _get(doc, "m", int, "top level")
    ambient = _get(doc, "ambient_dim", int, "top level")

    comps = []
    raw_components = _get(doc, "components", list, "top level")
    for i, entry in enumerate(raw_components):
        where = f"components[{i}]"
        _expect(isinstance(entry, dict), "component must be an object", where)
        unknown = set(entry) - _COMPONENT_KEYS
        _expect(not unknown, f"unknown keys {sorted(unknown)}", where)
        comps.append(
            PrimeComponent(
                _get(entry, "id", str, where),
                _get(entry, "name", str, where),
                _get(entry, "N", int, where),
                _get(entry, "mu", int, where),
            )
        )

    strata = []
    raw_strata = _get(doc, "strata", list, "top level")
    for i, entry in enumerate(raw_strata):
        where = f"strata[{i}]"
        _expect(isinstance(entry, dict), "stratum must be an object", where)
        unknown = set(entry) - _STRATUM_KEYS
        _expect(not unknown, f"unknown keys {sorted(unknown)}", where)
        sid = _get(entry, "id", str, where)
        vertices = _get(entry, "vertices", list, where)
        _expect(
            all(isinstance(v, str) for v in vertices),
            "vertices must be strings",
            f"{where}.vertices",
        )
        faces = _get(entry, "faces", dict, where, default={})
        _expect(
            all(isinstance(k, str) and isinstance(v, str) for k, v in faces.items()),
            "faces must map vertex ids to stratum ids",
            f"{where}.faces",
        )
        horizontal = None
        if "horizontal" in entry:
            horizontal = _parse_horizontal(
                entry["horizontal"], sid, tuple(vertices), f"{where}.horizontal"
            )
        strata.append(
            Stratum(
                sid,
                tuple(vertices),
                dict(faces),
                _get(entry, "touches_zero", bool, where, default=False),
                _get(entry, "touches_pole", bool, where, default=False),
                horizontal,
            )
        )
    return SncdModel(kind, m, ambient, tuple(comps), tuple(strata))


def _parse_horizontal(raw, stratum_id, vertices, where) -> SeriesPair:
    _expect(isinstance(raw, dict), "horizontal must be an object", where)
    unknown = set(raw) - {"num", "den"}
    _expect(not unknown, f"unknown keys {sorted(unknown)}", where)
    sides = {}
    for side in ("num", "den"):
        vectors = _get(raw, side, list, where)
        _expect(
            all(
                isinstance(beta, list) and all(isinstance(b, int) for b in beta)
                for beta in vectors
            ),
            f"{side} must be a list of integer vectors",
            f"{where}.{side}",
        )
        try:
            sides[side] = Support(
                stratum_id, vertices, frozenset(tuple(beta) for beta in vectors)
            )
        except DomainError as exc:
            raise ModelFormatError(str(exc), f"{where}.{side}") from None
    return SeriesPair(sides["num"], sides["den"])


def load_model(path) -> SncdModel:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ModelFormatError(str(exc), str(path)) from None
    return parse_model(text)


def serialize_model(model: SncdModel) -> str:
    doc = {
        "kind": model.kind,
        "m": model.m,
        "ambient_dim": model.ambient_dim,
        "components": [
            {"id": c.id, "name": c.name, "N": c.N, "mu": c.mu}
            for c in model.components
        ],
        "strata": [_stratum_doc(s) for s in model.strata],
    }
    return json.dumps(doc, indent=2) + "\n"


def _stratum_doc(s: Stratum) -> dict:
    doc = {
        "id": s.id,
        "vertices": list(s.vertices),
        "touches_zero": s.touches_zero,
        "touches_pole": s.touches_pole,
    }
    if s.face_map:
        doc["faces"] = {v: s.face_map[v] for v in sorted(s.face_map)}
    if s.horizontal is not None:
        doc["horizontal"] = {
            "num": [list(b) for b in sorted(s.horizontal.num.exponents)],
            "den": [list(b) for b in sorted(s.horizontal.den.exponents)],
        }
    return doc


def save_model(model: SncdModel, path) -> None:
    Path(path).write_text(serialize_model(model))
