"""Canonical text and JSON forms for the exact types.

These formats are the CLI I/O contract:

  Rational   "p/q", or just "p" when the denominator is 1
  NFElem     "[c0, c1, ...]@<field-label>"
  UniPoly    {"field": <label or defining coeffs>, "var": "x", "coeffs": [...]}

Round-trip guarantee: parse(serialize(v)) compares equal to v, and
serialize(parse(s)) reproduces a canonical s byte for byte.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from .numberfield import NFElem, NumberField, QQ, field_by_label, nf_make
from .unipoly import UniPoly


def rat_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s.strip())


def nfelem_str(a: NFElem) -> str:
    inner = ", ".join(rat_str(c) for c in a.coords)
    return f"[{inner}]@{a.field.label}"


_NFELEM_RE = re.compile(r"^\[(.*)\]@(.+)$", re.DOTALL)


def parse_nfelem(s: str) -> NFElem:
    m = _NFELEM_RE.match(s.strip())
    if not m:
        raise ValueError(f"not an element literal: {s!r}")
    body, label = m.group(1), m.group(2).strip()
    field = field_by_label(label)
    if field is None:
        raise ValueError(f"unknown field label {label!r}")
    parts = [p for p in (q.strip() for q in body.split(",")) if p]
    coords = [parse_rat(p) for p in parts]
    if len(coords) != field.degree:
        raise ValueError(
            f"expected {field.degree} coordinates for {label}, got {len(coords)}"
        )
    return NFElem(field, tuple(coords))


def _field_tag(field: NumberField):
    """Label when the registry resolves it back to this very field, else the
    defining polynomial, so the tag is always sufficient to reconstruct."""
    if field_by_label(field.label) is field:
        return field.label
    return [rat_str(c) for c in field.poly]


def field_from_tag(tag) -> NumberField:
    if isinstance(tag, str):
        field = field_by_label(tag)
        if field is None:
            raise ValueError(f"unknown field label {tag!r}")
        return field
    return nf_make([parse_rat(c) for c in tag])


def unipoly_json(f: UniPoly) -> dict:
    if f.field.degree == 1:
        coeffs = [rat_str(c.coords[0]) for c in f.coeffs]
    else:
        coeffs = [nfelem_str(c) for c in f.coeffs]
    return {"field": _field_tag(f.field), "var": f.var, "coeffs": coeffs}


def unipoly_from_json(d: dict) -> UniPoly:
    field = field_from_tag(d["field"])
    var = d.get("var", "x")
    coeffs = []
    for entry in d["coeffs"]:
        if isinstance(entry, str) and "@" in entry:
            c = parse_nfelem(entry)
            if c.field is not field:
                raise ValueError("coefficient field does not match the polynomial's")
            coeffs.append(c)
        else:
            coeffs.append(field.elem(parse_rat(entry)))
    return UniPoly(field, coeffs, var)


def to_jsonable(obj: Any) -> Any:
    """Recursively rewrite a result object into JSON-ready primitives using
    the canonical text forms above."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, NFElem):
        return nfelem_str(obj)
    if isinstance(obj, UniPoly):
        return unipoly_json(obj)
    if hasattr(obj, "to_json_dict"):
        return to_jsonable(obj.to_json_dict())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "name") and hasattr(obj, "order"):
        return getattr(obj, "name") or "unnamed-group"
    return str(obj)


def construction_json(c) -> dict:
    """JSON form of a constructor.Construction."""
    out = {
        "kind": c.kind,
        "group": (c.group.name or "unnamed-group") if c.group is not None else None,
        "c": to_jsonable(c.c),
        "b": to_jsonable(c.b),
        "auxiliary": unipoly_json(c.auxiliary) if c.auxiliary is not None else None,
        "alpha_minpoly": (
            unipoly_json(c.alpha_minpoly) if c.alpha_minpoly is not None else None
        ),
        "degree": c.degree,
        "conj_dim_claimed": c.conj_dim_claimed,
        "certificates": to_jsonable(c.certificates),
        "notes": list(c.notes),
    }
    return out
