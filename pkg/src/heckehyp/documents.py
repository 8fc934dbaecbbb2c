"""Text documents exchanged by the command line tool.

Every document is a JSON object whose first key is ``kind``.  Keys are
written in a fixed order with two-space indentation and a trailing newline,
so identical values always serialize to identical bytes.  Scalars travel as
strings in the format of :func:`heckehyp.scalar.format_scalar`.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError
from .hypergeometric import HypSeries
from .multiplicative import CMReport, CMVerdict
from .scalar import format_scalar, parse_scalar
from .series import TruncatedSeries
from .spectral import EigenReport, Reason, Verdict

__all__ = ["dumps", "loads", "to_doc", "from_doc"]


def _s(z) -> str:
    return format_scalar(z)


def series_doc(f: TruncatedSeries) -> dict:
    return {"kind": "series", "order": f.order, "coeffs": [_s(c) for c in f.coeffs]}


def hyp_doc(h: HypSeries) -> dict:
    return {
        "kind": "hypseries",
        "prefactor": _s(h.prefactor),
        "exponent": h.exponent,
        "upper": [_s(a) for a in h.upper],
        "lower": [_s(b) for b in h.lower],
        "scale": _s(h.scale),
    }


def eigen_doc(r: EigenReport) -> dict:
    return {
        "kind": "eigen-report",
        "verdict": r.verdict.value,
        "exponent": r.exponent,
        "reason": r.reason.value if r.reason else None,
        "normalized_form": hyp_doc(r.normalized_form) if r.normalized_form else None,
    }


def cm_doc(r: CMReport) -> dict:
    return {
        "kind": "cm-report",
        "verdict": r.verdict.value,
        "exponent": r.exponent,
        "constant": _s(r.constant) if r.constant is not None else None,
        "witness": list(r.witness) if r.witness else None,
    }


def to_doc(value) -> dict:
    if isinstance(value, TruncatedSeries):
        return series_doc(value)
    if isinstance(value, HypSeries):
        return hyp_doc(value)
    if isinstance(value, EigenReport):
        return eigen_doc(value)
    if isinstance(value, CMReport):
        return cm_doc(value)
    raise TypeError(f"no document form for {type(value).__name__}")


def dumps(doc: Any) -> str:
    if not isinstance(doc, dict):
        doc = to_doc(doc)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- parsing ----------------------------------------------------------------


def _field(doc: dict, key: str, kind: str):
    try:
        return doc[key]
    except KeyError:
        raise ParseError(f"{kind} document is missing {key!r}") from None


def _scalar(v):
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ParseError(f"expected a scalar string, got {v!r}")
    return parse_scalar(str(v))


def _scalars(v) -> list:
    if not isinstance(v, list):
        raise ParseError(f"expected an array of scalars, got {v!r}")
    return [_scalar(x) for x in v]


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what} must be an integer, got {v!r}")
    return v


def _optional(v, conv):
    return None if v is None else conv(v)


def parse_series(doc: dict) -> TruncatedSeries:
    coeffs = _scalars(_field(doc, "coeffs", "series"))
    order = _int(_field(doc, "order", "series"), "order")
    if order != len(coeffs) - 1:
        raise ParseError(f"series order {order} does not match {len(coeffs)} coefficients")
    return TruncatedSeries(coeffs)


def parse_hyp(doc: dict) -> HypSeries:
    # IllegalParameter from the constructor is deliberately not turned into a ParseError
    return HypSeries(
        _scalars(_field(doc, "upper", "hypseries")),
        _scalars(_field(doc, "lower", "hypseries")),
        prefactor=_scalar(doc.get("prefactor", "1")),
        exponent=_int(doc.get("exponent", 0), "exponent"),
        scale=_scalar(doc.get("scale", "1")),
    )


def parse_eigen(doc: dict) -> EigenReport:
    try:
        verdict = Verdict(_field(doc, "verdict", "eigen-report"))
        reason = _optional(doc.get("reason"), Reason)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return EigenReport(
        verdict,
        exponent=_optional(doc.get("exponent"), lambda v: _int(v, "exponent")),
        normalized_form=_optional(doc.get("normalized_form"), parse_hyp),
        reason=reason,
    )


def parse_cm(doc: dict) -> CMReport:
    try:
        verdict = CMVerdict(_field(doc, "verdict", "cm-report"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    witness = doc.get("witness")
    if witness is not None:
        if not (isinstance(witness, list) and len(witness) == 2):
            raise ParseError(f"witness must be a pair, got {witness!r}")
        witness = (_int(witness[0], "witness"), _int(witness[1], "witness"))
    return CMReport(
        verdict,
        exponent=_optional(doc.get("exponent"), lambda v: _int(v, "exponent")),
        constant=_optional(doc.get("constant"), _scalar),
        witness=witness,
    )


_PARSERS = {
    "series": parse_series,
    "hypseries": parse_hyp,
    "eigen-report": parse_eigen,
    "cm-report": parse_cm,
}


def from_doc(doc: Any, expect: str | None = None):
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("kind", expect)
    if expect is not None and kind != expect:
        raise ParseError(f"expected a {expect} document, got {kind!r}")
    try:
        parser = _PARSERS[kind]
    except KeyError:
        raise ParseError(f"unknown document kind {kind!r}") from None
    return parser(doc)


def loads(text: str, expect: str | None = None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from None
    return from_doc(doc, expect)
