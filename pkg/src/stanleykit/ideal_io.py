"""Reading and writing ideals in the one-per-file text format and in JSON.

Text format: a header line `n = <int>`, then one monomial per line written
as `x<i>^<e>` factors joined by `*` (exponent 1 may be omitted), with `1`
for the unit monomial.  No monomial lines at all encodes the zero ideal.
JSON format: {"n": int, "generators": [[e1, ..., en], ...]}.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import ParseError
from .monomials import Monomial, MonomialIdeal, minimalize

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse the text format; malformed input raises ParseError with line/column."""
    lines = text.splitlines()
    n: int | None = None
    monomials: list[Monomial] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER_RE.match(raw)
            if not m:
                raise ParseError("expected header `n = <int>`", line=lineno, column=1)
            n = int(m.group(1))
            continue
        monomials.append(_parse_monomial(raw, n, lineno))
    if n is None:
        raise ParseError("missing header `n = <int>`", line=max(len(lines), 1), column=1)
    return minimalize(monomials, n=n)


def _parse_monomial(raw: str, n: int, lineno: int) -> Monomial:
    body = raw.strip()
    if body == "1":
        return Monomial((0,) * n)
    exponents = [0] * n
    column = raw.index(body[0]) + 1
    for factor in body.split("*"):
        factor = factor.strip()
        m = _FACTOR_RE.match(factor)
        if not m:
            raise ParseError(f"malformed factor {factor!r}", line=lineno, column=column)
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise ParseError(
                f"variable index {idx} out of range 1..{n} (indices are 1-based)",
                line=lineno, column=column)
        exp = int(m.group(2)) if m.group(2) else 1
        if exp == 0:
            raise ParseError("zero exponents are not written", line=lineno, column=column)
        exponents[idx - 1] += exp
        column += len(factor) + 1
    return Monomial(tuple(exponents))


def render_ideal_text(ideal: MonomialIdeal) -> str:
    lines = [f"n = {ideal.n}"]
    lines.extend(str(m) for m in ideal.generators)
    return "\n".join(lines) + "\n"


def ideal_to_json_dict(ideal: MonomialIdeal) -> dict[str, Any]:
    return {"n": ideal.n, "generators": ideal.to_exponent_lists()}


def ideal_from_json_dict(data: Any) -> MonomialIdeal:
    if not isinstance(data, dict):
        raise ParseError("JSON ideal must be an object", line=1, column=1)
    try:
        n = data["n"]
        rows = data["generators"]
    except KeyError as missing:
        raise ParseError(f"JSON ideal missing key {missing}", line=1, column=1) from None
    if not isinstance(n, int) or n < 0:
        raise ParseError("`n` must be a nonnegative integer", line=1, column=1)
    if not isinstance(rows, list) or any(
            not isinstance(r, list) or len(r) != n
            or any(not isinstance(e, int) or e < 0 for e in r) for r in rows):
        raise ParseError(
            "`generators` must be a list of length-n nonnegative integer vectors",
            line=1, column=1)
    return MonomialIdeal.from_exponent_lists(n, rows)


def parse_ideal_json(text: str) -> MonomialIdeal:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return ideal_from_json_dict(data)


def render_ideal_json(ideal: MonomialIdeal) -> str:
    return json.dumps(ideal_to_json_dict(ideal), sort_keys=True, separators=(",", ":"))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse either format: JSON if the first non-space character is `{`."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_ideal_json(text)
    return parse_ideal_text(text)
