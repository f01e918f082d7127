"""JSON and CSV encodings. Rationals are always written as ``"p/q"`` strings."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .errors import ValidationError
from .fps import Series, to_rational
from .involution import InvolutionParams
from .riordan import RiordanArray, TriangularMatrix
from .sheffer import PolySequence


def rat(r: Fraction) -> str:
    return str(r)


def _rats(values) -> list[Fraction]:
    if not isinstance(values, list):
        raise ValidationError(f"expected a list of rationals, got {values!r}")
    return [to_rational(v) for v in values]


def _order(obj: dict) -> int:
    order = obj.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ValidationError(f"bad or missing order: {order!r}")
    return order


def series_to_obj(s: Series) -> dict:
    return {"order": s.order, "coeffs": [rat(c) for c in s]}


def series_from_obj(obj: dict) -> Series:
    return Series(_rats(obj["coeffs"]), _order(obj))


def matrix_to_obj(m: TriangularMatrix) -> dict:
    return {"order": m.order, "rows": [[rat(c) for c in row] for row in m.rows]}


def matrix_from_obj(obj: dict) -> TriangularMatrix:
    order = _order(obj)
    rows = obj.get("rows")
    if not isinstance(rows, list) or len(rows) != order + 1:
        raise ValidationError("matrix needs order+1 rows")
    return TriangularMatrix([_rats(r) for r in rows])


def polyseq_to_obj(p: PolySequence) -> dict:
    return matrix_to_obj(p.matrix)


def polyseq_from_obj(obj: dict) -> PolySequence:
    return PolySequence(matrix_from_obj(obj))


def riordan_to_obj(t: RiordanArray) -> dict:
    return {"order": t.order, "f": [rat(c) for c in t.f], "g": [rat(c) for c in t.g]}


def riordan_from_obj(obj: dict) -> RiordanArray:
    order = _order(obj)
    return RiordanArray(Series(_rats(obj["f"]), order), Series(_rats(obj["g"]), order))


def params_to_obj(p: InvolutionParams) -> dict:
    return {
        "phi": [rat(c) for c in p.phi],
        "u": [rat(c) for c in p.u],
        "sign": p.sign,
        "order": p.order,
    }


def params_from_obj(obj: dict) -> InvolutionParams:
    order = _order(obj)
    sign = obj.get("sign")
    if sign not in (1, -1) or isinstance(sign, bool):
        raise ValidationError(f"sign must be 1 or -1, got {sign!r}")
    return InvolutionParams(
        Series(_rats(obj["phi"]), order), Series(_rats(obj["u"]), order), sign
    )


def dumps(obj) -> str:
    return json.dumps(obj)


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None


def matrix_to_csv(m: TriangularMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m.rows:
        writer.writerow([rat(c) for c in row])
    return buf.getvalue()


def matrix_from_csv(text: str) -> TriangularMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    for n, row in enumerate(rows):
        if len(row) != n + 1:
            raise ValidationError(f"CSV row {n} has {len(row)} cells, expected {n + 1}")
    return TriangularMatrix([_rats(r) for r in rows])
