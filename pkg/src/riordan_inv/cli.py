"""Command line front end.

Exit codes: 0 success, 1 input or validation error, 2 a mathematical
precondition failed, 3 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .errors import DefectError, PreconditionError, ValidationError
from .fps import DEFAULT_ORDER, Series, format_series, parse_series, to_rational
from .involution import InvolutionParams, build_involution, decompose_involution
from .presets import array_preset, series_preset
from .riordan import (
    RiordanArray,
    TriangularMatrix,
    a_sequence,
    inverse,
    is_pseudo_involution,
    multiply,
    probe_order,
    to_matrix,
)
from .sheffer import (
    PolySequence,
    from_riordan,
    is_neutral,
    laguerre,
    n_fold,
    named_weight,
    neutral,
    powers_of_x,
    prop1_equivalence,
    umbral_compose_h,
    weight,
)

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_DEFECT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


# input helpers


def _series_arg(text: str, args, flag: str) -> Series:
    if text is None:
        raise ValidationError(f"missing {flag}")
    if text.startswith("preset:"):
        return series_preset(text[len("preset:"):], args.order, getattr(args, "alpha", None))
    return parse_series(text, args.order)


def _array_arg(args, f_attr="f", g_attr="g", preset_attr="array") -> RiordanArray:
    preset = getattr(args, preset_attr, None)
    if preset:
        return array_preset(preset, args.order)
    f_text, g_text = getattr(args, f_attr), getattr(args, g_attr)
    if f_text is None or g_text is None:
        raise ValidationError(
            f"give --{f_attr.replace('_', '-')} and --{g_attr.replace('_', '-')}, "
            f"or --{preset_attr.replace('_', '-')}"
        )
    return RiordanArray(
        _series_arg(f_text, args, f"--{f_attr}"), _series_arg(g_text, args, f"--{g_attr}")
    )


def _sign_arg(text: str) -> int:
    try:
        sign = int(text)
    except ValueError:
        raise ValidationError(f"sign must be +1 or -1, got {text!r}") from None
    if sign not in (1, -1):
        raise ValidationError(f"sign must be +1 or -1, got {text!r}")
    return sign


def _sequence_arg(name: str, order: int, h) -> PolySequence:
    if name.startswith("@"):
        try:
            text = Path(name[1:]).read_text()
        except OSError as exc:
            raise ValidationError(f"cannot read {name[1:]}: {exc.strerror}") from None
        seq = formats.polyseq_from_obj(formats.loads(text))
        if seq.order != order:
            raise ValidationError(f"sequence file has order {seq.order}, expected {order}")
        return seq
    if name == "laguerre":
        return laguerre(order)
    if name == "neutral":
        return neutral(h)
    if name == "powers":
        return powers_of_x(order)
    if name.startswith("riordan:"):
        return weight(from_riordan(array_preset(name[len("riordan:"):], order)), h)
    raise ValidationError(
        f"unknown sequence {name!r}; use laguerre, neutral, powers, riordan:NAME or @file.json"
    )


# output helpers


class _Out:
    """Collects labelled values and renders them in the requested format."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.items: list[tuple[str, str, object]] = []

    def series(self, key, s: Series):
        self.items.append(("series", key, s))

    def matrix(self, key, m: TriangularMatrix):
        self.items.append(("matrix", key, m))

    def sequence(self, key, p: PolySequence):
        self.items.append(("sequence", key, p))

    def scalar(self, key, value):
        self.items.append(("scalar", key, value))

    def extra(self, key, obj):
        """Raw JSON-ready object; pretty and CSV renderings use ``str``."""
        self.items.append(("extra", key, obj))

    def render(self) -> str:
        return getattr(self, "_render_" + self.fmt)()

    def _render_json(self):
        obj = {}
        for kind, key, value in self.items:
            if kind == "series":
                obj[key] = [formats.rat(c) for c in value]
            elif kind == "matrix":
                obj[key] = formats.matrix_to_obj(value)
            elif kind == "sequence":
                obj[key] = formats.polyseq_to_obj(value)
            else:
                obj[key] = value
        return formats.dumps(obj) + "\n"

    def _render_csv(self):
        lines = []
        for kind, key, value in self.items:
            if kind == "series":
                lines.append(",".join([key] + [formats.rat(c) for c in value]) + "\n")
            elif kind == "matrix":
                lines.append(formats.matrix_to_csv(value))
            elif kind == "sequence":
                lines.append(formats.matrix_to_csv(value.matrix))
            else:
                lines.append(f"{key},{_plain(value)}\n")
        return "".join(lines)

    def _render_pretty(self):
        lines = []
        for kind, key, value in self.items:
            if kind == "series":
                lines.append(f"{key} = {format_series(value)}")
            elif kind == "matrix":
                lines.append(f"{key} (order {value.order}):")
                lines.append(str(value))
            elif kind == "sequence":
                lines.append(f"{key}:")
                for n in range(value.order + 1):
                    poly = Series(value.rows[n], value.order)
                    lines.append(f"  p_{n}(x) = {format_series(poly, big_o=False)}")
            else:
                lines.append(f"{key}: {_plain(value)}")
        return "\n".join(lines) + "\n"


def _plain(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        return "(" + ", ".join(_plain(v) for v in value) + ")"
    return str(value)


def _params_out(out: _Out, p: InvolutionParams) -> None:
    out.series("phi", p.phi)
    out.series("u", p.u)
    out.scalar("sign", p.sign)
    out.scalar("order", p.order)


# commands


def cmd_involve_build(args, out: _Out):
    phi = _series_arg(args.phi, args, "--phi")
    u = _series_arg(args.u, args, "--u")
    t = build_involution(InvolutionParams(phi, u, _sign_arg(args.sign)))
    out.scalar("order", t.order)
    out.series("f", t.f)
    out.series("g", t.g)
    out.matrix("matrix", to_matrix(t))
    out.scalar("involution", "verified")


def cmd_involve_decompose(args, out: _Out):
    t = _array_arg(args)
    p = decompose_involution(t)
    if build_involution(p) != t:
        raise DefectError("rebuilt array differs from the input")
    _params_out(out, p)
    out.scalar("round_trip", "ok")


def _array_out(out: _Out, t: RiordanArray):
    out.scalar("order", t.order)
    out.series("f", t.f)
    out.series("g", t.g)
    out.matrix("matrix", to_matrix(t))


def cmd_riordan_show(args, out):
    t = _array_arg(args)
    _array_out(out, t)


def cmd_riordan_mul(args, out):
    t1 = _array_arg(args)
    t2 = _array_arg(args, "f2", "g2", "array2")
    _array_out(out, multiply(t1, t2))


def cmd_riordan_inv(args, out):
    _array_out(out, inverse(_array_arg(args)))


def cmd_riordan_aseq(args, out):
    out.series("A", a_sequence(_series_arg(args.phi, args, "--phi")))


def cmd_riordan_order(args, out):
    out.scalar("order_probe", probe_order(_array_arg(args), args.max))


def cmd_riordan_pseudo(args, out):
    out.scalar("pseudo_involution", is_pseudo_involution(_array_arg(args)))


def cmd_sheffer_laguerre(args, out):
    if args.n < 0:
        raise ValidationError("--n must be non-negative")
    out.sequence("laguerre", laguerre(args.n))


def cmd_sheffer_compose(args, out):
    h = named_weight(args.weight, args.order)
    p = _sequence_arg(args.p, args.order, h)
    q = _sequence_arg(args.q, args.order, h)
    result = umbral_compose_h(p, q, h)
    out.sequence("composition", result)
    out.scalar("neutral", is_neutral(result, h))


def cmd_sheffer_nfold(args, out):
    if args.times < 1:
        raise ValidationError("--times must be at least 1")
    h = named_weight(args.weight, args.order)
    result = n_fold(_sequence_arg(args.seq, args.order, h), args.times, h)
    out.sequence("n_fold", result)
    out.scalar("neutral", is_neutral(result, h))


def cmd_sheffer_check_prop1(args, out):
    if args.times < 1:
        raise ValidationError("--times must be at least 1")
    d = _array_arg(args, preset_attr="d")
    h = named_weight(args.weight, args.order)
    seq_side, group_side = prop1_equivalence(d, args.times, h)
    if seq_side != group_side:
        raise DefectError("sequence side and group side disagree")
    out.extra("prop1", [seq_side, group_side])
    out.scalar("consistent", True)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER,
                        help="truncation order N (default %(default)s)")
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    def array_flags(p, preset_flag="--array"):
        p.add_argument("--f", help="series literal such as [1,-1/2]")
        p.add_argument("--g", help="series literal")
        p.add_argument(preset_flag, help="array preset: identity, minus-identity, pascal, alternating")

    parser = _Parser(prog="riordan-inv", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    involve = groups.add_parser("involve", help="build or decompose involutions")
    inv_sub = involve.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = inv_sub.add_parser("build", parents=[common])
    p.add_argument("--phi", required=True, help="series literal or preset:alpha-log")
    p.add_argument("--alpha", type=to_rational, help="parameter for preset:alpha-log")
    p.add_argument("--u", default="[0]", help="odd series literal")
    p.add_argument("--sign", default="+1")
    p.set_defaults(func=cmd_involve_build)
    p = inv_sub.add_parser("decompose", parents=[common])
    array_flags(p)
    p.set_defaults(func=cmd_involve_decompose)

    riordan = groups.add_parser("riordan", help="Riordan group operations")
    r_sub = riordan.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, func in (("show", cmd_riordan_show), ("inv", cmd_riordan_inv),
                       ("pseudo", cmd_riordan_pseudo)):
        p = r_sub.add_parser(name, parents=[common])
        array_flags(p)
        p.set_defaults(func=func)
    p = r_sub.add_parser("mul", parents=[common])
    array_flags(p)
    p.add_argument("--f2")
    p.add_argument("--g2")
    p.add_argument("--array2")
    p.set_defaults(func=cmd_riordan_mul)
    p = r_sub.add_parser("aseq", parents=[common])
    p.add_argument("--phi", required=True)
    p.add_argument("--alpha", type=to_rational)
    p.set_defaults(func=cmd_riordan_aseq)
    p = r_sub.add_parser("order", parents=[common])
    array_flags(p)
    p.add_argument("--max", type=int, default=8)
    p.set_defaults(func=cmd_riordan_order)

    sheffer = groups.add_parser("sheffer", help="weighted sequences and umbral composition")
    s_sub = sheffer.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = s_sub.add_parser("laguerre", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sheffer_laguerre)
    p = s_sub.add_parser("compose", parents=[common])
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--weight", default="exp")
    p.set_defaults(func=cmd_sheffer_compose)
    p = s_sub.add_parser("nfold", parents=[common])
    p.add_argument("--seq", required=True)
    p.add_argument("--times", type=int, default=2)
    p.add_argument("--weight", default="exp")
    p.set_defaults(func=cmd_sheffer_nfold)
    p = s_sub.add_parser("check-prop1", parents=[common])
    array_flags(p, preset_flag="--d")
    p.add_argument("--times", type=int, default=2)
    p.add_argument("--weight", default="exp")
    p.set_defaults(func=cmd_sheffer_check_prop1)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.order < 1:
            raise ValidationError("--order must be at least 1")
        out = _Out(args.format)
        args.func(args, out)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except DefectError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DEFECT
    sys.stdout.write(out.render())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
