"""Module files (JSON), DOT export of shift graphs and SVG staircase plots.

Module file layout::

    {"dim": 2, "summands": [{"generators": [["0", "0"]]},
                            {"generators": [["2", "-1"], ["0", "3"]]}]}

Coordinates are rational strings ``"p/q"`` or ``"n"``; floats are refused so
that threshold ties survive a round trip.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Sequence

from .modules import Module
from .pruning import ShiftGraph
from .upsets import DimensionMismatch, EmptyGenerators, Upset


class ParseError(ValueError):
    """Malformed input: bad JSON, bad rational literal, wrong shapes."""


class ValidationError(ValueError):
    """Well-formed input that violates a module invariant."""


_RATIONAL = re.compile(r"\s*(-?\d+)(?:/(\d+))?\s*\Z")


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"rationals must be strings, got {text!r}")
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"malformed rational {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def module_from_obj(obj) -> Module:
    if not isinstance(obj, dict) or "dim" not in obj or "summands" not in obj:
        raise ParseError('expected an object with "dim" and "summands"')
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError(f"dim must be an integer, got {dim!r}")
    if dim < 1:
        raise ValidationError(f"dim must be >= 1, got {dim}")
    if not isinstance(obj["summands"], list):
        raise ParseError("summands must be a list")
    summands = []
    for k, s in enumerate(obj["summands"]):
        gens = s.get("generators") if isinstance(s, dict) else None
        if not isinstance(gens, list):
            raise ParseError(f"summand {k}: expected {{\"generators\": [...]}}")
        points = []
        for g in gens:
            if not isinstance(g, list):
                raise ParseError(f"summand {k}: generator {g!r} is not a list")
            if len(g) != dim:
                raise ValidationError(f"summand {k}: generator {g!r} has {len(g)} coords, dim is {dim}")
            points.append(tuple(parse_rational(c) for c in g))
        try:
            summands.append(Upset.from_points(points))
        except EmptyGenerators as e:
            raise ValidationError(f"summand {k}: {e}") from None
    return Module(dim, tuple(summands))


def module_to_obj(M: Module) -> dict:
    return {
        "dim": M.dim,
        "summands": [
            {"generators": [[format_rational(c) for c in g] for g in U.generators]}
            for U in M.canonical()
        ],
    }


def loads(text: str) -> Module:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return module_from_obj(obj)


def dumps(M: Module) -> str:
    return json.dumps(module_to_obj(M), indent=2) + "\n"


def read_module(path) -> Module:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_module(M: Module, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(M))


def to_dot(G: ShiftGraph) -> str:
    lines = ["digraph G {"]
    lines += [f'  "M{i + 1}";' for i in range(G.r)]
    for i, j in G.edges():
        lines.append(f'  "M{i + 1}" -> "M{j + 1}" [label="t={G.thresholds[i][j]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]


def _num(x) -> str:
    s = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def to_svg(modules: Sequence[Module], size: int = 400, margin: int = 20) -> str:
    """Staircase boundaries of every summand of planar modules.

    The view is the bounding box of all generators padded by 1. One colour
    per summand index; the k-th module is drawn with dash pattern k.
    """
    if any(M.dim != 2 for M in modules):
        raise ValidationError("plotting supports dim = 2 only")
    gens = [g for M in modules for U in M for g in U.generators]
    if not gens:
        raise ValidationError("nothing to plot: all modules are zero")
    x0 = min(g[0] for g in gens) - 1
    x1 = max(g[0] for g in gens) + 1
    y0 = min(g[1] for g in gens) - 1
    y1 = max(g[1] for g in gens) + 1
    scale = Fraction(size - 2 * margin) / max(x1 - x0, y1 - y0)

    def sx(x):
        return margin + (x - x0) * scale

    def sy(y):
        return size - margin - (y - y0) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    for m, M in enumerate(modules):
        dash = "" if m == 0 else f' stroke-dasharray="{4 * m},{3 * m}"'
        for l, U in enumerate(M):
            pts = sorted(U.generators)
            path = [(pts[0][0], y1)]
            for k, (gx, gy) in enumerate(pts):
                path.append((gx, gy))
                nxt = pts[k + 1][0] if k + 1 < len(pts) else x1
                path.append((nxt, gy))
            coords = " ".join(f"{_num(sx(x))},{_num(sy(y))}" for x, y in path)
            out.append(
                f'<polyline points="{coords}" fill="none" stroke="{PALETTE[l % len(PALETTE)]}" '
                f'stroke-width="2"{dash}/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


__all__ = [
    "ParseError",
    "ValidationError",
    "DimensionMismatch",
    "parse_rational",
    "format_rational",
    "loads",
    "dumps",
    "read_module",
    "write_module",
    "to_dot",
    "to_svg",
]
