"""Text and JSON graph formats.

Text, one vertex per line, neighbours in cyclic order::

    v 0 : 1 2 3
    outer : 0 1        # optional: hole is the face whose walk contains dart (0, 1)
    inner : 5 4        # optional second hole for annuli

JSON mirrors it: ``{"rotation": {"0": [1, 2, 3], ...}, "outer": [0, 1], "inner": [5, 4]}``.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import TextIO

from .errors import CurvtessError, MalformedInput
from .planar_map import Patch, PlanarMap, split_holes


def parse_text(text: str) -> PlanarMap | Patch:
    rotation: dict[int, list[int]] = {}
    holes: dict[str, tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise MalformedInput(f"line {lineno}: missing ':'")
        head_parts = head.split()
        try:
            nums = [int(t) for t in tail.split()]
        except ValueError:
            raise MalformedInput(f"line {lineno}: non-integer token") from None
        if head_parts and head_parts[0] == "v" and len(head_parts) == 2:
            try:
                v = int(head_parts[1])
            except ValueError:
                raise MalformedInput(f"line {lineno}: bad vertex id {head_parts[1]!r}") from None
            if v in rotation:
                raise MalformedInput(f"line {lineno}: vertex {v} listed twice")
            rotation[v] = nums
        elif head_parts in (["outer"], ["inner"]):
            if len(nums) != 2:
                raise MalformedInput(f"line {lineno}: {head_parts[0]} needs exactly two vertex ids")
            holes[head_parts[0]] = (nums[0], nums[1])
        else:
            raise MalformedInput(f"line {lineno}: unrecognised line {raw!r}")
    return _assemble(rotation, holes.get("outer"), holes.get("inner"))


def parse_json(text: str | dict) -> PlanarMap | Patch:
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict) or "rotation" not in data:
        raise MalformedInput("JSON graph needs a 'rotation' object")
    try:
        rotation = {int(k): [int(x) for x in v] for k, v in data["rotation"].items()}
    except (TypeError, ValueError, AttributeError):
        raise MalformedInput("rotation must map vertex ids to lists of ids") from None
    outer = data.get("outer")
    inner = data.get("inner")
    return _assemble(rotation, tuple(outer) if outer else None, tuple(inner) if inner else None)


def _assemble(rotation, outer, inner):
    m = PlanarMap(rotation)
    if outer is None:
        if inner is not None:
            raise MalformedInput("'inner' given without 'outer'")
        return m
    try:
        return Patch.from_darts(m, outer, inner)
    except CurvtessError as exc:
        raise MalformedInput(f"bad hole designation: {exc}") from None


def parse(text: str) -> PlanarMap | Patch:
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def read_text(source: str | Path, stdin: TextIO | None = None) -> str:
    if str(source) == "-":
        return (stdin or sys.stdin).read()
    return Path(source).read_text()


def load(source: str | Path, stdin: TextIO | None = None) -> PlanarMap | Patch:
    """Load a graph from a path, or from stdin when ``source`` is ``-``."""
    return parse(read_text(source, stdin))


def _hole_dart(m: PlanarMap, f: int) -> tuple[int, int]:
    return m.dart_ends(m.faces[f][0])


def dumps_text(g: PlanarMap | Patch) -> str:
    m, _ = split_holes(g)
    lines = [f"v {v} : " + " ".join(str(w) for w in m.rotation(v)) for v in m.vertex_ids]
    if isinstance(g, Patch):
        lines.append("outer : %d %d" % _hole_dart(m, g.outer))
        if g.inner is not None:
            lines.append("inner : %d %d" % _hole_dart(m, g.inner))
    return "\n".join(lines) + "\n"


def to_json_obj(g: PlanarMap | Patch) -> dict:
    m, _ = split_holes(g)
    out = {"rotation": {str(v): list(m.rotation(v)) for v in m.vertex_ids}}
    if isinstance(g, Patch):
        out["outer"] = list(_hole_dart(m, g.outer))
        if g.inner is not None:
            out["inner"] = list(_hole_dart(m, g.inner))
    return out


def dumps_json(g: PlanarMap | Patch) -> str:
    return json.dumps(to_json_obj(g))


def dumps_dot(g: PlanarMap | Patch) -> str:
    m, _ = split_holes(g)
    body = "".join(f"  {u} -- {v};\n" for u, v in m.edges())
    return "graph G {\n" + body + "}\n"
