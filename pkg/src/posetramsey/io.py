"""JSON and DOT formats for posets, subposets, colorings and reports.

Abstract posets: ``{"elements": [names], "covers": [[i, j], ...]}`` where
``[i, j]`` means element i is covered by element j.  Subposets of a Boolean
lattice: ``{"ground": [labels], "vertices": [[member labels], ...]}``.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from .core import Coloring, GroundSet, Poset, Subposet, bits_of
from .errors import InvalidInput


class ParseError(InvalidInput):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


def _expect(cond, where, message):
    if not cond:
        raise ParseError(where, message)


def poset_from_json(data, where: str = "<input>") -> Poset:
    _expect(isinstance(data, dict), where, "expected a JSON object")
    _expect("elements" in data, where, 'missing key "elements"')
    elems = data["elements"]
    _expect(isinstance(elems, list), f"{where}.elements", "expected a list")
    covers = data.get("covers", [])
    _expect(isinstance(covers, list), f"{where}.covers", "expected a list")
    pairs = []
    for k, c in enumerate(covers):
        loc = f"{where}.covers[{k}]"
        _expect(isinstance(c, list) and len(c) == 2, loc, "expected a pair [i, j]")
        _expect(all(isinstance(x, int) and not isinstance(x, bool) for x in c), loc, "indices must be integers")
        pairs.append((c[0], c[1]))
    try:
        return Poset.from_covers(len(elems), pairs, tuple(str(e) for e in elems))
    except InvalidInput as exc:
        raise ParseError(where, str(exc)) from None


def poset_to_json(p: Poset) -> dict:
    return {"elements": list(p.names), "covers": [list(c) for c in p.covers()]}


def subposet_from_json(data, where: str = "<input>") -> Subposet:
    _expect(isinstance(data, dict), where, "expected a JSON object")
    for key in ("ground", "vertices"):
        _expect(key in data, where, f'missing key "{key}"')
    _expect(isinstance(data["ground"], list), f"{where}.ground", "expected a list")
    _expect(isinstance(data["vertices"], list), f"{where}.vertices", "expected a list")
    try:
        ground = GroundSet(tuple(str(x) for x in data["ground"]))
        verts = []
        for k, v in enumerate(data["vertices"]):
            loc = f"{where}.vertices[{k}]"
            _expect(isinstance(v, list), loc, "expected a list of labels")
            try:
                m = ground.mask(v)
            except InvalidInput as exc:
                raise ParseError(loc, str(exc)) from None
            _expect(m.bit_count() == len(v), loc, "repeated label in vertex")
            verts.append(m)
        return Subposet(ground, tuple(verts))
    except ParseError:
        raise
    except InvalidInput as exc:
        raise ParseError(where, str(exc)) from None


def subposet_to_json(f: Subposet) -> dict:
    return {"ground": list(f.ground.labels), "vertices": [f.ground.labels_of(v) for v in f.vertices]}


def coloring_to_json(c: Coloring) -> dict:
    g = c.ground
    return {
        "ground": list(g.labels),
        "red": [g.labels_of(v) for v in range(1 << g.size) if c.red >> v & 1],
        "blue": [g.labels_of(v) for v in range(1 << g.size) if c.blue >> v & 1],
    }


def read_json(path) -> tuple[object, bytes]:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise ParseError(str(path), f"cannot read file ({exc.strerror})") from None
    try:
        return json.loads(raw), raw
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def load_poset(path) -> tuple[Poset, bytes]:
    data, raw = read_json(path)
    return poset_from_json(data, str(path)), raw


def load_subposet(path) -> tuple[Subposet, bytes]:
    data, raw = read_json(path)
    return subposet_from_json(data, str(path)), raw


def digest(*chunks: bytes) -> str:
    h = hashlib.sha256()
    for c in chunks:
        h.update(c)
    return h.hexdigest()


def dumps(obj) -> str:
    """Deterministic JSON text used for every report."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_to_dot(p: Poset, name: str = "P") -> str:
    """Hasse diagram; edges point upward so minimal elements sit at the bottom."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for i in range(p.n):
        lines.append(f"  n{i} [label={_quote(p.names[i])}];")
    for a, b in p.covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subposet_to_dot(f: Subposet, name: str = "F", marked=()) -> str:
    """Hasse diagram of an induced subposet; vertices in `marked` are boxed."""
    marked = set(marked)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for i, v in enumerate(f.vertices):
        extra = ", shape=box, style=bold" if v in marked else ""
        lines.append(f"  v{i} [label={_quote(f.ground.format(v))}{extra}];")
    for i in range(len(f)):
        above = f.up[i]
        for j in bits_of(above):
            if not above & f.down[j]:
                lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
