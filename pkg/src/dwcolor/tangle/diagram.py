"""Planar diagrams of tangle closures, for the Fox-coloring oracle.

Conventions (shared with the block engine):

* tangles are drawn with the source at the bottom and the target on top;
* ``IntegralTangle(1)`` is one crossing whose over strand runs from the
  bottom-left to the top-right corner (a positive crossing when both
  strands point up), ``IntegralTangle(-1)`` is its mirror;
* ``rt`` rotates the picture a quarter turn counterclockwise;
* the closure joins top-left to bottom-left and top-right to bottom-right
  by parallel arcs around the side of the diagram.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from ..errors import SchemaError
from .words import IntegralTangle, Rot, VComp

__all__ = ["Crossing", "PlanarDiagram", "closure_trace", "to_pd_json", "from_pd_json"]


@dataclass(frozen=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple
    arcs: tuple
    components: tuple  # tuple of tuples of arc ids
    writhe: int | None

    @property
    def n_components(self):
        return len(self.components)


class _Builder:
    """Port graph of a tangle under construction.

    Every crossing owns four port nodes (under start/end, over start/end)
    together with the direction vectors of its two strands.  Strand
    segments and gluings are plain edges between nodes.
    """

    def __init__(self):
        self.adj = []
        self.crossings = []  # [u0, u1, o0, o1, under_dir, over_dir]

    def node(self):
        self.adj.append([])
        return len(self.adj) - 1

    def edge(self, a, b):
        self.adj[a].append(b)
        self.adj[b].append(a)

    def crossing(self, positive):
        u0, u1, o0, o1 = (self.node() for _ in range(4))
        up_right, up_left = (1, 1), (-1, 1)
        if positive:
            self.crossings.append([u0, u1, o0, o1, up_left, up_right])
            boundary = {"BL": o0, "TR": o1, "BR": u0, "TL": u1}
        else:
            self.crossings.append([u0, u1, o0, o1, up_right, up_left])
            boundary = {"BL": u0, "TR": u1, "BR": o0, "TL": o1}
        return boundary, [len(self.crossings) - 1]

    def straight(self):
        bl, tl, br, tr = (self.node() for _ in range(4))
        self.edge(bl, tl)
        self.edge(br, tr)
        return {"BL": bl, "TL": tl, "BR": br, "TR": tr}, []

    def vcomp(self, upper, lower):
        (ub, uc), (lb, lc) = upper, lower
        self.edge(lb["TL"], ub["BL"])
        self.edge(lb["TR"], ub["BR"])
        return {"BL": lb["BL"], "BR": lb["BR"], "TL": ub["TL"], "TR": ub["TR"]}, lc + uc

    def rot(self, piece):
        b, cs = piece
        for c in cs:
            rec = self.crossings[c]
            rec[4] = (-rec[4][1], rec[4][0])
            rec[5] = (-rec[5][1], rec[5][0])
        return {"BR": b["BL"], "TR": b["BR"], "TL": b["TR"], "BL": b["TL"]}, cs

    def build(self, word):
        if isinstance(word, IntegralTangle):
            m = word.twists
            if m == 0:
                return self.straight()
            piece = self.crossing(m > 0)
            for _ in range(abs(m) - 1):
                piece = self.vcomp(self.crossing(m > 0), piece)
            return piece
        if isinstance(word, VComp):
            lower = self.build(word.lower)
            upper = self.build(word.upper)
            return self.vcomp(upper, lower)
        if isinstance(word, Rot):
            return self.rot(self.build(word.inner))
        raise TypeError(f"not a tangle word: {word!r}")


def _trace(builder):
    """Return (port partner map, number of crossing-free loops)."""
    port_of = {}
    for c, rec in enumerate(builder.crossings):
        for slot in range(4):
            port_of[rec[slot]] = (c, slot)
    partner = {}
    seen = set(port_of)
    for start in port_of:
        if port_of[start] in partner:
            continue
        prev, cur = start, builder.adj[start][0]
        while cur not in port_of:
            seen.add(cur)
            a, b = builder.adj[cur]
            prev, cur = cur, (b if a == prev else a)
        partner[port_of[start]] = port_of[cur]
        partner[port_of[cur]] = port_of[start]
    loops = 0
    for v in range(len(builder.adj)):
        if v in seen:
            continue
        loops += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(builder.adj[x])
    return partner, loops


_THROUGH = {0: 1, 1: 0, 2: 3, 3: 2}


def _diagram(builder):
    partner, loops = _trace(builder)
    ncross = len(builder.crossings)
    done = set()  # (crossing, strand) with strand 0 = under, 1 = over
    passages_by_comp = []
    for c in range(ncross):
        for strand in (0, 1):
            if (c, strand) in done:
                continue
            # leave crossing c along this strand in its stored direction
            seq = []
            cur = (c, 2 * strand + 1)
            seq.append((c, strand, +1))
            done.add((c, strand))
            while True:
                c2, slot = partner[cur]
                strand2 = slot // 2
                direction = +1 if slot % 2 == 0 else -1
                if (c2, strand2) in done:
                    break
                done.add((c2, strand2))
                seq.append((c2, strand2, direction))
                cur = (c2, _THROUGH[slot])
            passages_by_comp.append(seq)

    records = [dict() for _ in range(ncross)]
    arc = 0
    for seq in passages_by_comp:
        unders = [i for i, p in enumerate(seq) if p[1] == 0]
        if not unders:
            for c, _, d in seq:
                records[c]["over"] = arc
                records[c]["odir"] = d
            arc += 1
            continue
        k = unders[0]
        seq = seq[k + 1:] + seq[:k + 1]
        first = arc
        for i, (c, strand, d) in enumerate(seq):
            if strand == 1:
                records[c]["over"] = arc
                records[c]["odir"] = d
            else:
                records[c]["under_in"] = arc
                records[c]["udir"] = d
                if i == len(seq) - 1:
                    records[c]["under_out"] = first
                else:
                    arc += 1
                    records[c]["under_out"] = arc
        arc += 1
    arc += loops  # crossing-free circles are single arcs

    crossings = []
    for c, rec in enumerate(builder.crossings):
        r = records[c]
        ux, uy = rec[4]
        ox, oy = rec[5]
        ux, uy = ux * r["udir"], uy * r["udir"]
        ox, oy = ox * r["odir"], oy * r["odir"]
        sign = 1 if ox * uy - oy * ux > 0 else -1
        crossings.append(Crossing(r["over"], r["over"], r["under_in"], r["under_out"], sign))
    arcs = tuple(range(arc))
    components = _components_from(arcs, crossings)
    writhe = sum(x.sign for x in crossings) if len(components) == 1 else None
    return PlanarDiagram(tuple(crossings), arcs, components, writhe)


def closure_trace(word):
    """Diagram of the closure of ``word``."""
    b = _Builder()
    boundary, _ = b.build(word)
    b.edge(boundary["TL"], boundary["BL"])
    b.edge(boundary["TR"], boundary["BR"])
    return _diagram(b)


def to_pd_json(diagram):
    payload = {
        "n_components": diagram.n_components,
        "writhe": diagram.writhe,
        "arcs": list(diagram.arcs),
        "crossings": [
            {
                "over_in": x.over_in,
                "over_out": x.over_out,
                "under_in": x.under_in,
                "under_out": x.under_out,
                "sign": x.sign,
            }
            for x in diagram.crossings
        ],
    }
    return json.dumps(payload)


_CROSSING_KEYS = ("over_in", "over_out", "under_in", "under_out", "sign")


def _components_from(arcs, crossings):
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in crossings:
        parent[find(x.under_in)] = find(x.under_out)
    groups = {}
    for a in arcs:
        groups.setdefault(find(a), []).append(a)
    return tuple(tuple(g) for g in sorted(groups.values()))


def from_pd_json(text):
    """Parse the JSON emitted by :func:`to_pd_json`, validating its structure."""
    try:
        data = json.loads(text)
    except (TypeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    for key in ("n_components", "writhe", "arcs", "crossings"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    arcs = data["arcs"]
    if not isinstance(arcs, list) or not all(type(a) is int for a in arcs):
        raise SchemaError("arcs must be a list of integers")
    if len(set(arcs)) != len(arcs):
        raise SchemaError("duplicate arc ids")
    arcset = set(arcs)
    if not isinstance(data["crossings"], list):
        raise SchemaError("crossings must be a list")
    crossings = []
    for i, raw in enumerate(data["crossings"]):
        if not isinstance(raw, dict) or set(raw) != set(_CROSSING_KEYS):
            raise SchemaError(f"crossing {i} must have exactly the keys {_CROSSING_KEYS}")
        if any(type(raw[k]) is not int for k in _CROSSING_KEYS):
            raise SchemaError(f"crossing {i} has non-integer fields")
        if raw["sign"] not in (1, -1):
            raise SchemaError(f"crossing {i} has sign {raw['sign']}")
        for k in _CROSSING_KEYS[:4]:
            if raw[k] not in arcset:
                raise SchemaError(f"crossing {i} references unknown arc {raw[k]}")
        if raw["over_in"] != raw["over_out"]:
            raise SchemaError(f"crossing {i}: over strand must be a single arc")
        crossings.append(Crossing(*(raw[k] for k in _CROSSING_KEYS)))
    ins = [x.under_in for x in crossings]
    outs = [x.under_out for x in crossings]
    if len(set(ins)) != len(ins) or len(set(outs)) != len(outs) or set(ins) != set(outs):
        raise SchemaError("each arc must end at most once and start exactly where one ends")
    components = _components_from(arcs, crossings)
    if data["n_components"] != len(components):
        raise SchemaError(f"n_components={data['n_components']} but arcs form {len(components)} components")
    writhe = data["writhe"]
    if writhe is not None and type(writhe) is not int:
        raise SchemaError("writhe must be an integer or null")
    if len(components) == 1 and writhe != sum(x.sign for x in crossings):
        raise SchemaError("writhe does not match crossing signs")
    if len(components) != 1 and writhe is not None:
        raise SchemaError("writhe is only defined for knots")
    return PlanarDiagram(tuple(crossings), tuple(arcs), components, writhe)
