"""Directed arc diagrams over a boundary line, and their resolution.

Arcs are exact semicircles over rational abscissas, so crossing positions
and all ordering predicates are rational arithmetic.  Resolution replaces
each degree-2 boundary sink with a fed internal sink and each crossing
with a source/sink pair joined by an intersection edge, yielding a
planar web together with the bookkeeping (which arcs an edge toggles,
which edge resolves which intersecting pair) needed for arc-set
distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConcurrentArcs, InvalidBoundaryDegrees, UnknownFace
from .planarweb import ARC, BOUNDARY, INTERSECTION, Edge, PlanarWeb, boundary_face, faces

FIRST = "first"
SECOND = "second"


@dataclass(frozen=True)
class BoundaryVertex:
    label: str
    x: Fraction


@dataclass(frozen=True)
class Arc:
    tail: str
    head: str
    kind: str = FIRST
    crossed: bool = False


@dataclass(frozen=True)
class MDiagram:
    boundary: tuple[BoundaryVertex, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(self, "arcs", tuple(self.arcs))
        labels = [b.label for b in self.boundary]
        if len(set(labels)) != len(labels):
            raise ValueError("boundary labels must be unique")
        xs = [b.x for b in self.boundary]
        if any(xs[i] >= xs[i + 1] for i in range(len(xs) - 1)):
            raise ValueError("boundary abscissas must strictly increase")
        known = set(labels)
        for a in self.arcs:
            if a.tail == a.head:
                raise ValueError("arc endpoints must be distinct")
            if a.tail not in known or a.head not in known:
                raise ValueError(f"arc ({a.tail}, {a.head}) leaves the boundary")

    def x_of(self, label: str) -> Fraction:
        for b in self.boundary:
            if b.label == label:
                return b.x
        raise ValueError(f"no boundary vertex {label}")

    def to_dict(self) -> dict:
        return {
            "boundary": [{"label": b.label, "x": str(b.x)} for b in self.boundary],
            "arcs": [
                {
                    "tail": a.tail,
                    "head": a.head,
                    "kind": a.kind,
                    "crossed": a.crossed,
                }
                for a in self.arcs
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MDiagram":
        boundary = tuple(
            BoundaryVertex(b["label"], Fraction(b["x"])) for b in d["boundary"]
        )
        arcs = tuple(
            Arc(a["tail"], a["head"], a.get("kind", FIRST), a.get("crossed", False))
            for a in d["arcs"]
        )
        return cls(boundary, arcs)


@dataclass(frozen=True)
class Crossing:
    arc_a: Arc
    arc_b: Arc
    x: Fraction


def _span(m: MDiagram, a: Arc) -> tuple[Fraction, Fraction]:
    xa, xb = m.x_of(a.tail), m.x_of(a.head)
    return (xa, xb) if xa < xb else (xb, xa)


def crossings(m: MDiagram) -> tuple[Crossing, ...]:
    """All transversal crossings, with exact rational abscissas.

    Two semicircles cross iff their endpoint intervals strictly
    interleave; a shared endpoint is a tangency, never a crossing.
    Raises ConcurrentArcs if three arcs pass through one point.
    """
    found = []
    for i in range(len(m.arcs)):
        for j in range(i + 1, len(m.arcs)):
            a, b = m.arcs[i], m.arcs[j]
            lo1, hi1 = _span(m, a)
            lo2, hi2 = _span(m, b)
            if not (lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1):
                continue
            c1, r1 = (lo1 + hi1) / 2, (hi1 - lo1) / 2
            c2, r2 = (lo2 + hi2) / 2, (hi2 - lo2) / 2
            x = (c2 * c2 - c1 * c1 + r1 * r1 - r2 * r2) / (2 * (c2 - c1))
            found.append(Crossing(a, b, x))
    per_arc: dict[Arc, list[Fraction]] = {}
    for c in found:
        per_arc.setdefault(c.arc_a, []).append(c.x)
        per_arc.setdefault(c.arc_b, []).append(c.x)
    for arc, xs in per_arc.items():
        if len(set(xs)) != len(xs):
            raise ConcurrentArcs(
                f"three arcs meet at one point on ({arc.tail}, {arc.head})"
            )
    return tuple(sorted(found, key=lambda c: (c.x, m.arcs.index(c.arc_a), m.arcs.index(c.arc_b))))


@dataclass(frozen=True, eq=False)
class Resolution:
    diagram: MDiagram
    web: PlanarWeb
    toggles: tuple[frozenset[Arc], ...]
    pair_edges: tuple[tuple[frozenset[Arc], int], ...]
    boundary_index: dict[str, int]


@lru_cache(maxsize=None)
def _resolution(m: MDiagram) -> Resolution:
    n = len(m.boundary)
    windex = {b.label: i + 1 for i, b in enumerate(m.boundary)}
    tails: dict[str, list[Arc]] = {b.label: [] for b in m.boundary}
    heads: dict[str, list[Arc]] = {b.label: [] for b in m.boundary}
    for a in m.arcs:
        tails[a.tail].append(a)
        heads[a.head].append(a)
    for b in m.boundary:
        shape = (len(tails[b.label]), len(heads[b.label]))
        if shape not in {(1, 0), (0, 2)}:
            raise InvalidBoundaryDegrees(
                f"vertex {b.label} has {shape[0]} outgoing and {shape[1]} incoming arcs"
            )
    sinks = [b.label for b in m.boundary if heads[b.label]]

    all_crossings = crossings(m)
    by_arc: dict[Arc, list[Crossing]] = {a: [] for a in m.arcs}
    for c in all_crossings:
        by_arc[c.arc_a].append(c)
        by_arc[c.arc_b].append(c)
    for a in m.arcs:
        reverse = m.x_of(a.tail) > m.x_of(a.head)
        by_arc[a].sort(key=lambda c: c.x, reverse=reverse)

    next_id = n
    sink_vertex = {}
    for lab in sinks:
        next_id += 1
        sink_vertex[lab] = next_id
    cross_u = {}
    cross_w = {}
    for c in all_crossings:
        cross_u[c] = next_id + 1
        cross_w[c] = next_id + 2
        next_id += 2

    edges: list[Edge] = []
    toggles: list[frozenset[Arc]] = []
    pair_edges: list[tuple[frozenset[Arc], int]] = []

    def add_edge(tail: int, head: int, tag: str, toggle: frozenset[Arc]) -> int:
        edges.append(Edge(tail, head, tag))
        toggles.append(toggle)
        return len(edges) - 1

    source_dart: dict[str, int] = {}
    sink_arc_darts: dict[str, list[tuple[tuple, int]]] = {lab: [] for lab in sinks}
    in_dart: dict[tuple[Crossing, Arc], int] = {}
    out_dart: dict[tuple[Crossing, Arc], int] = {}

    for arc in m.arcs:
        prev_vertex = windex[arc.tail]
        prev_crossing: Crossing | None = None
        x_head = m.x_of(arc.head)
        for c in by_arc[arc] + [None]:
            head_vertex = cross_u[c] if c is not None else sink_vertex[arc.head]
            i = add_edge(prev_vertex, head_vertex, ARC, frozenset({arc}))
            if prev_crossing is None:
                source_dart[arc.tail] = 2 * i
            else:
                out_dart[(prev_crossing, arc)] = 2 * i
            if c is not None:
                in_dart[(c, arc)] = 2 * i + 1
                prev_vertex = cross_w[c]
                prev_crossing = c
            else:
                x_tail = m.x_of(arc.tail)
                key = (0, x_tail) if x_tail > x_head else (1, x_tail)
                sink_arc_darts[arc.head].append((key, 2 * i + 1))

    feed_boundary_dart = {}
    feed_sink_dart = {}
    for lab in sinks:
        pair = frozenset(heads[lab])
        i = add_edge(windex[lab], sink_vertex[lab], ARC, pair)
        pair_edges.append((pair, i))
        feed_boundary_dart[lab] = 2 * i
        feed_sink_dart[lab] = 2 * i + 1

    int_u_dart = {}
    int_w_dart = {}
    for c in all_crossings:
        pair = frozenset({c.arc_a, c.arc_b})
        i = add_edge(cross_w[c], cross_u[c], INTERSECTION, pair)
        pair_edges.append((pair, i))
        int_w_dart[c] = 2 * i
        int_u_dart[c] = 2 * i + 1

    bnd_next = {}
    bnd_prev = {}
    for k in range(1, n + 1):
        nxt = k + 1 if k < n else 1
        i = add_edge(k, nxt, BOUNDARY, frozenset())
        bnd_next[k] = 2 * i
        bnd_prev[nxt] = 2 * i + 1

    rotation: dict[int, tuple[int, ...]] = {}
    for b in m.boundary:
        k = windex[b.label]
        web_dart = (
            source_dart[b.label] if tails[b.label] else feed_boundary_dart[b.label]
        )
        rotation[k] = (bnd_next[k], web_dart, bnd_prev[k])
    for lab in sinks:
        darts = [d for _, d in sorted(sink_arc_darts[lab])]
        rotation[sink_vertex[lab]] = (*darts, feed_sink_dart[lab])
    for c in all_crossings:
        cycle = []
        for arc in sorted(
            (c.arc_a, c.arc_b), key=lambda a: m.x_of(a.tail) + m.x_of(a.head)
        ):
            rightward = m.x_of(arc.tail) < m.x_of(arc.head)
            cycle.append(("out" if rightward else "in", arc))
        for kind, arc in list(cycle):
            cycle.append(("in" if kind == "out" else "out", arc))
        for s in range(4):
            if cycle[s][0] == "in" and cycle[(s + 1) % 4][0] == "in":
                start = s
                break
        ordered = [cycle[(start + t) % 4] for t in range(4)]

        def dart(entry, c=c):
            kind, arc = entry
            return in_dart[(c, arc)] if kind == "in" else out_dart[(c, arc)]

        rotation[cross_u[c]] = (dart(ordered[0]), dart(ordered[1]), int_u_dart[c])
        rotation[cross_w[c]] = (dart(ordered[2]), dart(ordered[3]), int_w_dart[c])

    layout: dict[int, tuple[Fraction, Fraction]] = {}
    for b in m.boundary:
        layout[windex[b.label]] = (b.x, Fraction(0))
    for lab in sinks:
        radii = [
            abs(m.x_of(a.tail) - m.x_of(a.head)) / 2 for a in heads[lab]
        ]
        layout[sink_vertex[lab]] = (m.x_of(lab), min(radii) / 2)
    for c in all_crossings:
        lo, hi = _span(m, c.arc_a)
        ctr, rad = (lo + hi) / 2, (hi - lo) / 2
        y2 = rad * rad - (c.x - ctr) * (c.x - ctr)
        y = Fraction(float(y2) ** 0.5).limit_denominator(10**6)
        layout[cross_u[c]] = (c.x, y * Fraction(9, 10))
        layout[cross_w[c]] = (c.x, y * Fraction(11, 10))

    web = PlanarWeb(n, tuple(edges), rotation, layout)
    return Resolution(m, web, tuple(toggles), tuple(pair_edges), windex)


def resolution(m: MDiagram) -> Resolution:
    return _resolution(m)


def resolve(m: MDiagram) -> PlanarWeb:
    """The planar web obtained by the local changes at sinks and crossings."""
    return _resolution(m).web


@lru_cache(maxsize=None)
def _face_arcs(m: MDiagram) -> dict[frozenset[int], frozenset[Arc]]:
    res = _resolution(m)
    w = res.web
    all_faces = faces(w)
    index = {}
    for i, f in enumerate(all_faces):
        for d in f:
            index[d] = i
    start = index[min(boundary_face(w, 0))]
    sets: dict[int, frozenset[Arc]] = {start: frozenset()}
    frontier = [start]
    while frontier:
        nxt = []
        for fi in frontier:
            for d in all_faces[fi]:
                e = d // 2
                if w.edges[e].tag == BOUNDARY:
                    continue
                gi = index[d ^ 1]
                arcs = sets[fi] ^ res.toggles[e]
                if gi in sets:
                    if sets[gi] != arcs:
                        raise RuntimeError("inconsistent arc sets across faces")
                    continue
                sets[gi] = arcs
                nxt.append(gi)
        frontier = nxt
    return {all_faces[i]: s for i, s in sets.items()}


def arcs_above(m: MDiagram, face: frozenset[int]) -> frozenset[Arc]:
    """The arcs passing over the given face of resolve(m)."""
    table = _face_arcs(m)
    if face not in table:
        raise UnknownFace("not an inner face of the resolved diagram")
    return table[face]


def arc_distance(m: MDiagram, x: frozenset[int], y: frozenset[int]) -> int:
    return len(arcs_above(m, x) ^ arcs_above(m, y))


def coherent_separators(
    m: MDiagram, x: frozenset[int], y: frozenset[int]
) -> frozenset[frozenset[Arc]]:
    """Intersecting arc pairs whose resolution edge faces X and Y sides.

    A pair {a, b} qualifies when X and Y lie (one each) in the two regions
    that the resolution of the intersection makes adjacent; regions are
    identified by restricting a face's arc set to {a, b}.
    """
    sx, sy = arcs_above(m, x), arcs_above(m, y)
    res = _resolution(m)
    table = _face_arcs(m)
    face_of = {}
    for f in table:
        for d in f:
            face_of[d] = f
    out = []
    for pair, e in res.pair_edges:
        f1, f2 = face_of[2 * e], face_of[2 * e + 1]
        sides = {table[f1] & pair, table[f2] & pair}
        if {sx & pair, sy & pair} == sides:
            out.append(pair)
    return frozenset(out)


def mirror_label(label: str) -> str:
    if label == "0":
        return label
    return label[:-1] if label.endswith("'") else label + "'"


def mirror_arc(a: Arc) -> Arc:
    return Arc(mirror_label(a.tail), mirror_label(a.head), a.kind, a.crossed)


def reflected_face(m: MDiagram, face: frozenset[int]) -> frozenset[int]:
    """The face whose arc set is the mirror image of this one's."""
    table = _face_arcs(m)
    if face not in table:
        raise UnknownFace("not an inner face of the resolved diagram")
    want = frozenset(mirror_arc(a) for a in table[face])
    for f, s in table.items():
        if s == want:
            return f
    raise UnknownFace("diagram has no mirror of this face")


def is_between_vertical_pair(
    m: MDiagram, pair: tuple[Arc, Arc], face: frozenset[int]
) -> bool:
    """Exactly one of the pair's two replacement arcs passes over the face."""
    above = arcs_above(m, face)
    return (pair[0] in above) != (pair[1] in above)


def epsilon(m: MDiagram, face: frozenset[int]) -> int:
    """1 if the face is between some vertical pair of crossed arcs."""
    above = arcs_above(m, face)
    present = set(m.arcs)
    for a in m.arcs:
        if not a.crossed:
            continue
        partner = mirror_arc(a)
        if partner not in present:
            continue
        if (a in above) != (partner in above):
            return 1
    return 0
