"""Planar combinatorial maps on a disk, with faces and dual distances.

A web is stored as a rotation system: edge i owns darts 2i (at its tail)
and 2i+1 (at its head), and every vertex lists its darts in
counterclockwise order.  Boundary vertices are labeled 1..N and joined in
a circle by edges tagged "boundary"; those edges close the disk so that
face walks and rotations are total, but they act as walls for distances.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownFace

BOUNDARY = "boundary"
ARC = "arc"
INTERSECTION = "intersection"


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    tag: str = ARC


@dataclass(frozen=True, eq=False)
class PlanarWeb:
    n_boundary: int
    edges: tuple[Edge, ...]
    rotation: dict[int, tuple[int, ...]]
    layout: dict[int, tuple[Fraction, Fraction]] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        seen: dict[int, int] = {}
        for v, darts in self.rotation.items():
            for d in darts:
                if d in seen:
                    raise ValueError(f"dart {d} listed twice")
                seen[d] = v
        if sorted(seen) != list(range(2 * len(self.edges))):
            raise ValueError("rotation darts do not cover the edge list")
        for d, v in seen.items():
            if self.origin(d) != v:
                raise ValueError(f"dart {d} listed at {v}, not its endpoint")
        for k in range(1, self.n_boundary + 1):
            if k not in self.rotation:
                raise ValueError(f"boundary vertex {k} missing")

    def origin(self, d: int) -> int:
        e = self.edges[d // 2]
        return e.tail if d % 2 == 0 else e.head

    def dart_edge(self, d: int) -> Edge:
        return self.edges[d // 2]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    @property
    def internal_count(self) -> int:
        return len(self.rotation) - self.n_boundary

    def to_dict(self) -> dict:
        d = {
            "n": self.n_boundary,
            "internal": self.internal_count,
            "edges": [
                {"from": e.tail, "to": e.head, "tag": e.tag} for e in self.edges
            ],
            "rotation": {str(v): list(ds) for v, ds in sorted(self.rotation.items())},
        }
        if self.layout:
            d["layout"] = {
                str(v): [str(x), str(y)] for v, (x, y) in sorted(self.layout.items())
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PlanarWeb":
        edges = tuple(Edge(e["from"], e["to"], e["tag"]) for e in d["edges"])
        rotation = {int(v): tuple(ds) for v, ds in d["rotation"].items()}
        layout = None
        if "layout" in d:
            layout = {
                int(v): (Fraction(x), Fraction(y))
                for v, (x, y) in d["layout"].items()
            }
        return cls(d["n"], edges, rotation, layout)


def next_face_dart(w: PlanarWeb, d: int) -> int:
    """The dart after d along the face on d's left."""
    t = d ^ 1
    rot = w.rotation[w.origin(t)]
    return rot[rot.index(t) - 1]


def faces(w: PlanarWeb) -> list[frozenset[int]]:
    out = []
    unseen = set(range(2 * len(w.edges)))
    while unseen:
        d0 = min(unseen)
        orbit = []
        d = d0
        while True:
            orbit.append(d)
            unseen.discard(d)
            d = next_face_dart(w, d)
            if d == d0:
                break
        out.append(frozenset(orbit))
    return out


def exterior_face(w: PlanarWeb) -> frozenset[int]:
    """The face outside the boundary circle: all its darts are boundary darts."""
    for f in faces(w):
        if all(w.dart_edge(d).tag == BOUNDARY for d in f):
            return f
    raise UnknownFace("no exterior face; boundary circle is broken")


def boundary_face(w: PlanarWeb, k: int) -> frozenset[int]:
    """B_k, the inner face touching boundary vertices k and k+1 (B_0 = B_N)."""
    n = w.n_boundary
    if not (0 <= k <= n):
        raise UnknownFace(f"boundary face index {k} outside 0..{n}")
    pair = {k, k + 1} if 1 <= k < n else {n, 1}
    for i, e in enumerate(w.edges):
        if e.tag == BOUNDARY and {e.tail, e.head} == pair:
            ext = exterior_face(w)
            for d in (2 * i, 2 * i + 1):
                f = _face_of(w, d)
                if f != ext:
                    return f
    raise UnknownFace(f"no boundary edge between {sorted(pair)}")


def _face_of(w: PlanarWeb, d0: int) -> frozenset[int]:
    orbit = []
    d = d0
    while True:
        orbit.append(d)
        d = next_face_dart(w, d)
        if d == d0:
            break
    return frozenset(orbit)


def web_distance(w: PlanarWeb, x: frozenset[int], y: frozenset[int]) -> int:
    """Fewest non-boundary edges separating faces x and y in the dual."""
    all_faces = faces(w)
    if x not in all_faces or y not in all_faces:
        raise UnknownFace("argument is not a face of this web")
    if x == y:
        return 0
    index = {}
    for i, f in enumerate(all_faces):
        for d in f:
            index[d] = i
    adj: list[set[int]] = [set() for _ in all_faces]
    for i, e in enumerate(w.edges):
        if e.tag != BOUNDARY:
            a, b = index[2 * i], index[2 * i + 1]
            adj[a].add(b)
            adj[b].add(a)
    start, goal = index[min(x)], index[min(y)]
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for g in adj[f]:
                if g not in dist:
                    dist[g] = dist[f] + 1
                    if g == goal:
                        return dist[g]
                    nxt.append(g)
        frontier = nxt
    raise UnknownFace("faces lie in different dual components")


@dataclass(frozen=True)
class WebReport:
    ok: bool
    violations: tuple[str, ...]


def validate_3web(w: PlanarWeb) -> WebReport:
    """Check the defining conditions; violations are reported, not raised."""
    bad: list[str] = []
    n = w.n_boundary
    if n % 3 != 0 or n == 0:
        bad.append(f"boundary count {n} is not a positive multiple of 3")
    for k in range(1, n + 1):
        darts = [d for d in w.rotation.get(k, ()) if w.dart_edge(d).tag != BOUNDARY]
        if len(darts) != 1:
            bad.append(f"boundary vertex {k} has web-degree {len(darts)}")
        elif darts[0] % 2 != 0:
            bad.append(f"boundary vertex {k} is not a source")
    for v, rot in w.rotation.items():
        if 1 <= v <= n:
            continue
        web_darts = [d for d in rot if w.dart_edge(d).tag != BOUNDARY]
        if len(rot) != 3 or len(web_darts) != 3:
            bad.append(f"internal vertex {v} has degree {len(rot)}")
            continue
        outs = {d % 2 == 0 for d in web_darts}
        if len(outs) != 1:
            bad.append(f"internal vertex {v} is neither a source nor a sink")
    reachable = set()
    stack = [min(w.rotation)] if w.rotation else []
    while stack:
        v = stack.pop()
        if v in reachable:
            continue
        reachable.add(v)
        for d in w.rotation[v]:
            stack.append(w.origin(d ^ 1))
    if reachable != set(w.rotation):
        bad.append("web is not connected")
    else:
        for f in faces(w):
            if any(w.dart_edge(d).tag == BOUNDARY for d in f):
                continue
            if len(f) < 6:
                bad.append(
                    f"internal face with {len(f)} sides: darts {sorted(f)}"
                )
    return WebReport(not bad, tuple(bad))


def euler_characteristic(w: PlanarWeb) -> int:
    return len(w.rotation) - len(w.edges) + len(faces(w))


@dataclass(frozen=True)
class CanonicalWebForm:
    serialization: bytes
    digest: str


def _canonical_order(w: PlanarWeb) -> tuple[list[int], dict[int, int], dict[int, int]]:
    """Visit order, canonical names, and start darts for every vertex."""
    n = w.n_boundary
    names = {k: k for k in range(1, n + 1)}
    start: dict[int, int] = {}
    for k in range(1, n + 1):
        nxt = k + 1 if k < n else 1
        for d in w.rotation[k]:
            e = w.dart_edge(d)
            if e.tag == BOUNDARY and {e.tail, e.head} == {k, nxt}:
                start[k] = d
                break
        else:
            raise ValueError(f"no boundary edge from {k} to {nxt}")
    order = list(range(1, n + 1))
    queue = list(order)
    while queue:
        v = queue.pop(0)
        rot = w.rotation[v]
        i = rot.index(start[v])
        for d in rot[i:] + rot[:i]:
            u = w.origin(d ^ 1)
            if u not in names:
                names[u] = len(names) + 1
                start[u] = d ^ 1
                order.append(u)
                queue.append(u)
    if len(names) != len(w.rotation):
        raise ValueError("web is not connected; canonical form undefined")
    return order, names, start


def canonical(w: PlanarWeb) -> CanonicalWebForm:
    """Byte-stable form equal for boundary-label-preserving isomorphic webs."""
    order, names, start = _canonical_order(w)
    rotated: dict[int, tuple[int, ...]] = {}
    for v in order:
        rot = w.rotation[v]
        i = rot.index(start[v])
        rotated[v] = rot[i:] + rot[:i]
    position = {d: i for v in order for i, d in enumerate(rotated[v])}
    entries = []
    for v in order:
        row = []
        for d in rotated[v]:
            e = w.dart_edge(d)
            # arc and intersection edges are interchangeable drawing artifacts,
            # so only the boundary/web distinction is serialized
            kind = "b" if e.tag == BOUNDARY else "w"
            out = 0 if e.tag == BOUNDARY else (1 if d % 2 == 0 else 2)
            row.append((names[w.origin(d ^ 1)], kind, out, position[d ^ 1]))
        entries.append((names[v], tuple(row)))
    blob = repr((w.n_boundary, tuple(entries))).encode()
    return CanonicalWebForm(blob, hashlib.sha256(blob).hexdigest())


def rotate(w: PlanarWeb) -> PlanarWeb:
    """Relabel boundary vertices k to k-1 (label 1 wraps to N)."""
    n = w.n_boundary

    def m(v: int) -> int:
        if 1 <= v <= n:
            return v - 1 if v > 1 else n
        return v

    edges = tuple(Edge(m(e.tail), m(e.head), e.tag) for e in w.edges)
    rotation = {m(v): rot for v, rot in w.rotation.items()}
    return PlanarWeb(n, edges, rotation)


def reflect(w: PlanarWeb) -> PlanarWeb:
    """Mirror: relabel k to N+1-k and reverse every rotation order."""
    n = w.n_boundary

    def m(v: int) -> int:
        return n + 1 - v if 1 <= v <= n else v

    edges = tuple(Edge(m(e.tail), m(e.head), e.tag) for e in w.edges)
    rotation = {m(v): tuple(reversed(rot)) for v, rot in w.rotation.items()}
    return PlanarWeb(n, edges, rotation)


def is_symmetrical(w: PlanarWeb) -> bool:
    return canonical(reflect(w)) == canonical(w)
