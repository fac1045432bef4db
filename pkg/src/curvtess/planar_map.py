"""Combinatorial maps on the sphere given by rotation systems.

A map is stored as darts (directed edges). Darts leaving a vertex are numbered
consecutively in rotation order, so the target array doubles as a CSR
adjacency list. Faces are traced with the rule: the successor of dart (u, v)
is (v, w) where w immediately follows u in the rotation at v.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import InvalidArgument, MalformedInput, NonSphericalEmbedding

__all__ = [
    "PlanarMap",
    "Patch",
    "Check",
    "ValidationReport",
    "from_rotation_system",
    "from_faces",
    "mirror",
    "validate_tessellation",
    "face_degrees",
    "dual_adjacency",
    "graph_distance",
    "split_holes",
    "normalize_cycle",
]


def _frozen(a):
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class PlanarMap:
    """Immutable rotation system of a connected simple graph embedded in the sphere."""

    __slots__ = (
        "vertex_ids", "index", "origin", "target", "rev", "rnext", "rprev",
        "first", "face_next", "face_of", "faces", "_dart_of",
    )

    def __init__(self, rotation: Mapping[int, Sequence[int]]):
        if not rotation:
            raise MalformedInput("empty rotation system")
        try:
            ids = sorted(int(v) for v in rotation)
        except (TypeError, ValueError) as exc:
            raise MalformedInput(f"vertex ids must be integers: {exc}") from None
        if ids and ids[0] < 0:
            raise MalformedInput("vertex ids must be nonnegative")
        rot = {int(v): [int(w) for w in nbrs] for v, nbrs in rotation.items()}
        index = {v: i for i, v in enumerate(ids)}

        origin, target, first = [], [], [0]
        for v in ids:
            nbrs = rot[v]
            if not nbrs:
                raise MalformedInput(f"vertex {v} has no neighbours")
            if len(set(nbrs)) != len(nbrs):
                raise MalformedInput(f"vertex {v} lists a neighbour twice")
            for w in nbrs:
                if w == v:
                    raise MalformedInput(f"self-loop at vertex {v}")
                if w not in index:
                    raise MalformedInput(f"vertex {v} lists unknown neighbour {w}")
                origin.append(index[v])
                target.append(index[w])
            first.append(len(origin))

        dart_of = {(o, t): d for d, (o, t) in enumerate(zip(origin, target))}
        n = len(origin)
        rev = np.empty(n, dtype=np.int64)
        rnext = np.empty(n, dtype=np.int64)
        rprev = np.empty(n, dtype=np.int64)
        for d in range(n):
            back = dart_of.get((target[d], origin[d]))
            if back is None:
                raise MalformedInput(
                    f"asymmetric adjacency: {ids[origin[d]]} lists {ids[target[d]]} but not conversely")
            rev[d] = back
        for i in range(len(ids)):
            lo, hi = first[i], first[i + 1]
            k = hi - lo
            for j in range(k):
                rnext[lo + j] = lo + (j + 1) % k
                rprev[lo + j] = lo + (j - 1) % k

        face_next = rnext[rev]
        face_of = kernels.trace_faces(face_next)
        nf = int(face_of.max()) + 1
        starts = np.full(nf, -1, dtype=np.int64)
        for d in range(n - 1, -1, -1):
            starts[face_of[d]] = d
        faces = []
        for s in starts:
            walk = [int(s)]
            x = int(face_next[s])
            while x != s:
                walk.append(x)
                x = int(face_next[x])
            faces.append(tuple(walk))

        self.vertex_ids = tuple(ids)
        self.index = index
        self.origin = _frozen(origin)
        self.target = _frozen(target)
        self.rev = _frozen(rev)
        self.rnext = _frozen(rnext)
        self.rprev = _frozen(rprev)
        self.first = _frozen(first)
        self.face_next = _frozen(face_next)
        self.face_of = _frozen(face_of)
        self.faces = tuple(faces)
        self._dart_of = dart_of

        chi = self.n_vertices - self.n_edges + self.n_faces
        if chi != 2:
            raise NonSphericalEmbedding(
                f"V - E + F = {self.n_vertices} - {self.n_edges} + {self.n_faces} = {chi}, expected 2")

    # -- sizes
    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    @property
    def n_darts(self) -> int:
        return int(self.origin.shape[0])

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    # -- lookups
    def _idx(self, v: int) -> int:
        try:
            return self.index[v]
        except (KeyError, TypeError):
            raise InvalidArgument(f"unknown vertex {v!r}") from None

    def has_vertex(self, v: int) -> bool:
        return v in self.index

    def dart(self, u: int, v: int) -> int:
        d = self._dart_of.get((self._idx(u), self._idx(v)))
        if d is None:
            raise InvalidArgument(f"no edge {u}-{v}")
        return d

    def dart_ends(self, d: int) -> tuple[int, int]:
        return self.vertex_ids[self.origin[d]], self.vertex_ids[self.target[d]]

    def out_darts(self, v: int) -> range:
        i = self._idx(v)
        return range(int(self.first[i]), int(self.first[i + 1]))

    def degree(self, v: int) -> int:
        i = self._idx(v)
        return int(self.first[i + 1] - self.first[i])

    def rotation(self, v: int) -> tuple[int, ...]:
        return tuple(self.vertex_ids[self.target[d]] for d in self.out_darts(v))

    def rotation_dict(self) -> dict[int, list[int]]:
        return {v: list(self.rotation(v)) for v in self.vertex_ids}

    def neighbors(self, v: int) -> frozenset:
        return frozenset(self.rotation(v))

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as (u, v) with u < v, sorted."""
        out = []
        for d in range(self.n_darts):
            u, v = self.dart_ends(d)
            if u < v:
                out.append((u, v))
        return sorted(out)

    def face_degree(self, f: int) -> int:
        return len(self.faces[f])

    def face_vertices(self, f: int) -> tuple[int, ...]:
        """Vertex cycle of face ``f`` in walk order."""
        return tuple(self.vertex_ids[self.origin[d]] for d in self.faces[f])

    def faces_at(self, v: int) -> tuple[int, ...]:
        """Faces around ``v``, one per corner, in rotation order."""
        return tuple(int(self.face_of[d]) for d in self.out_darts(v))

    def face_of_dart(self, u: int, v: int) -> int:
        return int(self.face_of[self.dart(u, v)])

    def face_cycles(self) -> list[tuple[int, ...]]:
        """Faces as vertex cycles, each rotated to start at its least vertex, sorted."""
        return sorted(normalize_cycle(self.face_vertices(f)) for f in range(self.n_faces))

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self.first, self.target

    def __repr__(self) -> str:
        return f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"


def normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    k = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[k:]) + tuple(cycle[:k])


def from_rotation_system(spec: Mapping[int, Sequence[int]]) -> PlanarMap:
    return PlanarMap(spec)


def from_faces(faces: Iterable[Sequence[int]]) -> PlanarMap:
    """Build a map from consistently oriented face boundary cycles.

    Every directed edge must occur in exactly one face and its reverse in
    another occurrence, so that each face walk is traced back exactly.
    """
    succ: dict[int, dict[int, int]] = defaultdict(dict)
    seen = set()
    for face in faces:
        face = [int(x) for x in face]
        k = len(face)
        if k < 2:
            raise MalformedInput(f"face {face} too short")
        for i in range(k):
            u, v, w = face[i - 1], face[i], face[(i + 1) % k]
            if (u, v) in seen:
                raise MalformedInput(f"directed edge {u}->{v} used by two faces")
            seen.add((u, v))
            if u in succ[v]:
                raise MalformedInput(f"corner {u}-{v} appears twice")
            succ[v][u] = w
    for u, v in seen:
        if (v, u) not in seen:
            raise MalformedInput(f"edge {u}-{v} bounds only one face side")
    rotation = {}
    for v, nxt in succ.items():
        start = min(nxt)
        order = [start]
        x = nxt[start]
        while x != start:
            order.append(x)
            if len(order) > len(nxt):
                break
            x = nxt[x]
        if len(order) != len(nxt):
            raise MalformedInput(f"faces around vertex {v} do not form a single disk")
        rotation[v] = order
    return PlanarMap(rotation)


def mirror(m: PlanarMap) -> PlanarMap:
    return PlanarMap({v: list(reversed(m.rotation(v))) for v in m.vertex_ids})


@dataclass(frozen=True)
class Patch:
    """A map with one or two designated hole faces standing in for the unseen exterior.

    ``outer`` is the boundary glued outward; ``inner`` is present for annuli and is
    the boundary glued onto a core.
    """

    map: PlanarMap
    outer: int
    inner: int | None = None

    def __post_init__(self):
        nf = self.map.n_faces
        for f in self.holes:
            if not 0 <= f < nf:
                raise MalformedInput(f"hole face {f} does not exist")
            cyc = self.map.face_vertices(f)
            if len(set(cyc)) != len(cyc):
                raise MalformedInput(f"boundary walk of face {f} is not a simple cycle")
        if self.inner is not None and self.inner == self.outer:
            raise MalformedInput("inner and outer boundary coincide")

    @classmethod
    def from_darts(cls, m: PlanarMap, outer: tuple[int, int], inner: tuple[int, int] | None = None) -> "Patch":
        fo = m.face_of_dart(*outer)
        fi = None if inner is None else m.face_of_dart(*inner)
        return cls(m, fo, fi)

    @property
    def holes(self) -> tuple[int, ...]:
        return (self.outer,) if self.inner is None else (self.outer, self.inner)

    @property
    def is_annulus(self) -> bool:
        return self.inner is not None

    def boundary_cycle(self, which: str = "outer") -> tuple[int, ...]:
        f = self.outer if which == "outer" else self.inner
        if f is None:
            raise InvalidArgument("patch has no inner boundary")
        return self.map.face_vertices(f)

    @property
    def boundary_vertices(self) -> frozenset:
        out = set()
        for f in self.holes:
            out.update(self.map.face_vertices(f))
        return frozenset(out)

    @property
    def interior_vertices(self) -> tuple[int, ...]:
        b = self.boundary_vertices
        return tuple(v for v in self.map.vertex_ids if v not in b)

    def __repr__(self) -> str:
        kind = "annulus" if self.is_annulus else "disk"
        return f"Patch({kind}, V={self.map.n_vertices}, outer={self.outer}, inner={self.inner})"


def split_holes(g: PlanarMap | Patch) -> tuple[PlanarMap, frozenset]:
    if isinstance(g, Patch):
        return g.map, frozenset(g.holes)
    if isinstance(g, PlanarMap):
        return g, frozenset()
    raise InvalidArgument(f"expected PlanarMap or Patch, got {type(g).__name__}")


def interior_vertices(g: PlanarMap | Patch) -> tuple[int, ...]:
    return g.interior_vertices if isinstance(g, Patch) else g.vertex_ids


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    ok: bool
    offenders: tuple = ()

    def __bool__(self):
        return self.ok


def _check(offenders) -> Check:
    offenders = tuple(sorted(offenders))
    return Check(not offenders, offenders)


@dataclass(frozen=True)
class ValidationReport:
    disk_faces: Check
    edge_two_faces: Check
    closure_intersection: Check
    min_vertex_degree: Check
    min_face_degree: Check
    notes: tuple = field(default=())

    CHECKS = ("disk_faces", "edge_two_faces", "closure_intersection", "min_vertex_degree", "min_face_degree")

    @property
    def valid(self) -> bool:
        return all(getattr(self, c).ok for c in self.CHECKS)

    def __bool__(self):
        return self.valid

    def failures(self) -> list[str]:
        return [c for c in self.CHECKS if not getattr(self, c).ok]

    def as_dict(self) -> dict:
        out = {"valid": self.valid}
        for c in self.CHECKS:
            chk = getattr(self, c)
            out[c] = {"ok": chk.ok, "offenders": [list(x) if isinstance(x, tuple) else x for x in chk.offenders]}
        return out


def validate_tessellation(g: PlanarMap | Patch) -> ValidationReport:
    """Check the tessellation axioms and degree bounds.

    On a patch, walks and edge sides are checked for every face including the
    holes; the closure-intersection axiom only among real faces, since a hole
    stands for an unknown exterior; degree bounds only at interior vertices.
    """
    m, holes = split_holes(g)
    face_of = m.face_of

    bad_walks = []
    for f in range(m.n_faces):
        cyc = m.face_vertices(f)
        if len(set(cyc)) != len(cyc):
            bad_walks.append(f)

    one_sided = []
    for d in range(m.n_darts):
        r = int(m.rev[d])
        if d < r and face_of[d] == face_of[r]:
            u, v = m.dart_ends(d)
            one_sided.append((min(u, v), max(u, v)))

    shared: dict[tuple[int, int], set] = defaultdict(set)
    for v in m.vertex_ids:
        fs = sorted({f for f in m.faces_at(v) if f not in holes})
        for a, b in combinations(fs, 2):
            shared[(a, b)].add(v)
    bad_pairs = []
    for (a, b), verts in shared.items():
        if len(verts) == 1:
            continue
        if len(verts) == 2:
            u, v = sorted(verts)
            if v in m.neighbors(u):
                d = m.dart(u, v)
                if {int(face_of[d]), int(face_of[m.rev[d]])} == {a, b}:
                    continue
        bad_pairs.append((a, b))

    low_v = [v for v in interior_vertices(g) if m.degree(v) < 3]
    low_f = [f for f in range(m.n_faces) if m.face_degree(f) < 3]
    return ValidationReport(
        disk_faces=_check(bad_walks),
        edge_two_faces=_check(one_sided),
        closure_intersection=_check(bad_pairs),
        min_vertex_degree=_check(low_v),
        min_face_degree=_check(low_f),
    )


def face_degrees(g: PlanarMap | Patch) -> tuple[dict[int, tuple[int, ...]], dict[int, int]]:
    """Per-vertex sorted incident face degrees (interior vertices) and per-face degree (real faces)."""
    m, holes = split_holes(g)
    fdeg = {f: m.face_degree(f) for f in range(m.n_faces) if f not in holes}
    pats = {v: tuple(sorted(m.face_degree(f) for f in m.faces_at(v))) for v in interior_vertices(g)}
    return pats, fdeg


def dual_adjacency(g: PlanarMap | Patch) -> list[tuple[int, int]]:
    """Unordered pairs of real faces sharing an edge, each listed once."""
    m, holes = split_holes(g)
    pairs = set()
    for d in range(m.n_darts):
        a, b = int(m.face_of[d]), int(m.face_of[m.rev[d]])
        if a != b and a not in holes and b not in holes:
            pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


def distances_from(g: PlanarMap | Patch, v: int, radius: int = -1) -> dict[int, int]:
    """Distances from ``v`` to every vertex within ``radius`` (unbounded if negative)."""
    m, _ = split_holes(g)
    src = m._idx(v)
    dist = kernels.bfs_within(m.first, m.target, src, radius)
    return {m.vertex_ids[i]: int(x) for i, x in enumerate(dist) if x >= 0}


def graph_distance(g: PlanarMap | Patch, u: int, v: int) -> int:
    m, _ = split_holes(g)
    m._idx(v)
    dist = distances_from(g, u)
    if v not in dist:
        raise InvalidArgument(f"vertices {u} and {v} are disconnected")
    return dist[v]
