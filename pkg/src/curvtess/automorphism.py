"""Cellular automorphism groups of planar maps.

An automorphism is stored as a dart permutation plus an orientation sign. It
is pinned down by the image of one dart and the sign, so the whole group is
found by propagating every admissible image of a fixed base dart.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import networkx as nx
import numpy as np

from . import kernels
from .curvature import curvature_profile
from .errors import InvalidArgument, UndefinedForFlat
from .planar_map import Patch, PlanarMap, split_holes
from .prismlike import PRISMLIKE_DEGREE, max_face_degree


class CellularAutomorphism:
    __slots__ = ("map", "darts", "orientation", "__dict__")

    def __init__(self, m: PlanarMap, darts: np.ndarray, orientation: int):
        self.map = m
        self.darts = np.asarray(darts, dtype=np.int64)
        self.darts.flags.writeable = False
        self.orientation = 1 if orientation > 0 else -1

    @property
    def key(self) -> tuple:
        return (self.orientation, self.darts.tobytes())

    def __eq__(self, other):
        return isinstance(other, CellularAutomorphism) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        kind = "rotation" if self.orientation > 0 else "reflection"
        return f"CellularAutomorphism({kind}, {self.n_fixed_vertices} fixed vertices)"

    @property
    def preserving(self) -> bool:
        return self.orientation > 0

    @cached_property
    def vertex_map(self) -> dict[int, int]:
        """H_V."""
        m = self.map
        ids = m.vertex_ids
        return {ids[i]: ids[int(m.origin[self.darts[m.first[i]]])] for i in range(m.n_vertices)}

    @cached_property
    def edge_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        """H_E on edges written as sorted vertex pairs."""
        hv = self.vertex_map
        return {(u, v): tuple(sorted((hv[u], hv[v]))) for u, v in self.map.edges()}

    @cached_property
    def face_map(self) -> dict[int, int]:
        """H_F."""
        m = self.map
        out = {}
        for f, walk in enumerate(m.faces):
            e = int(self.darts[walk[0]])
            if not self.preserving:
                e = int(m.rev[e])
            out[f] = int(m.face_of[e])
        return out

    @property
    def n_fixed_vertices(self) -> int:
        return sum(1 for v, w in self.vertex_map.items() if v == w)

    @property
    def is_identity(self) -> bool:
        return self.preserving and bool(np.all(self.darts == np.arange(self.darts.size)))

    def compose(self, other: "CellularAutomorphism") -> "CellularAutomorphism":
        """``self`` after ``other``."""
        return CellularAutomorphism(self.map, self.darts[other.darts], self.orientation * other.orientation)

    def inverse(self) -> "CellularAutomorphism":
        inv = np.empty_like(self.darts)
        inv[self.darts] = np.arange(self.darts.size)
        return CellularAutomorphism(self.map, inv, self.orientation)


@dataclass(frozen=True)
class AutGroup:
    map: PlanarMap
    elements: tuple[CellularAutomorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def orientation_split(self) -> tuple[int, int]:
        """(orientation preserving, reversing) counts."""
        p = sum(1 for h in self.elements if h.preserving)
        return p, self.order - p

    def vertex_maps(self) -> set[tuple]:
        return {tuple(sorted(h.vertex_map.items())) for h in self.elements}


def _dart_signature(m: PlanarMap, d: int, reflect: bool) -> tuple:
    """Local data a dart's image must share."""
    v = int(m.origin[d])
    pat = tuple(sorted(m.face_degree(f) for f in m.faces_at(m.vertex_ids[v])))
    left = m.face_degree(int(m.face_of[d]))
    right = m.face_degree(int(m.face_of[m.rev[d]]))
    if reflect:
        left, right = right, left
    return pat, left, right


def _extend(a: PlanarMap, b: PlanarMap, holes_a, holes_b, d0: int, e0: int, reflect: bool):
    ok, phi = kernels.propagate(a.rev, a.rnext, b.rev, b.rnext, b.rprev, d0, e0, reflect)
    if not ok:
        return None
    if holes_a:
        for f in holes_a:
            e = int(phi[a.faces[f][0]])
            if reflect:
                e = int(b.rev[e])
            if int(b.face_of[e]) not in holes_b:
                return None
    return phi


def _matches(a: PlanarMap, b: PlanarMap, holes_a=frozenset(), holes_b=frozenset(), first_only=False):
    """All dart bijections a -> b that preserve the map structure (and holes)."""
    out = []
    if a.n_darts != b.n_darts or a.n_vertices != b.n_vertices or a.n_faces != b.n_faces:
        return out
    if len(holes_a) != len(holes_b):
        return out
    d0 = 0
    for reflect in (False, True):
        want = _dart_signature(a, d0, False)
        for e in range(b.n_darts):
            if _dart_signature(b, e, reflect) != want:
                continue
            phi = _extend(a, b, holes_a, holes_b, d0, e, reflect)
            if phi is not None:
                out.append((phi, -1 if reflect else 1))
                if first_only:
                    return out
    return out


def cellular_automorphisms(g: PlanarMap | Patch) -> AutGroup:
    """Every cellular automorphism; for a patch, only those mapping holes to holes."""
    m, holes = split_holes(g)
    elems = tuple(CellularAutomorphism(m, phi, o) for phi, o in _matches(m, m, holes, holes))
    return AutGroup(m, elems)


def isomorphic(g1: PlanarMap | Patch, g2: PlanarMap | Patch) -> bool:
    """Map isomorphism up to relabeling and reflection; holes must go to holes."""
    a, ha = split_holes(g1)
    b, hb = split_holes(g2)
    return bool(_matches(a, b, ha, hb, first_only=True))


# -- brute-force oracle --------------------------------------------------------

def _cyclic_equal(x, y) -> bool:
    if len(x) != len(y):
        return False
    if not x:
        return True
    try:
        k = y.index(x[0])
    except ValueError:
        return False
    return tuple(y[k:] + y[:k]) == tuple(x)


def brute_force_automorphisms(m: PlanarMap, max_vertices: int = 16) -> set[tuple]:
    """Vertex bijections preserving adjacency and every rotation (all forward or all reversed)."""
    if m.n_vertices > max_vertices:
        raise InvalidArgument(f"brute force limited to {max_vertices} vertices")
    ids = list(m.vertex_ids)
    nbr = {v: set(m.rotation(v)) for v in ids}
    rot = {v: list(m.rotation(v)) for v in ids}
    # BFS order keeps constraints tight.
    order, seen = [], set()
    for s in ids:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in rot[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    results = set()

    for reflect in (False, True):
        img: dict[int, int] = {}
        used: set[int] = set()

        def rotation_ok(v):
            if v not in img or any(w not in img for w in rot[v]):
                return True
            mapped = [img[w] for w in rot[v]]
            target = rot[img[v]]
            if reflect:
                target = target[::-1]
            return _cyclic_equal(mapped, target)

        def bt(i):
            if i == len(order):
                results.add(tuple(sorted(img.items())))
                return
            v = order[i]
            for c in ids:
                if c in used or len(nbr[c]) != len(nbr[v]):
                    continue
                if any(w in img and img[w] not in nbr[c] for w in nbr[v]):
                    continue
                if any(img[w] in nbr[c] for w in img if w not in nbr[v] and w != v):
                    continue
                img[v] = c
                used.add(c)
                if rotation_ok(v) and all(rotation_ok(w) for w in nbr[v]):
                    bt(i + 1)
                del img[v]
                used.discard(c)

        bt(0)
    return results


# -- structure checks ----------------------------------------------------------

def verify_group_axioms(group: AutGroup) -> bool:
    """Identity, inverses, and closure under composition."""
    keys = {h.key for h in group}
    if len(keys) != group.order:
        return False
    if not any(h.is_identity for h in group):
        return False
    for h in group:
        if h.inverse().key not in keys:
            return False
        for k in group:
            if h.compose(k).key not in keys:
                return False
    return True


@dataclass(frozen=True)
class Restriction:
    group_order: int
    image_order: int
    kernel_order: int
    kernel: tuple[CellularAutomorphism, ...]
    tg: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"order": self.group_order, "image": self.image_order, "kernel": self.kernel_order}


def restrict_to_TG(g: PlanarMap, group: AutGroup | None = None) -> Restriction:
    """Restrict each automorphism's vertex map to the positively curved vertices."""
    group = group or cellular_automorphisms(g)
    tg = curvature_profile(g).positive
    if not tg:
        raise UndefinedForFlat("no positively curved vertices")
    images = set()
    kernel = []
    for h in group:
        hv = h.vertex_map
        restr = tuple(hv[v] for v in tg)
        images.add(restr)
        if restr == tg:
            kernel.append(h)
    if group.order != len(kernel) * len(images):
        raise AssertionError(f"|G|={group.order} != |ker|*|im| = {len(kernel)}*{len(images)}")
    return Restriction(group.order, len(images), len(kernel), tuple(kernel), tg)


def verify_rigidity(g: PlanarMap | Patch, group: AutGroup | None = None) -> bool:
    """No non-identity element fixes a face together with two adjacent vertices on it."""
    m, _ = split_holes(g)
    group = group or cellular_automorphisms(g)
    for h in group:
        if h.is_identity:
            continue
        hv, hf = h.vertex_map, h.face_map
        for f in range(m.n_faces):
            if hf[f] != f:
                continue
            cyc = m.face_vertices(f)
            k = len(cyc)
            if any(hv[cyc[i]] == cyc[i] and hv[cyc[(i + 1) % k]] == cyc[(i + 1) % k] for i in range(k)):
                return False
    return True


def verify_kernel_monomorphism(g: PlanarMap, restriction: Restriction) -> bool:
    """Kernel elements are told apart by their action on N(v), for every v in T_G."""
    m = g if isinstance(g, PlanarMap) else g.map
    for v in restriction.tg:
        nb = sorted(m.neighbors(v))
        seen = set()
        for h in restriction.kernel:
            sig = tuple(h.vertex_map[w] for w in nb)
            if sig in seen:
                return False
            seen.add(sig)
    return True


def is_three_connected(m: PlanarMap) -> bool:
    """True iff deleting any single vertex leaves a biconnected graph."""
    if m.n_vertices < 4:
        return False
    G = nx.Graph(m.edges())
    for v in m.vertex_ids:
        H = G.copy()
        H.remove_node(v)
        if not nx.is_biconnected(H):
            return False
    return True


def verify_order_bounds(g: PlanarMap, group: AutGroup | None = None) -> dict:
    """Divisibility of the group order by the curvature-side quantities."""
    if not isinstance(g, PlanarMap):
        raise InvalidArgument("order bounds apply to closed maps")
    group = group or cellular_automorphisms(g)
    prof = curvature_profile(g)
    if not prof.is_nonnegative():
        raise InvalidArgument("negative curvature present")
    tg = prof.positive
    if not tg:
        raise UndefinedForFlat("no positively curved vertices")
    a = len(tg)
    b = max(g.degree(v) for v in tg)
    q = group.order
    dg = max_face_degree(g)
    checks = []
    if dg < PRISMLIKE_DEGREE:
        bound = math.factorial(a) * math.factorial(b)
        checks.append({"name": "Q | a!*b!", "divisor": q, "value": bound, "ok": bound % q == 0})
    else:
        checks.append({"name": "Q | 4*D_G", "divisor": q, "value": 4 * dg, "ok": (4 * dg) % q == 0})
    pres, refl = group.orientation_split
    return {
        "order": q,
        "orientation_split": [pres, refl],
        "a": a,
        "b": b,
        "D_G": dg,
        "three_connected": is_three_connected(g),
        "divisibility_checks": checks,
        "ok": all(c["ok"] for c in checks),
    }
