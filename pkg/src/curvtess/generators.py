"""Named tessellations, patches, and the gluing machinery.

Canonical numbering, per family:

* ``prism(n)`` / ``stacked_prism(n, bands)``: ring ``L`` holds vertices
  ``L*n .. L*n+n-1``; ring 0 bounds the top n-gon.
* ``antiprism(n)``: top ring ``0..n-1``, bottom ring ``n..2n-1`` with bottom
  vertex ``n+i`` between top vertices ``i`` and ``i+1``.
* ``grid_example(a, b)``: lattice points ``(x, y)``, ``-1 <= x <= a+1``,
  ``-1 <= y <= b+1`` minus the four outer corners, numbered row by row.
* ``dual`` numbers vertices by face id; ``truncate`` by dart id.

Patches are maps with hole faces (see :class:`~curvtess.planar_map.Patch`).
Gluing identifies the left patch's outer boundary with the right patch's inner
boundary (its outer one for a disk).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .curvature import curvature_profile, format_pattern, format_q
from .errors import (
    IncompatibleBoundaries,
    InvalidArgument,
    NonSimpleResult,
)
from .planar_map import (
    Patch,
    PlanarMap,
    from_faces,
    mirror,
    split_holes,
    validate_tessellation,
)

PLATONIC = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def _need(n, lo, what):
    if not isinstance(n, int) or n < lo:
        raise InvalidArgument(f"{what} must be an integer >= {lo}, got {n!r}")


def faces_list(m: PlanarMap) -> list[tuple[int, ...]]:
    return [m.face_vertices(f) for f in range(m.n_faces)]


# -- closed families -----------------------------------------------------------

def _stacked_faces(n: int, bands: int) -> list[tuple]:
    faces = [tuple(range(n)), tuple(bands * n + i for i in reversed(range(n)))]
    for L in range(bands):
        a, b = L * n, (L + 1) * n
        for i in range(n):
            j = (i + 1) % n
            faces.append((a + j, a + i, b + i, b + j))
    return faces


def stacked_prism(n: int, bands: int) -> PlanarMap:
    """Two n-gons joined by ``bands`` rings of squares."""
    _need(n, 3, "n")
    _need(bands, 1, "bands")
    return from_faces(_stacked_faces(n, bands))


def prism(n: int) -> PlanarMap:
    return stacked_prism(n, 1)


def _antiprism_faces(n: int) -> list[tuple]:
    faces = [tuple(range(n)), tuple(n + i for i in reversed(range(n)))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((j, i, n + i))
        faces.append((j, n + i, n + j))
    return faces


def antiprism(n: int) -> PlanarMap:
    _need(n, 3, "n")
    return from_faces(_antiprism_faces(n))


def pyramid(n: int) -> PlanarMap:
    _need(n, 3, "n")
    faces = [tuple(reversed(range(n)))]
    faces += [(i, (i + 1) % n, n) for i in range(n)]
    return from_faces(faces)


def cone_faces(faces: list[tuple], which: Sequence[int], first_apex: int) -> list[tuple]:
    """Replace each listed face by a fan of triangles around a new apex."""
    out = []
    apex = first_apex
    which = set(which)
    for idx, f in enumerate(faces):
        if idx not in which:
            out.append(f)
            continue
        k = len(f)
        out += [(f[i], f[(i + 1) % k], apex) for i in range(k)]
        apex += 1
    return out


def dual(m: PlanarMap) -> PlanarMap:
    """Dual map; dual vertex ``f`` sits in face ``f``."""
    faces = []
    for v in m.vertex_ids:
        faces.append(tuple(int(m.face_of[d]) for d in reversed(m.out_darts(v))))
    return from_faces(faces)


def truncate(m: PlanarMap) -> PlanarMap:
    """Cut every vertex: dart ``d`` becomes the new vertex near its origin."""
    faces = []
    for walk in m.faces:
        cyc = []
        for d in walk:
            cyc += [d, int(m.rev[d])]
        faces.append(tuple(cyc))
    for v in m.vertex_ids:
        faces.append(tuple(reversed(m.out_darts(v))))
    return from_faces(faces)


def platonic(name: str) -> PlanarMap:
    if name == "tetrahedron":
        return pyramid(3)
    if name == "cube":
        return prism(4)
    if name == "octahedron":
        return antiprism(3)
    if name == "icosahedron":
        return from_faces(cone_faces(_antiprism_faces(5), [0, 1], 10))
    if name == "dodecahedron":
        return dual(platonic("icosahedron"))
    raise InvalidArgument(f"unknown Platonic solid {name!r}; choose from {', '.join(PLATONIC)}")


def fullerene_c60() -> PlanarMap:
    """Truncated icosahedron: 60 vertices, 12 pentagons, 20 hexagons."""
    return truncate(platonic("icosahedron"))


def _grid_faces(a: int, b: int):
    sq = lambda x, y: ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))  # noqa: E731
    faces = [sq(x, y) for y in range(b) for x in range(a)]
    faces += [sq(x, -1) for x in range(a)] + [sq(x, b) for x in range(a)]
    faces += [sq(-1, y) for y in range(b)] + [sq(a, y) for y in range(b)]
    faces += [
        ((-1, 0), (0, -1), (0, 0)),
        ((a, -1), (a + 1, 0), (a, 0)),
        ((a + 1, b), (a, b + 1), (a, b)),
        ((0, b + 1), (-1, b), (0, b)),
    ]
    ring = [(x, -1) for x in range(a + 1)] + [(a + 1, y) for y in range(b + 1)]
    ring += [(x, b + 1) for x in range(a, -1, -1)] + [(-1, y) for y in range(b, -1, -1)]
    big = tuple(reversed(ring))
    pts = sorted({p for f in faces for p in f}, key=lambda p: (p[1], p[0]))
    num = {p: i for i, p in enumerate(pts)}
    relabel = lambda f: tuple(num[p] for p in f)  # noqa: E731
    return [relabel(f) for f in faces], relabel(big)


def grid_example(a: int, b: int) -> PlanarMap:
    """a x b square grid, a ring of squares and corner triangles, closed by one 2(a+b+2)-gon."""
    _need(a, 1, "a")
    _need(b, 1, "b")
    faces, big = _grid_faces(a, b)
    return from_faces(faces + [big])


# -- patches -------------------------------------------------------------------

def _patch(faces, outer, inner=None) -> Patch:
    return Patch.from_darts(from_faces(faces), outer, inner)


def _dart_in(cycle):
    return cycle[0], cycle[1]


def grid_core(a: int, b: int) -> Patch:
    """``grid_example(a, b)`` with its big face opened into a hole."""
    _need(a, 1, "a")
    _need(b, 1, "b")
    faces, big = _grid_faces(a, b)
    return _patch(faces + [big], _dart_in(big))


def polygon_patch(n: int) -> Patch:
    """A lone n-gon; the other side of its boundary cycle is the hole."""
    _need(n, 3, "n")
    face = tuple(range(n))
    hole = tuple(reversed(face))
    return _patch([face, hole], _dart_in(hole))


def prism_cap(n: int, bands: int = 1) -> Patch:
    """An n-gon with ``bands`` rings of squares; the last ring's outer cycle is the boundary."""
    _need(n, 3, "n")
    _need(bands, 1, "bands")
    faces = _stacked_faces(n, bands)
    return _patch(faces, _dart_in(faces[1]))


def antiprism_cap(n: int) -> Patch:
    """An n-gon with its band of 2n triangles."""
    _need(n, 3, "n")
    faces = _antiprism_faces(n)
    return _patch(faces, _dart_in(faces[1]))


def prism_band(n: int) -> Patch:
    """Annulus of n squares; inner cycle ``0..n-1``, outer cycle ``n..2n-1``."""
    _need(n, 3, "n")
    faces = _stacked_faces(n, 1)
    return _patch(faces, _dart_in(faces[1]), _dart_in(faces[0]))


def antiprism_band(n: int) -> Patch:
    """Annulus of 2n triangles; inner cycle ``0..n-1``, outer cycle ``n..2n-1``."""
    _need(n, 3, "n")
    faces = _antiprism_faces(n)
    return _patch(faces, _dart_in(faces[1]), _dart_in(faces[0]))


def rung_annulus(n: int, rungs: Sequence[tuple[int, int]]) -> Patch:
    """Annulus between inner cycle ``a_i = i`` and outer cycle ``b_j = n + j``.

    ``rungs`` are edges ``(i, j)`` joining ``a_i`` to ``b_j``, listed in cyclic
    order without crossings. Faces lie between consecutive rungs.
    """
    _need(n, 3, "n")
    rungs = [(int(i) % n, int(j) % n) for i, j in rungs]
    if len(rungs) < 1:
        raise InvalidArgument("need at least one rung")
    faces = [tuple(reversed(range(n))), tuple(n + j for j in range(n))]
    r = len(rungs)
    for t in range(r):
        i, j = rungs[t]
        i2, j2 = rungs[(t + 1) % r]
        di = (i2 - i) % n
        dj = (j2 - j) % n
        if r == 1:
            di, dj = n, n
        inner = [(i + s) % n for s in range(di + 1)]
        outer = [n + (j + s) % n for s in range(dj, -1, -1)]
        faces.append(tuple(inner + outer))
    return _patch(faces, _dart_in(faces[1]), _dart_in(faces[0]))


def honeycomb_annulus(n: int, rows: int) -> Patch:
    """Brick-wall hexagonal tube, 2n vertices per ring, ``rows`` rings of hexagons.

    Vertex ``(i, j)`` has id ``j*2n + i``. Ring 0 is the inner boundary.
    """
    _need(n, 3, "n")
    _need(rows, 1, "rows")
    w = 2 * n
    vid = lambda i, j: j * w + (i % w)  # noqa: E731
    faces = [tuple(vid(i, 0) for i in reversed(range(w))), tuple(vid(i, rows) for i in range(w))]
    for j in range(rows):
        for i in range(w):
            if (i + j) % 2 == 0:
                faces.append((vid(i, j), vid(i + 1, j), vid(i + 2, j),
                              vid(i + 2, j + 1), vid(i + 1, j + 1), vid(i, j + 1)))
    return _patch(faces, _dart_in(faces[1]), _dart_in(faces[0]))


def ring_patch(ring_degrees: Sequence[int]) -> Patch:
    """A central polygon ``0..n-1`` ringed by faces of the given degrees.

    Ring face ``i`` sits on edge ``(i, i+1)``. A triangle's two spokes meet at
    one outer vertex, so two consecutive triangles are not allowed.
    """
    degs = [int(d) for d in ring_degrees]
    n = len(degs)
    _need(n, 3, "ring length")
    if min(degs) < 3:
        raise InvalidArgument("ring face degrees must be >= 3")
    if any(degs[i] == 3 and degs[(i + 1) % n] == 3 for i in range(n)):
        raise InvalidArgument("two consecutive triangles in the ring")
    start = next(i for i in range(n) if degs[i - 1] != 3)
    spoke = [None] * n
    extras = [[] for _ in range(n)]
    nxt = n
    for s in range(n):
        i = (start + s) % n
        if spoke[i] is None:
            spoke[i] = nxt
            nxt += 1
        if degs[i] == 3:
            spoke[(i + 1) % n] = spoke[i]
        for _ in range(degs[i] - 4 if degs[i] > 3 else 0):
            extras[i].append(nxt)
            nxt += 1
    faces = [tuple(range(n))]
    rim = []
    for s in range(n):
        i = (start + s) % n
        j = (i + 1) % n
        if degs[i] == 3:
            faces.append((j, i, spoke[i]))
            continue
        faces.append((j, i, spoke[i], *extras[i], spoke[j]))
        if not rim or rim[-1] != spoke[i]:
            rim.append(spoke[i])
        rim += extras[i]
    hole = tuple(reversed(rim))
    return _patch(faces + [hole], _dart_in(hole))


# -- gluing --------------------------------------------------------------------

@dataclass(frozen=True)
class GlueSpec:
    """Glue ``left``'s outer boundary to ``right``'s inner (or sole) boundary.

    ``correspondence`` lists ``(left_vertex, right_vertex)`` pairs. It must
    match the two boundary cycles in reversed cyclic order (orientation
    compatible) or in the same order, in which case ``right`` is mirrored.
    """

    left: Patch
    right: Patch
    correspondence: tuple = field(default=())


def glue_face(p: Patch) -> int:
    """The boundary of ``p`` that receives a left patch."""
    return p.outer if p.inner is None else p.inner


def boundary_correspondence(left: Patch, right: Patch, shift: int = 0, reverse: bool = True) -> tuple:
    """Pair the glued boundary cycles, starting at the first walk vertex of each.

    ``reverse`` gives the orientation-compatible pairing; ``shift`` rotates the
    right cycle.
    """
    L = left.map.face_vertices(left.outer)
    R = right.map.face_vertices(glue_face(right))
    if len(L) != len(R):
        raise IncompatibleBoundaries(f"boundary lengths differ: {len(L)} vs {len(R)}")
    n = len(L)
    sgn = -1 if reverse else 1
    return tuple((L[i], R[(shift + sgn * i) % n]) for i in range(n))


def _mirror_patch(p: Patch) -> Patch:
    m = mirror(p.map)
    holes = []
    for f in p.holes:
        u, v = p.map.dart_ends(p.map.faces[f][0])
        holes.append(m.face_of_dart(v, u))
    return Patch(m, holes[0], holes[1] if len(holes) > 1 else None)


@dataclass(frozen=True)
class GlueResult:
    graph: object
    seam: tuple  # seam vertex ids in left boundary walk order
    right_ids: dict  # right vertex id -> id in the result
    mirrored: bool


def glue(spec: GlueSpec) -> GlueResult:
    left, right = spec.left, spec.right
    if not isinstance(left, Patch) or not isinstance(right, Patch):
        raise InvalidArgument("glue needs two patches")
    L = left.map.face_vertices(left.outer)
    n = len(L)
    rface = glue_face(right)
    R = right.map.face_vertices(rface)
    if len(R) != n:
        raise IncompatibleBoundaries(f"boundary lengths differ: {n} vs {len(R)}")
    corr = dict(spec.correspondence) if spec.correspondence else None
    if corr is None:
        corr = dict(boundary_correspondence(left, right))
    if set(corr) != set(L) or set(corr.values()) != set(R) or len(corr) != n:
        raise IncompatibleBoundaries("correspondence is not a bijection between the boundary cycles")
    pos = {r: j for j, r in enumerate(R)}
    j0 = pos[corr[L[0]]]
    if all(pos[corr[L[i]]] == (j0 - i) % n for i in range(n)):
        mirrored = False
    elif all(pos[corr[L[i]]] == (j0 + i) % n for i in range(n)):
        mirrored = True
        right = _mirror_patch(right)
        rface = glue_face(right)
    else:
        raise IncompatibleBoundaries("correspondence does not preserve cyclic order")

    lm, rm = left.map, right.map
    seam_r = {corr[x]: x for x in L}
    base = max(lm.vertex_ids) + 1
    rid = {}
    for v in rm.vertex_ids:
        if v in seam_r:
            rid[v] = seam_r[v]
        else:
            rid[v] = base
            base += 1

    def cut(rot, start):
        k = rot.index(start)
        return list(rot[k:] + rot[:k])

    rotation = {v: list(lm.rotation(v)) for v in lm.vertex_ids}
    for i, x in enumerate(L):
        prev_l, next_l = L[i - 1], L[(i + 1) % n]
        left_part = cut(rotation[x], next_l)
        if left_part[-1] != prev_l:  # pragma: no cover - guaranteed by face tracing
            raise IncompatibleBoundaries(f"hole corner at {x} is not where expected")
        right_part = cut(list(rm.rotation(corr[x])), corr[prev_l])
        if right_part[-1] != corr[next_l]:  # pragma: no cover
            raise IncompatibleBoundaries(f"right hole corner at {corr[x]} is not where expected")
        merged = left_part + [rid[w] for w in right_part[1:-1]]
        if len(set(merged)) != len(merged):
            raise NonSimpleResult(f"gluing creates a multi-edge at vertex {x}")
        rotation[x] = merged
    for v in rm.vertex_ids:
        if v not in seam_r:
            rotation[rid[v]] = [rid[w] for w in rm.rotation(v)]
    m = PlanarMap(rotation)

    remaining = []
    if right.inner is not None:
        u, v = rm.dart_ends(rm.faces[right.outer][0])
        remaining.append(m.face_of_dart(rid[u], rid[v]))
    if left.inner is not None:
        u, v = lm.dart_ends(lm.faces[left.inner][0])
        remaining.append(m.face_of_dart(u, v))
    if not remaining:
        graph = m
    else:
        graph = Patch(m, remaining[0], remaining[1] if len(remaining) > 1 else None)
    return GlueResult(graph, tuple(L), rid, mirrored)


def glue_patches(spec: GlueSpec) -> PlanarMap | Patch:
    """Identify the two boundary cycles and splice rotations at seam vertices.

    Returns a closed map when no hole remains, else a patch whose outer
    boundary comes from ``right`` and inner boundary from ``left``.
    """
    return glue(spec).graph


def cut_along_cycle(m: PlanarMap, cycle: Sequence[int]) -> tuple[Patch, Patch]:
    """Split a closed map along a separating simple cycle into two disk patches.

    The first patch lies on the side where the cycle is traversed as given by
    its hole walk ``cycle[0] -> cycle[1] -> ...``; vertex ids are kept on both sides.
    """
    if not isinstance(m, PlanarMap):
        raise InvalidArgument("cut_along_cycle needs a closed PlanarMap")
    cyc = [int(x) for x in cycle]
    n = len(cyc)
    if n < 3 or len(set(cyc)) != n:
        raise InvalidArgument("cycle must be a simple cycle of length >= 3")
    for i in range(n):
        if cyc[(i + 1) % n] not in m.neighbors(cyc[i]):
            raise InvalidArgument(f"{cyc[i]}-{cyc[(i + 1) % n]} is not an edge")
    on_cycle = set(cyc)
    rot_a, rot_b = {}, {}
    seeds_a, seeds_b = set(), set()
    for i, x in enumerate(cyc):
        prev, nxt = cyc[i - 1], cyc[(i + 1) % n]
        rot = list(m.rotation(x))
        k = rot.index(nxt)
        rot = rot[k:] + rot[:k]
        p = rot.index(prev)
        rot_a[x] = rot[: p + 1]
        rot_b[x] = [prev] + rot[p + 1:] + [nxt]
        seeds_a.update(w for w in rot_a[x][1:-1] if w not in on_cycle)
        seeds_b.update(w for w in rot_b[x][1:-1] if w not in on_cycle)
        if any(w in on_cycle for w in rot_a[x][1:-1] + rot_b[x][1:-1]):
            raise InvalidArgument(f"cycle has a chord at vertex {x}")

    def reach(seeds):
        seen, stack = set(seeds), list(seeds)
        while stack:
            u = stack.pop()
            for w in m.rotation(u):
                if w not in on_cycle and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    side_a, side_b = reach(seeds_a), reach(seeds_b)
    if side_a & side_b:
        raise InvalidArgument("cycle does not separate the map")
    if not side_a or not side_b:
        raise InvalidArgument("cycle bounds a face; nothing to cut")
    for side, rots in ((side_a, rot_a), (side_b, rot_b)):
        for v in side:
            rots[v] = list(m.rotation(v))
    pa = Patch.from_darts(PlanarMap(rot_a), (cyc[0], cyc[1]))
    pb = Patch.from_darts(PlanarMap(rot_b), (cyc[1], cyc[0]))
    return pa, pb


# -- subdivision ---------------------------------------------------------------

def subdivide_hexagons(g: PlanarMap | Patch) -> PlanarMap | Patch:
    """Replace every hexagonal face by six triangles around a new centre vertex.

    Holes are left alone. New centres are numbered after the largest old id in
    face order.
    """
    m, holes = split_holes(g)
    nxt = max(m.vertex_ids) + 1
    faces = []
    changed = False
    for f in range(m.n_faces):
        cyc = m.face_vertices(f)
        if len(cyc) == 6 and f not in holes:
            faces += [(cyc[i], cyc[(i + 1) % 6], nxt) for i in range(6)]
            nxt += 1
            changed = True
        else:
            faces.append(cyc)
    if not changed:
        return g
    new = from_faces(faces)
    if isinstance(g, Patch):
        darts = [m.dart_ends(m.faces[f][0]) for f in g.holes]
        return Patch.from_darts(new, darts[0], darts[1] if len(darts) > 1 else None)
    return new


# -- periodic extension --------------------------------------------------------

@dataclass
class ClosureReport:
    """Outcome of :func:`periodic_closure_check`; truthy iff every check passed."""

    ok: bool
    violations: list
    core_seam: dict  # vertex -> curvature on the core/annulus seam
    self_seam: dict  # vertex -> curvature on the annulus/annulus seam
    glued: Patch | None  # core with one annulus attached
    core_correspondence: tuple = ()
    self_correspondence: tuple = ()

    def __bool__(self):
        return self.ok

    @property
    def interior_profile(self):
        return curvature_profile(self.glued)

    def as_dict(self) -> dict:
        prof = self.interior_profile if self.glued is not None else None
        return {
            "ok": self.ok,
            "violations": list(self.violations),
            "core_seam": {str(v): format_q(x) for v, x in self.core_seam.items()},
            "self_seam": {str(v): format_q(x) for v, x in self.self_seam.items()},
            "interior_total": format_q(prof.total) if prof else None,
            "interior_positive": len(prof.positive) if prof else None,
        }


def _alignments(left: Patch, right: Patch):
    n = len(left.map.face_vertices(left.outer))
    for reverse in (True, False):
        for shift in range(n):
            yield boundary_correspondence(left, right, shift, reverse)


def _seam_check(left, right, corr, want_zero):
    """Glue and inspect the seam; returns (violations, seam curvature, result)."""
    res = glue(GlueSpec(left, right, tuple(corr)))
    g = res.graph
    viol = []
    rep = validate_tessellation(g)
    if not rep.valid:
        viol.append("glued patch fails " + ", ".join(rep.failures()))
    prof = curvature_profile(g)
    seam = {}
    for v in res.seam:
        if v not in prof.phi:
            viol.append(f"seam vertex {v} still on a boundary")
            continue
        seam[v] = prof.phi[v]
        x = prof.phi[v]
        if x < 0 or (want_zero and x != 0):
            viol.append(f"seam vertex {v} pattern {format_pattern(prof.patterns[v])} curvature {format_q(x)}")
    if not want_zero:
        for v, x in prof.phi.items():
            if x < 0 and v not in seam:
                viol.append(f"vertex {v} curvature {format_q(x)}")
    else:
        for v, x in prof.phi.items():
            if x != 0 and v not in seam:
                viol.append(f"annulus vertex {v} curvature {format_q(x)}")
    return viol, seam, res


def periodic_closure_check(annulus: Patch, core: Patch,
                           core_correspondence=None, self_correspondence=None) -> ClosureReport:
    """Certify that core + annulus + annulus + ... is a nonnegatively curved tessellation.

    (a) gluing the annulus onto the core leaves every newly interior vertex
    with nonnegative curvature; (b) gluing the annulus onto a copy of itself
    leaves every seam vertex, and every annulus vertex, flat. The annulus'
    two boundaries must be vertex-disjoint so that no vertex meets three
    copies. Missing correspondences are searched over all alignments.
    """
    if not isinstance(annulus, Patch) or not annulus.is_annulus:
        raise InvalidArgument("annulus must be a patch with inner and outer boundaries")
    if not isinstance(core, Patch) or core.is_annulus:
        raise InvalidArgument("core must be a disk patch")
    n_core = len(core.boundary_cycle("outer"))
    n_in = len(annulus.boundary_cycle("inner"))
    n_out = len(annulus.boundary_cycle("outer"))
    if n_core != n_in:
        raise IncompatibleBoundaries(f"core boundary {n_core} vs annulus inner {n_in}")
    if n_out != n_in:
        raise IncompatibleBoundaries(f"annulus outer {n_out} vs inner {n_in}")

    violations = []
    if set(annulus.boundary_cycle("inner")) & set(annulus.boundary_cycle("outer")):
        violations.append("annulus boundaries share a vertex")

    def search(left, right, given, want_zero):
        if given is not None:
            return (*_seam_check(left, right, given, want_zero), tuple(given))
        best = None
        for corr in _alignments(left, right):
            try:
                out = _seam_check(left, right, corr, want_zero)
            except (IncompatibleBoundaries, NonSimpleResult):
                continue
            if not out[0]:
                return (*out, corr)
            if best is None:
                best = (*out, corr)
        if best is None:
            raise IncompatibleBoundaries("no alignment of the boundaries glues to a simple map")
        return best

    v_a, seam_a, res_a, corr_a = search(core, annulus, core_correspondence, False)
    v_b, seam_b, _, corr_b = search(annulus, annulus, self_correspondence, True)
    violations += ["core/annulus: " + v for v in v_a] + ["annulus/annulus: " + v for v in v_b]
    return ClosureReport(not violations, violations, seam_a, seam_b, res_a.graph, corr_a, corr_b)


def half_cylinder(n: int, kind: str = "prism") -> tuple[Patch, Patch]:
    """Core and annulus modelling an n-gon capping a flat half-cylinder."""
    band = prism_band(n) if kind == "prism" else antiprism_band(n)
    return polygon_patch(n), band


def interior_total(g: Patch) -> Fraction:
    return curvature_profile(g).total
