"""Prism-like detection and band structure of large-face tessellations."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .curvature import curvature_profile, format_q
from .errors import InvalidArgument, NotPrismlikeStructure, TheoremViolation
from .planar_map import Patch, PlanarMap, split_holes

PRISMLIKE_DEGREE = 43


@dataclass(frozen=True)
class PrismlikeVerdict:
    prismlike: bool
    witnesses: tuple[int, ...]  # faces of degree >= the threshold
    degrees: tuple[int, ...]
    infinite: bool  # evaluated as a patch stand-in

    def __bool__(self):
        return self.prismlike

    def as_dict(self) -> dict:
        return {
            "prismlike": self.prismlike,
            "infinite": self.infinite,
            "witness_faces": list(self.witnesses),
            "witness_degrees": list(self.degrees),
        }


def big_faces(g: PlanarMap | Patch, degree: int = PRISMLIKE_DEGREE) -> tuple[int, ...]:
    m, holes = split_holes(g)
    return tuple(f for f in range(m.n_faces) if f not in holes and m.face_degree(f) >= degree)


def max_face_degree(g: PlanarMap | Patch) -> int:
    """D_G over real faces."""
    m, holes = split_holes(g)
    return max(m.face_degree(f) for f in range(m.n_faces) if f not in holes)


def is_prismlike(g: PlanarMap | Patch, degree: int = PRISMLIKE_DEGREE) -> PrismlikeVerdict:
    m, _ = split_holes(g)
    wit = big_faces(g, degree)
    infinite = isinstance(g, Patch)
    ok = len(wit) >= (1 if infinite else 2)
    return PrismlikeVerdict(ok, wit, tuple(m.face_degree(f) for f in wit), infinite)


@dataclass(frozen=True)
class Band:
    index: int  # 1-based layer
    kind: str  # "triangle" or "square"
    faces: tuple[int, ...]


@dataclass(frozen=True)
class BandDecomposition:
    sigma1: int
    sigma2: int | None
    degree: int
    bands: tuple[Band, ...]

    @property
    def M(self) -> int:
        return len(self.bands)

    def as_dict(self) -> dict:
        return {
            "sigma1": self.sigma1,
            "sigma2": self.sigma2,
            "degree": self.degree,
            "bands": [{"index": b.index, "kind": b.kind, "faces": len(b.faces)} for b in self.bands],
        }


def _layers(m: PlanarMap, sources) -> dict[int, int]:
    dist = {v: 0 for v in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for w in m.rotation(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def band_decomposition(g: PlanarMap | Patch, degree: int = PRISMLIKE_DEGREE) -> BandDecomposition:
    """Split the faces between the big faces into homogeneous distance bands.

    A face lies in band ``i`` when its nearest vertex sits at distance
    ``i - 1`` from the first big face. Hexagons must be subdivided first.
    Any structural failure raises :class:`NotPrismlikeStructure`.
    """
    m, holes = split_holes(g)
    big = big_faces(g, degree)
    infinite = isinstance(g, Patch)
    if infinite:
        if len(big) != 1:
            raise NotPrismlikeStructure(f"patch needs exactly one face of degree >= {degree}, found {len(big)}")
        s1, s2 = big[0], None
    else:
        if len(big) != 2:
            raise NotPrismlikeStructure(f"need exactly two faces of degree >= {degree}, found {len(big)}")
        s1, s2 = big
        if m.face_degree(s1) != m.face_degree(s2):
            raise NotPrismlikeStructure(
                f"big faces have degrees {m.face_degree(s1)} and {m.face_degree(s2)}")
    b1 = set(m.face_vertices(s1))
    b2 = set(m.face_vertices(s2)) if s2 is not None else set()
    if b1 & b2:
        raise NotPrismlikeStructure(f"big faces share vertices {sorted(b1 & b2)}")

    dist = _layers(m, sorted(b1))
    by_band: dict[int, list[int]] = {}
    for f in range(m.n_faces):
        if f in holes or f in (s1, s2):
            continue
        k = m.face_degree(f)
        if k not in (3, 4):
            hint = "; subdivide hexagons first" if k == 6 else ""
            raise NotPrismlikeStructure(f"face {f} has degree {k}{hint}")
        layer = min(dist[v] for v in m.face_vertices(f)) + 1
        by_band.setdefault(layer, []).append(f)
    bands = []
    for i in sorted(by_band):
        kinds = {m.face_degree(f) for f in by_band[i]}
        if len(kinds) != 1:
            raise NotPrismlikeStructure(f"band {i} mixes triangles and squares")
        bands.append(Band(i, "triangle" if kinds == {3} else "square", tuple(by_band[i])))
    if [b.index for b in bands] != list(range(1, len(bands) + 1)):
        raise NotPrismlikeStructure("band indices are not consecutive")

    if s2 is not None:
        last = bands[-1].index
        for f in range(m.n_faces):
            if f in (s1, s2) or f in holes:
                continue
            if set(m.face_vertices(f)) & b2 and f not in bands[-1].faces:
                raise NotPrismlikeStructure(f"face {f} touches the second big face outside band {last}")

    prof = curvature_profile(g)
    tg = set(prof.positive)
    expect = {v for v in b1 | b2 if v in prof.phi}
    if tg != expect:
        extra = sorted(tg - expect)[:5]
        missing = sorted(expect - tg)[:5]
        raise NotPrismlikeStructure(f"T_G differs from the big-face boundaries (extra {extra}, missing {missing})")
    return BandDecomposition(s1, s2, m.face_degree(s1), tuple(bands))


def large_face_curvature_sum(g: PlanarMap | Patch, sigma: int, degree: int = PRISMLIKE_DEGREE) -> Fraction:
    """Total curvature on the boundary of a face of degree at least 43; at least 1."""
    m, holes = split_holes(g)
    if not 0 <= sigma < m.n_faces or sigma in holes:
        raise InvalidArgument(f"{sigma} is not a real face")
    if m.face_degree(sigma) < degree:
        raise InvalidArgument(f"face {sigma} has degree {m.face_degree(sigma)} < {degree}")
    prof = curvature_profile(g)
    total = Fraction(0)
    for v in m.face_vertices(sigma):
        if v not in prof.phi:
            raise InvalidArgument(f"vertex {v} of face {sigma} is on a hole")
        if prof.phi[v] < 0:
            raise InvalidArgument(f"vertex {v} has curvature {format_q(prof.phi[v])}")
        total += prof.phi[v]
    if total < 1:
        raise TheoremViolation(f"curvature around face {sigma} sums to {format_q(total)} < 1")
    return total
