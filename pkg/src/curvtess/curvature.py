"""Exact combinatorial curvature.

Curvature of a vertex x is ``1 - deg(x)/2 + sum(1/deg(f))`` over the faces at
x. Everything is computed with :class:`fractions.Fraction`; there is no
floating point on these paths.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import IncompletePattern, InvalidArgument, NotNonnegativelyCurved
from .planar_map import Patch, PlanarMap, interior_vertices, split_holes

GOOD_THRESHOLD = Fraction(1, 132)

Pattern = tuple  # nondecreasing tuple of face degrees


def make_pattern(degrees: Iterable[int]) -> Pattern:
    p = tuple(sorted(int(x) for x in degrees))
    if len(p) < 3 or p[0] < 3:
        raise InvalidArgument(f"pattern {p} needs length >= 3 and entries >= 3")
    return p


def pattern_curvature(pattern: Sequence[int]) -> Fraction:
    return 1 - Fraction(len(pattern), 2) + sum(Fraction(1, a) for a in pattern)


def format_q(q: Fraction) -> str:
    """``p/q`` in lowest terms, bare integer when integral."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_q(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidArgument(f"not a rational number: {text!r}") from None


def format_pattern(p: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def _require_interior(g, v):
    m, holes = split_holes(g)
    if not m.has_vertex(v):
        raise InvalidArgument(f"unknown vertex {v!r}")
    if holes and any(f in holes for f in m.faces_at(v)):
        raise IncompletePattern(f"vertex {v} lies on a patch boundary")
    return m


def vertex_pattern(g: PlanarMap | Patch, v: int) -> Pattern:
    m = _require_interior(g, v)
    return tuple(sorted(m.face_degree(f) for f in m.faces_at(v)))


def curvature(g: PlanarMap | Patch, v: int) -> Fraction:
    return pattern_curvature(vertex_pattern(g, v))


@dataclass(frozen=True)
class CurvatureProfile:
    phi: dict  # vertex id -> Fraction, interior vertices in id order
    patterns: dict  # vertex id -> Pattern

    @property
    def positive(self) -> tuple[int, ...]:
        """T_G: vertices with strictly positive curvature."""
        return tuple(v for v, x in self.phi.items() if x > 0)

    @property
    def total(self) -> Fraction:
        return sum(self.phi.values(), Fraction(0))

    @property
    def minimum(self) -> Fraction:
        return min(self.phi.values())

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.phi.values())


def curvature_profile(g: PlanarMap | Patch) -> CurvatureProfile:
    """Curvature at every vertex of a map, or at every interior vertex of a patch."""
    m, _ = split_holes(g)
    pats = {}
    for v in interior_vertices(g):
        pats[v] = tuple(sorted(m.face_degree(f) for f in m.faces_at(v)))
    cache: dict = {}
    phi = {}
    for v, p in pats.items():
        if p not in cache:
            cache[p] = pattern_curvature(p)
        phi[v] = cache[p]
    return CurvatureProfile(phi, pats)


def classify_value(x: Fraction, threshold: Fraction = GOOD_THRESHOLD) -> str:
    if x < 0:
        return "negative"
    if x == 0:
        return "zero"
    return "good" if x >= threshold else "bad"


def classify_vertices(g: PlanarMap | Patch | CurvatureProfile,
                      threshold: Fraction = GOOD_THRESHOLD) -> dict[str, tuple[int, ...]]:
    """Split vertices into good / bad / zero; negative curvature is an error."""
    prof = g if isinstance(g, CurvatureProfile) else curvature_profile(g)
    out = {"good": [], "bad": [], "zero": []}
    for v, x in prof.phi.items():
        cls = classify_value(x, threshold)
        if cls == "negative":
            raise NotNonnegativelyCurved(f"vertex {v} has curvature {format_q(x)}")
        out[cls].append(v)
    return {k: tuple(vs) for k, vs in out.items()}


def check_twelfth_integrality(profile: CurvatureProfile | Fraction | int) -> bool:
    total = profile.total if isinstance(profile, CurvatureProfile) else Fraction(profile)
    return (12 * total).denominator == 1
