from fractions import Fraction as F

import pytest

from curvtess import errors
from curvtess.curvature import curvature_profile
from curvtess.generators import (
    GlueSpec,
    antiprism,
    antiprism_band,
    antiprism_cap,
    fullerene_c60,
    glue_patches,
    grid_example,
    half_cylinder,
    honeycomb_annulus,
    periodic_closure_check,
    polygon_patch,
    prism,
    prism_band,
    prism_cap,
    stacked_prism,
    subdivide_hexagons,
)
from curvtess.prismlike import (
    PRISMLIKE_DEGREE,
    band_decomposition,
    big_faces,
    is_prismlike,
    large_face_curvature_sum,
)


def test_threshold_constant():
    assert PRISMLIKE_DEGREE == 43


def test_prism43_prismlike():
    m = prism(43)
    v = is_prismlike(m)
    assert v and v.degrees == (43, 43) and not v.infinite


def test_prism42_not_prismlike():
    assert not is_prismlike(prism(42))


def test_grid_with_one_big_face():
    v = is_prismlike(grid_example(20, 1))
    assert not v and v.degrees == (46,)


def test_cube_not_prismlike():
    assert not is_prismlike(prism(4)).witnesses


def test_prism_bands():
    d = band_decomposition(prism(43))
    assert d.M == 1 and d.bands[0].kind == "square" and len(d.bands[0].faces) == 43


def test_antiprism_bands():
    d = band_decomposition(antiprism(43))
    assert d.M == 1 and d.bands[0].kind == "triangle" and len(d.bands[0].faces) == 86


def test_stacked_bands():
    d = band_decomposition(stacked_prism(43, 2))
    assert d.M == 2 and all(b.kind == "square" for b in d.bands)


def test_mixed_bands_from_gluing():
    # 43-gon, a triangle band, a square band, a triangle band, 43-gon
    n = 43
    g = glue_patches(GlueSpec(antiprism_cap(n), prism_band(n)))
    g = glue_patches(GlueSpec(g, antiprism_band(n)))
    g = glue_patches(GlueSpec(g, polygon_patch(n)))
    d = band_decomposition(g)
    assert [b.kind for b in d.bands] == ["triangle", "square", "triangle"]
    prof = curvature_profile(g)
    assert prof.total == 2 and len(prof.positive) == 2 * n


def test_single_big_face_rejected_for_closed_maps():
    with pytest.raises(errors.NotPrismlikeStructure, match="exactly two"):
        band_decomposition(grid_example(20, 1))


def test_hexagons_must_be_subdivided():
    with pytest.raises(errors.NotPrismlikeStructure, match="subdivide"):
        band_decomposition(_prism_with_hexagon_band())


def _prism_with_hexagon_band():
    # 44-gon, ring of squares, ring of hexagons, 44-gon
    from curvtess.planar_map import from_faces

    n = 44
    faces = [tuple(range(n)), tuple(2 * n + i for i in reversed(range(n)))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((j, i, n + i, n + j))
    for i in range(0, n, 2):
        j, k = (i + 1) % n, (i + 2) % n
        faces.append((n + k, n + j, n + i, 2 * n + i, 2 * n + j, 2 * n + k))
    return from_faces(faces)


def test_big_face_sum_prism():
    m = prism(43)
    for f in big_faces(m):
        assert large_face_curvature_sum(m, f) == 1


def test_big_face_sum_antiprism():
    m = antiprism(50)
    assert all(large_face_curvature_sum(m, f) == 1 for f in big_faces(m))


def test_big_face_sum_grid():
    m = grid_example(20, 1)
    (f,) = big_faces(m)
    total = large_face_curvature_sum(m, f)
    assert total >= 1
    assert total == sum(curvature_profile(m).phi[v] for v in m.face_vertices(f))


def test_big_face_sum_preconditions():
    m = prism(10)
    with pytest.raises(errors.InvalidArgument):
        large_face_curvature_sum(m, 0)
    with pytest.raises(errors.InvalidArgument):
        large_face_curvature_sum(m, 999)


def test_half_cylinder_patch():
    core, band = half_cylinder(45)
    rep = periodic_closure_check(band, core)
    assert rep
    g = glue_patches(GlueSpec(rep.glued, band))
    v = is_prismlike(g)
    assert v and v.infinite
    d = band_decomposition(g)
    assert d.sigma2 is None and d.M == 2
    assert curvature_profile(g).total == 1


def test_subdivided_bands_have_no_pentagons():
    m = subdivide_hexagons(stacked_prism(43, 3))
    for b in band_decomposition(m).bands:
        assert b.kind in ("triangle", "square")


def test_c60_not_prismlike():
    assert not is_prismlike(fullerene_c60())


def test_honeycomb_patch_has_no_big_face():
    assert not is_prismlike(honeycomb_annulus(5, 2))
