from fractions import Fraction as F

import pytest

from curvtess import errors
from curvtess.automorphism import isomorphic
from curvtess.curvature import curvature_profile
from curvtess.generators import (
    PLATONIC,
    GlueSpec,
    antiprism,
    antiprism_band,
    antiprism_cap,
    boundary_correspondence,
    cut_along_cycle,
    dual,
    fullerene_c60,
    glue,
    glue_patches,
    grid_core,
    grid_example,
    half_cylinder,
    honeycomb_annulus,
    periodic_closure_check,
    platonic,
    polygon_patch,
    prism,
    prism_band,
    prism_cap,
    pyramid,
    ring_patch,
    rung_annulus,
    stacked_prism,
    subdivide_hexagons,
    truncate,
)
from curvtess.planar_map import Patch, PlanarMap, validate_tessellation


def face_census(m):
    out = {}
    for f in range(m.n_faces):
        out[m.face_degree(f)] = out.get(m.face_degree(f), 0) + 1
    return out


@pytest.mark.parametrize("n", [3, 4, 7, 43])
def test_prism_shape(n):
    m = prism(n)
    prof = curvature_profile(m)
    assert set(prof.patterns.values()) == {tuple(sorted((4, 4, n)))}
    assert set(prof.phi.values()) == {F(1, n)}
    assert len(prof.positive) == 2 * n and prof.total == 2


@pytest.mark.parametrize("n", [3, 5, 9, 50])
def test_antiprism_shape(n):
    m = antiprism(n)
    prof = curvature_profile(m)
    assert set(prof.patterns.values()) == {tuple(sorted((3, 3, 3, n)))}
    assert set(prof.phi.values()) == {F(1, n)}
    assert face_census(m) == ({3: 2 * n + 2} if n == 3 else {3: 2 * n, n: 2})


@pytest.mark.parametrize("fn", [prism, antiprism, pyramid])
def test_small_n_rejected(fn):
    with pytest.raises(errors.InvalidArgument):
        fn(2)


def test_prism4_is_cube():
    assert isomorphic(prism(4), platonic("cube"))
    assert isomorphic(antiprism(3), platonic("octahedron"))


@pytest.mark.parametrize("name,v,phi", [
    ("tetrahedron", 4, F(1, 2)), ("cube", 8, F(1, 4)), ("octahedron", 6, F(1, 3)),
    ("dodecahedron", 20, F(1, 10)), ("icosahedron", 12, F(1, 6)),
])
def test_platonic_solids(name, v, phi):
    m = platonic(name)
    prof = curvature_profile(m)
    assert m.n_vertices == v and set(prof.phi.values()) == {phi}


def test_dodecahedron_pattern():
    prof = curvature_profile(platonic("dodecahedron"))
    assert set(prof.patterns.values()) == {(5, 5, 5)}


def test_unknown_platonic():
    with pytest.raises(errors.InvalidArgument):
        platonic("hexahedron")


def test_dual_of_cube_is_octahedron():
    assert isomorphic(dual(prism(4)), platonic("octahedron"))


def test_c60():
    m = fullerene_c60()
    assert m.n_vertices == 60 and face_census(m) == {5: 12, 6: 20}
    assert validate_tessellation(m).valid


def test_truncated_tetrahedron():
    m = truncate(platonic("tetrahedron"))
    assert m.n_vertices == 12 and face_census(m) == {3: 4, 6: 4}


@pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (3, 2), (20, 1), (5, 5)])
def test_grid_example(a, b):
    m = grid_example(a, b)
    prof = curvature_profile(m)
    mdeg = 2 * (a + b + 2)
    assert validate_tessellation(m).valid and prof.is_nonnegative()
    assert prof.total == 2 and len(prof.positive) == mdeg + 4
    big = [f for f in range(m.n_faces) if m.face_degree(f) > 4]
    assert [m.face_degree(f) for f in big] == [mdeg]


def test_grid_core_plus_polygon_is_grid():
    a, b = 3, 2
    core = grid_core(a, b)
    g = glue_patches(GlueSpec(core, polygon_patch(2 * (a + b + 2))))
    assert isinstance(g, PlanarMap)
    assert isomorphic(g, grid_example(a, b))


@pytest.mark.parametrize("n", [5, 43])
def test_caps_close_to_prisms(n):
    assert isomorphic(glue_patches(GlueSpec(prism_cap(n), polygon_patch(n))), prism(n))
    assert isomorphic(glue_patches(GlueSpec(antiprism_cap(n), polygon_patch(n))), antiprism(n))


def test_cap_band_cap_is_stacked_prism():
    mid = glue_patches(GlueSpec(prism_cap(6), prism_band(6)))
    assert isinstance(mid, Patch) and not mid.is_annulus
    assert isomorphic(glue_patches(GlueSpec(mid, polygon_patch(6))), stacked_prism(6, 2))


def test_glue_length_mismatch():
    with pytest.raises(errors.IncompatibleBoundaries):
        glue_patches(GlueSpec(grid_core(1, 1), polygon_patch(10)))


def test_glue_bad_correspondence():
    left, right = prism_cap(5), polygon_patch(5)
    L = left.boundary_cycle()
    R = right.boundary_cycle()
    scrambled = tuple(zip(L, (R[0], R[2], R[1], R[3], R[4])))
    with pytest.raises(errors.IncompatibleBoundaries):
        glue_patches(GlueSpec(left, right, scrambled))
    with pytest.raises(errors.IncompatibleBoundaries):
        glue_patches(GlueSpec(left, right, tuple(zip(L, [R[0]] * 5))))


def _split_square():
    from curvtess.planar_map import from_faces

    m = from_faces([(0, 1, 2), (0, 2, 3), (3, 2, 1, 0)])
    return Patch.from_darts(m, (3, 2))


def test_glue_multi_edge_detected():
    left, right = _split_square(), _split_square()
    # diagonals land on the same seam pair: a doubled edge
    with pytest.raises(errors.NonSimpleResult):
        glue_patches(GlueSpec(left, right, boundary_correspondence(left, right, 0)))
    # crossing diagonals give the tetrahedron
    g = glue_patches(GlueSpec(left, right, boundary_correspondence(left, right, 1)))
    assert isomorphic(g, platonic("tetrahedron"))


def test_same_direction_correspondence_mirrors():
    left, right = prism_cap(6), prism_cap(6)
    direct = boundary_correspondence(left, right, 0, True)
    same = boundary_correspondence(left, right, 0, False)
    g1, g2 = glue(GlueSpec(left, right, direct)), glue(GlueSpec(left, right, same))
    assert not g1.mirrored and g2.mirrored
    assert isomorphic(g1.graph, g2.graph)
    assert isomorphic(g1.graph, stacked_prism(6, 2))


def test_glue_result_is_valid_and_keeps_left_ids():
    left = prism_cap(7)
    res = glue(GlueSpec(left, antiprism_band(7)))
    m = res.graph.map
    assert validate_tessellation(res.graph).valid
    assert set(left.map.vertex_ids) <= set(m.vertex_ids)
    assert res.graph.boundary_cycle() and not res.graph.is_annulus


def test_cut_then_reglue_round_trip():
    m = stacked_prism(6, 2)
    a, b = cut_along_cycle(m, list(range(6, 12)))
    assert a.map.n_vertices == b.map.n_vertices == 12
    assert isomorphic(a, prism_cap(6)) and isomorphic(b, prism_cap(6))
    assert isomorphic(glue_patches(GlueSpec(a, b)), m)


def test_glue_then_cut_recovers_pieces():
    left, right = antiprism_cap(8), prism_cap(8)
    res = glue(GlueSpec(left, right))
    a, b = cut_along_cycle(res.graph, list(res.seam))
    assert {isomorphic(a, left), isomorphic(a, right)} == {True, False}
    assert isomorphic(b, right) or isomorphic(b, left)


def test_cut_rejects_face_cycle():
    with pytest.raises(errors.InvalidArgument):
        cut_along_cycle(prism(5), [0, 1, 2, 3, 4])


def test_subdivide_c60():
    m = fullerene_c60()
    s = subdivide_hexagons(m)
    before, after = curvature_profile(m), curvature_profile(s)
    assert s.n_vertices == 80
    for v, x in before.phi.items():
        assert after.phi[v] == x
    new = set(after.phi) - set(before.phi)
    assert len(new) == 20
    for v in new:
        assert after.patterns[v] == (3, 3, 3, 3, 3, 3) and after.phi[v] == 0
    assert after.total == 2


def test_subdivide_identity_without_hexagons():
    m = prism(5)
    assert subdivide_hexagons(m) is m


def test_subdivide_keeps_holes():
    h = honeycomb_annulus(4, 2)
    s = subdivide_hexagons(h)
    assert isinstance(s, Patch) and s.is_annulus
    assert s.boundary_cycle("outer") == h.boundary_cycle("outer")


def test_half_cylinder_closure():
    core, band = half_cylinder(43)
    rep = periodic_closure_check(band, core)
    assert rep and rep.violations == []
    prof = curvature_profile(rep.glued)
    assert prof.total == 1 and len(prof.positive) == 43
    assert set(rep.self_seam.values()) == {0}


def test_antiprism_half_cylinder_closure():
    core, band = half_cylinder(50, "antiprism")
    rep = periodic_closure_check(band, core)
    assert rep and curvature_profile(rep.glued).total == 1


def test_honeycomb_tube_is_flat():
    tube = honeycomb_annulus(5, 2)
    rep = periodic_closure_check(tube, polygon_patch(10))
    # the tube itself closes up flat; a 10-gon core cannot cap it with nonnegative curvature
    assert set(rep.self_seam.values()) == {0}
    assert not rep
    assert any(v.startswith("core/annulus") for v in rep.violations)


def test_seam_with_377_vertex_fails():
    ann = rung_annulus(5, [(0, 2), (1, 2), (2, 3), (3, 4)])
    rep = periodic_closure_check(ann, polygon_patch(5),
                                 self_correspondence=tuple((5 + j, j) for j in range(5)))
    assert not rep
    bad = [v for v in rep.violations if "(3,7,7)" in v]
    assert bad and "5/42" in bad[0]
    assert F(5, 42) in rep.self_seam.values()


def test_closure_length_mismatch():
    with pytest.raises(errors.IncompatibleBoundaries):
        periodic_closure_check(prism_band(6), polygon_patch(7))


def test_closure_needs_annulus():
    with pytest.raises(errors.InvalidArgument):
        periodic_closure_check(prism_cap(6), polygon_patch(6))


def test_ring_patch_bad_vertices():
    degs = [3, 4, 5, 4, 5, 4, 5, 4, 3, 4, 5, 4, 5, 4, 5, 4, 5, 4]
    p = ring_patch(degs)
    assert validate_tessellation(p).valid
    prof = curvature_profile(p)
    pats = set(prof.patterns.values())
    assert (4, 5, 18) in pats and (3, 4, 18) in pats
    assert prof.phi[next(v for v, q in prof.patterns.items() if q == (4, 5, 18))] == F(1, 180)


def test_ring_patch_rejects_adjacent_triangles():
    with pytest.raises(errors.InvalidArgument):
        ring_patch([3, 3, 4, 4])


def test_rung_annulus_structure():
    ann = rung_annulus(6, [(i, i) for i in range(6)])
    assert isomorphic(ann, prism_band(6))
