"""Invariants over generated families, random relabelings and random patterns."""
from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from curvtess.automorphism import cellular_automorphisms, isomorphic
from curvtess.curvature import check_twelfth_integrality, classify_value, curvature_profile
from curvtess.generators import (
    GlueSpec,
    antiprism,
    antiprism_band,
    antiprism_cap,
    glue_patches,
    grid_example,
    platonic,
    polygon_patch,
    prism,
    prism_band,
    prism_cap,
    pyramid,
    stacked_prism,
    subdivide_hexagons,
    truncate,
)
from curvtess.planar_map import PlanarMap, dual_adjacency, validate_tessellation
from curvtess.tables import match_pattern


def sign_of(p):
    # integer arithmetic, independent of Fraction: sign of (2 - N) + 2 * sum(1/a)
    L = 1
    for a in p:
        L *= a
    s = (2 - len(p)) * L + 2 * sum(L // a for a in p)
    return (s > 0) - (s < 0)


def table_sign(p):
    fam = match_pattern(p)
    if fam is None:
        return -1
    return 1 if fam.parametric else 0


def maps():
    n = st.integers(3, 30)
    return st.one_of(
        n.map(prism),
        n.map(antiprism),
        st.integers(3, 5).map(pyramid),
        st.tuples(st.integers(3, 12), st.integers(1, 4)).map(lambda t: stacked_prism(*t)),
        st.tuples(st.integers(1, 6), st.integers(1, 6)).map(lambda t: grid_example(*t)),
        st.sampled_from(["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"]).map(platonic),
        st.integers(3, 9).map(lambda k: truncate(prism(k))),
    )


def relabel(m, data):
    ids = data.draw(st.permutations(range(1000, 1000 + m.n_vertices)))
    f = dict(zip(m.vertex_ids, ids))
    order = data.draw(st.integers(0, 10))
    rot = {}
    for v in m.vertex_ids:
        r = [f[w] for w in m.rotation(v)]
        k = order % len(r)
        rot[f[v]] = r[k:] + r[:k]
    return PlanarMap(rot)


@given(maps())
def test_gauss_bonnet_and_validity(m):
    assert validate_tessellation(m).valid
    prof = curvature_profile(m)
    assert prof.is_nonnegative()
    assert prof.total == 2
    assert check_twelfth_integrality(prof)


@given(maps())
def test_handshake(m):
    assert sum(m.degree(v) for v in m.vertex_ids) == 2 * m.n_edges
    assert sum(m.face_degree(f) for f in range(m.n_faces)) == 2 * m.n_edges
    assert m.n_vertices - m.n_edges + m.n_faces == 2


@given(maps())
def test_dual_pairs_once(m):
    pairs = dual_adjacency(m)
    assert len(pairs) == len(set(pairs)) == m.n_edges


@given(maps(), st.data())
def test_relabel_invariance(m, data):
    r = relabel(m, data)
    assert sorted(curvature_profile(r).phi.values()) == sorted(curvature_profile(m).phi.values())
    assert sorted(map(len, r.face_cycles())) == sorted(map(len, m.face_cycles()))
    assert isomorphic(m, r)


@given(maps())
def test_curvature_matches_table_sign(m):
    for v, p in curvature_profile(m).patterns.items():
        assert table_sign(p) == sign_of(p)


@given(maps())
def test_classes_are_exclusive(m):
    for x in curvature_profile(m).phi.values():
        assert classify_value(x) in ("good", "bad", "zero")


@given(st.lists(st.integers(3, 200), min_size=3, max_size=6))
def test_random_patterns_match_tables(p):
    p = tuple(sorted(p))
    assert table_sign(p) == sign_of(p)


@pytest.mark.parametrize("length,top", [(3, 200), (4, 45), (5, 20), (6, 12)])
def test_table_completeness_exhaustive(length, top):
    for p in combinations_with_replacement(range(3, top + 1), length):
        assert table_sign(p) == sign_of(p), p


@given(st.integers(3, 14), st.integers(1, 3), st.data())
def test_glue_stack_matches_prism(n, bands, data):
    g = prism_cap(n)
    for _ in range(bands - 1):
        g = glue_patches(GlueSpec(g, prism_band(n)))
    g = glue_patches(GlueSpec(g, polygon_patch(n)))
    assert isomorphic(g, stacked_prism(n, bands))


@given(st.integers(3, 14))
def test_antiprism_cap_closes(n):
    assert isomorphic(glue_patches(GlueSpec(antiprism_cap(n), polygon_patch(n))), antiprism(n))
    band = glue_patches(GlueSpec(antiprism_cap(n), antiprism_band(n)))
    assert validate_tessellation(band).valid


@given(maps())
def test_subdivision_preserves_old_curvature(m):
    s = subdivide_hexagons(m)
    before, after = curvature_profile(m).phi, curvature_profile(s).phi
    assert all(after[v] == x for v, x in before.items())
    assert all(after[v] == 0 for v in set(after) - set(before))


@given(st.sampled_from([prism(5), antiprism(4), platonic("cube"), grid_example(2, 1)]))
def test_group_order_at_most_twice_darts(m):
    assert cellular_automorphisms(m).order <= 2 * m.n_darts


@given(st.lists(st.integers(3, 60), min_size=3, max_size=6))
def test_pattern_curvature_bounded(p):
    from curvtess.curvature import pattern_curvature

    x = pattern_curvature(p)
    assert x == 1 - F(len(p), 2) + sum(F(1, a) for a in p)
    assert x <= F(1, 2)
