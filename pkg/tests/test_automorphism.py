import math

import pytest

from curvtess import errors, kernels
from curvtess.automorphism import (
    brute_force_automorphisms,
    cellular_automorphisms,
    is_three_connected,
    isomorphic,
    restrict_to_TG,
    verify_group_axioms,
    verify_kernel_monomorphism,
    verify_order_bounds,
    verify_rigidity,
)
from curvtess.generators import (
    PLATONIC,
    antiprism,
    fullerene_c60,
    grid_core,
    grid_example,
    honeycomb_annulus,
    platonic,
    prism,
    pyramid,
    truncate,
)
from curvtess.planar_map import PlanarMap, mirror

SMALL = [platonic(n) for n in PLATONIC] + [
    prism(3), prism(5), prism(8), antiprism(4), antiprism(8), pyramid(4), pyramid(5),
    grid_example(1, 1), grid_example(2, 1), truncate(platonic("tetrahedron")),
]


def test_tetrahedron_order():
    assert cellular_automorphisms(platonic("tetrahedron")).order == 24


def test_cube_order():
    assert cellular_automorphisms(prism(4)).order == 48


def test_prism43_order():
    grp = cellular_automorphisms(prism(43))
    assert grp.order == 172 and grp.orientation_split == (86, 86)


@pytest.mark.parametrize("m", [m for m in SMALL if m.n_vertices <= 16], ids=repr)
def test_matches_brute_force(m):
    assert cellular_automorphisms(m).vertex_maps() == brute_force_automorphisms(m)


def test_dodecahedron_matches_brute_force():
    m = platonic("dodecahedron")
    assert cellular_automorphisms(m).vertex_maps() == brute_force_automorphisms(m, max_vertices=20)


def test_brute_force_size_limit():
    with pytest.raises(errors.InvalidArgument):
        brute_force_automorphisms(prism(9))


@pytest.mark.parametrize("m", [platonic("cube"), prism(7), antiprism(5), grid_example(2, 1)])
def test_group_axioms(m):
    grp = cellular_automorphisms(m)
    assert verify_group_axioms(grp)
    pres, refl = grp.orientation_split
    assert refl in (0, pres)


def test_preserving_elements_form_subgroup():
    grp = cellular_automorphisms(platonic("icosahedron"))
    pres = [h for h in grp if h.preserving]
    keys = {h.key for h in pres}
    assert all(a.compose(b).key in keys for a in pres for b in pres)
    assert grp.order % len(pres) == 0 and grp.order // len(pres) <= 2


def test_determined_by_one_dart():
    grp = cellular_automorphisms(platonic("dodecahedron"))
    seen = {}
    for h in grp:
        k = (int(h.darts[0]), h.orientation)
        assert k not in seen
        seen[k] = h


def test_induced_maps_preserve_incidence():
    m = antiprism(6)
    for h in cellular_automorphisms(m):
        hv, hf = h.vertex_map, h.face_map
        for f in range(m.n_faces):
            assert set(m.face_vertices(hf[f])) == {hv[v] for v in m.face_vertices(f)}
        edges = set(m.edges())
        assert set(h.edge_map.values()) == edges


def test_inverse_and_identity():
    grp = cellular_automorphisms(prism(6))
    ident = [h for h in grp if h.is_identity]
    assert len(ident) == 1
    for h in grp:
        assert h.compose(h.inverse()).is_identity


def test_restrict_cube():
    r = restrict_to_TG(prism(4))
    assert (r.kernel_order, r.image_order) == (1, 48)


def test_restrict_prism43():
    r = restrict_to_TG(prism(43))
    assert (r.kernel_order, r.image_order) == (1, 172)


def test_restrict_c60():
    m = fullerene_c60()
    grp = cellular_automorphisms(m)
    r = restrict_to_TG(m, grp)
    assert r.image_order == grp.order == 120


def test_restrict_partial_tg():
    m = grid_example(2, 2)
    r = restrict_to_TG(m)
    assert r.group_order == r.kernel_order * r.image_order
    assert verify_kernel_monomorphism(m, r)


def test_restrict_flat_patch():
    with pytest.raises(errors.UndefinedForFlat):
        restrict_to_TG(honeycomb_annulus(4, 2))


@pytest.mark.parametrize("m", [prism(4), prism(10), platonic("icosahedron"), grid_example(3, 3)])
def test_rigidity(m):
    assert verify_rigidity(m)


@pytest.mark.parametrize("m,bound", [(prism(43), 172), (antiprism(50), 200)])
def test_order_bounds_big_face(m, bound):
    rep = verify_order_bounds(m)
    assert rep["ok"] and rep["order"] == bound
    assert rep["divisibility_checks"][0]["value"] == bound


def test_order_bounds_cube():
    rep = verify_order_bounds(prism(4))
    assert rep["ok"] and (rep["a"], rep["b"]) == (8, 3)
    assert (math.factorial(8) * math.factorial(3)) % 48 == 0


def test_order_bounds_rejects_patch():
    with pytest.raises(errors.InvalidArgument):
        verify_order_bounds(grid_core(1, 1))


def test_patch_automorphisms_keep_holes():
    p = grid_core(2, 2)
    grp = cellular_automorphisms(p)
    assert grp.order == 8
    for h in grp:
        assert h.face_map[p.outer] == p.outer


def test_isomorphic_relabel_and_mirror():
    m = prism(7)
    shift = {v: v + 100 for v in m.vertex_ids}
    relabelled = PlanarMap({shift[v]: [shift[w] for w in m.rotation(v)] for v in m.vertex_ids})
    assert isomorphic(m, relabelled)
    assert isomorphic(m, mirror(m))
    assert not isomorphic(prism(6), antiprism(3))
    assert not isomorphic(prism(6), prism(7))


def test_three_connectivity():
    import networkx as nx

    for m in SMALL:
        expected = nx.node_connectivity(nx.Graph(m.edges())) >= 3
        assert is_three_connected(m) == expected
    # K_{2,4} drawn with the two hubs: connectivity 2
    theta = PlanarMap({0: [2, 3, 4, 5], 1: [5, 4, 3, 2], 2: [0, 1], 3: [0, 1], 4: [0, 1], 5: [0, 1]})
    assert not is_three_connected(theta)


def test_kernels_agree_on_groups():
    m = antiprism(9)
    ref = None
    for name, ks in kernels.KERNELS.items():
        found = set()
        for e in range(m.n_darts):
            for reflect in (False, True):
                ok, phi = ks["propagate"](m.rev, m.rnext, m.rev, m.rnext, m.rprev, 0, e, reflect)
                if ok:
                    found.add((reflect, phi.tobytes()))
        if ref is None:
            ref = found
        assert found == ref
    assert len(ref) == 36
