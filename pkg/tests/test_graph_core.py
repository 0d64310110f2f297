import numpy as np
import pytest
from hypothesis import given, strategies as st

from fullab import constructions as c
from fullab.errors import BadDegreeProfile, NonTriangleFace, NotSphere, NotSymmetric
from fullab.graph_core import (
    DualFullerene,
    PlaneGraph,
    build,
    build_triangulation,
    canonical_code,
    dual_of_primal,
    graph_matrix,
    is_isomorphic,
    primal,
    subgraph,
)

from oracles import embedded_isomorphic, euler_characteristic, trace_faces

OCTAHEDRON = [[1, 2, 3, 4], [0, 4, 5, 2], [0, 1, 5, 3], [0, 2, 5, 4], [0, 3, 5, 1], [1, 4, 3, 2]]


def test_icosahedron_lists_build_dual_fullerene():
    g = build(c.dodecahedron().rotation)
    assert isinstance(g, DualFullerene)
    assert (g.m, g.n) == (12, 20)


def test_octahedron_bad_degree_profile():
    assert euler_characteristic(OCTAHEDRON) == 2
    build_triangulation(OCTAHEDRON)
    with pytest.raises(BadDegreeProfile):
        build(OCTAHEDRON)


def test_thirteen_pentagons_rejected():
    # a sphere triangulation with 13 degree-5 vertices cannot be a fullerene dual
    tri = c.bipyramid(13)
    assert np.count_nonzero(tri.degrees == 4) == 11
    with pytest.raises(BadDegreeProfile):
        build(tri.rotation)


def test_asymmetric_lists_rejected():
    lists = [list(nb) for nb in OCTAHEDRON]
    lists[0] = [1, 2, 3, 5]
    with pytest.raises(NotSymmetric):
        build_triangulation(lists)


def test_non_triangle_face_rejected():
    # cube: a sphere whose faces are quadrilaterals
    cube = [[1, 3, 4], [0, 5, 2], [1, 6, 3], [0, 2, 7], [0, 7, 5], [1, 4, 6], [2, 5, 7], [3, 6, 4]]
    assert euler_characteristic(cube) == 2
    with pytest.raises(NonTriangleFace):
        build_triangulation(cube)


def test_disconnected_rejected():
    tet = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
    two = tet + [[x + 4 for x in nb] for nb in tet]
    with pytest.raises(NotSphere):
        build_triangulation(two)


def test_dodecahedron_dual_faces():
    g = c.dodecahedron()
    assert len(g.faces()) == 20
    assert g.num_edges == 30


def test_nanotube_face_count():
    g = c.nanotube_50(1)
    assert len(g.faces()) == 30


def test_faces_match_oracle(isomers):
    for g in isomers[32]:
        ours = sorted(tuple(sorted(f)) for f in g.faces())
        ref = sorted(tuple(sorted(f)) for f in trace_faces(g.rotation))
        assert ours == ref
        assert sum(len(f) for f in g.faces()) == 2 * g.num_edges


def test_subgraph_views():
    d = c.dodecahedron()
    assert subgraph(d, 6).graph.m == 0
    five = subgraph(d, 5)
    assert is_isomorphic(five.graph, d)
    comps = subgraph(c.gsw_free_family(2), 5).graph.components
    assert len(comps) == 4 and all(len(x) == 3 for x in comps)


def test_matrices():
    d = c.dodecahedron()
    a = graph_matrix(d, "A").data
    assert a.shape == (12, 12) and np.array_equal(a, a.T)
    assert np.all(a.sum(axis=1) == 5)
    assert np.array_equal(graph_matrix(d, "D").data, 5 * np.eye(12))
    assert np.array_equal(graph_matrix(d, "combination", 0.0, 1.0).data, graph_matrix(d, "D").data)


@given(seed=st.integers(min_value=0, max_value=2**32 - 1), n=st.sampled_from([28, 30, 32, 34]), data=st.data())
def test_canonical_code_relabel_and_mirror(seed, n, data, isomers):
    g = data.draw(st.sampled_from(isomers[n]))
    perm = np.random.default_rng(seed).permutation(g.m).tolist()
    h = g.relabel(perm)
    assert canonical_code(h) == canonical_code(g)
    assert canonical_code(g.mirror()) == canonical_code(g)
    assert is_isomorphic(g, h)


def test_codes_separate_isomers(isomers):
    for n in (28, 32, 36):
        codes = {canonical_code(g) for g in isomers[n]}
        assert len(codes) == len(isomers[n])


def test_code_agrees_with_isomorphism_oracle(isomers):
    gs = isomers[32]
    for i, a in enumerate(gs):
        for b in gs[i:]:
            assert (canonical_code(a) == canonical_code(b)) == embedded_isomorphic(a, b)


def test_isomorphism_examples(isomers):
    g = isomers[30][1]
    assert is_isomorphic(g, g.relabel(list(reversed(range(g.m)))))
    assert not is_isomorphic(c.dodecahedron(), isomers[24][0])
    assert is_isomorphic(c.goldberg(1, 0), c.nanotube_50(0))


def test_primal_of_icosahedron():
    p = primal(c.dodecahedron())
    assert p.m == 20 and np.all(p.degrees == 3)
    assert sorted(len(f) for f in trace_faces(p.rotation)) == [5] * 12


def test_primal_dual_round_trip(isomers):
    for n, gs in isomers.items():
        for g in gs:
            p = primal(g)
            assert p.num_edges == 3 * n // 2
            assert is_isomorphic(dual_of_primal(p), g)


def test_plane_graph_helpers():
    g = PlaneGraph.from_lists([[1, 2], [2, 0], [0, 1], []])
    assert len(g.components) == 2
    sub, keep = g.induced([0, 1])
    assert keep == (0, 1) and sub.num_edges == 1
