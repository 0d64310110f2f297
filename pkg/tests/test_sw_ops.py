import pytest
from hypothesis import given, strategies as st

from fullab import constructions as c, sw_ops
from fullab.errors import BadDegreeProfile, DegreeUnderflow, InvalidPath, MultiEdge
from fullab.graph_core import DualFullerene, Triangulation, as_fullerene, build_triangulation, canonical_code
from fullab.sw_ops import FlipSite, GswPath

from oracles import brute_gsw_paths, trace_faces


def _edge_set(g):
    return set(g.edges)


@given(data=st.data())
def test_flip_is_self_inverse(data, isomers):
    g = data.draw(st.sampled_from(isomers[32]))
    u, v = data.draw(st.sampled_from(g.edges))
    site = sw_ops.flip_site(g, u, v)
    try:
        h = sw_ops.psw_flip(Triangulation(g.rotation), site)
    except (MultiEdge, DegreeUnderflow):
        return
    assert h.has_edge(site.v3, site.v4) and not h.has_edge(u, v)
    build_triangulation(h.rotation)
    back = sw_ops.psw_flip(h, (site.v3, site.v4))
    assert _edge_set(back) == _edge_set(g)


def test_flip_guards():
    # triangular bipyramid: the two ends of an apex edge's opposite pair are adjacent
    b = c.bipyramid(5)
    apex = int(b.degrees.argmin())
    with pytest.raises(MultiEdge):
        sw_ops.psw_flip(b, (apex, b.rotation[apex][0]))
    d = c.dodecahedron()
    u, v = d.edges[0]
    s = sw_ops.flip_site(d, u, v)
    with pytest.raises(ValueError):
        sw_ops.psw_flip(d, FlipSite(u, v, s.v3, s.v3))
    with pytest.raises(ValueError):
        sw_ops.flip_site(d, u, u)


def test_flip_can_leave_fullerene_class(isomers):
    g = isomers[30][0]
    u, v = next((a, b) for a, b in g.edges if g.degree(a) == 5 and g.degree(b) == 5
                and g.degree(g.succ(a, b)) == 5)
    h = sw_ops.psw_flip(g, (u, v))
    assert not isinstance(h, DualFullerene)
    with pytest.raises(BadDegreeProfile):
        as_fullerene(h)


def test_classic_sites():
    assert sw_ops.classic_sw_sites(c.dodecahedron()) == []
    bucky = c.goldberg(1, 1)
    sites = sw_ops.classic_sw_sites(bucky)
    assert sites
    h = sw_ops.psw_flip(bucky, sites[0])
    assert isinstance(h, DualFullerene) and h.n == 60
    assert canonical_code(h) != canonical_code(bucky)
    for s in sites:
        p = sw_ops.site_as_path(s)
        sw_ops.validate_path(bucky, p)
        assert _edge_set(sw_ops.apply_gsw(bucky, p)) == _edge_set(sw_ops.psw_flip(bucky, s))


def test_classic_sites_valid_on_c60_like(isomers):
    for g in isomers[36]:
        for s in sw_ops.classic_sw_sites(g):
            h = sw_ops.psw_flip(g, s)
            assert isinstance(h, DualFullerene) and h.n == g.n


def test_paths_match_brute_force(isomers):
    for n in (28, 30, 32):
        for g in isomers[n]:
            ours = {p.vertices for p in sw_ops.find_gsw_paths(g)}
            assert ours == brute_gsw_paths(g, g.m // 2)


def test_no_paths_on_dodecahedron_and_family():
    assert sw_ops.find_gsw_paths(c.dodecahedron()) == []
    assert not sw_ops.has_gsw_path(c.dodecahedron())
    for t in (2, 3, 4):
        g = c.gsw_free_family(t)
        assert not sw_ops.has_gsw_path(g)
    assert brute_gsw_paths(c.gsw_free_family(2), 8) == set()


def test_every_small_isomer_has_a_path(isomers):
    for n in range(24, 37, 2):
        assert all(sw_ops.has_gsw_path(g) for g in isomers[n])
    assert sw_ops.has_gsw_path(c.nanotube_50(2))


def test_gsw_self_inverse_and_closed(isomers):
    for n in (28, 30, 32):
        codes = {canonical_code(g) for g in isomers[n]}
        for g in isomers[n]:
            for p in sw_ops.find_gsw_paths(g):
                h = sw_ops.apply_gsw(g, p)
                assert h.n == n and canonical_code(h) in codes
                assert len(trace_faces(h.rotation)) == 2 * h.m - 4
                back = sw_ops.apply_gsw(h, p.reversed_pairs())
                assert _edge_set(back) == _edge_set(g)


def test_invalid_paths(isomers):
    g = isomers[30][0]
    p = sw_ops.find_gsw_paths(g)[0]
    vs = list(p.vertices)
    with pytest.raises(InvalidPath):
        sw_ops.apply_gsw(g, vs[:3])
    with pytest.raises(InvalidPath):
        sw_ops.apply_gsw(g, vs[:2] + vs[:2])
    with pytest.raises(InvalidPath):
        sw_ops.apply_gsw(g, vs[::-1][1:] + [vs[0]])
    with pytest.raises(InvalidPath):
        sw_ops.validate_path(g, GswPath((0, 0, 0, 0)))


def test_path_helpers():
    p = GswPath((1, 2, 3, 4, 5, 6))
    assert p.w == 3
    assert p.reversed_pairs().vertices == (2, 1, 4, 3, 6, 5)
    assert p.fragment() == frozenset(range(1, 7))
