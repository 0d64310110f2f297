import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from fullab import constructions as c, spectral as sp, spiral
from fullab.errors import EmptyInput, NotSymmetric, OutOfRange
from fullab.graph_core import graph_matrix, is_isomorphic, subgraph

from oracles import character_expm, dodecahedron_character

FIG_PAIRS = [(1.0, 1.0), (1.0, 0.5), (0.5, 1.0), (0.5, 0.25)]


def test_icosahedron_spectrum():
    lam = sp.sym_eigenvalues(graph_matrix(c.dodecahedron(), "A").data)
    s5 = math.sqrt(5)
    ref = sorted([5.0] + [s5] * 3 + [-s5] * 3 + [-1.0] * 5, reverse=True)
    assert np.allclose(lam, ref, atol=1e-12)
    assert abs(lam.sum()) < 1e-12 and abs((lam**2).sum() - 60) < 1e-10
    assert np.allclose(sp.sym_eigenvalues(graph_matrix(c.dodecahedron(), "D").data), 5.0)
    assert np.array_equal(sp.sym_eigenvalues(np.zeros((4, 4))), np.zeros(4))


@given(arrays(np.float64, (9, 9), elements=st.floats(-10, 10)))
def test_eigenvalues_match_numpy(a):
    m = a + a.T
    ours = sp.sym_eigenvalues(m)
    ref = np.sort(np.linalg.eigvalsh(m))[::-1]
    assert np.allclose(ours, ref, atol=1e-9 * max(1.0, np.abs(m).max()))


def test_eigenvalues_reject_asymmetric():
    with pytest.raises(NotSymmetric):
        sp.sym_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotSymmetric):
        sp.sym_eigenvalues(np.zeros((2, 3)))


def test_newton_sums():
    a = graph_matrix(c.dodecahedron(), "A").data
    assert sp.newton(a, 0).value == 12
    assert sp.newton(a, 2).value == 60
    assert sp.newton(a, 3).value == 120 == np.trace(np.linalg.matrix_power(a, 3))


def test_dodecahedron_character():
    ch = sp.character(c.dodecahedron())
    assert abs(ch - dodecahedron_character()) < 1e-10
    assert abs(ch - 88.56) < 0.01
    assert sp.character(c.dodecahedron(), sp.DEFAULT_ALPHA, sp.DEFAULT_BETA) == ch


@pytest.mark.parametrize("alpha,beta", FIG_PAIRS)
def test_character_matches_expm(alpha, beta, isomers):
    for g in isomers[30] + isomers[32]:
        assert math.isclose(sp.character(g, alpha, beta), character_expm(g, alpha, beta), rel_tol=1e-11)


def test_character_series_agrees(isomers):
    for g in isomers[28]:
        for alpha, beta in FIG_PAIRS:
            series, bound = sp.character_series(g, alpha, beta)
            assert bound < 1e-10 * series
            assert math.isclose(series, sp.character(g, alpha, beta), rel_tol=1e-10)


def test_small_parameter_limit(isomers):
    for n in (20, 28, 36):
        for g in isomers[n]:
            assert abs(sp.character(g, 1e-8, 1e-8) - (n / 2 + 2)) < 1e-5


def test_representations():
    g = c.goldberg(1, 1)
    assert sp.character(c.dodecahedron(), representation="hex") == 0.0
    assert sp.character(g, representation="pent") == pytest.approx(12.0 * math.exp(0.0))
    p = sp.character(g, representation="primal")
    assert p > 0
    assert sp.character(subgraph(g, 6)) == sp.character(g, representation="hex")


def test_normalization():
    assert sp.normalized_character(1.0, 1.0, 3.0) == 0.0
    assert sp.normalized_character(3.0, 1.0, 3.0) == 1.0
    assert sp.normalized_character(2.0, 1.0, 3.0) == 0.5
    with pytest.raises(OutOfRange):
        sp.normalized_character(3.5, 1.0, 3.0)
    with pytest.raises(ValueError):
        sp.normalized_character(1.0, 2.0, 2.0)


def test_normalized_newton():
    d = c.dodecahedron()
    assert sp.normalized_newton(d, 0) == pytest.approx(1.0)
    assert sp.normalized_newton(d, 1) == pytest.approx(2.5)
    m = graph_matrix(d, "combination", 1.0, 0.5).data
    assert sp.normalized_newton(d, 2) == pytest.approx(2 / 24 * np.trace(m @ m))


def test_character_range_extremes():
    r30 = sp.character_range(30, neighbors=(28, 32))
    assert is_isomorphic(spiral.enumerate_isomers(30)[r30.argmax - 1], c.nanotube_50(1))
    assert set(r30.neighbors) == {28, 32}
    r20 = sp.character_range(20)
    assert r20.min == r20.max


def test_nanotube_max_c40():
    r = sp.character_range(40)
    assert is_isomorphic(spiral.enumerate_isomers(40)[r.argmax - 1], c.nanotube_50(2))


def test_sweep_normalized_bounds():
    rows = sp.sweep(32)
    vals = [r.normalized for r in rows]
    assert min(vals) == 0.0 and max(vals) == 1.0


def test_histogram():
    rows = sp.histogram([2.0], bins=1)
    assert rows[0].density == pytest.approx(1 / (rows[0].right - rows[0].left))
    flat = sp.histogram((np.arange(1000) + 0.5) / 1000, bins=10, range=(0, 1))
    assert all(r.count == 100 for r in flat)
    vals = [r.character for r in sp.sweep(40)]
    rows = sp.histogram(vals, bins=50)
    assert abs(sum(r.density * (r.right - r.left) for r in rows) - 1) < 1e-9
    with pytest.raises(EmptyInput):
        sp.histogram([])


def test_min_gap():
    gs = spiral.enumerate_isomers(32)
    gap, (i, j) = sp.min_character_gap(gs)
    vals = [sp.character(g) for g in gs]
    assert gap == pytest.approx(min(abs(a - b) for k, a in enumerate(vals) for b in vals[k + 1:]))
    assert i < j
