import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fullab import constructions as c, spiral
from fullab.errors import BudgetExceeded, SpiralStuck, ValidationError, WindupFailed
from fullab.graph_core import canonical_code, is_isomorphic
from fullab.spiral import PentagonVector

from oracles import ISO_COUNTS, embedded_isomorphic, pentagon_vectors


def test_dodecahedron_spirals():
    d = c.dodecahedron()
    starts = list(spiral.spiral_starts(d))
    assert len(starts) == 6 * d.n
    for start, orient in starts:
        trace = spiral.unwind(d, start, orient)
        assert sorted(trace.order) == list(range(12))
    assert spiral.canonical_pentagon_vector(d).positions == tuple(range(1, 13))


def test_start_count_is_6n(isomers):
    for g in isomers[30]:
        assert len(list(spiral.spiral_starts(g))) == 6 * g.n


def test_windup_dodecahedron():
    g = spiral.windup(PentagonVector(20, tuple(range(1, 13))))
    assert is_isomorphic(g, c.dodecahedron())


def test_n22_never_winds_up():
    for pos in pentagon_vectors(22):
        with pytest.raises((WindupFailed, ValidationError)):
            spiral.windup(PentagonVector(22, pos))


def test_feasibility_and_candidates():
    assert not spiral.is_feasible(22) and spiral.is_feasible(20) and spiral.is_feasible(24)
    assert spiral.candidate_count(30) == math.comb(17, 12)
    # C(32, 12); the often-quoted 1,399,358,844,975 is C(60, 12)
    assert spiral.candidate_count(60) == 225_792_840
    assert math.comb(60, 12) == 1_399_358_844_975


def test_n24_brute_force_single_class():
    wound = []
    for pos in pentagon_vectors(24):
        try:
            wound.append(spiral.windup(PentagonVector(24, pos)))
        except (WindupFailed, ValidationError):
            pass
    assert wound
    classes = []
    for g in wound:
        if not any(embedded_isomorphic(g, h) for h in classes):
            classes.append(g)
    assert len(classes) == 1


@pytest.mark.parametrize("n", [26, 28, 30])
def test_brute_force_class_counts(n):
    # every successful windup, grouped by an independent isomorphism test
    classes = []
    for pos in pentagon_vectors(n):
        try:
            g = spiral.windup(PentagonVector(n, pos))
        except (WindupFailed, ValidationError):
            continue
        if not any(embedded_isomorphic(g, h) for h in classes):
            classes.append(g)
    assert len(classes) == ISO_COUNTS[n]


@pytest.mark.parametrize("n", sorted(ISO_COUNTS))
def test_isomer_counts(n):
    assert spiral.isomer_count(n) == ISO_COUNTS[n]


def test_enumeration_canonical_and_distinct(isomers):
    for n, gs in isomers.items():
        vecs = spiral.enumerate_vectors(n)
        assert vecs == sorted(vecs)
        assert len({canonical_code(g) for g in gs}) == len(gs)
        for pv, g in zip(vecs, gs):
            assert spiral.canonical_pentagon_vector(g) == pv


def test_spiral_round_trip(isomers):
    for gs in isomers.values():
        for g in gs:
            pv = spiral.canonical_pentagon_vector(g)
            assert is_isomorphic(spiral.windup(pv), g)


@given(seed=st.integers(0, 2**32 - 1), data=st.data())
def test_canonical_vector_invariant(seed, data, isomers):
    g = data.draw(st.sampled_from(isomers[34]))
    perm = np.random.default_rng(seed).permutation(g.m).tolist()
    assert spiral.canonical_pentagon_vector(g.relabel(perm)) == spiral.canonical_pentagon_vector(g)
    assert spiral.canonical_pentagon_vector(g.mirror()) == spiral.canonical_pentagon_vector(g)


def test_degree_word_matches_trace(isomers):
    for g in isomers[28]:
        for start, orient in spiral.spiral_starts(g):
            try:
                trace = spiral.unwind(g, start, orient)
            except SpiralStuck:
                continue
            word = spiral.degree_word(g, trace)
            assert word == tuple(g.degree(v) for v in trace.order)
            if sorted(word).count(5) == 12:
                assert is_isomorphic(spiral.windup(PentagonVector.from_word(word)), g)


def test_nanotube_is_minimum_c30():
    pv = spiral.canonical_pentagon_vector(c.nanotube_50(1))
    assert pv == min(spiral.enumerate_vectors(30))


def test_isomer_index():
    assert spiral.isomer_index(c.dodecahedron()) == (20, 1)
    assert spiral.isomer_index(c.nanotube_50(1)) == (30, 1)
    a, b = spiral.enumerate_isomers(28)
    assert {spiral.isomer_index(a), spiral.isomer_index(b)} == {(28, 1), (28, 2)}


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        spiral.enumerate_vectors(40, budget=100)


def test_thread_counts_agree():
    assert spiral.enumerate_vectors(34, threads=1) == spiral.enumerate_vectors(34, threads=3)


def test_pentagon_vector_validation():
    with pytest.raises(ValueError):
        PentagonVector(30, (1, 2, 3))
    with pytest.raises(ValueError):
        PentagonVector(30, tuple(range(7, 19)))
    assert str(PentagonVector(20, tuple(range(1, 13)))) == "20 1 2 3 4 5 6 7 8 9 10 11 12"
