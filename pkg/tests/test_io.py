import io

import pytest
from hypothesis import given, strategies as st

from fullab import constructions as c, io as fio, spiral
from fullab.errors import BadHeader, FormatError, NotFound, RecordValidationFailed, TruncatedRecord
from fullab.graph_core import Triangulation, is_isomorphic

from oracles import embedded_isomorphic


def test_dodecahedron_round_trip(tmp_path):
    path = tmp_path / "d.pc"
    fio.write_planar_code(path, [c.dodecahedron()])
    data = path.read_bytes()
    assert data.startswith(b">>planar_code<<")
    assert data[15] == 12 and len(data) == 15 + 1 + 12 * 6
    (g,) = fio.read_planar_code(path)
    assert is_isomorphic(g, c.dodecahedron())
    assert fio.encode_planar_code([g]) == data


def test_wire_format_is_one_based():
    data = fio.encode_planar_code([c.dodecahedron()])
    first = data[16:data.index(0, 16)]
    assert min(first) >= 1 and max(first) <= 12
    assert list(first) == [u + 1 for u in c.dodecahedron().rotation[0]]


def test_byte_identity_all_isomers(isomers):
    graphs = [g for gs in isomers.values() for g in gs]
    data = fio.encode_planar_code(graphs)
    back = fio.decode_planar_code(data)
    assert fio.encode_planar_code(back) == data
    assert all(a.rotation == b.rotation for a, b in zip(graphs, back))


@given(data=st.binary(max_size=40))
def test_garbage_after_header_never_crashes(data):
    try:
        fio.decode_planar_code(fio.HEADER + data, "plane")
    except (FormatError,):
        pass


def test_header_typo():
    with pytest.raises(BadHeader):
        fio.decode_planar_code(b">>planar_kode<<" + bytes([1, 0]))


def test_truncated_record():
    data = fio.encode_planar_code([c.dodecahedron()])
    with pytest.raises(TruncatedRecord):
        fio.decode_planar_code(data[:-3])


def test_strict_mode_rejects_non_fullerene():
    # bipyramid over an 11-gon: 13 vertices, 11 of degree 4
    data = fio.encode_planar_code([c.dodecahedron(), c.bipyramid(13)])
    with pytest.raises(RecordValidationFailed) as err:
        fio.decode_planar_code(data)
    assert err.value.index == 1
    graphs = fio.decode_planar_code(data, "triangulation")
    assert isinstance(graphs[1], Triangulation)


def test_out_of_range_neighbour():
    with pytest.raises(RecordValidationFailed):
        fio.decode_planar_code(fio.HEADER + bytes([2, 2, 0, 3, 0]), "plane")


def test_spiral_text_round_trip(isomers):
    vecs = [spiral.canonical_pentagon_vector(g) for gs in isomers.values() for g in gs]
    buf = io.StringIO()
    fio.write_spirals(buf, vecs)
    text = buf.getvalue()
    assert text.splitlines()[0] == "20 1 2 3 4 5 6 7 8 9 10 11 12"
    assert fio.read_spirals(io.StringIO("# comment\n\n" + text)) == vecs
    with pytest.raises(FormatError):
        fio.read_spirals(io.StringIO("30 1 2 3\n"))
    with pytest.raises(FormatError):
        fio.parse_spiral("30 1 2 3 4 5 6 7 8 9 10 11 x")


def test_cross_format_consistency(isomers):
    for n, gs in isomers.items():
        data = fio.encode_planar_code(gs)
        for g in fio.decode_planar_code(data):
            pv = fio.parse_spiral(fio.format_spiral(spiral.canonical_pentagon_vector(g)))
            h = spiral.windup(pv)
            (k,) = fio.decode_planar_code(fio.encode_planar_code([h]))
            assert embedded_isomorphic(k, g)


def test_db_build_and_lookup(tmp_path):
    path = fio.db_build(30, tmp_path)
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert fio.db_lookup(spiral.canonical_pentagon_vector(c.nanotube_50(1)), tmp_path) == (30, 1)
    assert fio.db_lookup(c.nanotube_50(1).relabel(list(range(17))[::-1]), tmp_path) == (30, 1)
    for j, g in enumerate(spiral.enumerate_isomers(30), 1):
        assert fio.db_lookup(g, tmp_path) == (30, j)
    with pytest.raises(NotFound):
        fio.db_lookup(spiral.PentagonVector(30, tuple(range(1, 13))), tmp_path)


def test_db_lookup_non_canonical_spiral(tmp_path):
    fio.db_build(32, tmp_path)
    g = spiral.enumerate_isomers(32)[3]
    # a spiral of g that is not its canonical one
    for start, orient in spiral.spiral_starts(g):
        try:
            trace = spiral.unwind(g, start, orient)
        except Exception:
            continue
        word = spiral.degree_word(g, trace)
        pv = spiral.PentagonVector.from_word(word)
        if pv != spiral.canonical_pentagon_vector(g):
            assert fio.db_lookup(pv, tmp_path) == (32, 4)
            break


def test_csv_format():
    buf = io.StringIO()
    fio.write_csv(buf, ("a", "b"), [(1, 0.1), (2, 1 / 3)])
    assert buf.getvalue() == "a,b\n1,0.10000000000000001\n2,0.33333333333333331\n"
    assert float(fio.format_float(1 / 3)) == 1 / 3
