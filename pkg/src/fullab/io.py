"""File formats: planar_code, spiral text lines, the isomer database and CSV.

planar_code is the binary interchange format of plantri-family tools: the
15-byte header ``>>planar_code<<``, then per graph one byte ``m`` followed,
for each vertex ``1..m``, by its neighbours in rotation order and a 0 byte.
Only the 8-bit variant (``m <= 255``) is supported.

Spiral files hold one ``n p1 .. p12`` line per graph (1-based positions).
"""
from __future__ import annotations

import bisect
import csv
import os
from pathlib import Path
from typing import BinaryIO, Iterable, Sequence, TextIO

from .errors import (BadHeader, FormatError, NotFound, RecordValidationFailed, TruncatedRecord,
                     ValidationError, WindupFailed)
from .graph_core import PlaneGraph, build, build_triangulation, canonical_code
from . import spiral

HEADER = b">>planar_code<<"
MODES = ("fullerene", "triangulation", "plane")


def encode_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    """Serialize graphs to planar_code bytes."""
    out = bytearray(HEADER if header else b"")
    for g in graphs:
        if g.m > 255:
            raise ValueError(f"{g.m} vertices do not fit the 8-bit planar_code variant")
        out.append(g.m)
        for v in range(g.m):
            out.extend(u + 1 for u in g.rotation[v])
            out.append(0)
    return bytes(out)


def _make(lists: list[list[int]], mode: str) -> PlaneGraph:
    if mode == "fullerene":
        return build(lists)
    if mode == "triangulation":
        return build_triangulation(lists)
    return PlaneGraph.from_lists(lists)


def decode_planar_code(data: bytes, mode: str = "fullerene") -> list[PlaneGraph]:
    """Parse planar_code bytes.

    ``mode`` selects the validation applied to each record: ``fullerene``
    (dual fullerene), ``triangulation`` (any simple sphere triangulation,
    e.g. pSW chain states) or ``plane`` (rotation system only).

    Raises:
        BadHeader: the data does not start with ``>>planar_code<<``.
        TruncatedRecord: the data ends inside a record.
        RecordValidationFailed: a record fails validation (carries its index).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not data.startswith(HEADER):
        raise BadHeader(f"expected {HEADER!r}, got {data[:len(HEADER)]!r}")
    pos = len(HEADER)
    graphs: list[PlaneGraph] = []
    while pos < len(data):
        index = len(graphs)
        m = data[pos]
        pos += 1
        if m == 0:
            raise FormatError(f"record {index}: 16-bit planar_code is not supported")
        lists: list[list[int]] = []
        for _ in range(m):
            end = data.find(0, pos)
            if end < 0:
                raise TruncatedRecord(f"record {index} ends after {len(lists)} of {m} vertices")
            nbrs = [b - 1 for b in data[pos:end]]
            pos = end + 1
            if any(u >= m for u in nbrs):
                raise RecordValidationFailed(index, ValidationError(f"neighbour id > {m}"))
            lists.append(nbrs)
        try:
            graphs.append(_make(lists, mode))
        except (ValidationError, ValueError, IndexError, KeyError) as exc:
            raise RecordValidationFailed(index, exc) from exc
    return graphs


def write_planar_code(target: str | os.PathLike | BinaryIO, graphs: Iterable[PlaneGraph]) -> None:
    data = encode_planar_code(graphs)
    if hasattr(target, "write"):
        target.write(data)
    else:
        Path(target).write_bytes(data)


def read_planar_code(source: str | os.PathLike | BinaryIO, mode: str = "fullerene") -> list[PlaneGraph]:
    data = source.read() if hasattr(source, "read") else Path(source).read_bytes()
    return decode_planar_code(data, mode)


def format_spiral(pv: spiral.PentagonVector) -> str:
    return str(pv)


def parse_spiral(line: str) -> spiral.PentagonVector:
    """Parse ``n p1 .. p12``; raises FormatError on malformed input."""
    parts = line.split()
    if len(parts) != 13:
        raise FormatError(f"expected 13 integers, got {len(parts)}: {line.strip()!r}")
    try:
        nums = [int(p) for p in parts]
        return spiral.PentagonVector(nums[0], tuple(nums[1:]))
    except ValueError as exc:
        raise FormatError(f"bad spiral line {line.strip()!r}: {exc}") from exc


def write_spirals(target: str | os.PathLike | TextIO, vectors: Iterable[spiral.PentagonVector]) -> None:
    text = "".join(format_spiral(pv) + "\n" for pv in vectors)
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_text(text, newline="\n")


def read_spirals(source: str | os.PathLike | TextIO) -> list[spiral.PentagonVector]:
    """Spiral lines; blank lines and ``#`` comments are skipped."""
    text = source.read() if hasattr(source, "read") else Path(source).read_text()
    out = []
    for k, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        try:
            out.append(parse_spiral(line))
        except FormatError as exc:
            raise FormatError(f"line {k}: {exc}") from exc
    return out


def _db_paths(directory: str | os.PathLike, n: int) -> tuple[Path, Path]:
    d = Path(directory)
    return d / f"c{n:03d}.spiral", d / f"c{n:03d}.index"


def db_build(n: int, directory: str | os.PathLike, budget: int = spiral.DEFAULT_BUDGET,
             threads: int = 1) -> Path:
    """Write the isomers of ``C_n`` as spiral lines in ``C_{n,j}`` order.

    Lines are sorted as integer tuples, so line ``j`` holds ``C_{n,j}``. A
    companion index maps hex canonical codes to ``j``.
    """
    vecs = spiral.enumerate_vectors(n, budget, threads)
    spiral_path, index_path = _db_paths(directory, n)
    spiral_path.parent.mkdir(parents=True, exist_ok=True)
    write_spirals(spiral_path, vecs)
    rows = sorted((canonical_code(spiral.windup(pv)).hex(), j) for j, pv in enumerate(vecs, 1))
    index_path.write_text("".join(f"{code} {j}\n" for code, j in rows), newline="\n")
    return spiral_path


def _canonical(pv: spiral.PentagonVector) -> spiral.PentagonVector:
    try:
        return spiral.canonical_pentagon_vector(spiral.windup(pv))
    except (WindupFailed, ValidationError) as exc:
        raise NotFound(f"{pv} does not wind up to a fullerene") from exc


def db_lookup(query: spiral.PentagonVector | PlaneGraph, directory: str | os.PathLike) -> tuple[int, int]:
    """``(n, j)`` of a pentagon vector (any spiral of the isomer) or a graph.

    Raises:
        NotFound: the isomer is not in the database.
        FileNotFoundError: no database for this ``n``.
    """
    if isinstance(query, PlaneGraph):
        n = 2 * (query.m - 2)
        code = canonical_code(query).hex()
        _, index_path = _db_paths(directory, n)
        for line in index_path.read_text().splitlines():
            key, j = line.split()
            if key == code:
                return n, int(j)
        raise NotFound(f"graph with {query.m} vertices is not in the database")
    pv = _canonical(query)
    spiral_path, _ = _db_paths(directory, pv.n)
    vecs = read_spirals(spiral_path)
    i = bisect.bisect_left(vecs, pv)
    if i == len(vecs) or vecs[i] != pv:
        raise NotFound(f"{pv} is not in the database")
    return pv.n, i + 1


def format_float(x: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return f"{float(x):.17g}"


def write_csv(target: TextIO, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    """CSV with LF endings; floats are printed with :func:`format_float`."""
    w = csv.writer(target, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_float(x) if isinstance(x, float) else x for x in row])
