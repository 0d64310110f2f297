"""Stone-Wales rewriting: edge flips, classic SW sites and generalized SW paths.

A gSW path ``(v_1, ..., v_{2w})`` is a zigzag strip of triangles: consecutive
vertices are adjacent and so are ``v_i, v_{i+2}``. Applying it removes the
rungs ``(v_{2i}, v_{2i+1})`` and inserts ``(v_{2i-1}, v_{2i+2})``, one edge
flip per rung, which swaps the degrees at both ends of the strip.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DegreeUnderflow, InvalidPath, MultiEdge, ValidationError
from .graph_core import DualFullerene, PlaneGraph, Triangulation, build_triangulation, check_fullerene_degrees
from .kernels import flip as _kf


@dataclass(frozen=True)
class FlipSite:
    """Edge ``(v1, v2)`` with its two opposite vertices ``v3``, ``v4``."""

    v1: int
    v2: int
    v3: int
    v4: int

    @property
    def edge(self) -> tuple[int, int]:
        return self.v1, self.v2


@dataclass(frozen=True)
class GswPath:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def w(self) -> int:
        return len(self.vertices) // 2

    def reversed_pairs(self) -> "GswPath":
        """``(v_2, v_1, v_4, v_3, ...)``: the path of the rewritten graph."""
        vs = self.vertices
        out = []
        for i in range(0, len(vs), 2):
            out += [vs[i + 1], vs[i]]
        return GswPath(tuple(out))

    def fragment(self) -> frozenset[int]:
        return frozenset(self.vertices)


def flip_site(tri: PlaneGraph, u: int, v: int) -> FlipSite:
    """The flip site of edge ``u-v`` (raises ValueError if it is not an edge)."""
    if not tri.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    return FlipSite(u, v, tri.succ(u, v), tri.pred(u, v))


def _wrap(rotation: Sequence[Sequence[int]]) -> Triangulation:
    tri = build_triangulation(rotation)
    try:
        check_fullerene_degrees(tri)
    except ValidationError:
        return tri
    return DualFullerene(tri.rotation)


def _flip_arrays(g: PlaneGraph) -> tuple[np.ndarray, np.ndarray]:
    return g.rotation_array(int(g.degrees.max()) + 2)


def _lists(rot: np.ndarray, deg: np.ndarray) -> list[list[int]]:
    return [rot[v, : deg[v]].tolist() for v in range(len(deg))]


def psw_flip(tri: Triangulation, site: FlipSite | tuple[int, int]) -> Triangulation:
    """Replace edge ``v1-v2`` by ``v3-v4``.

    Returns a DualFullerene when the result has the fullerene degree profile,
    otherwise a plain Triangulation.

    Raises:
        MultiEdge: ``v3`` and ``v4`` are already adjacent.
        DegreeUnderflow: ``v1`` or ``v2`` would drop below degree 3.
    """
    if not isinstance(site, FlipSite):
        site = flip_site(tri, *site)
    expected = flip_site(tri, site.v1, site.v2)
    if {expected.v3, expected.v4} != {site.v3, site.v4}:
        raise ValueError(f"{site} does not match the faces around ({site.v1}, {site.v2})")
    rot, deg = _flip_arrays(tri)
    status = _kf.flip_edge(rot, deg, site.v1, site.v2, 3)
    if status == _kf.FLIP_MULTI_EDGE:
        raise MultiEdge(f"{site.v3} and {site.v4} are already adjacent")
    if status == _kf.FLIP_UNDERFLOW:
        raise DegreeUnderflow(f"flipping ({site.v1}, {site.v2}) leaves a vertex of degree < 3")
    return _wrap(_lists(rot, deg))


def classic_sw_sites(g: DualFullerene) -> list[FlipSite]:
    """Edges between two hexagon vertices whose opposite vertices are both pentagons."""
    sites = []
    for u, v in g.edges:
        if g.degree(u) != 6 or g.degree(v) != 6:
            continue
        s = flip_site(g, u, v)
        if g.degree(s.v3) == 5 and g.degree(s.v4) == 5 and not g.has_edge(s.v3, s.v4):
            sites.append(s)
    return sites


def site_as_path(site: FlipSite) -> GswPath:
    """The ``w = 2`` gSW path ``(v3, v1, v2, v4)`` of a classic site."""
    return GswPath((site.v3, site.v1, site.v2, site.v4))


def _common_other(g: PlaneGraph, a: int, b: int, not_this: int) -> int:
    c, d = g.succ(a, b), g.pred(a, b)
    return d if c == not_this else c


def _zigzags(g: DualFullerene, w_max: int) -> Iterator[GswPath]:
    for v1 in range(g.m):
        if g.degree(v1) != 5:
            continue
        for v2 in sorted(g.rotation[v1]):
            if g.degree(v2) != 6:
                continue
            for v3 in sorted((g.succ(v1, v2), g.pred(v1, v2))):
                path = [v1, v2, v3]
                seen = set(path)
                while True:
                    if len(path) % 2 == 0:
                        if g.degree(path[-2]) == 6 and g.degree(path[-1]) == 5:
                            yield GswPath(tuple(path))
                        if len(path) // 2 >= w_max:
                            break
                    nxt = _common_other(g, path[-2], path[-1], path[-3])
                    if nxt in seen:
                        break
                    seen.add(nxt)
                    path.append(nxt)


def find_gsw_paths(g: DualFullerene, w_max: int | None = None, dedup: bool = False) -> list[GswPath]:
    """All gSW paths with ``2 <= w <= w_max`` (default ``m // 2``).

    A strip is determined by ``(v_1, v_2, v_3)``; each one is walked until a
    vertex repeats and every admissible even prefix is reported. With
    ``dedup`` a path and its reversal are reported once.
    """
    if w_max is None:
        w_max = g.m // 2
    out = []
    seen: set[tuple[int, ...]] = set()
    for p in _zigzags(g, w_max):
        if dedup:
            if p.vertices[::-1] in seen:
                continue
            seen.add(p.vertices)
        out.append(p)
    return out


def has_gsw_path(g: DualFullerene) -> bool:
    return next(_zigzags(g, g.m // 2), None) is not None


def validate_path(g: PlaneGraph, path: GswPath) -> None:
    vs = path.vertices
    if len(vs) < 4 or len(vs) % 2:
        raise InvalidPath("a gSW path has an even number >= 4 of vertices")
    if len(set(vs)) != len(vs):
        raise InvalidPath("path vertices are not distinct")
    if any(not 0 <= v < g.m for v in vs):
        raise InvalidPath("vertex out of range")
    for i in range(len(vs) - 1):
        if not g.has_edge(vs[i], vs[i + 1]):
            raise InvalidPath(f"({vs[i]}, {vs[i + 1]}) is not an edge")
    for i in range(len(vs) - 2):
        if not g.has_edge(vs[i], vs[i + 2]):
            raise InvalidPath(f"missing chord ({vs[i]}, {vs[i + 2]})")
    if [g.degree(v) for v in (vs[0], vs[1], vs[-2], vs[-1])] != [5, 6, 6, 5]:
        raise InvalidPath("end degrees must read 5, 6, ..., 6, 5")


def apply_gsw(g: DualFullerene, path: GswPath | Sequence[int]) -> DualFullerene:
    """Rewrite ``g`` along ``path``; the result carries ``path.reversed_pairs()``."""
    if not isinstance(path, GswPath):
        path = GswPath(tuple(path))
    validate_path(g, path)
    vs = path.vertices
    rot, deg = _flip_arrays(g)
    for i in range(1, path.w):
        a, b = vs[2 * i - 1], vs[2 * i]
        status = _kf.flip_edge(rot, deg, a, b, 3)
        if status != _kf.FLIP_OK:
            raise InvalidPath(f"rung ({a}, {b}) cannot be flipped (status {status})")
        if not (_kf._find(rot, vs[2 * i - 2], vs[2 * i + 1], deg[vs[2 * i - 2]]) >= 0):
            raise InvalidPath(f"flip of ({a}, {b}) did not connect ({vs[2 * i - 2]}, {vs[2 * i + 1]})")
    out = _wrap(_lists(rot, deg))
    if not isinstance(out, DualFullerene):  # pragma: no cover - degree bookkeeping forbids it
        raise InvalidPath("rewrite left the fullerene degree profile")
    return out
