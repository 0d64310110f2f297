"""Embedded plane graphs, sphere triangulations and dual fullerenes.

The rotation system is the source of truth: ``rotation[v]`` lists the
neighbours of ``v`` in cyclic order. Faces are traced by arriving at ``v``
from ``u`` and leaving towards the predecessor of ``u`` in ``rotation[v]``;
for a triangle ``(a, b, c)`` produced this way ``b`` follows ``a`` in
``rotation[c]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadDegreeProfile,
    N22Forbidden,
    NonTriangleFace,
    NotSphere,
    NotSymmetric,
)
from .kernels import canon as _canon

Rotation = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PlaneGraph:
    """A finite simple graph with a rotation system (possibly disconnected)."""

    rotation: Rotation

    @classmethod
    def from_lists(cls, lists: Iterable[Sequence[int]]):
        return cls(tuple(tuple(int(x) for x in nb) for nb in lists))

    @property
    def m(self) -> int:
        return len(self.rotation)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(nb) for nb in self.rotation], dtype=np.int64)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, v) for u, nb in enumerate(self.rotation) for v in nb if u < v))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _positions(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(nb)} for nb in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._positions[u]

    def succ(self, v: int, u: int) -> int:
        nb = self.rotation[v]
        return nb[(self._positions[v][u] + 1) % len(nb)]

    def pred(self, v: int, u: int) -> int:
        nb = self.rotation[v]
        return nb[(self._positions[v][u] - 1) % len(nb)]

    @cached_property
    def _face_data(self) -> tuple[tuple[tuple[int, ...], ...], dict[tuple[int, int], int]]:
        dart_face: dict[tuple[int, int], int] = {}
        faces: list[tuple[int, ...]] = []
        for u, nb in enumerate(self.rotation):
            for v in nb:
                if (u, v) in dart_face:
                    continue
                idx = len(faces)
                walk = []
                a, b = u, v
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = idx
                    walk.append(a)
                    a, b = b, self.pred(b, a)
                faces.append(tuple(walk))
        return tuple(faces), dart_face

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face walks; walk ``(x0, ..., xk)`` uses darts ``x_i -> x_{i+1}`` cyclically."""
        return self._face_data[0]

    def face_of(self, u: int, v: int) -> int:
        """Index (into :meth:`faces`) of the face containing dart ``u -> v``."""
        return self._face_data[1][(u, v)]

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.m
        comps = []
        for s in range(self.m):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.rotation[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def induced(self, vertices: Iterable[int]) -> tuple["PlaneGraph", tuple[int, ...]]:
        """Induced subgraph with inherited cyclic orders, relabelled densely.

        Returns the subgraph and the parent id of each new vertex.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        rot = tuple(tuple(index[w] for w in self.rotation[v] if w in index) for v in keep)
        return PlaneGraph(rot), keep

    def relabel(self, perm: Sequence[int]) -> "PlaneGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rot: list[tuple[int, ...]] = [()] * self.m
        for v, nb in enumerate(self.rotation):
            rot[perm[v]] = tuple(perm[w] for w in nb)
        return type(self)(tuple(rot))

    def mirror(self) -> "PlaneGraph":
        return type(self)(tuple(tuple(reversed(nb)) for nb in self.rotation))

    def rotation_array(self, width: int | None = None) -> tuple[np.ndarray, np.ndarray]:
        deg = self.degrees
        if width is None:
            width = int(deg.max()) if self.m else 1
        rot = np.full((self.m, max(width, 1)), -1, dtype=np.int64)
        for v, nb in enumerate(self.rotation):
            rot[v, : len(nb)] = nb
        return rot, deg.copy()

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.m, self.m))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def degree_matrix(self) -> np.ndarray:
        return np.diag(self.degrees.astype(float))


@dataclass(frozen=True)
class Triangulation(PlaneGraph):
    """Sphere triangulation; construct through :func:`build_triangulation`."""

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(f for f in self.faces())  # type: ignore[misc]


@dataclass(frozen=True)
class DualFullerene(Triangulation):
    """Dual of a fullerene: degrees 5 (twelve of them) and 6."""

    @property
    def n(self) -> int:
        """Vertex count of the primal fullerene."""
        return 2 * (self.m - 2)

    @cached_property
    def pentagons(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self.degrees == 5))

    @cached_property
    def hexagons(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self.degrees == 6))

    def is_ipr(self) -> bool:
        return all(self.degree(u) != 5 or self.degree(v) != 5 for u, v in self.edges)


def _check_simple(rot: Rotation) -> None:
    m = len(rot)
    sets = []
    for v, nb in enumerate(rot):
        s = set(nb)
        if len(s) != len(nb):
            raise NotSymmetric(f"vertex {v} lists a neighbour twice")
        if v in s:
            raise NotSymmetric(f"vertex {v} has a loop")
        if any(w < 0 or w >= m for w in nb):
            raise NotSymmetric(f"vertex {v} has an out-of-range neighbour")
        sets.append(s)
    for v, s in enumerate(sets):
        for w in s:
            if v not in sets[w]:
                raise NotSymmetric(f"{w} in N({v}) but {v} not in N({w})")


def build_triangulation(neighbor_lists: Iterable[Sequence[int]]) -> Triangulation:
    """Validate rotation lists as a sphere triangulation."""
    g = Triangulation.from_lists(neighbor_lists)
    _check_simple(g.rotation)
    if g.m < 4:
        raise NotSphere("a sphere triangulation needs at least 4 vertices")
    if not g.is_connected():
        raise NotSphere("graph is disconnected")
    faces = g.faces()
    if g.m - g.num_edges + len(faces) != 2:
        raise NotSphere(f"Euler characteristic {g.m - g.num_edges + len(faces)} != 2")
    for f in faces:
        if len(f) != 3:
            raise NonTriangleFace(f"face of length {len(f)}: {f}")
    return g


def check_fullerene_degrees(g: PlaneGraph) -> None:
    deg = g.degrees
    bad = np.flatnonzero((deg != 5) & (deg != 6))
    if bad.size:
        raise BadDegreeProfile(f"vertex {int(bad[0])} has degree {int(deg[bad[0]])}")
    n5 = int(np.count_nonzero(deg == 5))
    if n5 != 12:
        raise BadDegreeProfile(f"{n5} vertices of degree 5, expected 12")
    if g.m == 13:
        raise N22Forbidden("no fullerene has 22 vertices")


def build(neighbor_lists: Iterable[Sequence[int]]) -> DualFullerene:
    """Validate rotation lists as a dual fullerene.

    Raises one of NotSymmetric, NotSphere, NonTriangleFace, BadDegreeProfile,
    N22Forbidden.
    """
    tri = build_triangulation(neighbor_lists)
    check_fullerene_degrees(tri)
    return DualFullerene(tri.rotation)


def as_fullerene(tri: Triangulation) -> DualFullerene:
    check_fullerene_degrees(tri)
    return DualFullerene(tri.rotation)


def from_triangles(triangles: Iterable[Sequence[int]], m: int | None = None,
                   fullerene: bool = True) -> Triangulation:
    """Build a triangulation from unoriented triangles, orienting them consistently."""
    tris = [tuple(int(x) for x in t) for t in triangles]
    if m is None:
        m = 1 + max(max(t) for t in tris)
    edge_tris: dict[frozenset, list[int]] = {}
    for i, t in enumerate(tris):
        if len(set(t)) != 3:
            raise NotSphere(f"degenerate triangle {t}")
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            edge_tris.setdefault(frozenset((a, b)), []).append(i)
    for e, ts in edge_tris.items():
        if len(ts) != 2:
            raise NotSphere(f"edge {tuple(e)} lies in {len(ts)} triangles")
    oriented: list[tuple[int, int, int] | None] = [None] * len(tris)
    for root in range(len(tris)):
        if oriented[root] is not None:
            continue
        oriented[root] = tris[root]  # type: ignore[assignment]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            a, b, c = oriented[i]  # type: ignore[misc]
            for x, y in ((a, b), (b, c), (c, a)):
                for j in edge_tris[frozenset((x, y))]:
                    if j == i:
                        continue
                    p, q, r = tris[j]
                    darts = {(p, q), (q, r), (r, p)}
                    cand = (p, q, r) if (y, x) in darts else (p, r, q)
                    if oriented[j] is None:
                        oriented[j] = cand  # type: ignore[assignment]
                        queue.append(j)
                    elif not _same_orientation(oriented[j], cand):  # type: ignore[arg-type]
                        raise NotSphere("surface is not orientable")
    succ: list[dict[int, int]] = [dict() for _ in range(m)]
    for a, b, c in oriented:  # type: ignore[misc]
        succ[a][b] = c
        succ[b][c] = a
        succ[c][a] = b
    rot = []
    for v in range(m):
        if not succ[v]:
            raise NotSphere(f"vertex {v} is in no triangle")
        start = min(succ[v])
        cyc = [start]
        u = succ[v][start]
        while u != start:
            if u not in succ[v] or len(cyc) > len(succ[v]):
                raise NotSphere(f"vertex {v} is not a manifold point")
            cyc.append(u)
            u = succ[v][u]
        if len(cyc) != len(succ[v]):
            raise NotSphere(f"vertex {v} is not a manifold point")
        rot.append(cyc)
    tri = build_triangulation(rot)
    return as_fullerene(tri) if fullerene else tri


def _same_orientation(t: tuple[int, int, int], s: tuple[int, int, int]) -> bool:
    rots = {t, (t[1], t[2], t[0]), (t[2], t[0], t[1])}
    return s in rots


@dataclass(frozen=True)
class SubgraphView:
    """Subgraph of a dual fullerene induced by one degree class."""

    parent: DualFullerene
    degree: int
    graph: PlaneGraph
    vertex_map: tuple[int, ...]

    @property
    def kept(self) -> frozenset[int]:
        return frozenset(self.vertex_map)


def subgraph(g: DualFullerene, degree: int) -> SubgraphView:
    """``T^5`` (degree=5) or ``T^6`` (degree=6) with inherited cyclic orders."""
    if degree not in (5, 6):
        raise ValueError("degree must be 5 or 6")
    verts = [v for v in range(g.m) if g.degree(v) == degree]
    sub, keep = g.induced(verts)
    return SubgraphView(g, degree, sub, keep)


@dataclass(frozen=True)
class GraphMatrix:
    kind: str
    alpha: float
    beta: float
    data: np.ndarray

    @property
    def dimension(self) -> int:
        return self.data.shape[0]


def graph_matrix(g: PlaneGraph | SubgraphView, kind: str = "combination",
                 alpha: float = 1.0, beta: float = 0.0) -> GraphMatrix:
    """Adjacency (``"A"``), degree (``"D"``) or ``alpha*A + beta*D`` matrix.

    Views use degrees within the view.
    """
    h = g.graph if isinstance(g, SubgraphView) else g
    if kind == "A":
        return GraphMatrix(kind, 1.0, 0.0, h.adjacency_matrix())
    if kind == "D":
        return GraphMatrix(kind, 0.0, 1.0, h.degree_matrix())
    if kind != "combination":
        raise ValueError(f"unknown matrix kind {kind!r}")
    return GraphMatrix(kind, alpha, beta, alpha * h.adjacency_matrix() + beta * h.degree_matrix())


def canonical_code(g: PlaneGraph) -> bytes:
    """Relabelling- and reflection-invariant code of a connected embedded graph."""
    if g.m == 0:
        return b""
    if not g.is_connected():
        raise ValueError("canonical_code needs a connected graph")
    rot, deg = g.rotation_array()
    code = _canon.canonical_code(rot, deg)
    return g.m.to_bytes(4, "big") + code.astype(">u4").tobytes()


def is_isomorphic(a: PlaneGraph, b: PlaneGraph) -> bool:
    if a.m != b.m or a.num_edges != b.num_edges:
        return False
    if sorted(a.degrees.tolist()) != sorted(b.degrees.tolist()):
        return False
    return canonical_code(a) == canonical_code(b)


def dual_graph(g: PlaneGraph) -> PlaneGraph:
    """Face-vertex dual of a connected plane graph."""
    faces = g.faces()
    rot = []
    for f in faces:
        k = len(f)
        rot.append(tuple(g.face_of(f[(i + 1) % k], f[i]) for i in range(k)))
    return PlaneGraph(tuple(rot))


def primal(g: Triangulation) -> PlaneGraph:
    """The 3-regular plane graph whose faces are the vertices of ``g``."""
    return dual_graph(g)


def dual_of_primal(p: PlaneGraph) -> DualFullerene:
    """Recover the dual fullerene from a cubic plane graph."""
    d = dual_graph(p)
    return build(d.rotation)
