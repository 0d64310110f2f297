"""Named fullerene families and seed triangulations."""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from itertools import combinations

import numpy as np

from .errors import GluingFailed, InfeasibleN, PatchAmbiguous
from .graph_core import DualFullerene, Triangulation, from_triangles
from . import spiral


class Truncation(str, Enum):
    """How many vertices an ``r``-corner truncation removes.

    ROWS removes the first ``r`` rows (``r(r+1)/2`` vertices); FULL removes a
    whole ``r``-triangle (``(r+1)(r+2)/2`` vertices).
    """

    ROWS = "rows"
    FULL = "full"

    def rows_removed(self, r: int) -> int:
        return r if self is Truncation.ROWS else r + 1


@dataclass(frozen=True)
class NanotubeSpec:
    r: int

    @property
    def n(self) -> int:
        return 20 + 10 * self.r


@dataclass(frozen=True)
class GoldbergSpec:
    p: int
    q: int

    @property
    def n(self) -> int:
        return 20 * ((self.p + self.q) ** 2 - self.p * self.q)


@dataclass(frozen=True)
class GswFreeSpec:
    t: int
    truncation: Truncation = Truncation.ROWS

    @property
    def n(self) -> int:
        return 4 * (self.t**2 + 6 * self.t + 7)


def nanotube_50(r: int) -> DualFullerene:
    """Dual (5,0)-nanotube: apex, r + 2 stacked 5-rings, apex."""
    if r < 0:
        raise ValueError("r must be >= 0")
    rings = r + 2
    top, bottom = 0, 1 + 5 * rings

    def ring(i: int, j: int) -> int:
        return 1 + 5 * i + j % 5

    tris = []
    for j in range(5):
        tris.append((top, ring(0, j), ring(0, j + 1)))
        tris.append((bottom, ring(rings - 1, j + 1), ring(rings - 1, j)))
        for i in range(rings - 1):
            tris.append((ring(i, j), ring(i, j + 1), ring(i + 1, j)))
            tris.append((ring(i + 1, j), ring(i, j + 1), ring(i + 1, j + 1)))
    return from_triangles(tris, bottom + 1)


def dodecahedron() -> DualFullerene:
    """The icosahedron, dual of ``C_20``."""
    return nanotube_50(0)


def bipyramid(m: int) -> Triangulation:
    """Bipyramid over an ``(m-2)``-gon: dual of the ``(m-2)``-gonal prism."""
    if m < 5:
        raise ValueError("m must be >= 5")
    k = m - 2
    north, south = k, k + 1
    tris = []
    for i in range(k):
        tris.append((north, i, (i + 1) % k))
        tris.append((south, (i + 1) % k, i))
    return from_triangles(tris, m, fullerene=False)


def _icosahedron_geometry() -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    phi = (1 + 5**0.5) / 2
    pts = []
    for a in (-1, 1):
        for b in (-phi, phi):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    xyz = np.array(pts, dtype=float)
    faces = []
    for i, j, k in combinations(range(12), 3):
        if all(abs(np.linalg.norm(xyz[a] - xyz[b]) - 2) < 1e-9 for a, b in ((i, j), (j, k), (i, k))):
            normal = np.cross(xyz[j] - xyz[i], xyz[k] - xyz[i])
            if normal @ (xyz[i] + xyz[j] + xyz[k]) < 0:
                j, k = k, j
            faces.append((i, j, k))
    return xyz, faces


def goldberg(p: int, q: int) -> DualFullerene:
    """Goldberg-Coxeter subdivision ``(p, q)`` of the icosahedron.

    Each icosahedral face is the lattice triangle ``0, z, z*w`` with
    ``z = p + q*w`` and ``w = exp(i*pi/3)``; lattice points are merged across
    faces through their 3D positions.
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0, p + q >= 1")
    xyz, faces = _icosahedron_geometry()
    opposite: dict[tuple[int, int], int] = {}
    for a, b, c in faces:
        opposite[(a, b)] = c
        opposite[(b, c)] = a
        opposite[(c, a)] = b
    w = complex(0.5, 3**0.5 / 2)
    z = p + q * w
    corners = (0j, z, z * w)
    span = 2 * (p + q) + 2
    lattice = [(i, j) for i in range(-span, span + 1) for j in range(-span, span + 1)]
    det = (corners[1] - corners[0]).real * (corners[2] - corners[0]).imag - (corners[1] - corners[0]).imag * (corners[2] - corners[0]).real

    def bary(pt: complex) -> tuple[float, float, float]:
        d1 = pt - corners[0]
        e1 = corners[1] - corners[0]
        e2 = corners[2] - corners[0]
        l1 = (d1.real * e2.imag - d1.imag * e2.real) / det
        l2 = (e1.real * d1.imag - e1.imag * d1.real) / det
        return 1 - l1 - l2, l1, l2

    ids: dict[tuple[int, int, int], int] = {}

    def point_id(face: tuple[int, int, int], lam: tuple[float, float, float]) -> int:
        eps = 1e-9
        neg = [i for i in range(3) if lam[i] < -eps]
        if len(neg) > 1:
            raise GluingFailed("lattice point outside two face edges")
        corner3 = [xyz[face[0]], xyz[face[1]], xyz[face[2]]]
        if neg:
            o = neg[0]
            a, b = face[(o + 1) % 3], face[(o + 2) % 3]
            far = opposite[(b, a)]
            la, lb = lam[(o + 1) % 3] + lam[o], lam[(o + 2) % 3] + lam[o]
            pos = la * xyz[a] + lb * xyz[b] - lam[o] * xyz[far]
        else:
            pos = sum(l * c for l, c in zip(lam, corner3))
        key = tuple(int(round(x * 1e6)) for x in pos)
        return ids.setdefault(key, len(ids))  # type: ignore[arg-type]

    tris = set()
    for face in faces:
        for i, j in lattice:
            base = i + j * w
            for tri in ((base, base + 1, base + w), (base + 1, base + 1 + w, base + w)):
                cen = sum(tri) / 3
                if min(bary(cen)) < -1e-9:
                    continue
                vid = tuple(point_id(face, bary(v)) for v in tri)
                tris.add(tuple(sorted(vid)))
    return from_triangles(sorted(tris), len(ids))


def _truncated_triangle(side: int, cut: int) -> set[tuple[int, int]]:
    """Lattice points ``(i, j)`` of a side-``side`` triangle minus ``cut`` rows at each corner."""
    pts = set()
    for i in range(side + 1):
        for j in range(side + 1 - i):
            if i + j < cut or i > side - cut or j > side - cut:
                continue
            pts.add((i, j))
    return pts


def _lattice_triangles(pts: set[tuple[int, int]]):
    anchors = {(i, j) for i, j in pts} | {(i - 1, j) for i, j in pts} | {(i, j - 1) for i, j in pts}
    for i, j in sorted(anchors):
        up = ((i, j), (i + 1, j), (i, j + 1))
        down = ((i + 1, j), (i + 1, j + 1), (i, j + 1))
        for t in (up, down):
            if all(p in pts for p in t):
                yield t


# faces of a tetrahedron, consistently oriented, keyed by the opposite vertex
_TETRA_FACES = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}


def gsw_free_family(spec: GswFreeSpec | int) -> DualFullerene:
    """Four ``(2t, (t-1, t-1, t-1))``-triangles glued along their open edges.

    The pieces are the hexagonal faces of a truncated tetrahedron; each of the
    four triangular holes receives a 1-triangle of pentagon vertices.
    """
    if isinstance(spec, int):
        spec = GswFreeSpec(spec)
    t = spec.t
    if t < 2:
        raise ValueError("t must be >= 2")
    side = 2 * t
    cut = spec.truncation.rows_removed(t - 1)
    if side - 2 * cut < 1:
        raise GluingFailed(
            f"{spec.truncation.value} truncation of a {side}-triangle by {t - 1} leaves no side between open edges"
        )
    r = cut
    pts = _truncated_triangle(side, cut)
    s = side
    # open edges walked from the corner on one original side to the other,
    # tagged with the tetrahedron vertices at those ends: (u, x), (u, v), (v, x)
    open_edges = {
        0: [(r - k, k) for k in range(r + 1)],          # from S01 to S20
        1: [(s - r, k) for k in range(r + 1)],          # from S01 to S12
        2: [(k, s - r) for k in range(r, -1, -1)],      # from S12 to S20
    }
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    seams: dict[frozenset, list] = {}
    for a, (u, v, x) in _TETRA_FACES.items():
        ends = {0: (u, x), 1: (u, v), 2: (v, x)}
        for side_idx, walk in open_edges.items():
            e0, e1 = ends[side_idx]
            seq = [(a, p) for p in walk]
            if e0 > e1:
                seq.reverse()
            seams.setdefault(frozenset((e0, e1)), []).append(seq)
    for pair in seams.values():
        if len(pair) != 2 or len(pair[0]) != len(pair[1]):
            raise GluingFailed("open edges do not pair up")
        for p1, p2 in zip(*pair):
            union(p1, p2)
    for a in _TETRA_FACES:
        for p in pts:
            find((a, p))
    roots = sorted({find(k) for k in list(parent)})
    index = {rt: i for i, rt in enumerate(roots)}

    def vid(a, p):
        return index[find((a, p))]

    tris = []
    for a in _TETRA_FACES:
        for tri in _lattice_triangles(pts):
            tris.append(tuple(vid(a, p) for p in tri))
    nverts = len(roots)
    # holes: cycles of boundary edges (edges in exactly one triangle)
    count: dict[frozenset, int] = {}
    for tri in tris:
        for e in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            count[frozenset(e)] = count.get(frozenset(e), 0) + 1
    if any(c > 2 for c in count.values()):
        raise GluingFailed("an edge lies in more than two triangles")
    boundary: dict[int, list[int]] = {}
    for e, c in count.items():
        if c == 1:
            x, y = tuple(e)
            boundary.setdefault(x, []).append(y)
            boundary.setdefault(y, []).append(x)
    hex_degree: dict[int, int] = {}
    for e in count:
        for x in e:
            hex_degree[x] = hex_degree.get(x, 0) + 1
    seen: set[int] = set()
    holes = []
    for s0 in sorted(boundary):
        if s0 in seen:
            continue
        if len(boundary[s0]) != 2:
            raise GluingFailed("boundary is not a union of cycles")
        cyc = [s0]
        seen.add(s0)
        prev, cur = s0, boundary[s0][0]
        while cur != s0:
            cyc.append(cur)
            seen.add(cur)
            nxt = [y for y in boundary[cur] if y != prev]
            prev, cur = cur, nxt[0]
        holes.append(cyc)
    if len(holes) != 4 or any(len(h) != 6 for h in holes):
        raise GluingFailed(f"expected four hexagonal holes, got lengths {[len(h) for h in holes]}")
    for hole in holes:
        start = next(i for i, x in enumerate(hole) if hex_degree[x] == 5)
        c0, m0, c1, m1, c2, m2 = hole[start:] + hole[:start]
        if [hex_degree[x] for x in (c0, m0, c1, m1, c2, m2)] != [5, 4, 5, 4, 5, 4]:
            raise GluingFailed("hole boundary degrees do not alternate 5/4")
        pent = [nverts, nverts + 1, nverts + 2]
        nverts += 3
        cs, ms = (c0, c1, c2), (m0, m1, m2)
        for k in range(3):
            pk, pk1 = pent[k], pent[(k + 1) % 3]
            tris.append((cs[k], ms[k], pk))
            tris.append((ms[k], pk1, pk))
            tris.append((ms[k], cs[(k + 1) % 3], pk1))
        tris.append(tuple(pent))
    try:
        g = from_triangles(tris, nverts)
    except Exception as exc:  # surface defects are gluing failures here
        raise GluingFailed(str(exc)) from exc
    if g.n != spec.n:
        raise GluingFailed(f"glued fullerene has n={g.n}, expected {spec.n}")
    return g


def seed_for(n: int, budget: int = spiral.DEFAULT_BUDGET) -> DualFullerene:
    """``C_{n,1}``: the first pentagon vector (lexicographically) that winds up.

    Falls back to the (5,0)-nanotube when ``n = 20 + 10r`` and the search runs
    out of budget.
    """
    if not spiral.is_feasible(n):
        raise InfeasibleN(f"n={n} is not feasible")
    try:
        pv = spiral.first_windup(n, budget)
    except Exception:
        if (n - 20) % 10 == 0:
            return nanotube_50((n - 20) // 10)
        raise
    if pv is None:  # pragma: no cover - spiral rule holds at desk scale
        raise InfeasibleN(f"no spiral windup succeeds for n={n}")
    return spiral.windup(pv)


@lru_cache(maxsize=1)
def c36_patch() -> dict:
    """Stored split of ``C_{36,1}``: pentagon vector and the 6-cycle (label 1 first)."""
    with resources.files("fullab.data").joinpath("c36_patch.json").open() as fh:
        return json.load(fh)


def _patch_labels(g: DualFullerene, cycle: list[int]) -> tuple[list[int], set[int]]:
    cyc = set(cycle)
    rest = [v for v in range(g.m) if v not in cyc]
    comps = []
    seen: set[int] = set()
    for s in rest:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.rotation[u]:
                if w not in cyc and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    if len(comps) != 2:
        raise PatchAmbiguous("cycle does not separate the graph into two parts")
    small, big = sorted(comps, key=len)
    inner = big | cyc
    labels = [6 - sum(1 for w in g.rotation[v] if w in inner) for v in cycle]
    return labels, small


def find_c36_patch(g: DualFullerene) -> list[int] | None:
    """Search for a separating 6-cycle of hexagon vertices labelled (1,2,2,2,2,3)."""
    target = [1, 2, 2, 2, 2, 3]
    hexes = [v for v in range(g.m) if g.degree(v) == 6]
    hexset = set(hexes)
    best = None

    def extend(path):
        nonlocal best
        if len(path) == 6:
            if g.has_edge(path[-1], path[0]):
                try:
                    labels, _ = _patch_labels(g, path)
                except PatchAmbiguous:
                    return
                if labels == target and (best is None or path < best):
                    best = list(path)
            return
        for w in g.rotation[path[-1]]:
            if w in hexset and w not in path and w > path[0]:
                extend(path + [w])

    for s in hexes:
        extend([s])
    return best


def _validated_c36() -> tuple[DualFullerene, list[int]]:
    data = c36_patch()
    pv = spiral.PentagonVector(36, tuple(data["pentagon_vector"]))
    g = spiral.windup(pv)
    cycle = list(data["cycle"])
    if len(cycle) != 6 or any(g.degree(v) != 6 for v in cycle):
        raise PatchAmbiguous("stored cycle is not six hexagon vertices")
    if any(not g.has_edge(cycle[i], cycle[(i + 1) % 6]) for i in range(6)):
        raise PatchAmbiguous("stored cycle is not a cycle")
    labels, _ = _patch_labels(g, cycle)
    if labels != [1, 2, 2, 2, 2, 3]:
        raise PatchAmbiguous(f"stored cycle has labels {labels}")
    return g, cycle


def grow_from_c36(steps: int) -> DualFullerene:
    """Grow ``C_{36,1}`` by ``steps`` vertices of the dual (n increases by 2 per step)."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    g, cycle = _validated_c36()
    if steps == 0:
        return g
    _, small = _patch_labels(g, cycle)
    tris = [tuple(t) for t in g.faces()]
    m = g.m
    for _ in range(steps):
        b = cycle
        x = m
        m += 1
        new_cycle = b[1:] + [x]
        remap = dict(zip(b, new_cycle))
        grown = []
        for t in tris:
            if any(v in small for v in t):
                grown.append(tuple(remap.get(v, v) for v in t))
            else:
                grown.append(t)
        grown.append((x, b[5], b[0]))
        grown.append((x, b[0], b[1]))
        tris = grown
        cycle = new_cycle
    try:
        return from_triangles(tris, m)
    except Exception as exc:
        raise PatchAmbiguous(f"growth produced an invalid graph: {exc}") from exc


def boundary_labels(g: DualFullerene, cycle: list[int]) -> list[int]:
    return _patch_labels(g, cycle)[0]


def grow_from_c36_with_cycle(steps: int) -> tuple[DualFullerene, list[int]]:
    """Like :func:`grow_from_c36` but also returns the growth-zone boundary cycle."""
    g0, cycle = _validated_c36()
    m0 = g0.m
    cyc = list(cycle)
    for k in range(steps):
        cyc = cyc[1:] + [m0 + k]
    return grow_from_c36(steps), cyc
