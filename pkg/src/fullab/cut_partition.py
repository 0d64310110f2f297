"""Cut-partition of hexagonal subgraphs into t-triangles and truncated triangles.

The transformed graph is kept as mutable rotation lists together with the
parent vertex each (possibly copied) vertex comes from. A face walk of length
three counts as a triangular facet only if it is a face of the parent
triangulation; every other face (pentagon regions, cuts) is a large facet.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations

from .constructions import Truncation
from .graph_core import DualFullerene, PlaneGraph, SubgraphView, canonical_code, subgraph
from .sw_ops import has_gsw_path


class FacetTag(str, Enum):
    PLAIN = "plain"
    TWO_FACET = "two_facet"
    THREE_FACET = "three_facet"


@dataclass(frozen=True)
class FacetVertexClass:
    """Per-vertex facet tags of a ``T^6`` view (indexed like ``view.graph``)."""

    tags: tuple[FacetTag, ...]
    large_wedges: tuple[int, ...]

    def vertices(self, tag: FacetTag) -> list[int]:
        return [v for v, t in enumerate(self.tags) if t is tag]


@dataclass(frozen=True, order=True)
class TriangleClass:
    """``T(t)``, ``T(t,(r1,r2,r3))`` under a truncation convention, or OTHER."""

    kind: str
    t: int = -1
    r: tuple[int, int, int] = (0, 0, 0)
    convention: Truncation = Truncation.ROWS

    T_TRIANGLE = "t_triangle"
    TRUNCATED = "truncated"
    OTHER = "other"

    @property
    def is_triangle(self) -> bool:
        return self.kind != TriangleClass.OTHER

    def __str__(self) -> str:
        if self.kind == TriangleClass.T_TRIANGLE:
            return f"T({self.t})"
        if self.kind == TriangleClass.TRUNCATED:
            return f"T({self.t},({self.r[0]},{self.r[1]},{self.r[2]}))"
        return "OTHER"


@dataclass
class WorkGraph:
    """Rotation lists under surgery; ``origin[v]`` is the parent vertex of ``v``."""

    parent: PlaneGraph
    rot: list[list[int]]
    origin: list[int]

    @classmethod
    def from_view(cls, view: SubgraphView) -> "WorkGraph":
        return cls(view.parent, [list(nb) for nb in view.graph.rotation], list(view.vertex_map))

    def freeze(self) -> PlaneGraph:
        return PlaneGraph(tuple(tuple(nb) for nb in self.rot))

    def add_vertex(self, nb: list[int], origin: int) -> int:
        self.rot.append(nb)
        self.origin.append(origin)
        return len(self.rot) - 1

    def replace(self, v: int, old: int, new: int) -> None:
        nb = self.rot[v]
        nb[nb.index(old)] = new


@dataclass
class _Faces:
    g: PlaneGraph
    true_triangle: list[bool]

    def wedge_large(self, v: int, j: int) -> bool:
        """Is the wedge between ``rot[v][j]`` and its successor a large facet?"""
        nb = self.g.rotation[v]
        return not self.true_triangle[self.g.face_of(v, nb[j])]

    def large_wedges(self, v: int) -> list[int]:
        return [j for j in range(len(self.g.rotation[v])) if self.wedge_large(v, j)]

    def edge_good(self, u: int, v: int) -> bool:
        return self.true_triangle[self.g.face_of(u, v)] and self.true_triangle[self.g.face_of(v, u)]


def _faces(work: WorkGraph) -> _Faces:
    g = work.freeze()
    par = work.parent
    flags = []
    for f in g.faces():
        ok = False
        if len(f) == 3:
            a, b, c = (work.origin[x] for x in f)
            ok = len({a, b, c}) == 3 and par.has_edge(b, a) and par.pred(b, a) == c and par.pred(c, b) == a
        flags.append(ok)
    return _Faces(g, flags)


def _tag(count: int) -> FacetTag:
    if count >= 3:
        return FacetTag.THREE_FACET
    return FacetTag.TWO_FACET if count == 2 else FacetTag.PLAIN


def classify_facet_vertices(view: SubgraphView) -> FacetVertexClass:
    """Tag vertices of ``T^6`` by the number of large facets around them.

    Facets are counted as wedges between consecutive neighbours, so a vertex
    that touches the same large region twice counts it twice.
    """
    fc = _faces(WorkGraph.from_view(view))
    counts = tuple(len(fc.large_wedges(v)) for v in range(view.graph.m))
    return FacetVertexClass(tuple(_tag(c) for c in counts), counts)


def _arcs(nb: list[int], large: list[int]) -> list[list[int]]:
    """Maximal runs of neighbours separated by large wedges, in rotation order."""
    k = len(nb)
    arcs = []
    for a, b in zip(large, large[1:] + [large[0] + k]):
        arcs.append([nb[q % k] for q in range(a + 1, b + 1)])
    return arcs


def _split_vertex(work: WorkGraph, v: int, large: list[int]) -> list[int]:
    """Move all arcs but the largest to fresh copies of ``v``; return the copies."""
    arcs = _arcs(work.rot[v], large)
    ranked = sorted(range(len(arcs)), key=lambda i: (-len(arcs[i]), min(arcs[i])))
    keep = ranked[0]
    copies = []
    for i in sorted(ranked[1:]):
        c = work.add_vertex(list(arcs[i]), work.origin[v])
        for w in arcs[i]:
            work.replace(w, v, c)
        copies.append(c)
    work.rot[v] = list(arcs[keep])
    return copies


def cut_phase1(work: WorkGraph) -> int:
    """Split 2- and 3-facet vertices until each vertex touches one large facet.

    Faces are recomputed after every split, lowest vertex id first. Returns
    the number of vertices added.
    """
    added = 0
    while True:
        fc = _faces(work)
        target = next(
            ((v, lw) for v in range(len(work.rot)) if len(lw := fc.large_wedges(v)) >= 2), None
        )
        if target is None:
            return added
        added += len(_split_vertex(work, *target))


def _good_bfs(work: WorkGraph, fc: _Faces, src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in work.rot[u]:
            if w not in dist and fc.edge_good(u, w):
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _shortest_paths(work: WorkGraph, fc: _Faces, s: int, dist_t: dict[int, int], cap: int) -> list[list[int]]:
    """Shortest good-edge paths from ``s`` down the distance field of the target, in lex order."""
    out: list[list[int]] = []

    def walk(path: list[int]) -> None:
        if len(out) >= cap:
            return
        u = path[-1]
        if dist_t[u] == 0:
            out.append(list(path))
            return
        for w in sorted(work.rot[u]):
            if dist_t.get(w) == dist_t[u] - 1 and fc.edge_good(u, w):
                path.append(w)
                walk(path)
                path.pop()

    walk([s])
    return out


def _bends(work: WorkGraph, sides: list[list[int]], path: list[int]) -> int:
    """Sum over interior path vertices of the left/right neighbour imbalance."""
    total = 0
    for i in range(1, len(path) - 1):
        right = len(sides[i])
        left = len(work.rot[path[i]]) - 2 - right
        total += abs(left - right)
    return total


def _best_cut_path(work: WorkGraph, fc: _Faces, cap: int = 4096) -> list[int] | None:
    """Shortest all-triangle path between two degree-5 vertices.

    Straight paths (every interior vertex has as many neighbours on the left
    as on the right, i.e. a lattice line) come first, shortest among them; a
    bent path is used only when no straight one exists. Remaining ties go to
    the fewest unbalanced vertices, the smallest endpoints and then the
    lexicographically smallest path.
    Paths whose cut sides would contain a path vertex are skipped.
    """
    fives = [v for v in range(len(work.rot)) if len(work.rot[v]) == 5]
    best = None
    dists = {v: _good_bfs(work, fc, v) for v in fives}
    for s, t in combinations(fives, 2):
        d = dists[t].get(s)
        if d is None or d == 0:
            continue
        for path in _shortest_paths(work, fc, s, dists[t], cap):
            sides = [_right_side(work, fc, path, i) for i in range(len(path))]
            on_path = set(path)
            if any(w in on_path for side in sides for w in side):
                continue
            bends = _bends(work, sides, path)
            key = (bends > 0, d, bends, s, t, path)
            if best is None or key < best:
                best = key
    return None if best is None else best[5]


def _right_side(work: WorkGraph, fc: _Faces, path: list[int], i: int) -> list[int]:
    v = path[i]
    nb = work.rot[v]
    k = len(nb)
    if 0 < i < len(path) - 1:
        a, b = nb.index(path[i + 1]), nb.index(path[i - 1])
        return [nb[q % k] for q in range(a + 1, a + (b - a) % k)]
    side = []
    if i == 0:
        j = nb.index(path[1])
        for q in range(1, k):
            if fc.wedge_large(v, (j + q - 1) % k):
                break
            side.append(nb[(j + q) % k])
    else:
        j = nb.index(path[-2])
        for q in range(1, k):
            if fc.wedge_large(v, (j - q) % k):
                break
            side.append(nb[(j - q) % k])
        side.reverse()
    return side


def _cut_along(work: WorkGraph, fc: _Faces, path: list[int]) -> None:
    sides = [_right_side(work, fc, path, i) for i in range(len(path))]
    copies = [work.add_vertex([], work.origin[v]) for v in path]
    last = len(path) - 1
    for i, v in enumerate(path):
        side = sides[i]
        for w in side:
            work.replace(w, v, copies[i])
        nb = work.rot[v]
        moved = set(side)
        new_nb = []
        if i < last:
            new_nb.append(copies[i + 1])
        new_nb += side
        if i > 0:
            new_nb.append(copies[i - 1])
        work.rot[copies[i]] = new_nb
        work.rot[v] = [w for w in nb if w not in moved]


def cut_phase2(work: WorkGraph, max_cuts: int | None = None) -> tuple[int, bool]:
    """Cut along shortest all-triangle paths between degree-5 vertices.

    Returns ``(cuts, resolved)``; ``resolved`` is False when degree-5 vertices
    remain but no qualifying path exists.
    """
    cuts = 0
    limit = max_cuts if max_cuts is not None else 4 * len(work.rot) + 16
    while any(len(nb) == 5 for nb in work.rot):
        if cuts >= limit:
            return cuts, False
        fc = _faces(work)
        path = _best_cut_path(work, fc)
        if path is None:
            return cuts, False
        _cut_along(work, fc, path)
        cuts += 1
    return cuts, True


# templates


def _lattice_graph(pts: set[tuple[int, int]]) -> PlaneGraph:
    index = {p: i for i, p in enumerate(sorted(pts))}
    dirs = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]  # counter-clockwise
    rot = []
    for i, j in sorted(pts):
        rot.append(tuple(index[(i + a, j + b)] for a, b in dirs if (i + a, j + b) in index))
    return PlaneGraph(tuple(rot))


def template(t: int, r: tuple[int, int, int] = (0, 0, 0), convention: Truncation | None = None) -> PlaneGraph:
    """The ``t``-triangle, or its ``(r1, r2, r3)`` corner truncation."""
    pts = set()
    if convention is None:
        ks = (0, 0, 0)
    else:
        ks = tuple(convention.rows_removed(x) for x in r)
    for i in range(t + 1):
        for j in range(t + 1 - i):
            if i + j < ks[0] or i > t - ks[1] or j > t - ks[2]:
                continue
            pts.add((i, j))
    return _lattice_graph(pts)


def _signature(g: PlaneGraph) -> tuple:
    return g.m, g.num_edges, tuple(sorted(g.degrees.tolist()))


TEMPLATE_T_MAX = 12


@lru_cache(maxsize=4)
def _templates(convention: Truncation, t_max: int = TEMPLATE_T_MAX) -> dict[tuple, list[tuple[bytes, TriangleClass]]]:
    table: dict[tuple, list[tuple[bytes, TriangleClass]]] = {}

    def add(g: PlaneGraph, cls: TriangleClass) -> None:
        if g.m == 0 or not g.is_connected():
            return
        entry = table.setdefault(_signature(g), [])
        code = canonical_code(g)
        if all(c != code for c, _ in entry):
            entry.append((code, cls))

    for t in range(t_max + 1):
        add(template(t), TriangleClass(TriangleClass.T_TRIANGLE, t, convention=convention))
    for t in range(1, t_max + 1):
        for r1 in range(t):
            for r2 in range(r1 + 1):
                for r3 in range(r2 + 1):
                    if r1 + r2 > t - 1:
                        continue
                    g = template(t, (r1, r2, r3), convention)
                    add(g, TriangleClass(TriangleClass.TRUNCATED, t, (r1, r2, r3), convention))
    return table


def classify_component(comp: PlaneGraph, convention: Truncation = Truncation.ROWS) -> TriangleClass:
    """Match a connected plane graph against the triangle templates (t <= 12)."""
    if comp.m == 1:
        return TriangleClass(TriangleClass.T_TRIANGLE, 0, convention=convention)
    if comp.m == 0 or not comp.is_connected():
        return TriangleClass(TriangleClass.OTHER, convention=convention)
    entry = _templates(convention).get(_signature(comp))
    if entry:
        code = canonical_code(comp)
        for c, cls in entry:
            if c == code:
                return cls
    return TriangleClass(TriangleClass.OTHER, convention=convention)


@dataclass
class Component:
    graph: PlaneGraph
    origin: tuple[int, ...]
    triangles: int
    cls: TriangleClass


@dataclass
class CutPartition:
    components: list[Component]
    splits: int = 0
    cuts: int = 0
    resolved: bool = True
    convention: Truncation = Truncation.ROWS
    notes: list[str] = field(default_factory=list)

    @property
    def classes(self) -> list[TriangleClass]:
        return [c.cls for c in self.components]

    @property
    def all_triangular(self) -> bool:
        return self.resolved and all(c.is_triangle for c in self.classes)

    @property
    def zero_only(self) -> bool:
        return all(c.kind == TriangleClass.T_TRIANGLE and c.t == 0 for c in self.classes)

    def summary(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for c in self.classes:
            out[str(c)] = out.get(str(c), 0) + 1
        return dict(sorted(out.items()))


def transform(g: DualFullerene) -> tuple[WorkGraph, int, int, bool]:
    """Run both phases on ``T^6`` of ``g``: ``(graph, splits, cuts, resolved)``."""
    work = WorkGraph.from_view(subgraph(g, 6))
    splits = cut_phase1(work)
    cuts, resolved = cut_phase2(work)
    return work, splits, cuts, resolved


def cut_partition(g: DualFullerene, convention: Truncation = Truncation.ROWS) -> CutPartition:
    work, splits, cuts, resolved = transform(g)
    fc = _faces(work)
    final = fc.g
    tri_count = [0] * final.m
    for f, ok in zip(final.faces(), fc.true_triangle):
        if ok:
            tri_count[f[0]] += 1
    comps = []
    for verts in final.components:
        sub, keep = final.induced(verts)
        cls = classify_component(sub, convention)
        if cls.is_triangle and any(len(work.rot[v]) == 5 for v in keep):
            cls = TriangleClass(TriangleClass.OTHER, convention=convention)
        comps.append(Component(sub, tuple(work.origin[v] for v in keep), sum(tri_count[v] for v in keep), cls))
    part = CutPartition(comps, splits, cuts, resolved, convention)
    if not resolved:
        part.notes.append("degree-5 vertices remain without an all-triangle cut path")
    return part


@dataclass(frozen=True)
class Conjecture2Record:
    has_gsw: bool
    all_triangular: bool
    zero_only: bool
    verdict: str
    convention: str
    summary: dict
    per_convention: dict = field(default_factory=dict)

    def as_row(self) -> dict:
        return {
            "has_gsw": self.has_gsw,
            "all_triangular": self.all_triangular,
            "zero_only": self.zero_only,
            "verdict": self.verdict,
            "convention": self.convention,
        }


def _verdict(has: bool, part: CutPartition) -> str:
    if not part.components:
        return "exceptional"
    lhs = part.all_triangular and not part.zero_only
    return "consistent" if lhs == (not has) else "inconsistent"


def conjecture2_report(g: DualFullerene, convention: Truncation | None = None) -> Conjecture2Record:
    """Check: triangle-only cut-partition (not all 0-triangles) iff no gSW path.

    With ``convention=None`` both truncation conventions are evaluated and the
    graph is consistent if either one is; the reported flags then come from
    the first consistent convention (ROWS before FULL). The verdict is
    ``"exceptional"`` when ``T^6`` is empty.
    """
    has = has_gsw_path(g)
    convs = list(Truncation) if convention is None else [convention]
    parts = {c: cut_partition(g, c) for c in convs}
    verdicts = {c.value: _verdict(has, p) for c, p in parts.items()}
    chosen = next((c for c in convs if verdicts[c.value] == "consistent"), convs[0])
    part = parts[chosen]
    verdict = verdicts[chosen.value]
    label = chosen.value if convention is not None or verdict != "consistent" else f"any:{chosen.value}"
    return Conjecture2Record(has, part.all_triangular, part.zero_only, verdict, label, part.summary(), verdicts)
