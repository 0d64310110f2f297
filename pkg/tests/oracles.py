"""Independent reference implementations used as test oracles.

Nothing here calls the numba kernels; each oracle is a direct, slow
transcription of a definition.
"""
from __future__ import annotations

import math
from itertools import combinations

import numpy as np
from scipy.linalg import expm

# Known isomer counts of C_n for n = 20..40 (House of Graphs / buckygen).
ISO_COUNTS = {20: 1, 22: 0, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6, 36: 15, 38: 17, 40: 40}


def trace_faces(rotation) -> list[tuple[int, ...]]:
    """Faces of a rotation system: arrive at v from u, leave to the predecessor of u."""
    pos = [{w: i for i, w in enumerate(nb)} for nb in rotation]
    seen = set()
    faces = []
    for u, nb in enumerate(rotation):
        for v in nb:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] - 1) % len(rb)]
            faces.append(tuple(face))
    return faces


def euler_characteristic(rotation) -> int:
    m = len(rotation)
    e = sum(len(nb) for nb in rotation) // 2
    return m - e + len(trace_faces(rotation))


def _try_map(ra, rb, a0, a1, b0, b1, flip) -> bool:
    m = len(ra)
    phi = {a0: b0}
    queue = [(a0, a1, b0, b1)]
    while queue:
        x, xn, y, yn = queue.pop()
        na, nb = ra[x], rb[y]
        if len(na) != len(nb):
            return False
        i, j = na.index(xn), nb.index(yn)
        d = len(na)
        for k in range(d):
            u = na[(i + k) % d]
            w = nb[(j - k) % d] if flip else nb[(j + k) % d]
            if u in phi:
                if phi[u] != w:
                    return False
            else:
                phi[u] = w
                queue.append((u, x, w, y))
    return len(phi) == m and len(set(phi.values())) == m


def embedded_isomorphic(a, b) -> bool:
    """Brute-force isomorphism of connected rotation systems, mirror allowed."""
    ra = [list(nb) for nb in a.rotation]
    rb = [list(nb) for nb in b.rotation]
    if len(ra) != len(rb):
        return False
    if sorted(map(len, ra)) != sorted(map(len, rb)):
        return False
    if not ra:
        return True
    a0, a1 = 0, ra[0][0]
    for y, nb in enumerate(rb):
        if len(nb) != len(ra[0]):
            continue
        for yn in nb:
            for flip in (False, True):
                if _try_map(ra, rb, a0, a1, y, yn, flip):
                    return True
    return False


def brute_gsw_paths(g, w_max: int) -> set[tuple[int, ...]]:
    """All vertex sequences meeting the gSW definition, by exhaustive DFS."""
    adj = [set(nb) for nb in g.rotation]
    deg = [len(nb) for nb in g.rotation]
    out = set()

    def dfs(path):
        k = len(path)
        if k >= 4 and k % 2 == 0 and deg[path[-2]] == 6 and deg[path[-1]] == 5:
            out.add(tuple(path))
        if k >= 2 * w_max:
            return
        for x in adj[path[-1]]:
            if x in path:
                continue
            if k >= 2 and x not in adj[path[-2]]:
                continue
            path.append(x)
            dfs(path)
            path.pop()

    for v1 in range(len(adj)):
        if deg[v1] != 5:
            continue
        for v2 in adj[v1]:
            if deg[v2] == 6:
                dfs([v1, v2])
    return out


def character_expm(g, alpha: float, beta: float) -> float:
    a = np.zeros((g.m, g.m))
    for u, nb in enumerate(g.rotation):
        for v in nb:
            a[u, v] = 1.0
    d = np.diag(a.sum(axis=1))
    return float(np.trace(expm(alpha * a + beta * d)))


def dodecahedron_character(alpha: float = 0.5, beta: float = 0.25) -> float:
    """Closed form from the icosahedron spectrum {5, sqrt5 (x3), -sqrt5 (x3), -1 (x5)}."""
    s5 = math.sqrt(5.0)
    lam = [5.0] + [s5] * 3 + [-s5] * 3 + [-1.0] * 5
    return sum(math.exp(alpha * x + 5 * beta) for x in lam)


def pentagon_vectors(n: int):
    m = n // 2 + 2
    for c in combinations(range(1, m + 1), 12):
        yield c


def chi_square_uniform(counts) -> float:
    counts = np.asarray(counts, dtype=float)
    exp = counts.sum() / len(counts)
    return float(np.sum((counts - exp) ** 2 / exp))
