"""BFS canonical codes for connected plane graphs given as rotation arrays."""
import numpy as np

from ._jit import jit


@jit
def _bfs_code(rot, deg, v, w, orient, out, best, has_best):
    """BFS code rooted at directed edge ``v -> w``.

    Returns -1 if the code is smaller than ``best`` (or no best), 0 if equal,
    1 if it was aborted as larger. ``out`` receives the code when not aborted.
    """
    m = deg.shape[0]
    label = np.full(m, -1, dtype=np.int64)
    first = np.empty(m, dtype=np.int64)
    queue = np.empty(m, dtype=np.int64)
    label[v] = 0
    first[v] = w
    queue[0] = v
    qlen = 1
    nxt = 1
    pos = 0
    cmp = 0 if has_best else -1
    qi = 0
    while qi < qlen:
        u = queue[qi]
        qi += 1
        d = deg[u]
        start = 0
        for i in range(d):
            if rot[u, i] == first[u]:
                start = i
                break
        for j in range(d):
            x = rot[u, (start + orient * j) % d]
            if label[x] == -1:
                label[x] = nxt
                nxt += 1
                first[x] = u
                queue[qlen] = x
                qlen += 1
            val = label[x] + 1
            if cmp == 0:
                if val > best[pos]:
                    return 1
                if val < best[pos]:
                    cmp = -1
            out[pos] = val
            pos += 1
        if cmp == 0:
            if 0 > best[pos]:
                return 1
            if 0 < best[pos]:
                cmp = -1
        out[pos] = 0
        pos += 1
    return cmp


@jit
def canonical_code(rot, deg):
    """Lexicographically minimal BFS code over all directed edges and both orientations.

    The graph must be connected. Code length is ``sum(deg) + m``.
    """
    m = deg.shape[0]
    total = 0
    for v in range(m):
        total += deg[v]
    length = total + m
    best = np.zeros(length, dtype=np.int64)
    cur = np.zeros(length, dtype=np.int64)
    if total == 0:
        best[:] = 0
        return best
    has_best = False
    for v in range(m):
        for i in range(deg[v]):
            w = rot[v, i]
            for orient in (1, -1):
                r = _bfs_code(rot, deg, v, w, orient, cur, best, has_best)
                if r == -1:
                    best[:] = cur
                    has_best = True
    return best
