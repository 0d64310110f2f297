"""Spiral windup/unwinding kernels on dual (triangulation) graphs.

Graphs enter the kernels as a padded rotation array ``rot[m, W]`` (``-1``
padding) plus a degree vector. ``rot[v, i + 1]`` is the successor of
``rot[v, i]`` around ``v``; an oriented triangle ``(a, b, c)`` satisfies
``succ_a(b) == c``.

Status codes returned by :func:`windup`: 0 success, 1 degree overflow,
2 the sequence does not close into a sphere triangulation.
"""
import numpy as np

from ._jit import jit

OK = 0
OVERFLOW = 1
FAILED = 2


@jit
def _link(adj, val, a, b):
    if adj[a, b]:
        return FAILED
    adj[a, b] = True
    adj[b, a] = True
    val[a] -= 1
    val[b] -= 1
    if val[a] < 0 or val[b] < 0:
        return OVERFLOW
    return OK


@jit
def windup(degs, tri):
    """Wind the degree word ``degs`` into oriented triangles.

    Returns ``(status, step)``; on failure ``step`` is the spiral position at
    which the failure was detected. The failure depends only on ``degs[:step+1]``.
    """
    m = degs.shape[0]
    if m < 4:
        return FAILED, 0
    val = degs.copy()
    adj = np.zeros((m, m), dtype=np.bool_)
    bnd = np.empty(m + 2, dtype=np.int64)
    nt = 0
    s = _link(adj, val, 0, 1)
    if s != OK:
        return s, 1
    bnd[0] = 0
    bnd[1] = 1
    head = 0
    tail = 2
    for k in range(2, m - 1):
        b0 = bnd[head]
        bl = bnd[tail - 1]
        s = _link(adj, val, k, bl)
        if s != OK:
            return s, k
        s = _link(adj, val, k, b0)
        if s != OK:
            return s, k
        tri[nt, 0] = b0
        tri[nt, 1] = bl
        tri[nt, 2] = k
        nt += 1
        while True:
            f = bnd[head]
            if val[f] == 0:
                if tail - head < 3:
                    return FAILED, k
                head += 1
                nb = bnd[head]
                s = _link(adj, val, k, nb)
                if s != OK:
                    return s, k
                tri[nt, 0] = nb
                tri[nt, 1] = f
                tri[nt, 2] = k
                nt += 1
                continue
            last = bnd[tail - 1]
            if val[last] == 0:
                if tail - head < 3:
                    return FAILED, k
                tail -= 1
                nb = bnd[tail - 1]
                s = _link(adj, val, k, nb)
                if s != OK:
                    return s, k
                tri[nt, 0] = last
                tri[nt, 1] = nb
                tri[nt, 2] = k
                nt += 1
                continue
            break
        bnd[tail] = k
        tail += 1
    k = m - 1
    if tail - head != degs[k]:
        return FAILED, k
    for i in range(head, tail):
        if val[bnd[i]] != 1:
            return FAILED, k
    for i in range(head, tail - 1):
        tri[nt, 0] = bnd[i + 1]
        tri[nt, 1] = bnd[i]
        tri[nt, 2] = k
        nt += 1
    tri[nt, 0] = bnd[head]
    tri[nt, 1] = bnd[tail - 1]
    tri[nt, 2] = k
    nt += 1
    return OK, -1


@jit
def rotation_from_triangles(m, tri, width):
    """Rotation array and degrees from consistently oriented triangles.

    Returns ``(rot, deg, ok)``; ``ok`` is False when the triangles do not form
    a closed oriented surface around every vertex.
    """
    succ = np.full((m, m), -1, dtype=np.int64)
    nbcount = np.zeros(m, dtype=np.int64)
    rot = np.full((m, width), -1, dtype=np.int64)
    deg = np.zeros(m, dtype=np.int64)
    for t in range(tri.shape[0]):
        a = tri[t, 0]
        b = tri[t, 1]
        c = tri[t, 2]
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if succ[x, y] != -1:
                return rot, deg, False
            succ[x, y] = z
            nbcount[x] += 1
    for v in range(m):
        if nbcount[v] == 0 or nbcount[v] > width:
            return rot, deg, False
        start = -1
        for u in range(m):
            if succ[v, u] != -1:
                start = u
                break
        u = start
        d = 0
        while True:
            if d >= width:
                return rot, deg, False
            rot[v, d] = u
            d += 1
            u = succ[v, u]
            if u == -1:
                return rot, deg, False
            if u == start:
                break
        if d != nbcount[v]:
            return rot, deg, False
        deg[v] = d
    return rot, deg, True


@jit
def _index_of(rot, v, w, d):
    for i in range(d):
        if rot[v, i] == w:
            return i
    return -1


@jit
def _adjacent(rot, deg, a, b):
    for i in range(deg[a]):
        if rot[a, i] == b:
            return True
    return False


@jit
def unwind(rot, deg, v0, v1, orient, order, best, has_best):
    """Unwind a spiral from directed edge ``v0 -> v1``.

    ``order`` receives the vertex sequence. When ``has_best`` the degree word
    is compared against ``best`` and the walk aborts as soon as it is known to
    be larger. Returns 0 for failure or a larger word, 1 for a success that is
    strictly smaller than ``best`` (or any success without ``best``), 2 for a
    success equal to ``best``.
    """
    m = deg.shape[0]
    placed = np.zeros(m, dtype=np.bool_)
    pcount = np.zeros(m, dtype=np.int64)
    bnd = np.empty(m + 2, dtype=np.int64)
    # cmp: 0 equal so far, -1 already smaller than best
    cmp = 0
    for k in range(2):
        v = v0 if k == 0 else v1
        order[k] = v
        placed[v] = True
        for i in range(deg[v]):
            pcount[rot[v, i]] += 1
        if has_best and cmp == 0:
            if deg[v] > best[k]:
                return 0
            if deg[v] < best[k]:
                cmp = -1
    bnd[0] = v0
    bnd[1] = v1
    head = 0
    tail = 2
    for k in range(2, m):
        b0 = bnd[head]
        bl = bnd[tail - 1]
        idx = _index_of(rot, b0, bl, deg[b0])
        if idx < 0:
            return 0
        nxt = rot[b0, (idx + orient) % deg[b0]]
        if placed[nxt]:
            return 0
        order[k] = nxt
        placed[nxt] = True
        for i in range(deg[nxt]):
            pcount[rot[nxt, i]] += 1
        if has_best and cmp == 0:
            if deg[nxt] > best[k]:
                return 0
            if deg[nxt] < best[k]:
                cmp = -1
        if k == m - 1:
            break
        while True:
            f = bnd[head]
            if pcount[f] == deg[f]:
                if tail - head < 3:
                    return 0
                head += 1
                if not _adjacent(rot, deg, nxt, bnd[head]):
                    return 0
                continue
            last = bnd[tail - 1]
            if pcount[last] == deg[last]:
                if tail - head < 3:
                    return 0
                tail -= 1
                if not _adjacent(rot, deg, nxt, bnd[tail - 1]):
                    return 0
                continue
            break
        bnd[tail] = nxt
        tail += 1
    if not has_best or cmp == -1:
        return 1
    return 2


@jit
def canonical_word(rot, deg):
    """Lexicographically smallest spiral degree word over all 2*(2E) starts.

    Returns ``(word, order, found)``.
    """
    m = deg.shape[0]
    best = np.zeros(m, dtype=np.int64)
    best_order = np.zeros(m, dtype=np.int64)
    order = np.zeros(m, dtype=np.int64)
    found = False
    for v0 in range(m):
        for i in range(deg[v0]):
            v1 = rot[v0, i]
            for orient in (1, -1):
                r = unwind(rot, deg, v0, v1, orient, order, best, found)
                if r == 1:
                    found = True
                    for q in range(m):
                        best[q] = deg[order[q]]
                        best_order[q] = order[q]
    return best, best_order, found


@jit
def is_canonical(rot, deg, word):
    """True iff no unwinding of the graph yields a word smaller than ``word``."""
    m = deg.shape[0]
    order = np.zeros(m, dtype=np.int64)
    for v0 in range(m):
        for i in range(deg[v0]):
            v1 = rot[v0, i]
            for orient in (1, -1):
                if unwind(rot, deg, v0, v1, orient, order, word, True) == 1:
                    return False
    return True


@jit
def _word_from_positions(m, pos, degs):
    for i in range(m):
        degs[i] = 6
    for i in range(pos.shape[0]):
        degs[pos[i]] = 5


@jit
def _next_from(pos, i, m):
    """Advance ``pos`` to the lex-next 12-subset that differs in ``pos[:i+1]``."""
    r = pos.shape[0]
    while i >= 0 and pos[i] == m - r + i:
        i -= 1
    if i < 0:
        return False
    pos[i] += 1
    for q in range(i + 1, r):
        pos[q] = pos[q - 1] + 1
    return True


@jit
def enumerate_block(m, first, budget):
    """Canonical pentagon vectors (0-based) with ``pos[0] == first``.

    ``first == -1`` scans every vector. Vectors sharing a failing windup prefix
    are skipped wholesale. Returns ``(vectors, count, attempts, exhausted)``.
    """
    pos = np.arange(12, dtype=np.int64)
    if first >= 0:
        for q in range(12):
            pos[q] = first + q
    cap = 64
    out = np.empty((cap, 12), dtype=np.int64)
    count = 0
    attempts = 0
    degs = np.empty(m, dtype=np.int64)
    tri = np.empty((2 * m - 4, 3), dtype=np.int64)
    if m < 12 or (first >= 0 and first > m - 12):
        return out[:0], 0, 0, False
    while True:
        if attempts >= budget:
            return out[:count], count, attempts, True
        attempts += 1
        _word_from_positions(m, pos, degs)
        status, step = windup(degs, tri)
        if status == OK:
            rot, deg, ok = rotation_from_triangles(m, tri, 6)
            if ok and is_canonical(rot, deg, degs):
                if count == cap:
                    grown = np.empty((2 * cap, 12), dtype=np.int64)
                    grown[:cap] = out
                    out = grown
                    cap *= 2
                out[count] = pos
                count += 1
            j = 12
        else:
            j = 0
            for q in range(12):
                if pos[q] <= step:
                    j += 1
            if j == 0:
                break
        if not _next_from(pos, j - 1, m):
            break
        if first >= 0 and pos[0] != first:
            break
    return out[:count], count, attempts, False


@jit
def first_success(m, budget):
    """Lex-first pentagon vector that winds up; ``(pos, attempts, found)``."""
    pos = np.arange(12, dtype=np.int64)
    degs = np.empty(m, dtype=np.int64)
    tri = np.empty((2 * m - 4, 3), dtype=np.int64)
    attempts = 0
    while attempts < budget:
        attempts += 1
        _word_from_positions(m, pos, degs)
        status, step = windup(degs, tri)
        if status == OK:
            return pos, attempts, True
        j = 0
        for q in range(12):
            if pos[q] <= step:
                j += 1
        if j == 0 or not _next_from(pos, j - 1, m):
            break
    return pos, attempts, False


@jit
def unrank_combination(m, rank, pos):
    """Write the ``rank``-th (0-based, lex order) 12-subset of ``range(m)`` into ``pos``."""
    r = pos.shape[0]
    x = 0
    for i in range(r):
        while True:
            # number of subsets with pos[i] == x: C(m - x - 1, r - i - 1)
            c = _binom(m - x - 1, r - i - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        pos[i] = x
        x += 1


@jit
def _binom(a, b):
    if b < 0 or a < b:
        return 0
    if b > a - b:
        b = a - b
    res = 1
    for i in range(b):
        res = res * (a - i) // (i + 1)
    return res


@jit
def sample_batch(m, ranks, canonical_only):
    """Windup a batch of ranked pentagon vectors.

    Returns a boolean mask of accepted draws; with ``canonical_only`` a draw is
    accepted only when it is the canonical vector of the graph it winds into.
    """
    nd = ranks.shape[0]
    acc = np.zeros(nd, dtype=np.bool_)
    pos = np.empty(12, dtype=np.int64)
    degs = np.empty(m, dtype=np.int64)
    tri = np.empty((2 * m - 4, 3), dtype=np.int64)
    for d in range(nd):
        unrank_combination(m, ranks[d], pos)
        _word_from_positions(m, pos, degs)
        status, step = windup(degs, tri)
        if status != OK:
            continue
        if canonical_only:
            rot, deg, ok = rotation_from_triangles(m, tri, 6)
            if not ok or not is_canonical(rot, deg, degs):
                continue
        acc[d] = True
    return acc
