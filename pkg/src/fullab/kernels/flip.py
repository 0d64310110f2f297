"""Edge-flip kernels on padded rotation arrays."""
import numpy as np

from ._jit import jit
from .spiral import canonical_word

FLIP_OK = 0
FLIP_MULTI_EDGE = 1
FLIP_UNDERFLOW = 2
FLIP_NOT_EDGE = 3


@jit
def _find(rot, v, w, d):
    for i in range(d):
        if rot[v, i] == w:
            return i
    return -1


@jit
def _remove_at(rot, deg, v, i):
    d = deg[v]
    for q in range(i, d - 1):
        rot[v, q] = rot[v, q + 1]
    rot[v, d - 1] = -1
    deg[v] = d - 1


@jit
def _insert_after(rot, deg, v, i, x):
    d = deg[v]
    for q in range(d, i + 1, -1):
        rot[v, q] = rot[v, q - 1]
    rot[v, i + 1] = x
    deg[v] = d + 1


@jit
def flip_edge(rot, deg, a, b, min_degree):
    """Flip edge ``a-b`` in place. Returns a FLIP_* status; state unchanged on failure."""
    ia = _find(rot, a, b, deg[a])
    if ia < 0:
        return FLIP_NOT_EDGE
    c = rot[a, (ia + 1) % deg[a]]
    d = rot[a, (ia - 1 + deg[a]) % deg[a]]
    if c == d or _find(rot, c, d, deg[c]) >= 0:
        return FLIP_MULTI_EDGE
    if deg[a] - 1 < min_degree or deg[b] - 1 < min_degree:
        return FLIP_UNDERFLOW
    if deg[c] + 1 > rot.shape[1] or deg[d] + 1 > rot.shape[1]:
        return FLIP_MULTI_EDGE
    _remove_at(rot, deg, a, ia)
    _remove_at(rot, deg, b, _find(rot, b, a, deg[b]))
    _insert_after(rot, deg, c, _find(rot, c, a, deg[c]), d)
    _insert_after(rot, deg, d, _find(rot, d, b, deg[d]), c)
    return FLIP_OK


@jit
def _is_fullerene_state(deg):
    n5 = 0
    for v in range(deg.shape[0]):
        if deg[v] == 5:
            n5 += 1
        elif deg[v] != 6:
            return False
    return n5 == 12


@jit
def _pick_edge(rot, deg, u):
    """Map ``u`` in [0, 1) to a uniformly chosen directed edge."""
    total = 0
    for v in range(deg.shape[0]):
        total += deg[v]
    r = int(u * total)
    if r >= total:
        r = total - 1
    for v in range(deg.shape[0]):
        if r < deg[v]:
            return v, rot[v, r]
        r -= deg[v]
    return 0, rot[0, 0]


@jit
def _flip_delta(rot, deg, a, b):
    """Change of ``sum((deg - 6)**2)`` if edge ``a-b`` were flipped."""
    ia = _find(rot, a, b, deg[a])
    c = rot[a, (ia + 1) % deg[a]]
    d = rot[a, (ia - 1 + deg[a]) % deg[a]]
    delta = 0
    for v, s in ((a, -1), (b, -1), (c, 1), (d, 1)):
        old = deg[v] - 6
        new = old + s
        delta += new * new - old * old
    return delta


@jit
def run_chain(rot, deg, uniforms, words, counts, nfound, stats, inv_temp):
    """Advance the flip chain one step per row of ``uniforms`` (shape ``(k, 2)``).

    Column 0 picks a directed edge uniformly. With ``inv_temp > 0`` a valid
    flip is accepted with probability ``min(1, exp(-inv_temp * dE))`` where
    ``E = sum((deg - 6)**2)`` (column 1 decides); ``inv_temp == 0`` accepts
    every valid flip. ``words``/``counts`` accumulate canonical spiral words of
    visited fullerene states (``nfound`` of them so far). ``stats`` holds
    ``[accepted, rejected, fullerene_steps, unspiralable, last_id]`` and is
    updated in place; ``last_id`` is the word index of the current state, -1
    for a non-fullerene state, -2 for a fullerene state that could not be
    recorded (no spiral, or ``words`` full). Returns the new ``nfound``.
    """
    m = deg.shape[0]
    for s in range(uniforms.shape[0]):
        a, b = _pick_edge(rot, deg, uniforms[s, 0])
        if inv_temp > 0.0:
            delta = _flip_delta(rot, deg, a, b)
            if delta > 0 and uniforms[s, 1] >= np.exp(-inv_temp * delta):
                stats[1] += 1
                if stats[4] >= 0:
                    counts[stats[4]] += 1
                    stats[2] += 1
                elif stats[4] == -2:
                    stats[2] += 1
                continue
        status = flip_edge(rot, deg, a, b, 3)
        if status == FLIP_OK:
            stats[0] += 1
            stats[4] = -1
            if _is_fullerene_state(deg):
                word, order, found = canonical_word(rot, deg)
                if not found:
                    stats[3] += 1
                    stats[4] = -2
                else:
                    idx = -1
                    for q in range(nfound):
                        same = True
                        for t in range(m):
                            if words[q, t] != word[t]:
                                same = False
                                break
                        if same:
                            idx = q
                            break
                    if idx < 0 and nfound < words.shape[0]:
                        words[nfound] = word
                        idx = nfound
                        nfound += 1
                    stats[4] = idx if idx >= 0 else -2
        else:
            stats[1] += 1
        if stats[4] >= 0:
            counts[stats[4]] += 1
            stats[2] += 1
        elif stats[4] == -2:
            stats[2] += 1
    return nfound
