"""Face spirals on dual fullerenes, isomer enumeration and the ``C_{n,j}`` order.

A face spiral of a fullerene is a vertex spiral of its dual: vertex ``k`` of
the spiral is attached to vertex ``k - 1`` and to the oldest vertex of the
open boundary. The degree word (5 or 6 per position) of the lexicographically
smallest spiral, reported as the 1-based positions of its twelve 5's, is the
canonical pentagon vector.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DegreeOverflow,
    InfeasibleN,
    NoSpiralExists,
    SpiralStuck,
    WindupFailed,
)
from .graph_core import DualFullerene, PlaneGraph, Triangulation, as_fullerene, build_triangulation
from .kernels import spiral as _k

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**31


@dataclass(frozen=True, order=True)
class PentagonVector:
    n: int
    positions: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(int(p) for p in self.positions)
        object.__setattr__(self, "positions", pos)
        if self.n % 2 or self.n < 20:
            raise ValueError(f"n={self.n} is not an even number >= 20")
        if len(pos) != 12:
            raise ValueError("a pentagon vector has exactly 12 entries")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError("positions must be strictly increasing")
        if pos[0] < 1 or pos[-1] > self.m:
            raise ValueError(f"positions must lie in [1, {self.m}]")

    @property
    def m(self) -> int:
        return self.n // 2 + 2

    def degree_word(self) -> np.ndarray:
        word = np.full(self.m, 6, dtype=np.int64)
        word[np.asarray(self.positions) - 1] = 5
        return word

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "PentagonVector":
        m = len(word)
        return cls(2 * (m - 2), tuple(i + 1 for i, d in enumerate(word) if d == 5))

    def __str__(self) -> str:
        return " ".join(str(x) for x in (self.n, *self.positions))


@dataclass(frozen=True)
class SpiralTrace:
    start: tuple[int, int]
    orientation: int
    order: tuple[int, ...]


def is_feasible(n: int) -> bool:
    return n >= 20 and n % 2 == 0 and n != 22


def candidate_count(n: int) -> int:
    """Number of candidate pentagon vectors, C(n/2 + 2, 12)."""
    return comb(n // 2 + 2, 12)


def unwind(g: PlaneGraph, start: tuple[int, int], orientation: int = 1) -> SpiralTrace:
    """Unwind the spiral that begins with dart ``start``; raise SpiralStuck on failure."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    v0, v1 = start
    if not g.has_edge(v0, v1):
        raise ValueError(f"{start} is not an edge")
    rot, deg = g.rotation_array()
    order = np.zeros(g.m, dtype=np.int64)
    r = _k.unwind(rot, deg, v0, v1, orientation, order, np.zeros(g.m, dtype=np.int64), False)
    if r != 1:
        raise SpiralStuck(f"spiral from {start} ({orientation:+d}) gets stuck")
    return SpiralTrace((v0, v1), orientation, tuple(int(x) for x in order))


def spiral_starts(g: PlaneGraph):
    """All ``2 * 2E`` (dart, orientation) starting choices; 6n of them on a dual fullerene."""
    for v0, nb in enumerate(g.rotation):
        for v1 in nb:
            for orient in (1, -1):
                yield (v0, v1), orient


def degree_word(g: PlaneGraph, trace: SpiralTrace) -> tuple[int, ...]:
    return tuple(g.degree(v) for v in trace.order)


def canonical_spiral(g: PlaneGraph) -> tuple[np.ndarray, np.ndarray]:
    """``(word, order)`` of the lexicographically smallest spiral."""
    rot, deg = g.rotation_array()
    word, order, found = _k.canonical_word(rot, deg)
    if not found:
        raise NoSpiralExists("no spiral unwinding succeeds")
    return word, order


def canonical_pentagon_vector(g: DualFullerene) -> PentagonVector:
    word, _ = canonical_spiral(g)
    return PentagonVector.from_word(word)


def _windup_word(word: np.ndarray) -> Triangulation:
    m = len(word)
    tri = np.empty((2 * m - 4, 3), dtype=np.int64)
    status, step = _k.windup(np.asarray(word, dtype=np.int64), tri)
    if status == _k.OVERFLOW:
        raise DegreeOverflow(f"degree overflow at spiral position {step + 1}")
    if status != _k.OK:
        raise WindupFailed(f"spiral does not close (position {step + 1})")
    rot, deg, ok = _k.rotation_from_triangles(m, tri, int(max(word)))
    if not ok:  # pragma: no cover - windup emits closed surfaces
        raise WindupFailed("triangles do not close into a sphere")
    return build_triangulation([rot[v, : deg[v]].tolist() for v in range(m)])


def windup(pv: PentagonVector) -> DualFullerene:
    """Rebuild the dual fullerene whose spiral from dart ``0 -> 1`` is ``pv``.

    Vertex ``k`` of the result is spiral position ``k + 1``.
    """
    return as_fullerene(_windup_word(pv.degree_word()))


def windup_word(word: Sequence[int]) -> Triangulation:
    """Windup of an arbitrary degree word (any degrees, not only 5/6)."""
    return _windup_word(np.asarray(word, dtype=np.int64))


def _check_n(n: int) -> int:
    if n % 2 or n < 20:
        raise InfeasibleN(f"n={n} is not an even integer >= 20")
    return n // 2 + 2


def enumerate_vectors(n: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[PentagonVector]:
    """Canonical pentagon vectors of all isomers of ``C_n``, sorted (index j-1 is ``C_{n,j}``)."""
    m = _check_n(n)
    return list(_enumerate_cached(m, budget, threads))


@lru_cache(maxsize=64)
def _enumerate_cached(m: int, budget: int, threads: int) -> tuple[PentagonVector, ...]:
    n = 2 * (m - 2)
    firsts = list(range(m - 11))
    per = max(1, budget)

    def work(first: int):
        vecs, count, attempts, exhausted = _k.enumerate_block(m, first, per)
        return vecs[:count].copy(), attempts, exhausted

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(work, firsts))
    else:
        results = [work(f) for f in firsts]
    total = sum(r[1] for r in results)
    if total > budget or any(r[2] for r in results):
        raise BudgetExceeded(f"enumeration of C_{n} needs more than {budget} windups")
    log.debug("C_%d: %d windup attempts", n, total)
    out = [PentagonVector(n, tuple(int(p) + 1 for p in row)) for vecs, _, _ in results for row in vecs]
    out.sort()
    return tuple(out)


def enumerate_isomers(n: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[DualFullerene]:
    """All isomers of ``C_n`` in ``C_{n,j}`` order, wound up from their canonical vectors."""
    return [windup(pv) for pv in enumerate_vectors(n, budget, threads)]


def isomer_count(n: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    if n == 22:
        return 0
    return len(enumerate_vectors(n, budget, threads))


def isomer_index(g: DualFullerene, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """``(n, j)`` such that ``g`` is ``C_{n,j}`` (1-based)."""
    pv = canonical_pentagon_vector(g)
    vecs = enumerate_vectors(g.n, budget)
    lo, hi = 0, len(vecs)
    while lo < hi:
        mid = (lo + hi) // 2
        if vecs[mid] < pv:
            lo = mid + 1
        else:
            hi = mid
    if lo == len(vecs) or vecs[lo] != pv:  # pragma: no cover - enumeration is complete
        raise LookupError(f"{pv} missing from the enumeration of C_{g.n}")
    return g.n, lo + 1


def first_windup(n: int, budget: int = DEFAULT_BUDGET) -> PentagonVector | None:
    """Lex-first pentagon vector that winds up, i.e. the canonical vector of ``C_{n,1}``."""
    m = _check_n(n)
    pos, attempts, found = _k.first_success(m, budget)
    if not found:
        if attempts >= budget:
            raise BudgetExceeded(f"no windup success within {budget} attempts")
        return None
    return PentagonVector(n, tuple(int(p) + 1 for p in pos))
