"""Random fullerenes: exact-uniform spiral acceptance-rejection and the pSW flip chain.

Randomness comes from numpy's counter-based Philox generator. Uniforms and
ranks are drawn in Python and handed to the kernels in chunks, so the numba
and pure-Python paths produce identical streams for a given seed.

The naive spiral scheme (accept any vector that winds up) is not uniform over
isomers, since an isomer can be wound up from several vectors. Here a draw is
accepted only if it is the canonical vector of the graph it produces, which
makes every isomer exactly one target.
"""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import stats

from .constructions import bipyramid
from .errors import EmptyInput, InfeasibleN, ValidationError, WindupFailed
from .graph_core import DualFullerene, PlaneGraph, Triangulation, build_triangulation
from .kernels import flip as _kf
from .kernels import spiral as _ks
from . import spiral

INT64_SAFE = 2**62


def rng_for(seed: int, worker: int = 0) -> np.random.Generator:
    """Philox stream for ``(seed, worker)``; worker 0 is the single-stream default."""
    return np.random.Generator(np.random.Philox(key=[seed & (2**64 - 1), worker]))


EnergyFn = Callable[[np.ndarray, np.ndarray], float]


def degree_energy(rot: np.ndarray, deg: np.ndarray) -> float:
    """``sum((deg - 6)**2)``: minimal (= 12) exactly on fullerene degree profiles.

    This is the built-in energy of the ``energy`` policy, evaluated inside
    the flip kernel. It is a steering device, not a physical model.
    """
    d = np.asarray(deg, dtype=float)
    return float(np.sum((d - 6.0) ** 2))


@dataclass(frozen=True)
class SamplerConfig:
    n: int
    seed: int = 0
    method: str = "spiral_ar"
    count: int = 1
    steps: int = 10_000
    burn_in: int = 0
    policy: str = "uniform_flip"
    energy: EnergyFn | None = None
    temperature: float = 1.0
    batch: int = 4096
    record_limit: int = 100_000

    def __post_init__(self):
        if self.method not in ("spiral_ar", "psw_chain"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.policy not in ("uniform_flip", "energy"):
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.method == "psw_chain" and not self.steps > self.burn_in >= 0:
            raise ValueError("need steps > burn_in >= 0")
        if self.count < 0:
            raise ValueError("count must be >= 0")

    @property
    def m(self) -> int:
        return self.n // 2 + 2


@dataclass
class SampleReport:
    attempted: int = 0
    accepted: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempted if self.attempted else 0.0

    def as_dict(self) -> dict:
        return {
            "attempted": self.attempted,
            "accepted": self.accepted,
            "acceptance_rate": self.acceptance_rate,
            "counts": dict(sorted(self.counts.items())),
            **self.extra,
        }


def theoretical_acceptance(n: int, isomers: int) -> float:
    """Acceptance probability of canonical spiral sampling: ``iso(n) / C(m, 12)``."""
    return isomers / spiral.candidate_count(n)


def _draw_big(rng: np.random.Generator, total: int) -> int:
    nbytes = (total.bit_length() + 7) // 8 + 1
    while True:
        x = int.from_bytes(rng.bytes(nbytes), "big")
        limit = (256**nbytes // total) * total
        if x < limit:
            return x % total


def _unrank(m: int, rank: int) -> tuple[int, ...]:
    pos = []
    x = 0
    for i in range(12):
        while True:
            c = math.comb(m - x - 1, 11 - i)
            if rank < c:
                break
            rank -= c
            x += 1
        pos.append(x)
        x += 1
    return tuple(pos)


TABLE_LIMIT = 1 << 22


@lru_cache(maxsize=16)
def _accepted_ranks(m: int) -> np.ndarray:
    """Sorted ranks whose vector winds up to its own canonical spiral."""
    total = math.comb(m, 12)
    mask = _ks.sample_batch(m, np.arange(total, dtype=np.int64), True)
    return np.flatnonzero(mask).astype(np.int64)


def _accept_mask(m: int, total: int, ranks: np.ndarray) -> np.ndarray:
    if total <= TABLE_LIMIT:
        acc = _accepted_ranks(m)
        idx = np.minimum(np.searchsorted(acc, ranks), max(len(acc) - 1, 0))
        return acc[idx] == ranks if len(acc) else np.zeros(len(ranks), dtype=bool)
    return _ks.sample_batch(m, ranks, True)


def spiral_ar_vectors(config: SamplerConfig) -> tuple[list[spiral.PentagonVector], SampleReport]:
    """``config.count`` independent uniform isomers as canonical pentagon vectors.

    For small ``C(m, 12)`` the accept/reject verdict of every rank is
    computed once and cached. Draws and results are the same as with
    per-draw windups.
    """
    n, m = config.n, config.m
    if not spiral.is_feasible(n):
        raise InfeasibleN(f"n={n} is not feasible")
    total = spiral.candidate_count(n)
    rng = rng_for(config.seed)
    out: list[spiral.PentagonVector] = []
    rep = SampleReport()
    while len(out) < config.count:
        if total < INT64_SAFE:
            ranks = rng.integers(0, total, size=config.batch, dtype=np.int64)
            mask = _accept_mask(m, total, ranks)
            used = len(ranks)
            pos = np.empty(12, dtype=np.int64)
            for i in np.flatnonzero(mask):
                _ks.unrank_combination(m, int(ranks[i]), pos)
                out.append(spiral.PentagonVector(n, tuple(int(p) + 1 for p in pos)))
                if len(out) == config.count:
                    used = int(i) + 1  # later draws of the batch are discarded
                    break
            rep.attempted += used
        else:
            rep.attempted += 1
            pos = _unrank(m, _draw_big(rng, total))
            pv = spiral.PentagonVector(n, tuple(p + 1 for p in pos))
            try:
                g = spiral.windup(pv)
            except (WindupFailed, ValidationError):
                continue
            if spiral.canonical_pentagon_vector(g) == pv:
                out.append(pv)
    rep.accepted = len(out)
    for pv in out:
        rep.counts[str(pv)] = rep.counts.get(str(pv), 0) + 1
    return out, rep


def spiral_ar_sample(config: SamplerConfig) -> DualFullerene:
    """One exactly uniform random isomer of ``C_n``."""
    vecs, _ = spiral_ar_vectors(SamplerConfig(config.n, config.seed, count=1, batch=config.batch))
    return spiral.windup(vecs[0])


@dataclass
class ChainResult:
    report: SampleReport
    words: list[spiral.PentagonVector]
    visits: np.ndarray
    first_seen_by: dict[str, int]
    final: Triangulation
    stats: dict[str, int]


def _chain_kernel(config: SamplerConfig, rot: np.ndarray, deg: np.ndarray, inv_temp: float):
    m = config.m
    rng = rng_for(config.seed)
    words = np.zeros((config.record_limit, m), dtype=np.int64)
    counts = np.zeros(config.record_limit, dtype=np.int64)
    stats_arr = np.array([0, 0, 0, 0, -1], dtype=np.int64)
    nfound = 0
    first: dict[int, int] = {}
    burn_counts = None
    done = 0
    while done < config.steps:
        if done < config.burn_in:
            chunk = min(config.batch * 16, config.burn_in - done)
        else:
            chunk = min(config.batch * 16, config.steps - done)
        u = rng.random((chunk, 2))
        before = nfound
        nfound = _kf.run_chain(rot, deg, u, words, counts, nfound, stats_arr, inv_temp)
        for k in range(before, nfound):
            first[k] = done + chunk  # an upper bound: the end of the discovering chunk
        done += chunk
        if done == config.burn_in:
            burn_counts = counts.copy()
    if burn_counts is not None:
        counts -= burn_counts
    return words[:nfound], counts[:nfound], first, stats_arr


def _chain_energy(config: SamplerConfig, rot: np.ndarray, deg: np.ndarray):
    """Metropolis flips under a user energy; pure Python, meant for small runs."""
    energy = config.energy
    m = config.m
    rng = rng_for(config.seed)
    words: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}
    counts: list[int] = []
    first: dict[int, int] = {}
    acc = rej = fsteps = unspiral = 0
    cur = energy(rot, deg)
    state = -1
    for step in range(config.steps):
        u, v = rng.random(2)
        a, b = _kf._pick_edge(rot, deg, u)
        trial_rot, trial_deg = rot.copy(), deg.copy()
        if _kf.flip_edge(trial_rot, trial_deg, a, b, 3) != _kf.FLIP_OK:
            rej += 1
        else:
            new = energy(trial_rot, trial_deg)
            if new <= cur or v < math.exp(-(new - cur) / config.temperature):
                rot[:], deg[:] = trial_rot, trial_deg
                cur = new
                acc += 1
                state = -1
                if _kf._is_fullerene_state(deg):
                    word, _, found = _ks.canonical_word(rot, deg)
                    if not found:
                        unspiral += 1
                        state = -2
                    else:
                        key = tuple(int(x) for x in word)
                        if key not in index:
                            index[key] = len(words)
                            words.append(key)
                            counts.append(0)
                            first[index[key]] = step + 1
                        state = index[key]
            else:
                rej += 1
        if state != -1:
            fsteps += 1
            if state >= 0 and step >= config.burn_in:
                counts[state] += 1
    arr = np.array(words, dtype=np.int64).reshape(len(words), m)
    return arr, np.array(counts, dtype=np.int64), first, np.array([acc, rej, fsteps, unspiral, state])


def psw_chain(config: SamplerConfig) -> ChainResult:
    """Random pSW edge flips started from the bipyramid with ``m`` vertices.

    Each step picks a directed edge uniformly. Flips that would create a
    multi-edge or a vertex of degree < 3 are rejected and the chain stays
    put (the step still counts). Under the ``energy`` policy a valid flip is
    further subject to a Metropolis test at ``config.temperature``, using
    :func:`degree_energy` unless ``config.energy`` supplies another one.
    Visits to fullerene states are recorded by canonical spiral.

    Uniform flips almost never reach a fullerene state beyond tiny ``m``,
    because fullerene duals are a vanishing fraction of all triangulations.
    """
    m = config.m
    if m < 5:
        raise ValueError("need m >= 5")
    start = bipyramid(m)
    rot, deg = start.rotation_array(m)
    if config.policy == "uniform_flip":
        words, counts, first, st = _chain_kernel(config, rot, deg, 0.0)
    elif config.energy is None:
        words, counts, first, st = _chain_kernel(config, rot, deg, 1.0 / config.temperature)
    else:
        words, counts, first, st = _chain_energy(config, rot, deg)
    n = config.n
    vecs = [spiral.PentagonVector.from_word(w) for w in words]
    rep = SampleReport(attempted=config.steps - config.burn_in, accepted=int(counts.sum()))
    for pv, c in zip(vecs, counts):
        if c:
            rep.counts[str(pv)] = int(c)
    stats_d = {"accepted_flips": int(st[0]), "rejected_flips": int(st[1]),
               "fullerene_steps": int(st[2]), "unspiralable": int(st[3])}
    rep.extra.update(stats_d)
    final = build_triangulation([rot[v, : deg[v]].tolist() for v in range(m)])
    return ChainResult(rep, vecs, counts, {str(vecs[k]): s for k, s in first.items()}, final, stats_d)


@dataclass
class UniformityReport:
    n: int
    counts: np.ndarray
    chi2: float
    p_value: float
    unknown: int = 0


def uniformity_report(samples: Iterable[spiral.PentagonVector | PlaneGraph], n: int,
                      budget: int = spiral.DEFAULT_BUDGET) -> UniformityReport:
    """Chi-square test of the isomer frequencies against the uniform distribution."""
    vecs = spiral.enumerate_vectors(n, budget)
    if not vecs:
        raise EmptyInput(f"C_{n} is empty")
    index = {v: j for j, v in enumerate(vecs)}
    counts = np.zeros(len(vecs), dtype=np.int64)
    unknown = 0
    for s in samples:
        pv = s if isinstance(s, spiral.PentagonVector) else spiral.canonical_pentagon_vector(s)
        j = index.get(pv)
        if j is None:
            unknown += 1
        else:
            counts[j] += 1
    if len(vecs) == 1 or counts.sum() == 0:
        return UniformityReport(n, counts, 0.0, 1.0, unknown)
    res = stats.chisquare(counts)
    return UniformityReport(n, counts, float(res.statistic), float(res.pvalue), unknown)


def biased_vectors(n: int, count: int) -> list[spiral.PentagonVector]:
    """Degenerate sampler that always returns ``C_{n,1}`` (harness sanity check)."""
    return [spiral.enumerate_vectors(n)[0]] * count


def sample_many(config: SamplerConfig) -> tuple[list[DualFullerene], SampleReport]:
    if config.method == "spiral_ar":
        vecs, rep = spiral_ar_vectors(config)
        return [spiral.windup(v) for v in vecs], rep
    res = psw_chain(config)
    graphs = [spiral.windup(v) for v in res.words if res.report.counts.get(str(v))]
    return graphs[: config.count] if config.count else graphs, res.report

