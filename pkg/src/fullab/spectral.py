"""Spectra, Newton power sums and (alpha, beta)-characters of fullerene graphs.

The character ``ch = tr(exp(alpha*A + beta*D))`` is evaluated as
``sum(exp(alpha * lam))`` over the eigenvalues ``lam`` of ``A + (beta/alpha) D``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInput, FullabError, NotSymmetric, OutOfRange
from .graph_core import DualFullerene, PlaneGraph, SubgraphView, graph_matrix, primal, subgraph
from .kernels import eigen as _ke
from . import spiral

DEFAULT_ALPHA = 0.5
DEFAULT_BETA = 0.25
REPRESENTATIONS = ("dual", "hex", "pent", "primal")


def sym_eigenvalues(m: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, descending."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > tol:
        raise NotSymmetric("matrix is not symmetric")
    if a.shape[0] == 0:
        return np.zeros(0)
    lam, ok = _ke.symmetric_eigenvalues(np.ascontiguousarray(a))
    if not ok:  # pragma: no cover - QL converges in a few sweeps on graph matrices
        raise FullabError("eigenvalue iteration did not converge")
    return lam[::-1].copy()


@dataclass(frozen=True)
class NewtonValue:
    descriptor: str
    k: int
    value: float


def newton(m: np.ndarray, k: int, descriptor: str = "M") -> NewtonValue:
    """``N(M, k) = tr(M^k)`` as a power sum of the spectrum.

    For integer matrices the result is rounded, after checking it lies within
    1e-6 of an integer.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    a = np.asarray(m, dtype=float)
    lam = sym_eigenvalues(a)
    value = float(np.sum(lam**k)) if k else float(a.shape[0])
    if np.all(a == np.round(a)):
        rounded = round(value)
        scale = max(1.0, float(np.sum(np.abs(lam) ** k)))
        if abs(value - rounded) > 1e-6 * scale:  # pragma: no cover - guards the solver
            raise FullabError(f"N({descriptor},{k}) = {value} is not integral")
        value = float(rounded)
    return NewtonValue(descriptor, k, value)


def _target(g: PlaneGraph | SubgraphView, representation: str) -> PlaneGraph:
    if isinstance(g, SubgraphView):
        return g.graph
    if representation == "dual":
        return g
    if representation == "hex":
        return subgraph(g, 6).graph
    if representation == "pent":
        return subgraph(g, 5).graph
    if representation == "primal":
        return primal(g)
    raise ValueError(f"unknown representation {representation!r}")


@dataclass(frozen=True)
class SpectralSummary:
    alpha: float
    beta: float
    eigenvalues: np.ndarray
    character: float
    label: str = ""


def spectral_summary(g: PlaneGraph | SubgraphView, alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA,
                     representation: str = "dual", label: str = "") -> SpectralSummary:
    """Spectrum of ``A + (beta/alpha) D`` (of ``beta D`` when ``alpha == 0``) and the character."""
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise ValueError("alpha and beta must be finite")
    h = _target(g, representation)
    if alpha == 0:
        lam = np.sort(beta * h.degrees.astype(float))[::-1]
        ch = float(np.sum(np.exp(lam)))
    else:
        lam = sym_eigenvalues(graph_matrix(h, "combination", 1.0, beta / alpha).data)
        ch = float(np.sum(np.exp(alpha * lam)))
    return SpectralSummary(alpha, beta, lam, ch, label)


def character(g: PlaneGraph | SubgraphView, alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA,
              representation: str = "dual") -> float:
    """``ch_{alpha,beta} = tr(exp(alpha*A + beta*D))`` of the chosen representation.

    ``representation`` picks the dual triangulation, its hexagon or pentagon
    subgraph, or the cubic primal graph. An empty subgraph has character 0.
    """
    return spectral_summary(g, alpha, beta, representation).character


def character_series(g: PlaneGraph, alpha: float, beta: float, terms: int = 60) -> tuple[float, float]:
    """Truncated series ``sum_k tr(M^k)/k!`` with an upper bound on the remainder.

    The bound uses ``|tr(M^k)| <= m * ||M||_2^k`` and the exponential tail.
    """
    m = graph_matrix(g, "combination", alpha, beta).data
    dim = m.shape[0]
    total = 0.0
    power = np.eye(dim)
    fact = 1.0
    for k in range(terms + 1):
        if k:
            power = power @ m
            fact *= k
        total += np.trace(power) / fact
    norm = float(np.linalg.norm(m, 2)) if dim else 0.0
    k1 = terms + 1
    bound = dim * norm**k1 / math.factorial(k1) * math.exp(norm)
    return float(total), bound


def normalized_character(value_or_graph: float | PlaneGraph, ch_min: float, ch_max: float,
                         alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA) -> float:
    """``(ch - ch_min) / (ch_max - ch_min)``; raises OutOfRange outside the interval."""
    if not ch_min < ch_max:
        raise ValueError("need ch_min < ch_max")
    ch = float(value_or_graph) if isinstance(value_or_graph, (int, float)) else character(value_or_graph, alpha, beta)
    slack = 1e-12 * max(1.0, abs(ch_max))
    if ch < ch_min - slack or ch > ch_max + slack:
        raise OutOfRange(f"character {ch} outside [{ch_min}, {ch_max}]")
    return min(1.0, max(0.0, (ch - ch_min) / (ch_max - ch_min)))


def normalized_newton(g: DualFullerene, k: int) -> float:
    """``2/(n+4) * N(A + D/2, k)`` on the dual graph."""
    m = graph_matrix(g, "combination", 1.0, 0.5).data
    if k == 0:
        val = float(m.shape[0])
    else:
        val = float(np.sum(sym_eigenvalues(m) ** k))
    return 2.0 / (2 * (g.m - 2) + 4) * val


@dataclass
class CharacterRange:
    n: int
    alpha: float
    beta: float
    values: np.ndarray
    min: float
    argmin: int
    max: float
    argmax: int
    neighbors: dict[int, dict] = field(default_factory=dict)


def character_values(n: int, alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA,
                     budget: int = spiral.DEFAULT_BUDGET) -> np.ndarray:
    """Characters of ``C_{n,1}, C_{n,2}, ...`` in isomer order."""
    return np.array([character(g, alpha, beta) for g in spiral.enumerate_isomers(n, budget)])


def character_range(n: int, alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA,
                    neighbors: Sequence[int] = (), budget: int = spiral.DEFAULT_BUDGET) -> CharacterRange:
    """Extremes over ``C_n`` (``argmin``/``argmax`` are 1-based isomer indices).

    For every ``n'`` in ``neighbors`` the report records whether the ranges
    of ``C_n`` and ``C_n'`` overlap and whether they are ordered like ``n``.
    """
    vals = character_values(n, alpha, beta, budget)
    if vals.size == 0:
        raise EmptyInput(f"C_{n} is empty")
    rng = CharacterRange(n, alpha, beta, vals, float(vals.min()), int(vals.argmin()) + 1,
                         float(vals.max()), int(vals.argmax()) + 1)
    for k in neighbors:
        if not spiral.is_feasible(k):
            continue
        other = character_values(k, alpha, beta, budget)
        lo, hi = float(other.min()), float(other.max())
        overlap = not (hi < rng.min or lo > rng.max)
        ordered = (hi < rng.min) if k < n else (lo > rng.max)
        rng.neighbors[k] = {"min": lo, "max": hi, "overlap": overlap, "ordered": ordered}
    return rng


@dataclass(frozen=True)
class SweepRow:
    n: int
    j: int
    character: float
    normalized: float


def sweep(n: int, alpha: float = DEFAULT_ALPHA, beta: float = DEFAULT_BETA,
          budget: int = spiral.DEFAULT_BUDGET) -> list[SweepRow]:
    """Character of every isomer of ``C_n`` with its normalized value in ``[0, 1]``."""
    vals = character_values(n, alpha, beta, budget)
    if vals.size == 0:
        return []
    lo, hi = float(vals.min()), float(vals.max())
    rows = []
    for j, v in enumerate(vals, 1):
        norm = normalized_character(float(v), lo, hi) if hi > lo else 0.0
        rows.append(SweepRow(n, j, float(v), norm))
    return rows


@dataclass(frozen=True)
class HistogramRow:
    left: float
    right: float
    count: int
    density: float


def histogram(values: Iterable[float], bins: int = 1000,
              range: tuple[float, float] | None = None) -> list[HistogramRow]:  # noqa: A002
    """Equal-width density histogram; ``sum(density * width) == 1``."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    vals = np.asarray(list(values), dtype=float)
    if vals.size == 0:
        raise EmptyInput("no values to bin")
    counts, edges = np.histogram(vals, bins=bins, range=range)
    inside = counts.sum()
    if inside == 0:
        raise EmptyInput("no values inside the histogram range")
    widths = np.diff(edges)
    dens = counts / (inside * widths)
    return [HistogramRow(float(a), float(b), int(c), float(d)) for a, b, c, d in zip(edges[:-1], edges[1:], counts, dens)]


def min_character_gap(graphs: Sequence[PlaneGraph], alpha: float = DEFAULT_ALPHA,
                      beta: float = DEFAULT_BETA) -> tuple[float, tuple[int, int]]:
    """Smallest pairwise character difference and the pair realizing it."""
    vals = np.array([character(g, alpha, beta) for g in graphs])
    if vals.size < 2:
        raise EmptyInput("need at least two graphs")
    order = np.argsort(vals, kind="stable")
    gaps = np.diff(vals[order])
    i = int(np.argmin(gaps))
    a, b = int(order[i]), int(order[i + 1])
    return float(gaps[i]), (min(a, b), max(a, b))
