"""Composite Gauss-Legendre / Gauss-Jacobi helpers shared by all modules.

Node generation is delegated to scipy; everything here is panel
bookkeeping. Sums are accumulated with math.fsum so results do not
depend on evaluation or reduction order.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre


@lru_cache(maxsize=128)
def gl_rule(order: int):
    """Gauss-Legendre nodes/weights on [-1, 1]."""
    x, w = roots_legendre(order)
    return x, w


@lru_cache(maxsize=128)
def gj_rule(order: int, alpha: float):
    """Gauss-Jacobi nodes/weights on [-1,1] for weight (1-t^2)^alpha."""
    x, w = roots_jacobi(order, alpha, alpha)
    return x, w


def panel_nodes(edges: np.ndarray, order: int):
    """Flattened GL nodes and weights for the panels defined by `edges`."""
    edges = np.asarray(edges, dtype=float)
    x, w = gl_rule(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def uniform_edges(lo: float, hi: float, panels_per_unit: float, min_panels: int = 1) -> np.ndarray:
    """Uniform panel edges covering [lo, hi]."""
    if hi <= lo:
        raise ValueError(f"empty panel range [{lo}, {hi}]")
    count = max(min_panels, int(math.ceil((hi - lo) * panels_per_unit)))
    return np.linspace(lo, hi, count + 1)


def graded_edges(lo: float, hi: float, ratio: float, levels: int) -> np.ndarray:
    """Panel edges on [lo, hi] geometrically graded toward `lo`.

    Widths shrink by `ratio` per level moving toward lo; the innermost
    panel spans [lo, lo + (hi-lo)*ratio**levels].
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"grading ratio must lie in (0,1), got {ratio}")
    width = hi - lo
    steps = width * ratio ** np.arange(levels, -1, -1, dtype=float)
    return np.concatenate(([lo], lo + steps))


def knot_edges(lo: float, hi: float, knots, panels_per_unit: float, min_per_span: int = 4) -> np.ndarray:
    """Uniform panels within each span between sorted break points."""
    pts = sorted({lo, hi, *(k for k in knots if lo < k < hi)})
    pieces = []
    for left, right in zip(pts[:-1], pts[1:]):
        e = uniform_edges(left, right, panels_per_unit, min_panels=min_per_span)
        pieces.append(e[:-1])
    pieces.append(np.array([hi]))
    return np.concatenate(pieces)


def fsum(values) -> float:
    """Exactly rounded sum: reduction order cannot change the result."""
    return math.fsum(np.asarray(values, dtype=float).ravel())


def integrate_panels(f, edges: np.ndarray, order: int) -> float:
    """Integrate callable f (vectorized) over the given panel edges."""
    nodes, weights = panel_nodes(edges, order)
    return fsum(f(nodes) * weights)
