"""Globally adaptive Gauss-Legendre quadrature with embedded error estimates.

Each panel is integrated with an n-point rule and a 2n-point rule; the
difference between the two is the panel error estimate, a conservative
upper bound for the finer rule on smooth integrands.  The panel with the
largest estimate is bisected until every component of the (possibly
vector-valued) integral meets the requested tolerance.

Determinism: panel selection breaks ties on the left endpoint and an
insertion counter, and the final accumulation runs over panels sorted by
position, so identical inputs give bit-identical results regardless of
refinement history or thread count (the routine itself is single
threaded).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np


@lru_cache(maxsize=None)
def _gauss_legendre_rule(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


@dataclass
class QuadratureResult:
    """Value and error of a (vector-valued) integral.

    value and error have one entry per integrand component; error entries
    are absolute upper estimates produced by the embedded rule pair.
    """

    value: np.ndarray
    error: np.ndarray
    panels: int
    evaluations: int
    converged: bool

    @property
    def scalar(self) -> float:
        return float(self.value[0])


def _evaluate_panel(f: Callable, a: float, b: float, order: int):
    """Integrate one panel with the embedded (order, 2*order) pair."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)

    x_lo, w_lo = _gauss_legendre_rule(order)
    x_hi, w_hi = _gauss_legendre_rule(2 * order)

    v_lo = np.atleast_2d(np.asarray(f(mid + half * x_lo), dtype=float).T).T
    v_hi = np.atleast_2d(np.asarray(f(mid + half * x_hi), dtype=float).T).T

    coarse = half * (w_lo @ v_lo)
    fine = half * (w_hi @ v_hi)
    return fine, np.abs(fine - coarse), 3 * order


def adaptive_gauss_legendre(
    f: Callable,
    a: float,
    b: float,
    *,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_panels: int = 512,
    order: int = 16,
) -> QuadratureResult:
    """Integrate ``f`` over [a, b] to the requested tolerance.

    Parameters
    ----------
    f : callable
        Maps an array of nodes ``x`` of shape (m,) to integrand values of
        shape (m,) or (m, ncomp).  All components are integrated together
        and must all converge.
    a, b : float
        Integration bounds, a < b.
    rel_tol, abs_tol : float
        Per-component convergence targets; a component converges when its
        accumulated error estimate is below max(abs_tol, rel_tol * |value|).
    max_panels : int
        Hard refinement limit; on hit the result is returned with
        ``converged=False`` and the accumulated estimates.
    order : int
        Node count of the coarse rule of the embedded pair.

    Returns
    -------
    QuadratureResult
    """
    if not (np.isfinite(a) and np.isfinite(b) and b > a):
        raise ValueError(f"invalid integration bounds [{a}, {b}]")

    fine, err, n_eval = _evaluate_panel(f, a, b, order)
    panels = [(a, b, fine, err)]
    heap = [(-float(err.max()), a, 0, 0)]  # (-max err, left edge, counter, index)
    counter = 1
    evaluations = n_eval

    total = fine.copy()
    total_err = err.copy()

    def _done() -> bool:
        bound = np.maximum(abs_tol, rel_tol * np.abs(total))
        return bool(np.all(total_err <= bound))

    converged = _done()
    while not converged and len(panels) < max_panels:
        _, _, _, idx = heapq.heappop(heap)
        pa, pb, pv, pe = panels[idx]
        pm = 0.5 * (pa + pb)

        left_v, left_e, n1 = _evaluate_panel(f, pa, pm, order)
        right_v, right_e, n2 = _evaluate_panel(f, pm, pb, order)
        evaluations += n1 + n2

        total += left_v + right_v - pv
        total_err += left_e + right_e - pe

        panels[idx] = (pa, pm, left_v, left_e)
        panels.append((pm, pb, right_v, right_e))
        heapq.heappush(heap, (-float(left_e.max()), pa, counter, idx))
        counter += 1
        heapq.heappush(heap, (-float(right_e.max()), pm, counter, len(panels) - 1))
        counter += 1

        converged = _done()

    # Fixed-order accumulation: sum panels left to right.
    panels.sort(key=lambda p: p[0])
    value = np.sum(np.stack([p[2] for p in panels]), axis=0)
    error = np.sum(np.stack([p[3] for p in panels]), axis=0)

    return QuadratureResult(
        value=value,
        error=error,
        panels=len(panels),
        evaluations=evaluations,
        converged=converged,
    )
