"""Perron root and eigenvectors of T(1) by power iteration, and the
asymptotic constants they give for an arbitrary restriction digraph."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closed_forms import AsymptoticEstimate
from .errors import NoConvergence, NoTerminal
from .restriction import RestrictionDigraph


@dataclass(frozen=True)
class PerronData:
    rho: float
    g: np.ndarray  # right eigenvector, max entry 1
    h: np.ndarray  # left eigenvector, h . g = 1
    iterations: int
    residual: float

    def to_json(self) -> dict:
        return {"rho": self.rho, "g": self.g.tolist(), "h": self.h.tolist(),
                "iterations": self.iterations, "residual": self.residual}


def _power(M: np.ndarray, tol: float, max_iter: int):
    x = np.ones(M.shape[0])
    rho_prev = None
    for it in range(1, max_iter + 1):
        y = M @ x
        top = y.max()
        if top <= 0:
            raise NoConvergence("T(1) annihilates the iterate; the digraph has no cycles", 0.0)
        rho = float(x @ y / (x @ x))
        x = y / top
        residual = float(np.abs(M @ x - rho * x).max())
        scale = max(1.0, rho)
        if rho_prev is not None and abs(rho - rho_prev) < tol * scale and residual <= tol * scale:
            return rho, x, it, residual
        rho_prev = rho
    raise NoConvergence(f"power iteration did not converge in {max_iter} steps", residual)


def perron(D, tol: float = 1e-12, max_iter: int = 10 ** 6) -> PerronData:
    """Dominant eigen-data of the 0-1 matrix T(1).

    Assumes D_R is strongly connected with cycle gcd 1; for periodic
    digraphs the iteration oscillates and NoConvergence is raised.
    """
    M = D.adjacency().astype(float) if isinstance(D, RestrictionDigraph) else np.asarray(D, dtype=float)
    rho, g, it1, res = _power(M, tol, max_iter)
    _, h, it2, _ = _power(M.T, tol, max_iter)
    h = h / (h @ g)
    if not (np.all(g > 0) and np.all(h > 0)):
        raise NoConvergence("Perron vector is not strictly positive (reducible T(1)?)", res)
    return PerronData(rho, g, h, max(it1, it2), res)


def asymptotic_constants(D: RestrictionDigraph, b: int = 0, perron_data: PerronData = None,
                         tol: float = 1e-12) -> AsymptoticEstimate:
    """A = (alpha(1).g)(h.beta_b(1)) rho^(-1-b/span) / |G|,  B = rho^(1/span)."""
    if not D.has_terminal(b):
        raise NoTerminal(f"no terminal arcs into Seq_{b}")
    P = perron_data or perron(D, tol=tol)
    n = D.n_recurrent
    alpha = np.zeros(n)
    alpha[list(D.start)] = 1.0
    beta = np.zeros(n)
    for u, _ in D.terminal[b]:
        beta[u] += 1.0
    sigma = D.span
    A = float(alpha @ P.g) * float(P.h @ beta) * P.rho ** (-1.0 - b / sigma) / D.group.order
    return AsymptoticEstimate(A, P.rho ** (1.0 / sigma), b, "spectral")
