"""
Gauss quadrature rules on the unit interval and the unit square.

Algorithm
---------
Legendre rules come from ``numpy.polynomial.legendre.leggauss`` mapped from
[-1, 1] to [0, 1].  Integrals carrying a monomial weight r^e (e > -1) use a
Gauss–Jacobi rule from ``scipy.special.roots_jacobi`` so that the weight is
absorbed exactly; this keeps the rule spectrally accurate even when e < 0 and
the integrand is singular at the origin.

``adaptive_unit_integral`` doubles the node count until two successive
estimates agree, which is the convergence test used for line integrals
along [0, z].

Complexity
----------
A rule with N nodes costs N integrand evaluations per point; rules are cached
so repeated calls only pay for the evaluations.
"""

import logging
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_jacobi

from gftlab.exceptions import AccuracyError

logger = logging.getLogger(__name__)

Rule = Tuple[np.ndarray, np.ndarray]


@lru_cache(maxsize=64)
def legendre_unit_rule(nodes: int) -> Rule:
    """
    Gauss–Legendre nodes and weights on [0, 1].

    >>> s, w = legendre_unit_rule(4)
    >>> round(float(w.sum()), 12)
    1.0
    """
    x, w = leggauss(nodes)
    return 0.5 * (x + 1.0), 0.5 * w


@lru_cache(maxsize=64)
def jacobi_unit_rule(nodes: int, exponent: float) -> Rule:
    """
    Gauss rule on [0, 1] for the weight r^exponent.

    Parameters
    ----------
    nodes:    Number of nodes.
    exponent: Weight exponent, must exceed -1.

    Returns
    -------
    (nodes, weights) such that Σ w_j h(r_j) ≈ ∫₀¹ h(r) r^exponent dr.
    """
    if exponent <= -1:
        raise ValueError(f"Weight exponent must exceed -1, got {exponent}.")
    x, w = roots_jacobi(nodes, 0.0, exponent)
    return 0.5 * (x + 1.0), w * 2.0 ** (-exponent - 1.0)


@lru_cache(maxsize=32)
def tensor_unit_rule(nodes: int, e1: float, e2: float) -> Rule:
    """
    Flattened tensor-product rule for ∬₀¹ h(r·s) r^e1 s^e2 dr ds.

    Only the product r·s enters the integrand, so the rule is returned as
    (products, weights) of length nodes².
    """
    r, wr = jacobi_unit_rule(nodes, e1)
    s, ws = jacobi_unit_rule(nodes, e2)
    return np.outer(r, s).ravel(), np.outer(wr, ws).ravel()


def adaptive_unit_integral(
    integrand: Callable[[np.ndarray], np.ndarray],
    tol: float,
    start: int = 16,
    max_nodes: int = 512,
) -> np.ndarray:
    """
    Integrate over s ∈ [0, 1] by Gauss–Legendre with node doubling.

    ``integrand`` maps the node vector (shape ``(K,)``) to values of shape
    ``(..., K)``; the result has shape ``(...)``, so many line integrals can be
    computed in one call.

    Raises
    ------
    AccuracyError
        If successive estimates still differ by more than ``tol`` (relative to
        the magnitude of the estimate) at ``max_nodes``.
    """
    previous = None
    nodes = start
    change = np.inf
    while nodes <= max_nodes:
        s, w = legendre_unit_rule(nodes)
        estimate = integrand(s) @ w
        if previous is not None:
            change = float(np.max(np.abs(estimate - previous), initial=0.0))
            scale = max(1.0, float(np.max(np.abs(estimate), initial=0.0)))
            if change <= tol * scale:
                logger.debug("Line integral converged with %d nodes (change=%.2e)", nodes, change)
                return estimate
        previous = estimate
        nodes *= 2
    raise AccuracyError(
        f"Gauss–Legendre estimate did not settle below {tol:.1e} with {max_nodes} nodes.",
        estimate=change,
    )
