"""
Sign-change isolation and bracketed refinement for scalar functions on (0, 1).

The scan walks r = h, 2h, … and stops at the first sign change (or exact
zero), which is what realizes "smallest positive root".  Refinement is
scipy's Brent method, the hybrid bisection / secant / inverse-quadratic
iteration with a guaranteed bracket.
"""

import logging
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from gftlab.exceptions import RootNotFoundError
from gftlab.schemas.reports import RootResult

logger = logging.getLogger(__name__)


def first_sign_change(
    psi: Callable[[float], float],
    step: float,
    upper: float = 1.0,
) -> Tuple[float, float]:
    """
    Return the first grid interval [lo, hi] ⊂ (0, upper) on which psi changes sign.

    An exact zero at a node returns the degenerate interval (node, node).

    >>> first_sign_change(lambda r: r - 0.5, 0.01)[0] < 0.5
    True
    """
    k = 1
    lo = step
    f_lo = psi(lo)
    while True:
        if f_lo == 0.0:
            return lo, lo
        hi = (k + 1) * step
        if hi >= upper:
            break
        f_hi = psi(hi)
        if np.sign(f_lo) != np.sign(f_hi):
            return lo, hi
        lo, f_lo = hi, f_hi
        k += 1
    raise RootNotFoundError(f"No sign change found on (0, {upper}) with step {step}.")


def refine_root(
    psi: Callable[[float], float],
    bracket: Tuple[float, float],
    tol: float,
    maxiter: int = 200,
) -> RootResult:
    """Refine a sign-change bracket with Brent's method to an interval below ``tol``."""
    lo, hi = bracket
    if lo == hi:
        return RootResult(root=lo, residual=abs(psi(lo)), iterations=0, bracket_used=bracket)
    # Brent stops once the half-interval is under xtol/2 + 2·eps·|x|.
    root, info = brentq(psi, lo, hi, xtol=tol / 4, maxiter=maxiter, full_output=True)
    return RootResult(
        root=root,
        residual=abs(psi(root)),
        iterations=info.iterations,
        function_calls=info.function_calls,
        bracket_used=(lo, hi),
    )


def find_first_root(
    psi: Callable[[float], float],
    step: float,
    tol: float,
    upper: Optional[float] = None,
) -> RootResult:
    bracket = first_sign_change(psi, step, upper if upper is not None else 1.0)
    result = refine_root(psi, bracket, tol)
    logger.debug("Root %.12f in [%.4f, %.4f]", result.root, *bracket)
    return result
