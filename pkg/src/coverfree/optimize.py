"""Scalar numeric primitives: bracketed root-finding and 1-D maximization.

Both are deterministic.  The maximizer is a coarse grid scan followed by
golden-section refinement around the best cell; a global scan is used instead
of a derivative method because several objective functions in this package
have no proven concavity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = [
    "SolverConfig",
    "SolverError",
    "NoSignChangeError",
    "ConvergenceError",
    "bracket_root",
    "maximize_1d",
]

ScalarFn = Callable[[float], float]

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class SolverError(RuntimeError):
    """A numeric solver could not produce a result within its contract."""


class NoSignChangeError(SolverError):
    """The supplied bracket does not enclose a sign change."""


class ConvergenceError(SolverError):
    """Residual tolerance not reached within the iteration cap."""


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances, iteration caps, grid resolutions and the RNG seed."""

    root_tol: float = 1e-12
    max_iter: int = 200
    grid_points: int = 2000
    refine_tol: float = 1e-10
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.root_tol > 0:
            raise ValueError("root_tol must be positive")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be positive")
        if self.grid_points < 16:
            raise ValueError("grid_points must be at least 16")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


DEFAULT_CONFIG = SolverConfig()


def bracket_root(
    f: ScalarFn,
    lo: float,
    hi: float,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> float:
    """Bisection root of ``f`` on [lo, hi]; returns x with |f(x)| <= root_tol.

    Accepts a bracket whose endpoint values have opposite signs, or an
    endpoint already within tolerance of zero.
    """
    flo = f(lo)
    if abs(flo) <= cfg.root_tol:
        return lo
    fhi = f(hi)
    if abs(fhi) <= cfg.root_tol:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NoSignChangeError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}"
        )
    mid = 0.5 * (lo + hi)
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) <= cfg.root_tol:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    raise ConvergenceError(
        f"|f(x)| > {cfg.root_tol} after {cfg.max_iter} bisection steps "
        f"(bracket [{lo!r}, {hi!r}], last residual {f(mid)!r})"
    )


def maximize_1d(
    f: ScalarFn,
    lo: float,
    hi: float,
    cfg: SolverConfig = DEFAULT_CONFIG,
    grid_f: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> tuple[float, float]:
    """Maximize ``f`` over the open interval (lo, hi).

    Scans ``grid_points`` interior samples, then refines the best cell by
    golden section down to ``refine_tol`` in the argument.  Returns
    ``(argmax, max)``.  The returned maximum is never below any coarse grid
    value, and grid ties break toward the first (lowest) grid point.

    ``grid_f``, when given, evaluates the same function on a whole numpy grid
    at once; it must agree pointwise with ``f``.
    """
    if not lo < hi:
        raise ValueError(f"empty interval: lo={lo!r}, hi={hi!r}")
    xs = np.linspace(lo, hi, cfg.grid_points + 2)[1:-1]
    if grid_f is not None:
        ys = np.asarray(grid_f(xs), dtype=float)
    else:
        ys = np.array([f(x) for x in xs], dtype=float)
    i = int(np.argmax(ys))
    best_x = float(xs[i])
    best_y = float(ys[i])

    a = float(xs[i - 1]) if i > 0 else float(xs[0])
    b = float(xs[i + 1]) if i + 1 < len(xs) else float(xs[-1])
    if b > a:
        c = b - _INV_GOLDEN * (b - a)
        d = a + _INV_GOLDEN * (b - a)
        fc, fd = f(c), f(d)
        iters = 0
        while (b - a) > cfg.refine_tol and iters < 4 * cfg.max_iter:
            if fc > fd:
                b, d, fd = d, c, fc
                c = b - _INV_GOLDEN * (b - a)
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + _INV_GOLDEN * (b - a)
                fd = f(d)
            iters += 1
        xm = 0.5 * (a + b)
        fm = f(xm)
        for x, y in ((xm, fm), (c, fc), (d, fd)):
            if y > best_y:
                best_x, best_y = float(x), float(y)
    return best_x, best_y
