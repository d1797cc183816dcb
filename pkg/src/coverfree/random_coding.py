"""Random-coding lower bounds on the rates of superimposed codes.

Covers the constant-weight-ensemble bounds: the disjunctive bound R(s,1),
the cover-free bound R(s,l) driven by the coupled pair (z, u) with
z - u = z**s * (1-u)**l, the list-decoding bound R_L(s) in both its Q- and
y-parametrizations, the large-L limit, the extremal type distributions behind
the exponents, and the closed-form asymptotic main terms used for trend
checks.

Rates are in bits per matrix row.  The fixed-point equations for the
auxiliary root y are solved in delta = 1 - y with log1p/expm1 arithmetic:
for large list sizes the root approaches 1 like ((s-1)/s)**L, far below the
floating-point spacing at 1.0, while delta itself stays representable.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import LOG2E, _clamp, _kl
from .optimize import (
    DEFAULT_CONFIG,
    ConvergenceError,
    SolverConfig,
    maximize_1d,
)

__all__ = [
    "BoundResult",
    "ExtremalDistributions",
    "solve_y_disjunctive",
    "solve_y_list",
    "exponent_disjunctive",
    "exponent_list",
    "exponent_cover_free",
    "solve_u_given_z",
    "lower_bound_disjunctive",
    "lower_bound_cf",
    "lower_bound_ld",
    "lower_bound_ld_alt",
    "ld_limit",
    "extremal_distributions",
    "asymptote",
    "ASYMPTOTE_KINDS",
]

BOUND_KINDS = ("cf_lower", "ld_lower", "ld_limit", "cf_upper", "ld_upper")

LN2 = math.log(2.0)

# Scan resolution for locating every u-root of z - u = z^s (1-u)^l on (0, z).
# The equation can have several roots when l*z**s > 1; all are kept and the
# best exponent wins, which can only raise the reported lower bound.
_U_SCAN_STEP = 1e-4

# Bisection floor for delta = 1 - y in log space; roots below this would
# underflow doubles entirely (list sizes far beyond anything tabulated here).
_DELTA_FLOOR = 1e-290


@dataclass(frozen=True)
class BoundResult:
    """One computed bound value with its parameters and solver diagnostics.

    ``second_param`` is l or L; it is 0 for the L -> infinity limit where no
    finite list size applies.
    """

    kind: str
    s: int
    second_param: int
    value: float
    params: dict = field(default_factory=dict)
    residual: float = 0.0
    iterations: int = 0

    def __post_init__(self) -> None:
        if self.kind not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if not 0.0 < self.value <= 1.0:
            raise ValueError(f"bound value {self.value!r} outside (0, 1]")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.second_param < 0:
            raise ValueError("second_param must be >= 0")
        if self.kind in ("cf_lower", "ld_lower", "ld_limit"):
            # No rate exceeds the counting ceiling 1/s.
            if self.value > 1.0 / self.s + 1e-9:
                raise ValueError(
                    f"lower bound {self.value!r} above the 1/s ceiling for s={self.s}"
                )

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "s": self.s,
            "second_param": self.second_param,
            "value": self.value,
            "params": dict(self.params),
            "residual": self.residual,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class ExtremalDistributions:
    """Worst-case type distributions (tau over s-patterns, nu over l-patterns)."""

    tau: dict[tuple[int, ...], float]
    nu: dict[tuple[int, ...], float]
    q: float


def _check_prob(name: str, x: float) -> None:
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie strictly inside (0, 1), got {x!r}")


# ---------------------------------------------------------------------------
# The auxiliary root y of the ensemble fixed-point equation
# ---------------------------------------------------------------------------

def _delta_residual(s: int, L: int, Q: float, d: float) -> float:
    """Residual of y = 1-Q + Q*y^s*(1 - ((y-y^s)/(1-y^s))^L) at y = 1-d.

    Written as d - Q*((1-y^s) + y^s * r^L) with r = (y - y^s)/(1 - y^s),
    which is algebraically identical and free of cancellation for tiny d.
    """
    ly = math.log1p(-d)
    s1 = -math.expm1(s * ly)          # 1 - y^s
    ys = math.exp(s * ly)
    if L == 1:
        # r reduces to y*(1-y^{s-1})/(1-y^s); inline the single power.
        rl = (1.0 - d) * (-math.expm1((s - 1) * ly)) / s1
    else:
        r = (1.0 - d) * (-math.expm1((s - 1) * ly)) / s1
        rl = math.exp(L * math.log(r)) if r > 0.0 else 0.0
    return d - Q * (s1 + ys * rl)


def _delta_root(s: int, L: int, Q: float, cfg: SolverConfig) -> tuple[float, float, int]:
    """Root delta = 1 - y, solved by bisection on log(delta).

    Returns ``(delta, residual, iterations)``.  The bracket is
    (_DELTA_FLOOR, Q]: the residual is negative at the left end and
    Q*y^s*(1 - r^L) > 0 at delta = Q, which is asserted at runtime.
    """
    lo = math.log(_DELTA_FLOOR)
    hi = math.log(Q)
    flo = _delta_residual(s, L, Q, math.exp(lo))
    fhi = _delta_residual(s, L, Q, math.exp(hi))
    if abs(fhi) <= cfg.root_tol:
        # y^s underflows for large s and mid-range Q: the root sits at
        # delta = Q up to rounding and the residual is already within
        # tolerance.
        return Q, abs(fhi), 0
    if not (flo < 0.0 <= fhi):
        raise ConvergenceError(
            "fixed-point bracket lost its sign change: "
            f"s={s} L={L} Q={Q!r}, residuals ({flo!r}, {fhi!r})"
        )
    it = 0
    while it < cfg.max_iter and (hi - lo) > 1e-15:
        mid = 0.5 * (lo + hi)
        if _delta_residual(s, L, Q, math.exp(mid)) < 0.0:
            lo = mid
        else:
            hi = mid
        it += 1
    d = math.exp(0.5 * (lo + hi))
    res = abs(_delta_residual(s, L, Q, d))
    if res > cfg.root_tol and res > 1e-9 * d:
        raise ConvergenceError(
            f"fixed-point residual {res!r} above tolerance for s={s} L={L} Q={Q!r}"
        )
    return d, res, it


def solve_y_disjunctive(s: int, Q: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Root y in [1-Q, 1) of y = 1-Q + Q*y^s*(1-y)/(1-y^s)."""
    if s < 2:
        raise ValueError("s must be >= 2")
    _check_prob("Q", Q)
    d, _, _ = _delta_root(s, 1, Q, cfg)
    return 1.0 - d


def solve_y_list(s: int, L: int, Q: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Root y in [1-Q, 1) of y = 1-Q + Q*y^s*[1 - ((y-y^s)/(1-y^s))^L].

    For large L the root is within ((s-1)/s)**L of 1 and the returned float
    may round to 1.0; the bound computations below work with delta = 1 - y
    internally and are not affected.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if L < 1:
        raise ValueError("L must be >= 1")
    _check_prob("Q", Q)
    d, _, _ = _delta_root(s, L, Q, cfg)
    return 1.0 - d


# ---------------------------------------------------------------------------
# Exponents
# ---------------------------------------------------------------------------

def _exponent_from_delta(s: int, L: int, Q: float, d: float) -> float:
    """log2(Q/d) - s*K(Q, d) - L*K(Q, d/(1-y^s)) evaluated stably in d."""
    ly = math.log1p(-d)
    s1 = -math.expm1(s * ly)
    log2_q_d = math.log2(Q) - math.log2(d)
    # K(Q, d) with the tiny-d second argument expanded explicitly.
    kd = Q * log2_q_d + (1.0 - Q) * (math.log2(1.0 - Q) - ly / LN2)
    kb = _kl(Q, d / s1)
    return log2_q_d - s * kd - L * kb


def exponent_list(s: int, L: int, Q: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Random-coding exponent A_L(s, Q) for the list-decoding bad-pair event."""
    if s < 1 or L < 1:
        raise ValueError("s and L must be >= 1")
    _check_prob("Q", Q)
    d, _, _ = _delta_root(s, L, Q, cfg)
    return _exponent_from_delta(s, L, Q, d)


def exponent_disjunctive(s: int, Q: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Exponent A(s, Q) = log2(Q/(1-y)) - s*K(Q, 1-y) - K(Q, (1-y)/(1-y^s))."""
    return exponent_list(s, 1, Q, cfg)


def exponent_cover_free(z: float, u: float, s: int, l: int) -> float:
    """Exponent T(z, u, s, l) of the cover-free bad-pair event.

    Defined for 0 < u < z < 1 on the constraint branch
    z - u = z**s * (1-u)**l:

        T = s*u/(1-(z-u)) * log2(z/u)
          + l*(1-z)/(1-(z-u)) * log2((1-u)/(1-z))
          + (s+l-1) * log2(1-(z-u))
    """
    if not 0.0 < u < z < 1.0:
        raise ValueError(f"need 0 < u < z < 1, got z={z!r}, u={u!r}")
    den = 1.0 - (z - u)
    return (
        s * u / den * math.log2(z / u)
        + l * (1.0 - z) / den * math.log2((1.0 - u) / (1.0 - z))
        + (s + l - 1) * math.log2(den)
    )


# ---------------------------------------------------------------------------
# Disjunctive lower bound
# ---------------------------------------------------------------------------

def lower_bound_disjunctive(s: int, cfg: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """max over Q of A(s, Q)/s, with the argmax weight and root reported."""
    if s < 2:
        raise ValueError("s must be >= 2")
    q_best, a_best = maximize_1d(lambda q: exponent_list(s, 1, q, cfg), 0.0, 1.0, cfg)
    d, res, it = _delta_root(s, 1, q_best, cfg)
    return BoundResult(
        kind="cf_lower",
        s=s,
        second_param=1,
        value=a_best / s,
        params={"Q": q_best, "y": 1.0 - d},
        residual=res,
        iterations=it,
    )


# ---------------------------------------------------------------------------
# Cover-free lower bound (coupled z-u parametrization)
# ---------------------------------------------------------------------------

def _u_constraint(s: int, l: int, z: float, u: float) -> float:
    return z - u - z**s * (1.0 - u) ** l


def _u_roots(s: int, l: int, z: float, cfg: SolverConfig) -> list[float]:
    """All roots u in (0, z) of z - u = z^s (1-u)^l, by scan plus bisection.

    The scan endpoints are pulled strictly inside (0, z), where the residual
    signs are guaranteed (positive at 0+, negative at z-).  When z is close
    to 1 the rightmost root is squeezed within z^s*(1-z)^l of z, which can be
    past the scan's right endpoint; a contraction from the endpoint recovers
    it (the fixed-point map u -> z - z^s*(1-u)^l has a tiny derivative
    there).  The list may be empty if the near-z root collapses onto z in
    floating point; the exponent at such a root is itself O(1-z).
    """
    n = max(int(z / _U_SCAN_STEP), 64) + 1
    us = np.linspace(0.0, z, n)
    us[0] = z * 1e-12
    us[-1] = z * (1.0 - 1e-12)
    phi = z - us - z**s * (1.0 - us) ** l
    sign = np.sign(phi)
    roots: list[float] = []
    for i in np.nonzero(np.diff(sign) != 0)[0]:
        lo, hi = float(us[i]), float(us[i + 1])
        flo = _u_constraint(s, l, z, lo)
        for _ in range(cfg.max_iter):
            if hi - lo <= 1e-16 * z:
                break
            mid = 0.5 * (lo + hi)
            fm = _u_constraint(s, l, z, mid)
            if (fm < 0.0) == (flo < 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    if phi[-1] > 0.0:
        u = float(us[-1])
        for _ in range(cfg.max_iter):
            nxt = z - z**s * (1.0 - u) ** l
            if not 0.0 < nxt < z:
                break
            if nxt == u:
                break
            u = nxt
        if 0.0 < u < z and abs(_u_constraint(s, l, z, u)) <= 1e-13:
            roots.append(u)
    return roots


def solve_u_given_z(
    s: int, l: int, z: float, cfg: SolverConfig = DEFAULT_CONFIG
) -> float:
    """First root u in (0, z) of the coupling constraint z - u = z^s (1-u)^l."""
    if s < 2 or l < 1:
        raise ValueError("need s >= 2 and l >= 1")
    _check_prob("z", z)
    roots = _u_roots(s, l, z, cfg)
    if not roots:
        raise ConvergenceError(f"no representable u-root for s={s} l={l} z={z!r}")
    return roots[0]


def _best_u(s: int, l: int, z: float, cfg: SolverConfig) -> tuple[float, float]:
    """(u, T) over all constraint roots at this z, keeping the largest T.

    Returns -inf when no root is representable (z hugging 1), which drops
    that grid point from the maximization; the objective vanishes there.
    """
    best_u, best_t = math.nan, -math.inf
    for u in _u_roots(s, l, z, cfg):
        t = exponent_cover_free(z, u, s, l)
        if t > best_t:
            best_u, best_t = u, t
    return best_u, best_t


def lower_bound_cf(s: int, l: int, cfg: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """Cover-free rate lower bound: max over z of T(z, u(z), s, l)/(s+l-1).

    For min(s, l) == 1 the computation delegates to the disjunctive bound,
    whose formulas are stated for that case; for l > s the (l, s) problem is
    solved and the parameters are mapped through the exact symmetry
    (z, u, Q) -> (1-u, 1-z, 1-Q).
    """
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    if s == 1 and l == 1:
        # Antichain case: rate 1 is attained by the middle binomial layer.
        return BoundResult(
            kind="cf_lower", s=1, second_param=1, value=1.0, params={"Q": 0.5}
        )
    if min(s, l) == 1:
        base = lower_bound_disjunctive(max(s, l), cfg)
        if l == 1:
            return BoundResult(
                kind="cf_lower",
                s=s,
                second_param=1,
                value=base.value,
                params=dict(base.params),
                residual=base.residual,
                iterations=base.iterations,
            )
        return BoundResult(
            kind="cf_lower",
            s=1,
            second_param=l,
            value=base.value,
            params={"Q": 1.0 - base.params["Q"], "y": base.params["y"]},
            residual=base.residual,
            iterations=base.iterations,
        )
    swapped = l > s
    ss, ll = (l, s) if swapped else (s, l)

    def objective(z: float) -> float:
        return _best_u(ss, ll, z, cfg)[1]

    z_best, t_best = maximize_1d(objective, 0.0, 1.0, cfg)
    u_best, _ = _best_u(ss, ll, z_best, cfg)
    res = abs(_u_constraint(ss, ll, z_best, u_best))
    q = (1.0 - z_best) / (1.0 - (z_best - u_best))
    if swapped:
        z_best, u_best, q = 1.0 - u_best, 1.0 - z_best, 1.0 - q
    return BoundResult(
        kind="cf_lower",
        s=s,
        second_param=l,
        value=t_best / (s + l - 1),
        params={"Q": q, "z": z_best, "u": u_best},
        residual=res,
        iterations=0,
    )


# ---------------------------------------------------------------------------
# List-decoding lower bound
# ---------------------------------------------------------------------------

def lower_bound_ld(s: int, L: int, cfg: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """List-decoding rate lower bound: max over Q of A_L(s, Q)/(s+L-1)."""
    if s < 2 or L < 1:
        raise ValueError("need s >= 2 and L >= 1")
    q_best, a_best = maximize_1d(lambda q: exponent_list(s, L, q, cfg), 0.0, 1.0, cfg)
    d, res, it = _delta_root(s, L, q_best, cfg)
    return BoundResult(
        kind="ld_lower",
        s=s,
        second_param=L,
        value=a_best / (s + L - 1),
        params={"Q": q_best, "y": 1.0 - d},
        residual=res,
        iterations=it,
    )


def _t_of_y(s: int, L: int, y: float) -> float:
    """Objective of the y-parametrization, with Q implied by y.

    Q(y) = (1-y)/(1 - r) with r = y^s * (1 - ((y-y^s)/(1-y^s))^L), and

        T = (1 - sQ - LQ) * log2(Q/(1-y)) - (s+L)(1-Q) * log2((1-Q)/y)
          - L*log2(1-y^s) + L(1-Q)*log2(1-y^(s-1))
    """
    ys = y**s
    s1 = 1.0 - ys
    ratio = (y - ys) / s1
    r = ys * (1.0 - ratio**L)
    q = (1.0 - y) / (1.0 - r)
    q = _clamp(q)
    return (
        (1.0 - s * q - L * q) * math.log2(q / (1.0 - y))
        - (s + L) * (1.0 - q) * math.log2((1.0 - q) / y)
        - L * math.log2(s1)
        + L * (1.0 - q) * math.log2(1.0 - y ** (s - 1))
    )


def lower_bound_ld_alt(s: int, L: int, cfg: SolverConfig = DEFAULT_CONFIG) -> BoundResult:
    """List-decoding lower bound through the y-parametrization.

    Maximizes over y in (0, 1) directly, with the weight Q recovered from y;
    no root solve is needed, which makes this an independent cross-check of
    :func:`lower_bound_ld`.
    """
    if s < 2 or L < 1:
        raise ValueError("need s >= 2 and L >= 1")
    y_best, t_best = maximize_1d(lambda y: _t_of_y(s, L, y), 0.0, 1.0, cfg)
    ys = y_best**s
    r = ys * (1.0 - ((y_best - ys) / (1.0 - ys)) ** L)
    q = (1.0 - y_best) / (1.0 - r)
    return BoundResult(
        kind="ld_lower",
        s=s,
        second_param=L,
        value=t_best / (s + L - 1),
        params={"Q": q, "y": y_best},
        residual=0.0,
        iterations=0,
    )


def ld_limit(s: int) -> BoundResult:
    """Large-L limit of the list-decoding lower bound (closed form).

    value = log2((s-1)^(s-1)/s^s + 1); the limiting ensemble weight is
    Q = 1/(s^s/(s-1)^(s-1) + 1).
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    ratio = (s - 1) ** (s - 1) / s**s
    return BoundResult(
        kind="ld_limit",
        s=s,
        second_param=0,
        value=math.log2(ratio + 1.0),
        params={"Q": 1.0 / (1.0 / ratio + 1.0)},
    )


# ---------------------------------------------------------------------------
# Extremal distributions
# ---------------------------------------------------------------------------

def extremal_distributions(s: int, l: int, z: float, u: float) -> ExtremalDistributions:
    """Worst-case type distributions tau (s-bit patterns) and nu (l-bit).

    For a pattern with k ones:
        tau(a) = z^(s-k) (1-z)^k / D    for a != 0,
        tau(0) = (z^s - (z-u)) / D,
        nu(b)  = u^(l-j) (1-u)^j / D    for b != 1 (j ones),
        nu(1)  = ((1-u)^l - (z-u)) / D,
    with D = 1 - (z - u).  Requires (z, u) on the constraint branch; cell
    probabilities outside [0, 1] signal an invalid (z, u) pair.
    """
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    if not 0.0 < u < z < 1.0:
        raise ValueError(f"need 0 < u < z < 1, got z={z!r}, u={u!r}")
    den = 1.0 - (z - u)

    def _cell(p: float, which: str) -> float:
        if p < -1e-12 or p > 1.0 + 1e-12:
            raise ValueError(
                f"{which} cell probability {p!r} outside [0, 1]; "
                "(z, u) is off the valid constraint branch"
            )
        return min(max(p, 0.0), 1.0)

    tau: dict[tuple[int, ...], float] = {}
    for a in itertools.product((0, 1), repeat=s):
        k = sum(a)
        if k == 0:
            tau[a] = _cell((z**s - (z - u)) / den, "tau")
        else:
            tau[a] = _cell(z ** (s - k) * (1.0 - z) ** k / den, "tau")
    nu: dict[tuple[int, ...], float] = {}
    for b in itertools.product((0, 1), repeat=l):
        j = sum(b)
        if j == l:
            nu[b] = _cell(((1.0 - u) ** l - (z - u)) / den, "nu")
        else:
            nu[b] = _cell(u ** (l - j) * (1.0 - u) ** j / den, "nu")
    return ExtremalDistributions(tau=tau, nu=nu, q=(1.0 - z) / den)


# ---------------------------------------------------------------------------
# Asymptotic main terms (trend references only, never ground truth)
# ---------------------------------------------------------------------------

def _req_second(second: int, name: str) -> int:
    if second < 1:
        raise ValueError(f"{name} must be >= 1 for this asymptote kind")
    return second


ASYMPTOTE_KINDS = (
    "disjunctive-lower",
    "disjunctive-upper",
    "cf-upper",
    "cf-lower",
    "cf-weight",
    "ld-upper",
    "ld-lower",
    "ld-weight",
    "ld-limit",
    "ld-limit-weight",
)


def asymptote(kind: str, s: int, second: int = 0) -> float:
    """Leading-order closed form for one bound family at large s (or large L).

    Kinds: disjunctive-lower ln2/s^2; disjunctive-upper 2*log2(s)/s^2;
    cf-upper (l+1)^(l+1)/(2e^(l-1)) * log2(s)/s^(l+1);
    cf-lower l^l*log2(e)/(e^l*s^(l+1)); cf-weight l/s;
    ld-upper 2L*log2(s)/s^2; ld-lower L*ln2/s^2;
    ld-weight ln2/s + L*ln2^2/s^2; ld-limit log2(e)/(e*s);
    ld-limit-weight 1/(s^s/(s-1)^(s-1) + 1).
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if kind == "disjunctive-lower":
        return LN2 / s**2
    if kind == "disjunctive-upper":
        return 2.0 * math.log2(s) / s**2
    if kind == "cf-upper":
        l = _req_second(second, "l")
        return (l + 1) ** (l + 1) / (2.0 * math.e ** (l - 1)) * math.log2(s) / s ** (l + 1)
    if kind == "cf-lower":
        l = _req_second(second, "l")
        return l**l * LOG2E / (math.e**l * s ** (l + 1))
    if kind == "cf-weight":
        l = _req_second(second, "l")
        return l / s
    if kind == "ld-upper":
        L = _req_second(second, "L")
        return 2.0 * L * math.log2(s) / s**2
    if kind == "ld-lower":
        L = _req_second(second, "L")
        return L * LN2 / s**2
    if kind == "ld-weight":
        L = _req_second(second, "L")
        return LN2 / s + L * LN2**2 / s**2
    if kind == "ld-limit":
        return LOG2E / (math.e * s)
    if kind == "ld-limit-weight":
        return 1.0 / (s**s / (s - 1) ** (s - 1) + 1.0)
    raise ValueError(f"unknown asymptote kind {kind!r}")
