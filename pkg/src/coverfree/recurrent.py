"""Recurrent upper bounds on superimposed-code rates.

The disjunctive chain starts from R(1) = 1, R(2) = f_2(v_2) and continues
with the per-s fixed point R = f_s(1 - R/R_prev); the list-decoding chain
generalizes it through the auxiliary function
G_s(x) = x - max f_{floor(s/L)}(v) over 0 <= v <= 1 - x/R_prev, capped by the
trivial bound 1/s.  The cover-free grid combines the disjunctive chain with
a two-index reduction step and an optional splitting refinement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .entropy import f_n, v_n
from .optimize import DEFAULT_CONFIG, SolverConfig, SolverError, bracket_root
from .random_coding import BoundResult

__all__ = [
    "RecurrentState",
    "upper_bound_disjunctive",
    "k_sequence",
    "k_growth_check",
    "upper_bound_cf",
    "upper_bound_cf_grid",
    "upper_cf_asymptote",
    "optimal_split_fraction",
    "upper_bound_ld",
    "threshold_sL",
    "CapExceededError",
    "ld_counting_bound",
    "plan_upper_bound_row",
]


class CapExceededError(SolverError):
    """The threshold search ran past its cap without the bound turning strict."""


@dataclass(frozen=True)
class RecurrentState:
    """A recurrent bound sequence indexed by s (entry [0] is unused).

    ``params[s]`` records the argument v at which the step equation was
    satisfied and whether the interval constraint was binding there.
    """

    kind: str
    second_param: int
    values: list[float]
    params: list[dict] = field(default_factory=list)

    @property
    def s_max(self) -> int:
        return len(self.values) - 1

    def value(self, s: int) -> float:
        if not 1 <= s <= self.s_max:
            raise IndexError(f"s={s} outside computed range 1..{self.s_max}")
        return self.values[s]


# ---------------------------------------------------------------------------
# Disjunctive chain
# ---------------------------------------------------------------------------

def upper_bound_disjunctive(s_max: int, cfg: SolverConfig = DEFAULT_CONFIG) -> RecurrentState:
    """The sequence R(1)=1, R(2)=f_2(v_2), R(s)=f_s(1 - R(s)/R(s-1)) for s>=3.

    Each step is a bisection on R over [R_prev*(1 - v_s), R_prev], where the
    step residual R - f_s(1 - R/R_prev) is strictly increasing; the root lies
    on the branch 1 - R/R_prev < v_s.
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    values = [math.nan, 1.0]
    params: list[dict] = [{}, {"v": 0.0, "interval_constrained": False}]
    if s_max >= 2:
        values.append(f_n(2, v_n(2)))
        params.append({"v": v_n(2), "interval_constrained": False})
    for s in range(3, s_max + 1):
        prev = values[s - 1]
        vs = v_n(s)

        def step(r: float, s: int = s, prev: float = prev) -> float:
            return r - f_n(s, 1.0 - r / prev)

        root = bracket_root(step, prev * (1.0 - vs), prev * (1.0 - 1e-15), cfg)
        values.append(root)
        params.append({"v": 1.0 - root / prev, "interval_constrained": True})
    return RecurrentState(kind="disjunctive", second_param=1, values=values, params=params)


def k_sequence(s_max: int, cfg: SolverConfig = DEFAULT_CONFIG) -> list[float]:
    """Reciprocals of the disjunctive chain: K_1 = 1, K_s = 1/R(s)."""
    if s_max < 2:
        raise ValueError("s_max must be >= 2")
    state = upper_bound_disjunctive(s_max, cfg)
    return [math.nan] + [1.0 / state.values[s] for s in range(1, s_max + 1)]


def k_growth_check(
    s_lo: int, s_hi: int, cfg: SolverConfig = DEFAULT_CONFIG
) -> list[dict]:
    """Verify K_s <= (s+1)^2 / (2*log2((s+1)/8)) for every s in [s_lo, s_hi].

    Equivalently the chain values satisfy R(s) >= 2*log2((s+1)/8)/(s+1)^2 on
    that range.  The right side is positive only from s = 8 on; the check is
    defined for s_lo >= 9.
    """
    if s_lo < 9:
        raise ValueError("s_lo must be >= 9 (right side must be positive)")
    if s_hi < s_lo:
        raise ValueError("need s_hi >= s_lo")
    ks = k_sequence(s_hi, cfg)
    out = []
    for s in range(s_lo, s_hi + 1):
        rhs = (s + 1) ** 2 / (2.0 * math.log2((s + 1) / 8.0))
        out.append({"s": s, "k": ks[s], "rhs": rhs, "ok": ks[s] <= rhs})
    return out


# ---------------------------------------------------------------------------
# Cover-free grid
# ---------------------------------------------------------------------------

def _reduction_weight(i: int, j: int) -> float:
    return (i + j) ** (i + j) / (i**i * j**j)


def upper_bound_cf_grid(
    s_max: int,
    l_max: int,
    cfg: SolverConfig = DEFAULT_CONFIG,
    use_splitting: bool = True,
) -> dict[tuple[int, int], float]:
    """Memoized cover-free upper bounds for every 1 <= s <= s_max, 1 <= l <= l_max.

    The recursion minimizes R(s-i, l-j)/(R(s-i, l-j) + (i+j)^(i+j)/(i^i j^j))
    over i in [s-1], j in [l-1], symmetric in (s, l), with the disjunctive
    chain as the l = 1 base.  With ``use_splitting`` the harmonic-sum
    refinement 1/R(s,l) >= 1/R(s,l-1) + 1/R(s-1,l) is intersected in; it comes
    from restricting a code to the rows where a fixed column is 1 (resp. 0)
    and is what the published l >= 2 table entries require (see the compare
    report's WARN cells when it is off).
    """
    top = max(s_max, l_max)
    chain = upper_bound_disjunctive(top, cfg).values
    memo: dict[tuple[int, int], float] = {}
    for n in range(1, top + 1):
        memo[(n, 1)] = chain[n]
        memo[(1, n)] = chain[n]

    def sub(a: int, b: int) -> float:
        return memo[(a, b)] if (a, b) in memo else memo[(b, a)]

    for total in range(4, s_max + l_max + 1):
        for s in range(2, s_max + 1):
            l = total - s
            if l < 2 or l > l_max or (s, l) in memo:
                continue
            best = math.inf
            for i in range(1, s):
                for j in range(1, l):
                    r = sub(s - i, l - j)
                    best = min(best, r / (r + _reduction_weight(i, j)))
            if use_splitting:
                best = min(best, 1.0 / (1.0 / sub(s, l - 1) + 1.0 / sub(s - 1, l)))
            memo[(s, l)] = best
            memo[(l, s)] = best
    return memo


def upper_bound_cf(
    s: int,
    l: int,
    cfg: SolverConfig = DEFAULT_CONFIG,
    use_splitting: bool = True,
) -> BoundResult:
    """Cover-free upper bound at one (s, l), with the winning step reported."""
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    memo = upper_bound_cf_grid(max(s, l), max(s, l), cfg, use_splitting)
    value = memo[(s, l)]
    via = "base"
    params: dict = {}
    if min(s, l) >= 2:
        ss, ll = (s, l) if s >= l else (l, s)
        via = "reduction"
        for i in range(1, ss):
            for j in range(1, ll):
                r = memo[(ss - i, ll - j)]
                if math.isclose(value, r / (r + _reduction_weight(i, j)), rel_tol=1e-12):
                    params = {"i": i, "j": j}
                    break
            if params:
                break
        if use_splitting and not params:
            via = "splitting"
    return BoundResult(
        kind="cf_upper",
        s=s,
        second_param=l,
        value=value,
        params=params | {"splitting": use_splitting, "via": via},
    )


def optimal_split_fraction(l: int) -> float:
    """Argmax p of (1-p)^2 * p^(l-1): p = (l-1)/(l+1)."""
    if l < 2:
        raise ValueError("l must be >= 2")
    return (l - 1) / (l + 1)


def upper_cf_asymptote(s: int, l: int) -> float:
    """Large-s main term of the cover-free upper bound at fixed l >= 2."""
    if l < 2:
        raise ValueError("l must be >= 2")
    if s <= l:
        raise ValueError("need s > l")
    return (l + 1) ** (l + 1) / (2.0 * math.e ** (l - 1)) * math.log2(s) / s ** (l + 1)


# ---------------------------------------------------------------------------
# List-decoding chain
# ---------------------------------------------------------------------------

def _ld_step_root(n: int, prev: float, cfg: SolverConfig) -> tuple[float, float, bool]:
    """Zero of G(x) = x - max_{0<=v<=1-x/prev} f_n(v), plus the arg and flag.

    The inner maximum has the closed form f_n(min(v_n, 1 - x/prev)) by
    concavity of f_n, so G is strictly increasing with a single zero in (0,1).
    """
    vn = v_n(n)

    def inner(x: float) -> float:
        cap = 1.0 - x / prev
        if cap <= 1e-15:
            return 0.0
        return f_n(n, min(vn, cap))

    root = bracket_root(lambda x: x - inner(x), 1e-12, 1.0 - 1e-12, cfg)
    cap = 1.0 - root / prev
    constrained = cap < vn
    return root, (min(vn, cap) if cap > 1e-15 else 0.0), constrained


def upper_bound_ld(
    s_max: int, L: int, cfg: SolverConfig = DEFAULT_CONFIG
) -> RecurrentState:
    """List-decoding upper bounds R_L(s) = min(1/s, r_L(s)) for s = 1..s_max.

    R_L(s) = 1/s exactly for s <= L; beyond that r_L(s) is the unique zero of
    G_s built on f_{floor(s/L)} and the previous value.  For s > 2L the step
    must be interval-constrained (the fixed-point equality form); that is
    asserted after each solve.
    """
    if L < 1 or s_max < 1:
        raise ValueError("L and s_max must be >= 1")
    values = [math.nan]
    params: list[dict] = [{}]
    for s in range(1, min(L, s_max) + 1):
        values.append(1.0 / s)
        params.append({"v": 0.0, "interval_constrained": False, "trivial": True})
    for s in range(L + 1, s_max + 1):
        root, v_at, constrained = _ld_step_root(s // L, values[s - 1], cfg)
        if s > 2 * L and not constrained:
            raise SolverError(
                f"interior maximum at s={s} > 2L={2 * L}: the step root "
                f"{root!r} should satisfy the equality form"
            )
        trivial = 1.0 / s <= root
        values.append(min(1.0 / s, root))
        params.append(
            {"v": v_at, "interval_constrained": constrained, "trivial": trivial}
        )
    return RecurrentState(kind="list", second_param=L, values=values, params=params)


def threshold_sL(L: int, s_cap: int | None = None, cfg: SolverConfig = DEFAULT_CONFIG) -> int:
    """Smallest s with R_L(s) strictly below 1/s (with 1e-12 slack).

    Below the threshold the chain returns exactly 1/s, so the strictness
    slack only guards the boundary case.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    if s_cap is None:
        s_cap = int(4 * L * (max(math.log2(L), 0.0) + 4.0) + 16)
    state = upper_bound_ld(s_cap, L, cfg)
    for s in range(1, s_cap + 1):
        if state.values[s] < 1.0 / s - 1e-12:
            return s
    raise CapExceededError(f"no threshold found for L={L} up to s_cap={s_cap}")


# ---------------------------------------------------------------------------
# Counting bound and the search-plan application
# ---------------------------------------------------------------------------

def ld_counting_bound(t: int, s: int, L: int) -> float:
    """Row-count lower bound log2(C(t,s)/C(s+L-1,s)), exact integer binomials."""
    if not 1 <= s < t:
        raise ValueError("need 1 <= s < t")
    if not 1 <= L <= t - s:
        raise ValueError("need 1 <= L <= t - s")
    return math.log2(math.comb(t, s)) - math.log2(math.comb(s + L - 1, s))


def plan_upper_bound_row(
    s_lo: int, s_hi: int, cfg: SolverConfig = DEFAULT_CONFIG
) -> list[dict]:
    """Rows (s, 1/s, R_2(s-1), improves) comparing the search-plan rate bound
    R(=s) <= R_2(s-1) against the trivial 1/s."""
    if s_lo < 7:
        raise ValueError("s_lo must be >= 7")
    if s_hi < s_lo:
        raise ValueError("need s_hi >= s_lo")
    state = upper_bound_ld(s_hi - 1, 2, cfg)
    rows = []
    for s in range(s_lo, s_hi + 1):
        bound = state.values[s - 1]
        rows.append(
            {
                "s": s,
                "trivial": 1.0 / s,
                "bound": bound,
                "improves": bound < 1.0 / s,
            }
        )
    return rows
