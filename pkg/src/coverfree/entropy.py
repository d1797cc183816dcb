"""Elementary information-theoretic functions (all logarithms base 2).

The family ``f_n(v) = h(v/n) - v*h(1/n)`` and its argmax ``v_n`` drive every
recurrent upper bound in this package; the binary entropy ``h`` and the
Kullback distance ``K`` drive the random-coding lower bounds.
"""
from __future__ import annotations

import math

__all__ = [
    "binary_entropy",
    "kullback",
    "f_n",
    "v_n",
    "f_n_prime",
    "g_n",
]

LOG2E = math.log2(math.e)

# Numerical guard: arguments of entropy/log evaluations are clamped to
# [_EPS, 1-_EPS] internally.  User-visible inputs are validated strictly and
# never clamped.
_EPS = 1e-12


def _clamp(x: float) -> float:
    if x < _EPS:
        return _EPS
    if x > 1.0 - _EPS:
        return 1.0 - _EPS
    return x


def _h(v: float) -> float:
    v = _clamp(v)
    return -v * math.log2(v) - (1.0 - v) * math.log2(1.0 - v)


def _kl(a: float, b: float) -> float:
    a = _clamp(a)
    b = _clamp(b)
    return a * math.log2(a / b) + (1.0 - a) * math.log2((1.0 - a) / (1.0 - b))


def _check_open_unit(name: str, x: float) -> None:
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie strictly inside (0, 1), got {x!r}")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def binary_entropy(v: float) -> float:
    """h(v) = -v*log2(v) - (1-v)*log2(1-v), in bits, for v in (0, 1)."""
    _check_open_unit("v", v)
    return _h(v)


def kullback(a: float, b: float) -> float:
    """Binary Kullback distance K(a, b) between Bernoulli(a) and Bernoulli(b).

    K(a, b) = a*log2(a/b) + (1-a)*log2((1-a)/(1-b)); nonnegative, zero iff
    a == b.
    """
    _check_open_unit("a", a)
    _check_open_unit("b", b)
    return _kl(a, b)


def _h_inv_n(n: int) -> float:
    # h(1/1) = 0 by continuous extension, so f_1(v) = h(v) and v_1 = 1/2.
    return 0.0 if n == 1 else _h(1.0 / n)


def f_n(n: int, v: float) -> float:
    """f_n(v) = h(v/n) - v*h(1/n); strictly positive and concave on (0, 1)."""
    _check_n(n)
    _check_open_unit("v", v)
    return _h(v / n) - v * _h_inv_n(n)


def v_n(n: int) -> float:
    """Argmax of f_n over (0, 1): v_n = n / (1 + 2**(n*h(1/n)))."""
    _check_n(n)
    return n / (1.0 + 2.0 ** (n * _h_inv_n(n)))


def f_n_prime(n: int, v: float) -> float:
    """Derivative of f_n in v: (1/n)*log2((1 - v/n)/(v/n)) - h(1/n)."""
    _check_n(n)
    _check_open_unit("v", v)
    x = _clamp(v / n)
    return math.log2((1.0 - x) / x) / n - _h_inv_n(n)


def g_n(n: int, a: float) -> float:
    """g_n(a) = f_n(a) - a*f_n'(a) (the intercept of the tangent at a)."""
    _check_n(n)
    _check_open_unit("a", a)
    return f_n(n, a) - a * f_n_prime(n, a)
