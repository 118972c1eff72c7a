"""The zero-free radius C(delta, g) and the comparison constant K_g.

Everything here is a scalar function of (delta, g, a, b) built from
elementary closed forms, one monotone root solve per point and one
maximisation over a. The formula helpers accept numpy arrays so that the
2049-point grid in ``c_delta_g`` is a single vectorised bisection.

Girth is an int >= 3 or ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

INF = math.inf
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
DEFAULT_GRID = 2049
DEFAULT_TOL = 1e-12
UPPER_GUARD = 1e-9  # b brackets stop at rho * (1 - UPPER_GUARD)
MAX_BISECTIONS = 400


@dataclass(frozen=True)
class BoundQuery:
    delta: int
    g: int | float

    def __post_init__(self) -> None:
        check_delta(self.delta, 1)
        check_girth(self.g)


@dataclass(frozen=True)
class BoundResult:
    """Maximiser of z over a and the radius it certifies.

    For delta = 1 the supremum of z is 1 and is not attained; the record then
    holds a_star = 1, b_star = inf, z_max = 1.
    """

    delta: int
    g: int | float
    a_star: float
    b_star: float
    z_max: float
    C: float
    C_over_delta: float


def check_delta(delta: int, minimum: int) -> None:
    if int(delta) != delta or delta < minimum:
        raise ValueError(f"delta must be an integer >= {minimum}, got {delta!r}")


def check_girth(g: int | float) -> None:
    if g == INF:
        return
    if int(g) != g or g < 3:
        raise ValueError(f"girth must be an integer >= 3 or inf, got {g!r}")


def _out(v):
    v = np.asarray(v, dtype=float)
    return float(v) if v.ndim == 0 else v


def rho_delta(delta: int) -> float:
    """Upper end of the b-domain: ((delta-1)/(delta-2))^delta, inf for delta <= 2."""
    check_delta(delta, 1)
    if delta <= 2:
        return INF
    return math.exp(delta * math.log((delta - 1) / (delta - 2)))


def big_r_delta(delta: int) -> float:
    """Sup of x_delta over its domain: (delta-2)^(delta-2) / (delta-1)^(delta-1)."""
    check_delta(delta, 1)
    if delta == 1:
        return INF
    if delta == 2:
        return 1.0
    return math.exp((delta - 2) * math.log(delta - 2) - (delta - 1) * math.log(delta - 1))


def _check_b(delta: int, b) -> None:
    arr = np.asarray(b, dtype=float)
    if np.any(~(arr >= 1.0)) or np.any(arr >= rho_delta(delta)):
        raise ValueError(f"b must lie in [1, rho_delta) = [1, {rho_delta(delta)}), got {b!r}")


def x_delta(delta: int, b):
    """(b^(2/delta) - b^(1/delta)) / b, increasing from 0 to R_delta."""
    check_delta(delta, 1)
    _check_b(delta, b)
    return _out(_x(delta, np.asarray(b, dtype=float)))


def _x(delta: int, b):
    t = np.power(b, 1.0 / delta)
    return (t * t - t) / b


def _ratio_base(delta: int, b):
    """(delta-1)(1 - b^(-1/delta)), which stays below 1 on the b-domain."""
    return (delta - 1) * (1.0 - np.power(b, -1.0 / delta))


def _pow_nonneg(r, d):
    """r**d for r >= 0 in log space; underflow goes to exactly 0."""
    r = np.asarray(r, dtype=float)
    with np.errstate(divide="ignore"):
        logr = np.log(r)
    return np.where(r > 0, np.exp(d * logr), 0.0)


def f_d_delta(delta: int, d, b):
    """(1/(delta-1)) [r^d / (1 - r)] with r = (delta-1)(1 - b^(-1/delta)); 0 when d is inf."""
    check_delta(delta, 2)
    if d != INF and (int(d) != d or d < 0):
        raise ValueError(f"d must be a non-negative integer or inf, got {d!r}")
    _check_b(delta, b)
    return _out(_f(delta, d, np.asarray(b, dtype=float)))


def _f(delta: int, d, b):
    if d == INF:
        return np.zeros_like(b, dtype=float)
    r = _ratio_base(delta, b)
    return _pow_nonneg(r, d) / ((delta - 1) * (1.0 - r))


def k_delta_g(delta: int, g, a, b):
    """K(a, b) whose level set K = a defines b(a)."""
    check_delta(delta, 2)
    check_girth(g)
    _check_a(a)
    _check_b(delta, b)
    return _out(_k(delta, g, np.asarray(a, dtype=float), np.asarray(b, dtype=float)))


def _k(delta: int, g, a, b):
    x = _x(delta, b)
    head = np.power(1.0 + (1.0 - a) * x, delta) - 1.0
    if g == INF:
        return head + 0.0 * b
    bx = b * x
    tail = _f(delta, g - 2, b) * (delta * (delta - 1) / 2) * bx * np.power(1.0 + bx, delta - 1)
    return head + tail


def _check_a(a) -> None:
    arr = np.asarray(a, dtype=float)
    if np.any(~((arr >= 0.0) & (arr <= 1.0))):
        raise ValueError(f"a must lie in [0, 1], got {a!r}")


def _bisect(func: Callable, target, lo, hi):
    """Vectorised bisection for an increasing func with func(lo) <= target < func(hi).

    Runs until every bracket has shrunk to adjacent floats.
    """
    lo = np.array(lo, dtype=float, copy=True)
    hi = np.array(hi, dtype=float, copy=True)
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        done = (mid <= lo) | (mid >= hi)
        if np.all(done):
            break
        below = func(mid) < target
        lo = np.where(below & ~done, mid, lo)
        hi = np.where(~below & ~done, mid, hi)
    return 0.5 * (lo + hi)


def _upper_bracket(delta: int, func: Callable, target, shape) -> np.ndarray:
    rho = rho_delta(delta)
    if rho < INF:
        return np.full(shape, rho * (1.0 - UPPER_GUARD))
    hi = np.full(shape, 2.0)
    for _ in range(1100):
        grow = func(hi) <= target
        if not np.any(grow):
            return hi
        hi = np.where(grow, hi * 2.0, hi)
    raise ArithmeticError("could not bracket the root in b")


def _solve_b_array(delta: int, g, a):
    """Root in b of K(a, b) = a for finite g; b = 1 exactly where a = 0."""
    a = np.asarray(a, dtype=float)
    func = lambda b: _k(delta, g, a, b)  # noqa: E731
    hi = _upper_bracket(delta, func, a, a.shape)
    b = _bisect(func, a, np.ones_like(a), hi)
    return np.where(a == 0.0, 1.0, b)


def solve_b(delta: int, g, a: float) -> float:
    """b(a): the unique b in (1, rho_delta) with K(a, b) = a, finite girth only."""
    check_delta(delta, 2)
    check_girth(g)
    if g == INF:
        raise ValueError("solve_b needs a finite girth; use b_delta_g for g = inf")
    _check_a(a)
    return float(_solve_b_array(delta, g, np.asarray(float(a))))


def a_delta(delta: int) -> float:
    """Root y in (0, 1) of (1 + (1-y) R_delta)^delta - 1 = y."""
    check_delta(delta, 2)
    r = big_r_delta(delta)

    def h(y):
        return math.expm1(delta * math.log1p((1.0 - y) * r)) - y

    lo, hi = 0.0, 1.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if h(mid) > 0:
            lo = mid
        else:
            hi = mid


def _x_inverse(delta: int, x: float) -> float:
    """b with x_delta(b) = x."""
    if delta == 1:
        return 1.0 + x
    if delta == 2:
        return 1.0 / (1.0 - x) ** 2
    hi = rho_delta(delta)
    return float(_bisect(lambda b: _x(delta, b), x, np.asarray(1.0), np.asarray(hi)))


def b_delta_g(delta: int, g, a: float) -> float:
    """Sup of {b : K(a, b) <= a}; for g = inf and a >= a_delta this is rho_delta."""
    check_delta(delta, 1)
    check_girth(g)
    _check_a(a)
    if delta >= 2 and g != INF:
        return solve_b(delta, g, a)
    if delta == 1:
        return INF if a >= 1.0 else 1.0 + a / (1.0 - a)
    if a >= a_delta(delta):
        return rho_delta(delta)
    return _x_inverse(delta, (math.pow(1.0 + a, 1.0 / delta) - 1.0) / (1.0 - a))


def z_delta_g(delta: int, g, a):
    """Radius z(a) at which |R| <= a is guaranteed; accepts an array of a."""
    check_delta(delta, 1)
    check_girth(g)
    _check_a(a)
    return _out(_z(delta, g, np.asarray(a, dtype=float)))


def _z(delta: int, g, a):
    if delta == 1:
        return np.where(a < 1.0, a, 0.0)
    if g == INF:
        ad = a_delta(delta)
        low = np.power(1.0 + a, 1.0 / delta) - 1.0
        high = (1.0 - a) * big_r_delta(delta)
        return np.where(a < ad, low, high)
    b = _solve_b_array(delta, g, a)
    return (1.0 - a) * _x(delta, b)


def _maximize(fvec: Callable, grid: int, tol: float) -> tuple[float, float]:
    """Grid scan over [0, 1] then golden-section on the cell around the best point."""
    if grid < 33:
        raise ValueError("grid must have at least 33 points")
    if not tol > 0:
        raise ValueError("tol must be positive")
    a = np.linspace(0.0, 1.0, grid)
    vals = np.asarray(fvec(a), dtype=float)
    i = int(np.argmax(vals))
    best_a, best_v = float(a[i]), float(vals[i])
    lo, hi = float(a[max(i - 1, 0)]), float(a[min(i + 1, grid - 1)])

    def f(t: float) -> float:
        return float(fvec(np.asarray(t)))

    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = f(d)
    for t, v in ((c, fc), (d, fd)):
        if v > best_v:
            best_a, best_v = t, v
    return best_a, best_v


def c_delta_g(delta: int, g, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> BoundResult:
    """C(delta, g) = 1 / max_a z(a), with the maximiser and its b."""
    check_delta(delta, 1)
    check_girth(g)
    if delta == 1:
        return BoundResult(delta, g, 1.0, INF, 1.0, 1.0, 1.0)
    a_star, z_max = _maximize(lambda a: _z(delta, g, a), grid, tol)
    C = 1.0 / z_max
    return BoundResult(delta, g, a_star, b_delta_g(delta, g, a_star), z_max, C, C / delta)


def k_inf_g(g, a, b):
    """exp((1-a) ln b / b) - 1 + b (ln b)^(g-1) / (2 (1 - ln b)) on b in [1, e)."""
    check_girth(g)
    if g == INF:
        raise ValueError("k_inf_g needs a finite girth")
    _check_a(a)
    arr = np.asarray(b, dtype=float)
    if np.any(~(arr >= 1.0)) or np.any(arr >= math.e):
        raise ValueError(f"b must lie in [1, e), got {b!r}")
    return _out(_kinf(g, np.asarray(a, dtype=float), arr))


def _kinf(g, a, b):
    lb = np.log(b)
    return np.expm1((1.0 - a) * lb / b) + b * _pow_nonneg(lb, g - 1) / (2.0 * (1.0 - lb))


def _comparator_z(g, a):
    a = np.asarray(a, dtype=float)
    func = lambda b: _kinf(g, a, b)  # noqa: E731
    hi = np.full(a.shape, math.e * (1.0 - UPPER_GUARD))
    b = _bisect(func, a, np.ones_like(a), hi)
    b = np.where(a == 0.0, 1.0, b)
    return (1.0 - a) * np.log(b) / b


def k_g_jpr(g, grid: int = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> float:
    """K_g = 1 / max_a (1-a) ln b(a) / b(a), with b(a) the root of k_inf_g = a."""
    check_girth(g)
    if g == INF:
        raise ValueError("k_g_jpr needs a finite girth")
    _, best = _maximize(lambda a: _comparator_z(g, a), grid, tol)
    return 1.0 / best
