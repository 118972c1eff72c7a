"""Complex roots of integer polynomials and the zero-free check for a graph."""

from __future__ import annotations

import cmath
import json
import math
import random
from dataclasses import dataclass, field

from chromabound.bcf import chromatic_dc
from chromabound.bounds import c_delta_g, DEFAULT_GRID, DEFAULT_TOL
from chromabound.graph import INFINITY, Graph, girth, max_degree
from chromabound.polynomial import IntPolynomial

MAX_SWEEPS = 500
RESIDUAL_TOL = 1e-8
INTEGER_ROOT_SEARCH = 256


class RootFindingError(ArithmeticError):
    """Aberth iteration did not settle; ``roots`` holds the last iterate."""

    def __init__(self, message: str, roots: list[complex], flags: list[bool]):
        super().__init__(message)
        self.roots = roots
        self.flags = flags


def residual(p: IntPolynomial, r: complex) -> float:
    """|p(r)| / (1 + |lead| |r|^deg), evaluated in floating point."""
    val = complex(0.0)
    for c in reversed(p.coeffs):
        val = val * r + float(c)
    return abs(val) / (1.0 + abs(float(p.leading)) * abs(r) ** p.degree)


def _strip_integer_roots(p: IntPolynomial) -> tuple[list[int], IntPolynomial]:
    """Remove exact integer roots (with multiplicity) by synthetic division."""
    found: list[int] = []
    while p.degree >= 1 and p[0] == 0:
        found.append(0)
        p = IntPolynomial(p.coeffs[1:])
    if p.degree < 1:
        return found, p
    c0 = abs(p[0])
    for mag in range(1, min(c0, INTEGER_ROOT_SEARCH) + 1):
        if c0 % mag:
            continue
        for r in (mag, -mag):
            while p.degree >= 1:
                quo, rem = p.divide_linear(r)
                if rem:
                    break
                found.append(r)
                p = quo
    return found, p


def _aberth(coeffs: list[float], seed: int) -> tuple[list[complex], bool]:
    """Simultaneous Aberth-Ehrlich iteration; coeffs low-to-high, nonzero lead."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    radius = 2.0 * max(abs(monic[k]) ** (1.0 / (d - k)) for k in range(d))
    radius = radius if radius > 0 else 1.0
    theta = random.Random(seed).random() * 2.0 * math.pi / d
    z = [radius * cmath.exp(1j * (2.0 * math.pi * k / d + theta)) for k in range(d)]

    def evaluate(t: complex) -> tuple[complex, complex]:
        p, dp = complex(monic[-1]), 0j
        for c in reversed(monic[:-1]):
            dp = dp * t + p
            p = p * t + c
        return p, dp

    for _ in range(MAX_SWEEPS):
        biggest = 0.0
        for i in range(d):
            p, dp = evaluate(z[i])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else complex(1e-3 * (1.0 + abs(z[i])))
            repulse = sum(1.0 / (z[i] - z[j]) for j in range(d) if j != i and z[i] != z[j])
            denom = 1.0 - ratio * repulse
            step = ratio / denom if denom != 0 else ratio
            z[i] -= step
            biggest = max(biggest, abs(step) / (1.0 + abs(z[i])))
        if biggest < 1e-15:
            return z, True
    return z, False


def _newton_polish(coeffs: list[float], r: complex, steps: int = 3) -> complex:
    for _ in range(steps):
        p, dp = complex(coeffs[-1]), 0j
        for c in reversed(coeffs[:-1]):
            dp = dp * r + p
            p = p * r + c
        if dp == 0 or p == 0:
            break
        nxt = r - p / dp
        if not cmath.isfinite(nxt):
            break
        r = nxt
    return r


def find_roots(p: IntPolynomial, seed: int = 0) -> list[complex]:
    """All complex roots of p with multiplicity.

    Exact integer roots are divided out first; the rest come from Aberth
    iteration on coefficients pre-scaled by their largest magnitude, then a
    few Newton steps each.
    """
    if p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    ints, rest = _strip_integer_roots(p)
    roots: list[complex] = [complex(r) for r in ints]
    if rest.degree >= 1:
        scale = max(abs(c) for c in rest.coeffs)
        coeffs = [c / scale for c in rest.coeffs]
        found, converged = _aberth(coeffs, seed)
        found = [_newton_polish(coeffs, r) for r in found]
        flags = [residual(rest, r) < RESIDUAL_TOL for r in found]
        if not (converged or all(flags)):
            raise RootFindingError("Aberth iteration hit the sweep cap", roots + found, flags)
        roots.extend(found)
    return sorted(roots, key=lambda r: (round(r.real, 12), round(r.imag, 12)))


@dataclass
class ZeroFreeReport:
    graph_id: str
    delta: int
    girth: int | float
    C: float
    roots: list[complex]
    residuals: list[float]
    max_abs_root: float
    margin: float
    passed: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "delta": self.delta,
            "girth": "inf" if self.girth == INFINITY else int(self.girth),
            "C": self.C,
            "roots": [[r.real, r.imag] for r in self.roots],
            "residuals": self.residuals,
            "max_abs_root": self.max_abs_root,
            "margin": self.margin,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_zero_free(
    G: Graph,
    graph_id: str = "graph",
    grid: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> ZeroFreeReport:
    """Check that every chromatic root of G lies strictly inside |q| < C(delta, g)."""
    if G.m == 0:
        raise ValueError("verify_zero_free needs a graph with at least one edge")
    delta, g = max_degree(G), girth(G)
    C = c_delta_g(delta, g, grid=grid, tol=tol).C
    P = chromatic_dc(G)
    roots = find_roots(P, seed=seed)
    residuals = [residual(P, r) for r in roots]
    top = max(abs(r) for r in roots)
    margin = C - top
    return ZeroFreeReport(graph_id, delta, g, C, roots, residuals, top, margin, margin > 0)
