"""Zero-free disks for chromatic polynomials of graphs with bounded degree and girth.

The numerical side computes the radius C(delta, g) outside of which no
chromatic root can live; the combinatorial side checks the underlying
forest expansions exactly on small graphs.
"""

from chromabound.graph import INFINITY, Graph, girth, max_degree
from chromabound.polynomial import IntPolynomial
from chromabound.bounds import BoundResult, c_delta_g, k_g_jpr, z_delta_g
from chromabound.roots import ZeroFreeReport, find_roots, verify_zero_free

__all__ = [
    "INFINITY",
    "Graph",
    "girth",
    "max_degree",
    "IntPolynomial",
    "BoundResult",
    "c_delta_g",
    "k_g_jpr",
    "z_delta_g",
    "ZeroFreeReport",
    "find_roots",
    "verify_zero_free",
]

__version__ = "0.1.0"
