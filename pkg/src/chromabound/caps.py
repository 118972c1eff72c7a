"""Size caps for the exponential enumerations."""

from __future__ import annotations

import os

ENV_VAR = "CHROMABOUND_MAX_EDGES"

DEFAULT_BCF_EDGES = 20
DEFAULT_SUBTREE_EDGES = 18
DEFAULT_DC_EDGES = 40
DEFAULT_POLYMER_VERTICES = 12


class SizeLimitError(RuntimeError):
    """Raised when a graph is too large for an exhaustive enumeration."""


def edge_cap(default: int) -> int:
    """Edge cap, overridden by the environment variable when set."""
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be non-negative, got {value}")
    return value


def check_edges(n_edges: int, limit: int | None, default: int, what: str) -> None:
    cap = edge_cap(default) if limit is None else limit
    if n_edges > cap:
        raise SizeLimitError(f"{what}: {n_edges} edges exceeds the cap of {cap}")
