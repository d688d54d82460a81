"""Size guards for the exhaustive computations, overridable from the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ResourceLimitError

__all__ = ["ResourceGuard", "default_guard", "check"]

# env var name for each guard field
ENV = {
    "max_vertices": "FERRERS_MAX_VERTICES",
    "max_boxes": "FERRERS_ORACLE_MAX_BOXES",
    "max_perm_degree": "FERRERS_MAX_PERM_DEGREE",
    "max_colorings": "FERRERS_MAX_COLORINGS",
    "csf_max_boxes": "FERRERS_MAX_BOXES",
    "max_set_partition_pairs": "FERRERS_MAX_SET_PARTITION_PAIRS",
}


@dataclass(frozen=True)
class ResourceGuard:
    """
    Limits for the exhaustive code paths.

    The ``max_*`` fields bound the brute-force oracles: vertex count (paths,
    colorings, bijections), box count (tree, orientation and pattern
    searches), permutation degree, and the number of colors. The CSF
    expansion sums over 2^boxes colorings and has its own box limit.
    """
    max_vertices: int = 12
    max_boxes: int = 14
    max_perm_degree: int = 9
    max_colorings: int = 6
    csf_max_boxes: int = 24
    max_set_partition_pairs: int = 1_000_000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 1:
                raise ValueError(f"{f.name} must be positive")

    def with_env(self) -> ResourceGuard:
        changes = {}
        for name, var in ENV.items():
            raw = os.environ.get(var)
            if raw:
                try:
                    changes[name] = int(raw)
                except ValueError:
                    raise ValueError(f"{var} must be an integer, got {raw!r}") from None
        return replace(self, **changes)


def default_guard() -> ResourceGuard:
    return ResourceGuard().with_env()


def check(value: int, limit: int, what: str, cost: str = "") -> None:
    if value > limit:
        extra = f" ({cost})" if cost else ""
        raise ResourceLimitError(f"{what} is {value}, above the limit {limit}{extra}")
