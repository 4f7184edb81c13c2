"""Enumeration caps.

Every exhaustive routine refuses to run past these limits and raises
:class:`~gkz.errors.CapExceeded` instead of truncating.  ``GKZ_MAX_ELEMS``
in the environment overrides the element cap.
"""
from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import CapExceeded

DEFAULT_MAX_ELEMS = 10**6


@dataclass(frozen=True)
class Caps:
    max_elems: int = DEFAULT_MAX_ELEMS
    max_subspace_dim: int = 4
    max_subspace_p: int = 5
    # brute-force GKZ oracle: p**n elements at most
    oracle_max_elems: int = 3**5
    # pairwise products p**(2n) for radical / quasiregularity sweeps
    max_pairs: int = 10**8


def caps_from_env() -> Caps:
    """Default caps with ``GKZ_MAX_ELEMS`` applied."""
    raw = os.environ.get("GKZ_MAX_ELEMS")
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError("GKZ_MAX_ELEMS must be positive")
        return Caps(max_elems=value)
    return Caps()


_current = caps_from_env()


def caps() -> Caps:
    return _current


def set_caps(**changes) -> Caps:
    global _current
    _current = replace(_current, **changes)
    return _current


@contextmanager
def override(**changes):
    global _current
    saved = _current
    _current = replace(_current, **changes)
    try:
        yield _current
    finally:
        _current = saved


def require_elems(p: int, n: int, what: str = "enumeration") -> int:
    total = p**n
    if total > _current.max_elems:
        raise CapExceeded(f"{what}: {p}^{n} = {total} elements exceeds cap {_current.max_elems}")
    return total


def require_subspace_enum(p: int, n: int) -> None:
    c = _current
    if n > c.max_subspace_dim or p > c.max_subspace_p:
        raise CapExceeded(
            f"subspace enumeration limited to n <= {c.max_subspace_dim}, p <= {c.max_subspace_p}"
            f" (got n={n}, p={p})"
        )
