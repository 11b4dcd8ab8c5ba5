"""Desk-scale enumeration caps."""

import os

from .errors import InputError

DEFAULT_MAX_VERTICES = 32
DEFAULT_MAX_EDGES = 64
DEFAULT_MAX_SUBSET_BITS = 24
MAX_HAMILTONIAN_ORDER = 15
MAX_EXTENSION_K = 3
MAX_STABLE_ROWS = 1 << 14

ENV_MAX_BITS = "ESTAR_MAX_BITS"


def max_subset_bits(override: int | None = None) -> int:
    """Subset-scan cap: explicit override, then ``$ESTAR_MAX_BITS``, then the default."""
    if override is not None:
        return override
    raw = os.environ.get(ENV_MAX_BITS)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"{ENV_MAX_BITS} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_SUBSET_BITS
