"""
Deterministic seed derivation.

Per-dialogue and per-candidate seeds are derived by hashing, so a run is a pure
function of its master seed and independent of scheduling order.
"""

import hashlib


def stable_hash(*parts: object) -> int:
    """63-bit non-negative hash of the string forms of ``parts``."""
    digest = hashlib.sha256("\x1f".join(str(part) for part in parts).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def derive_seed(seed: int, index: int) -> int:
    """Sub-seed for item ``index`` under ``seed``."""
    return stable_hash(seed, index)
