"""Deterministic seed derivation for independent RNG streams."""

from __future__ import annotations

import hashlib


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from a tuple of labels (ints, strings, tuples)."""
    h = hashlib.sha256(repr(parts).encode()).digest()
    return int.from_bytes(h[:8], "big") >> 1
