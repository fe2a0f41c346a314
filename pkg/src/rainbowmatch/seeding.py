"""Counter-based seed derivation.

All randomness flows from one 64-bit seed.  Sub-seeds for trials, phases and
resample attempts are derived by hashing (base, labels...) so that any single
trial can be replayed without replaying the ones before it.
"""

from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1


def derive_seed(base: int, *parts: object) -> int:
    """Derive a 64-bit sub-seed from a base seed and a label path."""
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(base) & MASK64).encode())
    for part in parts:
        h.update(b"/")
        h.update(str(part).encode())
    return int.from_bytes(h.digest(), "big")
