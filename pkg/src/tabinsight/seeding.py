"""Deterministic seed derivation.

All randomness in a pipeline run flows from one master seed. Stage- and
fold-level seeds are derived by hashing ``"{master}/{label}"`` with SHA-256
and taking the first 8 bytes big-endian. The derivation is fixed so that
identical (seed, label) pairs give identical streams on every platform.
"""

import hashlib


def derive_seed(master: int, label: str) -> int:
    """Derive a 64-bit child seed from a master seed and a stage label."""
    digest = hashlib.sha256(f"{master}/{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")
