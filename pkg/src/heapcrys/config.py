"""Enumeration bounds and sampler knobs shared by all modules."""
from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Bounds:
    max_word_length: int = 24
    max_coset_size: int = 10_000
    max_ideals: int = 200_000
    max_crystal_size: int = 500_000
    max_parabolic_order: int = 40_320
    retry_budget: int = 32
    coeff_range: int = 9

    def with_(self, **kw) -> "Bounds":
        return replace(self, **kw)


DEFAULTS = Bounds()


def derive_seed(task_id: str, root: int) -> int:
    """Per-task seed, stable across processes and Python versions."""
    h = hashlib.sha256(f"{task_id}|{root}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("HEAPCRYS_THREADS", "1")))
    except ValueError:
        return 1
