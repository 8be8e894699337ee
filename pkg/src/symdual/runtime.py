"""Process-wide runtime knobs.

SYMDUAL_THREADS caps the worker count used by embarrassingly parallel
scans (verification batches, random trials).  The default of 1 keeps
runs deterministic and profile-friendly; any larger value only changes
wall-clock time, never results.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    raw = os.environ.get("SYMDUAL_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn, items):
    """Map preserving order, threaded only when the cap allows it."""
    items = list(items)
    cap = thread_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))
