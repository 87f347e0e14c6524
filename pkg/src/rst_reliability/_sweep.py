"""Vectorised target-connectivity tests over many edge subsets at once.

A batch of edge subsets is processed together: the set of vertices reachable
from r is held as a vertex bitmask per subset and grown edge by edge until it
stops changing.
"""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 18


def _spread(edges, present_bit, rows: int, n: int) -> np.ndarray:
    reach = np.ones(rows, dtype=np.int64)
    while True:
        before = reach.copy()
        for k, (u, v) in enumerate(edges):
            pk = present_bit(k)
            ru = (reach >> u) & 1
            rv = (reach >> v) & 1
            reach |= ((ru << v) | (rv << u)) * pk
        if np.array_equal(before, reach):
            return reach


def connected_rows(edges, present: np.ndarray, n: int) -> np.ndarray:
    """For a boolean matrix ``present`` (subsets x edges), which rows join r, s, t."""
    present = np.asarray(present)
    rows = present.shape[0]
    if rows == 0:
        return np.zeros(0, dtype=bool)
    cols = [present[:, k].astype(np.int64) for k in range(len(edges))]
    reach = _spread(edges, cols.__getitem__, rows, n)
    return (reach & 0b110) == 0b110


def connected_masks(edges, masks: np.ndarray, n: int) -> np.ndarray:
    """Same test with subsets given as integer bitmasks over ``edges``."""
    masks = np.asarray(masks, dtype=np.int64)
    if masks.size == 0:
        return np.zeros(0, dtype=bool)
    cols = [(masks >> k) & 1 for k in range(len(edges))]
    reach = _spread(edges, cols.__getitem__, masks.shape[0], n)
    return (reach & 0b110) == 0b110


def iter_all_masks(m: int, chunk: int = CHUNK):
    total = 1 << m
    for start in range(0, total, chunk):
        yield np.arange(start, min(total, start + chunk), dtype=np.int64)


def connectivity_table(edges, n: int) -> np.ndarray:
    """Boolean array indexed by subset bitmask: does the subset connect the targets."""
    m = len(edges)
    out = np.empty(1 << m, dtype=bool)
    for masks in iter_all_masks(m):
        out[masks[0]: masks[-1] + 1] = connected_masks(edges, masks, n)
    return out


def popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x.astype(np.uint64)).astype(np.int64)
