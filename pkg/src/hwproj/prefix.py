"""Circuit-shaped parallel primitives: prefix scan, argmin tree, max index.

The scan uses Ladner and Fischer's depth-optimal construction: depth is
exactly ``ceil(log2 n)`` with fewer than ``4n`` combine nodes. A node
``(src, dst)`` performs ``x[dst] = op(x[src], x[dst])`` where ``x[src]``
covers the elements immediately before those covered by ``x[dst]``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

Node = tuple[int, int]


@dataclass(frozen=True)
class ScanNetwork:
    n: int
    stages: tuple[tuple[Node, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.stages)

    @property
    def size(self) -> int:
        return sum(len(s) for s in self.stages)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "depth": self.depth, "size": self.size,
                           "stages": [[list(node) for node in s] for s in self.stages]})


def _ladner_fischer(pos: list[int], k: int, out: list[Node]) -> None:
    m = len(pos)
    if m < 2:
        return
    if k == 0:
        left, right = pos[: m // 2], pos[m // 2:]
        _ladner_fischer(left, 1, out)
        _ladner_fischer(right, 0, out)
        out.extend((left[-1], p) for p in right)
    else:
        out.extend((pos[t], pos[t + 1]) for t in range(0, m, 2))
        _ladner_fischer(pos[1::2], k - 1, out)
        out.extend((pos[t - 1], pos[t]) for t in range(2, m, 2))


def _schedule(n: int, nodes: Sequence[Node]) -> tuple[tuple[Node, ...], ...]:
    written = [0] * n  # stage after which the latest value of a lane exists
    read = [0] * n     # last stage that reads the current value of a lane
    stages: list[list[Node]] = []
    for src, dst in nodes:
        k = max(written[src], written[dst], read[dst] - 1)
        while len(stages) <= k:
            stages.append([])
        stages[k].append((src, dst))
        written[dst] = k + 1
        read[src] = max(read[src], k + 1)
    return tuple(tuple(s) for s in stages)


@lru_cache(maxsize=None)
def build_scan_network(n: int) -> ScanNetwork:
    """Ladner-Fischer network for ``n`` lanes, built at the next power of two
    and pruned to the nodes that write lanes ``< n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 1 << max(0, math.ceil(math.log2(n)))
    nodes: list[Node] = []
    _ladner_fischer(list(range(size)), 0, nodes)
    return ScanNetwork(n, _schedule(n, [(s, t) for s, t in nodes if t < n]))


def ladner_fischer_scan(v, op: Callable, net: ScanNetwork | None = None):
    """Inclusive prefix ``op``-reduction of ``v``.

    ``v`` may be a sequence or an array with lanes on the last axis; with
    arrays, ``op`` is applied elementwise to whole lanes (e.g. ``np.add``).
    Each stage reads only values produced by earlier stages.
    """
    is_array = isinstance(v, np.ndarray)
    n = v.shape[-1] if is_array else len(v)
    if n < 1:
        raise ValueError("scan needs at least one element")
    net = net or build_scan_network(n)
    if net.n != n:
        raise ValueError(f"scan network has {net.n} lanes, input has {n}")
    lanes = [v[..., i] for i in range(n)] if is_array else list(v)
    for stage in net.stages:
        snapshot = list(lanes)
        for src, dst in stage:
            lanes[dst] = op(snapshot[src], snapshot[dst])
    return np.stack(lanes, axis=-1) if is_array else lanes


def argmin_tree(v):
    """Minimum and its one-hot position from a balanced min-tree.

    At each node the indicator of the larger child is zeroed; on ties the
    left (lower index) child wins. Works on sequences or on arrays along the
    last axis.
    """
    if isinstance(v, np.ndarray):
        n = v.shape[-1]
        if n < 1:
            raise ValueError("argmin of an empty vector")
        eye = np.eye(n, dtype=np.int8)
        level = [(v[..., i], np.broadcast_to(eye[i], v.shape).copy()) for i in range(n)]
        while len(level) > 1:
            nxt = []
            for t in range(0, len(level) - 1, 2):
                (a, ia), (b, ib) = level[t], level[t + 1]
                right = b < a
                nxt.append((np.where(right, b, a), np.where(right[..., None], ib, ia)))
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        return level[0]

    n = len(v)
    if n < 1:
        raise ValueError("argmin of an empty vector")
    level = [(x, tuple(int(i == j) for j in range(n))) for i, x in enumerate(v)]
    while len(level) > 1:
        nxt = []
        for t in range(0, len(level) - 1, 2):
            (a, ia), (b, ib) = level[t], level[t + 1]
            nxt.append((b, ib) if b < a else (a, ia))
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def argmin_tree_depth(n: int) -> int:
    return max(0, math.ceil(math.log2(n))) if n > 1 else 0


def max_index(bits):
    """One-hot marker of the highest-index set bit (all zeros if none is set).

    Output bit ``i`` is ``b_i AND (no b_j set for j > i)``; the second factor
    is a suffix AND-scan of the inverted bits on the Ladner-Fischer network.
    """
    arr = np.asarray(bits).astype(bool)
    n = arr.shape[-1]
    if n < 1:
        raise ValueError("max_index needs at least one bit")
    clear_from = ladner_fischer_scan(~arr[..., ::-1], np.logical_and)[..., ::-1]
    none_above = np.concatenate([clear_from[..., 1:], np.ones(arr.shape[:-1] + (1,), bool)], axis=-1)
    out = (arr & none_above).astype(np.int8)
    if isinstance(bits, np.ndarray):
        return out
    return tuple(int(b) for b in out)
