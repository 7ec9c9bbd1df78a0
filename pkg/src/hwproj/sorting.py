"""Comparator (sorting) networks.

A :class:`ComparatorNetwork` is a fixed list of parallel stages of
compare-and-swap pairs ``(i, j)``, ``i < j``. Applied ascending, lane ``i``
receives the minimum; descending flips every comparator's orientation.
Size (comparator count) and depth (stage count) are the area and delay
proxies used throughout the package.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from ._optimal_networks import OPTIMAL_NETWORKS
from .fixed import FixedValue

Direction = Literal["ascending", "descending"]
Pair = tuple[int, int]

EXHAUSTIVE_LIMIT = 24
OPTIMAL_LIMIT = 16


@dataclass(frozen=True)
class ComparatorNetwork:
    n: int
    stages: tuple[tuple[Pair, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("network needs at least one lane")
        for stage in self.stages:
            seen = set()
            for i, j in stage:
                if not 0 <= i < j < self.n:
                    raise ValueError(f"bad comparator ({i}, {j}) for n={self.n}")
                if i in seen or j in seen:
                    raise ValueError(f"lane reused within a stage: ({i}, {j})")
                seen.update((i, j))

    @classmethod
    def from_comparators(cls, n: int, comparators: Sequence[Pair]) -> ComparatorNetwork:
        """Schedule a sequential comparator list into as-soon-as-possible stages."""
        ready = [0] * n
        stages: list[list[Pair]] = []
        for i, j in comparators:
            k = max(ready[i], ready[j])
            if k == len(stages):
                stages.append([])
            stages[k].append((i, j))
            ready[i] = ready[j] = k + 1
        return cls(n, tuple(tuple(s) for s in stages))

    @property
    def comparators(self) -> list[Pair]:
        return [pair for stage in self.stages for pair in stage]

    @property
    def size(self) -> int:
        return sum(len(s) for s in self.stages)

    @property
    def depth(self) -> int:
        return len(self.stages)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "stages": [[list(p) for p in s] for s in self.stages]})

    @classmethod
    def from_json(cls, text: str) -> ComparatorNetwork:
        data = json.loads(text)
        return cls(data["n"], tuple(tuple((int(i), int(j)) for i, j in s) for s in data["stages"]))


def network_metrics(net: ComparatorNetwork) -> tuple[int, int]:
    return net.size, net.depth


def build_optimal_network(n: int) -> ComparatorNetwork:
    if not 1 <= n <= OPTIMAL_LIMIT:
        raise ValueError(f"optimal networks are tabulated for 1 <= n <= {OPTIMAL_LIMIT}, got {n}")
    return ComparatorNetwork(n, tuple(tuple(s) for s in OPTIMAL_NETWORKS[n]))


def _merge(lo: int, hi: int, r: int, out: list[Pair]) -> None:
    # Batcher's odd-even merge of lanes lo..hi (inclusive) at stride r
    step = 2 * r
    if step < hi - lo:
        _merge(lo, hi, step, out)
        _merge(lo + r, hi, step, out)
        out.extend((i, i + r) for i in range(lo + r, hi - r, step))
    else:
        out.append((lo, lo + r))


def _sort(lo: int, size: int, base: int, out: list[Pair]) -> None:
    if size <= base:
        if size > 1:
            out.extend((lo + i, lo + j) for i, j in build_optimal_network(size).comparators)
        return
    half = size // 2
    _sort(lo, half, base, out)
    _sort(lo + half, half, base, out)
    _merge(lo, lo + size - 1, 1, out)


def build_batcher(n: int, use_optimal: bool = True) -> ComparatorNetwork:
    """Batcher's odd-even merge sort for any ``n``.

    The network is built for the next power of two and comparators that
    touch the phantom lanes ``>= n`` are dropped (phantoms behave as +inf).
    With ``use_optimal`` the recursion bottoms out in the tabulated
    delay-optimal networks, and ``n <= 16`` returns the table entry directly.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if use_optimal and n <= OPTIMAL_LIMIT:
        return build_optimal_network(n)
    size = 1 << max(0, math.ceil(math.log2(n)))
    comps: list[Pair] = []
    _sort(0, size, OPTIMAL_LIMIT if use_optimal else 1, comps)
    return ComparatorNetwork.from_comparators(n, [(i, j) for i, j in comps if j < n])


def apply_network(net: ComparatorNetwork, v, direction: Direction = "ascending"):
    """Run ``v`` through the network.

    Accepts a plain sequence of orderable values, a NumPy array (lanes on the
    last axis, any leading batch axes) or a :class:`FixedValue` vector. Every
    input sees the same comparator sequence.
    """
    if direction not in ("ascending", "descending"):
        raise ValueError(f"unknown direction {direction!r}")
    if isinstance(v, FixedValue):
        return FixedValue(apply_network(net, np.asarray(v.mantissa), direction), v.format)
    if isinstance(v, np.ndarray):
        if v.shape[-1] != net.n:
            raise ValueError(f"length {v.shape[-1]} does not match network of {net.n} lanes")
        lanes = [v[..., i].copy() for i in range(net.n)]
        small, large = (np.minimum, np.maximum) if direction == "ascending" else (np.maximum, np.minimum)
        for stage in net.stages:
            for i, j in stage:
                a, b = lanes[i], lanes[j]
                lanes[i], lanes[j] = small(a, b), large(a, b)
        return np.stack(lanes, axis=-1)
    out = list(v)
    if len(out) != net.n:
        raise ValueError(f"length {len(out)} does not match network of {net.n} lanes")
    asc = direction == "ascending"
    for stage in net.stages:
        for i, j in stage:
            a, b = out[i], out[j]
            if (b < a) if asc else (a < b):
                out[i], out[j] = b, a
    return out


def comparator_trace(net: ComparatorNetwork, v) -> list[Pair]:
    """Lane pairs touched while sorting ``v``; the data never changes it."""
    trace: list[Pair] = []
    out = list(v)
    for stage in net.stages:
        for i, j in stage:
            trace.append((i, j))
            if out[j] < out[i]:
                out[i], out[j] = out[j], out[i]
    return trace


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    exhaustive: bool
    trials: int
    counterexample: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _run_bitsliced(net: ComparatorNetwork, lanes: list[np.ndarray]) -> list[np.ndarray]:
    # each lane is a packed bitset over many 0/1 test vectors: min = AND, max = OR
    for stage in net.stages:
        for i, j in stage:
            a, b = lanes[i], lanes[j]
            lanes[i], lanes[j] = a & b, a | b
    return lanes


def _first_unsorted(lanes: list[np.ndarray]) -> int | None:
    for i in range(len(lanes) - 1):
        bad = lanes[i] & ~lanes[i + 1]
        if bad.any():
            word = int(np.flatnonzero(bad)[0])
            bit = int(bad[word]).bit_length() - 1
            return word * 64 + bit
    return None


def _exhaustive_lanes(n: int) -> list[np.ndarray]:
    patterns = np.arange(1 << n, dtype=np.uint32)
    lanes = []
    for i in range(n):
        bits = ((patterns >> i) & 1).astype(np.uint8)
        pad = (-len(bits)) % 64
        packed = np.packbits(np.concatenate([bits, np.zeros(pad, np.uint8)]), bitorder="little")
        lanes.append(packed.view(np.uint64))
    return lanes


def verify_zero_one(
    net: ComparatorNetwork,
    trials: int = 10**6,
    seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> VerifyResult:
    """Check the network sorts every 0/1 input.

    Exhaustive (all ``2**n`` patterns) for ``n <= exhaustive_limit``; larger
    networks get ``trials`` random 0/1 vectors, each drawn with its own random
    density so that every weight class is exercised.
    """
    n = net.n
    if n == 1:
        return VerifyResult(True, True, 1)
    if n <= exhaustive_limit:
        lanes = _run_bitsliced(net, _exhaustive_lanes(n))
        bad = _first_unsorted(lanes)
        if bad is None:
            return VerifyResult(True, True, 1 << n)
        return VerifyResult(False, True, 1 << n, tuple((bad >> i) & 1 for i in range(n)))

    rng = np.random.default_rng(seed)
    done = 0
    chunk = 1 << 16
    while done < trials:
        m = min(chunk, trials - done)
        density = rng.random(m)
        bits = rng.random((m, n)) < density[:, None]
        pad = (-m) % 64
        if pad:
            bits = np.concatenate([bits, np.zeros((pad, n), bool)])
        lanes = [np.packbits(bits[:, i], bitorder="little").view(np.uint64) for i in range(n)]
        # padding rows are all-zero and therefore already sorted
        bad = _first_unsorted(_run_bitsliced(net, lanes))
        if bad is not None:
            return VerifyResult(False, False, done + bad + 1, tuple(int(b) for b in bits[bad]))
        done += m
    return VerifyResult(True, False, trials)
