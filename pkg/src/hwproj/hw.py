"""Fixed-point, input-invariant projections built from circuit primitives.

The simplex projection runs a descending sorting network, a Ladner-Fischer
prefix sum, multiplication by truncated reciprocal constants ``1/i``,
threshold comparisons and a max-index one-hot selector. The parity polytope
projection adds the cube clamp, the facet search (XOR parity plus argmin
tree) and the reflection ``T_f``; both of its branches are always computed
and a final multiplexer picks one.

Internal values grow in width so nothing overflows or rounds except the
reciprocal constants. The result is truncated once, to the output format.

Every function works on a single vector or on a batch (leading axes); the
same operations are applied to every row, so batching is free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .fixed import FixedPointFormat, FixedValue, bits_for, constant, fmt, quantize, truncate_to
from .prefix import argmin_tree, build_scan_network, ladner_fischer_scan, max_index
from .sorting import apply_network, build_batcher

Mode = Literal["simplex", "parity_polytope", "sort_only"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class HwProjectionConfig:
    dimension: int
    input_format: FixedPointFormat
    output_format: FixedPointFormat
    reciprocal_guard_bits: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "input_format", fmt(self.input_format))
        object.__setattr__(self, "output_format", fmt(self.output_format))
        if self.dimension < 1:
            raise ConfigError("dimension must be >= 1")
        if self.input_format.width != self.output_format.width:
            raise ConfigError(
                f"input {self.input_format} and output {self.output_format} widths differ"
            )

    def reciprocal_format(self, integer_bits: int) -> FixedPointFormat:
        """Format of the ``1/i`` constants for a simplex stage whose inputs
        carry ``integer_bits`` integer bits.

        The default guard, ``2*ceil(log2 d) + integer_bits + 1`` bits beyond
        the output LSB, keeps the summed reciprocal error under one output LSB,
        so the simplex output sums to 1 within ``d`` LSBs after truncation.
        ``reciprocal_guard_bits=0`` stores ``1/i`` at output precision; the
        alternating bits of 1/3 then make the error curve zig-zag.
        """
        guard = self.reciprocal_guard_bits
        if guard is None:
            guard = 2 * bits_for(self.dimension) + integer_bits + 1
        return FixedPointFormat(1, self.output_format.fraction_bits + guard)


class Trace(list):
    """Ordered record of the hardware operations a call performed."""

    def op(self, name: str, *detail) -> None:
        self.append((name,) + detail)


def reciprocals(cfg: HwProjectionConfig, integer_bits: int) -> FixedValue:
    """``1/i`` for ``i = 1..d``, truncated to the reciprocal format."""
    f = cfg.reciprocal_format(integer_bits)
    return FixedValue(
        np.array([constant(Fraction(1, i), f, mode="truncate").mantissa for i in range(1, cfg.dimension + 1)],
                 dtype=np.int64),
        f,
    )


def _check_input(v: FixedValue, cfg: HwProjectionConfig) -> np.ndarray:
    if v.format != cfg.input_format:
        raise ConfigError(f"input is {v.format}, config expects {cfg.input_format}")
    m = np.asarray(v.mantissa, dtype=np.int64)
    if m.shape[-1] != cfg.dimension:
        raise ConfigError(f"input length {m.shape[-1]} != dimension {cfg.dimension}")
    return m


def _simplex_full(m: np.ndarray, f_in: FixedPointFormat, cfg: HwProjectionConfig,
                  trace: Trace) -> FixedValue:
    """Simplex projection at full internal precision (no output truncation)."""
    d = cfg.dimension
    frac = f_in.fraction_bits
    g = bits_for(d)
    recip = reciprocals(cfg, f_in.integer_bits)
    fr = recip.format.fraction_bits

    net = build_batcher(d)
    trace.op("sort", "descending", net.comparators)
    mu = apply_network(net, m, "descending")

    scan = build_scan_network(d)
    trace.op("prefix_sum", scan.stages)
    csum = FixedValue(ladner_fischer_scan(mu, np.add, scan), f_in.widen(integer_bits=g))

    trace.op("subtract_one", d)
    t = FixedValue(csum.mantissa - (1 << frac), csum.format.widen(integer_bits=1))

    trace.op("multiply_reciprocal", d, str(recip.format))
    s_fmt = FixedPointFormat(t.format.integer_bits + recip.format.integer_bits + 1, frac + fr)
    s = FixedValue(t.mantissa * recip.mantissa, s_fmt)

    trace.op("compare", "mu > s", d)
    above = (mu << fr) > s.mantissa

    trace.op("max_index", scan.stages)
    onehot = max_index(above)

    trace.op("mux", "s_rho", d)
    s_rho = np.sum(np.where(onehot.astype(bool), s.mantissa, 0), axis=-1, keepdims=True)

    trace.op("subtract_threshold", d)
    trace.op("max_zero", d)
    w_fmt = FixedPointFormat(max(f_in.integer_bits, s_fmt.integer_bits) + 1, frac + fr)
    return FixedValue(np.maximum((m << fr) - s_rho, 0), w_fmt)


def hw_project_simplex(v: FixedValue, cfg: HwProjectionConfig, trace: Trace | None = None) -> FixedValue:
    trace = Trace() if trace is None else trace
    m = _check_input(v, cfg)
    w = _simplex_full(m, cfg.input_format, cfg, trace)
    trace.op("truncate", str(w.format), str(cfg.output_format))
    return truncate_to(w, cfg.output_format)


def _xor_reduce(bits: np.ndarray, trace: Trace) -> np.ndarray:
    level = [bits[..., i] for i in range(bits.shape[-1])]
    while len(level) > 1:
        trace.op("xor_level", len(level))
        nxt = [level[t] ^ level[t + 1] for t in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def hw_project_pp(v: FixedValue, cfg: HwProjectionConfig, trace: Trace | None = None) -> FixedValue:
    if cfg.dimension < 2:
        raise ConfigError("parity polytope projection needs dimension >= 2")
    trace = Trace() if trace is None else trace
    m = _check_input(v, cfg)
    f_in = cfg.input_format
    frac = f_in.fraction_bits
    one = 1 << frac

    trace.op("clamp_unit", cfg.dimension)
    v_hat = np.clip(m, 0, one)

    trace.op("threshold_half", cfg.dimension)
    f = (2 * v_hat > one)
    odd = _xor_reduce(f, trace)

    # |1/2 - v_hat| carried with one extra fraction bit so 1/2 is exact
    trace.op("distance_half", cfg.dimension)
    dist = np.abs(2 * v_hat - one)
    trace.op("argmin_tree", cfg.dimension)
    _, closest = argmin_tree(dist)
    trace.op("conditional_flip", cfg.dimension)
    f = f ^ (closest.astype(bool) & ~odd[..., None])

    trace.op("reflect", cfg.dimension)
    t_fmt = FixedPointFormat(max(f_in.integer_bits, 1) + 1, frac)
    v_t = FixedValue(np.where(f, one - m, m), t_fmt)

    trace.op("membership_sum", cfg.dimension)
    member = np.clip(v_t.mantissa, 0, one).sum(axis=-1, keepdims=True) >= one

    w = _simplex_full(v_t.mantissa, t_fmt, cfg, trace)
    fr = w.format.fraction_bits - frac
    one_w = one << fr
    trace.op("reflect", cfg.dimension)
    back = np.where(f, one_w - w.mantissa, w.mantissa)

    trace.op("select", cfg.dimension)
    out = np.where(member, v_hat << fr, back)
    trace.op("clamp_unit", cfg.dimension)
    out = np.clip(out, 0, one_w)
    full = FixedValue(out, FixedPointFormat(w.format.integer_bits + 1, w.format.fraction_bits))
    trace.op("truncate", str(full.format), str(cfg.output_format))
    return truncate_to(full, cfg.output_format)


def project_quantized(x, cfg: HwProjectionConfig, target: str = "pp",
                      mode: str = "round_nearest_even") -> np.ndarray:
    """Quantize real inputs to the input format, project, return real outputs."""
    q = quantize(x, cfg.input_format, mode)
    if target == "pp":
        return hw_project_pp(q, cfg).value
    if target == "simplex":
        return hw_project_simplex(q, cfg).value
    raise ValueError(f"unknown target {target!r}")


# -- area / delay proxies ---------------------------------------------------

@dataclass(frozen=True)
class AreaDelayReport:
    """Resource proxies for one circuit.

    ``comparator_count`` counts compare-and-swap cells of the sorting network
    only. ``adder_count`` counts every other carry-chain unit (adders,
    subtractors, magnitude comparators). ``critical_depth`` is the number of
    carry-chain levels on the longest path; bit-level logic (parity XOR
    tree, max-index AND scan, one-hot multiplexers, clamps of known range)
    is not counted as a level.
    """

    dimension: int
    mode: str
    comparator_count: int
    adder_count: int
    multiplier_count: int
    critical_depth: int

    CSV_FIELDS = ("dimension", "mode", "comparators", "adders", "multipliers", "depth")

    def csv_row(self) -> list:
        return [self.dimension, self.mode, self.comparator_count, self.adder_count,
                self.multiplier_count, self.critical_depth]


def _log2ceil(d: int) -> int:
    return math.ceil(math.log2(d)) if d > 1 else 0


def area_delay_report(cfg: HwProjectionConfig | int, mode: Mode = "parity_polytope") -> AreaDelayReport:
    d = cfg if isinstance(cfg, int) else cfg.dimension
    net = build_batcher(d)
    sort_size, sort_depth = net.size, net.depth
    if mode == "sort_only":
        return AreaDelayReport(d, mode, sort_size, 0, 0, sort_depth)

    scan = build_scan_network(d)
    lg = _log2ceil(d)
    # prefix adders, minus-one, threshold compares, final subtracts
    simplex_adders = scan.size + 3 * d
    simplex_depth = sort_depth + scan.depth + 4  # -1, multiply, compare, subtract
    if mode == "simplex":
        return AreaDelayReport(d, mode, sort_size, simplex_adders, d, simplex_depth)
    if mode != "parity_polytope":
        raise ValueError(f"unknown mode {mode!r}")
    # distance subtracts, argmin comparators, two reflections, membership tree + compare
    pp_adders = simplex_adders + d + (d - 1) + 2 * d + (d - 1) + 1
    facet_path = 1 + lg + 1          # distance, argmin tree, reflect
    member_path = lg + 1             # adder tree, compare >= 1
    pp_depth = facet_path + max(simplex_depth + 1, member_path)
    return AreaDelayReport(d, mode, sort_size, pp_adders, d, pp_depth)

