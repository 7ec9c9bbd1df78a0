"""Bit-exact two's-complement fixed-point arithmetic.

A :class:`FixedValue` holds an integer mantissa (a Python/NumPy integer or an
``int64`` array for whole vectors and batches) together with its
:class:`FixedPointFormat`; the represented value is ``mantissa * 2**-F``.

Additions and multiplications widen the format so they are always exact.
Precision is only lost in :func:`quantize` and :func:`truncate_to`, and both
saturate at the format range instead of wrapping.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

MAX_WIDTH = 64

QuantizeMode = Literal["round_nearest_even", "truncate"]

_DESCRIPTOR = re.compile(r"^s(?:Q)?(\d+)\.(\d+)$")


class FormatError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FixedPointFormat:
    integer_bits: int
    fraction_bits: int

    sign_bits = 1

    def __post_init__(self):
        if self.integer_bits < 0 or self.fraction_bits < 0:
            raise FormatError(f"negative bit count in {self}")
        if not 2 <= self.width <= MAX_WIDTH:
            raise FormatError(f"width {self.width} outside [2, {MAX_WIDTH}]")

    @property
    def width(self) -> int:
        return 1 + self.integer_bits + self.fraction_bits

    @property
    def min_mantissa(self) -> int:
        return -(1 << (self.width - 1))

    @property
    def max_mantissa(self) -> int:
        return (1 << (self.width - 1)) - 1

    @property
    def lsb(self) -> float:
        return 2.0 ** -self.fraction_bits

    @property
    def min_value(self) -> float:
        return -(2.0 ** self.integer_bits)

    @property
    def max_value(self) -> float:
        return 2.0 ** self.integer_bits - self.lsb

    def widen(self, integer_bits: int = 0, fraction_bits: int = 0) -> FixedPointFormat:
        return FixedPointFormat(self.integer_bits + integer_bits, self.fraction_bits + fraction_bits)

    @classmethod
    def parse(cls, text: str) -> FixedPointFormat:
        """Parse ``"sI.F"`` (``"s1.6"``: 1 sign, 1 integer, 6 fraction bits)."""
        m = _DESCRIPTOR.match(text.strip())
        if not m:
            raise FormatError(f"bad format descriptor {text!r}; expected 'sI.F'")
        return cls(int(m.group(1)), int(m.group(2)))

    def __str__(self) -> str:
        return f"s{self.integer_bits}.{self.fraction_bits}"


def fmt(text_or_fmt) -> FixedPointFormat:
    if isinstance(text_or_fmt, FixedPointFormat):
        return text_or_fmt
    return FixedPointFormat.parse(text_or_fmt)


@dataclass(frozen=True)
class FixedValue:
    mantissa: int | np.ndarray
    format: FixedPointFormat

    def __post_init__(self):
        m = np.asarray(self.mantissa)
        if m.size and (m.min() < self.format.min_mantissa or m.max() > self.format.max_mantissa):
            raise FormatError(f"mantissa does not fit in {self.format}")

    @property
    def value(self) -> float | np.ndarray:
        out = np.ldexp(np.asarray(self.mantissa, dtype=float), -self.format.fraction_bits)
        return float(out) if out.ndim == 0 else out

    def as_fraction(self) -> Fraction:
        return Fraction(int(self.mantissa), 1 << self.format.fraction_bits)

    def __len__(self) -> int:
        return np.shape(self.mantissa)[-1]

    def __getitem__(self, idx) -> FixedValue:
        return FixedValue(np.asarray(self.mantissa)[idx], self.format)


FixedVector = FixedValue


def _wrap(m, f: FixedPointFormat) -> FixedValue:
    m = np.asarray(m, dtype=np.int64)
    return FixedValue(int(m) if m.ndim == 0 else m, f)


def _saturate(m: np.ndarray, f: FixedPointFormat) -> np.ndarray:
    return np.clip(m, f.min_mantissa, f.max_mantissa)


def quantize(x, f, mode: QuantizeMode = "round_nearest_even") -> FixedValue:
    f = fmt(f)
    with np.errstate(over="ignore"):  # inf saturates below
        scaled = np.ldexp(np.asarray(x, dtype=float), f.fraction_bits)
    if mode == "round_nearest_even":
        scaled = np.rint(scaled)
    elif mode == "truncate":
        scaled = np.floor(scaled)
    else:
        raise ValueError(f"unknown quantize mode {mode!r}")
    top = 2.0 ** (f.width - 1)
    over = scaled >= top
    scaled = np.clip(scaled, f.min_mantissa, f.max_mantissa)
    with np.errstate(invalid="ignore"):
        m = np.where(over, f.max_mantissa, scaled.astype(np.int64))
    return _wrap(m, f)


def _check_width(width: int) -> None:
    if width > MAX_WIDTH:
        raise FormatError(f"result width {width} exceeds {MAX_WIDTH} bits")


def fixed_add(a: FixedValue, b: FixedValue) -> FixedValue:
    """Exact sum; the result carries one more integer bit than the wider operand."""
    if a.format.fraction_bits != b.format.fraction_bits:
        raise FormatError(f"fraction bits differ: {a.format} vs {b.format}")
    i = max(a.format.integer_bits, b.format.integer_bits) + 1
    _check_width(1 + i + a.format.fraction_bits)
    out = FixedPointFormat(i, a.format.fraction_bits)
    return _wrap(np.asarray(a.mantissa, dtype=np.int64) + np.asarray(b.mantissa, dtype=np.int64), out)


def fixed_sub(a: FixedValue, b: FixedValue) -> FixedValue:
    return fixed_add(a, negate(b))


def negate(a: FixedValue) -> FixedValue:
    # -min needs one extra integer bit
    out = a.format.widen(integer_bits=1)
    _check_width(out.width)
    return _wrap(-np.asarray(a.mantissa, dtype=np.int64), out)


def fixed_mul_const(a: FixedValue, c: FixedValue) -> FixedValue:
    """Exact product.

    Fraction bits add. Integer bits add plus one, since ``min * min`` of two
    two's-complement numbers is one bit wider than the summed magnitudes.
    """
    out_i = a.format.integer_bits + c.format.integer_bits + 1
    out_f = a.format.fraction_bits + c.format.fraction_bits
    _check_width(1 + out_i + out_f)
    m = np.asarray(a.mantissa, dtype=np.int64) * np.asarray(c.mantissa, dtype=np.int64)
    return _wrap(m, FixedPointFormat(out_i, out_f))


def align(a: FixedValue, fraction_bits: int, integer_bits: int | None = None) -> FixedValue:
    """Exactly re-express ``a`` with more fraction (and optionally integer) bits."""
    shift = fraction_bits - a.format.fraction_bits
    if shift < 0:
        raise FormatError("align cannot drop fraction bits; use truncate_to")
    i = a.format.integer_bits if integer_bits is None else integer_bits
    if i < a.format.integer_bits:
        raise FormatError("align cannot drop integer bits; use truncate_to")
    out = FixedPointFormat(i, fraction_bits)
    return _wrap(np.left_shift(np.asarray(a.mantissa, dtype=np.int64), shift), out)


def truncate_to(a: FixedValue, f) -> FixedValue:
    """Drop low fraction bits (floor) and saturate into ``f``."""
    f = fmt(f)
    m = np.asarray(a.mantissa, dtype=np.int64)
    shift = a.format.fraction_bits - f.fraction_bits
    if shift >= 0:
        m = np.right_shift(m, shift)
    else:
        # saturate before shifting so int64 cannot overflow
        hi = f.max_mantissa >> -shift
        over = m > hi
        m = np.left_shift(np.clip(m, f.min_mantissa >> -shift, hi), -shift)
        m = np.where(over, f.max_mantissa, m)
    return _wrap(_saturate(m, f), f)


def constant(x: float | Fraction, f, mode: QuantizeMode = "round_nearest_even") -> FixedValue:
    """Quantize a scalar constant (exact for dyadic rationals that fit)."""
    f = fmt(f)
    scaled = Fraction(x) * (1 << f.fraction_bits)
    if mode == "truncate":
        m = math.floor(scaled)
    else:
        m = round(scaled)
    return FixedValue(max(f.min_mantissa, min(f.max_mantissa, m)), f)


def bits_for(k: int) -> int:
    """Extra integer bits needed to add ``k`` values without overflow."""
    return max(0, math.ceil(math.log2(k))) if k > 1 else 0
