from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hwproj.fixed import (
    FixedPointFormat,
    FixedValue,
    FormatError,
    align,
    bits_for,
    constant,
    fixed_add,
    fixed_mul_const,
    fixed_sub,
    negate,
    quantize,
    truncate_to,
)

formats = st.builds(FixedPointFormat, st.integers(0, 6), st.integers(1, 20))


def mantissas(f):
    return st.integers(f.min_mantissa, f.max_mantissa)


def exact(v: FixedValue) -> Fraction:
    return Fraction(int(v.mantissa), 1 << v.format.fraction_bits)


# -- formats ----------------------------------------------------------------

def test_format_properties():
    f = FixedPointFormat.parse("s1.6")
    assert (f.integer_bits, f.fraction_bits, f.width) == (1, 6, 8)
    assert f.min_value == -2 and f.max_value == 2 - 1 / 64
    assert f.lsb == 1 / 64
    assert str(f) == "s1.6"
    assert FixedPointFormat.parse("sQ0.7") == FixedPointFormat(0, 7)


@pytest.mark.parametrize("bad", ["1.6", "s1", "s-1.3", "u1.6", ""])
def test_parse_rejects(bad):
    with pytest.raises(FormatError):
        FixedPointFormat.parse(bad)


def test_width_limits():
    with pytest.raises(FormatError):
        FixedPointFormat(0, 0)
    with pytest.raises(FormatError):
        FixedPointFormat(10, 60)
    FixedPointFormat(0, 63)


def test_value_must_fit():
    with pytest.raises(FormatError):
        FixedValue(128, FixedPointFormat(1, 6))
    FixedValue(-128, FixedPointFormat(1, 6))


# -- quantize ---------------------------------------------------------------

@pytest.mark.parametrize("x, f, mode, m", [
    (1 / 3, "s0.4", "round_nearest_even", 5),
    (1 / 3, "s0.4", "truncate", 5),
    (-1 / 3, "s0.4", "truncate", -6),
    (0.5 / 16, "s0.4", "round_nearest_even", 0),   # tie to even
    (1.5 / 16, "s0.4", "round_nearest_even", 2),   # tie to even
    (5.0, "s1.6", "round_nearest_even", 127),      # saturate high
    (-5.0, "s1.6", "round_nearest_even", -128),    # saturate low
    (1e300, "s0.62", "round_nearest_even", 2**62 - 1),
])
def test_quantize_examples(x, f, mode, m):
    assert quantize(x, f, mode).mantissa == m


def test_quantize_unknown_mode():
    with pytest.raises(ValueError):
        quantize(0.1, "s0.4", "stochastic")


@given(formats, st.floats(-100, 100, allow_nan=False))
def test_quantize_error_bound(f, x):
    q = quantize(x, f)
    if f.min_value <= x <= f.max_value:
        assert abs(q.value - x) <= f.lsb / 2
    else:
        assert q.value in (f.min_value, f.max_value)
    t = quantize(x, f, "truncate")
    if f.min_value <= x <= f.max_value:
        assert 0 <= Fraction(x) - exact(t) < Fraction(f.lsb)


# -- arithmetic -------------------------------------------------------------

@given(st.data())
def test_add_sub_exact(data):
    i1, i2 = data.draw(st.integers(0, 8)), data.draw(st.integers(0, 8))
    fr = data.draw(st.integers(1, 20))
    fa, fb = FixedPointFormat(i1, fr), FixedPointFormat(i2, fr)
    a = FixedValue(data.draw(mantissas(fa)), fa)
    b = FixedValue(data.draw(mantissas(fb)), fb)
    s = fixed_add(a, b)
    assert s.format == FixedPointFormat(max(i1, i2) + 1, fr)
    assert exact(s) == exact(a) + exact(b)
    assert exact(fixed_sub(a, b)) == exact(a) - exact(b)


def test_add_requires_aligned_fractions():
    with pytest.raises(FormatError):
        fixed_add(quantize(0.5, "s0.4"), quantize(0.5, "s0.5"))


def test_negate_min_value():
    f = FixedPointFormat(0, 3)
    n = negate(FixedValue(f.min_mantissa, f))
    assert n.value == 1.0 and n.format == FixedPointFormat(1, 3)


@given(st.data())
def test_mul_exact_and_fits(data):
    fa = data.draw(formats)
    fc = data.draw(formats)
    a = FixedValue(data.draw(mantissas(fa)), fa)
    c = FixedValue(data.draw(mantissas(fc)), fc)
    p = fixed_mul_const(a, c)
    assert p.format == FixedPointFormat(fa.integer_bits + fc.integer_bits + 1, fa.fraction_bits + fc.fraction_bits)
    assert exact(p) == exact(a) * exact(c)


def test_mul_min_times_min_needs_extra_bit():
    f = FixedPointFormat(0, 3)
    m = FixedValue(f.min_mantissa, f)
    assert fixed_mul_const(m, m).value == 1.0


def test_width_overflow_raises():
    f = FixedPointFormat(20, 40)
    with pytest.raises(FormatError):
        fixed_mul_const(FixedValue(1, f), FixedValue(1, f))


@given(formats, st.integers(0, 10), st.data())
def test_align_exact(f, extra, data):
    if f.width + extra > 64:
        return
    a = FixedValue(data.draw(mantissas(f)), f)
    b = align(a, f.fraction_bits + extra)
    assert exact(b) == exact(a)


def test_align_refuses_to_drop_bits():
    with pytest.raises(FormatError):
        align(quantize(0.5, "s0.4"), 2)


@given(st.data())
def test_truncate_floor_then_saturate(data):
    src = data.draw(formats)
    dst = data.draw(formats)
    a = FixedValue(data.draw(mantissas(src)), src)
    t = truncate_to(a, dst)
    floor = Fraction(int(np.floor(exact(a) * (1 << dst.fraction_bits))), 1 << dst.fraction_bits)
    lo, hi = Fraction(dst.min_mantissa, 1 << dst.fraction_bits), Fraction(dst.max_mantissa, 1 << dst.fraction_bits)
    assert exact(t) == min(max(floor, lo), hi)


def test_constant_exact_fraction():
    c = constant(Fraction(1, 3), "s1.8", "truncate")
    assert c.mantissa == 85  # floor(256/3)
    assert constant(0.75, "s0.2").value == 0.75


def test_bits_for():
    assert [bits_for(k) for k in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


def test_quantization_noise_four_per_bit():
    x = np.random.default_rng(0).random(200_000)
    errs = [np.mean((quantize(x, FixedPointFormat(0, f)).value - x) ** 2) for f in range(3, 14)]
    ratios = np.array(errs[:-1]) / np.array(errs[1:])
    assert np.all((ratios > 3.2) & (ratios < 4.8))
