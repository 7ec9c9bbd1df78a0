import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hwproj.core import project_parity_polytope, project_simplex
from hwproj.experiments import format_family, gen_uniform_cube, precision_sweep
from hwproj.fixed import FixedPointFormat, quantize
from hwproj.hw import (
    AreaDelayReport,
    ConfigError,
    HwProjectionConfig,
    Trace,
    area_delay_report,
    hw_project_pp,
    hw_project_simplex,
    project_quantized,
    reciprocals,
)
from hwproj.oracle import parity_violation
from hwproj.prefix import build_scan_network
from hwproj.sorting import build_batcher


def cfg(d, f="s1.6", out=None, guard=None):
    return HwProjectionConfig(d, f, out or f, guard)


# -- examples (re-traced by hand in comments) -----------------------------------

def test_simplex_origin_s1_6():
    # s_3 = -1/3; 1/3 is truncated so w = floor(64/3 - eps)/64 = 21/64
    out = hw_project_simplex(quantize([0, 0, 0], "s1.6"), cfg(3))
    assert out.value.tolist() == [0.328125] * 3


def test_simplex_exact_vertex():
    out = hw_project_simplex(quantize([2.0, 0.0], "s3.4"), cfg(2, "s3.4"))
    assert out.value.tolist() == [1.0, 0.0]


def test_pp_interior_point_unchanged():
    out = hw_project_pp(quantize([0.5, 0.5, 0.5], "s1.6"), cfg(3))
    assert out.value.tolist() == [0.5, 0.5, 0.5]


def test_pp_facet_example():
    # inputs quantize to (58, 6, 3)/64; reflected (6, 6, 3)/64 projects to
    # (22.33, 22.33, 19.33)/64; reflecting back and flooring gives (41, 22, 19)/64
    out = hw_project_pp(quantize([0.9, 0.1, 0.05], "s1.6"), cfg(3))
    assert out.value.tolist() == [0.640625, 0.34375, 0.296875]


def test_project_quantized_helper():
    assert project_quantized([0.9, 0.1, 0.05], cfg(3)).tolist() == [0.640625, 0.34375, 0.296875]
    with pytest.raises(ValueError):
        project_quantized([0.1, 0.2], cfg(2), target="cube")


# -- config ---------------------------------------------------------------------

def test_config_errors():
    with pytest.raises(ConfigError):
        HwProjectionConfig(3, "s1.6", "s1.7")
    with pytest.raises(ConfigError):
        HwProjectionConfig(0, "s1.6", "s1.6")
    with pytest.raises(ConfigError):
        hw_project_pp(quantize([0.1], "s1.6"), cfg(1))
    with pytest.raises(ConfigError):
        hw_project_simplex(quantize([0.1, 0.2], "s1.6"), cfg(3))
    with pytest.raises(ConfigError):
        hw_project_simplex(quantize([0.1, 0.2, 0.3], "s2.5"), cfg(3))


def test_reciprocal_format_and_values():
    c = cfg(5, "s1.6")
    f = c.reciprocal_format(1)
    assert f == FixedPointFormat(1, 6 + 2 * 3 + 1 + 1)
    r = reciprocals(c, 1)
    for i, m in enumerate(r.mantissa, start=1):
        exact = Fraction(1, i) * (1 << f.fraction_bits)
        assert m == math.floor(exact)
    assert cfg(5, guard=0).reciprocal_format(1) == FixedPointFormat(1, 6)


# -- input invariance -----------------------------------------------------------

vec4 = arrays(float, 4, elements=st.floats(-3, 3))


@settings(max_examples=100)
@given(vec4, vec4)
def test_trace_is_input_independent(a, b):
    c = cfg(4, "s2.8")
    for fn in (hw_project_pp, hw_project_simplex):
        ta, tb = Trace(), Trace()
        fn(quantize(a, "s2.8"), c, ta)
        fn(quantize(b, "s2.8"), c, tb)
        assert ta == tb and len(ta) > 5


def test_batch_equals_rows():
    c = cfg(7, "s2.9")
    x = quantize(2 * np.random.default_rng(4).standard_normal((40, 7)), "s2.9")
    for fn in (hw_project_pp, hw_project_simplex):
        batch = fn(x, c).mantissa
        for k in range(40):
            assert np.array_equal(fn(x[k], c).mantissa, batch[k])


# -- accuracy and feasibility ---------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3, 5, 8, 13, 16, 33])
def test_simplex_output_feasible(d):
    f = FixedPointFormat(2, 10)
    x = quantize(2 * np.random.default_rng(d).standard_normal((3000, d)), f)
    w = hw_project_simplex(x, HwProjectionConfig(d, f, f))
    assert w.mantissa.min() >= 0
    assert np.abs(w.value.sum(axis=-1) - 1).max() <= d * f.lsb
    assert np.abs(w.value - project_simplex(x.value)).max() <= 2 * f.lsb


@pytest.mark.parametrize("d", [2, 3, 4, 6, 9])
def test_pp_output_feasible(d):
    f = FixedPointFormat(2, 10)
    x = quantize(2 * np.random.default_rng(d).standard_normal((3000, d)), f)
    w = hw_project_pp(x, HwProjectionConfig(d, f, f))
    assert w.value.min() >= 0 and w.value.max() <= 1
    assert parity_violation(w.value).max() <= d * f.lsb
    assert np.abs(w.value - project_parity_polytope(x.value)).max() <= 2 * f.lsb


def test_narrow_output_format():
    # s3.4 inputs into s1.6 outputs keep the same width
    c = HwProjectionConfig(3, "s3.4", "s1.6")
    out = hw_project_pp(quantize([5.0, -3.0, 0.25], "s3.4"), c)
    assert out.format == FixedPointFormat(1, 6)
    assert np.allclose(out.value, project_parity_polytope([5.0, -3.0, 0.25]), atol=1 / 64)


@pytest.mark.parametrize("target", ["pp", "simplex"])
@pytest.mark.parametrize("d", [3, 6])
def test_error_decreases_with_fraction_bits(target, d):
    x = np.random.default_rng(d).uniform(-1, 1, (10_000, d))
    exact = project_parity_polytope(x) if target == "pp" else project_simplex(x)
    errs = []
    for frac in range(4, 15):
        c = cfg(d, f"s1.{frac}")
        errs.append(np.mean(np.sum((project_quantized(x, c, target) - exact) ** 2, axis=-1)))
    assert all(b <= a for a, b in zip(errs, errs[1:]))


def _ratios(target, guard):
    x = gen_uniform_cube(3, 20_000, 1)
    recs = precision_sweep(target, 3, x, format_family(0, range(4, 17)), reciprocal_guard_bits=guard)
    e = np.array([r.mean_normalized_sq_error for r in recs if r.experiment == target])
    return e[:-1] / e[1:]


@pytest.mark.parametrize("target", ["pp", "simplex"])
def test_zigzag_with_output_precision_reciprocals(target):
    r = _ratios(target, 0)[2:]  # widths 6..16
    diff = np.diff(r)
    assert np.all(np.sign(diff[1:]) == -np.sign(diff[:-1]))
    assert np.abs(diff).min() >= 0.3
    smooth = np.abs(np.diff(_ratios(target, None)[2:]))
    assert smooth.mean() < 0.15


# -- area / delay -----------------------------------------------------------------

def test_sort_only_report_matches_network():
    for d in (2, 9, 16, 17, 100):
        r = area_delay_report(d, "sort_only")
        net = build_batcher(d)
        assert (r.comparator_count, r.critical_depth, r.adder_count) == (net.size, net.depth, 0)


def test_simplex_report_counts():
    r = area_delay_report(cfg(8), "simplex")
    assert r == AreaDelayReport(8, "simplex", 19, build_scan_network(8).size + 24, 8, 6 + 3 + 4)


def test_pp_report_deeper_than_simplex():
    for d in (2, 5, 64, 300):
        pp, sx = area_delay_report(d, "parity_polytope"), area_delay_report(d, "simplex")
        assert pp.critical_depth > sx.critical_depth
        assert pp.adder_count > sx.adder_count
        assert pp.comparator_count == sx.comparator_count


def test_report_unknown_mode():
    with pytest.raises(ValueError):
        area_delay_report(4, "fft")


def test_report_csv_row():
    r = area_delay_report(4, "simplex")
    assert dict(zip(AreaDelayReport.CSV_FIELDS, r.csv_row()))["depth"] == r.critical_depth
