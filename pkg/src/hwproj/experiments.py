"""Precision and scaling sweeps over the fixed-point projections.

All randomness comes from NumPy's PCG64 generator seeded explicitly, so the
same call always yields the same inputs and byte-identical CSV.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import core
from .fixed import FixedPointFormat, FormatError, fmt, quantize
from .hw import AreaDelayReport, HwProjectionConfig, area_delay_report, hw_project_pp, hw_project_simplex

RNG_NAME = "PCG64"
PRECISION_SCHEMA = "hwproj-precision/1"
SCALING_SCHEMA = "hwproj-scaling/1"
MAX_FAMILY_WIDTH = 16

MODE_ALIASES = {"pp": "parity_polytope", "simplex": "simplex", "sort": "sort_only",
                "parity_polytope": "parity_polytope", "sort_only": "sort_only"}


def gen_uniform_cube(d: int, n: int, seed: int) -> np.ndarray:
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    return np.random.default_rng(seed).random((n, d))


def gen_gaussian(d: int, n: int, seed: int, variance: float = 16.0) -> np.ndarray:
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    if not variance > 0:
        raise ValueError(f"variance must be positive, got {variance}")
    return np.sqrt(variance) * np.random.default_rng(seed).standard_normal((n, d))


@dataclass(frozen=True)
class ExperimentRecord:
    experiment: str
    dimension: int
    format: str
    output_format: str
    trials: int
    mean_normalized_sq_error: float
    error_bar: float

    FIELDS = ("experiment", "dimension", "format", "output_format", "width", "trials",
              "mean_normalized_sq_error", "error_bar")

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mean_normalized_sq_error < 0:
            raise ValueError("mean error must be non-negative")

    @property
    def width(self) -> int:
        return fmt(self.format).width

    def csv_row(self) -> list:
        return [self.experiment, self.dimension, self.format, self.output_format, self.width,
                self.trials, f"{self.mean_normalized_sq_error:.9e}", f"{self.error_bar:.9e}"]


def format_family(integer_bits: int, widths: Iterable[int] | None = None) -> list[FixedPointFormat]:
    """Input formats ``s{I}.F`` for each total width, at least one fraction bit."""
    if integer_bits < 0:
        raise FormatError("integer bits must be >= 0")
    lo = integer_bits + 2
    widths = range(lo, MAX_FAMILY_WIDTH + 1) if widths is None else widths
    out = []
    for w in widths:
        if w < lo:
            raise FormatError(f"width {w} leaves no fraction bits for {integer_bits} integer bits")
        out.append(FixedPointFormat(integer_bits, w - 1 - integer_bits))
    return out


def parse_formats(text: str, widths: Iterable[int] | None = None) -> list[FixedPointFormat]:
    """``"s0.4,s1.6"`` or a family ``"s2.*"`` (every width up to 16, or ``widths``)."""
    out: list[FixedPointFormat] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part.endswith(".*"):
            try:
                integer_bits = int(part[1:-2].lstrip("Q"))
            except ValueError:
                raise FormatError(f"bad format family {part!r}") from None
            out.extend(format_family(integer_bits, widths))
        else:
            out.append(FixedPointFormat.parse(part))
    if not out:
        raise FormatError("no formats given")
    return out


def _normalized_sq_error(y: np.ndarray, ref: np.ndarray) -> tuple[float, float]:
    per_trial = np.sum((y - ref) ** 2, axis=-1) / y.shape[-1]
    n = per_trial.size
    se = float(per_trial.std(ddof=1) / np.sqrt(n)) if n > 1 else 0.0
    return float(per_trial.mean()), se


def precision_sweep(
    target: str,
    d: int,
    inputs: np.ndarray,
    formats: Sequence,
    quantize_mode: str = "round_nearest_even",
    output_integer_bits: int | None = None,
    reciprocal_guard_bits: int | None = None,
) -> list[ExperimentRecord]:
    """Fixed-point error against double precision for each input format.

    Output formats keep the input width; their integer bits are
    ``output_integer_bits`` (default: same as the input). Two records are
    produced per format: the bare input quantization error and the
    projection error, both as mean ``||.||^2 / d`` with standard errors.
    """
    if target not in ("pp", "simplex"):
        raise ValueError(f"unknown target {target!r}")
    x = np.asarray(inputs, dtype=float)
    if x.ndim != 2 or x.shape[0] == 0 or x.shape[1] != d:
        raise ValueError(f"inputs must be a non-empty (n, {d}) array")
    exact = core.project_parity_polytope(x) if target == "pp" else core.project_simplex(x)
    project = hw_project_pp if target == "pp" else hw_project_simplex

    records = []
    for f_in in map(fmt, formats):
        i_out = f_in.integer_bits if output_integer_bits is None else output_integer_bits
        f_out = FixedPointFormat(i_out, f_in.width - 1 - i_out)
        cfg = HwProjectionConfig(d, f_in, f_out, reciprocal_guard_bits)
        q = quantize(x, f_in, quantize_mode)
        mean, se = _normalized_sq_error(q.value, x)
        records.append(ExperimentRecord("input_quantization", d, str(f_in), str(f_in), len(x), mean, se))
        mean, se = _normalized_sq_error(project(q, cfg).value, exact)
        records.append(ExperimentRecord(target, d, str(f_in), str(f_out), len(x), mean, se))
    return records


def scaling_sweep(d_range: Iterable[int], mode: str = "pp") -> list[AreaDelayReport]:
    modes = ["parity_polytope", "simplex", "sort_only"] if mode == "all" else [MODE_ALIASES[mode]]
    reports = []
    for m in modes:
        for d in d_range:
            if not 2 <= d <= 1024:
                raise ValueError(f"dimension {d} outside [2, 1024]")
            reports.append(area_delay_report(d, m))
    return reports


def precision_csv(records: Sequence[ExperimentRecord], meta: dict) -> str:
    buf = io.StringIO()
    head = " ".join(f"{k}={v}" for k, v in meta.items())
    buf.write(f"# schema={PRECISION_SCHEMA} rng={RNG_NAME} {head}\n".replace("  ", " "))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ExperimentRecord.FIELDS)
    order = {"input_quantization": 0, "pp": 1, "simplex": 2}
    for r in sorted(records, key=lambda r: (order.get(r.experiment, 9), r.dimension, r.width, r.format)):
        w.writerow(r.csv_row())
    return buf.getvalue()


def scaling_csv(reports: Sequence[AreaDelayReport]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema={SCALING_SCHEMA}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(AreaDelayReport.CSV_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def read_precision_csv(text: str) -> list[ExperimentRecord]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    rows = csv.DictReader(lines)
    return [
        ExperimentRecord(r["experiment"], int(r["dimension"]), r["format"], r["output_format"],
                         int(r["trials"]), float(r["mean_normalized_sq_error"]), float(r["error_bar"]))
        for r in rows
    ]
