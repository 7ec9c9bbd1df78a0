"""Self-checks behind ``hwproj verify``: oracle agreement and zero-one sorting."""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import core, oracle
from .prefix import build_scan_network
from .sorting import build_batcher, build_optimal_network, verify_zero_one

PP_TOL = 1e-6
SIMPLEX_TOL = 1e-9


def check_pp_oracle(d: int, x: np.ndarray) -> float:
    return float(np.linalg.norm(core.project_parity_polytope(x) - oracle.dykstra_pp_oracle(x), axis=-1).max())


def check_simplex_oracle(x: np.ndarray) -> float:
    return float(np.linalg.norm(core.project_simplex(x) - oracle.bisection_simplex_oracle(x), axis=-1).max())


def run_all(trials: int = 2000, seed: int = 0, echo: Callable[[str], None] = print) -> bool:
    rng = np.random.default_rng(seed)
    ok = True

    def report(name: str, passed: bool, detail: str) -> None:
        nonlocal ok
        ok &= passed
        echo(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")

    for d in range(2, 9):
        for dist, x in (("cube", rng.random((trials, d))), ("gaussian", 4.0 * rng.standard_normal((trials, d)))):
            err = check_pp_oracle(d, x)
            report(f"pp vs dykstra d={d} {dist}", err <= PP_TOL, f"max l2 {err:.2e}")
    for d in (1, 2, 3, 8, 16, 64):
        err = check_simplex_oracle(4.0 * rng.standard_normal((trials, d)))
        report(f"simplex vs bisection d={d}", err <= SIMPLEX_TOL, f"max l2 {err:.2e}")
    for n in range(1, 17):
        res = verify_zero_one(build_optimal_network(n))
        report(f"zero-one optimal n={n}", res.ok and res.exhaustive, f"{res.trials} patterns")
    for n in (17, 24, 33, 64):
        res = verify_zero_one(build_batcher(n), trials=max(trials, 10_000), seed=seed)
        report(f"zero-one batcher n={n}", res.ok, f"{res.trials} {'patterns' if res.exhaustive else 'random trials'}")
    bad = [n for n in range(1, 513) if build_scan_network(n).depth != (math.ceil(math.log2(n)) if n > 1 else 0)]
    report("prefix depth n=1..512", not bad, f"mismatches {bad[:5]}")
    return ok
