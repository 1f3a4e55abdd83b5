"""
Empirical running-time harness for the heuristic

Times decide_isomorphism on relabeled connected G(n, p) pairs, takes the
median over repetitions per size and fits a least-squares line to the
log-log points.
"""
import logging
import time
from typing import List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from .corpus import derive_seed, gen_connected_gnp, gen_permuted_pair
from .iso_heuristic import decide_isomorphism
from .models import BenchPoint, BenchReport

logger = logging.getLogger(__name__)

MIN_BENCH_SIZE = 4


def normalize_sizes(sizes: Sequence[int]) -> List[int]:
    if not sizes:
        raise ValueError("At least one benchmark size is required")
    too_small = [n for n in sizes if n < MIN_BENCH_SIZE]
    if too_small:
        raise ValueError(f"Benchmark sizes must be >= {MIN_BENCH_SIZE}, got {too_small}")
    return sorted(set(int(n) for n in sizes))


def fit_loglog_slope(sizes: Sequence[int], seconds: Sequence[float]) -> Optional[float]:
    """Slope of log(seconds) against log(n); None with fewer than two points"""
    if len(sizes) < 2:
        return None
    slope, _ = np.polyfit(np.log(np.asarray(sizes, dtype=float)), np.log(np.asarray(seconds, dtype=float)), 1)
    return float(slope)


def time_decision(n: int, p: float, seed: int, rep: int, retries: int = 1000) -> float:
    base = gen_connected_gnp(n, p, derive_seed(seed, n, rep), retries)
    pair = gen_permuted_pair(base, derive_seed(seed, n, rep, 1))
    start = time.perf_counter()
    decide_isomorphism(pair.left, pair.right)
    return time.perf_counter() - start


def run_bench(sizes: Sequence[int], p: float, reps: int, seed: int,
              retries: int = 1000, progress: bool = True) -> BenchReport:
    if reps < 1:
        raise ValueError(f"reps must be at least 1, got {reps}")
    sizes = normalize_sizes(sizes)
    points = []
    for n in sizes:
        timings = [
            time_decision(n, p, seed, rep, retries)
            for rep in tqdm(range(reps), desc=f"n={n}", disable=not progress)
        ]
        median = float(np.median(timings))
        logger.info(f"n={n}: median {median:.6f}s over {reps} reps")
        # perf_counter can report 0 for trivially fast runs on coarse clocks
        points.append(BenchPoint(n=n, median_seconds=max(median, 1e-9), reps=reps))
    slope = fit_loglog_slope([pt.n for pt in points], [pt.median_seconds for pt in points])
    return BenchReport(edge_probability=p, seed=seed, points=points, slope=slope)
