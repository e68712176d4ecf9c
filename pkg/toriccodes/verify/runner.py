import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..interfaces import CheckResult, VerifyReport
from . import checks
from .checks import VerifyContext

logger = logging.getLogger(__name__)

DEFAULT_GRID_Q = (3, 4, 5)
DEFAULT_GRID_S = (2, 3, 4)
MONOTONE_Q = range(3, 10)
MONOTONE_S = range(2, 7)

Task = Tuple[Callable[..., CheckResult], Dict[str, Any]]
STATUS_COUNTERS = {"pass": "total_passed", "fail": "total_failed", "skip": "total_skipped"}


class VerificationRunner:
    """Runs every cross-check of a (q, s) grid on a thread pool and collects a sorted report."""

    def __init__(self, grid_q: Sequence[int] = DEFAULT_GRID_Q, grid_s: Sequence[int] = DEFAULT_GRID_S,
                 seed: Optional[int] = None, samples: Optional[int] = None,
                 cap_points: Optional[int] = None, cap_codewords: Optional[int] = None,
                 workers: Optional[int] = None, inject_fault: bool = False):
        settings = get_settings()
        self.grid_q = sorted(set(grid_q))
        self.grid_s = sorted(set(grid_s))
        self.seed = settings.seed if seed is None else seed
        self.workers = workers or settings.workers
        self.context = VerifyContext(cap_points=cap_points, cap_codewords=cap_codewords, seed=self.seed,
                                     samples=samples, inject_fault=inject_fault)
        self.stats = {
            "total_processed": 0,
            "total_passed": 0,
            "total_failed": 0,
            "total_skipped": 0,
        }

    def tasks(self) -> List[Task]:
        tasks: List[Task] = []
        for q in self.grid_q:
            for s in self.grid_s:
                for d in range(1, (s - 1) * max(q - 2, 0) + 2):
                    tasks.append((checks.torus_min_distance, {"q": q, "s": s, "d": d}))
                    tasks.append((checks.torus_dimension, {"q": q, "s": s, "d": d}))
                    tasks.append((checks.extremal_tightness, {"q": q, "s": s, "d": d}))
                    tasks.append((checks.regularity_plateau, {"q": q, "s": s, "d": d}))
                    if s in (2, 3):
                        tasks.append((checks.line_plane, {"q": q, "s": s, "d": d}))
                tasks.append((checks.torus_invariants, {"q": q, "s": s}))
                tasks.append((checks.hilbert_monotone, {"q": q, "s": s}))
                tasks.append((checks.min_distance_decrease, {"q": q, "s": s}))
                tasks.append((checks.complete_intersection, {"q": q, "clutter": "singleton", "s": s}))
                tasks.append((checks.regularity_bound, {"q": q, "clutter": "singleton", "s": s}))
            for s in sorted({1} | {s for s in self.grid_s if s <= 3}):
                tasks.append((checks.zero_count_bounds, {"q": q, "s": s}))
            for clutter, edges in (("triangle", 3), ("K22", 4), ("K23", 6)):
                tasks.append((checks.complete_intersection, {"q": q, "clutter": clutter, "s": edges}))
                tasks.append((checks.regularity_bound, {"q": q, "clutter": clutter, "s": edges}))
            for k, l in ((2, 2), (2, 3)):
                if (k, l) == (2, 2) and q in (3, 4) or (k, l) == (2, 3) and q == 3:
                    for d in range(1, (k * l - 1) * (q - 2) + 2):
                        tasks.append((checks.bipartite_product, {"q": q, "k": k, "l": l, "d": d}))
        for q in MONOTONE_Q:
            for s in MONOTONE_S:
                tasks.append((checks.decomposition_monotonicity, {"q": q, "s": s}))
        return tasks

    def _run_task(self, task: Task) -> CheckResult:
        fn, params = task
        return fn(self.context, **params)

    def run(self) -> VerifyReport:
        tasks = self.tasks()
        logger.info("running %d checks on %d workers", len(tasks), self.workers)
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(self._run_task, tasks))
        results.sort(key=_order)
        for result in results:
            self.stats["total_processed"] += 1
            self.stats[STATUS_COUNTERS[result.status]] += 1
        failures = [_label(r) for r in results if r.status == "fail"]
        return VerifyReport(
            grid_q=self.grid_q, grid_s=self.grid_s, seed=self.seed,
            passed=self.stats["total_passed"], failed=self.stats["total_failed"],
            skipped=self.stats["total_skipped"], failures=failures, checks=results,
        )

    def get_stats(self) -> Dict[str, Any]:
        return dict(self.stats, workers=self.workers, grid_q=self.grid_q, grid_s=self.grid_s)


def _order(result: CheckResult):
    p = result.params
    return (p.get("q", 0), p.get("s", 0), p.get("d", 0), result.check, json.dumps(p, sort_keys=True))


def _label(result: CheckResult) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(result.params.items()))
    return f"{result.check} {params} [{result.theorem}]"
