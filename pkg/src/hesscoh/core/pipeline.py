"""
Verification pipeline - fans certificate work out over worker threads.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from math import prod
from typing import Callable, List, Optional, Sequence, TypeVar

from ..config.settings import SETTINGS
from ..localization.hessenberg import HessenbergFunction, all_hessenberg_functions, fixed_points
from ..presentation.certificates import collect_vanishing, vanishing_rows, verify_hessenberg
from ..presentation.relations import ideal_for
from .models import HessenbergCertificate, VanishingReport, VerifyAllBudget, VerifyAllReport

logger = logging.getLogger(__name__)

Item = TypeVar("Item")
Result = TypeVar("Result")


class LargeRunError(ValueError):
    """verify-all above the configured n without an explicit opt-in."""


def guard_large_run(n: int, allow_large: bool = False) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > SETTINGS.verify_all_max_n and not allow_large:
        raise LargeRunError(f"n = {n} exceeds verify_all_max_n = {SETTINGS.verify_all_max_n}; pass --allow-large")


def estimate_budget(n: int) -> VerifyAllBudget:
    """Counts from the Hessenberg functions alone; no fixed point is enumerated."""
    functions = all_hessenberg_functions(n)
    point_counts = [prod(h(j) - j + 1 for j in range(1, n + 1)) for h in functions]
    top = max(2 * sum(h(j) - j for j in range(1, n + 1)) for h in functions)
    return VerifyAllBudget(
        n=n,
        hessenberg_functions=len(functions),
        fixed_points=sum(point_counts),
        vanishing_checks=n * sum(point_counts),
        top_degree=top + SETTINGS.regularity_extra_degrees,
        max_n=SETTINGS.verify_all_max_n,
    )


class VerificationPipeline:
    """
    Runs certificates for one or many Hessenberg functions.

    Stages:
    1. Vanishing: f_{h(j),j} at every fixed point (fan-out over fixed points)
    2. Graded checks: Hilbert function, regularity, monomial basis
    3. Assembly: results reordered by input index
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max(1, max_workers if max_workers is not None else SETTINGS.threads)

    def _map(self, func: Callable[[Item], Result], items: Sequence[Item]) -> List[Result]:
        """func over items, in input order whatever the completion order."""
        if self.max_workers <= 1 or len(items) <= 1:
            return [func(item) for item in items]
        results: List[Optional[Result]] = [None] * len(items)
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {executor.submit(func, item): i for i, item in enumerate(items)}
            for future in as_completed(future_to_index):
                results[future_to_index[future]] = future.result()
        return results  # type: ignore[return-value]

    def vanishing(self, h: HessenbergFunction) -> VanishingReport:
        ideal = ideal_for(h, with_t=True)
        points = fixed_points(h)
        logger.info("[STAGE 1] Vanishing for h=(%s) at %d fixed points (workers=%d)", h, len(points), self.max_workers)
        per_point = self._map(lambda w: vanishing_rows(ideal, w), points)
        return collect_vanishing(f"h=({h})", [row for rows in per_point for row in rows])

    def certify(self, h: HessenbergFunction) -> HessenbergCertificate:
        vanishing = self.vanishing(h)
        logger.info("[STAGE 2] Graded checks for h=(%s)", h)
        return verify_hessenberg(h, vanishing=vanishing)

    def verify_all(
        self, n: int, allow_large: bool = False, budget: Optional[VerifyAllBudget] = None
    ) -> VerifyAllReport:
        """
        Certificates for every Hessenberg function on [n], in lexicographic order.

        Args:
            n: Size of the flag; every h : [n] -> [n] is certified
            allow_large: Run even when n exceeds verify_all_max_n
            budget: Estimate already shown to the user; computed here if omitted

        Returns:
            VerifyAllReport with one certificate per h and the budget it ran under

        Raises:
            LargeRunError: n > verify_all_max_n without allow_large
        """
        guard_large_run(n, allow_large)
        budget = budget or estimate_budget(n)
        functions = all_hessenberg_functions(n)
        logger.info(
            "[STAGE 0] verify-all n=%d: %d Hessenberg functions, %d vanishing checks",
            n,
            budget.hessenberg_functions,
            budget.vanishing_checks,
        )
        # fixed points run sequentially inside each worker
        inner = VerificationPipeline(max_workers=1)
        certificates = self._map(inner.certify, functions)
        logger.info("[STAGE 3] Assembling %d certificates", len(certificates))
        report = VerifyAllReport(n=n, count=len(certificates), budget=budget, certificates=certificates)
        report.passed = all(c.passed for c in certificates)
        failed = [c.h for c in certificates if not c.passed]
        if failed:
            logger.warning("  -> %d certificate(s) failed: %s", len(failed), failed)
        return report
