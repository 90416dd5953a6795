"""
Exploratory check of the special-lambda axiom lambda(xy) = lambda(x) (.) lambda(y)

Whether a_* is special is open; the outcome is reported and never asserted.
"""

from typing import List, Optional

from loguru import logger

from gwpower.schemas.report import CheckFailure, CheckReport
from gwpower.series.lambda_ops import lambda_series, opposite_lambda
from gwpower.series.structure import PowerStructure
from gwpower.series.witt import witt_product
from gwpower.utils.sampling import case_rng

CONSTRUCTIONS = {
    "opposite": opposite_lambda,
    "inversion": lambda_series,
}


def explore(ps: PowerStructure, seed: int, cases: int, order: int = 4) -> CheckReport:
    """Sample x, y and compare lambda_t(xy) with lambda_t(x) (.) lambda_t(y) for both lambda constructions"""
    ring = ps.ring
    failures: List[CheckFailure] = []
    for case in range(cases):
        rng = case_rng(seed, case)
        x, y = ring.random_element(rng), ring.random_element(rng)
        for label, construct in CONSTRUCTIONS.items():
            lhs = construct(ring.mul(x, y), ps, order)
            rhs = witt_product(construct(x, ps, order), construct(y, ps, order))
            index: Optional[int] = lhs.first_difference(rhs)
            if index is not None:
                failures.append(
                    CheckFailure(
                        check=f"lambda(xy) = lambda(x) (.) lambda(y) [{label}]",
                        case=case,
                        witness=f"x={ring.render(x)}, y={ring.render(y)}; first difference at t^{index}",
                    )
                )
    outcome = sorted({f.check for f in failures})
    logger.info(f"special-lambda exploration for {ps.name}: {cases} cases, failing constructions: {outcome or 'none'}")
    return CheckReport(
        name=f"special-lambda:{ps.name}",
        field=getattr(getattr(ring, "field", None), "label", ring.name),
        seed=seed,
        cases=cases,
        checks=[f"lambda(xy) = lambda(x) (.) lambda(y) [{label}]" for label in CONSTRUCTIONS],
        failures=failures,
        passed=not failures,
    )


__all__ = ["CONSTRUCTIONS", "explore"]
