"""
Brute-force fit of the exponent E(n, r) in disc(a_n(q)) = disc(q)^E(n, rank q)
"""

from typing import List, Optional, Set, Tuple

from loguru import logger

from gwpower.gw.fields import BaseField
from gwpower.gw.invariants import DISCRIMINANT_CONVENTIONS, discriminant
from gwpower.schemas.report import ProbeCell, ProbeReport, ProbeSummary
from gwpower.series.ring import GwRing
from gwpower.structures.a_star import a_n
from gwpower.utils.combinatorics import generalized_binomial, multiset_count
from gwpower.utils.helpers import load_run_config
from gwpower.utils.sampling import case_rng

_MAX_ATTEMPTS = 200


def _observe(
    field: BaseField, convention: str, rank: int, n: int, samples: int, seed: int
) -> Tuple[int, Optional[int]]:
    """Number of informative samples and the single parity they support (None if they disagree)"""
    ring = GwRing(field)
    seen: Set[Optional[int]] = set()
    used = 0
    for attempt in range(_MAX_ATTEMPTS):
        if used == samples:
            break
        stream = ((DISCRIMINANT_CONVENTIONS.index(convention) * 64 + rank) * 64 + n) * _MAX_ATTEMPTS + attempt
        rng = case_rng(seed, stream)
        q = ring.random_effective(rng, rank)
        d = discriminant(q, convention)
        if d == 1:
            continue
        used += 1
        image = discriminant(a_n(q, n), convention)
        if image == 1:
            seen.add(0)
        elif image == d:
            seen.add(1)
        else:
            seen.add(None)
    observed = seen.pop() if len(seen) == 1 else None
    return used, observed


def probe_discriminant_exponent(
    field: Optional[BaseField] = None,
    seed: int = 0,
    max_rank: Optional[int] = None,
    max_n: Optional[int] = None,
    samples: Optional[int] = None,
) -> ProbeReport:
    """
    Fit the parity of E(n, r) for every rank <= max_rank and n <= max_n under both conventions

    The fitted table is compared with C(n+r-1, n) and with C(n+r-1, n-1); neither is assumed.
    """
    config = load_run_config()["probe"]
    field = BaseField.rationals() if field is None else field
    max_rank = config["max_rank"] if max_rank is None else max_rank
    max_n = config["max_n"] if max_n is None else max_n
    samples = config["samples_per_cell"] if samples is None else samples

    cells: List[ProbeCell] = []
    summaries: List[ProbeSummary] = []
    for convention in DISCRIMINANT_CONVENTIONS:
        convention_cells = []
        for rank in range(1, max_rank + 1):
            for n in range(1, max_n + 1):
                used, observed = _observe(field, convention, rank, n, samples, seed)
                cell = ProbeCell(
                    convention=convention,
                    rank=rank,
                    n=n,
                    samples=used,
                    observed=observed,
                    stated=multiset_count(rank, n) % 2,
                    candidate=generalized_binomial(n + rank - 1, n - 1) % 2,
                )
                logger.debug(f"disc probe {convention} r={rank} n={n}: observed={observed} from {used} samples")
                convention_cells.append(cell)
        consistent = all(c.observed is not None for c in convention_cells)
        summary = ProbeSummary(
            convention=convention,
            consistent=consistent,
            matches_stated=consistent and all(c.observed == c.stated for c in convention_cells),
            matches_candidate=consistent and all(c.observed == c.candidate for c in convention_cells),
        )
        logger.info(
            f"disc exponent ({convention}): consistent={summary.consistent}, "
            f"C(n+r-1,n)={summary.matches_stated}, C(n+r-1,n-1)={summary.matches_candidate}"
        )
        cells.extend(convention_cells)
        summaries.append(summary)
    return ProbeReport(field=field.label, seed=seed, max_rank=max_rank, max_n=max_n, cells=cells, summaries=summaries)


__all__ = ["probe_discriminant_exponent"]
