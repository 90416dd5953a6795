"""
Checks that ring maps respect power structures: phi(b_n(r)) = b_n(phi(r))
"""

from dataclasses import dataclass
from typing import Callable, List, Optional

from loguru import logger

from gwpower.exceptions import InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.fields import BaseField, FieldKind
from gwpower.schemas.report import CheckFailure, CheckReport
from gwpower.series.ring import GwRing, IntegerRing, RingDescriptor
from gwpower.series.structure import PowerStructure
from gwpower.utils.helpers import load_run_config
from gwpower.utils.sampling import case_rng

MAP_NAMES = ("rank", "base-change:R", "base-change:C")


@dataclass(frozen=True)
class RingMap:
    name: str
    source: RingDescriptor
    target: RingDescriptor
    apply: Callable


def named_map(name: str, source_field: BaseField) -> RingMap:
    """rank: GW(k) -> Z, base-change:R / base-change:C: GW(Q) -> GW(R) / GW(C)"""
    source = GwRing(source_field)
    if name == "rank":
        return RingMap(name, source, IntegerRing(), lambda q: q.rank)
    if name in ("base-change:R", "base-change:C"):
        if source_field.kind is not FieldKind.RATIONALS:
            raise InvalidArgument(f"{name} starts from GW(Q), not GW({source_field.label})", context="respects")
        target_field = BaseField.reals() if name.endswith("R") else BaseField.quadratically_closed()
        return RingMap(name, source, GwRing(target_field), lambda q: q.map_classes(target_field))
    raise InvalidArgument(f"unknown ring map '{name}' (expected one of {MAP_NAMES})", context="respects")


def respects_check(
    map_name: str,
    source_ps: PowerStructure,
    target_ps: PowerStructure,
    seed: int,
    cases: Optional[int] = None,
    order: Optional[int] = None,
) -> CheckReport:
    """
    Test phi(b_n^R(r)) = b_n^R'(phi(r)) coefficientwise on seeded samples

    Args:
        map_name: One of MAP_NAMES
        source_ps: Power structure on the source GW(k)
        target_ps: Power structure on the target ring
        seed: Base seed; case i uses (seed, i)
        cases: Number of samples (default from config)
        order: Highest n checked (default from config)

    Returns:
        CheckReport with one failure per mismatching sample
    """
    config = load_run_config()["respects"]
    cases = config["cases"] if cases is None else cases
    order = config["order"] if order is None else order
    phi = named_map(map_name, source_ps.ring.field)
    if phi.target != target_ps.ring:
        raise InvalidArgument(
            f"{map_name} lands in {phi.target.name}, target structure is on {target_ps.ring.name}", context="respects"
        )
    failures: List[CheckFailure] = []
    for case in range(cases):
        q: GwElement = source_ps.ring.random_element(case_rng(seed, case))
        lhs = source_ps.b_series(q, order).map(phi.apply, phi.target)
        rhs = target_ps.b_series(phi.apply(q), order)
        index = lhs.first_difference(rhs)
        if index is not None:
            failures.append(
                CheckFailure(
                    check=f"{map_name}(b_n(r)) = b_n({map_name}(r))",
                    case=case,
                    witness=f"r={q.render()}; t^{index}: lhs={lhs.render()} | rhs={rhs.render()}",
                )
            )
    logger.info(f"respects_check {map_name}: {cases} cases, {len(failures)} failures")
    return CheckReport(
        name=f"respects:{map_name}",
        field=source_ps.ring.field.label,
        seed=seed,
        cases=cases,
        checks=[f"{map_name}(b_n(r)) = b_n({map_name}(r)), n <= {order}"],
        failures=failures,
        passed=not failures,
    )


__all__ = ["MAP_NAMES", "RingMap", "named_map", "respects_check"]
