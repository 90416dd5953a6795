"""
Subcommand implementations

Each command takes resolved domain inputs and returns a report model; parsing of flags,
rendering and exit codes live in `gwpower.cli.main`.
"""

from typing import List, Optional

from loguru import logger

from gwpower.exceptions import InvalidArgument
from gwpower.gw.element import GwElement
from gwpower.gw.equality import effective_representative
from gwpower.gw.fields import BaseField, FieldKind
from gwpower.gw.invariants import discriminant, signature
from gwpower.hilbert.goettsche import SeriesRequest, classical_series, goettsche_series, real_goettsche
from gwpower.motivic.chi import chi_c
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.symmetric import sym_chi_series, zeta_series
from gwpower.motivic.verify import verify_conjecture
from gwpower.schemas.report import CheckReport, CommandReport, ProbeReport, ReportRow
from gwpower.series.axioms import axiom_check
from gwpower.series.structure import BinomialStructure, PowerStructure
from gwpower.structures.a_star import a_n, cup_product_vanishes, get_a_structure, torsion_term
from gwpower.structures.disc_probe import probe_discriminant_exponent
from gwpower.structures.mcgarraghy import get_nonfactorial_structure

COMMANDS = ("chi", "an", "sym", "verify", "goettsche", "axioms", "probe-disc")
STRUCTURES = ("binomial", "a_star", "nonfactorial")


def _invariant_notes(q: GwElement) -> List[str]:
    notes = [f"rank = {q.rank}", f"discriminant = <{discriminant(q)}>"]
    if q.field.real_embeddable:
        notes.insert(1, f"signature = {signature(q)}")
    return notes


def chi_command(c: VarietyClass, label: Optional[str] = None) -> CommandReport:
    """chi_c of a class with its rank, signature and discriminant"""
    value = chi_c(c)
    return CommandReport(
        command="chi",
        field=c.field.label,
        inputs={"class": label or c.render()},
        rows=[ReportRow(n=None, lhs=c.render(), rhs=value.render(), equal=None, method="chi_c")],
        passed=True,
        notes=_invariant_notes(value),
    )


def an_notes(q: GwElement, n: int, value: GwElement) -> List[str]:
    """Effectivity of a_n(q) and the torsion terms responsible for it"""
    notes = []
    if not value.is_effective():
        representative = effective_representative(value)
        if representative is None:
            notes.append(f"a_{n}({q.render()}) is not effective: no quadratic form has these invariants")
        else:
            notes.append(f"a_{n}({q.render()}) is effective: equal to {representative.render()}")
    for alpha in q.classes():
        if not cup_product_vanishes(alpha, q.field):
            t = torsion_term(alpha, q.field)
            notes.append(f"torsion term t_{alpha} = {t.render()} is nonzero ([2] u [{alpha}] != 0)")
    return notes


def an_command(q: GwElement, n: int, label: Optional[str] = None) -> CommandReport:
    """a_n(q) under a_*, with the non-effectivity note"""
    if n < 0:
        raise InvalidArgument(f"--n must be >= 0, got {n}", context="cli.an")
    value = a_n(q, n)
    return CommandReport(
        command="an",
        field=q.field.label,
        inputs={"expr": label or q.render(), "n": n},
        rows=[ReportRow(n=n, lhs=label or q.render(), rhs=value.render(), equal=None, method="a_*")],
        passed=True,
        notes=an_notes(q, n, value) + _invariant_notes(value),
    )


def sym_command(c: VarietyClass, order: int, label: Optional[str] = None) -> CommandReport:
    """
    Symmetric powers of a class up to `order`

    Fragment classes get the motivic zeta series 1 + sum [Sym^n c] t^n with chi_c of every
    coefficient; classes with curves only get chi_c(Sym^n c).
    """
    rows = []
    notes = []
    if c.in_fragment():
        zeta = zeta_series(c, order)
        for n in range(order + 1):
            rows.append(ReportRow(n=n, lhs=zeta[n].render(), rhs=chi_c(zeta[n]).render(), equal=None, method="zeta"))
        notes.append(f"Z(t) = {zeta.render()}")
    else:
        values = sym_chi_series(c, order)
        rows = [
            ReportRow(n=n, lhs=None, rhs=values[n].render(), equal=None, method="chi-only") for n in range(order + 1)
        ]
        notes.append("geometric classes of Sym^n are not available outside the etale x affine fragment")
    return CommandReport(
        command="sym",
        field=c.field.label,
        inputs={"class": label or c.render(), "order": order},
        rows=rows,
        passed=True,
        notes=notes,
    )


def verify_command(c: VarietyClass, max_n: int, label: Optional[str] = None) -> CommandReport:
    if max_n < 0:
        raise InvalidArgument(f"--max-n must be >= 0, got {max_n}", context="cli.verify")
    return verify_conjecture(c, max_n, label=label)


def goettsche_command(chi: GwElement, order: int, label: Optional[str] = None) -> CommandReport:
    """Quadratic Goettsche series checked against its rank (and over R, signature) specializations"""
    field = chi.field
    series = goettsche_series(SeriesRequest(chi=chi, order=order, field=field))
    ranks = classical_series(chi.rank, order)
    signatures = real_goettsche(chi.rank, signature(chi), order) if field.kind is FieldKind.REALS else None
    rows = []
    for n in range(order + 1):
        coeff = series[n]
        equal = coeff.rank == ranks[n]
        expected = f"rank {ranks[n]}"
        if signatures is not None:
            equal = equal and signature(coeff) == signatures[n]
            expected += f", signature {signatures[n]}"
        rows.append(ReportRow(n=n, lhs=coeff.render(), rhs=expected, equal=equal, method="goettsche"))
    return CommandReport(
        command="goettsche",
        field=field.label,
        inputs={"chi": label or chi.render(), "order": order},
        rows=rows,
        passed=all(row.equal for row in rows),
        notes=[f"G(t) = {series.render()}"],
    )


def structure_for(name: str, field: BaseField) -> PowerStructure:
    if name == "binomial":
        return BinomialStructure()
    if name == "a_star":
        return get_a_structure(field)
    if name == "nonfactorial":
        return get_nonfactorial_structure(field)
    raise InvalidArgument(f"unknown structure '{name}' (expected one of {STRUCTURES})", context="cli.axioms")


def axioms_command(
    structure: str, field: BaseField, seed: int, cases: int, order: Optional[int] = None
) -> CheckReport:
    if cases < 0:
        raise InvalidArgument(f"--cases must be >= 0, got {cases}", context="cli.axioms")
    return axiom_check(structure_for(structure, field), seed=seed, cases=cases, order=order)


def probe_command(field: BaseField, seed: int) -> ProbeReport:
    report = probe_discriminant_exponent(field=field, seed=seed)
    fitted = report.fitted_conventions()
    if fitted:
        logger.info(f"Discriminant exponent fitted under: {', '.join(fitted)}")
    else:
        logger.warning("No discriminant convention gives a single exponent function")
    return report


__all__ = [
    "COMMANDS",
    "STRUCTURES",
    "chi_command",
    "an_notes",
    "an_command",
    "sym_command",
    "verify_command",
    "goettsche_command",
    "structure_for",
    "axioms_command",
    "probe_command",
]
