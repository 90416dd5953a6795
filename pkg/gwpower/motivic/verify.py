"""
Verification of chi_c(Sym^n X) = a_n(chi_c(X)) on supported classes
"""

from typing import List, Optional

from loguru import logger

from gwpower.gw.equality import gw_equal, reduced_form
from gwpower.motivic.atoms import AbelianVariety, Curve, SymCurve
from gwpower.motivic.chi import chi_c
from gwpower.motivic.classes import VarietyClass
from gwpower.motivic.symmetric import sym_chi_series
from gwpower.schemas.report import CommandReport, ReportRow
from gwpower.structures.a_star import get_a_structure

PREDICTION_ONLY = "prediction-only"


def method_tag(c: VarietyClass) -> str:
    """orbit (etale only), closed-form (curves present) or module-structure (affine factors)"""
    atoms = c.opaque_atoms()
    if any(isinstance(atom, AbelianVariety) for atom in atoms):
        return PREDICTION_ONLY
    if any(isinstance(atom, (Curve, SymCurve)) for atom in atoms):
        return "closed-form"
    if all(m.affine == 0 for m in c.monomials()):
        return "orbit"
    return "module-structure"


def verify_conjecture(c: VarietyClass, n_max: int, label: Optional[str] = None) -> CommandReport:
    """
    Compare chi_c(Sym^n c) with a_n(chi_c(c)) for n = 0..n_max under gw_equal

    Classes with abelian-variety atoms only get the predicted right-hand side; those rows carry
    equal = None and do not count towards `pass`.

    Args:
        c: Class in the supported fragment
        n_max: Largest power checked
        label: Rendering of the input used in the report (default: canonical rendering)

    Returns:
        CommandReport with one row per n
    """
    method = method_tag(c)
    chi = chi_c(c)
    predicted = get_a_structure(c.field).b_series(chi, n_max)
    rows: List[ReportRow] = []
    if method == PREDICTION_ONLY:
        logger.warning(f"{c.render()}: symmetric powers are not known, reporting predictions only")
        rows = [
            ReportRow(n=n, lhs=None, rhs=reduced_form(predicted[n]).render(), equal=None, method=method)
            for n in range(n_max + 1)
        ]
    else:
        computed = sym_chi_series(c, n_max)
        for n in range(n_max + 1):
            equal = gw_equal(computed[n], predicted[n])
            if not equal:
                logger.warning(f"{c.render()}: mismatch at n={n}: {computed[n].render()} vs {predicted[n].render()}")
            rows.append(
                ReportRow(
                    n=n,
                    lhs=reduced_form(computed[n]).render(),
                    rhs=reduced_form(predicted[n]).render(),
                    equal=equal,
                    method=method,
                )
            )
    passed = all(row.equal for row in rows if row.equal is not None)
    logger.info(f"verify {c.render()} over {c.field.label}, n <= {n_max}: {'pass' if passed else 'FAIL'}")
    return CommandReport(
        command="verify",
        field=c.field.label,
        inputs={"class": label or c.render(), "max_n": n_max},
        rows=rows,
        passed=passed,
        notes=[f"chi_c = {chi.render()}", f"verified over {c.field.label} only"],
    )


__all__ = ["PREDICTION_ONLY", "method_tag", "verify_conjecture"]
