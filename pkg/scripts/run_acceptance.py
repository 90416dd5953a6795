#!/usr/bin/env python3
"""
Acceptance Battery
Runs the closed-form regressions and seeded property runs end to end and prints a summary table
"""

import argparse
import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent  # noqa: E402
sys.path.insert(0, str(project_root))  # noqa: E402

import pandas as pd  # noqa: E402
from loguru import logger  # noqa: E402

from gwpower.core.config import get_settings  # noqa: E402
from gwpower.core.logging import setup_logging  # noqa: E402
from gwpower.exceptions import GwPowerError  # noqa: E402
from gwpower.gw.element import GwElement  # noqa: E402
from gwpower.gw.equality import gw_equal  # noqa: E402
from gwpower.gw.fields import BaseField  # noqa: E402
from gwpower.gw.hilbert import product_formula  # noqa: E402
from gwpower.gw.invariants import signature  # noqa: E402
from gwpower.hilbert.goettsche import (  # noqa: E402
    SeriesRequest,
    classical_series,
    goettsche_series,
    punctual_series,
    real_macdonald,
)
from gwpower.motivic.atoms import EtaleAtom  # noqa: E402
from gwpower.motivic.chi import chi_c, curve_sym_chi  # noqa: E402
from gwpower.motivic.classes import VarietyClass  # noqa: E402
from gwpower.motivic.etale import etale_sym  # noqa: E402
from gwpower.motivic.verify import verify_conjecture  # noqa: E402
from gwpower.series.axioms import axiom_check  # noqa: E402
from gwpower.series.power import expand_power  # noqa: E402
from gwpower.series.ring import GwRing  # noqa: E402
from gwpower.series.structure import BinomialStructure  # noqa: E402
from gwpower.structures.a_star import a_generator, a_n, get_a_structure  # noqa: E402
from gwpower.structures.disc_probe import probe_discriminant_exponent  # noqa: E402
from gwpower.utils.sampling import case_rng  # noqa: E402

Q = BaseField.rationals()
R = BaseField.reals()


def generator_formula(seed: int, scale: float) -> bool:
    for alpha in (-1, 2, 3, 5, -2):
        for n in range(11):
            c = comb(n, 2)
            expected = GwElement.from_terms(Q, [(alpha**n, 1), (2, c), (alpha, c), (1, -c), (2 * alpha, -c)])
            if a_generator(alpha, n, Q) != expected:
                logger.error(f"a_{n}(<{alpha}>) differs from the closed form")
                return False
    return True


def curve_closed_forms(seed: int, scale: float) -> bool:
    for field in (Q, R):
        for genus in range(6):
            series = expand_power(GwElement.hyperbolic(field) * (1 - genus), get_a_structure(field), 12)
            if not all(gw_equal(series[n], curve_sym_chi(genus, n, field)) for n in range(13)):
                logger.error(f"curve closed form fails for g={genus} over {field.label}")
                return False
    return True


def quadratic_extensions(seed: int, scale: float) -> bool:
    for alpha in (2, 3, 5, -1, -2):
        algebra = EtaleAtom.from_generators(Q, [alpha])
        c = GwElement.from_terms(Q, [(2, 1), (2 * alpha, 1)])
        for n in range(11):
            if not gw_equal(chi_c(etale_sym(algebra, n)), a_n(c, n)):
                logger.error(f"Sym^{n} Spec Q(sqrt {alpha}) disagrees with a_{n}")
                return False
    return True


def biquadratic(seed: int, scale: float) -> bool:
    value = chi_c(etale_sym(EtaleAtom.from_generators(Q, [2, 3]), 2))
    q = GwElement.from_terms(Q, [(1, 1), (2, 1), (3, 1), (6, 1)])
    return gw_equal(value, a_n(q, 2)) and value.rank == comb(5, 2)


def projective_spaces(seed: int, scale: float) -> bool:
    series = expand_power(GwElement.hyperbolic(Q), get_a_structure(Q), 12)
    if not all(gw_equal(series[n], chi_c(VarietyClass.projective(Q, n))) for n in range(13)):
        return False
    return all(verify_conjecture(VarietyClass.projective(Q, m), 6).passed for m in range(5))


def rank_law(seed: int, scale: float) -> bool:
    ring = GwRing(Q)
    ps = get_a_structure(Q)
    for case in range(int(100 * scale)):
        rng = case_rng(seed, case)
        q = ring.random_effective(rng, int(rng.integers(1, 7)))
        series = ps.b_series(q, 8)
        if [series[n].rank for n in range(9)] != [comb(q.rank + n - 1, n) for n in range(9)]:
            logger.error(f"rank law fails for {q.render()}")
            return False
    return True


def real_signature_law(seed: int, scale: float) -> bool:
    ring = GwRing(R)
    ps = get_a_structure(R)
    for case in range(int(50 * scale)):
        q = ring.random_element(case_rng(seed, case))
        series = ps.b_series(q, 12)
        if [signature(series[n]) for n in range(13)] != real_macdonald(q.rank, signature(q), 12):
            logger.error(f"signature law fails for {q.render()}")
            return False
    return True


def axiom_battery(seed: int, scale: float) -> bool:
    cases = int(get_settings().AXIOM_CASES * scale)
    structures = [BinomialStructure(), get_a_structure(Q), get_a_structure(R), get_a_structure(BaseField.finite(3))]
    passed = True
    for ps in structures:
        report = axiom_check(ps, seed=seed, cases=cases)
        logger.info(f"{report.name} over {report.field}: {len(report.failures)} failures in {cases} cases")
        passed = passed and report.passed
    return passed


def hilbert_product_formula(seed: int, scale: float) -> bool:
    for case in range(int(200 * scale)):
        rng = case_rng(seed, case)
        a, b = (Fraction(int(rng.integers(-199, 200)) or 1, int(rng.integers(1, 50))) for _ in range(2))
        if product_formula(a, b) != 1:
            logger.error(f"product formula fails for ({a}, {b})")
            return False
    return True


def goettsche(seed: int, scale: float) -> bool:
    for terms, e in (([(1, 2), (-1, 1)], 3), ([(1, 5), (-1, 4)], 9), ([(1, 12), (-1, 12)], 24)):
        series = goettsche_series(SeriesRequest(chi=GwElement.from_terms(Q, terms), order=10, field=Q))
        if [series[n].rank for n in range(11)] != classical_series(e, 10):
            return False
    punctual = punctual_series(10)
    return [punctual[n].rank for n in range(11)] == classical_series(1, 10)


def disc_probe(seed: int, scale: float) -> bool:
    report = probe_discriminant_exponent(Q, seed=seed)
    for summary in report.summaries:
        logger.info(
            f"{summary.convention}: consistent={summary.consistent}, "
            f"C(n+r-1,n)={summary.matches_stated}, C(n+r-1,n-1)={summary.matches_candidate}"
        )
    return bool(report.fitted_conventions())


def representation_independence(seed: int, scale: float) -> bool:
    ring = GwRing(Q)
    ps = get_a_structure(Q)
    for case in range(int(200 * scale)):
        rng = case_rng(seed, case)
        a = int(rng.integers(1, 13)) * int(rng.choice([-1, 1]))
        b = int(rng.integers(1, 13)) * int(rng.choice([-1, 1]))
        if a + b == 0:
            continue
        base = ring.random_element(rng)
        left = ps.b_series(base + GwElement.from_terms(Q, [(a, 1), (b, 1)]), 6)
        right = ps.b_series(base + GwElement.from_terms(Q, [(a + b, 1), (a * b * (a + b), 1)]), 6)
        if not all(gw_equal(left[n], right[n]) for n in range(7)):
            logger.error(f"chain rewrite <{a}> + <{b}> changes a_n on base {base.render()}")
            return False
    return True


CRITERIA = [
    (1, "generator formula", generator_formula),
    (2, "curve closed forms", curve_closed_forms),
    (3, "quadratic extensions", quadratic_extensions),
    (4, "biquadratic Sym^2", biquadratic),
    (5, "projective spaces", projective_spaces),
    (6, "MacDonald rank law", rank_law),
    (7, "real signature law", real_signature_law),
    (8, "axiom battery", axiom_battery),
    (9, "Hilbert product formula", hilbert_product_formula),
    (10, "Goettsche specializations", goettsche),
    (11, "discriminant probe", disc_probe),
    (12, "representation independence", representation_independence),
]


def main():
    """Run the acceptance battery"""
    settings = get_settings()
    parser = argparse.ArgumentParser(description="Run the gwpower acceptance battery")
    parser.add_argument(
        "--seed",
        type=int,
        default=settings.DEFAULT_SEED,
        help=f"Seed for sampled cases (default: {settings.DEFAULT_SEED})",
    )
    parser.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="Fraction of the seeded case counts to run (default: 1.0)",
    )
    parser.add_argument("--only", type=int, nargs="+", help="Criteria to run (default: all)")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default: {settings.LOG_LEVEL})")
    args = parser.parse_args()

    setup_logging(level=args.log_level)
    logger.info("=" * 80)
    logger.info("GWPOWER ACCEPTANCE BATTERY")
    logger.info("=" * 80)

    rows = []
    for number, description, check in CRITERIA:
        if args.only and number not in args.only:
            continue
        logger.info(f"\n{number}. {description}...")
        start = time.perf_counter()
        try:
            passed = check(args.seed, args.scale)
        except GwPowerError as e:
            logger.error(f"{description} raised: {e}")
            passed = False
        elapsed = time.perf_counter() - start
        logger.info(f"{'✓' if passed else '✗'} {description} ({elapsed:.2f}s)")
        status = "PASS" if passed else "FAIL"
        rows.append({"criterion": number, "check": description, "status": status, "seconds": round(elapsed, 2)})

    if not rows:
        parser.error("no criteria selected")
    results_df = pd.DataFrame(rows)
    logger.info("\n" + "=" * 80)
    logger.info("SUMMARY")
    logger.info("=" * 80)
    print("\n" + results_df.to_string(index=False))

    failed = results_df[results_df["status"] == "FAIL"]
    if len(failed):
        logger.error(f"{len(failed)} of {len(results_df)} criteria failed")
        sys.exit(1)
    logger.info(f"All {len(results_df)} criteria passed")
    sys.exit(0)


if __name__ == "__main__":
    main()
