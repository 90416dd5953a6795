"""
Seeded property runner for the power-structure and pre-lambda axioms
"""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from gwpower.schemas.report import CheckFailure, CheckReport
from gwpower.series.lambda_ops import opposite_lambda
from gwpower.series.power import power_pow
from gwpower.series.series import GwSeries
from gwpower.series.structure import PowerStructure
from gwpower.utils.helpers import load_run_config
from gwpower.utils.sampling import case_rng, sampling_config

AXIOMS = (
    "f^0 = 1",
    "f^1 = f",
    "(fg)^r = f^r g^r",
    "f^(r+s) = f^r f^s",
    "f^(rs) = (f^r)^s",
    "(1+t)^m = 1 + mt + O(t^2)",
    "f(t^n)^m = g(t^n) for g = f^m",
    "b_0(r) = 1, b_1(r) = r",
    "b_n(0) = 0",
    "b_n(1) = 1",
    "b_n(r+s) = sum b_i(r) b_(n-i)(s)",
    "lambda_0(r) = 1, lambda_1(r) = r",
    "lambda_n(1) = 0",
    "lambda_n(r+s) = sum lambda_i(r) lambda_(n-i)(s)",
)


def random_series(ps: PowerStructure, rng: np.random.Generator, order: int) -> GwSeries:
    """1 + a few random coefficients at random degrees"""
    ring = ps.ring
    coeffs = [ring.one()] + [ring.zero()] * order
    for _ in range(sampling_config()["series_terms"]):
        degree = int(rng.integers(1, order + 1))
        coeffs[degree] = ring.add(coeffs[degree], ring.random_element(rng))
    return GwSeries(ring, tuple(coeffs))


def _compare(lhs: GwSeries, rhs: GwSeries) -> Optional[str]:
    index = lhs.first_difference(rhs)
    if index is None:
        return None
    return f"t^{index}: lhs={lhs.render()} | rhs={rhs.render()}"


def _case(
    ps: PowerStructure, rng: np.random.Generator, order: int
) -> Tuple[Dict[str, str], List[Tuple[str, Callable]]]:
    ring = ps.ring
    r, s = ring.random_element(rng), ring.random_element(rng)
    f, g = random_series(ps, rng, order), random_series(ps, rng, order)
    m = int(rng.integers(-3, 4))
    n = int(rng.integers(2, 4))
    one = GwSeries.one(ring, order)
    inputs = {
        "r": ring.render(r),
        "s": ring.render(s),
        "f": f.render(),
        "g": g.render(),
        "m": str(m),
        "n": str(n),
    }

    def power_of_sum():
        return _compare(power_pow(f, ring.add(r, s), ps), power_pow(f, r, ps) * power_pow(f, s, ps))

    def substitution():
        powered = power_pow(f, ring.from_int(m), ps)
        return _compare(power_pow(f.substitute_power(n), ring.from_int(m), ps), powered.substitute_power(n))

    def one_plus_t():
        series = power_pow(GwSeries.monomial(ring, ring.one(), 1, order), ring.from_int(m), ps)
        expected = GwSeries.monomial(ring, ring.from_int(m), 1, 1)
        return _compare(series.truncate(1), expected)

    def b_low():
        b = ps.b_series(r, order)
        return _compare(b.truncate(1), GwSeries.from_coefficients(ring, [ring.one(), r]))

    def lambda_low():
        lam = opposite_lambda(r, ps, order)
        return _compare(lam.truncate(1), GwSeries.from_coefficients(ring, [ring.one(), r]))

    checks = [
        ("f^0 = 1", lambda: _compare(power_pow(f, ring.zero(), ps), one)),
        ("f^1 = f", lambda: _compare(power_pow(f, ring.one(), ps), f)),
        ("(fg)^r = f^r g^r", lambda: _compare(power_pow(f * g, r, ps), power_pow(f, r, ps) * power_pow(g, r, ps))),
        ("f^(r+s) = f^r f^s", power_of_sum),
        ("f^(rs) = (f^r)^s", lambda: _compare(power_pow(f, ring.mul(r, s), ps), power_pow(power_pow(f, r, ps), s, ps))),
        ("(1+t)^m = 1 + mt + O(t^2)", one_plus_t),
        ("f(t^n)^m = g(t^n) for g = f^m", substitution),
        ("b_0(r) = 1, b_1(r) = r", b_low),
        ("b_n(0) = 0", lambda: _compare(ps.b_series(ring.zero(), order), one)),
        (
            "b_n(1) = 1",
            lambda: _compare(ps.b_series(ring.one(), order), GwSeries.from_integers(ring, [1] * (order + 1))),
        ),
        (
            "b_n(r+s) = sum b_i(r) b_(n-i)(s)",
            lambda: _compare(ps.b_series(ring.add(r, s), order), ps.b_series(r, order) * ps.b_series(s, order)),
        ),
        ("lambda_0(r) = 1, lambda_1(r) = r", lambda_low),
        (
            "lambda_n(1) = 0",
            lambda: _compare(opposite_lambda(ring.one(), ps, order), GwSeries.monomial(ring, ring.one(), 1, order)),
        ),
        (
            "lambda_n(r+s) = sum lambda_i(r) lambda_(n-i)(s)",
            lambda: _compare(
                opposite_lambda(ring.add(r, s), ps, order),
                opposite_lambda(r, ps, order) * opposite_lambda(s, ps, order),
            ),
        ),
    ]
    return inputs, checks


def axiom_check(ps: PowerStructure, seed: int, cases: int, order: Optional[int] = None) -> CheckReport:
    """
    Property-test the power-structure axioms and the opposite pre-lambda axioms

    Every case draws r, s, f, g, m, n from its own generator seeded with (seed, case).
    Failures are returned with witnesses; nothing is raised for a failed property.
    """
    order = load_run_config()["axioms"]["order"] if order is None else order
    label = getattr(getattr(ps.ring, "field", None), "label", ps.ring.name)
    logger.info(f"Axiom check: {ps.name} on {ps.ring.name}, {cases} cases, order {order}, seed {seed}")
    failures: List[CheckFailure] = []
    for case in range(cases):
        inputs, checks = _case(ps, case_rng(seed, case), order)
        for name, check in checks:
            difference = check()
            if difference is not None:
                witness = ", ".join(f"{k}={v}" for k, v in inputs.items()) + f"; {difference}"
                failures.append(CheckFailure(check=name, case=case, witness=witness))
    if failures:
        logger.warning(f"{len(failures)} axiom failures for {ps.name}: {sorted({f.check for f in failures})}")
    else:
        logger.info(f"All axioms hold for {ps.name} on {cases} cases")
    return CheckReport(
        name=f"axioms:{ps.name}",
        field=label,
        seed=seed,
        cases=cases,
        checks=list(AXIOMS),
        failures=failures,
        passed=not failures,
    )


__all__ = ["AXIOMS", "axiom_check", "random_series"]
