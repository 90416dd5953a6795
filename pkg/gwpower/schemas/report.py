from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ReportRow(BaseModel):
    """One row of a command report"""

    n: Optional[int] = Field(None, description="Index of the row (power, degree or coefficient)")
    lhs: Optional[str] = Field(None, description="Left-hand side rendering")
    rhs: Optional[str] = Field(None, description="Right-hand side rendering")
    equal: Optional[bool] = Field(None, description="Outcome of the comparison, null when nothing was compared")
    method: str = Field(..., description="How the row was produced")


class CommandReport(BaseModel):
    """Machine-readable result of a CLI command"""

    command: str = Field(..., description="Subcommand name")
    field: str = Field(..., description="Base field label (Q, R, C or Fp:<p>)")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Parsed command inputs")
    rows: List[ReportRow] = Field(default_factory=list)
    passed: bool = Field(..., alias="pass", description="True when every compared row is equal")
    notes: List[str] = Field(default_factory=list, description="Free-form remarks")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "command": "verify",
                "field": "Q",
                "inputs": {"class": "Curve(g=2)", "max_n": 2},
                "rows": [
                    {"n": 0, "lhs": "<1>", "rhs": "<1>", "equal": True, "method": "closed-form"},
                    {"n": 1, "lhs": "-<1> - <-1>", "rhs": "-<1> - <-1>", "equal": True, "method": "closed-form"},
                    {"n": 2, "lhs": "<1>", "rhs": "<1>", "equal": True, "method": "closed-form"},
                ],
                "pass": True,
                "notes": [],
            }
        }


class CheckFailure(BaseModel):
    """A property that failed on one sampled case"""

    check: str = Field(..., description="Property name")
    case: int = Field(..., ge=0, description="Case index (seeded with (seed, case))")
    witness: str = Field(..., description="Inputs and both sides of the failed identity")


class CheckReport(BaseModel):
    """Result of a seeded property run"""

    name: str = Field(..., description="What was checked")
    field: str = Field(..., description="Base field label")
    seed: int
    cases: int = Field(..., ge=0)
    checks: List[str] = Field(default_factory=list, description="Property names that were evaluated")
    failures: List[CheckFailure] = Field(default_factory=list)
    passed: bool = Field(..., alias="pass")

    class Config:
        populate_by_name = True

    def failed_checks(self) -> List[str]:
        """Distinct property names with at least one failure"""
        return sorted({failure.check for failure in self.failures})


class ProbeCell(BaseModel):
    """Discriminant exponent parity observed for one (convention, rank, n)"""

    convention: str
    rank: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    samples: int = Field(..., ge=0)
    observed: Optional[int] = Field(None, description="Fitted exponent parity, null when samples disagree")
    stated: int = Field(..., description="Parity of C(n+r-1, n)")
    candidate: int = Field(..., description="Parity of C(n+r-1, n-1)")


class ProbeSummary(BaseModel):
    convention: str
    consistent: bool = Field(..., description="Every cell was fitted by a single parity")
    matches_stated: bool
    matches_candidate: bool


class ProbeReport(BaseModel):
    """Brute-force fit of the discriminant exponent of a_n"""

    field: str
    seed: int
    max_rank: int
    max_n: int
    cells: List[ProbeCell] = Field(default_factory=list)
    summaries: List[ProbeSummary] = Field(default_factory=list)

    def fitted_conventions(self) -> List[str]:
        return [summary.convention for summary in self.summaries if summary.consistent]


__all__ = [
    "ReportRow",
    "CommandReport",
    "CheckFailure",
    "CheckReport",
    "ProbeCell",
    "ProbeSummary",
    "ProbeReport",
]
