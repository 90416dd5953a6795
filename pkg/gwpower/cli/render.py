"""
JSON and text renderings of report models

Both renderings start from `model_dump(by_alias=True)`, so they carry the same data.
"""

from typing import List, Union

import pandas as pd

from gwpower.schemas.report import CheckReport, CommandReport, ProbeReport

Report = Union[CommandReport, CheckReport, ProbeReport]

_BANNER = "=" * 80


def render_json(report: Report) -> str:
    return report.model_dump_json(by_alias=True, indent=2)


def _table(records: List[dict], columns: List[str]) -> str:
    if not records:
        return "(no rows)"
    # missing cells print as "-"; integer columns stay integral
    cleaned = [{key: "-" if value is None else value for key, value in record.items()} for record in records]
    return pd.DataFrame.from_records(cleaned, columns=columns).to_string(index=False)


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _command_text(data: dict) -> List[str]:
    lines = [f"{data['command'].upper()} over {data['field']}"]
    lines.extend(f"  {key}: {value}" for key, value in data["inputs"].items())
    lines += [_BANNER, _table(data["rows"], ["n", "lhs", "rhs", "equal", "method"]), _BANNER]
    lines.extend(f"note: {note}" for note in data["notes"])
    lines.append(_status(data["pass"]))
    return lines


def _check_text(data: dict) -> List[str]:
    counts = {check: 0 for check in data["checks"]}
    for failure in data["failures"]:
        counts[failure["check"]] = counts.get(failure["check"], 0) + 1
    summary = [{"check": check, "failures": count} for check, count in counts.items()]
    lines = [
        f"{data['name']} over {data['field']}: {data['cases']} cases, seed {data['seed']}",
        _BANNER,
        _table(summary, ["check", "failures"]),
    ]
    if data["failures"]:
        lines += [_BANNER, _table(data["failures"], ["check", "case", "witness"])]
    lines += [_BANNER, _status(data["pass"])]
    return lines


def _probe_text(data: dict) -> List[str]:
    lines = [
        f"Discriminant exponent probe over {data['field']}: rank <= {data['max_rank']}, "
        f"n <= {data['max_n']}, seed {data['seed']}",
        _BANNER,
        _table(data["cells"], ["convention", "rank", "n", "samples", "observed", "stated", "candidate"]),
        _BANNER,
        _table(data["summaries"], ["convention", "consistent", "matches_stated", "matches_candidate"]),
    ]
    return lines


def render_text(report: Report) -> str:
    """Aligned text tables for any report model"""
    data = report.model_dump(by_alias=True)
    if isinstance(report, CommandReport):
        lines = _command_text(data)
    elif isinstance(report, CheckReport):
        lines = _check_text(data)
    else:
        lines = _probe_text(data)
    return "\n".join(lines)


def render(report: Report, as_json: bool = False) -> str:
    return render_json(report) if as_json else render_text(report)


__all__ = ["Report", "render_json", "render_text", "render"]
