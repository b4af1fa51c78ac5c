"""Interchange formats: distribution JSON/CSV, WLLN CSV, conjecture JSON.

Multiplicities grow without bound, so JSON carries them as decimal strings
rather than numbers; rationals are rendered "p/q" (or "p" when integral).
Entry order is always (a, b) ascending, which makes equal inputs serialize
to identical bytes.  All text is UTF-8 with LF line endings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .asymptotics import ConjectureReport, RescaledSummary
from .demazure import WeightDistribution, WeylWord


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def distribution_json(mu: WeightDistribution, word: WeylWord) -> str:
    doc = {
        "highest_weight": {"m": mu.hw.m, "n": mu.hw.n},
        "word": {"length": word.length, "first": word.first},
        "entries": [
            {"a": p.a, "b": p.b, "mult": str(c)} for p, c in mu.sorted_items()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def distribution_csv(mu: WeightDistribution) -> str:
    lines = ["a,b,mult"]
    for p, c in mu.sorted_items():
        lines.append(f"{p.a},{p.b},{c}")
    return "\n".join(lines) + "\n"


def wlln_csv(summaries: list[RescaledSummary]) -> str:
    lines = ["level,N,max_degree,mean_deg,var_deg,mean_fin,var_fin"]
    for s in summaries:
        lines.append(
            ",".join(
                [
                    str(s.level),
                    str(s.N),
                    str(s.max_degree),
                    format_rational(s.mean_degree_scaled),
                    format_rational(s.var_degree_scaled),
                    format_rational(s.mean_finweight_scaled),
                    format_rational(s.var_finweight_scaled),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def conjecture_json(report: ConjectureReport) -> str:
    doc = {
        "level": report.level,
        "fit": [format_rational(c) for c in report.fit.coefficients],
        "table_match": report.table_match,
        "max_degree_match": report.max_degree_match,
        "held_out": list(report.held_out),
        "rows": [
            {
                "N": r.N,
                "variance": format_rational(r.variance),
                "max_degree": r.max_degree,
                "expected_max_degree": r.expected_max_degree,
            }
            for r in report.rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
