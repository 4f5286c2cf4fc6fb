"""JSON, CSV and plain-text rendering of decompositions and stratum tables."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Mapping, Sequence

from ..combinatorics import CurveLabeledPartition, ParabolicChi, Partition
from ..motives import MotiveSum
from ..series import GradedPoly, TruncatedSeries
from .strata import StratumRecord

CSV_COLUMNS = ("index", "stratum_dim", "fiber_dim", "codim", "twist", "relevant")


def index_to_json(index: Any) -> Any:
    if isinstance(index, Partition):
        return list(index.parts)
    if isinstance(index, ParabolicChi):
        return [[list(v), c] for v, c in index.support]
    if isinstance(index, CurveLabeledPartition):
        return {k: list(p.parts) for k, p in index.labels}
    if isinstance(index, (tuple, list)):
        return [index_to_json(x) for x in index]
    return index


def index_to_text(index: Any) -> str:
    if isinstance(index, (Partition, ParabolicChi, CurveLabeledPartition)):
        return str(index)
    if isinstance(index, (tuple, list)):
        return "[" + ";".join(index_to_text(x) for x in index) + "]"
    return str(index)


def summand_json(rec: StratumRecord, multiplicity: int = 1) -> dict:
    return {
        "index": index_to_json(rec.index),
        "atom_factors": [{"atom": a.name, "sym": m} for a, m in rec.cover.factors],
        "twist": rec.cover.twist,
        "multiplicity": multiplicity,
    }


def decomposition_json(
    records: Sequence[StratumRecord], realized: Mapping[str, GradedPoly | int]
) -> dict:
    return {
        "decomposition": [summand_json(r) for r in records if r.relevant],
        "realized": {
            mode: (p.to_json() if isinstance(p, GradedPoly) else p)
            for mode, p in realized.items()
        },
    }


def strata_csv(records: Sequence[StratumRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [index_to_text(r.index), r.stratum_dim, r.fiber_dim, r.codim, r.twist, str(r.relevant).lower()]
        )
    return buf.getvalue()


def series_json(s: TruncatedSeries) -> dict:
    return {
        "variables": list(s.series_vars),
        "bounds": list(s.bounds),
        "coefficients": [
            {"degree": list(e), "value": p.to_json()} for e, p in s.items()
        ],
    }


def motive_series_json(coeffs: Mapping[tuple[int, ...], MotiveSum]) -> dict:
    return {
        "coefficients": [
            {
                "degree": list(e),
                "value": [
                    {
                        "atom_factors": [{"atom": a.name, "sym": m} for a, m in term.factors],
                        "twist": term.twist,
                        "multiplicity": c,
                    }
                    for term, c in M.items()
                ],
            }
            for e, M in sorted(coeffs.items())
        ]
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
