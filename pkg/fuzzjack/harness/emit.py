# -*- coding: utf-8 -*-

"""
Report files of an experiment:

- ``report.json``: the full reports and the configuration;
- ``convergence.csv``: one row per (method, n);
- ``errors_<method>_<n>.csv``: the measured distance at every sample point.

Floats are printed with 17 significant digits, '.' as decimal separator.
"""

import csv
import json
import logging
import os
from typing import Dict, List, Sequence

from fuzzjack.approx.report import ErrorReport
from fuzzjack.utils.errors import SchemaError
from fuzzjack.utils.utils import fmt17

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
CONVERGENCE_FILE = "convergence.csv"
CONVERGENCE_HEADER = ["method", "n", "sup_distance", "modulus", "bound", "pass"]


def _fmt(x) -> str:
    return "" if x is None else fmt17(x)


def dump_json(d: Dict, file_path: str):
    """Write ``d`` to ``file_path`` keeping the previous file as ``.bak`` until done."""
    bak_path = file_path + ".bak"
    if os.path.exists(file_path):
        # in case of shutdown while dumping
        if os.path.exists(bak_path):
            os.remove(bak_path)
        os.rename(file_path, bak_path)

    with open(file_path, "w", encoding="utf-8") as fout:
        json.dump(d, fout, indent=2)

    if os.path.exists(bak_path):
        os.remove(bak_path)


def errors_file_name(report: ErrorReport) -> str:
    return f"errors_{report.method.value}_{report.n}.csv"


def emit_report(reports: Sequence[ErrorReport], output_dir: str, config: Dict = None) -> List[str]:
    """
    Write the report files into ``output_dir`` (created if needed) and return their paths.
    Skipped runs appear in ``report.json`` and ``convergence.csv`` but get no errors file.
    """
    os.makedirs(output_dir, exist_ok=True)
    paths = []

    report_path = os.path.join(output_dir, REPORT_FILE)
    dump_json({"config": config, "reports": [r.to_dict() for r in reports]}, report_path)
    paths.append(report_path)

    convergence_path = os.path.join(output_dir, CONVERGENCE_FILE)
    with open(convergence_path, "w", encoding="utf-8", newline="") as fout:
        writer = csv.writer(fout, lineterminator="\n")
        writer.writerow(CONVERGENCE_HEADER)
        for r in reports:
            writer.writerow([r.method.value, r.n, _fmt(r.sup_distance), _fmt(r.modulus_value),
                             _fmt(r.bound_value), r.verdict.value])
    paths.append(convergence_path)

    for r in reports:
        if r.skipped:
            continue
        errors_path = os.path.join(output_dir, errors_file_name(r))
        with open(errors_path, "w", encoding="utf-8", newline="") as fout:
            writer = csv.writer(fout, lineterminator="\n")
            writer.writerow(["x", "d_infty"])
            writer.writerows([fmt17(x), fmt17(d)] for x, d in r.per_sample)
        paths.append(errors_path)

    logger.info(f"{len(reports)} reports written to {output_dir}")
    return paths


def load_reports(path: str) -> List[ErrorReport]:
    """Read the reports of a ``report.json`` file, or of the one inside directory ``path``."""
    if os.path.isdir(path):
        path = os.path.join(path, REPORT_FILE)
    with open(path, encoding="utf-8") as fin:
        content = json.load(fin)
    if not isinstance(content, dict) or not isinstance(content.get("reports"), list):
        raise SchemaError("reports", f"{path} has no list of reports")
    reports = []
    for i, d in enumerate(content["reports"]):
        try:
            reports.append(ErrorReport.from_dict(d))
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError(f"reports[{i}]", str(e)) from e
    return reports
