"""Run verification tasks, in parallel when asked, and assemble the report."""

import logging
import os
import time
from typing import List

from joblib import Parallel, delayed
from tqdm import tqdm

from sl2forms.cli.config import RunSpec
from sl2forms.cli.models import FAIL, CheckRecord, Report, summarize
from sl2forms.cli.suites import CheckTask, build_tasks
from sl2forms.info import __version__
from sl2forms.utils import mkdirs

logger = logging.getLogger("sl2forms.cli")

REPORT_NAME = "report.json"


def run_task(task: CheckTask, timings: bool = False) -> CheckRecord:
    """ Run one check; an exception becomes a failing record carrying the error message. """
    start = time.perf_counter()
    try:
        record = task.func(name=task.name, **task.kwargs)
    except Exception as exc:
        logger.exception("Check %s crashed", task.name)
        record = CheckRecord(name=task.name, suite=task.suite, status=FAIL, residual=f"{type(exc).__name__}: {exc}")
    if timings:
        record.seconds = round(time.perf_counter() - start, 3)
    return record


def run_checks(spec: RunSpec) -> List[CheckRecord]:
    tasks = build_tasks(spec)
    logger.info("Running %d checks for %s", len(tasks), spec.command)
    if spec.jobs == 1:
        records = [run_task(task, spec.timings) for task in tqdm(tasks, desc=spec.command)]
    else:
        records = Parallel(n_jobs=spec.jobs)(
            delayed(run_task)(task, spec.timings) for task in tqdm(tasks, desc=spec.command)
        )
    for record in records:
        if not record.passed:
            logger.error("FAIL %s: %s", record.name, record.residual)
    return sorted(records, key=lambda r: r.name)


def run(spec: RunSpec) -> Report:
    checks = run_checks(spec)
    report = Report(
        command=spec.command,
        version=__version__,
        spec=spec.model_dump(exclude={"out", "jobs", "timings"}),
        checks=checks,
        summary=summarize(checks),
    )
    logger.info("%d/%d checks passed", report.summary.passed, report.summary.total)
    return report


def write_report(report: Report, out: str) -> str:
    """ Write the report as JSON into directory `out`. """
    path = os.path.join(mkdirs(out), REPORT_NAME)
    with open(path, "w") as f:
        f.write(report.model_dump_json(indent=2, exclude_none=True))
        f.write("\n")
    logger.info("Saved %s", path)
    return path
