"""Seeded, thread-parallel ensemble execution.

Every task derives its own RNG from SeedSequence([master_seed, *stream_key])
and records are collected in task-key order, so output is identical for any
thread count. A failed task (connectivity exhaustion and friends) drops only
its own records; the failure count lands in the output header.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..errors import OscnetError
from .scenarios import SCENARIOS

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    records: list
    columns: tuple
    failures: int
    config: object


def run_scenario(config):
    scenario = SCENARIOS[config.scenario]
    tasks = list(scenario.tasks(config))

    def execute(task):
        rng = np.random.default_rng(np.random.SeedSequence([config.seed, *task.stream]))
        return scenario.run(config, task.params, rng)

    results = {}
    failures = 0
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        for task, future in [(t, pool.submit(execute, t)) for t in tasks]:
            try:
                results[task.key] = future.result()
            except OscnetError as exc:
                failures += 1
                log.warning("task %s failed: %s", task.key, exc)

    records = []
    for key in sorted(results):
        records.extend(results[key])
    if failures:
        log.warning("%d of %d tasks failed and were excluded", failures, len(tasks))
    return RunResult(records, scenario.columns, failures, config)


def header_for(result):
    header = result.config.echo()
    header["failed_realizations"] = result.failures
    header["records"] = len(result.records)
    return header
