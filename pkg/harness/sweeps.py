import contextlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import django
from django.apps import apps
from django.conf import settings

from permutations.permutation import Permutation
from pipedreams.bounds import beyond_bound, check_bound
from pipedreams.engine import enumerate_all

from .checks import CheckName, applies, run_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepReport:
    what: str
    n: int
    inverse_fireworks_only: bool
    checked: int
    failures: tuple

    @property
    def passed(self):
        return not self.failures


def _bound(force):
    return beyond_bound() if force else contextlib.nullcontext()


def _setup_worker():
    # spawned workers start without an app registry
    if not apps.ready:
        django.setup()


def _check_chunk(what, one_lines, force):
    with _bound(force):
        failures = []
        for one_line in one_lines:
            failures.extend(run_check(what, Permutation(one_line)))
        return failures


def selected(what, n, inverse_fireworks_only=False):
    return [
        w
        for w in Permutation.all(n)
        if applies(what, w) and (w.is_inverse_fireworks() or not inverse_fireworks_only)
    ]


def run_sweep(what, n, inverse_fireworks_only=False, workers=None, force=False):
    """
    Run one property suite over S_n and collect every failure.
    """
    what = CheckName(what)
    workers = settings.PIPEDREAM_SWEEP_WORKERS if workers is None else workers
    with _bound(force):
        check_bound(n)
        # shared by every suite; forked workers inherit it
        enumerate_all(n)
        perms = selected(what, n, inverse_fireworks_only)
        one_lines = [w.one_line for w in perms]
        logger.info("checking %s over %s permutations of n=%s", what.value, len(perms), n)
        if workers <= 1 or len(perms) < 2:
            failures = _check_chunk(what.value, one_lines, force)
        else:
            chunks = [one_lines[k::workers] for k in range(workers)]
            with ProcessPoolExecutor(max_workers=workers, initializer=_setup_worker) as pool:
                results = pool.map(_check_chunk, [what.value] * workers, chunks, [force] * workers)
                failures = [failure for chunk in results for failure in chunk]
    failures = tuple(sorted(failures, key=lambda failure: failure.sort_key()))
    if failures:
        logger.warning("%s: %s failures over n=%s", what.value, len(failures), n)
    return SweepReport(what.value, n, inverse_fireworks_only, len(perms), failures)
