"""Independent per-step tasks with deterministic, step-ordered results."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .errors import StepError


def run_steps(fn, items, threads: int):
    """Apply ``fn`` to every ``(step, arg)``; collect failures with their step."""
    def guarded(item):
        step, arg = item
        try:
            return step, fn(arg), None
        except Exception as exc:  # noqa: BLE001 - re-raised below, aggregated
            return step, None, exc

    if threads <= 1 or len(items) <= 1:
        results = [guarded(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(guarded, items))
    failures = [(step, exc) for step, _, exc in results if exc is not None]
    if failures:
        raise StepError(failures)
    return [value for _, value, _ in results]
