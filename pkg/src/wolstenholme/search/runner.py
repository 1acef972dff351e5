"""Drive a scan over its work units, optionally in parallel and with checkpoints."""

from __future__ import annotations

import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .checkpoint import Checkpoint
from .hits import ScanSpec, SearchHit
from .scans import make_units, process_unit


@dataclass
class ScanResult:
    spec: ScanSpec
    hits: list[SearchHit]
    next_unit: int
    total_units: int

    @property
    def complete(self) -> bool:
        return self.next_unit >= self.total_units


def default_workers() -> int:
    value = os.environ.get("WOLSTENHOLME_WORKERS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _results(spec: ScanSpec, units: list, workers: int, pool) -> Iterator[list[SearchHit]]:
    if pool is None:
        return (process_unit(spec, u) for u in units)
    return pool.map(process_unit, [spec] * len(units), units, chunksize=1)


class _Progress:
    def __init__(self, stream, label: str, total: int, every: float = 1.0):
        self.stream, self.label, self.total, self.every = stream, label, total, every
        self.last = 0.0

    def __call__(self, done: int, hits: int, final: bool = False):
        if self.stream is None:
            return
        now = time.monotonic()
        if final or now - self.last >= self.every:
            self.last = now
            print(f"[{self.label}] {done}/{self.total} units, {hits} hits", file=self.stream, flush=True)


def run_scan(
    spec: ScanSpec,
    workers: int = 1,
    checkpoint: str | os.PathLike | None = None,
    resume: bool = False,
    stop_after: int | None = None,
    progress=None,
) -> ScanResult:
    """Run ``spec`` to completion (or for ``stop_after`` units) and return sorted hits.

    With ``resume`` and an existing checkpoint file, processing restarts at
    the first unfinished unit; the spec stored in the file must match.
    Progress lines go to ``progress`` (a text stream), never to stdout.
    """
    units = make_units(spec)
    hits: list[SearchHit] = []
    start = 0
    if resume and checkpoint is not None and os.path.exists(checkpoint):
        state = Checkpoint.load(checkpoint)
        if state.spec != spec:
            raise ValueError("checkpoint belongs to a different scan")
        start, hits = state.next_unit, list(state.hits)
    todo = units[start:]
    if stop_after is not None:
        todo = todo[: max(0, stop_after)]
    report = _Progress(progress, spec.kind, len(units))
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 and len(todo) > 1 else None
    done = start
    try:
        for unit_hits in _results(spec, todo, workers, pool):
            hits.extend(unit_hits)
            done += 1
            if checkpoint is not None:
                Checkpoint(spec, done, len(units), hits).save(checkpoint)
            report(done, len(hits))
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    if checkpoint is not None and not todo:
        Checkpoint(spec, done, len(units), hits).save(checkpoint)
    report(done, len(hits), final=True)
    hits.sort(key=lambda h: (h.n, h.family, h.kind))
    return ScanResult(spec, hits, done, len(units))


def resume(checkpoint: str | os.PathLike, workers: int = 1, progress=None) -> ScanResult:
    """Finish the scan recorded in ``checkpoint``; a finished one returns its hits unchanged."""
    state = Checkpoint.load(checkpoint)
    return run_scan(state.spec, workers=workers, checkpoint=checkpoint, resume=True, progress=progress)


# -- public wrappers ----------------------------------------------------------------


def _family(family: str) -> str:
    f = family.upper()
    if f not in ("W", "M"):
        raise ValueError(f"family must be W or M, got {family!r}")
    return f


def _run(spec: ScanSpec, workers: int, **kwargs) -> list[SearchHit]:
    return run_scan(spec, workers=workers, **kwargs).hits


def scan_wolstenholme_primes(lo: int, hi: int, workers: int = 1, **options) -> list[SearchHit]:
    """Primes ``p`` in ``[lo, hi)`` with ``W_p = 1 (mod p**4)``."""
    if not 5 <= lo < hi:
        raise ValueError("need 5 <= lo < hi")
    return _run(ScanSpec("wprimes", "W", 4, lo, hi, **options), workers)


def scan_morley_primes(lo: int, hi: int, workers: int = 1, **options) -> list[SearchHit]:
    """Primes ``p`` in ``[lo, hi)`` with ``M_p = 1 (mod p**4)``."""
    if not 5 <= lo < hi:
        raise ValueError("need 5 <= lo < hi")
    return _run(ScanSpec("mprimes", "M", 4, lo, hi, **options), workers)


def scan_square_pseudoprimes(lo: int, hi: int, family: str = "W", workers: int = 1, **options) -> list[SearchHit]:
    """Primes ``p`` in ``[lo, hi)`` whose square is an order-2 pseudoprime of ``family``."""
    if not 5 <= lo < hi:
        raise ValueError("need 5 <= lo < hi")
    return _run(ScanSpec("square", _family(family), 2, lo, hi, **options), workers)


def scan_semiprime_pseudoprimes(bound: int, family: str = "W", order: int = 1, workers: int = 1, **options) -> list[SearchHit]:
    """Products ``r*s < bound`` of distinct odd primes that are pseudoprimes of the given order."""
    if bound < 15:
        raise ValueError("bound must be at least 15")
    if not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    return _run(ScanSpec("semiprime", _family(family), order, 0, bound, **options), workers)


def scan_general_pseudoprimes(bound: int, family: str = "W", order: int = 1, workers: int = 1, **options) -> list[SearchHit]:
    """Odd composites ``n < bound`` that are order-1 pseudoprimes.

    Prime powers are skipped unless ``include_prime_powers=True``: every
    ``p**a`` with ``a > 1`` satisfies the order-1 congruence.
    """
    if bound < 9:
        raise ValueError("bound must be at least 9")
    if order != 1:
        raise ValueError("the general scan supports order 1 only")
    return _run(ScanSpec("general", _family(family), 1, 0, bound, **options), workers)
