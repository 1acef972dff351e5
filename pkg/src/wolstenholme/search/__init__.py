"""Checkpointed range searches for Wolstenholme and Morley primes and pseudoprimes."""

from .checkpoint import Checkpoint
from .hits import ScanSpec, SearchHit
from .runner import (
    ScanResult,
    default_workers,
    resume,
    run_scan,
    scan_general_pseudoprimes,
    scan_morley_primes,
    scan_semiprime_pseudoprimes,
    scan_square_pseudoprimes,
    scan_wolstenholme_primes,
)

__all__ = [
    "Checkpoint",
    "ScanResult",
    "ScanSpec",
    "SearchHit",
    "default_workers",
    "resume",
    "run_scan",
    "scan_general_pseudoprimes",
    "scan_morley_primes",
    "scan_semiprime_pseudoprimes",
    "scan_square_pseudoprimes",
    "scan_wolstenholme_primes",
]
