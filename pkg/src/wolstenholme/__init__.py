"""Wolstenholme and Morley congruences: evaluation, verification and search."""

__version__ = "0.1.0"
