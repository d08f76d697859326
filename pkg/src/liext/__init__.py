"""Exact second cohomology and extensions of structure-constant Lie algebras."""

__version__ = "0.1.0"
