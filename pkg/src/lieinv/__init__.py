"""Invariant functions of small Lie and Jordan algebras, computed exactly."""

__version__ = "0.1.0"
