"""Quantum polynomial functors over Q(q), computed exactly."""

__version__ = "0.1.0"
