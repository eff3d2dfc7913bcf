"""Exact computation of mod-p suspension splittings of flag manifolds G/T."""

__version__ = "0.1.0"
