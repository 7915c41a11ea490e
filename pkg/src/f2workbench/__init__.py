"""Computational workbench for mod-2 invariant rings and spectral sequence pages."""

__version__ = "0.1.0"
