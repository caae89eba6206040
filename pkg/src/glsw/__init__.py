"""Computational workbench for valued quivers, their modulated algebras,
locally free representations, canonical decompositions and stability."""

__version__ = "0.1.0"
