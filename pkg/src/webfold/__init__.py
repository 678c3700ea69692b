"""Tableaux, promotion/evacuation/folding, and 2-/3-web bijections."""

__version__ = "0.1.0"
