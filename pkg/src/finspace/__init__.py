"""Workbench for finite topological spaces and minimal models of wedges of spheres."""

from finspace.posets import CoverRelations, Poset

__all__ = ["Poset", "CoverRelations"]
__version__ = "0.1.0"
