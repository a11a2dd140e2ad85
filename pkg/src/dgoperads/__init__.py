"""Explicit and presented dg operads on permutohedra, simplices and associahedra.

The package builds the operads, checks their axioms and presentations
exactly, verifies weight-two Koszul duality, computes integral homology and
reproduces a table of generating series.
"""

__version__ = "0.1.0"
