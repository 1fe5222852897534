"""Exact computation with degenerate affine Hecke-Clifford and spin Hecke algebras,
their even cocenters, and the superalgebra isomorphism between them."""

__version__ = "0.1.0"
