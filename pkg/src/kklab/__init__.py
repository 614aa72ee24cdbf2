"""Exact algebra toolkit for simplicial power rings, cone-ring matrices,
Toeplitz normal forms and polynomial homotopies of rings."""

__version__ = "0.1.0"
