"""Exact verification toolkit for Betti and de Rham coproduct factorizations."""
