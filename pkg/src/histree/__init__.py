"""Homeomorphically irreducible spanning trees."""
