"""Exact rational toolkit for based Banach spaces with polyhedral norms."""

__version__ = "0.1.0"
