"""Exact construction and verification of Jordanian quantum algebras."""

__version__ = "0.1.0"
