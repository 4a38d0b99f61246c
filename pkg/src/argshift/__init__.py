"""Exact argument-shift families of Lie algebras and their verification."""

__version__ = "0.1.0"
