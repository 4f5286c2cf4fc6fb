"""Exact motivic decompositions of semismall maps attached to surfaces."""

__version__ = "0.1.0"
