"""Hypergeometric motives and the modular method for x^5 + y^p + z^3 = 0."""

__version__ = "0.1.0"
