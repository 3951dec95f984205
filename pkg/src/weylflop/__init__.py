"""Exact root-theoretic machinery for Artin group actions on flop families."""

__version__ = "0.1.0"
