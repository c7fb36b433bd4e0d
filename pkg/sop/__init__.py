"""
Small Overlap Toolkit

Decision procedures for small overlap monoid presentations: C(n) conditions,
the word problem, isomorphism, cancellativity and generic-case experiments.
"""

__version__ = "0.1.0"
