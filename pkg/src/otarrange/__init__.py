"""Exact invariants of hyperplane arrangements and their Orlik-Terao algebras."""
__version__ = "0.1.0"
