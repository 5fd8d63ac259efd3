"""Elliptic curves of given modular invariant and large rank over Q(t)."""

__version__ = "0.1.0"
