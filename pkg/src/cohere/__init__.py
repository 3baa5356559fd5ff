"""Cohere - coherence-based reasoning over conditional events."""

__version__ = "0.1.0"
