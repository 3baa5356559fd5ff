"""Command-line interface for cohere."""
