"""Problem-file loading and rational helpers."""
