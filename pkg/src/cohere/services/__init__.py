"""Reasoning engine: parsing, constituents, tables, coherence, bounds and entailment."""
