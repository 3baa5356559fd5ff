"""Pydantic schemas for problem files."""
