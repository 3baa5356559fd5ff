"""Tests for cohere."""
