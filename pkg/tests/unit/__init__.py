"""Unit tests for nearring."""
