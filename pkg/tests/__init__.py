"""Tests for nearring."""
