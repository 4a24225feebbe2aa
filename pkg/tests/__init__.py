"""Tests for hetcat."""
