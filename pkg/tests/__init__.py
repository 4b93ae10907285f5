"""Tests for Community-Veil."""
