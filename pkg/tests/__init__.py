"""
Tests for jcolour.
"""
