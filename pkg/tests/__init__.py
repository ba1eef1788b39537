"""
Tests for `quiverlab`.
"""
