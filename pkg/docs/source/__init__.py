"""
Documentation for `quiverlab`.
"""
