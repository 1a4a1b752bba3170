"""
Data models of cycleops.
"""
