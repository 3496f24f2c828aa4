"""
PeakCell Examples
"""
