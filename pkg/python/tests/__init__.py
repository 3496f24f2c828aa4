"""
PeakCell Test Suite
"""
