"""
Test suite for pdrm
"""
