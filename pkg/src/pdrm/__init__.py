"""
pdrm - permutation decoding of first-order Reed-Muller codes
"""

__version__ = "0.1.0"
__license__ = "MIT"
