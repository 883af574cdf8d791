"""
nearring - exact arithmetic and membership checks for the composition nearring of integer polynomials.
"""

__version__ = "0.1.0"
