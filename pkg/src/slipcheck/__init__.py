"""
slipcheck - multigraded ideals of points on toric varieties and necessary
criteria for membership in the Slip component
"""
__version__ = "0.1.0"
