"""
gwpower - power structures on Grothendieck-Witt rings
"""

__version__ = "1.0.0"
