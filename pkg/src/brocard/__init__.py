"""Exact triangle geometry around the first Brocard triangle.

Constructs the symmedian, Brocard, Tarry and Steiner points of a rational
triangle, checks the classical relations between them with zero tolerance,
and searches for triangle pairs that are orthological or homological under
several vertex pairings.
"""

__version__ = "0.1.0"
