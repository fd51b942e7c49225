"""Defective (d1, d2)-coloring of embedded planar graphs."""

__version__ = "0.1.0"
