"""Geometry engine for (T,L)-type rotational surfaces in Lorentz-Minkowski 3-space."""

__version__ = "0.1.0"
