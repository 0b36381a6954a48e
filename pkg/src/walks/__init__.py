"""Exact enumeration and generating-function checks for quadrant walks."""

__version__ = "0.1.0"
