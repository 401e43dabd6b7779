"""Patch counting entropy for Delone sets along window sequences."""

__version__ = "0.1.0"
