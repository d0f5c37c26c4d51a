"""Numerical verification toolkit for the Silverman class and related starlike classes."""

__version__ = "0.1.0"
