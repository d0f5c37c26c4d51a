"""Numerical and I/O helpers shared by the services and commands."""
