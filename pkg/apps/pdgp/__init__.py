"""Partial-dual genus polynomial toolkit."""

__version__ = "0.1.0"
