"""Voting-power analysis of yes-no voting systems with Boolean quotients."""

__version__ = "0.1.0"
