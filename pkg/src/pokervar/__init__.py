"""Exact variance analysis for run-it-n-times hold'em and n-play video poker."""

__version__ = "0.1.0"
