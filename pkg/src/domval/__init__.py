"""Exact minimum dominating set enumeration and domination values."""
