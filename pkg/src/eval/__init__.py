"""Depth tables, charts and reports."""
