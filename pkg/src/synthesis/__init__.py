"""Controlled-U synthesis templates."""
