"""Gate-level decompositions."""
