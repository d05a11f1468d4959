"""Application circuit generators."""
