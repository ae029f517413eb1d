"""Ideal presentations and their graded certificates."""
