"""Lattices from nested code families, exact shortest-vector certification,
and evaluators for the associated kissing-number bounds."""

__version__ = "0.1.0"
