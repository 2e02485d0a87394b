"""Eigenangle statistics of permutation representations under the Ewens measure."""

__version__ = "0.1.0"
