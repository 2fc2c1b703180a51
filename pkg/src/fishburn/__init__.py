"""Ascent sequences, (2+2)-free posets, staircase matrices, restricted
permutations and Stoimenow matchings, with exact generating functions."""

__version__ = "0.1.0"
